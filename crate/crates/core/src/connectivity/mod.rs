//! Closed-form vertex connectivity of addition Cayley graphs.
//!
//! For a proper subset `S ⊂ G`,
//!
//! ```text
//! κ = min { η(S), λ(S), |S| }
//! ```
//!
//! where `η` minimises `|S+H| - |H|` over the subgroups `H` with
//! `(S + 2∗G) ∩ H ≠ ∅` and `S + H ≠ G`, and `λ` minimises the same score over
//! the subgroups `L` admitting `L ≤ G0 ≤ G`, `g0 ∈ G0` with `|G0/L|` even and
//! above 2 and `S + L = (G \ G0) ∪ (g0 + L)`. The minimum is attained by `η` or
//! `|S|` except when a (necessarily unique) member of the stricter family `ℒ*`
//! scores at most `|S| - 1`. [`Analyzer::kappa_formula`] follows that branch
//! selection and cross-checks it against the plain three-way minimum.
//!
//! Empty minima are `None` and compare as `+∞`.

mod corollaries;
mod families;
mod formula;

use crate::abelian_group::{Element, Subgroup};
use crate::cayley_graph::Fragment;

pub use corollaries::{Corollaries, CorollaryCheck};
pub use families::Analyzer;
pub use formula::{coset_fragment, degree_fragment, kappa_formula, two_coset_fragment};

/// Which family a [`FamilyEntry`] was found in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FamilyTag {
    /// `ℋ_G(S)`: coset fragments.
    H,
    /// `ℒ_G(S)`: two-coset fragments.
    L,
    /// `ℒ*_G(S)`.
    LStar,
}

/// The `(G0, g0)` pair certifying membership in `ℒ` or `ℒ*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LWitness {
    pub g0_subgroup: Subgroup,
    pub g0: Element,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyEntry {
    pub subgroup: Subgroup,
    /// `|S + K| - |K|`.
    pub score: usize,
    pub family: FamilyTag,
    pub witness: Option<LWitness>,
}

/// The term of the formula that produced `κ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Branch {
    Complete,
    Degree,
    Eta,
    LambdaStar,
}

impl Branch {
    pub fn as_str(self) -> &'static str {
        match self {
            Branch::Complete => "complete",
            Branch::Degree => "degree",
            Branch::Eta => "eta",
            Branch::LambdaStar => "lambda-star",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KappaReport {
    pub kappa: usize,
    pub branch: Branch,
    pub eta: Option<usize>,
    pub lambda: Option<usize>,
    pub lambda_star: Option<usize>,
    /// The `ℋ` minimizer for the eta branch, the qualifying `ℒ*` subgroup for
    /// the lambda-star branch.
    pub witness: Option<FamilyEntry>,
    /// A fragment realizing a minimum cut; absent for complete graphs.
    pub fragment: Option<Fragment>,
}

/// `min` with `None` read as `+∞`.
pub(crate) fn min_opt(a: Option<usize>, b: Option<usize>) -> Option<usize> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}
