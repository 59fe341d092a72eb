use super::{min_opt, Analyzer};
use crate::cayley_graph::is_connected;
use crate::error::Result;
use crate::set::GSubset;

/// One implication checked on one instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct CorollaryCheck {
    /// The hypothesis holds.
    pub applicable: bool,
    /// The conclusion holds; `true` whenever the hypothesis fails.
    pub holds: bool,
}

impl CorollaryCheck {
    fn new(applicable: bool, conclusion: impl FnOnce() -> bool) -> Self {
        CorollaryCheck {
            applicable,
            holds: !applicable || conclusion(),
        }
    }

    pub fn failed(self) -> bool {
        !self.holds
    }
}

/// Consequences of the closed form, each evaluated against a given `κ`
/// (normally one computed independently of the formula). None applies to
/// `S = G`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Corollaries {
    /// `κ < |S|` implies `κ = min { |S+H| - |H| : S + H ≠ G }`.
    pub simple_below_degree: CorollaryCheck,
    /// Connected and (`|S| <= |G|/2` or no `Z4 ⊕ Z2` subgroup) implies
    /// `κ = min { η, |S| }`.
    pub eta_or_degree: CorollaryCheck,
    /// Connected implies `2κ >= |S|`.
    pub half_degree: CorollaryCheck,
    /// Connected implies `κ >= min { |S| - 1, p }` for the least prime `p`
    /// dividing `|G|`.
    pub smallest_prime: CorollaryCheck,
    /// For `S ≠ G`: `κ < |S|` iff some `K ∈ ℋ ∪ ℒ*` has `|S+K| <= |S| + |K| - 1`.
    pub below_degree_iff: CorollaryCheck,
    /// `S ∩ 2∗G ≠ ∅` implies `κ = min { |S+H| - |H| : S + H ≠ G }`.
    pub doubles_met: CorollaryCheck,
}

impl Corollaries {
    pub fn evaluate(analyzer: &Analyzer, s: &GSubset, kappa: usize) -> Result<Self> {
        analyzer.check_subset(s)?;
        let group = analyzer.group();
        let n = group.order();
        let size = s.len();
        let p = analyzer.profile(s);
        let h = analyzer.h_family_profiled(&p);
        let ls = analyzer.l_family_profiled(s, &p, true);
        let eta = h.first().map(|e| e.score);
        let simple = analyzer.kappa_simple(s)?;
        let connected = is_connected(group, s);
        let proper = size < n;
        let matches_simple = || simple == Some(kappa as isize);

        Ok(Corollaries {
            simple_below_degree: CorollaryCheck::new(proper && kappa < size, matches_simple),
            eta_or_degree: CorollaryCheck::new(
                proper && connected && (2 * size <= n || !analyzer.has_z4_z2_subgroup()),
                || min_opt(eta, Some(size)) == Some(kappa),
            ),
            half_degree: CorollaryCheck::new(proper && connected, || 2 * kappa >= size),
            smallest_prime: CorollaryCheck::new(proper && connected && n > 1, || {
                let q = group.smallest_prime().expect("non-trivial group");
                kappa >= size.saturating_sub(1).min(q)
            }),
            below_degree_iff: CorollaryCheck::new(proper, || {
                let witnessed = h.iter().chain(ls.iter()).any(|e| e.score < size);
                (kappa < size) == witnessed
            }),
            doubles_met: CorollaryCheck::new(
                proper && s.intersects(analyzer.doubles().members()),
                matches_simple,
            ),
        })
    }

    pub fn all(&self) -> [(&'static str, CorollaryCheck); 6] {
        [
            ("simple-below-degree", self.simple_below_degree),
            ("eta-or-degree", self.eta_or_degree),
            ("half-degree", self.half_degree),
            ("smallest-prime", self.smallest_prime),
            ("below-degree-iff", self.below_degree_iff),
            ("doubles-met", self.doubles_met),
        ]
    }

    pub fn all_hold(&self) -> bool {
        self.all().iter().all(|(_, c)| c.holds)
    }
}
