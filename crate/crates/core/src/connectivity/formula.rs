use alloc::format;
use alloc::vec::Vec;

use super::{min_opt, Analyzer, Branch, FamilyEntry, KappaReport};
use crate::abelian_group::{double_image, CosetSpace, Element, GroupSpec, Subgroup};
use crate::cayley_graph::{is_complete, AdditionCayleyGraph, Fragment};
use crate::error::{Error, Result};
use crate::set::GSubset;
use crate::sumsets::sumset;

impl Analyzer {
    /// `κ` by the closed form, with the branch that produced it, the family
    /// minima and a fragment realizing the cut.
    ///
    /// Fails with [`Error::TheoremViolation`] if the branch selection and the
    /// plain minimum `min { η, λ, |S| }` disagree, if more than one `ℒ*` member
    /// scores below `|S|`, or if the constructed fragment does not have the
    /// predicted boundary.
    pub fn kappa_formula(&self, s: &GSubset) -> Result<KappaReport> {
        self.check_subset(s)?;
        let group = self.group();
        let p = self.profile(s);
        let h = self.h_family_profiled(&p);
        let l = self.l_family_profiled(s, &p, false);
        let ls = self.l_family_profiled(s, &p, true);
        let eta = h.first().map(|e| e.score);
        let lambda = l.first().map(|e| e.score);
        let lambda_star = ls.first().map(|e| e.score);
        let size = s.len();

        if is_complete(group, s) {
            return Ok(KappaReport {
                kappa: group.order().saturating_sub(1),
                branch: Branch::Complete,
                eta,
                lambda,
                lambda_star,
                witness: None,
                fragment: None,
            });
        }

        let qualifying: Vec<&FamilyEntry> = ls.iter().filter(|e| e.score < size).collect();
        if qualifying.len() > 1 {
            return Err(Error::TheoremViolation(format!(
                "{} members of the strict two-coset family score below |S| = {size}",
                qualifying.len()
            )));
        }

        let (kappa, branch, witness, vertices) = if let Some(&entry) = qualifying.first() {
            if eta.is_some_and(|e| e < size) {
                return Err(Error::TheoremViolation(format!(
                    "eta = {eta:?} below |S| = {size} alongside a qualifying strict two-coset member"
                )));
            }
            if lambda != Some(entry.score) {
                return Err(Error::TheoremViolation(format!(
                    "lambda = {lambda:?} differs from the qualifying score {}",
                    entry.score
                )));
            }
            let w = entry.witness.as_ref().expect("family members carry witnesses");
            let a = two_coset_vertices(group, s, &entry.subgroup, &w.g0_subgroup, w.g0)?;
            (entry.score, Branch::LambdaStar, Some(entry.clone()), a)
        } else if let Some(first) = h.first().filter(|e| e.score <= size) {
            let a = coset_vertices(group, s, &first.subgroup, self.doubles())?;
            (first.score, Branch::Eta, Some(first.clone()), a)
        } else {
            (size, Branch::Degree, None, degree_vertices(group, s)?)
        };

        let plain = min_opt(min_opt(eta, lambda), Some(size)).expect("|S| is always present");
        if plain != kappa {
            return Err(Error::TheoremViolation(format!(
                "branch {} gives {kappa}, min(eta, lambda, |S|) = {plain}",
                branch.as_str()
            )));
        }
        if let (Some(a), Some(b)) = (lambda, lambda_star) {
            if a > b {
                return Err(Error::TheoremViolation(format!("lambda = {a} exceeds lambda* = {b}")));
            }
        }
        let fragment = checked_fragment(group, s, vertices, kappa)?;
        Ok(KappaReport {
            kappa,
            branch,
            eta,
            lambda,
            lambda_star,
            witness,
            fragment: Some(fragment),
        })
    }
}

/// `κ` of the addition Cayley graph of `S` by the closed form.
pub fn kappa_formula(group: &GroupSpec, s: &GSubset) -> Result<KappaReport> {
    Analyzer::new(group)?.kappa_formula(s)
}

fn checked_fragment(group: &GroupSpec, s: &GSubset, vertices: GSubset, kappa: usize) -> Result<Fragment> {
    let f = Fragment::of(&AdditionCayleyGraph::new(group, s), vertices);
    if f.is_fragment(kappa) {
        Ok(f)
    } else {
        Err(Error::TheoremViolation(format!(
            "constructed fragment {:?} has boundary {} and outside {}, expected boundary {kappa}",
            f.vertices,
            f.boundary.len(),
            f.outside.len()
        )))
    }
}

fn coset_vertices(group: &GroupSpec, s: &GSubset, h: &Subgroup, doubles: &Subgroup) -> Result<GSubset> {
    let sh = sumset(group, s, h.members());
    if sh.is_full() || !sumset(group, s, doubles.members()).intersects(h.members()) {
        return Err(Error::Precondition("H is not in the coset family of S"));
    }
    // 2g ∈ S + H puts g + H inside its own neighborhood S - g - H.
    let g = group
        .elements()
        .find(|&g| sh.contains(group.double(g)))
        .expect("(S + 2∗G) ∩ H is non-empty");
    Ok(group.translate(h.members(), g))
}

/// The coset `g + H` with the smallest `g` satisfying `2g ∈ S + H`. For
/// `H ∈ ℋ_G(S)` its boundary is `(S + H) \ (g + H)`, of size `|S+H| - |H|`.
pub fn coset_fragment(group: &GroupSpec, s: &GSubset, h: &Subgroup) -> Result<Fragment> {
    let a = coset_vertices(group, s, h, &double_image(group))?;
    Ok(Fragment::of(&AdditionCayleyGraph::new(group, s), a))
}

fn two_coset_vertices(
    group: &GroupSpec,
    s: &GSubset,
    l: &Subgroup,
    g0_subgroup: &Subgroup,
    g0: Element,
) -> Result<GSubset> {
    if !l.is_subgroup_of(g0_subgroup) || !g0_subgroup.contains(g0) {
        return Err(Error::InvalidChain("expected L <= G0 and g0 in G0"));
    }
    let index = g0_subgroup.order() / l.order();
    if !index.is_multiple_of(2) || index <= 2 {
        return Err(Error::Precondition("|G0/L| must be even and larger than 2"));
    }
    let coset = group.translate(l.members(), g0);
    if CosetSpace::new(group, l).saturate(s) != g0_subgroup.members().complement().union(&coset) {
        return Err(Error::Precondition("S + L is not (G \\ G0) ∪ (g0 + L)"));
    }
    // g + L has order 2 in G0/L, so both cosets of A lie in N(A) = (G \ G0) ∪ A.
    let g = g0_subgroup
        .elements()
        .find(|&g| !l.contains(g) && l.contains(group.double(g)))
        .expect("G0/L has even order");
    let mut a = group.translate(l.members(), g);
    a.union_with(&group.translate(l.members(), group.add(g, g0)));
    Ok(a)
}

/// `A = (g + L) ∪ (g + g0 + L)` for the smallest `g ∈ G0 \ L` with `2g ∈ L`.
/// Its boundary is `G \ G0`, of size `|S+L| - |L|`.
pub fn two_coset_fragment(
    group: &GroupSpec,
    s: &GSubset,
    l: &Subgroup,
    g0_subgroup: &Subgroup,
    g0: Element,
) -> Result<Fragment> {
    let a = two_coset_vertices(group, s, l, g0_subgroup, g0)?;
    Ok(Fragment::of(&AdditionCayleyGraph::new(group, s), a))
}

fn degree_vertices(group: &GroupSpec, s: &GSubset) -> Result<GSubset> {
    let g = group
        .elements()
        .find(|&g| !s.contains(group.double(g)))
        .ok_or(Error::Precondition("every vertex carries a loop"))?;
    Ok(GSubset::from_elements(group.order(), [g]))
}

/// The singleton `{g}` for the smallest loop-free `g`; its boundary is `S - g`.
pub fn degree_fragment(group: &GroupSpec, s: &GSubset) -> Result<Fragment> {
    let a = degree_vertices(group, s)?;
    Ok(Fragment::of(&AdditionCayleyGraph::new(group, s), a))
}
