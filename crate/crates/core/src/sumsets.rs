//! Sumsets, coset saturation, periods and representation counts.

use crate::abelian_group::{CosetSpace, Element, GroupSpec, Subgroup};
use crate::error::{Error, Result};
use crate::set::GSubset;

/// `A + B`. Empty if either side is empty.
pub fn sumset(group: &GroupSpec, a: &GSubset, b: &GSubset) -> GSubset {
    let mut out = group.empty_set();
    for x in a.iter() {
        for y in b.iter() {
            out.insert(group.add(x, y));
        }
    }
    out
}

/// `A - B`.
pub fn diffset(group: &GroupSpec, a: &GSubset, b: &GSubset) -> GSubset {
    let mut out = group.empty_set();
    for x in a.iter() {
        for y in b.iter() {
            out.insert(group.sub(x, y));
        }
    }
    out
}

/// `S + H`, the union of the `H`-cosets that meet `S`.
pub fn saturate(group: &GroupSpec, s: &GSubset, h: &Subgroup) -> GSubset {
    CosetSpace::new(group, h).saturate(s)
}

/// `π(S) = { g : S + g = S }`. Equals `G` for `S = ∅` and `S = G`.
pub fn period(group: &GroupSpec, s: &GSubset) -> Subgroup {
    let members = GSubset::from_elements(
        group.order(),
        group
            .elements()
            .filter(|&g| s.iter().all(|x| s.contains(group.add(x, g)))),
    );
    Subgroup::from_members_unchecked(members)
}

/// `ν_c(A, B)`: the number of pairs `(a, b) ∈ A × B` with `a + b = c`.
pub fn rep_count(group: &GroupSpec, a: &GSubset, b: &GSubset, c: Element) -> usize {
    a.iter().filter(|&x| b.contains(group.sub(c, x))).count()
}

/// `μ(A, B)`: the least `ν_c(A, B)` over `c ∈ A + B`.
pub fn min_rep(group: &GroupSpec, a: &GSubset, b: &GSubset) -> Result<usize> {
    sumset(group, a, b)
        .iter()
        .map(|c| rep_count(group, a, b, c))
        .min()
        .ok_or(Error::InvalidInput("μ(A, B) needs A + B to be non-empty"))
}

/// Kneser's identity `|A+B| = |A+H| + |B+H| - |H|` with `H = π(A+B)`.
///
/// `None` when the hypothesis fails: `A` or `B` empty, or `|A+B| > |A|+|B|-1`.
pub fn kneser_identity(group: &GroupSpec, a: &GSubset, b: &GSubset) -> Option<bool> {
    if a.is_empty() || b.is_empty() {
        return None;
    }
    let ab = sumset(group, a, b);
    if ab.len() + 1 > a.len() + b.len() {
        return None;
    }
    let h = period(group, &ab);
    let cosets = CosetSpace::new(group, &h);
    let lhs = ab.len();
    let rhs = (cosets.hits(a) + cosets.hits(b)) * h.order() - h.order();
    Some(lhs == rhs)
}
