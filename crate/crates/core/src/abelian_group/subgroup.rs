use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use super::{lcm, Element, GroupSpec};
use crate::error::{Error, Result};
use crate::set::GSubset;

/// An explicit subgroup: a member set that contains `0` and is closed under
/// addition.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subgroup {
    members: GSubset,
}

impl Subgroup {
    /// Validates `members` as a subgroup of `group`.
    pub fn from_members(group: &GroupSpec, members: GSubset) -> Result<Self> {
        if members.universe() != group.order() {
            return Err(Error::InvalidSubgroup("member set belongs to a different group"));
        }
        if !members.contains(group.zero()) {
            return Err(Error::InvalidSubgroup("does not contain 0"));
        }
        for a in members.iter() {
            for b in members.iter() {
                if !members.contains(group.add(a, b)) {
                    return Err(Error::InvalidSubgroup("not closed under addition"));
                }
            }
        }
        Ok(Subgroup { members })
    }

    pub(crate) fn from_members_unchecked(members: GSubset) -> Self {
        Subgroup { members }
    }

    pub fn trivial(group: &GroupSpec) -> Self {
        Subgroup {
            members: GSubset::from_indices(group.order(), [0]),
        }
    }

    pub fn whole(group: &GroupSpec) -> Self {
        Subgroup {
            members: group.full_set(),
        }
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &GSubset {
        &self.members
    }

    pub fn contains(&self, e: Element) -> bool {
        self.members.contains(e)
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        self.members.iter()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    /// `H + K`, which is the subgroup generated by `H ∪ K`.
    pub fn join(&self, group: &GroupSpec, other: &Subgroup) -> Subgroup {
        Subgroup {
            members: crate::sumsets::sumset(group, &self.members, &other.members),
        }
    }

    pub fn meet(&self, other: &Subgroup) -> Subgroup {
        Subgroup {
            members: self.members.intersection(&other.members),
        }
    }

    /// Least `m >= 1` with `m * g = 0` for every member.
    pub fn exponent(&self, group: &GroupSpec) -> usize {
        self.elements().map(|g| group.element_order(g)).fold(1, lcm)
    }
}

/// Subgroups are ordered by order, then by their ascending member lists.
impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order()
            .cmp(&other.order())
            .then_with(|| self.members.lex_cmp(&other.members))
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup{:?}", self.members)
    }
}

fn check_same_group(group: &GroupSpec, h: &Subgroup) -> Result<()> {
    if h.members.universe() == group.order() {
        Ok(())
    } else {
        Err(Error::InvalidSubgroup("subgroup belongs to a different group"))
    }
}

/// The smallest subgroup containing `gens`.
pub fn subgroup_generated<I: IntoIterator<Item = Element>>(group: &GroupSpec, gens: I) -> Subgroup {
    let gens: Vec<Element> = gens.into_iter().collect();
    let mut members = GSubset::from_indices(group.order(), [0]);
    let mut frontier = alloc::vec![group.zero()];
    while let Some(h) = frontier.pop() {
        for &g in &gens {
            let x = group.add(h, g);
            if !members.contains(x) {
                members.insert(x);
                frontier.push(x);
            }
        }
    }
    Subgroup { members }
}

/// `2∗G = { 2g : g ∈ G }`.
pub fn double_image(group: &GroupSpec) -> Subgroup {
    Subgroup {
        members: GSubset::from_elements(group.order(), group.elements().map(|g| group.double(g))),
    }
}

/// Least `k >= 1` with `k * g ∈ H`: the order of `g + H` in `G/H`.
pub fn coset_order(group: &GroupSpec, h: &Subgroup, g: Element) -> usize {
    let mut x = g;
    let mut k = 1;
    while !h.contains(x) {
        x = group.add(x, g);
        k += 1;
    }
    k
}

/// `exp(G/H)`: least `m >= 1` with `m * g ∈ H` for every `g ∈ G`.
pub fn exponent_of_quotient(group: &GroupSpec, h: &Subgroup) -> Result<usize> {
    check_same_group(group, h)?;
    Ok(group.elements().map(|g| coset_order(group, h, g)).fold(1, lcm))
}

/// `exp(K/H)` for `H ≤ K`.
pub fn exponent_of_section(group: &GroupSpec, k: &Subgroup, h: &Subgroup) -> usize {
    k.elements().map(|g| coset_order(group, h, g)).fold(1, lcm)
}

/// Structural facts about a chain `L ≤ G0 ≤ G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientPredicates {
    /// `G0/L` is a cyclic 2-group.
    pub cyclic_2group: bool,
    /// Smallest-index `g ∈ G0` whose coset generates `G0/L`, when `cyclic_2group`.
    pub witness_generator: Option<Element>,
    /// `G/G0` is an elementary abelian 2-group (possibly trivial).
    pub elementary_2group_above: bool,
}

pub fn quotient_predicates(
    group: &GroupSpec,
    l: &Subgroup,
    g0: &Subgroup,
) -> Result<QuotientPredicates> {
    check_same_group(group, l)?;
    check_same_group(group, g0)?;
    if !l.is_subgroup_of(g0) {
        return Err(Error::InvalidChain("L is not contained in G0"));
    }
    let index = g0.order() / l.order();
    let witness_generator = if index.is_power_of_two() {
        g0.elements().find(|&g| coset_order(group, l, g) == index)
    } else {
        None
    };
    let elementary_2group_above = group.elements().all(|g| g0.contains(group.double(g)));
    Ok(QuotientPredicates {
        cyclic_2group: witness_generator.is_some(),
        witness_generator,
        elementary_2group_above,
    })
}

/// The cosets of a subgroup `H`, each labelled by the rank of its smallest
/// element. Quotient computations run on these labels; `G/H` is never built
/// as a separate group.
#[derive(Clone, Debug)]
pub struct CosetSpace {
    base: GroupSpec,
    modulus: Subgroup,
    labels: Vec<u32>,
    representatives: Vec<Element>,
}

impl CosetSpace {
    pub fn new(group: &GroupSpec, h: &Subgroup) -> Self {
        let n = group.order();
        let mut labels = alloc::vec![u32::MAX; n];
        let mut representatives = Vec::with_capacity(n / h.order().max(1));
        for g in group.elements() {
            if labels[g.index()] != u32::MAX {
                continue;
            }
            let id = representatives.len() as u32;
            representatives.push(g);
            for x in h.elements() {
                labels[group.add(g, x).index()] = id;
            }
        }
        CosetSpace {
            base: group.clone(),
            modulus: h.clone(),
            labels,
            representatives,
        }
    }

    pub fn base(&self) -> &GroupSpec {
        &self.base
    }

    pub fn modulus(&self) -> &Subgroup {
        &self.modulus
    }

    /// Number of cosets, `|G/H|`.
    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }

    #[inline]
    pub fn label(&self, g: Element) -> usize {
        self.labels[g.index()] as usize
    }

    pub fn representatives(&self) -> &[Element] {
        &self.representatives
    }

    pub fn representative(&self, label: usize) -> Element {
        self.representatives[label]
    }

    /// Members of the coset with the given label.
    pub fn coset(&self, label: usize) -> GSubset {
        self.base.translate(self.modulus.members(), self.representatives[label])
    }

    /// Label of the sum of two cosets.
    pub fn add_labels(&self, a: usize, b: usize) -> usize {
        self.label(self.base.add(self.representatives[a], self.representatives[b]))
    }

    /// `φ_H(S)`: the labels of the cosets meeting `S`, as a set over `[0, |G/H|)`.
    pub fn project(&self, s: &GSubset) -> GSubset {
        GSubset::from_indices(self.len(), s.iter().map(|x| self.label(x)))
    }

    /// Number of cosets meeting `S`.
    pub fn hits(&self, s: &GSubset) -> usize {
        self.project(s).len()
    }

    /// `S + H`.
    pub fn saturate(&self, s: &GSubset) -> GSubset {
        let hit = self.project(s);
        GSubset::from_indices(
            self.labels.len(),
            (0..self.labels.len()).filter(|&i| hit.contains_index(self.labels[i] as usize)),
        )
    }

    /// Preimage of a set of labels.
    pub fn lift(&self, labels: &GSubset) -> GSubset {
        GSubset::from_indices(
            self.labels.len(),
            (0..self.labels.len()).filter(|&i| labels.contains_index(self.labels[i] as usize)),
        )
    }
}
