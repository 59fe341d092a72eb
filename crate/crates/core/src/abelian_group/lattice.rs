use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use fixedbitset::FixedBitSet;

use super::subgroup::{subgroup_generated, CosetSpace, Subgroup};
use super::GroupSpec;
use crate::error::{Error, Result};

/// Default bound on `|G|` for subgroup lattice enumeration.
pub const DEFAULT_LATTICE_LIMIT: usize = 512;

/// Every subgroup of `group` exactly once, sorted by order and then by member list.
pub fn all_subgroups(group: &GroupSpec) -> Result<Vec<Subgroup>> {
    all_subgroups_bounded(group, DEFAULT_LATTICE_LIMIT)
}

pub fn all_subgroups_bounded(group: &GroupSpec, max_order: usize) -> Result<Vec<Subgroup>> {
    if group.order() > max_order {
        return Err(Error::ResourceLimit {
            what: "group order for subgroup enumeration",
            size: group.order(),
            limit: max_order,
        });
    }

    let mut seen: BTreeMap<FixedBitSet, ()> = BTreeMap::new();
    let mut cyclic = Vec::new();
    for g in group.elements() {
        let c = subgroup_generated(group, [g]);
        if seen.insert(c.members().bits().clone(), ()).is_none() {
            cyclic.push(c);
        }
    }

    // Every subgroup is a join of cyclic subgroups, so closing under joins with
    // cyclic subgroups reaches all of them.
    let mut found = cyclic.clone();
    let mut next = 0;
    while next < found.len() {
        let h = found[next].clone();
        next += 1;
        for c in &cyclic {
            if c.is_subgroup_of(&h) {
                continue;
            }
            let j = h.join(group, c);
            if seen.insert(j.members().bits().clone(), ()).is_none() {
                found.push(j);
            }
        }
    }
    found.sort();
    Ok(found)
}

/// The subgroup lattice of a group together with the coset decomposition of
/// every subgroup, computed once and shared by all queries on that group.
#[derive(Clone, Debug)]
pub struct SubgroupLattice {
    group: GroupSpec,
    subgroups: Vec<Subgroup>,
    cosets: Vec<CosetSpace>,
    index: BTreeMap<FixedBitSet, usize>,
    /// `above[i]`: indices `j` with `subgroups[i] ≤ subgroups[j]`.
    above: Vec<Vec<usize>>,
}

impl SubgroupLattice {
    pub fn new(group: &GroupSpec) -> Result<Self> {
        Self::with_limit(group, DEFAULT_LATTICE_LIMIT)
    }

    pub fn with_limit(group: &GroupSpec, max_order: usize) -> Result<Self> {
        let subgroups = all_subgroups_bounded(group, max_order)?;
        let cosets = subgroups.iter().map(|h| CosetSpace::new(group, h)).collect();
        let index = subgroups
            .iter()
            .enumerate()
            .map(|(i, h)| (h.members().bits().clone(), i))
            .collect();
        let above = subgroups
            .iter()
            .map(|h| {
                (0..subgroups.len())
                    .filter(|&j| h.is_subgroup_of(&subgroups[j]))
                    .collect()
            })
            .collect();
        Ok(SubgroupLattice {
            group: group.clone(),
            subgroups,
            cosets,
            index,
            above,
        })
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn subgroup(&self, i: usize) -> &Subgroup {
        &self.subgroups[i]
    }

    pub fn cosets(&self, i: usize) -> &CosetSpace {
        &self.cosets[i]
    }

    pub fn index_of(&self, h: &Subgroup) -> Option<usize> {
        self.index.get(h.members().bits()).copied()
    }

    /// Indices of the subgroups containing subgroup `i`, ascending.
    pub fn above(&self, i: usize) -> &[usize] {
        &self.above[i]
    }

    /// Index of the trivial subgroup.
    pub fn trivial(&self) -> usize {
        0
    }

    /// Index of the whole group.
    pub fn whole(&self) -> usize {
        self.subgroups.len() - 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian_group::make_group;
    use crate::set::GSubset;

    // Independent count: every subset containing 0 that is closed under addition.
    fn brute_force_count(group: &GroupSpec) -> usize {
        let n = group.order();
        (0u64..1 << n)
            .filter(|m| m & 1 == 1)
            .filter(|&m| {
                let s = GSubset::from_mask(n, m);
                let closed = s.iter().all(|a| s.iter().all(|b| s.contains(group.add(a, b))));
                closed
            })
            .count()
    }

    #[test]
    fn subgroup_counts() {
        assert_eq!(all_subgroups(&make_group(&[2, 2]).unwrap()).unwrap().len(), 5);
        assert_eq!(all_subgroups(&make_group(&[4, 2]).unwrap()).unwrap().len(), 8);
        assert_eq!(all_subgroups(&make_group(&[5]).unwrap()).unwrap().len(), 2);
        assert_eq!(all_subgroups(&GroupSpec::trivial()).unwrap().len(), 1);
    }

    #[test]
    fn counts_match_brute_force_up_to_16() {
        for f in [
            &[2][..],
            &[3],
            &[4],
            &[2, 2],
            &[6],
            &[8],
            &[4, 2],
            &[2, 2, 2],
            &[9],
            &[3, 3],
            &[12],
            &[2, 6],
            &[16],
            &[8, 2],
            &[4, 4],
            &[4, 2, 2],
            &[2, 2, 2, 2],
        ] {
            let g = make_group(f).unwrap();
            assert_eq!(
                all_subgroups(&g).unwrap().len(),
                brute_force_count(&g),
                "factors {f:?}"
            );
        }
    }

    #[test]
    fn sorted_and_lagrange() {
        let g = make_group(&[4, 4]).unwrap();
        let subs = all_subgroups(&g).unwrap();
        assert!(subs.windows(2).all(|w| w[0] < w[1]));
        for h in &subs {
            assert_eq!(g.order() % h.order(), 0);
            for k in &subs {
                if h.is_subgroup_of(k) {
                    assert_eq!(k.order() % h.order(), 0);
                }
            }
        }
    }

    #[test]
    fn order_bound() {
        let g = make_group(&[3, 3]).unwrap();
        assert!(matches!(
            all_subgroups_bounded(&g, 8),
            Err(Error::ResourceLimit { size: 9, limit: 8, .. })
        ));
    }

    #[test]
    fn lattice_ends() {
        let lat = SubgroupLattice::new(&make_group(&[6, 2]).unwrap()).unwrap();
        assert!(lat.subgroup(lat.trivial()).is_trivial());
        assert_eq!(lat.subgroup(lat.whole()).order(), 12);
        assert_eq!(lat.above(lat.whole()), &[lat.whole()]);
        assert_eq!(lat.above(lat.trivial()).len(), lat.len());
        assert_eq!(lat.index_of(lat.subgroup(3)), Some(3));
    }
}
