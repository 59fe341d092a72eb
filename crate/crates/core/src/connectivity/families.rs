use alloc::vec::Vec;

use super::{min_opt, FamilyEntry, FamilyTag, LWitness};
use crate::abelian_group::{
    coset_order, double_image, exponent_of_quotient, exponent_of_section, quotient_predicates, subgroup_generated, GroupSpec,
    Subgroup, SubgroupLattice,
};
use crate::error::{Error, Result};
use crate::set::GSubset;
use crate::sumsets::sumset;

/// A chain `L ≤ G0` with `|G0/L|` even and larger than 2.
#[derive(Clone, Debug)]
struct Chain {
    l: usize,
    g0: usize,
    /// The parts of (L1)–(L3) that do not involve `S` or `g0` hold.
    lstar: bool,
    /// Labels (in the coset space of `L`) of the cosets generating `G0/L`.
    generators: GSubset,
}

/// Per-`S` data shared by all family scans: which cosets of each subgroup `S` meets.
pub(crate) struct Profile {
    pub(crate) hits: Vec<GSubset>,
    pub(crate) plus_doubles: GSubset,
}

/// All subgroup-lattice data for one group, reused across subsets `S`.
#[derive(Clone, Debug)]
pub struct Analyzer {
    lattice: SubgroupLattice,
    doubles: Subgroup,
    chains: Vec<Chain>,
    /// `chain_range[l]`: the slice of `chains` with that `L`, in ascending `G0`.
    chain_range: Vec<(usize, usize)>,
    has_z4_z2: bool,
}

impl Analyzer {
    pub fn new(group: &GroupSpec) -> Result<Self> {
        Self::from_lattice(SubgroupLattice::new(group)?)
    }

    pub fn from_lattice(lattice: SubgroupLattice) -> Result<Self> {
        let group = lattice.group().clone();
        let doubles = double_image(&group);
        let mut chains = Vec::new();
        let mut chain_range = Vec::with_capacity(lattice.len());
        for l in 0..lattice.len() {
            let start = chains.len();
            let lsub = lattice.subgroup(l);
            let exp_g_l = exponent_of_quotient(&group, lsub)?;
            for &g0 in lattice.above(l) {
                let g0sub = lattice.subgroup(g0);
                let index = g0sub.order() / lsub.order();
                if !index.is_multiple_of(2) || index <= 2 {
                    continue;
                }
                let q = quotient_predicates(&group, lsub, g0sub)?;
                let lstar = q.cyclic_2group
                    && q.elementary_2group_above
                    && exp_g_l == exponent_of_section(&group, g0sub, lsub);
                let cosets = lattice.cosets(l);
                let generators = if lstar {
                    GSubset::from_indices(
                        cosets.len(),
                        g0sub
                            .elements()
                            .filter(|&g| coset_order(&group, lsub, g) == index)
                            .map(|g| cosets.label(g)),
                    )
                } else {
                    GSubset::empty(cosets.len())
                };
                chains.push(Chain {
                    l,
                    g0,
                    lstar,
                    generators,
                });
            }
            chain_range.push((start, chains.len()));
        }
        let has_z4_z2 = lattice
            .subgroups()
            .iter()
            .any(|k| k.order() == 8 && k.exponent(&group) == 4);
        Ok(Analyzer {
            lattice,
            doubles,
            chains,
            chain_range,
            has_z4_z2,
        })
    }

    pub fn group(&self) -> &GroupSpec {
        self.lattice.group()
    }

    pub fn lattice(&self) -> &SubgroupLattice {
        &self.lattice
    }

    /// `2∗G`.
    pub fn doubles(&self) -> &Subgroup {
        &self.doubles
    }

    /// Whether `G` has a subgroup isomorphic to `Z4 ⊕ Z2`.
    pub fn has_z4_z2_subgroup(&self) -> bool {
        self.has_z4_z2
    }

    pub(crate) fn check_subset(&self, s: &GSubset) -> Result<()> {
        if s.universe() == self.group().order() {
            Ok(())
        } else {
            Err(Error::InvalidInput("subset belongs to a group of a different order"))
        }
    }

    pub(crate) fn profile(&self, s: &GSubset) -> Profile {
        let hits = (0..self.lattice.len())
            .map(|i| self.lattice.cosets(i).project(s))
            .collect();
        Profile {
            hits,
            plus_doubles: sumset(self.group(), s, self.doubles.members()),
        }
    }

    /// `|S + K| - |K|` for lattice index `k`; `None` when `S` is empty.
    fn score(&self, p: &Profile, k: usize) -> Option<usize> {
        let hits = p.hits[k].len();
        (hits > 0).then(|| (hits - 1) * self.lattice.subgroup(k).order())
    }

    fn saturates(&self, p: &Profile, k: usize) -> bool {
        p.hits[k].len() == self.lattice.cosets(k).len()
    }

    fn entry(&self, k: usize, score: usize, family: FamilyTag, witness: Option<LWitness>) -> FamilyEntry {
        FamilyEntry {
            subgroup: self.lattice.subgroup(k).clone(),
            score,
            family,
            witness,
        }
    }

    pub(crate) fn h_family_profiled(&self, p: &Profile) -> Vec<FamilyEntry> {
        let mut out: Vec<(usize, FamilyEntry)> = (0..self.lattice.len())
            .filter(|&k| {
                p.plus_doubles.intersects(self.lattice.subgroup(k).members()) && !self.saturates(p, k)
            })
            .filter_map(|k| Some((k, self.entry(k, self.score(p, k)?, FamilyTag::H, None))))
            .collect();
        // Score first; lattice order already breaks ties by order, then members.
        out.sort_by_key(|(k, e)| (e.score, *k));
        out.into_iter().map(|(_, e)| e).collect()
    }

    /// `ℋ_G(S)` with scores, sorted by score, then order, then member list.
    pub fn h_family(&self, s: &GSubset) -> Result<Vec<FamilyEntry>> {
        self.check_subset(s)?;
        Ok(self.h_family_profiled(&self.profile(s)))
    }

    /// `η_G(S)`, `None` for an empty family.
    pub fn eta(&self, s: &GSubset) -> Result<Option<usize>> {
        Ok(self.h_family(s)?.first().map(|e| e.score))
    }

    /// First `(G0, g0)` meeting (i)–(ii), or (L1)–(L4) when `strict`, for `L`
    /// at lattice index `l`.
    fn l_witness(&self, s: &GSubset, p: &Profile, l: usize, strict: bool) -> Option<LWitness> {
        let lsub = self.lattice.subgroup(l);
        let cosets = self.lattice.cosets(l);
        let hit = &p.hits[l];
        if hit.is_empty() {
            return None;
        }
        // S + L = (G \ G0) ∪ (g0 + L) forces G \ (S + L) = G0 \ (g0 + L).
        let missing = cosets.len() - hit.len();
        let (start, end) = self.chain_range[l];
        for chain in &self.chains[start..end] {
            if strict && !chain.lstar {
                continue;
            }
            let g0sub = self.lattice.subgroup(chain.g0);
            if g0sub.order() / lsub.order() != missing + 1 {
                continue;
            }
            // Cosets missed by S + L must all lie in G0, and exactly one coset
            // of G0 is hit.
            let inside: Vec<usize> = hit
                .indices()
                .filter(|&c| g0sub.contains(cosets.representative(c)))
                .collect();
            if inside.len() != 1 {
                continue;
            }
            let c = inside[0];
            let outside_hits = hit.len() - 1;
            if outside_hits * lsub.order() != self.group().order() - g0sub.order() {
                continue;
            }
            if strict && !(chain.generators.contains_index(c) && self.coset_part_generates(s, lsub, cosets.coset(c))) {
                continue;
            }
            debug_assert_eq!(chain.l, l);
            return Some(LWitness {
                g0_subgroup: g0sub.clone(),
                g0: cosets.representative(c),
            });
        }
        None
    }

    /// `S ∩ (g0 + L)` is not inside a coset of a proper subgroup of `L`.
    fn coset_part_generates(&self, s: &GSubset, l: &Subgroup, coset: GSubset) -> bool {
        let group = self.group();
        let part = s.intersection(&coset);
        let Some(s0) = part.first() else { return false };
        let generated = subgroup_generated(group, part.iter().map(|x| group.sub(x, s0)));
        generated.order() == l.order()
    }

    pub(crate) fn l_family_profiled(&self, s: &GSubset, p: &Profile, strict: bool) -> Vec<FamilyEntry> {
        let tag = if strict { FamilyTag::LStar } else { FamilyTag::L };
        let mut out: Vec<(usize, FamilyEntry)> = (0..self.lattice.len())
            .filter_map(|l| {
                let w = self.l_witness(s, p, l, strict)?;
                let score = self.score(p, l)?;
                Some((l, self.entry(l, score, tag, Some(w))))
            })
            .collect();
        out.sort_by_key(|(k, e)| (e.score, *k));
        out.into_iter().map(|(_, e)| e).collect()
    }

    /// `ℒ_G(S)`, each with its first witness, sorted like [`Self::h_family`].
    pub fn l_family(&self, s: &GSubset) -> Result<Vec<FamilyEntry>> {
        self.check_subset(s)?;
        Ok(self.l_family_profiled(s, &self.profile(s), false))
    }

    /// `ℒ*_G(S)`, each with its first witness.
    pub fn lstar_family(&self, s: &GSubset) -> Result<Vec<FamilyEntry>> {
        self.check_subset(s)?;
        Ok(self.l_family_profiled(s, &self.profile(s), true))
    }

    /// The first `(G0, g0)` witnessing `L ∈ ℒ*_G(S)`, scanning `G0` and then
    /// `g0` in ascending order.
    pub fn lstar_check(&self, s: &GSubset, l: &Subgroup) -> Result<Option<LWitness>> {
        self.check_subset(s)?;
        let idx = self
            .lattice
            .index_of(l)
            .ok_or(Error::InvalidSubgroup("not a subgroup of this group"))?;
        Ok(self.l_witness(s, &self.profile(s), idx, true))
    }

    /// `λ_G(S)`.
    pub fn lambda(&self, s: &GSubset) -> Result<Option<usize>> {
        Ok(self.l_family(s)?.first().map(|e| e.score))
    }

    /// `λ*_G(S)`.
    pub fn lambda_star(&self, s: &GSubset) -> Result<Option<usize>> {
        Ok(self.lstar_family(s)?.first().map(|e| e.score))
    }

    /// `min { η, λ, |S| }` over the full families.
    pub fn three_way_min(&self, s: &GSubset) -> Result<usize> {
        let p = self.profile(s);
        let eta = self.h_family_profiled(&p).first().map(|e| e.score);
        let lambda = self.l_family_profiled(s, &p, false).first().map(|e| e.score);
        Ok(min_opt(min_opt(eta, lambda), Some(s.len())).expect("|S| is always present"))
    }

    /// `min { |S+H| - |H| : H ≤ G, S + H ≠ G }`, `None` when every subgroup
    /// saturates to `G`. Negative for `S = ∅`.
    pub fn kappa_simple(&self, s: &GSubset) -> Result<Option<isize>> {
        self.check_subset(s)?;
        let p = self.profile(s);
        Ok((0..self.lattice.len())
            .filter(|&k| !self.saturates(&p, k))
            .map(|k| {
                p.hits[k].len() as isize * self.lattice.subgroup(k).order() as isize
                    - self.lattice.subgroup(k).order() as isize
            })
            .min())
    }

    /// The coset criterion for connectivity; see
    /// [`crate::cayley_graph::connectivity_criterion`].
    pub fn connectivity_criterion(&self, s: &GSubset) -> bool {
        crate::cayley_graph::connectivity_criterion(&self.lattice, s)
    }
}
