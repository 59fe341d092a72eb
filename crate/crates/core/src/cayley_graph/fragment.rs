use alloc::vec::Vec;

use super::{check_oracle_bound, is_complete, AdditionCayleyGraph, DEFAULT_ORACLE_LIMIT, EXHAUSTIVE_FRAGMENT_LIMIT};
use crate::abelian_group::GroupSpec;
use crate::error::{Error, Result};
use crate::set::GSubset;

/// A vertex set `A` split against its neighborhood: `boundary = N(A) \ A` and
/// `outside = G \ (N(A) ∪ A)`.
///
/// A fragment proper has `|boundary| = κ` and a non-empty `outside`; use
/// [`Fragment::is_fragment`] to check that against a known connectivity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fragment {
    pub vertices: GSubset,
    pub boundary: GSubset,
    pub outside: GSubset,
}

impl Fragment {
    pub fn of(graph: &AdditionCayleyGraph, vertices: GSubset) -> Self {
        let closed = graph.neighborhood(&vertices).union(&vertices);
        Fragment {
            boundary: closed.difference(&vertices),
            outside: closed.complement(),
            vertices,
        }
    }

    pub fn is_fragment(&self, kappa: usize) -> bool {
        !self.vertices.is_empty() && !self.outside.is_empty() && self.boundary.len() == kappa
    }
}

/// How [`enumerate_fragments_with`] searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum FragmentSearch {
    /// Components left by each distinct minimum cut met in the max-flow sweep.
    #[default]
    SweepCuts,
    /// Every vertex subset; only for `|G| <= 16`.
    Exhaustive,
}

/// Fragments from the minimum cuts found by the oracle sweep, sorted by size
/// and then by member list.
pub fn enumerate_fragments(group: &GroupSpec, s: &GSubset) -> Result<Vec<Fragment>> {
    enumerate_fragments_with(group, s, FragmentSearch::SweepCuts)
}

pub fn enumerate_fragments_with(
    group: &GroupSpec,
    s: &GSubset,
    search: FragmentSearch,
) -> Result<Vec<Fragment>> {
    if is_complete(group, s) {
        return Err(Error::NoFragments);
    }
    check_oracle_bound(group.order(), DEFAULT_ORACLE_LIMIT)?;
    let graph = AdditionCayleyGraph::new(group, s);
    let simple = graph.simple();
    let mut out = match search {
        FragmentSearch::SweepCuts => {
            let cuts = simple.minimum_cuts();
            fragments_from_cuts(&graph, &cuts.cuts)
        }
        FragmentSearch::Exhaustive => {
            check_exhaustive_bound(group.order())?;
            let kappa = simple.connectivity();
            let n = group.order();
            (1u64..1 << n)
                .map(|m| Fragment::of(&graph, GSubset::from_mask(n, m)))
                .filter(|f| f.is_fragment(kappa))
                .collect()
        }
    };
    sort_fragments(&mut out);
    Ok(out)
}

fn check_exhaustive_bound(order: usize) -> Result<()> {
    if order > EXHAUSTIVE_FRAGMENT_LIMIT {
        Err(Error::ResourceLimit {
            what: "group order for exhaustive fragment enumeration",
            size: order,
            limit: EXHAUSTIVE_FRAGMENT_LIMIT,
        })
    } else {
        Ok(())
    }
}

/// The components left after removing each cut, deduplicated by vertex set.
pub(crate) fn fragments_from_cuts(graph: &AdditionCayleyGraph, cuts: &[GSubset]) -> Vec<Fragment> {
    let simple = graph.simple();
    let mut out: Vec<Fragment> = Vec::new();
    for cut in cuts {
        for comp in simple.components_without(cut) {
            if !out.iter().any(|f| f.vertices == comp) {
                out.push(Fragment::of(graph, comp));
            }
        }
    }
    out
}

/// Smallest vertex set first, ties broken by member list.
pub(crate) fn sort_fragments(fragments: &mut [Fragment]) {
    fragments.sort_by(|a, b| {
        a.vertices
            .len()
            .cmp(&b.vertices.len())
            .then_with(|| a.vertices.lex_cmp(&b.vertices))
    });
}
