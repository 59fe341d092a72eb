//! The addition Cayley graph of a subset, and a brute-force connectivity oracle.
//!
//! The oracle computes vertex connectivity by Menger's theorem: unit
//! vertex-capacity max-flow between non-adjacent pairs. It never looks at the
//! subgroup structure, so it can check the closed-form evaluation in
//! [`crate::connectivity`] independently.

mod flow;
mod fragment;

use alloc::vec::Vec;

use crate::abelian_group::{CosetSpace, Element, GroupSpec, SubgroupLattice};
use crate::error::{Error, Result};
use crate::set::GSubset;

pub use flow::MinimumCuts;
pub use fragment::{enumerate_fragments, enumerate_fragments_with, Fragment, FragmentSearch};

/// Default bound on `|G|` for the max-flow oracle.
pub const DEFAULT_ORACLE_LIMIT: usize = 64;

/// Bound on `|G|` for exhaustive fragment enumeration over all vertex subsets.
pub const EXHAUSTIVE_FRAGMENT_LIMIT: usize = 16;

/// A loopless undirected graph on vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    adjacency: Vec<GSubset>,
}

impl SimpleGraph {
    pub fn new(n: usize) -> Self {
        SimpleGraph {
            adjacency: (0..n).map(|_| GSubset::empty(n)).collect(),
        }
    }

    /// Adds `{u, v}`; loops are dropped.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        if u != v {
            self.adjacency[u].insert(Element::from_index_unchecked(v));
            self.adjacency[v].insert(Element::from_index_unchecked(u));
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn neighbors(&self, v: usize) -> &GSubset {
        &self.adjacency[v]
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].contains_index(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(GSubset::len).sum::<usize>() / 2
    }

    /// Every pair of distinct vertices adjacent.
    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        (0..n).all(|v| self.degree(v) + 1 == n)
    }

    /// Connected components of the graph with `removed` deleted, each sorted,
    /// in order of their smallest vertex.
    pub fn components_without(&self, removed: &GSubset) -> Vec<GSubset> {
        let n = self.vertex_count();
        let mut seen = removed.clone();
        let mut out = Vec::new();
        for start in 0..n {
            if seen.contains_index(start) {
                continue;
            }
            let mut comp = GSubset::empty(n);
            let mut stack = alloc::vec![start];
            seen.insert(Element::from_index_unchecked(start));
            while let Some(v) = stack.pop() {
                comp.insert(Element::from_index_unchecked(v));
                for w in self.adjacency[v].indices() {
                    if !seen.contains_index(w) {
                        seen.insert(Element::from_index_unchecked(w));
                        stack.push(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    /// A single vertex (or none) counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components_without(&GSubset::empty(self.vertex_count())).len() <= 1
    }

    /// Exact vertex connectivity: `n - 1` when complete, `0` when disconnected.
    pub fn connectivity(&self) -> usize {
        flow::sweep(self, false).kappa
    }

    /// Connectivity together with every distinct minimum cut met during the
    /// pair sweep.
    pub fn minimum_cuts(&self) -> MinimumCuts {
        flow::sweep(self, true)
    }

    /// Number of internally vertex-disjoint `s`–`t` paths, for non-adjacent `s != t`.
    pub fn local_connectivity(&self, s: usize, t: usize) -> Result<usize> {
        if s == t || self.adjacent(s, t) {
            return Err(Error::Precondition("local connectivity needs distinct non-adjacent vertices"));
        }
        let mut net = flow::SplitNetwork::new(self);
        Ok(net.max_flow(s, t, usize::MAX).0)
    }
}

/// The addition Cayley graph: vertex set `G`, an edge `{g1, g2}` whenever
/// `g1 + g2 ∈ S`. A vertex `g` with `2g ∈ S` carries a loop.
#[derive(Clone, Debug)]
pub struct AdditionCayleyGraph {
    group: GroupSpec,
    connection_set: GSubset,
    /// `neighbors[g] = S - g`, including `g` itself when it has a loop.
    neighbors: Vec<GSubset>,
}

/// Builds the addition Cayley graph of `S` on `G`.
pub fn build_graph(group: &GroupSpec, s: &GSubset) -> AdditionCayleyGraph {
    AdditionCayleyGraph::new(group, s)
}

impl AdditionCayleyGraph {
    pub fn new(group: &GroupSpec, s: &GSubset) -> Self {
        let neighbors = group
            .elements()
            .map(|g| GSubset::from_elements(group.order(), s.iter().map(|x| group.sub(x, g))))
            .collect();
        AdditionCayleyGraph {
            group: group.clone(),
            connection_set: s.clone(),
            neighbors,
        }
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    pub fn connection_set(&self) -> &GSubset {
        &self.connection_set
    }

    pub fn vertex_count(&self) -> usize {
        self.group.order()
    }

    pub fn adjacent(&self, a: Element, b: Element) -> bool {
        self.connection_set.contains(self.group.add(a, b))
    }

    pub fn has_loop(&self, g: Element) -> bool {
        self.connection_set.contains(self.group.double(g))
    }

    /// Neighbors of `g`, itself included when `g` has a loop.
    pub fn neighbors(&self, g: Element) -> &GSubset {
        &self.neighbors[g.index()]
    }

    /// Degree with a loop counted once; equals `|S|` for every vertex.
    pub fn degree(&self, g: Element) -> usize {
        self.neighbors[g.index()].len()
    }

    /// `N(A)`, the union of the neighborhoods of the members of `A`.
    pub fn neighborhood(&self, a: &GSubset) -> GSubset {
        let mut out = self.group.empty_set();
        for x in a.iter() {
            out.union_with(&self.neighbors[x.index()]);
        }
        out
    }

    /// `N(A) \ A`.
    pub fn boundary(&self, a: &GSubset) -> GSubset {
        self.neighborhood(a).difference(a)
    }

    pub fn loops(&self) -> GSubset {
        GSubset::from_elements(self.group.order(), self.group.elements().filter(|&g| self.has_loop(g)))
    }

    /// The same graph with loops stripped.
    pub fn simple(&self) -> SimpleGraph {
        let mut g = SimpleGraph::new(self.vertex_count());
        for (v, ns) in self.neighbors.iter().enumerate() {
            for w in ns.indices().filter(|&w| w > v) {
                g.add_edge(v, w);
            }
        }
        g
    }

    /// Vertex connectivity by max-flow, with the default order bound.
    pub fn kappa_oracle(&self) -> Result<usize> {
        check_oracle_bound(self.vertex_count(), DEFAULT_ORACLE_LIMIT)?;
        Ok(self.simple().connectivity())
    }

    /// Vertex connectivity together with the fragments cut off by the minimum
    /// cuts met in the max-flow sweep, sorted by size and then member list.
    /// The fragment list is empty for a complete graph.
    pub fn oracle_fragments(&self) -> Result<(usize, Vec<Fragment>)> {
        check_oracle_bound(self.vertex_count(), DEFAULT_ORACLE_LIMIT)?;
        let cuts = self.simple().minimum_cuts();
        let mut frags = fragment::fragments_from_cuts(self, &cuts.cuts);
        fragment::sort_fragments(&mut frags);
        Ok((cuts.kappa, frags))
    }
}

pub(crate) fn check_oracle_bound(order: usize, limit: usize) -> Result<()> {
    if order > limit {
        Err(Error::ResourceLimit {
            what: "group order for the max-flow oracle",
            size: order,
            limit,
        })
    } else {
        Ok(())
    }
}

/// Closed-form completeness test: `S = G`, or `S = G \ {0}` with `G` an
/// elementary abelian 2-group (the trivial group included).
pub fn is_complete(group: &GroupSpec, s: &GSubset) -> bool {
    if s.is_full() {
        return true;
    }
    group.is_elementary_2group() && !s.contains(group.zero()) && s.len() + 1 == group.order()
}

/// Connectivity by graph traversal from `0`. The trivial group is connected.
pub fn is_connected(group: &GroupSpec, s: &GSubset) -> bool {
    let graph = AdditionCayleyGraph::new(group, s);
    let mut seen = group.empty_set();
    let mut stack = alloc::vec![group.zero()];
    seen.insert(group.zero());
    while let Some(v) = stack.pop() {
        for w in graph.neighbors(v).iter() {
            if !seen.contains(w) {
                seen.insert(w);
                stack.push(w);
            }
        }
    }
    seen.is_full()
}

/// The coset criterion for connectivity: the graph is connected unless `S`
/// lies in a coset of a proper subgroup, the non-zero coset of an index-2
/// subgroup being the one allowed exception.
///
/// A derived predicate, checked against [`is_connected`] rather than trusted.
pub fn connectivity_criterion(lattice: &SubgroupLattice, s: &GSubset) -> bool {
    let group = lattice.group();
    for i in 0..lattice.len() {
        let h = lattice.subgroup(i);
        if h.order() == group.order() {
            continue;
        }
        let cosets = lattice.cosets(i);
        let index = cosets.len();
        let containing: Vec<usize> = if s.is_empty() {
            (0..index).collect()
        } else {
            let hit = cosets.project(s);
            if hit.len() == 1 {
                hit.indices().collect()
            } else {
                Vec::new()
            }
        };
        // Label 0 is the coset of 0, i.e. H itself.
        if containing.iter().any(|&c| index != 2 || c == 0) {
            return false;
        }
    }
    true
}

/// Vertex connectivity of the addition Cayley graph by max-flow.
pub fn kappa_oracle(group: &GroupSpec, s: &GSubset) -> Result<usize> {
    kappa_oracle_bounded(group, s, DEFAULT_ORACLE_LIMIT)
}

pub fn kappa_oracle_bounded(group: &GroupSpec, s: &GSubset, limit: usize) -> Result<usize> {
    check_oracle_bound(group.order(), limit)?;
    Ok(AdditionCayleyGraph::new(group, s).simple().connectivity())
}

/// The addition Cayley graph of `φ_H(S)` on `G/H`, with cosets as vertices
/// (numbered by their labels in `cosets`) and loops stripped.
pub fn quotient_graph(cosets: &CosetSpace, s: &GSubset) -> SimpleGraph {
    let image = cosets.project(s);
    let n = cosets.len();
    let mut g = SimpleGraph::new(n);
    for x in 0..n {
        for y in x + 1..n {
            if image.contains_index(cosets.add_labels(x, y)) {
                g.add_edge(x, y);
            }
        }
    }
    g
}
