use alloc::collections::VecDeque;
use alloc::vec::Vec;

use super::SimpleGraph;
use crate::set::GSubset;

const UNBOUNDED: i32 = i32::MAX / 4;
const NONE: u32 = u32::MAX;

/// Result of the connectivity sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimumCuts {
    pub kappa: usize,
    /// Distinct minimum vertex cuts found, in discovery order. Empty for a
    /// complete graph, which has no vertex cuts.
    pub cuts: Vec<GSubset>,
}

/// Vertex-split flow network: vertex `v` becomes `in(v) = 2v -> out(v) = 2v+1`
/// with capacity 1, and each edge `{u, w}` becomes `out(u) -> in(w)` and
/// `out(w) -> in(u)` with unbounded capacity.
pub(crate) struct SplitNetwork {
    n: usize,
    first: Vec<u32>,
    next: Vec<u32>,
    to: Vec<u32>,
    capacity: Vec<i32>,
    residual: Vec<i32>,
    parent: Vec<u32>,
    queue: VecDeque<u32>,
}

impl SplitNetwork {
    pub(crate) fn new(graph: &SimpleGraph) -> Self {
        let n = graph.vertex_count();
        let mut net = SplitNetwork {
            n,
            first: alloc::vec![NONE; 2 * n],
            next: Vec::new(),
            to: Vec::new(),
            capacity: Vec::new(),
            residual: Vec::new(),
            parent: alloc::vec![NONE; 2 * n],
            queue: VecDeque::with_capacity(2 * n),
        };
        for v in 0..n {
            net.link(2 * v, 2 * v + 1, 1);
            for w in graph.neighbors(v).indices() {
                net.link(2 * v + 1, 2 * w, UNBOUNDED);
            }
        }
        net.residual = net.capacity.clone();
        net
    }

    fn push_arc(&mut self, from: usize, to: usize, cap: i32) {
        let id = self.to.len() as u32;
        self.to.push(to as u32);
        self.capacity.push(cap);
        self.next.push(self.first[from]);
        self.first[from] = id;
    }

    // Arc `e` and its reverse `e ^ 1` are allocated together.
    fn link(&mut self, from: usize, to: usize, cap: i32) {
        self.push_arc(from, to, cap);
        self.push_arc(to, from, 0);
    }

    /// Max-flow from `out(s)` to `in(t)`, stopping once it reaches `limit`.
    /// When the flow stays below `limit`, also returns the minimum vertex cut.
    pub(crate) fn max_flow(&mut self, s: usize, t: usize, limit: usize) -> (usize, Option<GSubset>) {
        self.residual.copy_from_slice(&self.capacity);
        let (source, sink) = (2 * s + 1, 2 * t);
        let mut flow = 0;
        while flow < limit {
            if !self.augment(source, sink) {
                return (flow, Some(self.cut_from_reachable(source)));
            }
            flow += 1;
        }
        (flow, None)
    }

    fn augment(&mut self, source: usize, sink: usize) -> bool {
        self.parent.fill(NONE);
        self.queue.clear();
        self.queue.push_back(source as u32);
        self.parent[source] = u32::MAX - 1;
        while let Some(u) = self.queue.pop_front() {
            let mut e = self.first[u as usize];
            while e != NONE {
                let v = self.to[e as usize] as usize;
                if self.residual[e as usize] > 0 && self.parent[v] == NONE {
                    self.parent[v] = e;
                    if v == sink {
                        self.push_back_path(source, sink);
                        return true;
                    }
                    self.queue.push_back(v as u32);
                }
                e = self.next[e as usize];
            }
        }
        false
    }

    // Every s-t path crosses a unit split arc, so each augmentation carries 1.
    fn push_back_path(&mut self, source: usize, sink: usize) {
        let mut v = sink;
        while v != source {
            let e = self.parent[v] as usize;
            self.residual[e] -= 1;
            self.residual[e ^ 1] += 1;
            v = self.to[e ^ 1] as usize;
        }
    }

    // After a failed search, `parent` marks the residual-reachable nodes; the
    // cut is every vertex whose in-node is reachable but out-node is not.
    fn cut_from_reachable(&self, source: usize) -> GSubset {
        let reached = |x: usize| x == source || self.parent[x] != NONE;
        GSubset::from_indices(
            self.n,
            (0..self.n).filter(|&v| reached(2 * v) && !reached(2 * v + 1)),
        )
    }
}

/// Pairs whose local connectivities determine the global one: `v` against each
/// non-neighbor, and each non-adjacent pair inside `N(v)`, for a vertex `v` of
/// minimum degree.
fn sweep_pairs(graph: &SimpleGraph, v: usize) -> Vec<(usize, usize)> {
    let n = graph.vertex_count();
    let nv = graph.neighbors(v);
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .filter(|&w| w != v && !nv.contains_index(w))
        .map(|w| (v, w))
        .collect();
    let ns: Vec<usize> = nv.indices().collect();
    for (i, &x) in ns.iter().enumerate() {
        for &y in &ns[i + 1..] {
            if !graph.adjacent(x, y) {
                pairs.push((x, y));
            }
        }
    }
    pairs
}

pub(crate) fn sweep(graph: &SimpleGraph, collect: bool) -> MinimumCuts {
    let n = graph.vertex_count();
    if graph.is_complete() {
        return MinimumCuts {
            kappa: n.saturating_sub(1),
            cuts: Vec::new(),
        };
    }
    let v = (0..n).min_by_key(|&v| graph.degree(v)).expect("non-complete graph has vertices");
    let mut best = graph.degree(v);
    let mut cuts = Vec::new();
    if collect {
        cuts.push(graph.neighbors(v).clone());
    }

    let mut net = SplitNetwork::new(graph);
    for (s, t) in sweep_pairs(graph, v) {
        if !collect && best == 0 {
            break;
        }
        let limit = if collect { best + 1 } else { best };
        let (flow, cut) = net.max_flow(s, t, limit);
        let Some(cut) = cut else { continue };
        if flow < best {
            best = flow;
            cuts.clear();
        }
        if collect && flow == best && !cuts.contains(&cut) {
            cuts.push(cut);
        }
    }
    MinimumCuts { kappa: best, cuts }
}
