//! Graphviz dump of an addition Cayley graph, loops drawn as self-edges.

use std::fmt::Write;

use sumgraph_core::AdditionCayleyGraph;

use crate::parse::{format_element, format_subset};

pub fn to_dot(graph: &AdditionCayleyGraph) -> String {
    let group = graph.group();
    let mut out = String::new();
    let title = format_subset(group, graph.connection_set());
    writeln!(out, "graph sumgraph {{").unwrap();
    writeln!(out, "  label=\"S = {title}\";").unwrap();
    for g in group.elements() {
        writeln!(out, "  {} [label=\"{}\"];", g.index(), format_element(group, g)).unwrap();
    }
    for g in group.elements() {
        for h in graph.neighbors(g).iter().filter(|h| h.index() >= g.index()) {
            writeln!(out, "  {} -- {};", g.index(), h.index()).unwrap();
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use sumgraph_core::abelian_group::make_group;
    use sumgraph_core::GSubset;

    #[test]
    fn z5_path_with_loops() {
        let g = make_group(&[5]).unwrap();
        let dot = to_dot(&AdditionCayleyGraph::new(&g, &GSubset::from_indices(5, [1, 4])));
        // Edges of the path 3-1-0-4-2, plus loops at 2 and 3.
        for e in ["0 -- 1;", "0 -- 4;", "1 -- 3;", "2 -- 4;", "2 -- 2;", "3 -- 3;"] {
            assert!(dot.contains(e), "{e} missing from\n{dot}");
        }
        assert_eq!(dot.matches(" -- ").count(), 6);
    }
}
