//! DOT rendering of a two-way partition.

use std::fmt::Write as _;

use smoothcut::{Graph, VertexSet};

const SIDE_COLOR: &str = "lightblue";
const OTHER_COLOR: &str = "lightsalmon";

/// Undirected DOT graph: vertices filled by side, cut edges dashed.
pub fn render(g: &Graph, side: &VertexSet) -> String {
    let mut out = String::from("graph partition {\n  node [style=filled];\n");
    for v in 0..g.n() {
        let color = if side.contains(v) {
            SIDE_COLOR
        } else {
            OTHER_COLOR
        };
        let _ = writeln!(out, "  {v} [fillcolor={color}];");
    }
    for &(u, v) in g.edges() {
        if side.contains(u) != side.contains(v) {
            let _ = writeln!(out, "  {u} -- {v} [style=dashed];");
        } else {
            let _ = writeln!(out, "  {u} -- {v};");
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_split() {
        let g = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        let text = render(&g, &VertexSet::from_vertices(3, [0]));
        assert_eq!(
            text,
            "graph partition {\n  node [style=filled];\n  0 [fillcolor=lightblue];\n  \
             1 [fillcolor=lightsalmon];\n  2 [fillcolor=lightsalmon];\n  \
             0 -- 1 [style=dashed];\n  1 -- 2;\n}\n"
        );
    }
}
