//! Graphviz export of the host cube, optionally with an embedding drawn on it.

use std::collections::{HashMap, HashSet};
use std::fmt::Write;

use crate::embedding::EmbeddingMap;
use crate::graycode;
use crate::topology::{self, Coordinate, CubeSpec};

fn node_id(c: &Coordinate) -> String {
    let digits: Vec<String> = c.digits().iter().map(u32::to_string).collect();
    format!("\"{}\"", digits.join(","))
}

/// Render the cube as an undirected DOT graph with one node statement per
/// cube node.
///
/// Nodes used by `map` are filled and labelled with their grid point; unused
/// nodes stay hollow. Cube edges that carry a grid edge are drawn bold. When
/// `k` is a power of two every node also shows its binary label.
pub fn cube_to_dot(cube: &CubeSpec, map: Option<&EmbeddingMap>) -> String {
    let mut used: HashMap<u64, (u32, u32)> = HashMap::new();
    let mut grid_edges: HashSet<(u64, u64)> = HashSet::new();
    if let Some(map) = map {
        for ((x, y), coord) in map.iter() {
            used.entry(cube.index_of(coord)).or_insert((x, y));
        }
        let assign = map.assignments();
        for (u, v) in map.grid().edges() {
            let (a, b) = (cube.index_of(&assign[u]), cube.index_of(&assign[v]));
            grid_edges.insert((a.min(b), a.max(b)));
        }
    }

    let mut out = String::new();
    writeln!(out, "graph cube {{").unwrap();
    writeln!(out, "  // {cube}").unwrap();
    writeln!(out, "  node [shape=circle, fontsize=10];").unwrap();
    for coord in topology::nodes(cube) {
        let mut label = coord.to_string();
        if let Ok(bits) = graycode::label_of_coordinate(&coord, cube.k()) {
            write!(label, "\\n{bits}").unwrap();
        }
        let style = match used.get(&cube.index_of(&coord)) {
            Some((x, y)) => {
                write!(label, "\\n[{x},{y}]").unwrap();
                ", style=filled, fillcolor=black, fontcolor=white"
            }
            None => "",
        };
        writeln!(out, "  {} [label=\"{label}\"{style}];", node_id(&coord)).unwrap();
    }
    for (a, b) in topology::edges(cube) {
        let bold = if grid_edges.contains(&(a, b)) {
            " [penwidth=3]"
        } else {
            ""
        };
        writeln!(
            out,
            "  {} -- {}{bold};",
            node_id(&cube.coordinate_at(a)),
            node_id(&cube.coordinate_at(b))
        )
        .unwrap();
    }
    writeln!(out, "}}").unwrap();
    out
}
