//! Topology dumps: JSON and Graphviz DOT.

use std::fmt::Write;

use serde::Serialize;
use spectra_core::ZariskiSpace;

#[derive(Serialize)]
struct ClosedSetJson {
    radical: Vec<String>,
    points: Vec<usize>,
}

#[derive(Serialize)]
struct TopologyJson {
    points: Vec<Vec<String>>,
    specialization: Vec<[usize; 2]>,
    closed_sets: Vec<ClosedSetJson>,
}

/// `specialization` lists every pair `[i, j]`, `i != j`, with `p_i ⊆ p_j`.
pub fn topology_json(space: &ZariskiSpace) -> String {
    let n = space.len();
    let doc = TopologyJson {
        points: (0..n).map(|i| space.point_labels(i)).collect(),
        specialization: (0..n)
            .flat_map(|i| (0..n).map(move |j| [i, j]))
            .filter(|&[i, j]| i != j && space.specializes(i, j))
            .collect(),
        closed_sets: space
            .closed_sets()
            .iter()
            .map(|c| ClosedSetJson {
                radical: c.radical.labels().into_iter().map(String::from).collect(),
                points: c.points.iter().collect(),
            })
            .collect(),
    };
    let mut out = serde_json::to_string_pretty(&doc).expect("topology serializes");
    out.push('\n');
    out
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Hasse diagram of the specialization order, edges pointing from a
/// point to the points it specializes to.
pub fn topology_dot(space: &ZariskiSpace) -> String {
    let mut out = String::from("digraph spectrum {\n    rankdir=BT;\n    node [shape=box];\n");
    for i in 0..space.len() {
        let label = format!("{{{}}}", space.point_labels(i).join(", "));
        writeln!(out, "    p{i} [label=\"{}\"];", escape(&label)).unwrap();
    }
    for (i, j) in space.hasse_edges() {
        writeln!(out, "    p{i} -> p{j};").unwrap();
    }
    out.push_str("}\n");
    out
}
