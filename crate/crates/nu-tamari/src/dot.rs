//! Graphviz DOT renderings. Output depends only on the input, so reruns are
//! byte-identical.

use std::collections::BTreeMap;
use std::fmt::Write;

use nu_tamari_core::complexes::CoveringFace;
use nu_tamari_core::paths::{FerrersRegion, LatticePoint, TamariLattice};
use nu_tamari_core::posets::LabeledPoset;
use nu_tamari_core::trees::CompatibilityGraph;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

fn nodes_label(nodes: &[LatticePoint]) -> String {
    nodes
        .iter()
        .map(|p| format!("({},{})", p.x, p.y))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Hasse diagram of the ν-Tamari lattice on ν-paths.
pub fn tamari(lattice: &TamariLattice) -> String {
    let mut out = format!(
        "digraph {} {{\n  rankdir=BT;\n",
        quote(&format!("Tam({})", lattice.nu))
    );
    for (i, mu) in lattice.paths.iter().enumerate() {
        writeln!(out, "  n{i} [label={}];", quote(&mu.to_string())).unwrap();
    }
    for &(a, b) in &lattice.covers {
        writeln!(out, "  n{a} -> n{b};").unwrap();
    }
    out.push_str("}\n");
    out
}

/// Face poset of the ν-associahedron: an edge joins each cell to the cells
/// one dimension up that contain it.
pub fn asso(nu: &str, faces: &[CoveringFace]) -> String {
    let index: BTreeMap<&[LatticePoint], usize> = faces
        .iter()
        .enumerate()
        .map(|(i, c)| (c.nodes(), i))
        .collect();
    let mut out = format!(
        "digraph {} {{\n  rankdir=BT;\n",
        quote(&format!("Asso({nu})"))
    );
    for (i, c) in faces.iter().enumerate() {
        let label = format!(
            "{}\\ndim {} rel {} corel {}",
            nodes_label(c.nodes()),
            c.dim(),
            c.rel(),
            c.corel()
        );
        writeln!(out, "  f{i} [label=\"{label}\"];").unwrap();
    }
    for (i, c) in faces.iter().enumerate() {
        for skip in 0..c.nodes().len() {
            let smaller: Vec<LatticePoint> = c
                .nodes()
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != skip)
                .map(|(_, &p)| p)
                .collect();
            if let Some(&j) = index.get(smaller.as_slice()) {
                writeln!(out, "  f{i} -> f{j};").unwrap();
            }
        }
    }
    out.push_str("}\n");
    out
}

/// The 1-skeleton of the ν-Tamari complex: compatible pairs of lattice points.
pub fn complex(graph: &CompatibilityGraph) -> String {
    let region: &FerrersRegion = graph.region();
    let mut out = format!("graph {} {{\n", quote(&format!("TC({})", region.nu())));
    for (i, p) in region.points().enumerate() {
        writeln!(out, "  v{i} [label=\"({},{})\"];", p.x, p.y).unwrap();
    }
    for i in 0..region.len() {
        for j in graph.neighbours(i).ones().filter(|&j| j > i) {
            writeln!(out, "  v{i} -- v{j};").unwrap();
        }
    }
    out.push_str("}\n");
    out
}

/// Hasse diagram of a labeled poset; non-zero labels are drawn on the edge.
pub fn poset(p: &LabeledPoset) -> String {
    let mut out = String::from("digraph poset {\n  rankdir=BT;\n");
    for (i, e) in p.elements().iter().enumerate() {
        writeln!(out, "  n{i} [label={}];", quote(e)).unwrap();
    }
    for c in p.covers() {
        if c.label == 0 {
            writeln!(out, "  n{} -> n{};", c.lower, c.upper).unwrap();
        } else {
            writeln!(
                out,
                "  n{} -> n{} [label=\"{}\", style=bold];",
                c.lower, c.upper, c.label
            )
            .unwrap();
        }
    }
    out.push_str("}\n");
    out
}
