//! DOT rendering of a congruence lattice's Hasse diagram.

use semikit_core::CongruenceLattice;
use std::fmt::Write;

/// Nodes in lattice index order, one edge per covering pair, drawn upward.
pub fn lattice_dot(lattice: &CongruenceLattice) -> String {
    let mut out = String::from("digraph congruence_lattice {\n  rankdir=BT;\n  node [shape=box];\n");
    for (i, c) in lattice.members().iter().enumerate() {
        writeln!(out, "  n{i} [label=\"{}\"];", c.partition()).expect("write to string");
    }
    for (lower, upper) in lattice.covers() {
        writeln!(out, "  n{lower} -> n{upper};").expect("write to string");
    }
    out.push_str("}\n");
    out
}
