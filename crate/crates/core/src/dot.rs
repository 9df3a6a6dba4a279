//! Graphviz export of covering relations.

use std::fmt::Write;

use crate::algebra::FiniteAlgebra;

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        if c == '"' || c == '\\' {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}

/// The Hasse diagram of `a` as a DOT digraph, edges pointing up.
pub fn export_dot<A: FiniteAlgebra>(a: &A, graph_name: &str) -> String {
    let mut s = String::new();
    writeln!(s, "digraph {} {{", quote(graph_name)).unwrap();
    writeln!(s, "  rankdir=BT;").unwrap();
    writeln!(s, "  node [shape=plaintext];").unwrap();
    for x in a.elements() {
        writeln!(s, "  n{x} [label={}];", quote(a.name(x))).unwrap();
    }
    for (lo, hi) in a.covers() {
        writeln!(s, "  n{lo} -> n{hi};").unwrap();
    }
    s.push_str("}\n");
    s
}
