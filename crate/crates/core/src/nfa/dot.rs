use std::fmt::Write;

use super::Nfa;

/// Render `m` as a Graphviz digraph.
///
/// States become nodes `q0`, `q1`, ...; the accepting state is double
/// circled and the initial state gets an arrow from an invisible point.
/// Edges along `highlight` (a state sequence) are drawn bold red. The
/// output depends only on the arguments.
pub fn export_dot(m: &Nfa, highlight: Option<&[usize]>) -> String {
    let on_walk = |from: usize, to: usize| {
        highlight.is_some_and(|walk| walk.windows(2).any(|w| w[0] == from && w[1] == to))
    };

    let mut out = String::new();
    out.push_str("digraph nfa {\n");
    out.push_str("  rankdir=LR;\n");
    out.push_str("  start [shape=point];\n");
    for s in 0..m.state_count() {
        let shape = if s == m.accepting() {
            "doublecircle"
        } else {
            "circle"
        };
        writeln!(out, "  q{s} [shape={shape}];").unwrap();
    }
    writeln!(out, "  start -> q{};", m.initial()).unwrap();
    for t in m.transitions() {
        let style = if on_walk(t.from, t.to) {
            ", color=red, penwidth=2"
        } else {
            ""
        };
        writeln!(
            out,
            "  q{} -> q{} [label=\"{}\"{style}];",
            t.from, t.to, t.symbol
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}
