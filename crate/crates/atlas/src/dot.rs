//! Graphviz rendering of a pattern.

use std::fmt::Write as _;

use gr33_core::{ArrowKind, Pattern};

/// One node per weight (labelled in compact form), one edge per arrow
/// labelled with its order. Standard arrows are solid, nonstandard ones
/// dotted or dashed.
pub fn pattern(p: &Pattern) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph \"{:#}\" {{", p.character);
    out.push_str("  rankdir=BT;\n");
    for n in &p.nodes {
        let _ = writeln!(out, "  \"{0:#}\" [label=\"{0:#}\"];", n.weight);
    }
    for a in &p.arrows {
        let style = match a.kind {
            ArrowKind::Standard => "solid",
            ArrowKind::NonstandardDotted => "dotted",
            ArrowKind::NonstandardDashed => "dashed",
        };
        let _ = writeln!(
            out,
            "  \"{:#}\" -> \"{:#}\" [label=\"{}\", style={}];",
            a.src, a.tgt, a.order, style
        );
    }
    out.push_str("}\n");
    out
}
