//! Graphviz DOT rendering of automaton documents.
//!
//! States with nonzero final weight are double-circled; fuzzy edges are
//! labelled `symbol/weight`; crisp scalar-symbol edges are dashed.

use std::collections::BTreeMap;

use crate::document::{AutomatonDocument, AutomatonKind};
use crate::lattice::TruthValue;

/// Renders a document as a DOT digraph.
pub fn to_dot(doc: &AutomatonDocument) -> String {
    let finals: BTreeMap<usize, &TruthValue> =
        doc.finals.iter().map(|f| (f.state, &f.weight)).collect();

    let mut out = String::new();
    out.push_str("digraph automaton {\n");
    out.push_str("  rankdir=LR;\n");
    out.push_str("  __start [shape=point, label=\"\"];\n");
    out.push_str("  __start -> 0;\n");
    for state in 0..doc.states {
        match finals.get(&state) {
            Some(weight) if !weight.is_zero() => match doc.kind {
                AutomatonKind::Fuzzy => out.push_str(&format!(
                    "  {state} [peripheries=2, label=\"{state}/{weight}\"];\n"
                )),
                AutomatonKind::Crisp => {
                    out.push_str(&format!("  {state} [peripheries=2];\n"))
                }
            },
            _ => out.push_str(&format!("  {state};\n")),
        }
    }
    for t in &doc.transitions {
        match doc.kind {
            AutomatonKind::Fuzzy => out.push_str(&format!(
                "  {} -> {} [label=\"{}/{}\"];\n",
                t.from, t.to, t.symbol, t.weight
            )),
            AutomatonKind::Crisp => {
                let style = if is_scalar_symbol(&t.symbol) {
                    ", style=dashed"
                } else {
                    ""
                };
                out.push_str(&format!(
                    "  {} -> {} [label=\"{}\"{style}];\n",
                    t.from, t.to, t.symbol
                ));
            }
        }
    }
    out.push_str("}\n");
    out
}

fn is_scalar_symbol(symbol: &str) -> bool {
    !(symbol.len() == 1 && symbol.chars().all(|c| c.is_ascii_lowercase()))
}
