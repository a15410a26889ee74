//! Graphviz export.

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::chain::{Chain, ValuedChain};
use crate::poset::{EventId, Poset};
use crate::projection::forward_index;
use crate::structure::rank_chains;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DotMode {
    /// Cover edges drawn bottom-up, chains boxed, forward projections dashed.
    Hasse,
    /// One filled node per chain, placed along a line by induced order.
    Geometric,
}

pub fn export_dot(poset: &Poset, chains: &[ValuedChain], mode: DotMode) -> String {
    let labels: Vec<String> = poset.events().map(|e| e.to_string()).collect();
    export_dot_labeled(poset, chains, mode, &labels)
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

pub fn export_dot_labeled(
    poset: &Poset,
    chains: &[ValuedChain],
    mode: DotMode,
    labels: &[String],
) -> String {
    match mode {
        DotMode::Hasse => hasse(poset, chains, labels),
        DotMode::Geometric => geometric(poset, chains),
    }
}

fn hasse(poset: &Poset, chains: &[ValuedChain], labels: &[String]) -> String {
    let mut out = String::new();
    out.push_str("digraph poset {\n  rankdir=BT;\n  node [shape=circle];\n");
    let mut placed: HashSet<EventId> = HashSet::new();
    for (i, c) in chains.iter().enumerate() {
        writeln!(out, "  subgraph cluster_{i} {{").unwrap();
        writeln!(out, "    label={};", quote(c.name())).unwrap();
        for &e in c.elements() {
            if placed.insert(e) {
                writeln!(out, "    {e} [label={}];", quote(&labels[e.0])).unwrap();
            }
        }
        out.push_str("  }\n");
    }
    for e in poset.events() {
        if !placed.contains(&e) {
            writeln!(out, "  {e} [label={}];", quote(&labels[e.0])).unwrap();
        }
    }
    for (a, b) in poset.cover_edges() {
        writeln!(out, "  {a} -> {b};").unwrap();
    }
    for p in chains {
        for q in chains {
            if std::ptr::eq(p, q) {
                continue;
            }
            for &e in p.elements() {
                if q.contains(e) {
                    continue;
                }
                if let Some(i) = forward_index(poset, e, q) {
                    writeln!(
                        out,
                        "  {e} -> {} [style=dashed, constraint=false];",
                        q.get(i)
                    )
                    .unwrap();
                }
            }
        }
    }
    out.push_str("}\n");
    out
}

fn geometric(poset: &Poset, chains: &[ValuedChain]) -> String {
    let refs: Vec<&Chain> = chains.iter().map(|c| c.chain()).collect();
    let rank = rank_chains(poset, &refs);
    let mut order: Vec<usize> = (0..chains.len()).collect();
    order.sort_by_key(|&i| rank[i]);
    let mut out = String::new();
    out.push_str("graph geometric {\n  layout=neato;\n");
    out.push_str("  node [shape=circle, style=filled, fillcolor=black, fontcolor=white];\n");
    for &i in &order {
        writeln!(
            out,
            "  {} [pos=\"{},0!\"];",
            quote(chains[i].name()),
            rank[i]
        )
        .unwrap();
    }
    for w in order.windows(2) {
        writeln!(
            out,
            "  {} -- {};",
            quote(chains[w[0]].name()),
            quote(chains[w[1]].name())
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}
