//! JSON, DOT and plain-text renderings.

use std::fmt::Write;

use serde_json::{json, Value};

use crate::branching::BranchingResult;
use crate::crystal::CrystalGraph;
use crate::report::Report;

/// `{datum_ref, nodes:[{id, wt, payload}], edges:[{src, dst, j}]}`.
pub fn graph_json(g: &CrystalGraph) -> Value {
    let nodes: Vec<Value> =
        (0..g.len()).map(|b| json!({ "id": b, "wt": g.wt(b), "payload": g.payload(b) })).collect();
    let edges: Vec<Value> = g.edges().into_iter().map(|(src, dst, j)| json!({ "src": src, "dst": dst, "j": j })).collect();
    json!({ "datum_ref": g.datum().name(), "nodes": nodes, "edges": edges })
}

pub fn graph_dot(g: &CrystalGraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph crystal {{");
    let _ = writeln!(out, "  label=\"{}\";", g.datum().name());
    for b in 0..g.len() {
        let _ = writeln!(out, "  n{b} [label=\"{}\"];", g.payload(b).to_string().replace('"', "\\\""));
    }
    for (src, dst, j) in g.edges() {
        let _ = writeln!(out, "  n{src} -> n{dst} [label=\"{j}\"];");
    }
    out.push_str("}\n");
    out
}

pub fn graph_text(g: &CrystalGraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{}: {} nodes, {} edges", g.datum().name(), g.len(), g.edges().len());
    for b in 0..g.len() {
        let fs: Vec<String> =
            (0..g.labels()).filter_map(|j| g.f(j, b).map(|t| format!("f{j}→{t}"))).collect();
        let _ = writeln!(out, "{b:>6}  {:<24} wt={:?}  {}", g.payload(b).to_string(), g.wt(b), fs.join(" "));
    }
    out
}

/// `{components:[{weight, mult, dim}], total}`.
pub fn branching_json(b: &BranchingResult) -> Value {
    json!({ "components": b.components, "total": b.total })
}

pub fn branching_text(b: &BranchingResult) -> String {
    let rows: Vec<(String, String, String)> = b
        .components
        .iter()
        .map(|c| (format!("{:?}", c.weight), c.mult.to_string(), c.dim.to_string()))
        .collect();
    let w0 = rows.iter().map(|r| r.0.chars().count()).max().unwrap_or(0).max("weight".len());
    let w1 = rows.iter().map(|r| r.1.len()).max().unwrap_or(0).max("mult".len());
    let w2 = rows.iter().map(|r| r.2.len()).max().unwrap_or(0).max("dim".len());
    let mut out = String::new();
    let _ = writeln!(out, "{:<w0$}  {:>w1$}  {:>w2$}", "weight", "mult", "dim");
    for (a, m, d) in rows {
        let pad = w0 - a.chars().count();
        let _ = writeln!(out, "{a}{}  {m:>w1$}  {d:>w2$}", " ".repeat(pad));
    }
    let _ = writeln!(out, "Σ mult·dim = {} = |B̂| = {}", b.weighted_dim(), b.total);
    out
}

pub fn report_json(r: &Report) -> Value {
    let stages: Vec<Value> =
        r.stages.iter().map(|s| json!({ "stage": s.name, "pass": s.pass, "witness": s.witness })).collect();
    json!({ "pass": r.passed(), "stages": stages })
}
