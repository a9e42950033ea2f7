//! Graphviz DOT export for graphs, decompositions and embeddings.

use std::fmt::Write as _;

use crate::decomp::Decomposition;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::median::{is_median, theta_classes, EmbeddingDocument};

const PALETTE: [&str; 12] = [
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
    "#bcbd22", "#17becf", "#393b79", "#637939",
];

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DotOptions {
    /// Colour the edges of a median graph (or host) by Θ-class.
    pub theta: bool,
    /// Put between vertex names in bag labels.
    pub separator: String,
}

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

/// Palette colour of every edge, in `g.edges()` order.
fn class_colors(g: &Graph) -> Result<Vec<&'static str>> {
    let verdict = is_median(g);
    if !verdict.is_median() {
        return Err(Error::NotMedian(verdict.describe(g)));
    }
    let classes = theta_classes(g)?;
    let mut colors = vec![""; g.m()];
    for (i, class) in classes.iter().enumerate() {
        for &(x, y) in &class.edges {
            let e = g
                .edges()
                .iter()
                .position(|&(a, b)| (a, b) == (x, y) || (a, b) == (y, x))
                .expect("class edge belongs to the graph");
            colors[e] = PALETTE[i % PALETTE.len()];
        }
    }
    Ok(colors)
}

fn write_body(
    out: &mut String,
    g: &Graph,
    indent: &str,
    label: impl Fn(usize) -> Option<String>,
    theta: bool,
) -> Result<()> {
    for v in 0..g.n() {
        match label(v) {
            Some(l) => writeln!(out, "{indent}{} [label={}];", quote(g.name(v)), quote(&l)),
            None => writeln!(out, "{indent}{};", quote(g.name(v))),
        }
        .expect("string write");
    }
    let colors = if theta { Some(class_colors(g)?) } else { None };
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let attr = colors
            .as_ref()
            .map(|c| format!(" [color={}]", quote(c[e])))
            .unwrap_or_default();
        writeln!(
            out,
            "{indent}{} -- {}{attr};",
            quote(g.name(u)),
            quote(g.name(v))
        )
        .expect("string write");
    }
    Ok(())
}

pub fn graph_to_dot(g: &Graph, opts: &DotOptions) -> Result<String> {
    let mut out = String::from("graph G {\n");
    write_body(&mut out, g, "  ", |_| None, opts.theta)?;
    out.push_str("}\n");
    Ok(out)
}

/// The host graph with every node labelled by its bag.
pub fn decomposition_to_dot(d: &Decomposition, opts: &DotOptions) -> Result<String> {
    let mut out = String::from("graph D {\n  node [shape=box];\n");
    write_body(
        &mut out,
        &d.host,
        "  ",
        |a| Some(d.bag_names(a).join(&opts.separator)),
        opts.theta,
    )?;
    out.push_str("}\n");
    Ok(out)
}

/// One cluster per factor tree, then the coordinate tuple of every vertex.
pub fn embedding_to_dot(doc: &EmbeddingDocument) -> String {
    let mut out = String::from("graph E {\n");
    for (j, factor) in doc.factors.iter().enumerate() {
        let _ = writeln!(
            out,
            "  subgraph cluster_{j} {{\n    label={};",
            quote(&format!("T{}", j + 1))
        );
        for v in 0..factor.n() {
            let _ = writeln!(
                out,
                "    {} [label={}];",
                quote(&format!("T{}:{}", j + 1, factor.name(v))),
                quote(factor.name(v))
            );
        }
        for (u, v) in factor.named_edges() {
            let _ = writeln!(
                out,
                "    {} -- {};",
                quote(&format!("T{}:{u}", j + 1)),
                quote(&format!("T{}:{v}", j + 1))
            );
        }
        out.push_str("  }\n");
    }
    for (v, tuple) in &doc.coords {
        let _ = writeln!(
            out,
            "  {} [shape=plaintext, label={}];",
            quote(&format!("v:{v}")),
            quote(&format!("{v} = ({})", tuple.join(", ")))
        );
    }
    out.push_str("}\n");
    out
}
