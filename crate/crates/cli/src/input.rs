use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use mwkit::decomp::Decomposition;
use mwkit::median::{EmbeddingDocument, EMBEDDING_FORMAT};
use mwkit::Graph;

/// A file read by any subcommand that accepts more than one format.
pub enum Document {
    Graph(Graph),
    Decomposition(Decomposition),
    Embedding(EmbeddingDocument),
}

pub fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

pub fn read_graph(path: &Path) -> Result<Graph> {
    let text = read_text(path)?;
    Graph::parse(&text).with_context(|| format!("parsing {}", path.display()))
}

pub fn read_decomposition(path: &Path) -> Result<Decomposition> {
    let text = read_text(path)?;
    Decomposition::parse(&text).with_context(|| format!("parsing {}", path.display()))
}

/// JSON documents are told apart by their `format` field, anything else is
/// read as an edge list.
pub fn read_document(path: &Path) -> Result<Document> {
    let text = read_text(path)?;
    let ctx = || format!("parsing {}", path.display());
    if !text.trim_start().starts_with('{') {
        return Ok(Document::Graph(Graph::parse(&text).with_context(ctx)?));
    }
    let value: serde_json::Value = serde_json::from_str(&text)
        .map_err(mwkit::Error::from)
        .with_context(ctx)?;
    match value.get("format").and_then(|f| f.as_str()) {
        Some(EMBEDDING_FORMAT) => Ok(Document::Embedding(
            EmbeddingDocument::parse(&text).with_context(ctx)?,
        )),
        _ => Ok(Document::Decomposition(
            Decomposition::from_value(&value).with_context(ctx)?,
        )),
    }
}

/// Writes to `path`, or to stdout when there is none.
pub fn write_output(path: Option<&PathBuf>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Same vertex names and the same edges, in any order.
pub fn same_graph(a: &Graph, b: &Graph) -> bool {
    fn key(g: &Graph) -> (Vec<&str>, Vec<(&str, &str)>) {
        let mut names: Vec<&str> = g.names().iter().map(String::as_str).collect();
        names.sort_unstable();
        let mut edges: Vec<(&str, &str)> = g
            .named_edges()
            .map(|(u, v)| if u <= v { (u, v) } else { (v, u) })
            .collect();
        edges.sort_unstable();
        (names, edges)
    }
    key(a) == key(b)
}
