//! Exact width oracles for small graphs.
//!
//! Every oracle returns a [`WidthResult`] whose witness replays through the
//! validators to the claimed value. Each bound on the input size is a field
//! of [`OracleConfig`], and exceeding one is an error rather than a silent
//! cut-off.
//!
//! The `i`-medianwidth search ranges over chordal completions given by
//! elimination orderings, represented by their families of maximal cliques.
//! Bags of any tree decomposition can be refined to the maximal cliques of
//! a completion without growing, so the clique trees of these completions
//! are enough. A family whose cliques each sit inside some clique of a
//! second family can replace that second family in any tuple without
//! raising the objective, so dominated families are dropped before the
//! tuple search.

mod bramble;
mod elimination;
mod mwi;
mod widths;

use std::time::Duration;

use serde_json::{Map, Value};

use crate::decomp::Decomposition;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::solve::Coloring;

pub use bramble::{bramble_intersection_number, bramble_order, Bramble};
pub use elimination::{clique_tree, fill_in_cliques, treewidth_exact};
pub use mwi::mw_i_exact;
pub use widths::{kw_exact, medianwidth_exact, smw_exact};

/// Input-size bounds and parallelism for the oracles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleConfig {
    pub treewidth_max_n: usize,
    /// Bound for `mw_i` with `i <= 2`.
    pub mwi_max_n: usize,
    /// Bound for `mw_i` with `i >= 3`.
    pub mwi_high_max_n: usize,
    pub kw_max_n: usize,
    pub bramble_max_n: usize,
    pub reduction_budget: usize,
    pub threads: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            treewidth_max_n: 8,
            mwi_max_n: 7,
            mwi_high_max_n: 6,
            kw_max_n: 20,
            bramble_max_n: 20,
            reduction_budget: crate::build::DEFAULT_REDUCTION_BUDGET,
            threads: 1,
        }
    }
}

impl OracleConfig {
    /// Replaces every vertex bound with `n`.
    pub fn with_max_n(mut self, n: usize) -> Self {
        self.treewidth_max_n = n;
        self.mwi_max_n = n;
        self.mwi_high_max_n = n;
        self.kw_max_n = n;
        self.bramble_max_n = n;
        self
    }

    pub fn with_threads(mut self, threads: usize) -> Self {
        self.threads = threads.max(1);
        self
    }
}

pub(crate) fn check_bound(oracle: &'static str, n: usize, bound: usize) -> Result<()> {
    if n > bound {
        return Err(Error::BoundExceeded { oracle, n, bound });
    }
    Ok(())
}

pub(crate) fn check_nonempty(g: &Graph) -> Result<()> {
    if g.n() == 0 {
        return Err(Error::Precondition("the graph has no vertices".into()));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Decomposition(Decomposition),
    Coloring(Coloring),
    Clique(VertexSet),
    /// A separator `S` with the gated decomposition it defines.
    Separator {
        set: VertexSet,
        decomposition: Decomposition,
    },
}

impl Witness {
    pub fn decomposition(&self) -> Option<&Decomposition> {
        match self {
            Witness::Decomposition(d)
            | Witness::Separator {
                decomposition: d, ..
            } => Some(d),
            _ => None,
        }
    }

    pub fn to_value(&self, g: &Graph) -> Value {
        match self {
            Witness::Decomposition(d) => d.to_value(),
            Witness::Coloring(c) => {
                let mut m = Map::new();
                for v in 0..g.n() {
                    m.insert(g.name(v).to_string(), c.color(v).into());
                }
                Value::Object(m)
            }
            Witness::Clique(set) => g.names_of(set).into(),
            Witness::Separator { set, decomposition } => {
                let mut m = Map::new();
                m.insert("separator".into(), g.names_of(set).into());
                m.insert("decomposition".into(), decomposition.to_value());
                Value::Object(m)
            }
        }
    }
}

#[derive(Debug, Clone)]
pub struct WidthResult {
    pub parameter: String,
    pub value: usize,
    pub witness: Witness,
    pub method: &'static str,
    pub elapsed: Duration,
}

impl WidthResult {
    pub fn to_value(&self, g: &Graph) -> Value {
        let mut m = Map::new();
        m.insert("parameter".into(), self.parameter.clone().into());
        m.insert("value".into(), self.value.into());
        m.insert("witness".into(), self.witness.to_value(g));
        m.insert("method".into(), self.method.into());
        m.insert("elapsed".into(), self.elapsed.as_secs_f64().into());
        Value::Object(m)
    }
}
