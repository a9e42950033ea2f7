use std::time::Instant;

use super::{check_bound, check_nonempty, OracleConfig, WidthResult, Witness};
use crate::build::{
    chromatic_decomposition, coloring_from_smooth, reduce_to_clique_bags, simplex_decomposition,
};
use crate::decomp::{check_gated_decomposition, check_theta_smooth, validate, Decomposition};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::solve::{chromatic_number, clique_number};

fn certify(d: &Decomposition, value: usize, what: &str) -> Result<()> {
    let report = validate(d);
    if !report.is_valid() || report.width != value {
        return Err(Error::Internal(format!(
            "{what} witness of width {} does not certify {value}\n{}",
            report.width,
            report.summary(d)
        )));
    }
    Ok(())
}

/// Medianwidth, which equals the clique number. The witness comes from
/// clique-bag reduction of the single-bag decomposition, or from the
/// simplex graph when the reduction would exceed its budget.
pub fn medianwidth_exact(g: &Graph, cfg: &OracleConfig) -> Result<WidthResult> {
    let start = Instant::now();
    check_nonempty(g)?;
    let omega = clique_number(g).0;
    let (d, method) = match reduce_to_clique_bags(&Decomposition::trivial(g), cfg.reduction_budget)
    {
        Ok(d) => (d, "clique-bag-reduction"),
        Err(Error::BudgetExceeded { .. }) => (simplex_decomposition(g)?, "simplex-graph"),
        Err(e) => return Err(e),
    };
    certify(&d, omega, "medianwidth")?;
    Ok(WidthResult {
        parameter: "mw".into(),
        value: omega,
        witness: Witness::Decomposition(d),
        method,
        elapsed: start.elapsed(),
    })
}

/// Smooth medianwidth, which equals the chromatic number. The witness is
/// the chromatic decomposition of an optimal colouring; a colouring with
/// as many colours is read back from it to confirm the lower bound.
pub fn smw_exact(g: &Graph, _cfg: &OracleConfig) -> Result<WidthResult> {
    let start = Instant::now();
    check_nonempty(g)?;
    let (chi, coloring) = chromatic_number(g);
    let d = chromatic_decomposition(g, &coloring)?;
    certify(&d, chi, "smooth medianwidth")?;
    if !check_theta_smooth(&d)?.ok {
        return Err(Error::Internal("chromatic witness is not Θ-smooth".into()));
    }
    let back = coloring_from_smooth(&d)?;
    if back.normalized().num_colors() != chi {
        return Err(Error::Internal(format!(
            "colouring read from the witness uses {} colours, expected {chi}",
            back.normalized().num_colors()
        )));
    }
    Ok(WidthResult {
        parameter: "smw".into(),
        value: chi,
        witness: Witness::Decomposition(d),
        method: "chromatic-decomposition",
        elapsed: start.elapsed(),
    })
}

/// Components of `G - S` as bitmasks, ordered by least vertex.
fn components(adj: &[u32], n: usize, s: u32) -> Vec<u32> {
    let all: u32 = if n == 32 { u32::MAX } else { (1 << n) - 1 };
    let mut left = all & !s;
    let mut out = Vec::new();
    while left != 0 {
        let mut comp = 1u32 << left.trailing_zeros();
        loop {
            let mut grown = comp;
            let mut rest = comp;
            while rest != 0 {
                let x = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                grown |= adj[x];
            }
            grown &= left;
            if grown == comp {
                break;
            }
            comp = grown;
        }
        out.push(comp);
        left &= !comp;
    }
    out
}

fn to_set(m: u32) -> VertexSet {
    (0..32).filter(|&v| m >> v & 1 == 1).collect()
}

/// The clique-class width: the least, over vertex sets `S`, of the largest
/// `|S ∪ C|` over components `C` of `G - S`. The witness is the optimal `S`
/// (least as a bitmask among ties) with the decomposition over a complete
/// host that has one bag `S ∪ C` per component.
pub fn kw_exact(g: &Graph, cfg: &OracleConfig) -> Result<WidthResult> {
    let start = Instant::now();
    check_nonempty(g)?;
    check_bound("kw", g.n(), cfg.kw_max_n.min(30))?;
    let n = g.n();
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0, |m, &w| m | 1 << w))
        .collect();
    let mut best = (u32::MAX, 0u32);
    for s in 0u32..(1u32 << n) {
        let size = s.count_ones();
        if size >= best.0 {
            continue;
        }
        let value = components(&adj, n, s)
            .iter()
            .map(|c| size + c.count_ones())
            .max()
            .unwrap_or(size);
        if value < best.0 {
            best = (value, s);
        }
    }
    let (value, s) = best;
    let sep = to_set(s);
    let comps = components(&adj, n, s);
    let bags: Vec<VertexSet> = if comps.is_empty() {
        vec![sep.clone()]
    } else {
        comps.iter().map(|&c| to_set(c | s)).collect()
    };
    let k = bags.len();
    let names = (0..k).map(|i| format!("c{i}")).collect();
    let edges = (0..k).flat_map(|a| (a + 1..k).map(move |b| (a, b)));
    let host = Graph::new(names, edges)?;
    let d = Decomposition::new(g.clone(), host, bags)?;
    if !check_gated_decomposition(&d).ok || d.width() != value as usize {
        return Err(Error::Internal(
            "separator witness is not a gated decomposition".into(),
        ));
    }
    Ok(WidthResult {
        parameter: "kw".into(),
        value: value as usize,
        witness: Witness::Separator {
            set: sep,
            decomposition: d,
        },
        method: "separator-sweep",
        elapsed: start.elapsed(),
    })
}
