use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;

use super::elimination::{clique_tree, fill_in_cliques};
use super::{check_bound, check_nonempty, OracleConfig, WidthResult, Witness};
use crate::build::product_decomposition;
use crate::decomp::validate;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::solve::clique_number;

/// A family of maximal cliques of one completion, as bitmasks, with the
/// first ordering (in lexicographic order) that produces it.
struct Completion {
    cliques: Vec<u32>,
    order: Vec<usize>,
}

fn mask(set: &VertexSet) -> u32 {
    set.iter().fold(0, |m, &v| m | 1 << v)
}

/// Every clique of `a` lies inside some clique of `b`.
fn refines(a: &[u32], b: &[u32]) -> bool {
    a.iter().all(|&x| b.iter().any(|&y| x & !y == 0))
}

/// Distinct completions from all orderings, minus those dominated by a
/// refinement, in order of first appearance.
fn completions(g: &Graph) -> Vec<Completion> {
    let n = g.n();
    let mut seen: BTreeMap<Vec<u32>, usize> = BTreeMap::new();
    let mut all: Vec<Completion> = Vec::new();
    let mut order: Vec<usize> = (0..n).collect();
    loop {
        let mut cliques: Vec<u32> = fill_in_cliques(g, &order).iter().map(mask).collect();
        cliques.sort_unstable();
        if !seen.contains_key(&cliques) {
            seen.insert(cliques.clone(), all.len());
            all.push(Completion {
                cliques,
                order: order.clone(),
            });
        }
        if !next_permutation(&mut order) {
            break;
        }
    }
    let keep: Vec<bool> = (0..all.len())
        .map(|i| !(0..all.len()).any(|j| j != i && refines(&all[j].cliques, &all[i].cliques)))
        .collect();
    all.into_iter()
        .zip(keep)
        .filter_map(|(c, k)| k.then_some(c))
        .collect()
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Largest intersection over choices of one clique per family, stopping
/// early once `cap` is reached.
fn tuple_value(families: &[&[u32]], acc: u32, cap: u32) -> u32 {
    match families.split_first() {
        None => acc.count_ones(),
        Some((first, rest)) => {
            let mut best = 0;
            for &c in *first {
                let meet = acc & c;
                if meet.count_ones() <= best {
                    continue;
                }
                best = best.max(tuple_value(rest, meet, cap));
                if best >= cap {
                    break;
                }
            }
            best
        }
    }
}

/// Nondecreasing index tuples of length `i` over `0..k` whose first entry
/// is `first`, in lexicographic order.
fn tuples_from(first: usize, k: usize, i: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = vec![first; i];
    loop {
        out.push(cur.clone());
        let Some(pos) = (1..i).rev().find(|&p| cur[p] + 1 < k) else {
            break;
        };
        cur[pos] += 1;
        for q in pos + 1..i {
            cur[q] = cur[pos];
        }
    }
    out
}

/// Best tuple among those starting with `first`: lowest value, then
/// lexicographically least. Stops at `floor`.
fn best_from(first: usize, comps: &[Completion], i: usize, floor: u32) -> (u32, Vec<usize>) {
    let mut best = (u32::MAX, Vec::new());
    for t in tuples_from(first, comps.len(), i) {
        let families: Vec<&[u32]> = t.iter().map(|&j| comps[j].cliques.as_slice()).collect();
        let v = tuple_value(&families, u32::MAX, best.0);
        if v < best.0 {
            best = (v, t);
            if v <= floor {
                break;
            }
        }
    }
    best
}

/// Exact `i`-medianwidth: the least, over `i`-tuples of chordal
/// completions, of the largest intersection of one maximal clique from
/// each. The witness is the product of the chosen clique trees.
pub fn mw_i_exact(g: &Graph, i: usize, cfg: &OracleConfig) -> Result<WidthResult> {
    let start = Instant::now();
    if i == 0 {
        return Err(Error::InvalidParams("i must be at least 1".into()));
    }
    check_nonempty(g)?;
    let bound = if i <= 2 {
        cfg.mwi_max_n
    } else {
        cfg.mwi_high_max_n
    };
    check_bound("mw_i", g.n(), bound.min(10))?;
    let comps = completions(g);
    let floor = clique_number(g).0 as u32;
    let run = || -> Vec<(u32, Vec<usize>)> {
        let mut found = Vec::new();
        for first in 0..comps.len() {
            let b = best_from(first, &comps, i, floor);
            let hit = b.0 <= floor;
            found.push(b);
            if hit {
                break;
            }
        }
        found
    };
    let results = if cfg.threads > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.threads)
            .build()
            .map_err(|e| Error::Internal(format!("thread pool: {e}")))?;
        pool.install(|| {
            (0..comps.len())
                .into_par_iter()
                .map(|first| best_from(first, &comps, i, floor))
                .collect::<Vec<_>>()
        })
    } else {
        run()
    };
    let (value, tuple) = results
        .into_iter()
        .min()
        .ok_or_else(|| Error::Internal("no completions".into()))?;
    let trees: Vec<_> = tuple
        .iter()
        .map(|&j| clique_tree(g, &comps[j].order))
        .collect();
    let d = product_decomposition(&trees)?;
    let report = validate(&d);
    if !report.is_valid()
        || report.width != value as usize
        || report.host_tree_dimension.is_none_or(|k| k > i)
    {
        return Err(Error::Internal(format!(
            "product witness of width {} does not certify mw_{i} = {value}",
            report.width
        )));
    }
    Ok(WidthResult {
        parameter: format!("mw_{i}"),
        value: value as usize,
        witness: Witness::Decomposition(d),
        method: "completion-tuple-search",
        elapsed: start.elapsed(),
    })
}
