use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

use super::is_median;

/// Default cap on the number of cliques enumerated by [`simplex_graph`].
pub const SIMPLEX_BUDGET: usize = 4096;

/// Attaches a copy of `M[S]` to `M` by a perfect matching onto `S`. Copies
/// are named by appending primes until the name is fresh.
pub fn peripheral_expansion(m: &Graph, s: &VertexSet) -> Result<Graph> {
    let verdict = is_median(m);
    if !verdict.is_median() {
        return Err(Error::NotMedian(verdict.describe(m)));
    }
    check_expansion_set(m, s)?;
    let mut taken: std::collections::HashSet<String> = m.names().iter().cloned().collect();
    Ok(expand_unchecked(m, s, |v| {
        let mut name = format!("{}'", m.name(v));
        while taken.contains(&name) {
            name.push('\'');
        }
        taken.insert(name.clone());
        name
    }))
}

fn check_expansion_set(m: &Graph, s: &VertexSet) -> Result<()> {
    if s.is_empty() {
        return Err(Error::NotConvex("expansion set is empty".into()));
    }
    if let Some(&v) = s.iter().find(|&&v| v >= m.n()) {
        return Err(Error::VertexOutOfRange(v));
    }
    if let Some((u, v, x)) = m.convexity_violation(s) {
        return Err(Error::NotConvex(format!(
            "{} lies between {} and {}",
            m.name(x),
            m.name(u),
            m.name(v)
        )));
    }
    Ok(())
}

pub(crate) fn expand_unchecked(
    m: &Graph,
    s: &VertexSet,
    mut copy_name: impl FnMut(usize) -> String,
) -> Graph {
    let n = m.n();
    let copy: HashMap<usize, usize> = s.iter().enumerate().map(|(i, &v)| (v, n + i)).collect();
    let mut names = m.names().to_vec();
    names.extend(s.iter().map(|&v| copy_name(v)));
    let mut edges = m.edges().to_vec();
    for &(u, v) in m.edges() {
        if let (Some(&cu), Some(&cv)) = (copy.get(&u), copy.get(&v)) {
            edges.push((cu, cv));
        }
    }
    edges.extend(s.iter().map(|&v| (v, copy[&v])));
    Graph::new(names, edges).expect("expansion keeps the graph simple")
}

/// A median graph grown from `K1` by `steps` peripheral expansions along
/// convex hulls of one to three random vertices. Vertices are named
/// `0, 1, 2, …` in creation order.
pub fn random_median_graph(steps: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut m = Graph::new(vec!["0".into()], []).expect("K1");
    for _ in 0..steps {
        let k = rng.gen_range(1..=3usize.min(m.n()));
        let picks: VertexSet = (0..k).map(|_| rng.gen_range(0..m.n())).collect();
        let hull = m.convex_hull(&picks);
        let mut next = m.n();
        m = expand_unchecked(&m, &hull, |_| {
            next += 1;
            (next - 1).to_string()
        });
    }
    m
}

/// All cliques of `g` including the empty one, ordered by size and then by
/// sorted vertex indices. Fails once more than `budget` are found.
pub fn cliques(g: &Graph, budget: usize) -> Result<Vec<VertexSet>> {
    let mut out = vec![VertexSet::new()];
    let mut frontier = vec![VertexSet::new()];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for c in &frontier {
            let start = c.iter().next_back().map_or(0, |&v| v + 1);
            for v in start..g.n() {
                if c.iter().all(|&u| g.has_edge(u, v)) {
                    let mut bigger = c.clone();
                    bigger.insert(v);
                    next.push(bigger);
                }
            }
        }
        out.extend(next.iter().cloned());
        if out.len() > budget {
            return Err(Error::BoundExceeded {
                oracle: "simplex_graph",
                n: out.len(),
                bound: budget,
            });
        }
        frontier = next;
    }
    Ok(out)
}

pub(crate) fn clique_name(g: &Graph, c: &VertexSet) -> String {
    let inner: Vec<&str> = c.iter().map(|&v| g.name(v)).collect();
    format!("{{{}}}", inner.join(","))
}

/// The graph of all cliques of `g`, adjacent when they differ in one vertex.
/// Nodes are named like `{}` and `{a,b}`.
pub fn simplex_graph(g: &Graph, budget: usize) -> Result<Graph> {
    Ok(simplex_with_cliques(g, budget)?.0)
}

pub(crate) fn simplex_with_cliques(g: &Graph, budget: usize) -> Result<(Graph, Vec<VertexSet>)> {
    let all = cliques(g, budget)?;
    let index: HashMap<&VertexSet, usize> = all.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let mut edges = Vec::new();
    for (i, c) in all.iter().enumerate() {
        for &v in c {
            let mut smaller = c.clone();
            smaller.remove(&v);
            edges.push((index[&smaller], i));
        }
    }
    let names = all.iter().map(|c| clique_name(g, c)).collect();
    let graph = Graph::new(names, edges)?;
    Ok((graph, all))
}
