use std::time::Instant;

use super::{check_bound, check_nonempty, OracleConfig, WidthResult, Witness};
use crate::decomp::{validate, Decomposition};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Bags `{v} ∪ N⁺(v)` of the elimination game played in `order`, indexed
/// by vertex, where `N⁺(v)` are the neighbours of `v` in the filled graph
/// eliminated after it.
pub(crate) fn elimination_bags(g: &Graph, order: &[usize]) -> Vec<VertexSet> {
    let n = g.n();
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut adj: Vec<VertexSet> = (0..n)
        .map(|v| g.neighbors(v).iter().copied().collect())
        .collect();
    let mut bags = vec![VertexSet::new(); n];
    for &v in order {
        let later: Vec<usize> = adj[v]
            .iter()
            .copied()
            .filter(|&w| pos[w] > pos[v])
            .collect();
        for (i, &x) in later.iter().enumerate() {
            for &y in &later[i + 1..] {
                adj[x].insert(y);
                adj[y].insert(x);
            }
        }
        let mut bag: VertexSet = later.into_iter().collect();
        bag.insert(v);
        bags[v] = bag;
    }
    bags
}

/// Maximal cliques of the chordal completion given by `order`, sorted.
pub fn fill_in_cliques(g: &Graph, order: &[usize]) -> Vec<VertexSet> {
    let bags = elimination_bags(g, order);
    let mut maximal: Vec<VertexSet> = bags
        .iter()
        .filter(|b| !bags.iter().any(|c| c.len() > b.len() && b.is_subset(c)))
        .cloned()
        .collect();
    maximal.sort();
    maximal.dedup();
    maximal
}

/// Clique tree of the completion given by `order`: the elimination tree
/// with every bag that lies inside a neighbouring bag contracted away.
/// Elimination trees of different components are chained root to root.
pub fn clique_tree(g: &Graph, order: &[usize]) -> Decomposition {
    let n = g.n();
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut bags = elimination_bags(g, order);
    let mut nbrs = vec![VertexSet::new(); n];
    let mut last_root = None;
    for &v in order {
        let parent = bags[v]
            .iter()
            .copied()
            .filter(|&w| w != v)
            .min_by_key(|&w| pos[w]);
        let other = match parent {
            Some(p) => Some(p),
            None => last_root.replace(v),
        };
        if let Some(p) = other {
            nbrs[v].insert(p);
            nbrs[p].insert(v);
        }
    }
    let mut alive = vec![true; n];
    loop {
        let found = (0..n).filter(|&s| alive[s]).find_map(|s| {
            nbrs[s]
                .iter()
                .copied()
                .find(|&t| bags[s].is_subset(&bags[t]))
                .map(|t| (s, t))
        });
        let Some((s, t)) = found else { break };
        alive[s] = false;
        for x in std::mem::take(&mut nbrs[s]) {
            nbrs[x].remove(&s);
            if x != t {
                nbrs[x].insert(t);
                nbrs[t].insert(x);
            }
        }
        bags[s].clear();
    }
    let kept: Vec<usize> = order.iter().copied().filter(|&v| alive[v]).collect();
    let mut index = vec![usize::MAX; n];
    for (i, &v) in kept.iter().enumerate() {
        index[v] = i;
    }
    let names = (0..kept.len()).map(|i| format!("t{i}")).collect();
    let edges: Vec<(usize, usize)> = kept
        .iter()
        .flat_map(|&s| {
            nbrs[s]
                .iter()
                .filter(move |&&t| s < t)
                .map(move |&t| (s, t))
        })
        .map(|(s, t)| (index[s], index[t]))
        .collect();
    let host = Graph::new(names, edges).expect("tree on fresh names");
    let tree_bags = kept.iter().map(|&v| bags[v].clone()).collect();
    Decomposition::new(g.clone(), host, tree_bags).expect("bags of subject vertices")
}

fn bits(g: &Graph) -> Vec<u32> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0, |m, &w| m | 1 << w))
        .collect()
}

/// Vertices outside `s ∪ {v}` reachable from `v` through `s`.
fn q_set(adj: &[u32], s: u32, v: usize) -> u32 {
    let mut comp = 1u32 << v;
    loop {
        let mut grown = comp;
        let mut rest = comp & s | 1 << v;
        while rest != 0 {
            let x = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            grown |= adj[x] & (s | 1 << v);
        }
        if grown == comp {
            break;
        }
        comp = grown;
    }
    let mut out = 0;
    let mut rest = comp;
    while rest != 0 {
        let x = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        out |= adj[x];
    }
    out & !(s | 1 << v)
}

/// An optimal elimination ordering and its width (largest `N⁺`), by dynamic
/// programming over the set of vertices eliminated first.
pub(crate) fn optimal_ordering(g: &Graph) -> (usize, Vec<usize>) {
    let n = g.n();
    let adj = bits(g);
    let full: u32 = if n == 32 { u32::MAX } else { (1 << n) - 1 };
    let mut best = vec![i8::MAX; 1 << n];
    let mut choice = vec![0u8; 1 << n];
    best[0] = -1;
    for s in 1..=full {
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let before = s & !(1 << v);
            let q = q_set(&adj, before, v).count_ones() as i8;
            let w = best[before as usize].max(q);
            if w < best[s as usize] {
                best[s as usize] = w;
                choice[s as usize] = v as u8;
            }
        }
    }
    let mut order = Vec::with_capacity(n);
    let mut s = full;
    while s != 0 {
        let v = choice[s as usize] as usize;
        order.push(v);
        s &= !(1 << v);
    }
    order.reverse();
    (best[full as usize].max(0) as usize, order)
}

/// Exact treewidth with a clique-tree witness.
pub fn treewidth_exact(g: &Graph, cfg: &OracleConfig) -> Result<WidthResult> {
    let start = Instant::now();
    check_nonempty(g)?;
    check_bound("treewidth", g.n(), cfg.treewidth_max_n.min(24))?;
    let (tw, order) = optimal_ordering(g);
    let d = clique_tree(g, &order);
    let report = validate(&d);
    if !report.is_valid() || !d.host.is_tree() || report.width != tw + 1 {
        return Err(Error::Internal(format!(
            "clique tree of width {} does not certify treewidth {tw}",
            report.width
        )));
    }
    Ok(WidthResult {
        parameter: "tw".into(),
        value: tw,
        witness: Witness::Decomposition(d),
        method: "elimination-subset-dp",
        elapsed: start.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, random_graph, Family};

    fn cfg() -> OracleConfig {
        OracleConfig::default().with_max_n(10)
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        fn go(prefix: &mut Vec<usize>, left: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if left.is_empty() {
                out.push(prefix.clone());
                return;
            }
            for i in 0..left.len() {
                let v = left.remove(i);
                prefix.push(v);
                go(prefix, left, out);
                prefix.pop();
                left.insert(i, v);
            }
        }
        let mut out = Vec::new();
        go(&mut Vec::new(), &mut (0..n).collect(), &mut out);
        out
    }

    /// Minimum over all orderings of the largest elimination bag, minus one.
    fn brute_force_tw(g: &Graph) -> usize {
        permutations(g.n())
            .iter()
            .map(|o| {
                elimination_bags(g, o)
                    .iter()
                    .map(VertexSet::len)
                    .max()
                    .unwrap()
                    - 1
            })
            .min()
            .unwrap()
    }

    #[test]
    fn dp_matches_ordering_enumeration() {
        for seed in 0..60 {
            let g = random_graph(6, 0.45, seed);
            assert_eq!(
                treewidth_exact(&g, &cfg()).unwrap().value,
                brute_force_tw(&g),
                "{g:?}"
            );
        }
    }

    #[test]
    fn known_values() {
        let tw = |f: Family| {
            treewidth_exact(&generate(&f, 2).unwrap(), &cfg())
                .unwrap()
                .value
        };
        assert_eq!(tw(Family::RandomTree(8)), 1);
        assert_eq!(tw(Family::Path(5)), 1);
        for n in 1..=6 {
            assert_eq!(tw(Family::Complete(n)), n - 1);
        }
        for n in 4..=8 {
            assert_eq!(tw(Family::Cycle(n)), 2);
        }
        assert_eq!(tw(Family::Grid(3, 3)), 3);
        assert_eq!(tw(Family::Petersen), 4);
        assert_eq!(tw(Family::CompleteMultipartite(vec![2, 2, 2])), 4);
    }

    #[test]
    fn witness_is_a_clique_tree() {
        let g = generate(&Family::Grid(2, 4), 0).unwrap();
        let r = treewidth_exact(&g, &cfg()).unwrap();
        let d = r.witness.decomposition().unwrap();
        for a in 0..d.host.n() {
            assert!(d
                .host
                .neighbors(a)
                .iter()
                .all(|&b| !d.bags[a].is_subset(&d.bags[b])));
        }
    }

    #[test]
    fn disconnected_graphs_get_one_tree() {
        let g = Graph::parse("a b\nc d\nv e").unwrap();
        let r = treewidth_exact(&g, &cfg()).unwrap();
        assert_eq!(r.value, 1);
        assert!(r.witness.decomposition().unwrap().host.is_tree());
    }

    #[test]
    fn bound_is_enforced() {
        let g = generate(&Family::Path(9), 0).unwrap();
        assert!(matches!(
            treewidth_exact(&g, &OracleConfig::default()),
            Err(Error::BoundExceeded { n: 9, bound: 8, .. })
        ));
    }

    #[test]
    fn fill_in_cliques_of_a_cycle() {
        let g = generate(&Family::Cycle(4), 0).unwrap();
        let cliques = fill_in_cliques(&g, &[0, 1, 2, 3]);
        assert_eq!(cliques.len(), 2);
        assert!(cliques.iter().all(|c| c.len() == 3));
    }
}
