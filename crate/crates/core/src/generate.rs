//! Deterministic graph families.
//!
//! Vertex names per family:
//!
//! | family | names |
//! |---|---|
//! | `path n`, `cycle n`, `complete n`, `random_tree n` | `1..=n` |
//! | `grid m n` | `r,c` with `1 <= r <= m`, `1 <= c <= n` |
//! | `hypercube i` | bit strings of length `i` |
//! | `complete_multipartite n1 .. nk` | `p.q`: member `q` of part `p`, both 1-based |
//! | `petersen` | outer cycle `o0..o4`, inner pentagram `i0..i4` |

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Grid(usize, usize),
    Hypercube(usize),
    CompleteMultipartite(Vec<usize>),
    RandomTree(usize),
    Petersen,
}

impl Family {
    /// Builds a family from its name and integer parameters.
    pub fn from_parts(name: &str, params: &[usize]) -> Result<Family> {
        let arity = |k: usize| -> Result<()> {
            if params.len() != k {
                return Err(Error::InvalidParams(format!(
                    "{name} takes {k} parameter(s), got {}",
                    params.len()
                )));
            }
            Ok(())
        };
        let family = match name {
            "path" => {
                arity(1)?;
                Family::Path(params[0])
            }
            "cycle" => {
                arity(1)?;
                Family::Cycle(params[0])
            }
            "complete" => {
                arity(1)?;
                Family::Complete(params[0])
            }
            "grid" => {
                arity(2)?;
                Family::Grid(params[0], params[1])
            }
            "hypercube" => {
                arity(1)?;
                Family::Hypercube(params[0])
            }
            "complete_multipartite" => Family::CompleteMultipartite(params.to_vec()),
            "random_tree" => {
                arity(1)?;
                Family::RandomTree(params[0])
            }
            "petersen" => {
                arity(0)?;
                Family::Petersen
            }
            other => return Err(Error::InvalidParams(format!("unknown family {other:?}"))),
        };
        Ok(family)
    }

    pub fn is_randomized(&self) -> bool {
        matches!(self, Family::RandomTree(_))
    }
}

impl FromStr for Family {
    type Err = Error;

    /// Parses `"name p1 p2 ..."`, also accepting commas or `x` between
    /// parameters (`grid 3x4`, `complete_multipartite 2,2,2`).
    fn from_str(s: &str) -> Result<Family> {
        let mut parts = s.split_whitespace();
        let name = parts
            .next()
            .ok_or_else(|| Error::InvalidParams("empty family".into()))?;
        let params = parts
            .flat_map(|p| p.split([',', 'x']))
            .filter(|p| !p.is_empty())
            .map(|p| {
                p.parse::<usize>()
                    .map_err(|_| Error::InvalidParams(format!("bad parameter {p:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Family::from_parts(name, &params)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Path(n) => write!(f, "path {n}"),
            Family::Cycle(n) => write!(f, "cycle {n}"),
            Family::Complete(n) => write!(f, "complete {n}"),
            Family::Grid(m, n) => write!(f, "grid {m} {n}"),
            Family::Hypercube(i) => write!(f, "hypercube {i}"),
            Family::CompleteMultipartite(parts) => {
                write!(f, "complete_multipartite")?;
                for p in parts {
                    write!(f, " {p}")?;
                }
                Ok(())
            }
            Family::RandomTree(n) => write!(f, "random_tree {n}"),
            Family::Petersen => write!(f, "petersen"),
        }
    }
}

fn numbered(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

fn need(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParams(msg.to_string()))
    }
}

/// Generates a member of `family`; `seed` only matters for random families.
pub fn generate(family: &Family, seed: u64) -> Result<Graph> {
    match *family {
        Family::Path(n) => {
            need(n >= 1, "path needs n >= 1")?;
            Graph::new(numbered(n), (1..n).map(|i| (i - 1, i)))
        }
        Family::Cycle(n) => {
            need(n >= 3, "cycle needs n >= 3")?;
            Graph::new(numbered(n), (0..n).map(|i| (i, (i + 1) % n)))
        }
        Family::Complete(n) => {
            need(n >= 1, "complete needs n >= 1")?;
            Graph::new(
                numbered(n),
                (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))),
            )
        }
        Family::Grid(rows, cols) => {
            need(rows >= 1 && cols >= 1, "grid needs positive dimensions")?;
            let names = (1..=rows)
                .flat_map(|r| (1..=cols).map(move |c| format!("{r},{c}")))
                .collect();
            let at = |r: usize, c: usize| r * cols + c;
            let mut edges = Vec::new();
            for r in 0..rows {
                for c in 0..cols {
                    if c + 1 < cols {
                        edges.push((at(r, c), at(r, c + 1)));
                    }
                    if r + 1 < rows {
                        edges.push((at(r, c), at(r + 1, c)));
                    }
                }
            }
            Graph::new(names, edges)
        }
        Family::Hypercube(dim) => {
            need((1..=14).contains(&dim), "hypercube needs 1 <= i <= 14")?;
            let n = 1usize << dim;
            let names = (0..n).map(|x| format!("{x:0dim$b}")).collect();
            let edges = (0..n).flat_map(|x| {
                (0..dim)
                    .map(move |b| (x, x ^ (1 << b)))
                    .filter(|&(x, y)| x < y)
            });
            Graph::new(names, edges)
        }
        Family::CompleteMultipartite(ref parts) => {
            need(
                !parts.is_empty() && parts.iter().all(|&p| p >= 1),
                "complete_multipartite needs nonempty parts",
            )?;
            let mut names = Vec::new();
            let mut part_of = Vec::new();
            for (p, &size) in parts.iter().enumerate() {
                for q in 1..=size {
                    names.push(format!("{}.{q}", p + 1));
                    part_of.push(p);
                }
            }
            let n = names.len();
            let part_of = &part_of;
            let edges = (0..n)
                .flat_map(move |u| (u + 1..n).map(move |v| (u, v)))
                .filter(|&(u, v)| part_of[u] != part_of[v])
                .collect::<Vec<_>>();
            Graph::new(names, edges)
        }
        Family::RandomTree(n) => {
            need(n >= 1, "random_tree needs n >= 1")?;
            Graph::new(numbered(n), random_tree_edges(n, seed))
        }
        Family::Petersen => {
            let names = (0..5)
                .map(|i| format!("o{i}"))
                .chain((0..5).map(|i| format!("i{i}")))
                .collect();
            let mut edges = Vec::new();
            for i in 0..5 {
                edges.push((i, (i + 1) % 5));
                edges.push((i, i + 5));
                edges.push((5 + i, 5 + (i + 2) % 5));
            }
            Graph::new(names, edges)
        }
    }
}

/// Uniform labelled tree via a random Prüfer sequence.
fn random_tree_edges(n: usize, seed: u64) -> Vec<(usize, usize)> {
    if n < 2 {
        return Vec::new();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &c in &code {
        degree[c] += 1;
    }
    let mut leaves: BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &c in &code {
        let leaf = leaves.pop_first().expect("Prüfer decoding keeps a leaf");
        edges.push((leaf, c));
        degree[c] -= 1;
        if degree[c] == 1 {
            leaves.insert(c);
        }
    }
    let last: Vec<usize> = leaves.into_iter().collect();
    edges.push((last[0], last[1]));
    edges
}

/// Random graph on `n` vertices named `0..n` with independent edge
/// probability `p`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new((0..n).map(|i| i.to_string()).collect(), edges).expect("valid random graph")
}

/// Random connected graph: a random spanning tree plus extra edges with
/// probability `p`, vertex labels shuffled.
pub fn random_connected_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut rng);
    let mut edges = BTreeSet::new();
    for (u, v) in random_tree_edges(n, rng.gen()) {
        edges.insert((perm[u].min(perm[v]), perm[u].max(perm[v])));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.insert((u, v));
            }
        }
    }
    Graph::new((0..n).map(|i| i.to_string()).collect(), edges).expect("valid random graph")
}

/// All connected graphs on `n` vertices up to isomorphism, vertices named
/// `0..n`, in canonical-code order. Practical for `n <= 7`.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    all_graph_codes(n)
        .into_iter()
        .map(|adj| graph_from_masks(&adj))
        .filter(|g| g.is_connected())
        .collect()
}

fn graph_from_masks(adj: &[u32]) -> Graph {
    let n = adj.len();
    let edges = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| adj[u] >> v & 1 == 1);
    Graph::new((0..n).map(|i| i.to_string()).collect(), edges).expect("valid graph")
}

/// Canonical adjacency masks of all graphs on `n` vertices, built by
/// extending each graph on `n - 1` vertices with every neighbourhood of a
/// new vertex (every graph arises by deleting some vertex).
fn all_graph_codes(n: usize) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut seen = BTreeSet::new();
    for base in all_graph_codes(n - 1) {
        for nbhd in 0u32..(1 << (n - 1)) {
            let mut adj = base.clone();
            adj.push(nbhd);
            for (u, mask) in adj.iter_mut().enumerate().take(n - 1) {
                if nbhd >> u & 1 == 1 {
                    *mask |= 1 << (n - 1);
                }
            }
            seen.insert(canonical_form(&adj));
        }
    }
    seen.into_iter().map(|code| decode(n, code)).collect()
}

fn pair_bit(n: usize, i: usize, j: usize) -> u64 {
    // upper-triangle position of (i, j), i < j, most significant first
    let before: usize = (0..i).map(|r| n - 1 - r).sum();
    let total = n * (n - 1) / 2;
    1 << (total - 1 - (before + (j - i - 1)))
}

fn decode(n: usize, code: u64) -> Vec<u32> {
    let mut adj = vec![0u32; n];
    for i in 0..n {
        for j in i + 1..n {
            if code & pair_bit(n, i, j) != 0 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
    }
    adj
}

/// Minimum upper-triangle code over all relabellings that respect a
/// degree-based vertex invariant, which makes the minimum an isomorphism
/// invariant.
fn canonical_form(adj: &[u32]) -> u64 {
    let n = adj.len();
    let deg: Vec<u32> = adj.iter().map(|m| m.count_ones()).collect();
    let invariant: Vec<(u32, Vec<u32>)> = (0..n)
        .map(|v| {
            let mut nd: Vec<u32> = (0..n)
                .filter(|&w| adj[v] >> w & 1 == 1)
                .map(|w| deg[w])
                .collect();
            nd.sort_unstable();
            (deg[v], nd)
        })
        .collect();
    let mut keys: Vec<&(u32, Vec<u32>)> = invariant.iter().collect();
    keys.sort();
    keys.dedup();
    let cells: Vec<Vec<usize>> = keys
        .iter()
        .map(|k| (0..n).filter(|&v| &invariant[v] == *k).collect())
        .collect();
    let mut best = u64::MAX;
    let mut perm = Vec::with_capacity(n);
    let mut used = vec![false; n];
    search_labels(adj, &cells, 0, &mut perm, &mut used, &mut best);
    best
}

fn search_labels(
    adj: &[u32],
    cells: &[Vec<usize>],
    cell: usize,
    perm: &mut Vec<usize>,
    used: &mut [bool],
    best: &mut u64,
) {
    let n = adj.len();
    if perm.len() == n {
        let mut code = 0u64;
        for i in 0..n {
            for j in i + 1..n {
                if adj[perm[i]] >> perm[j] & 1 == 1 {
                    code |= pair_bit(n, i, j);
                }
            }
        }
        *best = (*best).min(code);
        return;
    }
    let members = &cells[cell];
    let placed_in_cell = members.iter().filter(|&&v| used[v]).count();
    let next_cell = if placed_in_cell + 1 == members.len() {
        cell + 1
    } else {
        cell
    };
    for &v in members {
        if !used[v] {
            used[v] = true;
            perm.push(v);
            search_labels(adj, cells, next_cell, perm, used, best);
            perm.pop();
            used[v] = false;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexSet;

    #[test]
    fn hypercube_two_is_a_square() {
        let q2 = generate(&Family::Hypercube(2), 0).unwrap();
        assert_eq!((q2.n(), q2.m()), (4, 4));
        assert!((0..4).all(|v| q2.degree(v) == 2));
        assert!(q2.is_connected());
    }

    #[test]
    fn octahedron() {
        let g = generate(&Family::CompleteMultipartite(vec![2, 2, 2]), 0).unwrap();
        assert_eq!((g.n(), g.m()), (6, 12));
    }

    #[test]
    fn random_tree_is_a_tree() {
        for seed in 0..20 {
            let t = generate(&Family::RandomTree(7), seed).unwrap();
            assert_eq!((t.n(), t.m()), (7, 6));
            assert!(t.is_tree());
        }
        let a = generate(&Family::RandomTree(7), 1).unwrap();
        let b = generate(&Family::RandomTree(7), 1).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn invalid_params() {
        assert!(generate(&Family::Cycle(2), 0).is_err());
        assert!(generate(&Family::Path(0), 0).is_err());
        assert!(Family::from_parts("cycle", &[]).is_err());
        assert!("moebius 3".parse::<Family>().is_err());
    }

    #[test]
    fn family_parsing() {
        assert_eq!("grid 3x4".parse::<Family>().unwrap(), Family::Grid(3, 4));
        assert_eq!(
            "complete_multipartite 2,2,2".parse::<Family>().unwrap(),
            Family::CompleteMultipartite(vec![2, 2, 2])
        );
        assert_eq!("petersen".parse::<Family>().unwrap(), Family::Petersen);
        let f = Family::CompleteMultipartite(vec![1, 3]);
        assert_eq!(f.to_string().parse::<Family>().unwrap(), f);
    }

    #[test]
    fn petersen_shape() {
        let g = generate(&Family::Petersen, 0).unwrap();
        assert_eq!((g.n(), g.m()), (10, 15));
        assert!((0..10).all(|v| g.degree(v) == 3));
    }

    #[test]
    fn grid_matches_names() {
        let g = generate(&Family::Grid(2, 3), 0).unwrap();
        assert_eq!((g.n(), g.m()), (6, 7));
        assert!(g.has_edge(g.index_of("1,1").unwrap(), g.index_of("2,1").unwrap()));
    }

    #[test]
    fn connected_graph_counts() {
        // OEIS A001349
        let counts: Vec<usize> = (1..=6).map(|n| connected_graphs(n).len()).collect();
        assert_eq!(counts, [1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn all_graph_counts() {
        // OEIS A000088
        let counts: Vec<usize> = (1..=5).map(|n| all_graph_codes(n).len()).collect();
        assert_eq!(counts, [1, 2, 4, 11, 34]);
    }

    #[test]
    fn random_connected_graphs_are_connected() {
        for seed in 0..10 {
            let g = random_connected_graph(8, 0.2, seed);
            assert!(g.is_connected());
            assert!(g.components_without(&VertexSet::new()).len() == 1);
        }
    }
}
