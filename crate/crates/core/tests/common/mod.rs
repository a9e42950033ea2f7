//! Brute-force reference computations that share no code with the library.

#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use mwkit::Graph;

pub type Set = BTreeSet<usize>;

pub fn distances(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in g.edges() {
        adj[u].push(v);
        adj[v].push(u);
    }
    (0..n)
        .map(|s| {
            let mut d = vec![usize::MAX; n];
            d[s] = 0;
            let mut q = VecDeque::from([s]);
            while let Some(x) = q.pop_front() {
                for &y in &adj[x] {
                    if d[y] == usize::MAX {
                        d[y] = d[x] + 1;
                        q.push_back(y);
                    }
                }
            }
            d
        })
        .collect()
}

pub fn interval(d: &[Vec<usize>], u: usize, v: usize) -> Set {
    (0..d.len())
        .filter(|&x| d[u][x] + d[x][v] == d[u][v])
        .collect()
}

pub fn is_convex(d: &[Vec<usize>], s: &Set) -> bool {
    s.iter()
        .all(|&u| s.iter().all(|&v| interval(d, u, v).is_subset(s)))
}

/// Closure under geodesic intervals.
pub fn hull(d: &[Vec<usize>], s: &Set) -> Set {
    let mut h = s.clone();
    loop {
        let mut next = h.clone();
        for &u in &h {
            for &v in &h {
                next.extend(interval(d, u, v));
            }
        }
        if next == h {
            return h;
        }
        h = next;
    }
}

/// Every triple has exactly one vertex on all three pairwise geodesics.
pub fn is_median(g: &Graph) -> bool {
    let d = distances(g);
    let n = g.n();
    if d.iter().flatten().any(|&x| x == usize::MAX) {
        return false;
    }
    (0..n).all(|a| {
        (a..n).all(|b| {
            (b..n).all(|c| {
                (0..n)
                    .filter(|&x| {
                        d[a][x] + d[x][b] == d[a][b]
                            && d[b][x] + d[x][c] == d[b][c]
                            && d[a][x] + d[x][c] == d[a][c]
                    })
                    .count()
                    == 1
            })
        })
    })
}

pub fn adjacency(g: &Graph) -> Vec<u32> {
    let mut adj = vec![0u32; g.n()];
    for &(u, v) in g.edges() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    adj
}

/// Every clique of `g`, as bitmasks.
pub fn all_cliques(g: &Graph) -> Vec<u32> {
    let adj = adjacency(g);
    (0u32..1 << g.n())
        .filter(|&s| (0..g.n()).all(|v| s >> v & 1 == 0 || s & !(1 << v) & !adj[v] == 0))
        .collect()
}

pub fn clique_number(g: &Graph) -> usize {
    all_cliques(g)
        .iter()
        .map(|s| s.count_ones())
        .max()
        .unwrap_or(0) as usize
}

/// Least number of colours over all maps into `0..k`.
pub fn chromatic_number(g: &Graph) -> usize {
    let n = g.n();
    for k in 1..=n.max(1) {
        let mut colors = vec![0usize; n];
        loop {
            if g.edges().iter().all(|&(u, v)| colors[u] != colors[v]) {
                return k;
            }
            let mut i = 0;
            while i < n && colors[i] == k - 1 {
                colors[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
            colors[i] += 1;
        }
    }
    n
}

/// Minimum over all elimination orderings of the largest eliminated
/// neighbourhood.
pub fn treewidth(g: &Graph) -> usize {
    let n = g.n();
    let mut order: Vec<usize> = (0..n).collect();
    let mut best = usize::MAX;
    loop {
        let mut adj = adjacency(g);
        let mut width = 0;
        let mut gone = 0u32;
        for &v in &order {
            let nb = adj[v] & !gone;
            width = width.max(nb.count_ones() as usize);
            for (u, a) in adj.iter_mut().enumerate() {
                if nb >> u & 1 == 1 {
                    *a |= nb & !(1 << u);
                }
            }
            gone |= 1 << v;
        }
        best = best.min(width);
        if !next_permutation(&mut order) {
            return best;
        }
    }
}

pub fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// `(a, b)` is a separation: sides cover, no edge between the two
/// exclusive parts.
pub fn is_separation(g: &Graph, a: &Set, b: &Set) -> bool {
    (0..g.n()).all(|v| a.contains(&v) || b.contains(&v))
        && g.edges().iter().all(|&(u, v)| {
            let cross = |x: usize, y: usize| {
                a.contains(&x) && !b.contains(&x) && b.contains(&y) && !a.contains(&y)
            };
            !cross(u, v) && !cross(v, u)
        })
}
