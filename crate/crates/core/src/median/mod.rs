//! Median graphs: recognition and structure.
//!
//! Recognition is definitional: a connected graph is median iff every
//! vertex triple has exactly one vertex on all three pairwise geodesics.
//! Scanning all triples is cubic in `n` with a linear inner loop, which is
//! too slow for the hypercube hosts produced by clique-bag reduction, so for
//! larger graphs a positive answer comes from peripheral contraction (undo
//! one peripheral expansion at a time down to `K1`) and a negative answer is
//! always backed by an explicit bad triple.

mod embed;
mod expand;
mod gated;
mod theta;

pub use embed::{
    embed_tree_product, tree_dimension, Direction, EmbeddingDocument, TreeProductEmbedding,
    EMBEDDING_FORMAT,
};
pub use expand::{
    cliques, peripheral_expansion, random_median_graph, simplex_graph, SIMPLEX_BUDGET,
};
pub use gated::{gate, gated_violation, is_gated};
pub use theta::{
    crossing_graph, djokovic_winkler, max_crossing_family, peripheral_sets, theta_classes,
    PeripheralSet, Side, ThetaClass,
};

pub(crate) use expand::simplex_with_cliques;

use crate::graph::{Graph, VertexSet};

/// Largest graph checked by the full triple scan before recognition
/// switches to peripheral contraction.
const TRIPLE_SCAN_LIMIT: usize = 96;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MedianVerdict {
    Median,
    Empty,
    Disconnected,
    /// A triple with no median (`medians` empty) or with several.
    BadTriple {
        triple: [usize; 3],
        medians: Vec<usize>,
    },
}

impl MedianVerdict {
    pub fn is_median(&self) -> bool {
        matches!(self, MedianVerdict::Median)
    }

    pub fn describe(&self, g: &Graph) -> String {
        match self {
            MedianVerdict::Median => "median".into(),
            MedianVerdict::Empty => "empty graph".into(),
            MedianVerdict::Disconnected => "disconnected".into(),
            MedianVerdict::BadTriple { triple, medians } => {
                let t: Vec<&str> = triple.iter().map(|&v| g.name(v)).collect();
                if medians.is_empty() {
                    format!("triple {} {} {} has no median", t[0], t[1], t[2])
                } else {
                    let m: Vec<&str> = medians.iter().map(|&v| g.name(v)).collect();
                    format!(
                        "triple {} {} {} has {} medians: {}",
                        t[0],
                        t[1],
                        t[2],
                        m.len(),
                        m.join(" ")
                    )
                }
            }
        }
    }
}

/// Decides whether `g` is a median graph.
pub fn is_median(g: &Graph) -> MedianVerdict {
    if g.n() == 0 {
        return MedianVerdict::Empty;
    }
    if !g.is_connected() {
        return MedianVerdict::Disconnected;
    }
    if g.n() > TRIPLE_SCAN_LIMIT && is_median_by_contraction(g) {
        return MedianVerdict::Median;
    }
    is_median_by_triples(g)
}

/// The definitional check over all vertex triples.
pub fn is_median_by_triples(g: &Graph) -> MedianVerdict {
    if g.n() == 0 {
        return MedianVerdict::Empty;
    }
    if !g.is_connected() {
        return MedianVerdict::Disconnected;
    }
    let n = g.n();
    for u in 0..n {
        for v in u + 1..n {
            for w in v + 1..n {
                let medians = g.median_candidates(u, v, w);
                if medians.len() != 1 {
                    return MedianVerdict::BadTriple {
                        triple: [u, v, w],
                        medians,
                    };
                }
            }
        }
    }
    MedianVerdict::Median
}

/// Recognition by repeatedly removing a peripheral side.
///
/// If `W_ab` is peripheral, `F_ab` matches it isomorphically onto `U_ba`,
/// and both `W_ba` and `U_ba` are convex, then the graph is the peripheral
/// expansion of the median graph `G[W_ba]` (by induction) along a convex set,
/// hence median. Conversely every peripheral side of a median graph passes
/// all of these checks, so failing on the first peripheral side found is
/// conclusive, as is finding no peripheral side at all.
pub fn is_median_by_contraction(g: &Graph) -> bool {
    if g.n() == 0 || !g.is_connected() || !g.is_bipartite() {
        return false;
    }
    let mut alive: VertexSet = g.vertices();
    while alive.len() > 1 {
        match find_peripheral(g, &alive) {
            Some(Contraction::Remove(keep)) => alive = keep,
            Some(Contraction::Reject) | None => return false,
        }
    }
    true
}

enum Contraction {
    Remove(VertexSet),
    Reject,
}

fn find_peripheral(g: &Graph, alive: &VertexSet) -> Option<Contraction> {
    let mut seen = std::collections::HashSet::new();
    for &(a, b) in g.edges() {
        if !alive.contains(&a) || !alive.contains(&b) || seen.contains(&(a, b)) {
            continue;
        }
        let mut w_ab = VertexSet::new();
        let mut w_ba = VertexSet::new();
        for &x in alive {
            let (da, db) = (g.d(x, a), g.d(x, b));
            if da < db {
                w_ab.insert(x);
            } else if db < da {
                w_ba.insert(x);
            } else {
                return Some(Contraction::Reject);
            }
        }
        let mut cut = Vec::new();
        for &(x, y) in g.edges() {
            if w_ab.contains(&x) && w_ba.contains(&y) {
                cut.push((x, y));
            } else if w_ab.contains(&y) && w_ba.contains(&x) {
                cut.push((y, x));
            } else {
                continue;
            }
            seen.insert((x.min(y), x.max(y)));
        }
        for (side, other, flip) in [(&w_ab, &w_ba, false), (&w_ba, &w_ab, true)] {
            let matched: VertexSet = cut.iter().map(|&(x, y)| if flip { y } else { x }).collect();
            if matched.len() != side.len() {
                continue;
            }
            let pairs: Vec<(usize, usize)> = cut
                .iter()
                .map(|&(x, y)| if flip { (y, x) } else { (x, y) })
                .collect();
            return Some(check_peripheral(g, side, other, &pairs));
        }
    }
    None
}

fn check_peripheral(
    g: &Graph,
    side: &VertexSet,
    rest: &VertexSet,
    pairs: &[(usize, usize)],
) -> Contraction {
    let mut image = vec![usize::MAX; g.n()];
    let mut preimage = vec![usize::MAX; g.n()];
    for &(x, y) in pairs {
        if image[x] != usize::MAX || preimage[y] != usize::MAX {
            return Contraction::Reject;
        }
        image[x] = y;
        preimage[y] = x;
    }
    let side_vec: Vec<usize> = side.iter().copied().collect();
    for (i, &x) in side_vec.iter().enumerate() {
        for &y in &side_vec[i + 1..] {
            if g.has_edge(x, y) != g.has_edge(image[x], image[y]) {
                return Contraction::Reject;
            }
        }
    }
    let boundary: VertexSet = pairs.iter().map(|&(_, y)| y).collect();
    if !g.is_convex(rest) || !g.is_convex(&boundary) {
        return Contraction::Reject;
    }
    Contraction::Remove(rest.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, random_connected_graph, Family};

    fn fam(f: Family) -> Graph {
        generate(&f, 0).unwrap()
    }

    #[test]
    fn trees_are_median() {
        for seed in 0..10 {
            let t = generate(&Family::RandomTree(9), seed).unwrap();
            assert!(is_median(&t).is_median());
            assert!(is_median_by_contraction(&t));
        }
    }

    #[test]
    fn even_cycles_beyond_four_are_not() {
        let c6 = fam(Family::Cycle(6));
        assert!(!is_median(&c6).is_median());
        assert!(!is_median_by_contraction(&c6));
        assert!(is_median(&fam(Family::Cycle(4))).is_median());
    }

    #[test]
    fn k23_witness_comes_from_the_large_part() {
        let k23 = fam(Family::CompleteMultipartite(vec![2, 3]));
        match is_median(&k23) {
            MedianVerdict::BadTriple { triple, medians } => {
                assert!(medians.len() >= 2 || medians.is_empty());
                // the first bad triple found is the three degree-2 vertices
                assert_eq!(triple, [2, 3, 4]);
                assert_eq!(medians, vec![0, 1]);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn disconnected_and_empty() {
        let g = Graph::parse("a b\nc d").unwrap();
        assert_eq!(is_median(&g), MedianVerdict::Disconnected);
        assert_eq!(is_median(&Graph::empty(0)), MedianVerdict::Empty);
        assert!(is_median(&Graph::empty(1)).is_median());
    }

    #[test]
    fn hypercubes_and_grids() {
        assert!(is_median(&fam(Family::Hypercube(3))).is_median());
        assert!(is_median(&fam(Family::Grid(3, 4))).is_median());
        assert!(is_median_by_contraction(&fam(Family::Hypercube(4))));
        assert!(is_median_by_contraction(&fam(Family::Grid(3, 4))));
        // large enough to take the contraction route
        assert!(is_median(&fam(Family::Hypercube(7))).is_median());
    }

    #[test]
    fn odd_graphs_are_not() {
        for g in [
            fam(Family::Cycle(3)),
            fam(Family::Cycle(5)),
            fam(Family::Petersen),
            fam(Family::Complete(4)),
        ] {
            assert!(!is_median(&g).is_median());
            assert!(!is_median_by_contraction(&g));
        }
    }

    #[test]
    fn both_recognizers_agree_on_random_graphs() {
        for seed in 0..300 {
            let g = random_connected_graph(7, 0.15, seed);
            assert_eq!(
                is_median_by_triples(&g).is_median(),
                is_median_by_contraction(&g),
                "seed {seed}: {g:?}"
            );
        }
    }
}
