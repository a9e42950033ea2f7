use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::solve::clique_number;

use super::is_median;

/// One of the two halfspaces of a Θ-class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    /// `W_ab`, the side of the representative's lower endpoint.
    Ab,
    /// `W_ba`.
    Ba,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::Ab => Side::Ba,
            Side::Ba => Side::Ab,
        }
    }
}

/// A Djokovic–Winkler class `F_ab` of a median graph with its halfspaces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaClass {
    /// Least edge of the class; `rep.0 < rep.1` and `rep.0` lies in `w_ab`.
    pub rep: (usize, usize),
    /// Class edges oriented `(x, y)` with `x` in `w_ab` and `y` in `w_ba`.
    pub edges: Vec<(usize, usize)>,
    pub w_ab: VertexSet,
    pub w_ba: VertexSet,
}

impl ThetaClass {
    pub fn w(&self, side: Side) -> &VertexSet {
        match side {
            Side::Ab => &self.w_ab,
            Side::Ba => &self.w_ba,
        }
    }

    /// The boundary `U` of a side: its endpoints of class edges.
    pub fn u(&self, side: Side) -> VertexSet {
        self.edges
            .iter()
            .map(|&(x, y)| if side == Side::Ab { x } else { y })
            .collect()
    }

    pub fn u_ab(&self) -> VertexSet {
        self.u(Side::Ab)
    }

    pub fn u_ba(&self) -> VertexSet {
        self.u(Side::Ba)
    }

    pub fn is_peripheral(&self, side: Side) -> bool {
        self.u(side).len() == self.w(side).len()
    }

    /// Two classes cross when all four halfspace intersections are nonempty.
    pub fn crosses(&self, other: &ThetaClass) -> bool {
        [&self.w_ab, &self.w_ba].iter().all(|mine| {
            [&other.w_ab, &other.w_ba]
                .iter()
                .all(|theirs| !mine.is_disjoint(theirs))
        })
    }

    pub fn is_laminar_with(&self, other: &ThetaClass) -> bool {
        !self.crosses(other)
    }

    /// Class edges form a matching.
    pub fn is_matching(&self) -> bool {
        let ends: VertexSet = self.edges.iter().flat_map(|&(x, y)| [x, y]).collect();
        ends.len() == 2 * self.edges.len()
    }

    /// The class is exactly the cut between its halfspaces and both sides
    /// induce connected subgraphs, which makes the cut minimal.
    pub fn is_minimal_cut(&self, g: &Graph) -> bool {
        let cut: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .filter(|&&(u, v)| self.w_ab.contains(&u) != self.w_ab.contains(&v))
            .map(|&(u, v)| {
                if self.w_ab.contains(&u) {
                    (u, v)
                } else {
                    (v, u)
                }
            })
            .collect();
        let mut mine = self.edges.clone();
        mine.sort_unstable();
        let mut theirs = cut;
        theirs.sort_unstable();
        mine == theirs && g.is_connected_set(&self.w_ab) && g.is_connected_set(&self.w_ba)
    }

    pub fn label(&self, g: &Graph) -> String {
        format!("{}~{}", g.name(self.rep.0), g.name(self.rep.1))
    }
}

/// Θ-classes of a graph that is assumed connected and bipartite. Each
/// unclassified edge `ab` (in canonical order) opens the class of all edges
/// between `W_ab` and `W_ba`; a collision with an already classified edge
/// means the graph is not a partial cube.
pub(crate) fn classes_of_bipartite(g: &Graph) -> Result<Vec<ThetaClass>> {
    let mut classified = vec![false; g.m()];
    let edge_index = |u: usize, v: usize| {
        g.edges()
            .binary_search(&(u.min(v), u.max(v)))
            .expect("edge of the graph")
    };
    let mut classes = Vec::new();
    for (ei, &(a, b)) in g.edges().iter().enumerate() {
        if classified[ei] {
            continue;
        }
        let mut w_ab = VertexSet::new();
        let mut w_ba = VertexSet::new();
        for x in 0..g.n() {
            let (da, db) = (g.d(x, a), g.d(x, b));
            if da < db {
                w_ab.insert(x);
            } else if db < da {
                w_ba.insert(x);
            } else {
                return Err(Error::NotMedian(format!(
                    "{} is equidistant from {} and {}",
                    g.name(x),
                    g.name(a),
                    g.name(b)
                )));
            }
        }
        let mut edges = Vec::new();
        for &(x, y) in g.edges() {
            let oriented = match (w_ab.contains(&x), w_ab.contains(&y)) {
                (true, false) => (x, y),
                (false, true) => (y, x),
                _ => continue,
            };
            let idx = edge_index(x, y);
            if classified[idx] {
                return Err(Error::NotMedian(format!(
                    "edge {} -- {} falls in two Θ-classes",
                    g.name(x),
                    g.name(y)
                )));
            }
            classified[idx] = true;
            edges.push(oriented);
        }
        classes.push(ThetaClass {
            rep: (a, b),
            edges,
            w_ab,
            w_ba,
        });
    }
    Ok(classes)
}

fn require_median(g: &Graph) -> Result<()> {
    let verdict = is_median(g);
    if !verdict.is_median() {
        return Err(Error::NotMedian(verdict.describe(g)));
    }
    Ok(())
}

/// Θ-classes of a median graph, ordered by representative edge.
pub fn theta_classes(m: &Graph) -> Result<Vec<ThetaClass>> {
    require_median(m)?;
    classes_of_bipartite(m)
}

/// The bipartite form of the Djokovic–Winkler relation, evaluated directly
/// on two edges: `xy Θ uv` iff `d(x,u) = d(y,v)` and `d(x,v) = d(y,u)`.
pub fn djokovic_winkler(g: &Graph, e: (usize, usize), f: (usize, usize)) -> bool {
    let ((x, y), (u, v)) = (e, f);
    g.distance(x, u) == g.distance(y, v) && g.distance(x, v) == g.distance(y, u)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeripheralSet {
    /// Index into [`theta_classes`].
    pub class: usize,
    pub side: Side,
    pub nodes: VertexSet,
}

/// All halfspaces `W` with `U = W`, by class then side.
pub fn peripheral_sets(m: &Graph) -> Result<Vec<PeripheralSet>> {
    let classes = theta_classes(m)?;
    Ok(peripheral_sets_of(&classes))
}

pub(crate) fn peripheral_sets_of(classes: &[ThetaClass]) -> Vec<PeripheralSet> {
    let mut out = Vec::new();
    for (i, c) in classes.iter().enumerate() {
        for side in [Side::Ab, Side::Ba] {
            if c.is_peripheral(side) {
                out.push(PeripheralSet {
                    class: i,
                    side,
                    nodes: c.w(side).clone(),
                });
            }
        }
    }
    out
}

/// One node `c<i>` per Θ-class, adjacent when the classes cross.
pub fn crossing_graph(m: &Graph) -> Result<Graph> {
    let classes = theta_classes(m)?;
    Ok(crossing_graph_of(&classes))
}

pub(crate) fn crossing_graph_of(classes: &[ThetaClass]) -> Graph {
    let k = classes.len();
    let names = (0..k).map(|i| format!("c{i}")).collect();
    let edges = (0..k)
        .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
        .filter(|&(i, j)| classes[i].crosses(&classes[j]))
        .collect::<Vec<_>>();
    Graph::new(names, edges).expect("class names are unique")
}

/// Size of the largest family of pairwise crossing classes, a lower bound
/// on tree dimension.
pub fn max_crossing_family(m: &Graph) -> Result<usize> {
    Ok(clique_number(&crossing_graph(m)?).0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, Family};

    fn fam(f: Family) -> Graph {
        generate(&f, 0).unwrap()
    }

    /// Partition of edge indices induced by the bipartite Θ relation,
    /// computed pairwise without halfspaces.
    fn oracle_partition(g: &Graph) -> Vec<Vec<(usize, usize)>> {
        let mut classes: Vec<Vec<(usize, usize)>> = Vec::new();
        for &e in g.edges() {
            match classes
                .iter_mut()
                .find(|c| djokovic_winkler(g, c[0], e) || djokovic_winkler(g, c[0], (e.1, e.0)))
            {
                Some(c) => c.push(e),
                None => classes.push(vec![e]),
            }
        }
        classes
    }

    fn class_edges(c: &ThetaClass) -> Vec<(usize, usize)> {
        let mut es: Vec<_> = c.edges.iter().map(|&(x, y)| (x.min(y), x.max(y))).collect();
        es.sort_unstable();
        es
    }

    #[test]
    fn tree_classes_are_single_edges() {
        let t = generate(&Family::RandomTree(8), 3).unwrap();
        let classes = theta_classes(&t).unwrap();
        assert_eq!(classes.len(), 7);
        assert!(classes.iter().all(|c| c.edges.len() == 1));
    }

    #[test]
    fn square_has_two_classes_of_opposite_edges() {
        let c4 = fam(Family::Cycle(4));
        let classes = theta_classes(&c4).unwrap();
        assert_eq!(classes.len(), 2);
        assert_eq!(class_edges(&classes[0]), vec![(0, 1), (2, 3)]);
        assert_eq!(class_edges(&classes[1]), vec![(0, 3), (1, 2)]);
        let oracle = oracle_partition(&c4);
        assert_eq!(oracle.len(), 2);
        for (c, o) in classes.iter().zip(&oracle) {
            assert_eq!(&class_edges(c), o);
        }
    }

    #[test]
    fn cube_has_three_classes_of_four() {
        let q3 = fam(Family::Hypercube(3));
        let classes = theta_classes(&q3).unwrap();
        assert_eq!(classes.len(), 3);
        assert!(classes.iter().all(|c| c.edges.len() == 4));
        let mut oracle = oracle_partition(&q3);
        oracle.sort();
        let mut mine: Vec<_> = classes.iter().map(class_edges).collect();
        mine.sort();
        assert_eq!(mine, oracle);
        assert!(classes
            .iter()
            .all(|c| c.is_matching() && c.is_minimal_cut(&q3)));
    }

    #[test]
    fn rejects_non_median() {
        assert!(theta_classes(&fam(Family::Cycle(6))).is_err());
    }

    #[test]
    fn peripheral_sides() {
        let p3 = Graph::parse("a b\nb c").unwrap();
        let ps = peripheral_sets(&p3).unwrap();
        let leaves: Vec<VertexSet> = ps.iter().map(|p| p.nodes.clone()).collect();
        assert_eq!(leaves, vec![VertexSet::from([0]), VertexSet::from([2])]);
        let q2 = fam(Family::Hypercube(2));
        assert_eq!(peripheral_sets(&q2).unwrap().len(), 4);
        let t = generate(&Family::RandomTree(9), 5).unwrap();
        for p in peripheral_sets(&t).unwrap() {
            if p.nodes.len() == 1 {
                let v = *p.nodes.iter().next().unwrap();
                assert_eq!(t.degree(v), 1);
            }
        }
        let leaf_count = (0..t.n()).filter(|&v| t.degree(v) == 1).count();
        assert_eq!(peripheral_sets(&t).unwrap().len(), leaf_count);
    }

    #[test]
    fn crossing_graphs() {
        let t = generate(&Family::RandomTree(6), 1).unwrap();
        assert_eq!(crossing_graph(&t).unwrap().m(), 0);
        let q4 = fam(Family::Hypercube(4));
        let x = crossing_graph(&q4).unwrap();
        assert_eq!((x.n(), x.m()), (4, 6));
        let grid = fam(Family::Grid(3, 3));
        let classes = theta_classes(&grid).unwrap();
        let x = crossing_graph(&grid).unwrap();
        assert_eq!((x.n(), x.m()), (4, 4));
        for i in 0..4 {
            for j in i + 1..4 {
                let horizontal = |c: &ThetaClass| {
                    let (u, v) = c.edges[0];
                    grid.name(u).split(',').next() == grid.name(v).split(',').next()
                };
                let same_kind = horizontal(&classes[i]) == horizontal(&classes[j]);
                assert_eq!(x.has_edge(i, j), !same_kind);
            }
        }
    }
}
