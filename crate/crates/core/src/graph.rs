//! Finite simple undirected graphs with named vertices and an eager
//! all-pairs distance table, plus the metric and convexity primitives the
//! rest of the crate is built on.
//!
//! Vertices are addressed by dense indices `0..n` in canonical order (the
//! order in which they were declared). Every vertex set handed across the
//! public API is a [`VertexSet`] of such indices.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

/// Ordered set of vertex indices.
pub type VertexSet = BTreeSet<usize>;

const UNREACHABLE: u16 = u16::MAX;

/// Distance used internally for unreachable pairs; large enough to never
/// win a comparison and small enough that sums of three do not overflow.
pub(crate) const INF: u32 = 1 << 28;

#[derive(Clone)]
pub struct Graph {
    names: Vec<String>,
    index: HashMap<String, usize>,
    adj: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
    dist: Vec<u16>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("vertices", &self.names)
            .field("edges", &self.named_edges().collect::<Vec<_>>())
            .finish()
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.edges == other.edges
    }
}

impl Eq for Graph {}

fn check_name(name: &str) -> Result<()> {
    if name.is_empty() || name.starts_with('#') || name.chars().any(char::is_whitespace) {
        return Err(Error::InvalidName(name.to_string()));
    }
    Ok(())
}

impl Graph {
    /// Builds a graph from vertex names and index pairs.
    pub fn new<I>(names: Vec<String>, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let n = names.len();
        if n >= UNREACHABLE as usize {
            return Err(Error::TooLarge(n));
        }
        let mut index = HashMap::with_capacity(n);
        for (i, name) in names.iter().enumerate() {
            check_name(name)?;
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::DuplicateVertex(name.clone()));
            }
        }
        let mut adj = vec![Vec::new(); n];
        let mut seen = BTreeSet::new();
        for (u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange(u));
            }
            if v >= n {
                return Err(Error::VertexOutOfRange(v));
            }
            if u == v {
                return Err(Error::SelfLoop(names[u].clone()));
            }
            let e = (u.min(v), u.max(v));
            if !seen.insert(e) {
                return Err(Error::DuplicateEdge(names[e.0].clone(), names[e.1].clone()));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let dist = bfs_table(&adj);
        Ok(Graph {
            names,
            index,
            adj,
            edges: seen.into_iter().collect(),
            dist,
        })
    }

    /// Builds a graph from named edges; `isolated` names are declared first.
    pub fn from_names<S: AsRef<str>>(isolated: &[S], edges: &[(S, S)]) -> Result<Self> {
        let mut names: Vec<String> = Vec::new();
        let mut index: HashMap<String, usize> = HashMap::new();
        let mut intern = |s: &str| -> usize {
            if let Some(&i) = index.get(s) {
                return i;
            }
            names.push(s.to_string());
            index.insert(s.to_string(), names.len() - 1);
            names.len() - 1
        };
        for v in isolated {
            intern(v.as_ref());
        }
        let pairs: Vec<(usize, usize)> = edges
            .iter()
            .map(|(a, b)| (intern(a.as_ref()), intern(b.as_ref())))
            .collect();
        Graph::new(names, pairs)
    }

    /// Graph with `n` vertices named `0..n` and no edges.
    pub fn empty(n: usize) -> Self {
        Graph::new((0..n).map(|i| i.to_string()).collect(), std::iter::empty())
            .expect("numeric names are valid")
    }

    /// Parses the line-oriented edge-list format.
    ///
    /// `# ...` lines are comments, `v <name>` declares a vertex and
    /// `<a> <b>` declares an edge. Vertex order is order of first appearance.
    pub fn parse(text: &str) -> Result<Self> {
        let mut names: Vec<String> = Vec::new();
        let mut index: HashMap<String, usize> = HashMap::new();
        let mut edges = Vec::new();
        let mut seen = BTreeSet::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = lineno + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let tokens: Vec<&str> = trimmed.split_whitespace().collect();
            let err = |message: String| Error::Parse { line, message };
            if tokens.len() != 2 {
                return Err(err(format!("expected two tokens, found {}", tokens.len())));
            }
            if let Some(bad) = tokens.iter().find(|t| check_name(t).is_err()) {
                return Err(err(format!("invalid vertex name {bad:?}")));
            }
            let mut intern = |s: &str| -> usize {
                if let Some(&i) = index.get(s) {
                    return i;
                }
                names.push(s.to_string());
                index.insert(s.to_string(), names.len() - 1);
                names.len() - 1
            };
            if tokens[0] == "v" {
                intern(tokens[1]);
                continue;
            }
            if tokens[0] == tokens[1] {
                return Err(err(format!("self-loop at {:?}", tokens[0])));
            }
            let u = intern(tokens[0]);
            let v = intern(tokens[1]);
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(err(format!(
                    "duplicate edge {} -- {}",
                    tokens[0], tokens[1]
                )));
            }
            edges.push((u, v));
        }
        Graph::new(names, edges)
    }

    /// Serializes to the edge-list format such that [`Graph::parse`]
    /// reproduces the vertex order exactly.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for v in 0..self.n() {
            let earlier: Vec<usize> = self.adj[v].iter().copied().filter(|&u| u < v).collect();
            if earlier.is_empty() {
                out.push_str(&format!("v {}\n", self.names[v]));
            }
            for u in earlier {
                // "v x" is a declaration, so a vertex literally named "v"
                // must not lead an edge line.
                if self.names[u] == "v" {
                    out.push_str(&format!("{} {}\n", self.names[v], self.names[u]));
                } else {
                    out.push_str(&format!("{} {}\n", self.names[u], self.names[v]));
                }
            }
        }
        out
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn require(&self, name: &str) -> Result<usize> {
        self.index_of(name)
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn named_edges(&self) -> impl Iterator<Item = (&str, &str)> + '_ {
        self.edges
            .iter()
            .map(move |&(u, v)| (self.names[u].as_str(), self.names[v].as_str()))
    }

    pub fn vertices(&self) -> VertexSet {
        (0..self.n()).collect()
    }

    /// Hop distance, or `None` for vertices in different components.
    pub fn distance(&self, u: usize, v: usize) -> Option<usize> {
        let d = self.dist[u * self.n() + v];
        (d != UNREACHABLE).then_some(d as usize)
    }

    #[inline]
    pub(crate) fn d(&self, u: usize, v: usize) -> u32 {
        let d = self.dist[u * self.n() + v];
        if d == UNREACHABLE {
            INF
        } else {
            d as u32
        }
    }

    pub fn is_connected(&self) -> bool {
        self.n() == 0 || (0..self.n()).all(|v| self.dist[v] != UNREACHABLE)
    }

    pub fn is_bipartite(&self) -> bool {
        // In a bipartite graph no edge joins two vertices at equal distance
        // from a root of their component.
        let n = self.n();
        let mut root = vec![usize::MAX; n];
        for v in 0..n {
            if root[v] == usize::MAX {
                for (u, r) in root.iter_mut().enumerate() {
                    if self.dist[v * n + u] != UNREACHABLE {
                        *r = v;
                    }
                }
            }
        }
        self.edges
            .iter()
            .all(|&(u, v)| self.d(root[u], u) != self.d(root[u], v))
    }

    pub fn is_tree(&self) -> bool {
        self.n() > 0 && self.is_connected() && self.m() + 1 == self.n()
    }

    pub fn is_clique(&self, set: &VertexSet) -> bool {
        let vs: Vec<usize> = set.iter().copied().collect();
        vs.iter()
            .enumerate()
            .all(|(i, &u)| vs[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    /// Induced subgraph on `set`, vertices in canonical order.
    pub fn induced(&self, set: &VertexSet) -> Graph {
        let order: Vec<usize> = set.iter().copied().collect();
        let mut pos = vec![usize::MAX; self.n()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| pos[u] != usize::MAX && pos[v] != usize::MAX)
            .map(|&(u, v)| (pos[u], pos[v]));
        Graph::new(
            order.iter().map(|&v| self.names[v].clone()).collect(),
            edges,
        )
        .expect("induced subgraph of a valid graph")
    }

    /// Maps a set of vertex names to indices.
    pub fn set_of<S: AsRef<str>>(&self, names: &[S]) -> Result<VertexSet> {
        names.iter().map(|s| self.require(s.as_ref())).collect()
    }

    pub fn names_of(&self, set: &VertexSet) -> Vec<String> {
        set.iter().map(|&v| self.names[v].clone()).collect()
    }

    fn ensure_same_component(&self, u: usize, v: usize) -> Result<()> {
        if self.d(u, v) == INF {
            return Err(Error::Disconnected(
                self.names[u].clone(),
                self.names[v].clone(),
            ));
        }
        Ok(())
    }

    /// The geodesic interval `{x : d(u,x) + d(x,v) = d(u,v)}`.
    pub fn interval(&self, u: usize, v: usize) -> Result<VertexSet> {
        self.ensure_same_component(u, v)?;
        let duv = self.d(u, v);
        Ok((0..self.n())
            .filter(|&x| self.d(u, x) + self.d(x, v) == duv)
            .collect())
    }

    /// Vertices on geodesics between all three pairs of `u, v, w`.
    pub fn median_of(&self, u: usize, v: usize, w: usize) -> Result<MedianOf> {
        if !self.is_connected() {
            return Err(Error::Precondition(
                "median_of requires a connected graph".into(),
            ));
        }
        Ok(MedianOf::from_candidates(self.median_candidates(u, v, w)))
    }

    /// `x` lies on all three pairwise geodesics iff the distance sum to the
    /// triple equals half its perimeter.
    pub(crate) fn median_candidates(&self, u: usize, v: usize, w: usize) -> Vec<usize> {
        let perimeter = self.d(u, v) + self.d(v, w) + self.d(w, u);
        if perimeter % 2 == 1 {
            return Vec::new();
        }
        let half = perimeter / 2;
        (0..self.n())
            .filter(|&x| self.d(u, x) + self.d(v, x) + self.d(w, x) == half)
            .collect()
    }

    /// `true` iff `set` is geodesically convex. Empty sets and singletons
    /// are convex; sets meeting two components are not.
    pub fn is_convex(&self, set: &VertexSet) -> bool {
        self.convexity_violation(set).is_none()
    }

    /// Finds `(u, v, x)` with `u, v` in `set` and `x` on a `(u,v)`-geodesic
    /// outside `set`. For a set spanning components, `x` is `usize::MAX`.
    ///
    /// Closure under geodesic predecessors suffices: if every neighbour `w`
    /// of `v` with `d(u,w) = d(u,v) - 1` stays in the set, induction on
    /// `d(u,v)` puts all of `I(u,v)` in it.
    pub fn convexity_violation(&self, set: &VertexSet) -> Option<(usize, usize, usize)> {
        let mut member = vec![false; self.n()];
        for &v in set {
            member[v] = true;
        }
        for &u in set {
            for &v in set {
                let duv = self.d(u, v);
                if duv == INF {
                    return Some((u, v, usize::MAX));
                }
                if duv == 0 {
                    continue;
                }
                for &w in &self.adj[v] {
                    if !member[w] && self.d(u, w) + 1 == duv {
                        return Some((u, v, w));
                    }
                }
            }
        }
        None
    }

    /// Least convex superset of `set`. On a disconnected graph the closure
    /// is taken inside each component separately.
    pub fn convex_hull(&self, set: &VertexSet) -> VertexSet {
        let mut member = vec![false; self.n()];
        let mut current: Vec<usize> = set.iter().copied().collect();
        for &v in &current {
            member[v] = true;
        }
        loop {
            let mut added = Vec::new();
            for &u in &current {
                for &v in &current {
                    let duv = self.d(u, v);
                    if duv == INF || duv == 0 {
                        continue;
                    }
                    for &w in &self.adj[v] {
                        if !member[w] && self.d(u, w) + 1 == duv {
                            member[w] = true;
                            added.push(w);
                        }
                    }
                }
            }
            if added.is_empty() {
                break;
            }
            current.extend(added);
        }
        current.into_iter().collect()
    }

    /// Connected components of `G - removed`, ordered by least vertex.
    pub fn components_without(&self, removed: &VertexSet) -> Vec<VertexSet> {
        let n = self.n();
        let mut seen = vec![false; n];
        for &v in removed {
            seen[v] = true;
        }
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut comp = VertexSet::new();
            let mut queue = VecDeque::from([start]);
            seen[start] = true;
            while let Some(v) = queue.pop_front() {
                comp.insert(v);
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    /// `true` iff `set` induces a connected subgraph (the empty set does not).
    pub fn is_connected_set(&self, set: &VertexSet) -> bool {
        let Some(&start) = set.iter().next() else {
            return false;
        };
        let mut seen = VertexSet::from([start]);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if set.contains(&w) && seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        seen.len() == set.len()
    }

    /// Open neighbourhood of a set.
    pub fn neighborhood(&self, set: &VertexSet) -> VertexSet {
        set.iter()
            .flat_map(|&v| self.adj[v].iter().copied())
            .filter(|w| !set.contains(w))
            .collect()
    }
}

fn bfs_table(adj: &[Vec<usize>]) -> Vec<u16> {
    let n = adj.len();
    let mut dist = vec![UNREACHABLE; n * n];
    let mut queue = VecDeque::with_capacity(n);
    for s in 0..n {
        let row = &mut dist[s * n..(s + 1) * n];
        row[s] = 0;
        queue.clear();
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            let dv = row[v];
            for &w in &adj[v] {
                if row[w] == UNREACHABLE {
                    row[w] = dv + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    dist
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_edge_list())
    }
}

/// Outcome of a median query for a vertex triple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MedianOf {
    Unique(usize),
    None,
    Multiple(Vec<usize>),
}

impl MedianOf {
    fn from_candidates(c: Vec<usize>) -> Self {
        match c.len() {
            0 => MedianOf::None,
            1 => MedianOf::Unique(c[0]),
            _ => MedianOf::Multiple(c),
        }
    }
}

/// Cartesian product `g □ h`. Vertex `(u, v)` is named `"u|v"` and sits at
/// index `u * h.n() + v`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph> {
    let (gn, hn) = (g.n(), h.n());
    let n = gn * hn;
    if n >= UNREACHABLE as usize {
        return Err(Error::TooLarge(n));
    }
    let names: Vec<String> = (0..n)
        .map(|i| format!("{}|{}", g.names[i / hn], h.names[i % hn]))
        .collect();
    let mut index = HashMap::with_capacity(n);
    for (i, name) in names.iter().enumerate() {
        if index.insert(name.clone(), i).is_some() {
            return Err(Error::DuplicateVertex(name.clone()));
        }
    }
    let mut adj = vec![Vec::new(); n];
    let mut edges = Vec::with_capacity(g.m() * hn + h.m() * gn);
    for a in 0..gn {
        for x in 0..hn {
            let i = a * hn + x;
            for &b in &g.adj[a] {
                adj[i].push(b * hn + x);
            }
            for &y in &h.adj[x] {
                adj[i].push(a * hn + y);
            }
            adj[i].sort_unstable();
            edges.extend(adj[i].iter().filter(|&&j| j > i).map(|&j| (i, j)));
        }
    }
    // Distances add across factors.
    let mut dist = vec![UNREACHABLE; n * n];
    for i in 0..n {
        let (a, x) = (i / hn, i % hn);
        for j in 0..n {
            let (b, y) = (j / hn, j % hn);
            let (dg, dh) = (g.dist[a * gn + b], h.dist[x * hn + y]);
            if dg != UNREACHABLE && dh != UNREACHABLE {
                dist[i * n + j] = dg + dh;
            }
        }
    }
    Ok(Graph {
        names,
        index,
        adj,
        edges,
        dist,
    })
}

/// A pair of vertex sets covering the graph with no edge between
/// `a \ b` and `b \ a`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Separation {
    pub a: VertexSet,
    pub b: VertexSet,
}

impl Separation {
    /// Checks the separation axioms against `g`.
    pub fn new(g: &Graph, a: VertexSet, b: VertexSet) -> Result<Self> {
        let sep = Separation { a, b };
        if let Some(reason) = sep.defect(g) {
            return Err(Error::Precondition(reason));
        }
        Ok(sep)
    }

    /// Describes why `self` is not a separation of `g`, if it is not.
    pub fn defect(&self, g: &Graph) -> Option<String> {
        if let Some(&v) = self.a.iter().chain(&self.b).find(|&&v| v >= g.n()) {
            return Some(format!("vertex index {v} out of range"));
        }
        if let Some(v) = (0..g.n()).find(|v| !self.a.contains(v) && !self.b.contains(v)) {
            return Some(format!("vertex {:?} lies on neither side", g.name(v)));
        }
        g.edges().iter().find_map(|&(u, v)| {
            let (ua, ub) = (self.a.contains(&u), self.b.contains(&u));
            let (va, vb) = (self.a.contains(&v), self.b.contains(&v));
            ((ua && !ub && vb && !va) || (ub && !ua && va && !vb))
                .then(|| format!("edge {} -- {} crosses the separator", g.name(u), g.name(v)))
        })
    }

    pub fn separator(&self) -> VertexSet {
        self.a.intersection(&self.b).copied().collect()
    }

    pub fn flipped(&self) -> Separation {
        Separation {
            a: self.b.clone(),
            b: self.a.clone(),
        }
    }

    /// Two separations are laminar (nested) if some orientation puts one
    /// side of `self` inside a side of `other` with the complementary sides
    /// containing each other; otherwise they cross.
    pub fn is_laminar_with(&self, other: &Separation) -> bool {
        let mine = [(&self.a, &self.b), (&self.b, &self.a)];
        let theirs = [(&other.a, &other.b), (&other.b, &other.a)];
        mine.iter().any(|(u1, u2)| {
            theirs
                .iter()
                .any(|(w1, w2)| u1.is_subset(w1) && w2.is_subset(u2))
        })
    }
}

/// Free-function form of [`Separation::is_laminar_with`].
pub fn laminar(s1: &Separation, s2: &Separation) -> bool {
    s1.is_laminar_with(s2)
}
