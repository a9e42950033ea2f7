//! Exact clique number and chromatic number.
//!
//! Both solvers are plain branch and bound meant for desk-scale inputs.
//! Maximum clique uses greedy colouring bounds on the candidate set; the
//! chromatic number is found by deepening from `ω(G)` with a DSATUR
//! backtracking search, the maximum clique pre-coloured to break symmetry.

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Proper vertex colouring with 1-based colour indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<usize>,
}

impl Coloring {
    /// Checks totality and properness against `g`.
    pub fn new(g: &Graph, colors: Vec<usize>) -> Result<Self> {
        if colors.len() != g.n() {
            return Err(Error::Precondition(format!(
                "colouring covers {} of {} vertices",
                colors.len(),
                g.n()
            )));
        }
        if let Some(v) = colors.iter().position(|&c| c == 0) {
            return Err(Error::Precondition(format!(
                "vertex {:?} has colour 0; colours are 1-based",
                g.name(v)
            )));
        }
        if let Some(&(u, v)) = g.edges().iter().find(|&&(u, v)| colors[u] == colors[v]) {
            return Err(Error::ImproperColoring(
                g.name(u).to_string(),
                g.name(v).to_string(),
                colors[u],
            ));
        }
        Ok(Coloring { colors })
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.colors
    }

    /// Largest colour index in use.
    pub fn num_colors(&self) -> usize {
        self.colors.iter().copied().max().unwrap_or(0)
    }

    /// Colour classes `1..=num_colors()`, some possibly empty.
    pub fn classes(&self) -> Vec<VertexSet> {
        let mut classes = vec![VertexSet::new(); self.num_colors()];
        for (v, &c) in self.colors.iter().enumerate() {
            classes[c - 1].insert(v);
        }
        classes
    }

    /// Relabels colours so that they appear in order of first use by vertex
    /// index and no class is empty.
    pub fn normalized(&self) -> Coloring {
        let mut map = vec![0; self.num_colors() + 1];
        let mut next = 0;
        let colors = self
            .colors
            .iter()
            .map(|&c| {
                if map[c] == 0 {
                    next += 1;
                    map[c] = next;
                }
                map[c]
            })
            .collect();
        Coloring { colors }
    }
}

fn bit_adjacency(g: &Graph) -> Vec<FixedBitSet> {
    (0..g.n())
        .map(|v| {
            let mut bits = FixedBitSet::with_capacity(g.n());
            for &w in g.neighbors(v) {
                bits.insert(w);
            }
            bits
        })
        .collect()
}

struct CliqueSearch {
    adj: Vec<FixedBitSet>,
    current: Vec<usize>,
    best: Vec<usize>,
}

impl CliqueSearch {
    /// Greedy sequential colouring of `cand`; returns vertices ordered by
    /// colour together with the colour of each, an upper bound on the size
    /// of any clique among that vertex and those before it.
    fn color_sort(&self, cand: &FixedBitSet) -> (Vec<usize>, Vec<usize>) {
        let mut uncolored = cand.clone();
        let mut order = Vec::with_capacity(cand.count_ones(..));
        let mut bounds = Vec::with_capacity(order.capacity());
        let mut color = 0;
        while !uncolored.is_clear() {
            color += 1;
            let mut q = uncolored.clone();
            while let Some(v) = q.ones().next() {
                q.set(v, false);
                q.difference_with(&self.adj[v]);
                uncolored.set(v, false);
                order.push(v);
                bounds.push(color);
            }
        }
        (order, bounds)
    }

    fn expand(&mut self, mut cand: FixedBitSet) {
        let (order, bounds) = self.color_sort(&cand);
        for i in (0..order.len()).rev() {
            if self.current.len() + bounds[i] <= self.best.len() {
                return;
            }
            let v = order[i];
            self.current.push(v);
            let mut next = cand.clone();
            next.intersect_with(&self.adj[v]);
            if next.is_clear() {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next);
            }
            self.current.pop();
            cand.set(v, false);
        }
    }
}

/// Exact clique number with a witness clique (empty for the empty graph).
pub fn clique_number(g: &Graph) -> (usize, VertexSet) {
    if g.n() == 0 {
        return (0, VertexSet::new());
    }
    let mut search = CliqueSearch {
        adj: bit_adjacency(g),
        current: Vec::new(),
        best: vec![0],
    };
    let mut all = FixedBitSet::with_capacity(g.n());
    all.insert_range(..);
    search.expand(all);
    let witness: VertexSet = search.best.into_iter().collect();
    (witness.len(), witness)
}

struct ColorSearch<'a> {
    g: &'a Graph,
    k: usize,
    colors: Vec<usize>,
    /// `forbidden[v][c]` counts neighbours of `v` holding colour `c`.
    forbidden: Vec<Vec<u32>>,
    saturation: Vec<usize>,
    uncolored: usize,
}

impl<'a> ColorSearch<'a> {
    fn new(g: &'a Graph, k: usize) -> Self {
        ColorSearch {
            g,
            k,
            colors: vec![0; g.n()],
            forbidden: vec![vec![0; k + 1]; g.n()],
            saturation: vec![0; g.n()],
            uncolored: g.n(),
        }
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.colors[v] = c;
        self.uncolored -= 1;
        for &w in self.g.neighbors(v) {
            if self.forbidden[w][c] == 0 {
                self.saturation[w] += 1;
            }
            self.forbidden[w][c] += 1;
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = self.colors[v];
        self.colors[v] = 0;
        self.uncolored += 1;
        for &w in self.g.neighbors(v) {
            self.forbidden[w][c] -= 1;
            if self.forbidden[w][c] == 0 {
                self.saturation[w] -= 1;
            }
        }
    }

    fn pick(&self) -> usize {
        (0..self.g.n())
            .filter(|&v| self.colors[v] == 0)
            .max_by(|&a, &b| {
                (self.saturation[a], self.g.degree(a))
                    .cmp(&(self.saturation[b], self.g.degree(b)))
                    .then(b.cmp(&a))
            })
            .expect("an uncoloured vertex remains")
    }

    fn solve(&mut self, used: usize) -> bool {
        if self.uncolored == 0 {
            return true;
        }
        let v = self.pick();
        let limit = self.k.min(used + 1);
        for c in 1..=limit {
            if self.forbidden[v][c] == 0 {
                self.assign(v, c);
                if self.solve(used.max(c)) {
                    return true;
                }
                self.unassign(v);
            }
        }
        false
    }
}

fn try_k_coloring(g: &Graph, k: usize, clique: &VertexSet) -> Option<Vec<usize>> {
    if clique.len() > k {
        return None;
    }
    let mut search = ColorSearch::new(g, k);
    for (i, &v) in clique.iter().enumerate() {
        search.assign(v, i + 1);
    }
    search.solve(clique.len()).then_some(search.colors)
}

/// Greedy DSATUR colouring, an upper bound for the exact search.
fn dsatur_greedy(g: &Graph) -> Vec<usize> {
    let mut search = ColorSearch::new(g, g.n().max(1));
    while search.uncolored > 0 {
        let v = search.pick();
        let c = (1..).find(|&c| search.forbidden[v][c] == 0).unwrap();
        search.assign(v, c);
    }
    search.colors
}

/// Exact chromatic number with an optimal colouring.
pub fn chromatic_number(g: &Graph) -> (usize, Coloring) {
    if g.n() == 0 {
        return (0, Coloring { colors: Vec::new() });
    }
    let (omega, clique) = clique_number(g);
    let greedy = dsatur_greedy(g);
    let upper = greedy.iter().copied().max().unwrap();
    for k in omega..upper {
        if let Some(colors) = try_k_coloring(g, k, &clique) {
            return (k, Coloring { colors });
        }
    }
    (upper, Coloring { colors: greedy })
}
