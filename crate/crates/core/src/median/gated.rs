use crate::graph::{Graph, VertexSet};

/// The gate of `v` in `k`: the vertex of `k` on a geodesic from `v` to every
/// member of `k`. A gate is necessarily the unique vertex of `k` closest to
/// `v`, so only that candidate is tested.
pub fn gate(h: &Graph, k: &VertexSet, v: usize) -> Option<usize> {
    let mut best = None;
    let mut best_d = u32::MAX;
    let mut tied = false;
    for &x in k {
        let d = h.d(v, x);
        if d < best_d {
            best = Some(x);
            best_d = d;
            tied = false;
        } else if d == best_d {
            tied = true;
        }
    }
    let x = best?;
    if tied || best_d >= crate::graph::INF {
        return None;
    }
    k.iter()
        .all(|&w| h.d(v, x) + h.d(x, w) == h.d(v, w))
        .then_some(x)
}

/// A vertex of `h` without a gate in `k`, if any.
pub fn gated_violation(h: &Graph, k: &VertexSet) -> Option<usize> {
    (0..h.n()).find(|&v| gate(h, k, v).is_none())
}

/// Every vertex has a gate; the empty set is not gated in a nonempty graph.
pub fn is_gated(h: &Graph, k: &VertexSet) -> bool {
    gated_violation(h, k).is_none()
}
