use super::Decomposition;
use crate::error::{Error, Result};
use crate::graph::{Separation, VertexSet};
use crate::median::{theta_classes, ThetaClass};

/// Bag unions over the two W-sides (`Y`) and the two U-sides (`Z`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YZSets {
    pub y_ab: VertexSet,
    pub y_ba: VertexSet,
    pub z_ab: VertexSet,
    pub z_ba: VertexSet,
}

impl YZSets {
    pub fn diff_ab(&self) -> VertexSet {
        self.z_ab.difference(&self.z_ba).copied().collect()
    }

    pub fn diff_ba(&self) -> VertexSet {
        self.z_ba.difference(&self.z_ab).copied().collect()
    }
}

fn check_class(d: &Decomposition, c: &ThetaClass) -> Result<()> {
    let h = &d.host;
    let covers = c.w_ab.len() + c.w_ba.len() == h.n()
        && c.w_ab.is_disjoint(&c.w_ba)
        && c.w_ab.iter().chain(&c.w_ba).all(|&x| x < h.n());
    let edges_ok = c.edges.iter().all(|&(x, y)| {
        x < h.n() && y < h.n() && h.has_edge(x, y) && c.w_ab.contains(&x) && c.w_ba.contains(&y)
    });
    if !covers || !edges_ok || c.edges.is_empty() {
        return Err(Error::Precondition(
            "Θ-class does not belong to the host".into(),
        ));
    }
    Ok(())
}

pub fn y_z_sets(d: &Decomposition, c: &ThetaClass) -> Result<YZSets> {
    check_class(d, c)?;
    Ok(YZSets {
        y_ab: d.bag_union(&c.w_ab),
        y_ba: d.bag_union(&c.w_ba),
        z_ab: d.bag_union(&c.u_ab()),
        z_ba: d.bag_union(&c.u_ba()),
    })
}

/// A separation `(Y_1, Y_2)` of the subject together with the evidence that
/// its separator lies inside `Z_1 ∩ Z_2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedSeparation {
    pub separation: Separation,
    pub z_meet: VertexSet,
}

impl InducedSeparation {
    fn certify(
        d: &Decomposition,
        y1: VertexSet,
        y2: VertexSet,
        z1: &VertexSet,
        z2: &VertexSet,
    ) -> Result<Self> {
        let separation = Separation::new(&d.subject, y1, y2)
            .map_err(|e| Error::Internal(format!("induced pair is not a separation: {e}")))?;
        let z_meet: VertexSet = z1.intersection(z2).copied().collect();
        if !separation.separator().is_subset(&z_meet) {
            return Err(Error::Internal(
                "separator escapes the intersection of the Z-sets".into(),
            ));
        }
        Ok(InducedSeparation { separation, z_meet })
    }
}

/// The separation `(Y_ab, Y_ba)` induced by a host Θ-class.
pub fn induced_separation(d: &Decomposition, c: &ThetaClass) -> Result<InducedSeparation> {
    let yz = y_z_sets(d, c)?;
    InducedSeparation::certify(d, yz.y_ab, yz.y_ba, &yz.z_ab, &yz.z_ba)
}

/// The separation induced by the host cut between `side` and its
/// complement, which must be a minimal cut (both sides connected).
pub fn cut_separation(d: &Decomposition, side: &VertexSet) -> Result<InducedSeparation> {
    let h = &d.host;
    let other: VertexSet = (0..h.n()).filter(|x| !side.contains(x)).collect();
    if !h.is_connected_set(side) || !h.is_connected_set(&other) {
        return Err(Error::Precondition("cut is not minimal".into()));
    }
    let u1: VertexSet = side
        .iter()
        .copied()
        .filter(|&x| h.neighbors(x).iter().any(|y| other.contains(y)))
        .collect();
    let u2 = h.neighborhood(side);
    let (z1, z2) = (d.bag_union(&u1), d.bag_union(&u2));
    InducedSeparation::certify(d, d.bag_union(side), d.bag_union(&other), &z1, &z2)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassSmoothness {
    pub class: ThetaClass,
    pub diff_ab: VertexSet,
    pub diff_ba: VertexSet,
    /// Whether the two supports together are convex; `false` unless both
    /// differences are singletons.
    pub joint_support_convex: bool,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmoothReport {
    pub ok: bool,
    pub classes: Vec<ClassSmoothness>,
}

impl SmoothReport {
    pub fn first_failure(&self) -> Option<&ClassSmoothness> {
        self.classes.iter().find(|c| !c.ok)
    }
}

/// Checks that every host Θ-class has singleton Z-differences `{v_a}` and
/// `{v_b}` whose supports have a convex union.
pub fn check_theta_smooth(d: &Decomposition) -> Result<SmoothReport> {
    let supports = d.supports();
    let classes = theta_classes(&d.host)?
        .into_iter()
        .map(|class| {
            let yz = y_z_sets(d, &class).expect("class of this host");
            let (diff_ab, diff_ba) = (yz.diff_ab(), yz.diff_ba());
            let joint_support_convex = diff_ab.len() == 1 && diff_ba.len() == 1 && {
                let va = *diff_ab.iter().next().unwrap();
                let vb = *diff_ba.iter().next().unwrap();
                let joint: VertexSet = supports[va].union(&supports[vb]).copied().collect();
                d.host.is_convex(&joint)
            };
            ClassSmoothness {
                class,
                diff_ab,
                diff_ba,
                joint_support_convex,
                ok: joint_support_convex,
            }
        })
        .collect::<Vec<_>>();
    Ok(SmoothReport {
        ok: classes.iter().all(|c| c.ok),
        classes,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassMatching {
    pub class: ThetaClass,
    pub diff_ab: VertexSet,
    pub diff_ba: VertexSet,
    /// Pairs `(v, s(v))` from the smaller difference into the larger, when
    /// a saturating matching of admissible pairs exists.
    pub matching: Option<Vec<(usize, usize)>>,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeakSmoothReport {
    pub ok: bool,
    pub classes: Vec<ClassMatching>,
}

impl WeakSmoothReport {
    pub fn first_failure(&self) -> Option<&ClassMatching> {
        self.classes.iter().find(|c| !c.ok)
    }
}

/// Augmenting-path matching saturating the left side, if one exists.
fn saturating_matching(adj: &[Vec<usize>], right: usize) -> Option<Vec<usize>> {
    fn augment(v: usize, adj: &[Vec<usize>], seen: &mut [bool], owner: &mut [usize]) -> bool {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                if owner[w] == usize::MAX || augment(owner[w], adj, seen, owner) {
                    owner[w] = v;
                    return true;
                }
            }
        }
        false
    }
    let mut owner = vec![usize::MAX; right];
    for v in 0..adj.len() {
        let mut seen = vec![false; right];
        if !augment(v, adj, &mut seen, &mut owner) {
            return None;
        }
    }
    let mut mate = vec![usize::MAX; adj.len()];
    for (w, &v) in owner.iter().enumerate() {
        if v != usize::MAX {
            mate[v] = w;
        }
    }
    Some(mate)
}

/// Checks that every host Θ-class has nonempty Z-differences and an
/// injective map from the smaller into the larger whose pairs have convex
/// joint support and agree across every class edge.
pub fn check_weak_theta_smooth(d: &Decomposition) -> Result<WeakSmoothReport> {
    let supports = d.supports();
    let classes = theta_classes(&d.host)?
        .into_iter()
        .map(|class| {
            let yz = y_z_sets(d, &class).expect("class of this host");
            let (diff_ab, diff_ba) = (yz.diff_ab(), yz.diff_ba());
            let matching = if diff_ab.is_empty() || diff_ba.is_empty() {
                None
            } else {
                let forward = diff_ab.len() <= diff_ba.len();
                let (small, large) = if forward {
                    (&diff_ab, &diff_ba)
                } else {
                    (&diff_ba, &diff_ab)
                };
                let small: Vec<usize> = small.iter().copied().collect();
                let large: Vec<usize> = large.iter().copied().collect();
                let admissible = |v: usize, w: usize| {
                    let (va, vb) = if forward { (v, w) } else { (w, v) };
                    let joint: VertexSet = supports[v].union(&supports[w]).copied().collect();
                    d.host.is_convex(&joint)
                        && class
                            .edges
                            .iter()
                            .all(|&(x, y)| d.bags[x].contains(&va) == d.bags[y].contains(&vb))
                };
                let adj: Vec<Vec<usize>> = small
                    .iter()
                    .map(|&v| {
                        (0..large.len())
                            .filter(|&j| admissible(v, large[j]))
                            .collect()
                    })
                    .collect();
                saturating_matching(&adj, large.len()).map(|mate| {
                    small
                        .iter()
                        .zip(mate)
                        .map(|(&v, j)| (v, large[j]))
                        .collect()
                })
            };
            let ok = matching.is_some();
            ClassMatching {
                class,
                diff_ab,
                diff_ba,
                matching,
                ok,
            }
        })
        .collect::<Vec<_>>();
    Ok(WeakSmoothReport {
        ok: classes.iter().all(|c| c.ok),
        classes,
    })
}
