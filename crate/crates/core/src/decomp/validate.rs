use std::fmt::Write as _;

use super::Decomposition;
use crate::median::{gated_violation, is_median, tree_dimension};

/// A replayable witness against one of the axioms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// No bag contains the subject edge `(u, v)`.
    UncoveredEdge(usize, usize),
    /// Subject vertex `v` is in no bag.
    EmptySupport(usize),
    /// The support of `v` contains host nodes `a` and `b` but not `x`,
    /// which lies on an `(a,b)`-geodesic.
    NonConvexSupport {
        v: usize,
        a: usize,
        b: usize,
        x: usize,
    },
    /// The support of `v` meets two host components at `a` and `b`.
    DisconnectedSupport { v: usize, a: usize, b: usize },
    /// Host node `x` has no gate in the support of `v`.
    UngatedSupport { v: usize, x: usize },
}

impl Violation {
    pub fn axiom(&self) -> &'static str {
        match self {
            Violation::UncoveredEdge(..) => "M1",
            Violation::UngatedSupport { .. } => "H2",
            _ => "M2",
        }
    }

    pub fn describe(&self, d: &Decomposition) -> String {
        let s = |v: usize| d.subject.name(v);
        let h = |a: usize| d.host.name(a);
        match *self {
            Violation::UncoveredEdge(u, v) => format!("edge {} -- {} is in no bag", s(u), s(v)),
            Violation::EmptySupport(v) => format!("vertex {} is in no bag", s(v)),
            Violation::NonConvexSupport { v, a, b, x } => format!(
                "support of {} contains {} and {} but not {} between them",
                s(v),
                h(a),
                h(b),
                h(x)
            ),
            Violation::DisconnectedSupport { v, a, b } => format!(
                "support of {} meets separate host components at {} and {}",
                s(v),
                h(a),
                h(b)
            ),
            Violation::UngatedSupport { v, x } => {
                format!("host node {} has no gate in the support of {}", h(x), s(v))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub m1_ok: bool,
    pub m2_ok: bool,
    pub violations: Vec<Violation>,
    pub width: usize,
    pub host_is_median: bool,
    /// `None` when the host is not median.
    pub host_tree_dimension: Option<usize>,
}

impl ValidationReport {
    /// Both axioms hold and the host is a median graph.
    pub fn is_valid(&self) -> bool {
        self.m1_ok && self.m2_ok && self.host_is_median
    }

    pub fn summary(&self, d: &Decomposition) -> String {
        let mut out = String::new();
        for v in &self.violations {
            let _ = writeln!(out, "{}: {}", v.axiom(), v.describe(d));
        }
        if !self.host_is_median {
            out.push_str("host: not a median graph\n");
        }
        out
    }
}

fn uncovered_edges(d: &Decomposition) -> Vec<Violation> {
    d.subject
        .edges()
        .iter()
        .filter(|&&(u, v)| !d.bags.iter().any(|b| b.contains(&u) && b.contains(&v)))
        .map(|&(u, v)| Violation::UncoveredEdge(u, v))
        .collect()
}

/// Checks (M1) and (M2) and reports host medianness and tree dimension.
pub fn validate(d: &Decomposition) -> ValidationReport {
    let mut violations = uncovered_edges(d);
    let m1_ok = violations.is_empty();
    let mut m2 = Vec::new();
    for (v, support) in d.supports().into_iter().enumerate() {
        if support.is_empty() {
            m2.push(Violation::EmptySupport(v));
        } else if let Some((a, b, x)) = d.host.convexity_violation(&support) {
            m2.push(if x == usize::MAX {
                Violation::DisconnectedSupport { v, a, b }
            } else {
                Violation::NonConvexSupport { v, a, b, x }
            });
        }
    }
    let m2_ok = m2.is_empty();
    violations.extend(m2);
    let host_is_median = is_median(&d.host).is_median();
    let host_tree_dimension = host_is_median
        .then(|| tree_dimension(&d.host).ok())
        .flatten();
    ValidationReport {
        m1_ok,
        m2_ok,
        violations,
        width: d.width(),
        host_is_median,
        host_tree_dimension,
    }
}

/// Valid, with a host of tree dimension at most `i`.
pub fn check_i_median(d: &Decomposition, i: usize) -> bool {
    let report = validate(d);
    report.is_valid() && report.host_tree_dimension.is_some_and(|k| k <= i)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GatedReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
}

/// Checks (H1) every edge in a bag and (H2) every support nonempty and gated.
pub fn check_gated_decomposition(d: &Decomposition) -> GatedReport {
    let mut violations = uncovered_edges(d);
    for (v, support) in d.supports().into_iter().enumerate() {
        if support.is_empty() {
            violations.push(Violation::EmptySupport(v));
        } else if let Some(x) = gated_violation(&d.host, &support) {
            violations.push(Violation::UngatedSupport { v, x });
        }
    }
    GatedReport {
        ok: violations.is_empty(),
        violations,
    }
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::{edge_host, square_of_squares};
    use super::*;
    use crate::graph::{Graph, VertexSet};

    #[test]
    fn square_instance_is_valid() {
        let d = square_of_squares();
        let r = validate(&d);
        assert!(r.is_valid(), "{}", r.summary(&d));
        assert_eq!(r.width, 2);
        assert_eq!(r.host_tree_dimension, Some(2));
    }

    #[test]
    fn single_bag_is_valid() {
        let g = Graph::parse("a b\nb c\nc a\nc d").unwrap();
        let d = Decomposition::trivial(&g);
        let r = validate(&d);
        assert!(r.is_valid());
        assert_eq!(r.width, 4);
    }

    #[test]
    fn dropping_a_vertex_breaks_both_axioms() {
        let mut d = square_of_squares();
        let three = d.subject.require("3").unwrap();
        for bag in &mut d.bags {
            bag.remove(&three);
        }
        let r = validate(&d);
        assert!(!r.m1_ok && !r.m2_ok);
        assert!(r.violations.contains(&Violation::EmptySupport(three)));
        let uncovered = r
            .violations
            .iter()
            .filter(|v| matches!(v, Violation::UncoveredEdge(..)))
            .count();
        assert_eq!(uncovered, 2);
    }

    #[test]
    fn non_convex_support_is_reported() {
        let mut d = square_of_squares();
        let one = d.subject.require("1").unwrap();
        // move 1 from 12 to 23, leaving it on two antipodal host nodes
        d.bags[0].remove(&one);
        d.bags[1].insert(one);
        let r = validate(&d);
        assert!(!r.m2_ok);
        match r.violations.iter().find(|v| v.axiom() == "M2") {
            Some(Violation::NonConvexSupport { v, .. }) => assert_eq!(*v, one),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn m1_only_violation_keeps_m2() {
        let d = edge_host("a b\nb c", &["a"], &["b", "c"]);
        let r = validate(&d);
        assert!(!r.m1_ok);
        assert!(r.m2_ok);
    }

    #[test]
    fn i_median_levels() {
        let d = square_of_squares();
        assert!(!check_i_median(&d, 1));
        assert!(check_i_median(&d, 2));
        assert!(check_i_median(&d, 3));
        let t = Decomposition::trivial(&Graph::parse("a b").unwrap());
        assert!(check_i_median(&t, 1));
    }

    #[test]
    fn gated_checks() {
        assert!(check_gated_decomposition(&square_of_squares()).ok);
        // a support that is a two-node path of a five-cycle host
        let subject = Graph::parse("v a").unwrap();
        let host = Graph::parse("0 1\n1 2\n2 3\n3 4\n4 0").unwrap();
        let mut bags = vec![VertexSet::new(); 5];
        bags[0].insert(0);
        bags[1].insert(0);
        let d = Decomposition::new(subject, host, bags).unwrap();
        let r = check_gated_decomposition(&d);
        assert!(!r.ok);
        assert!(matches!(
            r.violations[0],
            Violation::UngatedSupport { v: 0, x: 3 }
        ));
    }
}
