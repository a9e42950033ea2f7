//! Median decompositions: a host graph with a bag of subject vertices at
//! every host node, and the validators for the axioms and their variants.

mod document;
mod smooth;
mod validate;

pub use document::DECOMPOSITION_FORMAT;
pub use smooth::{
    check_theta_smooth, check_weak_theta_smooth, cut_separation, induced_separation, y_z_sets,
    ClassMatching, ClassSmoothness, InducedSeparation, SmoothReport, WeakSmoothReport, YZSets,
};
pub use validate::{
    check_gated_decomposition, check_i_median, validate, GatedReport, ValidationReport, Violation,
};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub subject: Graph,
    pub host: Graph,
    /// `bags[a]` is the bag at host node `a`.
    pub bags: Vec<VertexSet>,
}

impl Decomposition {
    /// Checks that there is one bag per host node and that bags hold
    /// subject vertices only.
    pub fn new(subject: Graph, host: Graph, bags: Vec<VertexSet>) -> Result<Self> {
        if bags.len() != host.n() {
            return Err(Error::Format(format!(
                "{} bags for {} host nodes",
                bags.len(),
                host.n()
            )));
        }
        if let Some(&v) = bags.iter().flatten().find(|&&v| v >= subject.n()) {
            return Err(Error::VertexOutOfRange(v));
        }
        Ok(Decomposition {
            subject,
            host,
            bags,
        })
    }

    /// Single host node holding every subject vertex.
    pub fn trivial(subject: &Graph) -> Self {
        Decomposition {
            subject: subject.clone(),
            host: Graph::new(vec!["0".into()], []).expect("K1"),
            bags: vec![subject.vertices()],
        }
    }

    /// Largest bag size.
    pub fn width(&self) -> usize {
        self.bags.iter().map(VertexSet::len).max().unwrap_or(0)
    }

    pub fn bag(&self, a: usize) -> &VertexSet {
        &self.bags[a]
    }

    /// Host nodes whose bag contains `v`.
    pub fn support(&self, v: usize) -> VertexSet {
        (0..self.host.n())
            .filter(|&a| self.bags[a].contains(&v))
            .collect()
    }

    pub fn supports(&self) -> Vec<VertexSet> {
        let mut out = vec![VertexSet::new(); self.subject.n()];
        for (a, bag) in self.bags.iter().enumerate() {
            for &v in bag {
                out[v].insert(a);
            }
        }
        out
    }

    /// Union of the bags over a set of host nodes.
    pub fn bag_union(&self, nodes: &VertexSet) -> VertexSet {
        nodes
            .iter()
            .flat_map(|&a| self.bags[a].iter().copied())
            .collect()
    }

    /// Bag contents by name, in subject order.
    pub fn bag_names(&self, a: usize) -> Vec<String> {
        self.subject.names_of(&self.bags[a])
    }

    /// Restricts to a subgraph `h` of the subject, matched by vertex name.
    pub fn restrict(&self, h: &Graph) -> Result<Decomposition> {
        let map: Vec<usize> = h
            .names()
            .iter()
            .map(|name| self.subject.require(name))
            .collect::<Result<_>>()?;
        for (u, v) in h.named_edges() {
            let (a, b) = (self.subject.require(u)?, self.subject.require(v)?);
            if !self.subject.has_edge(a, b) {
                return Err(Error::Precondition(format!(
                    "{u} -- {v} is not an edge of the subject"
                )));
            }
        }
        let mut back = vec![usize::MAX; self.subject.n()];
        for (i, &v) in map.iter().enumerate() {
            back[v] = i;
        }
        let bags = self
            .bags
            .iter()
            .map(|bag| {
                bag.iter()
                    .filter(|&&v| back[v] != usize::MAX)
                    .map(|&v| back[v])
                    .collect()
            })
            .collect();
        Decomposition::new(h.clone(), self.host.clone(), bags)
    }
}

/// Free-function form of [`Decomposition::restrict`].
pub fn restrict(d: &Decomposition, h: &Graph) -> Result<Decomposition> {
    d.restrict(h)
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    /// The width-2 decomposition of `C4` over a `C4` host.
    pub fn square_of_squares() -> Decomposition {
        let subject = Graph::parse("1 2\n2 3\n3 4\n4 1").unwrap();
        let host = Graph::parse("12 23\n23 34\n34 14\n14 12").unwrap();
        let bags = ["1 2", "2 3", "3 4", "1 4"]
            .iter()
            .map(|b| subject.set_of(&b.split(' ').collect::<Vec<_>>()).unwrap())
            .collect();
        Decomposition::new(subject, host, bags).unwrap()
    }

    pub fn edge_host(subject: &str, b1: &[&str], b2: &[&str]) -> Decomposition {
        let subject = Graph::parse(subject).unwrap();
        let host = Graph::parse("p q").unwrap();
        let bags = vec![subject.set_of(b1).unwrap(), subject.set_of(b2).unwrap()];
        Decomposition::new(subject, host, bags).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::square_of_squares;
    use super::*;

    #[test]
    fn restrict_to_full_subject_is_identity() {
        let d = square_of_squares();
        assert_eq!(d.restrict(&d.subject).unwrap(), d);
    }

    #[test]
    fn restrict_to_a_path() {
        let d = square_of_squares();
        let p3 = Graph::parse("1 2\n2 3").unwrap();
        let r = d.restrict(&p3).unwrap();
        assert!(validate(&r).is_valid());
        assert_eq!(r.width(), 2);
    }

    #[test]
    fn restrict_to_edgeless() {
        let d = square_of_squares();
        let h = Graph::parse("v 1\nv 3").unwrap();
        let r = d.restrict(&h).unwrap();
        assert!(validate(&r).is_valid());
        assert!(d.restrict(&Graph::parse("1 3").unwrap()).is_err());
        assert!(d.restrict(&Graph::parse("1 9").unwrap()).is_err());
    }

    #[test]
    fn supports_match_bags() {
        let d = square_of_squares();
        let s = d.supports();
        for (v, sv) in s.iter().enumerate() {
            assert_eq!(*sv, d.support(v));
            assert_eq!(sv.len(), 2);
        }
    }
}
