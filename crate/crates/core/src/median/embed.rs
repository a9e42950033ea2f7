use std::collections::BTreeMap;

use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::solve::chromatic_number;

use super::theta::{crossing_graph_of, theta_classes, ThetaClass};

pub const EMBEDDING_FORMAT: &str = "mwkit-embedding-v1";

/// A set of pairwise laminar Θ-classes, as indices into the class list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Direction {
    pub classes: Vec<usize>,
}

/// Isometric embedding of a median graph into a product of trees.
#[derive(Debug, Clone)]
pub struct TreeProductEmbedding {
    pub factors: Vec<Graph>,
    /// `coords[v][j]` is the node of factor `j` that vertex `v` maps to.
    pub coords: Vec<Vec<usize>>,
    pub directions: Vec<Direction>,
    /// Θ-classes of the embedded graph, indexed as in the directions.
    pub classes: Vec<ThetaClass>,
    /// `edge_class[j][e]` is the class behind edge `e` of factor `j`.
    pub edge_class: Vec<Vec<usize>>,
}

impl TreeProductEmbedding {
    pub fn dimension(&self) -> usize {
        self.factors.len()
    }

    pub fn coordinates(&self, v: usize) -> &[usize] {
        &self.coords[v]
    }

    fn product_distance(&self, u: usize, v: usize) -> Option<usize> {
        self.factors
            .iter()
            .enumerate()
            .map(|(j, t)| t.distance(self.coords[u][j], self.coords[v][j]))
            .sum()
    }

    /// Host distances equal summed factor distances for every pair.
    pub fn verify_isometry(&self, m: &Graph) -> bool {
        (0..m.n()).all(|u| (u..m.n()).all(|v| m.distance(u, v) == self.product_distance(u, v)))
    }

    /// Every factor node and every factor edge is hit by the image.
    pub fn verify_economy(&self, m: &Graph) -> bool {
        self.factors.iter().enumerate().all(|(j, t)| {
            let nodes_hit = (0..t.n()).all(|x| (0..m.n()).any(|v| self.coords[v][j] == x));
            let edges_hit = t
                .edges()
                .iter()
                .all(|&e| !self.edge_preimage(m, j, e).is_empty());
            nodes_hit && edges_hit
        })
    }

    /// Host vertices whose `j`-th coordinate is `t`.
    pub fn fiber(&self, j: usize, t: usize) -> VertexSet {
        (0..self.coords.len())
            .filter(|&v| self.coords[v][j] == t)
            .collect()
    }

    /// Host edges that map onto factor edge `e` of factor `j`.
    pub fn edge_preimage(&self, m: &Graph, j: usize, e: (usize, usize)) -> Vec<(usize, usize)> {
        let target = (e.0.min(e.1), e.0.max(e.1));
        m.edges()
            .iter()
            .copied()
            .filter(|&(u, v)| {
                let (a, b) = (self.coords[u][j], self.coords[v][j]);
                (a.min(b), a.max(b)) == target
            })
            .collect()
    }
}

/// Chromatic number of the crossing graph; at least 1 since `K1` is a tree.
pub fn tree_dimension(m: &Graph) -> Result<usize> {
    let classes = theta_classes(m)?;
    Ok(chromatic_number(&crossing_graph_of(&classes)).0.max(1))
}

/// Embeds a median graph into the product of `tree_dimension` quotient trees.
pub fn embed_tree_product(m: &Graph) -> Result<TreeProductEmbedding> {
    let classes = theta_classes(m)?;
    embed_with_classes(m, classes)
}

pub(crate) fn embed_with_classes(
    m: &Graph,
    classes: Vec<ThetaClass>,
) -> Result<TreeProductEmbedding> {
    let crossing = crossing_graph_of(&classes);
    let (k, coloring) = chromatic_number(&crossing);
    let mut directions: Vec<Direction> = (0..k.max(1))
        .map(|_| Direction {
            classes: Vec::new(),
        })
        .collect();
    for i in 0..classes.len() {
        directions[coloring.color(i) - 1].classes.push(i);
    }

    let mut class_of_edge = vec![usize::MAX; m.m()];
    for (ci, c) in classes.iter().enumerate() {
        for &(x, y) in &c.edges {
            let idx = m
                .edges()
                .binary_search(&(x.min(y), x.max(y)))
                .map_err(|_| Error::Internal("class edge missing from graph".into()))?;
            class_of_edge[idx] = ci;
        }
    }

    let mut factors = Vec::with_capacity(directions.len());
    let mut edge_class = Vec::with_capacity(directions.len());
    let mut coords = vec![Vec::with_capacity(directions.len()); m.n()];
    for dir in &directions {
        let in_dir = |ci: usize| dir.classes.contains(&ci);
        let mut comp = vec![usize::MAX; m.n()];
        let mut reps = Vec::new();
        for s in 0..m.n() {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = reps.len();
            reps.push(s);
            comp[s] = id;
            let mut stack = vec![s];
            while let Some(x) = stack.pop() {
                for &y in m.neighbors(x) {
                    let idx = m.edges().binary_search(&(x.min(y), x.max(y))).unwrap();
                    if comp[y] == usize::MAX && !in_dir(class_of_edge[idx]) {
                        comp[y] = id;
                        stack.push(y);
                    }
                }
            }
        }
        let names: Vec<String> = reps.iter().map(|&v| m.name(v).to_string()).collect();
        let mut tree_edges = Vec::new();
        let mut classes_by_edge = BTreeMap::new();
        for &ci in &dir.classes {
            let (x, y) = classes[ci].edges[0];
            let (a, b) = (comp[x], comp[y]);
            if a == b {
                return Err(Error::Internal(format!(
                    "class {} collapses in its own quotient",
                    classes[ci].label(m)
                )));
            }
            tree_edges.push((a, b));
            classes_by_edge.insert((a.min(b), a.max(b)), ci);
        }
        let tree = Graph::new(names, tree_edges)
            .map_err(|e| Error::Internal(format!("quotient is not a simple graph: {e}")))?;
        if !tree.is_tree() {
            return Err(Error::Internal(
                "quotient of a direction is not a tree".into(),
            ));
        }
        edge_class.push(tree.edges().iter().map(|e| classes_by_edge[e]).collect());
        for v in 0..m.n() {
            coords[v].push(comp[v]);
        }
        factors.push(tree);
    }

    Ok(TreeProductEmbedding {
        factors,
        coords,
        directions,
        classes,
        edge_class,
    })
}

/// Serialized form of an embedding: factors as edge-list text and the
/// coordinate tuple of every host vertex by factor-node name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddingDocument {
    pub factors: Vec<Graph>,
    pub coords: Vec<(String, Vec<String>)>,
}

impl EmbeddingDocument {
    pub fn from_embedding(m: &Graph, emb: &TreeProductEmbedding) -> Self {
        let coords = (0..m.n())
            .map(|v| {
                let tuple = emb.coords[v]
                    .iter()
                    .enumerate()
                    .map(|(j, &t)| emb.factors[j].name(t).to_string())
                    .collect();
                (m.name(v).to_string(), tuple)
            })
            .collect();
        EmbeddingDocument {
            factors: emb.factors.clone(),
            coords,
        }
    }

    pub fn to_value(&self) -> Value {
        let mut doc = Map::new();
        doc.insert("format".into(), EMBEDDING_FORMAT.into());
        doc.insert(
            "factors".into(),
            self.factors
                .iter()
                .map(|f| Value::from(f.to_edge_list()))
                .collect(),
        );
        let mut coords = Map::new();
        for (v, tuple) in &self.coords {
            coords.insert(v.clone(), tuple.iter().cloned().collect());
        }
        doc.insert("coords".into(), Value::Object(coords));
        Value::Object(doc)
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(&self.to_value()).expect("serializable");
        text.push('\n');
        text
    }

    pub fn parse(text: &str) -> Result<Self> {
        let value: Value = serde_json::from_str(text)?;
        let obj = value
            .as_object()
            .ok_or_else(|| Error::Format("embedding document must be an object".into()))?;
        match obj.get("format").and_then(Value::as_str) {
            Some(EMBEDDING_FORMAT) => {}
            other => {
                return Err(Error::Format(format!(
                    "expected format {EMBEDDING_FORMAT:?}, found {other:?}"
                )))
            }
        }
        let factors = obj
            .get("factors")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Format("missing factors array".into()))?
            .iter()
            .map(|f| {
                f.as_str()
                    .ok_or_else(|| Error::Format("factor must be edge-list text".into()))
                    .and_then(Graph::parse)
            })
            .collect::<Result<Vec<_>>>()?;
        let coords = obj
            .get("coords")
            .and_then(Value::as_object)
            .ok_or_else(|| Error::Format("missing coords object".into()))?
            .iter()
            .map(|(v, tuple)| {
                let tuple = tuple
                    .as_array()
                    .ok_or_else(|| Error::Format(format!("coords of {v:?} must be an array")))?
                    .iter()
                    .map(|t| {
                        t.as_str()
                            .map(str::to_string)
                            .ok_or_else(|| Error::Format("factor node must be a string".into()))
                    })
                    .collect::<Result<Vec<_>>>()?;
                if tuple.len() != factors.len() {
                    return Err(Error::Format(format!(
                        "coords of {v:?} has {} entries for {} factors",
                        tuple.len(),
                        factors.len()
                    )));
                }
                for (j, t) in tuple.iter().enumerate() {
                    factors[j].require(t)?;
                }
                Ok((v.clone(), tuple))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(EmbeddingDocument { factors, coords })
    }
}
