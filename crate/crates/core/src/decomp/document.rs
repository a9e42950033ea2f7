use serde_json::{Map, Value};

use super::Decomposition;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DECOMPOSITION_FORMAT: &str = "mwkit-decomposition-v1";

fn graph_value(g: &Graph) -> Value {
    let mut obj = Map::new();
    obj.insert("vertices".into(), g.names().iter().cloned().collect());
    obj.insert(
        "edges".into(),
        g.named_edges()
            .map(|(u, v)| Value::from(vec![u, v]))
            .collect(),
    );
    Value::Object(obj)
}

fn graph_from_value(field: &str, value: &Value) -> Result<Graph> {
    let bad = |what: &str| Error::Format(format!("{field}: {what}"));
    match value {
        Value::String(text) => Graph::parse(text),
        Value::Object(obj) => {
            let names: Vec<String> = obj
                .get("vertices")
                .and_then(Value::as_array)
                .ok_or_else(|| bad("missing vertices array"))?
                .iter()
                .map(|v| {
                    v.as_str()
                        .map(str::to_string)
                        .ok_or_else(|| bad("vertex must be a string"))
                })
                .collect::<Result<_>>()?;
            let index: std::collections::HashMap<&str, usize> = names
                .iter()
                .enumerate()
                .map(|(i, n)| (n.as_str(), i))
                .collect();
            let edges = obj
                .get("edges")
                .and_then(Value::as_array)
                .ok_or_else(|| bad("missing edges array"))?
                .iter()
                .map(|e| {
                    let pair = e
                        .as_array()
                        .filter(|p| p.len() == 2)
                        .ok_or_else(|| bad("edge must be a pair"))?;
                    let end = |x: &Value| -> Result<usize> {
                        let name = x.as_str().ok_or_else(|| bad("edge end must be a string"))?;
                        index
                            .get(name)
                            .copied()
                            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
                    };
                    Ok((end(&pair[0])?, end(&pair[1])?))
                })
                .collect::<Result<Vec<_>>>()?;
            Graph::new(names, edges)
        }
        _ => Err(bad("expected edge-list text or an object")),
    }
}

impl Decomposition {
    pub fn to_value(&self) -> Value {
        let mut doc = Map::new();
        doc.insert("format".into(), DECOMPOSITION_FORMAT.into());
        doc.insert("subject".into(), graph_value(&self.subject));
        doc.insert("host".into(), graph_value(&self.host));
        let mut bags = Map::new();
        for a in 0..self.host.n() {
            bags.insert(self.host.name(a).to_string(), self.bag_names(a).into());
        }
        doc.insert("bags".into(), Value::Object(bags));
        Value::Object(doc)
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(&self.to_value()).expect("serializable");
        text.push('\n');
        text
    }

    pub fn from_value(value: &Value) -> Result<Self> {
        let obj = value
            .as_object()
            .ok_or_else(|| Error::Format("decomposition document must be an object".into()))?;
        match obj.get("format").and_then(Value::as_str) {
            Some(DECOMPOSITION_FORMAT) => {}
            other => {
                return Err(Error::Format(format!(
                    "expected format {DECOMPOSITION_FORMAT:?}, found {other:?}"
                )))
            }
        }
        let subject = graph_from_value(
            "subject",
            obj.get("subject")
                .ok_or_else(|| Error::Format("missing subject".into()))?,
        )?;
        let host = graph_from_value(
            "host",
            obj.get("host")
                .ok_or_else(|| Error::Format("missing host".into()))?,
        )?;
        let bag_obj = obj
            .get("bags")
            .and_then(Value::as_object)
            .ok_or_else(|| Error::Format("missing bags object".into()))?;
        let mut bags = vec![None; host.n()];
        for (node, members) in bag_obj {
            let a = host.require(node)?;
            let names = members
                .as_array()
                .ok_or_else(|| Error::Format(format!("bag of {node:?} must be an array")))?
                .iter()
                .map(|v| {
                    v.as_str()
                        .ok_or_else(|| Error::Format("bag member must be a string".into()))
                })
                .collect::<Result<Vec<_>>>()?;
            let set = subject.set_of(&names)?;
            if set.len() != names.len() {
                return Err(Error::Format(format!("bag of {node:?} repeats a vertex")));
            }
            bags[a] = Some(set);
        }
        let bags = bags
            .into_iter()
            .enumerate()
            .map(|(a, b)| {
                b.ok_or_else(|| Error::Format(format!("no bag for host node {:?}", host.name(a))))
            })
            .collect::<Result<Vec<_>>>()?;
        Decomposition::new(subject, host, bags)
    }

    pub fn parse(text: &str) -> Result<Self> {
        Decomposition::from_value(&serde_json::from_str(text)?)
    }
}
