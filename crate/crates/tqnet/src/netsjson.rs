//! netsJSON: JSON interchange for temporal networks.
//!
//! ```json
//! {
//!   "format": "tqnet-netsjson/1",
//!   "info": {
//!     "kind": "instantaneous",
//!     "directed": true,
//!     "twoMode": true,
//!     "time": { "first": 2005, "last": 2016 },
//!     "counts": { "nodes": 3, "mode1": 2, "mode2": 1, "links": 2 }
//!   },
//!   "nodes": [ { "id": 1, "lab": "w1", "mode": 1 }, ... ],
//!   "links": [ { "tail": 1, "head": 3, "tq": [[2005, 2006, 1]] }, ... ]
//! }
//! ```
//!
//! Node ids are 1-based and contiguous. In two-mode networks the mode-1
//! nodes come first and every link runs from mode 1 to mode 2. One-mode
//! networks report `mode2 = 0`. Undirected links have `tail <= head`.
//! Integral values are written without a decimal point, others in shortest
//! round-trip form. Output is pretty-printed with two-space indentation.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use tqnet_core::{Kind, NodeTable, TemporalNetwork, TemporalQuantity, Time, TimeHorizon};

pub const FORMAT: &str = "tqnet-netsjson/1";

/// A quantity value; integral values serialize as JSON integers.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Value(pub f64);

impl Serialize for Value {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let v = self.0;
        if !v.is_finite() {
            return Err(serde::ser::Error::custom(format!("non-finite value {v}")));
        }
        if v.abs() < 9.0e15 && v == (v as i64) as f64 && !(v == 0.0 && v.is_sign_negative()) {
            s.serialize_i64(v as i64)
        } else {
            s.serialize_f64(v)
        }
    }
}

impl<'de> Deserialize<'de> for Value {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        f64::deserialize(d).map(Value)
    }
}

pub type Triple = (Time, Time, Value);

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Document {
    format: String,
    info: Info,
    nodes: Vec<NodeDoc>,
    links: Vec<LinkDoc>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "camelCase")]
struct Info {
    kind: String,
    directed: bool,
    two_mode: bool,
    time: TimeDoc,
    counts: Counts,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TimeDoc {
    first: Time,
    last: Time,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Counts {
    nodes: usize,
    mode1: usize,
    mode2: usize,
    links: usize,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct NodeDoc {
    id: usize,
    lab: String,
    mode: u8,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct LinkDoc {
    tail: usize,
    head: usize,
    tq: Vec<Triple>,
}

pub fn quantity_triples(q: &TemporalQuantity) -> Vec<Triple> {
    q.triples().map(|(s, f, v)| (s, f, Value(v))).collect()
}

fn invalid(path: impl Into<String>, message: impl Into<String>) -> Error {
    Error::NetsJson { path: path.into(), message: message.into() }
}

pub fn to_string(net: &TemporalNetwork) -> Result<String> {
    let n1 = net.rows().len();
    let mut nodes: Vec<NodeDoc> =
        net.rows().labels().iter().enumerate().map(|(i, l)| NodeDoc { id: i + 1, lab: l.clone(), mode: 1 }).collect();
    let offset = if net.is_two_mode() {
        nodes.extend(net.cols().labels().iter().enumerate().map(|(i, l)| NodeDoc { id: n1 + i + 1, lab: l.clone(), mode: 2 }));
        n1
    } else {
        0
    };
    let links = net
        .links()
        .map(|((t, h), q)| LinkDoc { tail: t + 1, head: offset + h + 1, tq: quantity_triples(q) })
        .collect::<Vec<_>>();
    let doc = Document {
        format: FORMAT.into(),
        info: Info {
            kind: net.kind().name().into(),
            directed: net.is_directed(),
            two_mode: net.is_two_mode(),
            time: TimeDoc { first: net.horizon().first(), last: net.horizon().last() },
            counts: Counts {
                nodes: nodes.len(),
                mode1: n1,
                mode2: if net.is_two_mode() { net.cols().len() } else { 0 },
                links: links.len(),
            },
        },
        nodes,
        links,
    };
    let mut text = serde_json::to_string_pretty(&doc).map_err(|e| invalid("$", e.to_string()))?;
    text.push('\n');
    Ok(text)
}

pub fn write_netsjson(net: &TemporalNetwork, path: impl AsRef<Path>) -> Result<()> {
    fs::write(path, to_string(net)?)?;
    Ok(())
}

pub fn read_netsjson(path: impl AsRef<Path>) -> Result<TemporalNetwork> {
    from_str(&fs::read_to_string(path)?)
}

/// Parses and validates a document. Errors name the JSON path of the first
/// offending element.
pub fn from_str(text: &str) -> Result<TemporalNetwork> {
    let de = &mut serde_json::Deserializer::from_str(text);
    let doc: Document = serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        invalid(if path.is_empty() { "$".into() } else { path }, e.into_inner().to_string())
    })?;
    build(doc)
}

fn build(doc: Document) -> Result<TemporalNetwork> {
    if doc.format != FORMAT {
        return Err(invalid("format", format!("expected {FORMAT:?}, found {:?}", doc.format)));
    }
    let info = &doc.info;
    let kind = Kind::from_name(&info.kind).ok_or_else(|| invalid("info.kind", format!("unknown kind {:?}", info.kind)))?;
    let horizon = TimeHorizon::new(info.time.first, info.time.last).map_err(|e| invalid("info.time", e.to_string()))?;
    let counts = &info.counts;
    if counts.nodes != doc.nodes.len() {
        return Err(invalid("info.counts.nodes", format!("says {}, found {} nodes", counts.nodes, doc.nodes.len())));
    }
    if counts.links != doc.links.len() {
        return Err(invalid("info.counts.links", format!("says {}, found {} links", counts.links, doc.links.len())));
    }
    let n1 = if info.two_mode { counts.mode1 } else { doc.nodes.len() };
    if counts.mode1 != n1 || counts.mode1 + counts.mode2 != doc.nodes.len() {
        return Err(invalid("info.counts", "mode sizes do not add up to the node count"));
    }
    if info.two_mode && !info.directed {
        return Err(invalid("info.directed", "two-mode networks are directed"));
    }
    for (k, node) in doc.nodes.iter().enumerate() {
        if node.id != k + 1 {
            return Err(invalid(format!("nodes[{k}].id"), format!("expected id {}, found {}", k + 1, node.id)));
        }
        let mode = if k < n1 { 1 } else { 2 };
        if node.mode != mode {
            return Err(invalid(format!("nodes[{k}].mode"), format!("expected mode {mode}, found {}", node.mode)));
        }
    }
    let table = |range: std::ops::Range<usize>, at: usize| {
        NodeTable::new(doc.nodes[range].iter().map(|n| n.lab.clone()))
            .map_err(|e| invalid(format!("nodes[{at}].lab"), e.to_string()))
    };
    let mut net = if info.two_mode {
        let rows = table(0..n1, 0)?;
        let cols = table(n1..doc.nodes.len(), n1)?;
        TemporalNetwork::two_mode(rows, cols, horizon)
    } else {
        TemporalNetwork::one_mode(table(0..n1, 0)?, horizon, info.directed)
    };
    let offset = if info.two_mode { n1 } else { 0 };
    let n = doc.nodes.len();
    let mut index_of = std::collections::BTreeMap::new();
    for (k, link) in doc.links.iter().enumerate() {
        let at = |field: &str| format!("links[{k}].{field}");
        if link.tail == 0 || link.tail > n1 {
            return Err(invalid(at("tail"), format!("{} is not a mode-1 node id", link.tail)));
        }
        if link.head <= offset || link.head > n {
            return Err(invalid(at("head"), format!("{} is not a valid head id", link.head)));
        }
        let (t, h) = (link.tail - 1, link.head - 1 - offset);
        if !info.directed && t > h {
            return Err(invalid(at("tail"), "undirected links need tail <= head"));
        }
        if link.tq.is_empty() {
            return Err(invalid(at("tq"), "empty quantity"));
        }
        let q = TemporalQuantity::from_triples(link.tq.iter().map(|&(s, f, v)| (s, f, v.0)))
            .map_err(|e| invalid(at("tq"), e.to_string()))?;
        if q.len() != link.tq.len() {
            return Err(invalid(at("tq"), "adjacent intervals with equal values must be merged"));
        }
        if index_of.insert((t, h), k).is_some() {
            return Err(invalid(format!("links[{k}]"), "duplicate link"));
        }
        net.insert(t, h, q).map_err(|e| invalid(format!("links[{k}]"), e.to_string()))?;
    }
    net.with_kind(kind).map_err(|e| match e {
        tqnet_core::Error::KindViolation { tail, head, .. } => {
            invalid(format!("links[{}]", index_of[&(tail, head)]), e.to_string())
        }
        other => invalid("info.kind", other.to_string()),
    })
}
