//! Sparse temporal networks.
//!
//! A network is a matrix of temporal quantities. Its rows and columns are
//! labelled node tables: a one-mode network uses the same table for both, a
//! two-mode network has a separate column table (mode 2). Links live in a
//! map keyed by `(row, column)`, so a row's links form a contiguous range.
//!
//! Undirected one-mode networks store each edge once, with `tail <= head`.

use alloc::borrow::Cow;
use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::horizon::TimeHorizon;
use crate::quantity::{TemporalQuantity, Time};
use crate::semiring::{Combinatorial, Semiring};

/// Zero-based position of a node in its table.
pub type NodeId = usize;

/// Labels of one node set, with a reverse index.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct NodeTable {
    labels: Vec<String>,
    index: BTreeMap<String, NodeId>,
}

impl NodeTable {
    /// Fails on the first duplicate label.
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut table = NodeTable::default();
        for label in labels {
            let label = label.into();
            if table.index.contains_key(&label) {
                return Err(Error::DuplicateLabel(label));
            }
            table.index.insert(label.clone(), table.labels.len());
            table.labels.push(label);
        }
        Ok(table)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, id: NodeId) -> Option<&str> {
        self.labels.get(id).map(String::as_str)
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Looks a label up; a missing label is an error, never a default.
    pub fn id(&self, label: &str) -> Result<NodeId> {
        self.index.get(label).copied().ok_or_else(|| Error::UnknownLabel(label.into()))
    }

    pub fn index(&self) -> &BTreeMap<String, NodeId> {
        &self.index
    }
}

/// How a network was temporalized, re-checkable with
/// [`TemporalNetwork::verify_kind`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    /// Every link is a single unit-length interval.
    Instantaneous,
    /// Every link is a cumulative quantity.
    Cumulative,
    General,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Instantaneous => "instantaneous",
            Kind::Cumulative => "cumulative",
            Kind::General => "general",
        }
    }

    pub fn from_name(name: &str) -> Option<Kind> {
        match name {
            "instantaneous" => Some(Kind::Instantaneous),
            "cumulative" => Some(Kind::Cumulative),
            "general" => Some(Kind::General),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct TemporalNetwork {
    rows: NodeTable,
    cols: Option<NodeTable>,
    links: BTreeMap<(NodeId, NodeId), TemporalQuantity>,
    horizon: TimeHorizon,
    directed: bool,
    kind: Kind,
}

impl TemporalNetwork {
    pub fn one_mode(nodes: NodeTable, horizon: TimeHorizon, directed: bool) -> Self {
        TemporalNetwork {
            rows: nodes,
            cols: None,
            links: BTreeMap::new(),
            horizon,
            directed,
            kind: Kind::General,
        }
    }

    /// Links run from `rows` (mode 1) to `cols` (mode 2).
    pub fn two_mode(rows: NodeTable, cols: NodeTable, horizon: TimeHorizon) -> Self {
        TemporalNetwork {
            rows,
            cols: Some(cols),
            links: BTreeMap::new(),
            horizon,
            directed: true,
            kind: Kind::General,
        }
    }

    pub fn is_two_mode(&self) -> bool {
        self.cols.is_some()
    }

    pub fn rows(&self) -> &NodeTable {
        &self.rows
    }

    /// Column table; the row table for one-mode networks.
    pub fn cols(&self) -> &NodeTable {
        self.cols.as_ref().unwrap_or(&self.rows)
    }

    pub fn horizon(&self) -> TimeHorizon {
        self.horizon
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn link_count(&self) -> usize {
        self.links.len()
    }

    pub fn links(&self) -> impl Iterator<Item = ((NodeId, NodeId), &TemporalQuantity)> + '_ {
        self.links.iter().map(|(&k, q)| (k, q))
    }

    fn key(&self, tail: NodeId, head: NodeId) -> (NodeId, NodeId) {
        if !self.directed && tail > head {
            (head, tail)
        } else {
            (tail, head)
        }
    }

    pub fn link(&self, tail: NodeId, head: NodeId) -> Option<&TemporalQuantity> {
        self.links.get(&self.key(tail, head))
    }

    /// Links stored in row `row`, ascending by column.
    pub fn row_links(&self, row: NodeId) -> impl Iterator<Item = (NodeId, &TemporalQuantity)> + '_ {
        self.links.range((row, 0)..=(row, NodeId::MAX)).map(|(&(_, c), q)| (c, q))
    }

    fn check_bounds(&self, tail: NodeId, head: NodeId) -> Result<()> {
        if tail >= self.rows.len() {
            return Err(Error::NodeOutOfRange { index: tail, size: self.rows.len() });
        }
        let n = self.cols().len();
        if head >= n {
            return Err(Error::NodeOutOfRange { index: head, size: n });
        }
        Ok(())
    }

    /// Adds `q` to the link `(tail, head)`, summing with an existing link
    /// under the combinatorial semiring. Empty quantities are ignored.
    pub fn insert(&mut self, tail: NodeId, head: NodeId, q: TemporalQuantity) -> Result<()> {
        self.insert_with(tail, head, q, &Combinatorial)
    }

    pub fn insert_with<S: Semiring<Value = f64>>(
        &mut self,
        tail: NodeId,
        head: NodeId,
        q: TemporalQuantity,
        sr: &S,
    ) -> Result<()> {
        self.check_bounds(tail, head)?;
        if q.is_empty() {
            return Ok(());
        }
        let key = self.key(tail, head);
        match self.links.get_mut(&key) {
            Some(existing) => *existing = existing.sum(&q, sr),
            None => {
                self.links.insert(key, q);
            }
        }
        Ok(())
    }

    /// Declares the kind after checking every link against it.
    pub fn with_kind(mut self, kind: Kind) -> Result<Self> {
        self.kind = kind;
        self.verify_kind()?;
        Ok(self)
    }

    /// Walks all links and confirms the declared kind invariant.
    pub fn verify_kind(&self) -> Result<()> {
        let ok = |q: &TemporalQuantity| match self.kind {
            Kind::General => true,
            Kind::Cumulative => q.is_cumulative(self.horizon),
            Kind::Instantaneous => q.len() == 1 && q.intervals()[0].len() == 1,
        };
        match self.links.iter().find(|(_, q)| !ok(q)) {
            Some((&(tail, head), _)) => Err(Error::KindViolation { tail, head, kind: self.kind.name() }),
            None => Ok(()),
        }
    }

    /// Swaps link directions; two-mode networks also swap their node sets.
    pub fn transpose(&self) -> Self {
        let links = if self.directed {
            self.links.iter().map(|(&(t, h), q)| ((h, t), q.clone())).collect()
        } else {
            self.links.clone()
        };
        let (rows, cols) = match &self.cols {
            Some(cols) => (cols.clone(), Some(self.rows.clone())),
            None => (self.rows.clone(), None),
        };
        TemporalNetwork { rows, cols, links, horizon: self.horizon, directed: self.directed, kind: self.kind }
    }

    /// Drops all `(v, v)` links.
    pub fn without_loops(&self) -> Result<Self> {
        if self.is_two_mode() {
            return Err(Error::NotOneMode);
        }
        let mut out = self.clone();
        out.links.retain(|&(t, h), _| t != h);
        Ok(out)
    }

    /// Directed copy of an undirected network (each edge in both
    /// directions); borrowed unchanged when already directed.
    pub fn directed_view(&self) -> Cow<'_, Self> {
        if self.directed {
            return Cow::Borrowed(self);
        }
        let mut out = self.clone();
        out.directed = true;
        for (&(t, h), q) in &self.links {
            if t != h {
                out.links.insert((h, t), q.clone());
            }
        }
        Cow::Owned(out)
    }

    /// Two-mode view of a one-mode network: the column set is a copy of the
    /// node set and every link keeps its quantity.
    pub fn to_two_mode(&self) -> Result<Self> {
        if self.is_two_mode() {
            return Err(Error::NotOneMode);
        }
        let mut out = self.directed_view().into_owned();
        out.cols = Some(out.rows.clone());
        Ok(out)
    }

    /// Activity runs of a row node, derived from its incident links.
    pub fn row_activity(&self, row: NodeId) -> Vec<(Time, Time)> {
        if self.is_two_mode() {
            activity_union(self.row_links(row).map(|(_, q)| q))
        } else {
            self.node_activity(row)
        }
    }

    /// Activity runs of a column node, derived from its incident links.
    pub fn col_activity(&self, col: NodeId) -> Vec<(Time, Time)> {
        if self.is_two_mode() {
            activity_union(self.links.iter().filter(|((_, h), _)| *h == col).map(|(_, q)| q))
        } else {
            self.node_activity(col)
        }
    }

    fn node_activity(&self, v: NodeId) -> Vec<(Time, Time)> {
        activity_union(self.links.iter().filter(|((t, h), _)| *t == v || *h == v).map(|(_, q)| q))
    }

    pub(crate) fn from_parts(
        rows: NodeTable,
        cols: Option<NodeTable>,
        links: BTreeMap<(NodeId, NodeId), TemporalQuantity>,
        horizon: TimeHorizon,
        directed: bool,
        kind: Kind,
    ) -> Self {
        TemporalNetwork { rows, cols, links, horizon, directed, kind }
    }

    /// Marks a symmetric one-mode network undirected, keeping `tail <= head`.
    /// Links below the diagonal are dropped, so the input must be symmetric.
    pub fn into_undirected(mut self) -> Self {
        self.links.retain(|&(t, h), _| t <= h);
        self.directed = false;
        self
    }

    pub(crate) fn set_kind_unchecked(&mut self, kind: Kind) {
        self.kind = kind;
    }
}

fn activity_union<'a, I>(quantities: I) -> Vec<(Time, Time)>
where
    I: Iterator<Item = &'a TemporalQuantity>,
{
    let mut runs: Vec<(Time, Time)> = quantities.flat_map(|q| q.activity()).collect();
    runs.sort_unstable();
    let mut merged: Vec<(Time, Time)> = Vec::with_capacity(runs.len());
    for (s, f) in runs {
        match merged.last_mut() {
            Some(last) if s <= last.1 => last.1 = last.1.max(f),
            _ => merged.push((s, f)),
        }
    }
    merged
}
