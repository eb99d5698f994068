//! Network algebra: semiring products, co-occurrence, in/out sums, row
//! normalization and top-link extraction.

use alloc::borrow::Cow;
use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{Error, Result};
use crate::network::{Kind, NodeId, TemporalNetwork};
use crate::quantity::TemporalQuantity;
use crate::semiring::{Combinatorial, Semiring};

/// One output row of a product: `(column, quantity)` ascending by column.
pub type ProductRow = Vec<(NodeId, TemporalQuantity)>;

/// Prepared product `A · B`. Rows can be computed independently (and in any
/// order or in parallel) with [`MultiplyPlan::row`] and then handed back to
/// [`MultiplyPlan::assemble`].
pub struct MultiplyPlan<'a> {
    a: Cow<'a, TemporalNetwork>,
    b: Cow<'a, TemporalNetwork>,
    /// column of `a` -> row of `b`
    inner: Vec<NodeId>,
}

impl<'a> MultiplyPlan<'a> {
    /// Matches the columns of `a` to the rows of `b` by label.
    pub fn new(a: &'a TemporalNetwork, b: &'a TemporalNetwork) -> Result<Self> {
        if a.horizon() != b.horizon() {
            return Err(Error::HorizonMismatch);
        }
        let (left, right) = (a.cols(), b.rows());
        let inner = if left.labels() == right.labels() {
            (0..left.len()).collect()
        } else {
            let inner = left.labels().iter().map(|l| right.id(l).map_err(|_| Error::DimensionMismatch(l.clone())));
            let inner = inner.collect::<Result<Vec<_>>>()?;
            if left.len() != right.len() {
                let missing = right.labels().iter().find(|l| left.id(l).is_err());
                return Err(match missing {
                    Some(l) => Error::DimensionMismatch(l.clone()),
                    None => Error::DimensionSize { left: left.len(), right: right.len() },
                });
            }
            inner
        };
        Ok(MultiplyPlan { a: a.directed_view(), b: b.directed_view(), inner })
    }

    pub fn row_count(&self) -> usize {
        self.a.rows().len()
    }

    /// Row `i` of the product: `c[i, j] = Σ_p a[i, p] · b[p, j]`, accumulated
    /// in ascending `p` then `j`.
    pub fn row<S: Semiring<Value = f64>>(&self, i: NodeId, sr: &S) -> ProductRow {
        let mut acc: BTreeMap<NodeId, TemporalQuantity> = BTreeMap::new();
        for (p, a_ip) in self.a.row_links(i) {
            for (j, b_pj) in self.b.row_links(self.inner[p]) {
                let term = a_ip.product(b_pj, sr);
                if term.is_empty() {
                    continue;
                }
                match acc.get_mut(&j) {
                    Some(sum) => *sum = sum.sum(&term, sr),
                    None => {
                        acc.insert(j, term);
                    }
                }
            }
        }
        acc.into_iter().collect()
    }

    /// Builds the product network from all rows, indexed by row.
    pub fn assemble(&self, rows: Vec<ProductRow>) -> TemporalNetwork {
        let links: BTreeMap<_, _> = rows
            .into_iter()
            .enumerate()
            .flat_map(|(i, row)| row.into_iter().map(move |(j, q)| ((i, j), q)))
            .collect();
        let row_table = self.a.rows().clone();
        let col_table = self.b.cols();
        let cols = if row_table == *col_table { None } else { Some(col_table.clone()) };
        let kind = if self.a.kind() == Kind::Cumulative && self.b.kind() == Kind::Cumulative {
            Kind::Cumulative
        } else {
            Kind::General
        };
        TemporalNetwork::from_parts(row_table, cols, links, self.a.horizon(), true, kind)
    }
}

/// `A · B` over `sr`. The inner node sets must carry the same labels; the
/// result is one-mode when its row and column tables coincide.
pub fn multiply<S: Semiring<Value = f64>>(a: &TemporalNetwork, b: &TemporalNetwork, sr: &S) -> Result<TemporalNetwork> {
    let plan = MultiplyPlan::new(a, b)?;
    let rows = (0..plan.row_count()).map(|i| plan.row(i, sr)).collect();
    Ok(plan.assemble(rows))
}

/// `(A · M) · B`, evaluated left to right.
pub fn triple_product<S: Semiring<Value = f64>>(
    a: &TemporalNetwork,
    m: &TemporalNetwork,
    b: &TemporalNetwork,
    sr: &S,
) -> Result<TemporalNetwork> {
    multiply(&multiply(a, m, sr)?, b, sr)
}

/// Co-occurrence network `Aᵀ · A` on the column set of a two-mode network,
/// stored undirected with loops kept. The loop on `p` counts the events `p`
/// took part in.
pub fn two_to_one_cols<S: Semiring<Value = f64>>(a: &TemporalNetwork, sr: &S) -> Result<TemporalNetwork> {
    if !a.is_two_mode() {
        return Err(Error::NotTwoMode);
    }
    Ok(multiply(&a.transpose(), a, sr)?.into_undirected())
}

/// `Σ_e n[e, node]` over the in-links of a column node. Undirected networks
/// sum over all incident edges. Empty when the node has no links.
pub fn in_sum(net: &TemporalNetwork, node: NodeId) -> Result<TemporalQuantity> {
    let n = net.cols().len();
    if node >= n {
        return Err(Error::NodeOutOfRange { index: node, size: n });
    }
    let incident = |&((t, h), _): &((NodeId, NodeId), &TemporalQuantity)| {
        h == node || (!net.is_directed() && t == node)
    };
    Ok(sum_all(net.links().filter(incident).map(|(_, q)| q)))
}

/// `Σ_p n[node, p]` over the out-links of a row node.
pub fn out_sum(net: &TemporalNetwork, node: NodeId) -> Result<TemporalQuantity> {
    let n = net.rows().len();
    if node >= n {
        return Err(Error::NodeOutOfRange { index: node, size: n });
    }
    if !net.is_directed() {
        return in_sum(net, node);
    }
    Ok(sum_all(net.row_links(node).map(|(_, q)| q)))
}

/// In-sums of every column node in one pass.
pub fn in_sums(net: &TemporalNetwork) -> Vec<TemporalQuantity> {
    let mut sums = alloc::vec![TemporalQuantity::new(); net.cols().len()];
    for ((t, h), q) in net.links() {
        sums[h] = sums[h].sum(q, &Combinatorial);
        if !net.is_directed() && t != h {
            sums[t] = sums[t].sum(q, &Combinatorial);
        }
    }
    sums
}

fn sum_all<'a, I: Iterator<Item = &'a TemporalQuantity>>(quantities: I) -> TemporalQuantity {
    quantities.fold(TemporalQuantity::new(), |acc, q| acc.sum(q, &Combinatorial))
}

/// Fractional normalization: at each instant every defined entry of a row
/// is divided by `max(1, row sum at that instant)`.
pub fn normalize_rows(net: &TemporalNetwork) -> TemporalNetwork {
    let net = net.directed_view();
    let mut links = BTreeMap::new();
    for row in 0..net.rows().len() {
        let divisor = sum_all(net.row_links(row).map(|(_, q)| q)).map(|v| v.max(1.0));
        if divisor.is_empty() {
            continue;
        }
        for (col, q) in net.row_links(row) {
            let scaled = q.combine(&divisor, |x, d| match (x, d) {
                (Some(x), Some(d)) => Some(x / d),
                _ => None,
            });
            links.insert((row, col), scaled);
        }
    }
    let cols = net.is_two_mode().then(|| net.cols().clone());
    let mut out = TemporalNetwork::from_parts(net.rows().clone(), cols, links, net.horizon(), true, Kind::General);
    if net.kind() == Kind::Instantaneous {
        out.set_kind_unchecked(Kind::Instantaneous);
    }
    out
}

/// A link selected by [`top_links`] or [`top_loops`].
#[derive(Clone, Debug, PartialEq)]
pub struct RankedLink {
    pub tail: NodeId,
    pub head: NodeId,
    pub tail_label: String,
    pub head_label: String,
    pub total: f64,
    pub quantity: TemporalQuantity,
}

fn ranked<F>(net: &TemporalNetwork, threshold: f64, select: F) -> Vec<RankedLink>
where
    F: Fn(NodeId, NodeId) -> bool,
{
    let mut out: Vec<RankedLink> = net
        .links()
        .filter(|&((t, h), _)| select(t, h))
        .map(|((t, h), q)| (t, h, q, q.total()))
        .filter(|&(_, _, _, total)| total >= threshold)
        .map(|(t, h, q, total)| RankedLink {
            tail: t,
            head: h,
            tail_label: net.rows().labels()[t].clone(),
            head_label: net.cols().labels()[h].clone(),
            total,
            quantity: q.clone(),
        })
        .collect();
    out.sort_by(|x, y| {
        y.total
            .partial_cmp(&x.total)
            .unwrap_or(Ordering::Equal)
            .then_with(|| x.tail_label.cmp(&y.tail_label))
            .then_with(|| x.head_label.cmp(&y.head_label))
    });
    out
}

/// Non-loop links with total at least `threshold`, by descending total
/// then tail and head label.
pub fn top_links(net: &TemporalNetwork, threshold: f64) -> Vec<RankedLink> {
    let one_mode = !net.is_two_mode();
    ranked(net, threshold, |t, h| !(one_mode && t == h))
}

/// Loops with total at least `threshold`, ordered like [`top_links`].
pub fn top_loops(net: &TemporalNetwork, threshold: f64) -> Vec<RankedLink> {
    if net.is_two_mode() {
        return Vec::new();
    }
    ranked(net, threshold, |t, h| t == h)
}
