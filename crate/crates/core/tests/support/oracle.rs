//! Dense per-instant reference implementations.
//!
//! Quantities are expanded into `Vec<Option<f64>>` over `[0, len)` and every
//! operation is computed instant by instant. Nothing here calls the sparse
//! algebra; only `TemporalQuantity::from_triples` (with unit intervals) and
//! `intervals()` are used to cross between representations.

#![allow(dead_code)]

use tqnet_core::{TemporalNetwork, TemporalQuantity};

pub type Dense = Vec<Option<f64>>;

pub fn to_dense(q: &TemporalQuantity, len: i64) -> Dense {
    let mut d = vec![None; len as usize];
    for iv in q.intervals() {
        for t in iv.start..iv.finish {
            assert!((0..len).contains(&t), "instant {t} outside the dense window");
            d[t as usize] = Some(iv.value);
        }
    }
    d
}

pub fn from_dense(d: &[Option<f64>]) -> TemporalQuantity {
    let triples = d
        .iter()
        .enumerate()
        .filter_map(|(t, v)| v.map(|v| (t as i64, t as i64 + 1, v)));
    TemporalQuantity::from_triples(triples).unwrap()
}

pub fn zip(a: &Dense, b: &Dense, f: impl Fn(Option<f64>, Option<f64>) -> Option<f64>) -> Dense {
    a.iter().zip(b).map(|(&x, &y)| f(x, y)).collect()
}

pub fn dense_sum(a: &Dense, b: &Dense, add: impl Fn(f64, f64) -> f64) -> Dense {
    zip(a, b, |x, y| match (x, y) {
        (Some(x), Some(y)) => Some(add(x, y)),
        (x, y) => x.or(y),
    })
}

pub fn dense_prod(a: &Dense, b: &Dense, mul: impl Fn(f64, f64) -> f64) -> Dense {
    zip(a, b, |x, y| match (x, y) {
        (Some(x), Some(y)) => Some(mul(x, y)),
        _ => None,
    })
}

/// Running sum over defined instants, carried forward to the window end.
pub fn dense_prefix_sum(a: &Dense) -> Dense {
    let mut out = vec![None; a.len()];
    let mut running: Option<f64> = None;
    for (t, v) in a.iter().enumerate() {
        if let Some(v) = v {
            running = Some(running.unwrap_or(0.0) + v);
        }
        out[t] = running;
    }
    out
}

pub fn dense_is_cumulative(a: &Dense) -> bool {
    for t in 0..a.len() {
        if let Some(v) = a[t] {
            for later in &a[t + 1..] {
                match later {
                    Some(w) if *w >= v => {}
                    _ => return false,
                }
            }
        }
    }
    true
}

pub fn dense_total(a: &Dense) -> f64 {
    a.iter().flatten().sum()
}

/// Checks ordering, disjointness and merging of equal neighbours.
pub fn is_canonical(q: &TemporalQuantity) -> bool {
    let ivs = q.intervals();
    ivs.iter().all(|iv| iv.start < iv.finish)
        && ivs
            .windows(2)
            .all(|w| w[0].finish <= w[1].start && !(w[0].finish == w[1].start && w[0].value == w[1].value))
}

/// Dense matrix of dense quantities, `cells[row][col]`.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseNet {
    pub cells: Vec<Vec<Dense>>,
}

impl DenseNet {
    pub fn from_network(net: &TemporalNetwork, len: i64) -> Self {
        let empty = vec![None; len as usize];
        let mut cells = vec![vec![empty; net.cols().len()]; net.rows().len()];
        for ((t, h), q) in net.links() {
            cells[t][h] = to_dense(q, len);
            if !net.is_directed() {
                cells[h][t] = to_dense(q, len);
            }
        }
        DenseNet { cells }
    }

    pub fn rows(&self) -> usize {
        self.cells.len()
    }

    pub fn transpose(&self) -> Self {
        let rows = self.cells.len();
        let cols = self.cells.first().map_or(0, Vec::len);
        let cells = (0..cols).map(|j| (0..rows).map(|i| self.cells[i][j].clone()).collect()).collect();
        DenseNet { cells }
    }

    /// Per-instant matrix product.
    pub fn product(
        &self,
        other: &DenseNet,
        len: i64,
        add: impl Fn(f64, f64) -> f64 + Copy,
        mul: impl Fn(f64, f64) -> f64 + Copy,
    ) -> DenseNet {
        let inner = other.cells.len();
        let cols = other.cells.first().map_or(0, Vec::len);
        let mut cells = vec![vec![vec![None; len as usize]; cols]; self.cells.len()];
        for (i, row) in cells.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                for (t, slot) in cell.iter_mut().enumerate() {
                    let mut acc: Option<f64> = None;
                    for p in 0..inner {
                        if let (Some(x), Some(y)) = (self.cells[i][p][t], other.cells[p][j][t]) {
                            let term = mul(x, y);
                            acc = Some(acc.map_or(term, |a| add(a, term)));
                        }
                    }
                    *slot = acc;
                }
            }
        }
        DenseNet { cells }
    }
}
