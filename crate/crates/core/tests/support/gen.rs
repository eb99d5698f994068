//! Seeded random quantities and networks for property tests.

#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tqnet_core::{Kind, NodeTable, TemporalNetwork, TemporalQuantity, TimeHorizon};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shape {
    /// Random integer-valued quantity with gaps.
    General,
    /// Single unit interval with value 1.
    BinaryInstant,
    /// `[(d, len, w)]` with integer weight.
    Cumulative,
}

pub fn horizon(len: i64) -> TimeHorizon {
    TimeHorizon::new(0, len - 1).unwrap()
}

pub fn labels(prefix: &str, n: usize) -> NodeTable {
    NodeTable::new((0..n).map(|i| format!("{prefix}{i}"))).unwrap()
}

/// Integer-valued quantity over `[0, len)` built from random runs.
pub fn quantity(rng: &mut impl Rng, len: i64, max_value: u32) -> TemporalQuantity {
    let mut triples = Vec::new();
    let mut t = rng.random_range(0..len);
    while t < len {
        let f = (t + rng.random_range(1..5)).min(len);
        if rng.random_bool(0.6) {
            triples.push((t, f, f64::from(rng.random_range(0..=max_value))));
        }
        t = f;
    }
    TemporalQuantity::from_triples(triples).unwrap()
}

pub fn shaped(rng: &mut impl Rng, len: i64, shape: Shape) -> TemporalQuantity {
    match shape {
        Shape::General => {
            let mut q = quantity(rng, len, 4);
            while q.is_empty() {
                q = quantity(rng, len, 4);
            }
            q
        }
        Shape::BinaryInstant => {
            let d = rng.random_range(0..len);
            TemporalQuantity::constant(d, d + 1, 1.0).unwrap()
        }
        Shape::Cumulative => {
            let d = rng.random_range(0..len);
            TemporalQuantity::constant(d, len, f64::from(rng.random_range(1..4u32))).unwrap()
        }
    }
}

/// Random sparse network. `cols == None` makes it one-mode on `rows` nodes.
pub fn network(
    rng: &mut impl Rng,
    row_labels: &NodeTable,
    col_labels: Option<&NodeTable>,
    density: f64,
    len: i64,
    shape: Shape,
) -> TemporalNetwork {
    let mut net = match col_labels {
        Some(cols) => TemporalNetwork::two_mode(row_labels.clone(), cols.clone(), horizon(len)),
        None => TemporalNetwork::one_mode(row_labels.clone(), horizon(len), true),
    };
    let n_cols = col_labels.unwrap_or(row_labels).len();
    for i in 0..row_labels.len() {
        for j in 0..n_cols {
            if rng.random_bool(density) {
                net.insert(i, j, shaped(rng, len, shape)).unwrap();
            }
        }
    }
    let kind = match shape {
        Shape::General => Kind::General,
        Shape::BinaryInstant => Kind::Instantaneous,
        Shape::Cumulative => Kind::Cumulative,
    };
    net.with_kind(kind).unwrap()
}
