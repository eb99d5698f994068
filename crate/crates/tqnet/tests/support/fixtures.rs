//! Random static networks, partitions and temporal networks for IO tests.

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::SliceRandom;
use rand::Rng;
use tqnet::pajek::{StaticLink, StaticNetwork, TimePartition};
use tqnet_core::{Kind, NodeTable, TemporalNetwork, TemporalQuantity, Time, TimeHorizon};

const WORDS: [&str; 8] = ["SMITH_J", "Müller K", "o'brien", "ZHANG-W", "a b c", "Ñandú", "x", "PETERS_H"];

pub fn label(rng: &mut impl Rng, i: usize) -> String {
    format!("{} {i}", WORDS[rng.random_range(0..WORDS.len())])
}

/// Arcs first, then edges, as the writer emits them.
pub fn static_network(rng: &mut impl Rng, n1: Option<usize>, n: usize, links: usize) -> StaticNetwork {
    let labels = (0..n).map(|i| label(rng, i)).collect();
    let mut out = Vec::new();
    for _ in 0..links {
        let (tail, head) = match n1 {
            Some(n1) => (rng.random_range(0..n1), rng.random_range(n1..n)),
            None => (rng.random_range(0..n), rng.random_range(0..n)),
        };
        let weight = if rng.random_bool(0.7) {
            f64::from(rng.random_range(1..5u32))
        } else {
            rng.random_range(0.01..10.0)
        };
        out.push(StaticLink { tail, head, weight, directed: n1.is_some() || rng.random_bool(0.6) });
    }
    out.sort_by_key(|l| !l.directed);
    StaticNetwork { labels, mode1: n1, links: out }
}

pub fn partition(rng: &mut impl Rng, n: usize, first: Time, last: Time, undated: f64) -> TimePartition {
    let years = (0..n)
        .map(|_| if rng.random_bool(undated) { 0 } else { rng.random_range(first..=last) })
        .collect();
    TimePartition { years }
}

fn real_quantity(rng: &mut impl Rng, first: Time, end: Time) -> TemporalQuantity {
    loop {
        let mut triples = Vec::new();
        let mut t = rng.random_range(first..end);
        while t < end {
            let f = (t + rng.random_range(1..4)).min(end);
            if rng.random_bool(0.7) {
                let v = if rng.random_bool(0.5) { f64::from(rng.random_range(0..9u32)) } else { rng.random_range(-5.0..5.0) };
                triples.push((t, f, v));
            }
            t = f;
        }
        let q = TemporalQuantity::from_triples(triples).unwrap();
        if !q.is_empty() {
            return q;
        }
    }
}

/// One-mode (directed or not) or two-mode network with real values.
pub fn temporal_network(rng: &mut impl Rng, k: usize) -> TemporalNetwork {
    let first = rng.random_range(1900..2000);
    let horizon = TimeHorizon::new(first, first + rng.random_range(0..25)).unwrap();
    let n = rng.random_range(1..12);
    let rows = NodeTable::new((0..n).map(|i| label(rng, i))).unwrap();
    let mut net = match k % 3 {
        0 => TemporalNetwork::two_mode(rows, NodeTable::new((0..rng.random_range(1..9)).map(|i| label(rng, 100 + i))).unwrap(), horizon),
        1 => TemporalNetwork::one_mode(rows, horizon, true),
        _ => TemporalNetwork::one_mode(rows, horizon, false),
    };
    let (nr, nc) = (net.rows().len(), net.cols().len());
    for _ in 0..rng.random_range(0..3 * nr) {
        let q = real_quantity(rng, horizon.first(), horizon.end());
        net.insert(rng.random_range(0..nr), rng.random_range(0..nc), q).unwrap();
    }
    net
}

/// Synthetic works × authors network: every work has at least one author,
/// `arcs` links in total, authors drawn with a skewed popularity.
pub fn affiliation(rng: &mut impl Rng, works: usize, authors: usize, arcs: usize, first: Time, last: Time) -> TemporalNetwork {
    let mut per_work = vec![1usize; works];
    for _ in works..arcs {
        per_work[rng.random_range(0..works)] += 1;
    }
    let rows = NodeTable::new((0..works).map(|i| format!("W{i}"))).unwrap();
    let cols = NodeTable::new((0..authors).map(|i| format!("A{i}"))).unwrap();
    let mut net = TemporalNetwork::two_mode(rows, cols, TimeHorizon::new(first, last).unwrap());
    for (w, &k) in per_work.iter().enumerate() {
        let year = rng.random_range(first..=last);
        let mut chosen = BTreeSet::new();
        while chosen.len() < k.min(authors) {
            let u: f64 = rng.random();
            chosen.insert(((u * u) * authors as f64) as usize);
        }
        let mut chosen: Vec<_> = chosen.into_iter().collect();
        chosen.shuffle(rng);
        for a in chosen {
            net.insert(w, a, TemporalQuantity::constant(year, year + 1, 1.0).unwrap()).unwrap();
        }
    }
    net.with_kind(Kind::Instantaneous).unwrap()
}

/// Unordered co-author pairs `{a, b}` (loops included) with their summed
/// weight, counted directly from each work's author list.
pub fn pair_counts(net: &TemporalNetwork) -> BTreeMap<(usize, usize), f64> {
    let mut pairs = BTreeMap::new();
    for w in 0..net.rows().len() {
        let authors: Vec<(usize, f64)> = net.row_links(w).map(|(a, q)| (a, q.total())).collect();
        for (x, &(a, wa)) in authors.iter().enumerate() {
            for &(b, wb) in &authors[x..] {
                *pairs.entry((a.min(b), a.max(b))).or_insert(0.0) += wa * wb;
            }
        }
    }
    pairs
}
