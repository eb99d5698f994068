//! Temporal quantities: piecewise-constant functions of integer time.
//!
//! A quantity is stored as a sequence of half-open intervals `[start, finish)`
//! carrying a value. Instants not covered by any interval are *undefined*;
//! the undefined marker is the identity of [`TemporalQuantity::sum`] and
//! absorbing for [`TemporalQuantity::product`]. It is distinct from the
//! semiring zero, and an explicit `0` value is a legitimate interval.
//!
//! Every constructor and operation returns the canonical form: intervals are
//! non-empty, ordered, disjoint, and adjacent intervals with equal values are
//! merged. Two canonical quantities are equal as functions iff their interval
//! lists are equal.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::horizon::TimeHorizon;
use crate::semiring::Semiring;

/// Discrete time (years, or band indices after recoding).
pub type Time = i64;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Interval<V> {
    pub start: Time,
    pub finish: Time,
    pub value: V,
}

impl<V> Interval<V> {
    pub fn len(&self) -> Time {
        self.finish - self.start
    }

    pub fn is_empty(&self) -> bool {
        self.finish <= self.start
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct TemporalQuantity<V = f64> {
    intervals: Vec<Interval<V>>,
}

impl<V> Default for TemporalQuantity<V> {
    fn default() -> Self {
        TemporalQuantity { intervals: Vec::new() }
    }
}

fn push_merge<V: PartialEq>(out: &mut Vec<Interval<V>>, start: Time, finish: Time, value: V) {
    if let Some(last) = out.last_mut() {
        if last.finish == start && last.value == value {
            last.finish = finish;
            return;
        }
    }
    out.push(Interval { start, finish, value });
}

impl<V: Copy + PartialEq> TemporalQuantity<V> {
    /// The everywhere-undefined quantity.
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a quantity from `(start, finish, value)` triples, validating
    /// order and disjointness and merging equal neighbours.
    pub fn from_triples<I>(triples: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Time, Time, V)>,
    {
        let mut out: Vec<Interval<V>> = Vec::new();
        let mut prev_finish: Option<Time> = None;
        for (start, finish, value) in triples {
            if start >= finish {
                return Err(Error::EmptyInterval { start, finish });
            }
            if let Some(pf) = prev_finish {
                if start < pf {
                    return Err(Error::Unordered { start, finish });
                }
            }
            prev_finish = Some(finish);
            push_merge(&mut out, start, finish, value);
        }
        Ok(TemporalQuantity { intervals: out })
    }

    /// A single interval `[start, finish)` with `value`.
    pub fn constant(start: Time, finish: Time, value: V) -> Result<Self> {
        Self::from_triples([(start, finish, value)])
    }

    /// The quantity equal to `one` on the whole horizon.
    pub fn ones(horizon: TimeHorizon, one: V) -> Self {
        TemporalQuantity {
            intervals: alloc::vec![Interval { start: horizon.first(), finish: horizon.end(), value: one }],
        }
    }

    pub fn intervals(&self) -> &[Interval<V>] {
        &self.intervals
    }

    pub fn triples(&self) -> impl Iterator<Item = (Time, Time, V)> + '_ {
        self.intervals.iter().map(|iv| (iv.start, iv.finish, iv.value))
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    /// Value at instant `t`; `None` is the undefined marker.
    pub fn value_at(&self, t: Time) -> Option<V> {
        let k = self.intervals.partition_point(|iv| iv.finish <= t);
        self.intervals.get(k).filter(|iv| iv.start <= t).map(|iv| iv.value)
    }

    /// Maximal runs of the activity set, ignoring values.
    pub fn activity(&self) -> Vec<(Time, Time)> {
        let mut runs: Vec<(Time, Time)> = Vec::new();
        for iv in &self.intervals {
            match runs.last_mut() {
                Some(last) if last.1 == iv.start => last.1 = iv.finish,
                _ => runs.push((iv.start, iv.finish)),
            }
        }
        runs
    }

    /// Pointwise merge of two quantities. `f` sees each elementary segment of
    /// `T_self ∪ T_other` with the values of both sides (never both `None`)
    /// and returns the result value, or `None` to leave the segment undefined.
    pub fn combine<W, U, F>(&self, other: &TemporalQuantity<W>, mut f: F) -> TemporalQuantity<U>
    where
        W: Copy + PartialEq,
        U: Copy + PartialEq,
        F: FnMut(Option<V>, Option<W>) -> Option<U>,
    {
        let a = &self.intervals;
        let b = &other.intervals;
        let mut t = match (a.first(), b.first()) {
            (None, None) => return TemporalQuantity::default(),
            (Some(x), None) => x.start,
            (None, Some(y)) => y.start,
            (Some(x), Some(y)) => x.start.min(y.start),
        };
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        loop {
            while i < a.len() && a[i].finish <= t {
                i += 1;
            }
            while j < b.len() && b[j].finish <= t {
                j += 1;
            }
            if i == a.len() && j == b.len() {
                break;
            }
            let (va, na) = match a.get(i) {
                Some(iv) if iv.start <= t => (Some(iv.value), iv.finish),
                Some(iv) => (None, iv.start),
                None => (None, Time::MAX),
            };
            let (vb, nb) = match b.get(j) {
                Some(iv) if iv.start <= t => (Some(iv.value), iv.finish),
                Some(iv) => (None, iv.start),
                None => (None, Time::MAX),
            };
            let next = na.min(nb);
            if va.is_some() || vb.is_some() {
                if let Some(v) = f(va, vb) {
                    push_merge(&mut out, t, next, v);
                }
            }
            t = next;
        }
        TemporalQuantity { intervals: out }
    }

    pub fn map<U, F>(&self, mut f: F) -> TemporalQuantity<U>
    where
        U: Copy + PartialEq,
        F: FnMut(V) -> U,
    {
        let mut out = Vec::with_capacity(self.intervals.len());
        for iv in &self.intervals {
            push_merge(&mut out, iv.start, iv.finish, f(iv.value));
        }
        TemporalQuantity { intervals: out }
    }

    /// `(a + b)(t) = a(t) + b(t)` on `T_a ∪ T_b`; undefined is the identity.
    pub fn sum<S: Semiring<Value = V>>(&self, other: &Self, sr: &S) -> Self {
        if other.is_empty() {
            return self.clone();
        }
        if self.is_empty() {
            return other.clone();
        }
        self.combine(other, |x, y| match (x, y) {
            (Some(x), Some(y)) => Some(sr.add(x, y)),
            (x, y) => x.or(y),
        })
    }

    /// `(a · b)(t) = a(t) · b(t)` on `T_a ∩ T_b`.
    pub fn product<S: Semiring<Value = V>>(&self, other: &Self, sr: &S) -> Self {
        if self.is_empty() || other.is_empty() {
            return Self::default();
        }
        self.combine(other, |x, y| match (x, y) {
            (Some(x), Some(y)) => Some(sr.mul(x, y)),
            _ => None,
        })
    }
}

/// Threshold comparison used by [`TemporalQuantity::cut`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cut {
    /// keep `v > threshold`
    Greater,
    /// keep `v >= threshold`
    GreaterOrEqual,
}

/// `(min time, max time, min value, max value)` of a non-empty quantity.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Summary {
    pub min_time: Time,
    pub max_time: Time,
    pub min_value: f64,
    pub max_value: f64,
}

impl TemporalQuantity<f64> {
    /// Running total over instants: the value at `t` is the sum of `a(t')`
    /// over defined instants `t' <= t`. The result is defined from the first
    /// start up to `horizon.end()`.
    ///
    /// Every interval must lie inside `[horizon.first(), horizon.end())`.
    pub fn cumulate(&self, horizon: TimeHorizon) -> Result<Self> {
        self.check_inside(horizon.first(), horizon.end())?;
        let mut out = Vec::new();
        let mut running = 0.0;
        for (k, iv) in self.intervals.iter().enumerate() {
            let next_start = self.intervals.get(k + 1).map_or(horizon.end(), |n| n.start);
            if iv.value == 0.0 {
                push_merge(&mut out, iv.start, next_start, running);
                continue;
            }
            for t in iv.start..iv.finish {
                running += iv.value;
                push_merge(&mut out, t, t + 1, running);
            }
            if iv.finish < next_start {
                push_merge(&mut out, iv.finish, next_start, running);
            }
        }
        Ok(TemporalQuantity { intervals: out })
    }

    /// Whether the activity set is an up-set of the horizon and the values
    /// never decrease.
    pub fn is_cumulative(&self, horizon: TimeHorizon) -> bool {
        let ivs = &self.intervals;
        let Some(last) = ivs.last() else {
            return true;
        };
        let chained = ivs
            .windows(2)
            .all(|w| w[0].finish == w[1].start && w[0].value <= w[1].value);
        chained && last.finish >= horizon.end()
    }

    /// Drops every interval whose value fails the threshold test.
    pub fn cut(&self, threshold: f64, mode: Cut) -> Self {
        let keep = |v: f64| match mode {
            Cut::Greater => v > threshold,
            Cut::GreaterOrEqual => v >= threshold,
        };
        TemporalQuantity {
            intervals: self.intervals.iter().copied().filter(|iv| keep(iv.value)).collect(),
        }
    }

    pub fn cut_gt(&self, threshold: f64) -> Self {
        self.cut(threshold, Cut::Greater)
    }

    pub fn cut_ge(&self, threshold: f64) -> Self {
        self.cut(threshold, Cut::GreaterOrEqual)
    }

    /// Recodes time into bands `[p[k], p[k+1])`. Band `k` (1-based) becomes
    /// the interval `[k, k+1)` holding the sum of the quantity over the
    /// band's defined instants. Bands without defined instants stay undefined.
    pub fn change_time(&self, breaks: &[Time]) -> Result<Self> {
        if breaks.len() < 2 || breaks.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Breakpoints);
        }
        self.check_inside(breaks[0], breaks[breaks.len() - 1])?;
        let mut out = Vec::new();
        let mut i = 0;
        for (k, band) in breaks.windows(2).enumerate() {
            let (lo, hi) = (band[0], band[1]);
            let mut acc: Option<f64> = None;
            while let Some(iv) = self.intervals.get(i) {
                let s = iv.start.max(lo);
                let f = iv.finish.min(hi);
                if s < f {
                    *acc.get_or_insert(0.0) += iv.value * (f - s) as f64;
                }
                if iv.finish <= hi {
                    i += 1;
                } else {
                    break;
                }
            }
            if let Some(v) = acc {
                let band_index = k as Time + 1;
                push_merge(&mut out, band_index, band_index + 1, v);
            }
        }
        Ok(TemporalQuantity { intervals: out })
    }

    /// `Σ v · (f - s)`.
    pub fn total(&self) -> f64 {
        self.intervals.iter().map(|iv| iv.value * iv.len() as f64).sum()
    }

    pub fn summary(&self) -> Option<Summary> {
        let first = self.intervals.first()?;
        let last = self.intervals.last()?;
        let (min_value, max_value) = self
            .intervals
            .iter()
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), iv| (lo.min(iv.value), hi.max(iv.value)));
        Some(Summary { min_time: first.start, max_time: last.finish, min_value, max_value })
    }

    /// Fills the undefined parts of the horizon with explicit zeros.
    pub fn pad_zero(&self, horizon: TimeHorizon) -> Self {
        self.combine(&TemporalQuantity::ones(horizon, 0.0), |x, y| x.or(y))
    }

    fn check_inside(&self, low: Time, high: Time) -> Result<()> {
        match (self.intervals.first(), self.intervals.last()) {
            (Some(first), Some(last)) if first.start < low || last.finish > high => {
                let bad = if first.start < low { first } else { last };
                Err(Error::OutsideRange { start: bad.start, finish: bad.finish, low, high })
            }
            _ => Ok(()),
        }
    }
}

/// Formats a value the way the listings do: integral values without a
/// decimal point, others in shortest round-trip form.
#[derive(Clone, Copy, Debug)]
pub struct Num(pub f64);

impl fmt::Display for Num {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = self.0;
        if v.is_finite() && v.abs() < 9.0e15 && v == (v as i64) as f64 {
            write!(f, "{}", v as i64)
        } else {
            write!(f, "{}", v)
        }
    }
}

impl fmt::Display for TemporalQuantity<f64> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, iv) in self.intervals.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "({}, {}, {})", iv.start, iv.finish, Num(iv.value))?;
        }
        f.write_str("]")
    }
}
