//! Value semirings for temporal quantities.
//!
//! A temporal quantity is defined over a semiring `(A, +, ·, 0, 1)`. The
//! undefined marker is not a semiring value: it is modelled as the absence of
//! an interval, so it never reaches these operations.

use core::fmt::Debug;

/// A semiring over a copyable value type.
pub trait Semiring {
    type Value: Copy + PartialEq + Debug;

    fn zero(&self) -> Self::Value;
    fn one(&self) -> Self::Value;
    fn add(&self, a: Self::Value, b: Self::Value) -> Self::Value;
    fn mul(&self, a: Self::Value, b: Self::Value) -> Self::Value;

    /// Equality up to an absolute tolerance. Used by tests and by callers
    /// comparing floating point results.
    fn approx_eq(&self, a: Self::Value, b: Self::Value, tol: f64) -> bool;
}

/// `(ℝ, +, ×, 0, 1)`, the counting semiring used for all network products.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Combinatorial;

/// `(ℝ ∪ {∞}, min, +, ∞, 0)`, the shortest-path semiring.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct MinPlus;

pub(crate) fn close(a: f64, b: f64, tol: f64) -> bool {
    if a == b {
        // covers matching infinities
        return true;
    }
    let d = if a > b { a - b } else { b - a };
    d <= tol
}

impl Semiring for Combinatorial {
    type Value = f64;

    fn zero(&self) -> f64 {
        0.0
    }
    fn one(&self) -> f64 {
        1.0
    }
    fn add(&self, a: f64, b: f64) -> f64 {
        a + b
    }
    fn mul(&self, a: f64, b: f64) -> f64 {
        a * b
    }
    fn approx_eq(&self, a: f64, b: f64, tol: f64) -> bool {
        close(a, b, tol)
    }
}

impl Semiring for MinPlus {
    type Value = f64;

    fn zero(&self) -> f64 {
        f64::INFINITY
    }
    fn one(&self) -> f64 {
        0.0
    }
    fn add(&self, a: f64, b: f64) -> f64 {
        a.min(b)
    }
    fn mul(&self, a: f64, b: f64) -> f64 {
        // ∞ annihilates; keeps ∞ + (-∞) from producing NaN
        if a == f64::INFINITY || b == f64::INFINITY {
            f64::INFINITY
        } else {
            a + b
        }
    }
    fn approx_eq(&self, a: f64, b: f64, tol: f64) -> bool {
        close(a, b, tol)
    }
}
