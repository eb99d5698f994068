//! Temporal quantities and sparse temporal networks.
//!
//! A [`TemporalQuantity`] is a piecewise-constant function of integer time,
//! undefined outside its intervals, with values in a [`Semiring`]. A
//! [`TemporalNetwork`] is a sparse matrix of such quantities. Multiplying
//! networks over the combinatorial semiring yields derived networks such as
//! temporal coauthorship (`WAᵀ · WA`) or journal citation
//! (`WJiᵀ · Cite · WJc`) networks.
//!
//! The crate is `no_std` and needs only `alloc`. File formats and the CLI
//! live in the `tqnet` crate.

#![no_std]

extern crate alloc;

pub mod algebra;
mod error;
mod horizon;
pub mod network;
pub mod quantity;
pub mod semiring;

pub use algebra::{
    in_sum, in_sums, multiply, normalize_rows, out_sum, top_links, top_loops, triple_product, two_to_one_cols,
    MultiplyPlan, RankedLink,
};
pub use error::{Error, Result};
pub use horizon::TimeHorizon;
pub use network::{Kind, NodeId, NodeTable, TemporalNetwork};
pub use quantity::{Cut, Interval, Num, Summary, TemporalQuantity, Time};
pub use semiring::{Combinatorial, MinPlus, Semiring};
