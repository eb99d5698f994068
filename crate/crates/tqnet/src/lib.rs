//! File formats, temporalization, charts and parallel multiplication for
//! temporal networks built on [`tqnet_core`].

pub mod chart;
mod error;
pub mod export;
pub mod netsjson;
pub mod pajek;
pub mod parallel;
pub mod temporalize;

pub use error::{Error, Result};
pub use tqnet_core as core;
