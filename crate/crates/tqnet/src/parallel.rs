//! Row-parallel network multiplication.
//!
//! Rows of the product are independent, so they are computed on a rayon
//! pool and assembled in row order. Each row is accumulated in the same
//! fixed order as the sequential path, which makes the result identical
//! for any thread count.

use rayon::prelude::*;

use crate::error::{Error, Result};
use tqnet_core::{MultiplyPlan, Semiring, TemporalNetwork};

/// `A · B` on `threads` worker threads (`None`: rayon's default).
pub fn par_multiply<S>(a: &TemporalNetwork, b: &TemporalNetwork, sr: &S, threads: Option<usize>) -> Result<TemporalNetwork>
where
    S: Semiring<Value = f64> + Sync,
{
    let plan = MultiplyPlan::new(a, b)?;
    let run = || (0..plan.row_count()).into_par_iter().map(|i| plan.row(i, sr)).collect::<Vec<_>>();
    let rows = match threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::Invalid(format!("cannot start thread pool: {e}")))?
            .install(run),
        None => run(),
    };
    Ok(plan.assemble(rows))
}

/// `(A · M) · B` with both products row-parallel.
pub fn par_triple_product<S>(
    a: &TemporalNetwork,
    m: &TemporalNetwork,
    b: &TemporalNetwork,
    sr: &S,
    threads: Option<usize>,
) -> Result<TemporalNetwork>
where
    S: Semiring<Value = f64> + Sync,
{
    par_multiply(&par_multiply(a, m, sr, threads)?, b, sr, threads)
}

/// Co-occurrence `Aᵀ · A`, stored undirected with loops kept.
pub fn par_two_to_one_cols<S>(a: &TemporalNetwork, sr: &S, threads: Option<usize>) -> Result<TemporalNetwork>
where
    S: Semiring<Value = f64> + Sync,
{
    if !a.is_two_mode() {
        return Err(tqnet_core::Error::NotTwoMode.into());
    }
    Ok(par_multiply(&a.transpose(), a, sr, threads)?.into_undirected())
}
