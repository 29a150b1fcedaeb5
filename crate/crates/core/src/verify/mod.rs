//! Verification suites.
//!
//! Each suite returns a [`VerifyReport`]. Certified suites decide every
//! relation with exact rationals or outward-rounded intervals, so a pass is a
//! machine proof for the checked instances. Integer sweeps are split into
//! fixed, position-aligned blocks and may run in parallel; results do not
//! depend on the number of jobs.

mod brackets;
mod integrands;
mod phi;
mod report;
mod series;
mod theorem;

pub use brackets::verify_lemma_brackets;
pub use integrands::{integrand_values, verify_integrand_signs};
pub use phi::{verify_phi_derivative_sign, verify_phi_monotone, verify_phi_monotone_with};
pub use report::{Finding, Status, VerifyReport};
pub use series::verify_series_coefficients;
pub use theorem::{verify_family_ordering, verify_theorem};

use rayon::prelude::*;

use crate::error::{Error, Result};

/// Precision and parallelism for sweeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepOptions {
    pub bits: u32,
    pub jobs: usize,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions {
            bits: 192,
            jobs: std::thread::available_parallelism().map_or(1, |n| n.get()),
        }
    }
}

impl SweepOptions {
    pub fn with_bits(bits: u32) -> Self {
        SweepOptions {
            bits,
            ..Default::default()
        }
    }
}

/// Runs `check` over `[from, to]` in blocks aligned to multiples of `block`
/// and merges the partial reports.
pub(crate) fn sweep<F>(from: u64, to: u64, block: u64, opts: &SweepOptions, check: F) -> Result<VerifyReport>
where
    F: Fn(u64, u64) -> Result<VerifyReport> + Sync,
{
    let first = (from - 1) / block;
    let last = (to - 1) / block;
    let ranges: Vec<(u64, u64)> = (first..=last)
        .map(|b| ((b * block + 1).max(from), ((b + 1) * block).min(to)))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs.max(1))
        .build()
        .map_err(|e| Error::Internal(format!("thread pool: {e}")))?;
    let parts: Vec<VerifyReport> =
        pool.install(|| ranges.par_iter().map(|&(a, b)| check(a, b)).collect::<Result<_>>())?;
    Ok(parts
        .into_iter()
        .reduce(VerifyReport::merge)
        .expect("at least one block"))
}

pub(crate) fn check_range(from: u64, to: u64) -> Result<()> {
    if from == 0 || from > to {
        return Err(Error::invalid(format!("need 1 <= from <= to, got [{from}, {to}]")));
    }
    Ok(())
}
