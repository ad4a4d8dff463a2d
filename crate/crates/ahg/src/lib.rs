//! File formats, report rendering and the command-line layer over `ahg-core`.

pub mod cli;
pub mod export;
pub mod report;
pub mod table;

use ahg_core::invariants::Budget;
use ahg_core::verify::{check_range, run_verification, VerificationReport, VerifyError};
use rayon::prelude::*;

/// Like [`ahg_core::run_range`] but one n per rayon task; results stay in ascending n.
pub fn run_range_parallel(n_min: usize, n_max: usize, budget: Budget) -> Result<Vec<VerificationReport>, VerifyError> {
    check_range(n_min, n_max)?;
    (n_min..=n_max).into_par_iter().map(|n| run_verification(n, budget)).collect()
}
