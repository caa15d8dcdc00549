//! Density sweeps: dilute a Steiner triple system to each density on a grid
//! and record whether the pipeline finds a witness.

use std::fmt::Write as _;
use std::time::Instant;

use rayon::prelude::*;

use crate::error::Result;
use crate::pipeline::{theorem_pipeline, PipelineOptions};
use crate::rational::{self, Rational};
use crate::triple_system::{dilute, generate_steiner};

pub const CSV_HEADER: &str = "delta,trial,n,dB_avg,witness_found,k,elapsed_ms";

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub delta: Rational,
    pub trial: usize,
    pub n: usize,
    /// Achieved linear density after dilution.
    pub achieved_density: Rational,
    pub avg_degree: f64,
    pub witness_found: bool,
    pub k: usize,
    pub elapsed_ms: Option<u64>,
    /// Number of required checks that failed; zero unless something is broken.
    pub violations: usize,
}

/// One row per `(density, trial)`, grid-major. Trial `t` dilutes with seed
/// `seed + t`; trials run in parallel but rows come back in order.
pub fn density_sweep(
    n: usize,
    grid: &[Rational],
    trials: usize,
    seed: u64,
    options: &PipelineOptions,
) -> Result<Vec<SweepRow>> {
    let base = generate_steiner(n)?;
    let jobs: Vec<(Rational, usize)> = grid
        .iter()
        .flat_map(|&delta| (0..trials).map(move |t| (delta, t)))
        .collect();
    jobs.into_par_iter()
        .map(|(delta, trial)| {
            let clock = Instant::now();
            let instance = dilute(&base, delta, seed.wrapping_add(trial as u64))?;
            let report = theorem_pipeline(&instance, options)?;
            Ok(SweepRow {
                delta,
                trial,
                n,
                achieved_density: instance.linear_density()?,
                avg_degree: report.bowtie.avg_degree_value,
                witness_found: report.witness_found(),
                k: options.k,
                elapsed_ms: options.timings.then(|| clock.elapsed().as_millis() as u64),
                violations: report.violations().count(),
            })
        })
        .collect()
}

/// CSV with the fixed column order of [`CSV_HEADER`]. `elapsed_ms` is left
/// empty when timings were not recorded.
pub fn to_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for row in rows {
        let elapsed = row.elapsed_ms.map(|ms| ms.to_string()).unwrap_or_default();
        let _ = writeln!(
            out,
            "{},{},{},{:.6},{},{},{}",
            rational::to_f64(&row.delta),
            row.trial,
            row.n,
            row.avg_degree,
            row.witness_found,
            row.k,
            elapsed
        );
    }
    out
}
