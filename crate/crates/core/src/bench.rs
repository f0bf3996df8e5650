//! Precision benchmark: uniform-M DsiHT QR against Householder QR on
//! random integer complex matrices.

use std::time::Instant;

use rayon::prelude::*;

use crate::basic::BasicKind;
use crate::decomp::{householder_qr, qr_decompose, DecompResult, TypeSchedule};
use crate::error::Result;
use crate::matio::random_int_complex_matrix;

pub const DEFAULT_SIZES: [usize; 12] = [6, 13, 17, 19, 21, 40, 64, 100, 128, 201, 256, 400];

pub const HEADER: &str = "n\tnorm_dsiht\tnorm_householder\ttime_dsiht_ms\ttime_householder_ms";

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub n: usize,
    pub norm_dsiht: f64,
    pub norm_householder: f64,
    /// Mean over trials.
    pub time_dsiht_ms: f64,
    pub time_householder_ms: f64,
}

impl BenchRow {
    /// Tab-separated line matching [`HEADER`].
    pub fn to_tsv(&self) -> String {
        format!(
            "{}\t{:.4e}\t{:.4e}\t{:.3}\t{:.3}",
            self.n, self.norm_dsiht, self.norm_householder, self.time_dsiht_ms, self.time_householder_ms
        )
    }
}

fn timed(trials: usize, mut f: impl FnMut() -> Result<DecompResult>) -> Result<(DecompResult, f64)> {
    let start = Instant::now();
    let mut last = f()?;
    for _ in 1..trials {
        last = f()?;
    }
    let ms = start.elapsed().as_secs_f64() * 1e3 / trials as f64;
    Ok((last, ms))
}

/// Runs one size. `trials` only affects the timings.
pub fn run_size(n: usize, seed: u64, trials: usize) -> Result<BenchRow> {
    let trials = trials.max(1);
    let x = random_int_complex_matrix(n, seed)?;
    let schedule = TypeSchedule::uniform(BasicKind::M, n);
    let (d, time_dsiht_ms) = timed(trials, || qr_decompose(&x, &schedule))?;
    let (h, time_householder_ms) = timed(trials, || householder_qr(&x))?;
    Ok(BenchRow {
        n,
        norm_dsiht: d.residual_norm,
        norm_householder: h.residual_norm,
        time_dsiht_ms,
        time_householder_ms,
    })
}

/// Runs every size in ascending order, optionally spread over threads.
pub fn run(sizes: &[usize], seed: u64, trials: usize, parallel: bool) -> Result<Vec<BenchRow>> {
    let mut sizes = sizes.to_vec();
    sizes.sort_unstable();
    if parallel {
        sizes.par_iter().map(|&n| run_size(n, seed, trials)).collect()
    } else {
        sizes.iter().map(|&n| run_size(n, seed, trials)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_entry_has_zero_norms() {
        let row = run_size(1, 1, 1).unwrap();
        assert_eq!((row.n, row.norm_dsiht, row.norm_householder), (1, 0.0, 0.0));
    }

    #[test]
    fn rows_come_back_sorted() {
        let rows = run(&[8, 3, 5], 7, 1, false).unwrap();
        let ns: Vec<_> = rows.iter().map(|r| r.n).collect();
        assert_eq!(ns, [3, 5, 8]);
    }

    #[test]
    fn parallel_norms_match_sequential() {
        let a = run(&[4, 9, 12], 3, 1, false).unwrap();
        let b = run(&[4, 9, 12], 3, 1, true).unwrap();
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.norm_dsiht.to_bits(), y.norm_dsiht.to_bits());
            assert_eq!(x.norm_householder.to_bits(), y.norm_householder.to_bits());
        }
    }

    #[test]
    fn tsv_has_five_fields() {
        let row = BenchRow {
            n: 6,
            norm_dsiht: 5.0854e-15,
            norm_householder: 1.5e-15,
            time_dsiht_ms: 0.01,
            time_householder_ms: 0.02,
        };
        assert_eq!(row.to_tsv(), "6\t5.0854e-15\t1.5000e-15\t0.010\t0.020");
        assert_eq!(HEADER.split('\t').count(), 5);
    }
}
