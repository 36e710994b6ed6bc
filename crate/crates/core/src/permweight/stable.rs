use num_bigint::BigInt;
use serde::Serialize;

use super::q_eulerian;
use crate::algebra::{binomial, partitions, BivarPoly};
use crate::{Error, Result};

/// Top-down coefficients of `[x^d] E_n` for the two largest computed `n`,
/// and how far they agree. The agreement is an observation at finite `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StabilizationReport {
    pub d: usize,
    pub n_max: usize,
    /// `[x^d] E_{n_max}` read from `q^(d (n_max - 1 - d))` down to `q^0`.
    #[serde(serialize_with = "crate::algebra::serialize_bigints")]
    pub coefficients: Vec<BigInt>,
    /// The same for `n_max - 1`.
    #[serde(serialize_with = "crate::algebra::serialize_bigints")]
    pub previous: Vec<BigInt>,
    pub stable_upto: usize,
}

impl StabilizationReport {
    /// The leading coefficients shared by both rows.
    pub fn prefix(&self) -> &[BigInt] {
        &self.coefficients[..self.stable_upto]
    }
}

fn top_down(e: &BivarPoly, d: usize, n: usize) -> Vec<BigInt> {
    let top = d * (n - 1 - d);
    let c = e.coeff_x(d);
    (0..=top).rev().map(|k| c.coeff(k)).collect()
}

pub fn wd_prefix(d: usize, n_max: usize) -> Result<StabilizationReport> {
    if d == 0 || n_max < d + 2 {
        return Err(Error::domain("wd_prefix needs d >= 1 and n_max >= d + 2"));
    }
    let prev = q_eulerian(n_max - 1)?;
    let max = q_eulerian(n_max)?;
    Ok(wd_prefix_from(d, n_max, &prev, &max))
}

/// As [`wd_prefix`], given `E_{n_max - 1}` and `E_{n_max}`.
pub fn wd_prefix_from(d: usize, n_max: usize, prev: &BivarPoly, max: &BivarPoly) -> StabilizationReport {
    let coefficients = top_down(max, d, n_max);
    let previous = top_down(prev, d, n_max - 1);
    let stable_upto = coefficients
        .iter()
        .zip(&previous)
        .take_while(|(a, b)| a == b)
        .count();
    StabilizationReport {
        d,
        n_max,
        coefficients,
        previous,
        stable_upto,
    }
}

/// `T(n, k)`: partitions of `n` with `k` of their parts marked, i.e.
/// `sum_{lambda |- n} C(len(lambda), k)`.
pub fn two_colored_triangle(n: usize, k: usize) -> Result<BigInt> {
    if k > n {
        return Err(Error::domain("two_colored_triangle needs k <= n"));
    }
    Ok(partitions(n).map(|l| binomial(l.len(), k)).sum())
}

/// Number of leading coefficients of `[x^d] E_{n_max}` (top-down) equal to
/// `T(d, d), T(d+1, d), ...`.
pub fn triangle_agreement(report: &StabilizationReport) -> Result<usize> {
    let d = report.d;
    let mut n = 0;
    for (i, a) in report.coefficients.iter().enumerate() {
        if *a != two_colored_triangle(d + i, d)? {
            break;
        }
        n += 1;
    }
    Ok(n)
}
