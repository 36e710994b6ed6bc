//! Permutation statistics, the weight of a permutation, and the polynomials
//! `E_n(x, q) = sum x^d(pi) q^w(pi)` with their comparison and extremal checks.

mod partition;
mod stable;
mod stats;

pub use partition::{partition_to_perm, perm_to_partition, SetPartition};
pub use stable::{
    triangle_agreement, two_colored_triangle, wd_prefix, wd_prefix_from, StabilizationReport,
};
pub use stats::{descents, inversions, perm_weight};

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{binomial, BivarPoly, IntPoly};
use crate::bijections::{flatten, permutations, permutations_starting_with, Permutation};
use crate::{Error, Result};
use stats::word_weight;

/// Sums `x^stat1 q^stat2` over `S_n`, split by first letter across workers.
fn sweep(n: usize, limit: usize, stat: fn(&Permutation) -> (usize, usize)) -> Result<BivarPoly> {
    Error::check_capacity("symmetric group sweep (letters)", n, limit)?;
    if n == 0 {
        return Ok(BivarPoly::one());
    }
    let counts = (1..=n)
        .into_par_iter()
        .map(|first| {
            let mut c: BTreeMap<(usize, usize), u64> = BTreeMap::new();
            for pi in permutations_starting_with(n, first) {
                *c.entry(stat(&pi)).or_default() += 1;
            }
            c
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_default() += v;
            }
            a
        });
    let mut p = BivarPoly::zero();
    for ((dx, dq), c) in counts {
        p.add_term(dx, dq, BigInt::from(c));
    }
    Ok(p)
}

/// `E_n(x, q)`, with `x` marking descents and `q` the weight.
pub fn q_eulerian(n: usize) -> Result<BivarPoly> {
    q_eulerian_with_limit(n, crate::PERM_CAPACITY)
}

pub fn q_eulerian_with_limit(n: usize, limit: usize) -> Result<BivarPoly> {
    sweep(n, limit, |pi| (descents(pi), perm_weight(pi)))
}

/// Stanley's version, with `q` marking inversions.
pub fn stanley_q_eulerian(n: usize) -> Result<BivarPoly> {
    sweep(n, crate::PERM_CAPACITY, |pi| (descents(pi), inversions(pi)))
}

/// `pi` with one descent becomes `1, a_1 + 1, ..., a_n + 1`.
pub fn promotion(pi: &Permutation) -> Result<Permutation> {
    if descents(pi) != 1 {
        return Err(Error::domain("promotion needs exactly one descent"));
    }
    let mut word = vec![1];
    word.extend(pi.word().iter().map(|a| a + 1));
    Permutation::new(word)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoefficientReport {
    pub n: usize,
    /// `[x^1] E_n`.
    pub one_descent: String,
    /// `[x^(n-2)] E_n`.
    pub n_minus_two_descents: String,
}

/// Checks `[x^1] E_n = sum_j (2^(j+1) - 1) q^(n-2-j)`,
/// `[x^(n-2)] E_n = sum_j C(n, j) q^(n-2-j)` and `[x^0] = [x^(n-1)] = 1`.
pub fn coefficient_checks(n: usize) -> Result<CoefficientReport> {
    if n < 2 {
        return Err(Error::domain("coefficient checks need n >= 2"));
    }
    coefficient_checks_on(n, &q_eulerian(n)?)
}

/// As [`coefficient_checks`], on an already computed `E_n`.
pub fn coefficient_checks_on(n: usize, e: &BivarPoly) -> Result<CoefficientReport> {
    let mut x1 = IntPoly::zero();
    let mut xn2 = IntPoly::zero();
    for j in 0..=n - 2 {
        x1.add_term(n - 2 - j, (BigInt::from(2).pow(j as u32 + 1)) - 1);
        xn2.add_term(n - 2 - j, binomial(n, j));
    }
    let fail = |what: &str, got: &IntPoly, want: &IntPoly| {
        Err(Error::Verification(format!("n = {n}: {what} is {got}, expected {want}")))
    };
    if e.coeff_x(1) != x1 {
        return fail("[x^1]", &e.coeff_x(1), &x1);
    }
    if e.coeff_x(n - 2) != xn2 {
        return fail("[x^(n-2)]", &e.coeff_x(n - 2), &xn2);
    }
    for k in [0, n - 1] {
        if e.coeff_x(k) != IntPoly::one() {
            return fail(&format!("[x^{k}]"), &e.coeff_x(k), &IntPoly::one());
        }
    }
    Ok(CoefficientReport {
        n,
        one_descent: x1.to_string(),
        n_minus_two_descents: xn2.to_string(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MaxWeightReport {
    pub n: usize,
    /// `(d, maximum weight among permutations with d descents)`.
    pub maxima: Vec<(usize, usize)>,
    /// Permutations ending in an ascent that were checked against the
    /// permutation with the last letter dropped.
    pub ascent_endings: usize,
}

/// `1, 2, ..., n-d-1, n, n-1, ..., n-d`: the unique maximiser of the weight
/// among permutations with `d` descents.
pub fn max_weight_permutation(n: usize, d: usize) -> Permutation {
    let mut w: Vec<usize> = (1..n - d).collect();
    w.extend((n - d..=n).rev());
    Permutation::new(w).expect("valid")
}

/// Exhaustive over `S_n`: the maximum weight with `d` descents is
/// `d (n - 1 - d)`, reached only by [`max_weight_permutation`]; and a
/// permutation ending in an ascent keeps its weight when the last letter is
/// dropped.
pub fn max_weight_check(n: usize) -> Result<MaxWeightReport> {
    if n == 0 {
        return Err(Error::domain("max_weight_check needs n >= 1"));
    }
    Error::check_capacity("maximum weight check (letters)", n, 8)?;
    let mut best: Vec<(usize, Vec<Permutation>)> = vec![(0, Vec::new()); n];
    let mut ascent_endings = 0;
    for pi in permutations(n) {
        let w = perm_weight(&pi);
        let d = descents(&pi);
        let word = pi.word();
        if n >= 2 && word[n - 2] < word[n - 1] {
            let shorter = word_weight(&flatten(&word[..n - 1]));
            if shorter != w {
                return Err(Error::Verification(format!(
                    "{pi} ends in an ascent but dropping the last letter moves its weight from {w} to {shorter}"
                )));
            }
            ascent_endings += 1;
        }
        let slot = &mut best[d];
        if w > slot.0 || slot.1.is_empty() {
            *slot = (w, vec![pi]);
        } else if w == slot.0 {
            slot.1.push(pi);
        }
    }
    let mut maxima = Vec::with_capacity(n);
    for (d, (w, arg)) in best.into_iter().enumerate() {
        let want = d * (n - 1 - d);
        let expected = max_weight_permutation(n, d);
        if w != want || arg != [expected.clone()] {
            return Err(Error::Verification(format!(
                "n = {n}, d = {d}: maximum {w} at {arg:?}, expected {want} only at {expected}"
            )));
        }
        maxima.push((d, w));
    }
    Ok(MaxWeightReport {
        n,
        maxima,
        ascent_endings,
    })
}
