//! Structural bijections: permutations and weight-zero maxmin trees, cycle
//! insertion, and complete nonambiguous trees and weight-zero fully tiered
//! trees. The set partition correspondence lives in `permweight`.

mod cnat;
mod cycles;
mod maxmin;
mod perm;

pub use cnat::{cnat_to_tiered, enumerate_cnat, tiered_to_cnat, Cnat};
pub use cycles::{
    cycle_insertion, cycle_insertion_inverse, parse_cycles, permutation_from_cycle_notation, InsertionSlot};
pub use maxmin::{
    decompose, perm_to_tree, tree_to_perm, underlying_permutation, Decomposition,
};
pub(crate) use maxmin::split_at_maxima;
pub use perm::{flatten, permutations, permutations_starting_with, Permutation};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::{factorial, RatSeries};
use crate::{Error, Result};

/// Coefficients of `x^1..=x^order` in `-log sum_k (-1)^k x^k / (k!)^2`,
/// checked against `b_{k-1} / (k!)^2` with `b_j` the number of CNATs with
/// `j` internal points.
pub fn bessel_check(order: usize) -> Result<Vec<BigRational>> {
    Error::check_capacity("Bessel series order", order, crate::CNAT_CAPACITY + 1)?;
    let j0 = RatSeries::from_fn(order, |k| {
        let f = factorial(k);
        let c = BigRational::new(BigInt::one(), &f * &f);
        if k % 2 == 0 {
            c
        } else {
            -c
        }
    });
    let series = j0.log()?.scale(&-BigRational::one());
    let mut out = Vec::with_capacity(order);
    for k in 1..=order {
        let b = enumerate_cnat(k - 1)?.len();
        let f = factorial(k);
        let want = BigRational::new(BigInt::from(b), &f * &f);
        let got = series.coeff(k).clone();
        if got != want {
            return Err(Error::Verification(format!(
                "coefficient of x^{k} is {got}, expected {want}"
            )));
        }
        out.push(got);
    }
    debug_assert!(series.coeff(0).is_zero());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bessel_low_order() {
        let c = bessel_check(5).unwrap();
        assert_eq!(c[0], BigRational::one());
        assert_eq!(c[2], BigRational::new(1.into(), 9.into()));
        assert_eq!(c[4], BigRational::new(456.into(), 14400.into()));
    }
}
