//! Counting tiered trees: the closed-form sum over compositions, the
//! inclusion–exclusion count of proper trees, rooted counts and the
//! exponential generating function relation.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::algebra::{binomial, factorial, multinomial, RatSeries};
use crate::trees::{for_each_tiering, labeled_trees};
use crate::{Error, Result};

/// Weak compositions of `n` into `m` parts, in lexicographic order.
fn weak_compositions(n: usize, m: usize) -> Vec<Vec<usize>> {
    fn rec(left: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if slots == 1 {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for k in 0..=left {
            cur.push(k);
            rec(left - k, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if m > 0 {
        rec(n, m, &mut Vec::with_capacity(m), &mut out);
    }
    out
}

/// `T_{n,m}`: tiered trees on `n` vertices with tiers in `1..=m`, proper or not.
pub fn count_closed_form(n: usize, m: usize) -> Result<BigInt> {
    if n < 2 || m < 1 {
        return Err(Error::domain("count_closed_form requires n >= 2 and m >= 1"));
    }
    Error::check_capacity("closed-form count (vertices)", n, crate::COUNT_CAPACITY)?;
    Error::check_capacity("closed-form count (tiers)", m, crate::COUNT_CAPACITY)?;
    let mut sum = BigInt::zero();
    for k in weak_compositions(n, m) {
        let s: usize = k.iter().enumerate().map(|(i, &ki)| (m - 1 - i) * ki).sum();
        sum += multinomial(n, &k)? * BigInt::from(s).pow(n as u32 - 1);
    }
    let denom = BigInt::from(n) * BigInt::from(m).pow(n as u32 - 1);
    let (q, r) = sum.div_rem(&denom);
    if !r.is_zero() {
        return Err(Error::Verification(format!(
            "closed form for T({n},{m}) is not an integer"
        )));
    }
    Ok(q)
}

/// `P_{n,m}`: tiered trees whose tiering uses every tier, by
/// inclusion–exclusion over `T_{n,m-k}`. Zero for `m = 1`.
pub fn count_proper(n: usize, m: usize) -> Result<BigInt> {
    if n < 2 || m < 1 {
        return Err(Error::domain("count_proper requires n >= 2 and m >= 1"));
    }
    let mut p = BigInt::zero();
    for k in 0..m.saturating_sub(1) {
        let term = binomial(m, m - k) * count_closed_form(n, m - k)?;
        if k % 2 == 0 {
            p += term;
        } else {
            p -= term;
        }
    }
    Ok(p)
}

/// `M_{i,n,m}`: trees counted with a chosen root on tier `i`, by enumeration.
pub fn rooted_count(i: usize, n: usize, m: usize) -> Result<BigInt> {
    if n < 2 || i < 1 || i > m {
        return Err(Error::domain("rooted_count requires n >= 2 and 1 <= i <= m"));
    }
    Error::check_capacity("rooted count (vertices)", n, crate::TREE_CAPACITY)?;
    let mut total = 0u64;
    for edges in labeled_trees(n) {
        for_each_tiering(n, m, &edges, |tiers| {
            let first = tiers[0];
            if tiers.iter().any(|&t| t != first) {
                total += tiers.iter().filter(|&&t| t == i).count() as u64;
            }
        });
    }
    Ok(total.into())
}

/// Residual of `T_m(x) = sum_{k=1}^{m-1} exp(k M(x)) - (m - 1)` through `x^order`,
/// where `T_m = sum_{n>=1} T_{n+1,m} x^n / n!` and
/// `M = x + sum_{n>=2} (n/m) T_{n,m} x^n / n!`.
pub fn egf_residual(m: usize, order: usize) -> Result<RatSeries> {
    if m < 2 {
        return Err(Error::domain("egf relation requires m >= 2"));
    }
    Error::check_capacity("egf order", order + 1, crate::TREE_CAPACITY + 3)?;
    let over_fact = |c: BigInt, n: usize| BigRational::new(c, factorial(n));
    let mut t_coeffs = vec![BigRational::zero()];
    let mut m_coeffs = vec![BigRational::zero(), BigRational::one()];
    for n in 1..=order {
        t_coeffs.push(over_fact(count_closed_form(n + 1, m)?, n));
    }
    for n in 2..=order {
        let c = BigRational::new(BigInt::from(n) * count_closed_form(n, m)?, BigInt::from(m));
        m_coeffs.push(c / BigRational::from(factorial(n)));
    }
    let t = RatSeries::from_coeffs(order, t_coeffs);
    let big_m = RatSeries::from_coeffs(order, m_coeffs);
    let mut rhs = RatSeries::one(order).scale(&BigRational::from(-BigInt::from(m - 1)));
    for k in 1..m {
        let e = big_m.scale(&BigRational::from(BigInt::from(k))).exp()?;
        rhs = &rhs + &e;
    }
    Ok(&t - &rhs)
}

/// Fails with the first nonzero coefficient of [`egf_residual`].
pub fn egf_check(m: usize, order: usize) -> Result<()> {
    let r = egf_residual(m, order)?;
    match r.first_nonzero() {
        None => Ok(()),
        Some(k) => Err(Error::Verification(format!(
            "egf relation for m = {m}: coefficient of x^{k} differs by {}",
            r.coeff(k)
        ))),
    }
}

/// `T_{n,m}` and `P_{n,m}` for a rectangle of `(n, m)` with `m <= n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountTable {
    pub entries: BTreeMap<(usize, usize), (BigInt, BigInt)>,
}

impl CountTable {
    /// Rows `n = min_n..=max_n`, columns `m = 1..=n`.
    pub fn build(min_n: usize, max_n: usize) -> Result<Self> {
        let cells: Vec<(usize, usize)> = (min_n.max(2)..=max_n)
            .flat_map(|n| (1..=n).map(move |m| (n, m)))
            .collect();
        let entries = cells
            .into_par_iter()
            .map(|(n, m)| Ok(((n, m), (count_closed_form(n, m)?, count_proper(n, m)?))))
            .collect::<Result<BTreeMap<_, _>>>()?;
        Ok(CountTable { entries })
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,m,T,P\n");
        for ((n, m), (t, p)) in &self.entries {
            let _ = writeln!(out, "{n},{m},{t},{p}");
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trees::{count_brute, CountMode};

    #[test]
    fn closed_form_values() {
        assert_eq!(count_closed_form(3, 3).unwrap(), 11.into());
        assert_eq!(count_closed_form(4, 2).unwrap(), 7.into());
        assert_eq!(count_closed_form(6, 6).unwrap(), 1414050.into());
        assert_eq!(count_closed_form(5, 1).unwrap(), 0.into());
    }

    #[test]
    fn maxmin_specialization() {
        // (1 / (n 2^(n-1))) sum_k C(n,k) k^(n-1)
        for n in 2..=9usize {
            let s: BigInt = (0..=n).map(|k| binomial(n, k) * BigInt::from(k).pow(n as u32 - 1)).sum();
            let want = s / (BigInt::from(n) * BigInt::from(2).pow(n as u32 - 1));
            assert_eq!(count_closed_form(n, 2).unwrap(), want);
        }
    }

    #[test]
    fn proper_values() {
        assert_eq!(count_proper(4, 3).unwrap(), 51.into());
        assert_eq!(count_proper(5, 4).unwrap(), 1748.into());
        assert_eq!(count_proper(6, 2).unwrap(), count_closed_form(6, 2).unwrap());
        assert_eq!(count_proper(4, 1).unwrap(), 0.into());
    }

    #[test]
    fn brute_force_agrees() {
        for n in 2..=5 {
            for m in 1..=5 {
                assert_eq!(count_brute(n, m, CountMode::All).unwrap(), count_closed_form(n, m).unwrap());
                assert_eq!(count_brute(n, m, CountMode::Proper).unwrap(), count_proper(n, m).unwrap());
            }
        }
    }

    #[test]
    fn rooted() {
        for i in 1..=3 {
            assert_eq!(rooted_count(i, 3, 3).unwrap(), 11.into());
            assert_eq!(rooted_count(i, 4, 3).unwrap(), 96.into());
        }
        assert!(rooted_count(0, 3, 3).is_err());
    }

    #[test]
    fn egf_relation() {
        for m in 2..=4 {
            assert!(egf_residual(m, 5).unwrap().is_zero(), "m = {m}");
        }
        // the linear term of T_3 is T_{2,3} = 3
        let t3 = count_closed_form(2, 3).unwrap();
        assert_eq!(t3, 3.into());
    }

    #[test]
    fn csv_layout() {
        let t = CountTable::build(3, 3).unwrap();
        assert_eq!(t.to_csv(), "n,m,T,P\n3,1,0,0\n3,2,2,2\n3,3,11,5\n");
    }
}
