use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::{Error, Result};

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `n! / (k_1! ... k_m!)`; the parts must sum to `n`.
pub fn multinomial(n: usize, parts: &[usize]) -> Result<BigInt> {
    let total: usize = parts.iter().sum();
    if total != n {
        return Err(Error::domain(format!(
            "multinomial parts {parts:?} sum to {total}, not {n}"
        )));
    }
    let mut acc = BigInt::one();
    let mut remaining = n;
    for &k in parts {
        acc *= binomial(remaining, k);
        remaining -= k;
    }
    Ok(acc)
}

fn triangle_row(n: usize, step: impl Fn(&[BigInt], usize, usize) -> BigInt) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for m in 1..=n {
        let mut next = vec![BigInt::zero(); m + 1];
        for (k, slot) in next.iter_mut().enumerate() {
            *slot = step(&row, m, k);
        }
        row = next;
    }
    row
}

fn at(row: &[BigInt], k: usize) -> BigInt {
    row.get(k).cloned().unwrap_or_default()
}

fn check_k_le_n(name: &str, n: usize, k: usize) -> Result<()> {
    if k > n {
        Err(Error::domain(format!("{name}({n}, {k}) requires k <= n")))
    } else {
        Ok(())
    }
}

/// Signless Stirling number of the first kind: permutations of `n` letters with `k` cycles.
pub fn stirling1_unsigned(n: usize, k: usize) -> Result<BigInt> {
    check_k_le_n("stirling1", n, k)?;
    let row = triangle_row(n, |prev, m, k| {
        let a = if k == 0 { BigInt::zero() } else { at(prev, k - 1) };
        a + at(prev, k) * (m - 1)
    });
    Ok(row[k].clone())
}

/// Stirling number of the second kind: partitions of an `n`-set into `k` blocks.
pub fn stirling2(n: usize, k: usize) -> Result<BigInt> {
    check_k_le_n("stirling2", n, k)?;
    let row = triangle_row(n, |prev, _m, k| {
        let a = if k == 0 { BigInt::zero() } else { at(prev, k - 1) };
        a + at(prev, k) * k
    });
    Ok(row[k].clone())
}

/// Eulerian number `A(k, n)`: permutations of `n` letters with exactly `k` descents.
pub fn eulerian(k: usize, n: usize) -> Result<BigInt> {
    if (n == 0 && k > 0) || (n > 0 && k >= n) {
        return Err(Error::domain(format!(
            "eulerian({k}, {n}) requires k < n (or k = n = 0)"
        )));
    }
    let row = triangle_row(n, |prev, m, k| {
        let stay = at(prev, k) * (k + 1);
        let rise = if k == 0 { BigInt::zero() } else { at(prev, k - 1) * (m - k) };
        stay + rise
    });
    Ok(row[k].clone())
}

/// Number of integer partitions of `n`.
pub fn partition_count(n: usize) -> BigInt {
    let mut ways = vec![BigInt::zero(); n + 1];
    ways[0] = BigInt::one();
    for part in 1..=n {
        for total in part..=n {
            let add = ways[total - part].clone();
            ways[total] += add;
        }
    }
    ways[n].clone()
}

/// Bell number via the Bell triangle (independent of [`stirling2`]).
pub fn bell(n: usize) -> BigInt {
    let mut row = vec![BigInt::one()];
    for _ in 0..n {
        let mut next = vec![row.last().cloned().unwrap()];
        for v in &row {
            let x = next.last().unwrap() + v;
            next.push(x);
        }
        row = next;
    }
    row[0].clone()
}
