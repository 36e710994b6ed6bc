use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// Power series truncated after `x^order`, with exact rational coefficients.
///
/// Binary operations require equal truncation orders; nothing here ever
/// extends precision on its own.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatSeries {
    coeffs: Vec<BigRational>,
}

impl RatSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![BigRational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = BigRational::one();
        s
    }

    /// The series `x` (zero when `order == 0`).
    pub fn x(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coeffs[1] = BigRational::one();
        }
        s
    }

    /// Takes coefficients `c_0, c_1, ...`, padding with zeros or truncating to `order`.
    pub fn from_coeffs(order: usize, coeffs: impl IntoIterator<Item = BigRational>) -> Self {
        let mut s = Self::zero(order);
        for (k, c) in coeffs.into_iter().take(order + 1).enumerate() {
            s.coeffs[k] = c;
        }
        s
    }

    /// Builds `sum_k f(k) x^k` for `k = 0..=order`.
    pub fn from_fn(order: usize, f: impl FnMut(usize) -> BigRational) -> Self {
        Self {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &BigRational {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Index of the first nonzero coefficient.
    pub fn first_nonzero(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    fn check_order(&self, other: &Self) {
        assert_eq!(
            self.order(),
            other.order(),
            "series truncation orders must match"
        );
    }

    /// `exp(s)` for `s` with zero constant term, via `n f_n = sum_{k=1}^{n} k s_k f_{n-k}`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::Precondition(
                "exp requires a series with zero constant term".into(),
            ));
        }
        let n = self.order();
        let mut f = vec![BigRational::zero(); n + 1];
        f[0] = BigRational::one();
        for m in 1..=n {
            let mut acc = BigRational::zero();
            for k in 1..=m {
                if !self.coeffs[k].is_zero() {
                    acc += &self.coeffs[k] * &f[m - k] * BigInt::from(k);
                }
            }
            f[m] = acc / BigInt::from(m);
        }
        Ok(Self { coeffs: f })
    }

    /// `log(s)` for `s` with constant term 1, via `n g_n = n s_n - sum_{k=1}^{n-1} k g_k s_{n-k}`.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::Precondition(
                "log requires a series with constant term 1".into(),
            ));
        }
        let n = self.order();
        let mut g = vec![BigRational::zero(); n + 1];
        for m in 1..=n {
            let mut acc = &self.coeffs[m] * BigInt::from(m);
            for k in 1..m {
                acc -= &g[k] * &self.coeffs[m - k] * BigInt::from(k);
            }
            g[m] = acc / BigInt::from(m);
        }
        Ok(Self { coeffs: g })
    }
}

impl Add for &RatSeries {
    type Output = RatSeries;
    fn add(self, rhs: &RatSeries) -> RatSeries {
        self.check_order(rhs);
        RatSeries {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &RatSeries {
    type Output = RatSeries;
    fn sub(self, rhs: &RatSeries) -> RatSeries {
        self.check_order(rhs);
        RatSeries {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Mul for &RatSeries {
    type Output = RatSeries;
    fn mul(self, rhs: &RatSeries) -> RatSeries {
        self.check_order(rhs);
        let n = self.order();
        let mut out = RatSeries::zero(n);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n + 1 - i).enumerate() {
                out.coeffs[i + j] += a * b;
            }
        }
        out
    }
}

impl fmt::Display for RatSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})x")?,
                _ => write!(f, "({c})x^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(x^{})", self.order() + 1)
    }
}
