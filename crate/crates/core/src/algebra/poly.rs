use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Polynomial in one variable (conventionally `q`) with big-integer
/// coefficients. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: BTreeMap<usize, BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    /// `c * q^exp`.
    pub fn monomial(c: impl Into<BigInt>, exp: usize) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, c.into());
        p
    }

    /// Builds a polynomial from coefficients in ascending degree order.
    pub fn from_coeffs<T: Into<BigInt> + Clone>(coeffs: &[T]) -> Self {
        let mut p = Self::zero();
        for (k, c) in coeffs.iter().enumerate() {
            p.add_term(k, c.clone().into());
        }
        p
    }

    /// Builds a polynomial from a histogram: `counts[k]` is the coefficient of `q^k`.
    pub fn from_counts(counts: &[u64]) -> Self {
        let mut p = Self::zero();
        for (k, &c) in counts.iter().enumerate() {
            p.add_term(k, BigInt::from(c));
        }
        p
    }

    pub fn add_term(&mut self, exp: usize, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(exp).or_default();
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn coeff(&self, exp: usize) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_default()
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    /// All coefficients from the top degree down to the constant term.
    pub fn coeffs_descending(&self) -> Vec<BigInt> {
        match self.degree() {
            None => Vec::new(),
            Some(d) => (0..=d).rev().map(|k| self.coeff(k)).collect(),
        }
    }

    pub fn eval(&self, at: &BigInt) -> BigInt {
        // Horner over the dense range.
        let Some(d) = self.degree() else {
            return BigInt::zero();
        };
        let mut acc = BigInt::zero();
        for k in (0..=d).rev() {
            acc = acc * at + self.coeff(k);
        }
        acc
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut p = Self::zero();
        for (k, v) in self.terms() {
            p.add_term(k, v * c);
        }
        p
    }

    /// Sum of all coefficients.
    pub fn value_at_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    fn render(&self, var: &str, latex: bool) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (&k, c)) in self.coeffs.iter().rev().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mag = c.abs();
            if k == 0 {
                out.push_str(&mag.to_string());
                continue;
            }
            if !mag.is_one() {
                out.push_str(&mag.to_string());
            }
            out.push_str(var);
            if k > 1 {
                if latex && k >= 10 {
                    out.push_str(&format!("^{{{k}}}"));
                } else {
                    out.push_str(&format!("^{k}"));
                }
            }
        }
        out
    }

    /// Rendering as it appears in a LaTeX table cell (`q^{10}` for two-digit exponents).
    pub fn to_latex(&self) -> String {
        self.render("q", true)
    }

    pub fn display_var(&self, var: &str) -> String {
        self.render(var, false)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("q", false))
    }
}

/// Parses sums such as `q^4 + 6q^3 + 22q^2 + 51q + 66`. Any single ASCII
/// letter is accepted as the variable; `^{10}` braces are allowed.
impl FromStr for IntPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut p = IntPoly::zero();
        let bytes = compact.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            let mut sign = BigInt::one();
            if bytes[i] == b'+' || bytes[i] == b'-' {
                if bytes[i] == b'-' {
                    sign = -sign;
                }
                i += 1;
            }
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let coeff = if i > start {
                compact[start..i].parse::<BigInt>().map_err(|e| Error::Parse(e.to_string()))?
            } else {
                BigInt::one()
            };
            let mut exp = 0usize;
            if i < bytes.len() && bytes[i].is_ascii_alphabetic() {
                i += 1;
                exp = 1;
                if i < bytes.len() && bytes[i] == b'^' {
                    i += 1;
                    let braced = i < bytes.len() && bytes[i] == b'{';
                    if braced {
                        i += 1;
                    }
                    let es = i;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    exp = compact[es..i]
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad exponent in {s:?}")))?;
                    if braced {
                        if i >= bytes.len() || bytes[i] != b'}' {
                            return Err(Error::Parse(format!("unclosed brace in {s:?}")));
                        }
                        i += 1;
                    }
                }
            } else if i == start {
                return Err(Error::Parse(format!("unexpected character in {s:?}")));
            }
            p.add_term(exp, sign * coeff);
            if i < bytes.len() && bytes[i] != b'+' && bytes[i] != b'-' {
                return Err(Error::Parse(format!("unexpected character in {s:?}")));
            }
        }
        Ok(p)
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&IntPoly> for IntPoly {
    fn add_assign(&mut self, rhs: &IntPoly) {
        for (k, c) in rhs.terms() {
            self.add_term(k, c.clone());
        }
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        self.scale(&BigInt::from(-1))
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        self + &(-rhs)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        let mut out = IntPoly::zero();
        for (i, a) in self.terms() {
            for (j, b) in rhs.terms() {
                out.add_term(i + j, a * b);
            }
        }
        out
    }
}

/// Polynomial in two variables with big-integer coefficients, keyed by
/// `(first-degree, second-degree)`. By convention the variables are `(x, q)`;
/// Tutte polynomials reuse the type with `(x, y)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BivarPoly {
    coeffs: BTreeMap<(usize, usize), BigInt>,
}

impl BivarPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, dx: usize, dq: usize) -> Self {
        let mut p = Self::zero();
        p.add_term(dx, dq, c.into());
        p
    }

    pub fn add_term(&mut self, dx: usize, dq: usize, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry((dx, dq)).or_default();
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&(dx, dq));
        }
    }

    /// Builds `x^dx * p(q)`.
    pub fn from_x_power(dx: usize, p: &IntPoly) -> Self {
        let mut out = Self::zero();
        for (k, c) in p.terms() {
            out.add_term(dx, k, c.clone());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, dx: usize, dq: usize) -> BigInt {
        self.coeffs.get(&(dx, dq)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = ((usize, usize), &BigInt)> {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    pub fn x_degree(&self) -> Option<usize> {
        self.coeffs.keys().map(|k| k.0).max()
    }

    /// Coefficient of `x^dx`, as a polynomial in the second variable.
    pub fn coeff_x(&self, dx: usize) -> IntPoly {
        let mut p = IntPoly::zero();
        for (&(i, j), c) in self.coeffs.range((dx, 0)..=(dx, usize::MAX)) {
            debug_assert_eq!(i, dx);
            p.add_term(j, c.clone());
        }
        p
    }

    /// Substitutes a value for the second variable, leaving a polynomial in the first.
    pub fn specialize_second(&self, at: &BigInt) -> IntPoly {
        let mut p = IntPoly::zero();
        for (&(i, j), c) in &self.coeffs {
            p.add_term(i, c * num_traits::pow(at.clone(), j));
        }
        p
    }

    /// Substitutes a value for the first variable, leaving a polynomial in the second.
    pub fn specialize_first(&self, at: &BigInt) -> IntPoly {
        let mut p = IntPoly::zero();
        for (&(i, j), c) in &self.coeffs {
            p.add_term(j, c * num_traits::pow(at.clone(), i));
        }
        p
    }

    pub fn eval(&self, x: &BigInt, q: &BigInt) -> BigInt {
        self.specialize_second(q).eval(x)
    }

    /// Renders with explicit variable names, grouping by powers of the first variable,
    /// e.g. `x^3 + x^2 + x + y`.
    pub fn display_vars(&self, first: &str, second: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        let xs: Vec<usize> = {
            let mut v: Vec<usize> = self.coeffs.keys().map(|k| k.0).collect();
            v.dedup();
            v
        };
        for &dx in xs.iter().rev() {
            let c = self.coeff_x(dx);
            let xpow = match dx {
                0 => String::new(),
                1 => first.to_string(),
                _ => format!("{first}^{dx}"),
            };
            let inner = c.display_var(second);
            let single = c.terms().count() == 1;
            let part = if dx == 0 {
                inner
            } else if c == IntPoly::one() {
                xpow
            } else if single && c.degree() == Some(0) {
                format!("{inner}{xpow}")
            } else if single && c.terms().all(|(_, v)| v.is_one()) {
                format!("{xpow}{inner}")
            } else {
                format!("{xpow}({inner})")
            };
            parts.push(part);
        }
        parts.join(" + ")
    }

    /// Serializable form `{"var_order": [..], "terms": [[dx, dq, "coeff"], ...]}`,
    /// terms sorted by `(dx, dq)`.
    pub fn to_json(&self, var_order: [&str; 2]) -> PolyJson {
        PolyJson {
            var_order: var_order.iter().map(|s| s.to_string()).collect(),
            terms: self
                .coeffs
                .iter()
                .map(|(&(i, j), c)| (i, j, c.to_string()))
                .collect(),
        }
    }

    pub fn from_json(j: &PolyJson) -> Result<Self> {
        let mut p = Self::zero();
        for (dx, dq, c) in &j.terms {
            let c: BigInt = c
                .parse()
                .map_err(|_| Error::Parse(format!("bad coefficient {c:?}")))?;
            p.add_term(*dx, *dq, c);
        }
        Ok(p)
    }
}

/// Wire form of a [`BivarPoly`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub var_order: Vec<String>,
    pub terms: Vec<(usize, usize, String)>,
}

impl fmt::Display for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_vars("x", "q"))
    }
}

impl Add for &BivarPoly {
    type Output = BivarPoly;
    fn add(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&BivarPoly> for BivarPoly {
    fn add_assign(&mut self, rhs: &BivarPoly) {
        for ((i, j), c) in rhs.terms() {
            self.add_term(i, j, c.clone());
        }
    }
}

impl Mul for &BivarPoly {
    type Output = BivarPoly;
    fn mul(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = BivarPoly::zero();
        for ((i, j), a) in self.terms() {
            for ((k, l), b) in rhs.terms() {
                out.add_term(i + k, j + l, a * b);
            }
        }
        out
    }
}
