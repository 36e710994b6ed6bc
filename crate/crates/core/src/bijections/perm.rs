use std::fmt;

use serde::Serialize;

use crate::{Error, Result};

/// A permutation of `1..=n` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Permutation(Vec<usize>);

const SYMBOLS: &[u8] = b"0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZ";

pub(crate) fn symbol_value(c: char) -> Result<usize> {
    let up = c.to_ascii_uppercase();
    SYMBOLS
        .iter()
        .position(|&s| s as char == up)
        .ok_or_else(|| Error::Parse(format!("unexpected symbol {c:?}")))
}

pub(crate) fn symbol_char(v: usize) -> char {
    SYMBOLS[v] as char
}

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &a in &word {
            if a == 0 || a > n || seen[a] {
                return Err(Error::domain(format!("{word:?} is not a permutation of 1..={n}")));
            }
            seen[a] = true;
        }
        Ok(Permutation(word))
    }

    pub(crate) fn from_vec_unchecked(word: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(word.clone()).is_ok());
        Permutation(word)
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    /// `n, n-1, ..., 1`.
    pub fn longest(n: usize) -> Self {
        Permutation((1..=n).rev().collect())
    }

    /// Reads a compact string of 0-based symbols `0-9A-Z`, e.g. `8594673201`,
    /// shifting every symbol up by one.
    pub fn from_symbols(s: &str) -> Result<Self> {
        let word = s
            .trim()
            .chars()
            .map(|c| symbol_value(c).map(|v| v + 1))
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(word)
    }

    /// Inverse of [`Permutation::from_symbols`]; `None` past 36 letters.
    pub fn to_symbols(&self) -> Option<String> {
        if self.len() > SYMBOLS.len() {
            return None;
        }
        Some(self.0.iter().map(|&a| symbol_char(a - 1)).collect())
    }

    /// Reads a comma-separated 1-based word such as `1,3,2`.
    pub fn from_list(s: &str) -> Result<Self> {
        let word = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("{t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(word)
    }

    /// Accepts either a comma-separated 1-based list or a compact symbol string.
    pub fn parse(s: &str) -> Result<Self> {
        if s.contains(',') {
            Self::from_list(s)
        } else {
            Self::from_symbols(s)
        }
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn word(&self) -> &[usize] {
        &self.0
    }

    pub fn into_word(self) -> Vec<usize> {
        self.0
    }

    /// Cycles, each starting at its smallest letter, ordered by that letter.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut seen = vec![false; n + 1];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut a = start;
            while !seen[a] {
                seen[a] = true;
                cycle.push(a);
                a = self.0[a - 1];
            }
            out.push(cycle);
        }
        out
    }

    /// Builds the permutation of `1..=n` with the given cycles; letters not
    /// mentioned are fixed points.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut word: Vec<usize> = (1..=n).collect();
        let mut seen = vec![false; n + 1];
        for c in cycles {
            for (i, &a) in c.iter().enumerate() {
                if a == 0 || a > n || seen[a] {
                    return Err(Error::domain(format!("bad cycle letter {a} in {cycles:?}")));
                }
                seen[a] = true;
                word[a - 1] = c[(i + 1) % c.len()];
            }
        }
        Ok(Permutation(word))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|a| a.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

/// Relabels a sequence of distinct integers onto `1..=len`, preserving order.
pub fn flatten(seq: &[usize]) -> Vec<usize> {
    let mut sorted = seq.to_vec();
    sorted.sort_unstable();
    seq.iter()
        .map(|a| sorted.binary_search(a).expect("present") + 1)
        .collect()
}

/// Every permutation of `1..=n` in lexicographic order.
pub fn permutations(n: usize) -> impl Iterator<Item = Permutation> {
    let mut cur: Option<Vec<usize>> = Some((1..=n).collect());
    std::iter::from_fn(move || {
        let out = cur.take()?;
        let mut next = out.clone();
        if crate::trees::next_permutation(&mut next) {
            cur = Some(next);
        }
        Some(Permutation(out))
    })
}

/// Permutations of `1..=n` starting with `first`, in lexicographic order.
pub fn permutations_starting_with(n: usize, first: usize) -> impl Iterator<Item = Permutation> {
    let rest: Vec<usize> = (1..=n).filter(|&a| a != first).collect();
    let mut cur = Some(rest);
    std::iter::from_fn(move || {
        let tail = cur.take()?;
        let mut next = tail.clone();
        if crate::trees::next_permutation(&mut next) {
            cur = Some(next);
        }
        let mut word = Vec::with_capacity(n);
        word.push(first);
        word.extend(tail);
        Some(Permutation(word))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symbols_shift_by_one() {
        let p = Permutation::from_symbols("8594673201").unwrap();
        assert_eq!(p.word(), &[9, 6, 10, 5, 7, 8, 4, 3, 1, 2]);
        assert_eq!(p.to_symbols().unwrap(), "8594673201");
        assert!(Permutation::from_symbols("0012").is_err());
        assert_eq!(Permutation::parse("1,3,2").unwrap().word(), &[1, 3, 2]);
    }

    #[test]
    fn cycles_round_trip() {
        for p in permutations(5) {
            assert_eq!(Permutation::from_cycles(5, &p.cycles()).unwrap(), p);
        }
        let p = Permutation::from_cycles(4, &[vec![1, 3]]).unwrap();
        assert_eq!(p.word(), &[3, 2, 1, 4]);
    }

    #[test]
    fn flatten_keeps_pattern() {
        assert_eq!(flatten(&[9, 6, 10]), vec![2, 1, 3]);
        assert_eq!(flatten(&[]), Vec::<usize>::new());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(permutations(0).count(), 1);
        assert_eq!(permutations(5).count(), 120);
        let split: usize = (1..=5).map(|f| permutations_starting_with(5, f).count()).sum();
        assert_eq!(split, 120);
    }
}
