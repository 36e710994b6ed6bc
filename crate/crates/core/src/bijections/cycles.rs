use serde::Serialize;

use super::perm::{symbol_value, Permutation};
use crate::{Error, Result};

/// Where the new letter goes when a cycle form is extended by one letter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum InsertionSlot {
    /// Right after this letter of the original permutation.
    After(usize),
    OwnCycle,
}

impl InsertionSlot {
    /// All `n` slots for a permutation of `1..=n-1`.
    pub fn all(n_minus_one: usize) -> impl Iterator<Item = InsertionSlot> {
        (1..=n_minus_one)
            .map(InsertionSlot::After)
            .chain(std::iter::once(InsertionSlot::OwnCycle))
    }
}

/// Parses cycle notation such as `(237)(418)(69)(5)` or `(2,3,7)(10,1)`.
/// Without commas each character is one letter in `0-9A-Z`.
pub fn parse_cycles(s: &str) -> Result<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    let mut rest = s.trim();
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('(')
            .and_then(|r| r.split_once(')'))
            .ok_or_else(|| Error::Parse(format!("malformed cycle notation {s:?}")))?;
        let (inner, tail) = body;
        let cycle = if inner.contains(',') {
            inner
                .split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|e| Error::Parse(format!("{t:?}: {e}"))))
                .collect::<Result<Vec<_>>>()?
        } else {
            inner.trim().chars().map(symbol_value).collect::<Result<Vec<_>>>()?
        };
        if cycle.is_empty() {
            return Err(Error::Parse("empty cycle".into()));
        }
        out.push(cycle);
        rest = tail.trim_start();
    }
    Ok(out)
}

/// Reads cycle notation over `1..=n`, where `n` is the largest letter mentioned
/// (unless given); unmentioned letters are fixed points.
pub fn permutation_from_cycle_notation(s: &str, n: Option<usize>) -> Result<Permutation> {
    let cycles = parse_cycles(s)?;
    let top = cycles.iter().flatten().copied().max().unwrap_or(0);
    Permutation::from_cycles(n.unwrap_or(top), &cycles)
}

/// Raises every letter of `sigma` by one and inserts the letter 1 at `slot`.
/// The cycle holding 1 is written from 1 and placed last; the other cycles
/// end in their maxima and appear by decreasing maxima. Erasing the
/// parentheses gives a permutation whose block count equals the number of
/// cycles of `sigma`.
pub fn cycle_insertion(sigma: &Permutation, slot: InsertionSlot) -> Result<Permutation> {
    let m = sigma.len();
    let mut cycles: Vec<Vec<usize>> = sigma
        .cycles()
        .into_iter()
        .map(|c| c.into_iter().map(|a| a + 1).collect())
        .collect();
    let one_cycle = match slot {
        InsertionSlot::After(a) => {
            if a == 0 || a > m {
                return Err(Error::domain(format!("no letter {a} in a permutation of 1..={m}")));
            }
            let ci = cycles
                .iter()
                .position(|c| c.contains(&(a + 1)))
                .expect("every letter lies on a cycle");
            let mut c = cycles.remove(ci);
            let at = c.iter().position(|&b| b == a + 1).expect("present");
            c.insert(at + 1, 1);
            c.rotate_left(at + 1);
            c
        }
        InsertionSlot::OwnCycle => vec![1],
    };
    for c in &mut cycles {
        let top = c.iter().position(|&b| b == *c.iter().max().expect("nonempty")).expect("present");
        c.rotate_left(top + 1);
    }
    cycles.sort_by_key(|c| std::cmp::Reverse(*c.last().expect("nonempty")));
    let mut word: Vec<usize> = cycles.into_iter().flatten().collect();
    word.extend(one_cycle);
    Ok(Permutation::from_vec_unchecked(word))
}

/// Recovers `(sigma, slot)` from a permutation of `1..=n`, `n >= 1`. Every
/// permutation is reached exactly once.
pub fn cycle_insertion_inverse(pi: &Permutation) -> Result<(Permutation, InsertionSlot)> {
    let word = pi.word();
    let Some(one) = word.iter().position(|&a| a == 1) else {
        return Err(Error::domain("cycle_insertion_inverse needs a nonempty permutation"));
    };
    let mut cycles: Vec<Vec<usize>> = super::split_at_maxima(&word[..one])
        .into_iter()
        .map(|c| c.into_iter().map(|a| a - 1).collect())
        .collect();
    let tail: Vec<usize> = word[one + 1..].iter().map(|a| a - 1).collect();
    let slot = match tail.last() {
        None => InsertionSlot::OwnCycle,
        Some(&last) => {
            cycles.push(tail.clone());
            InsertionSlot::After(last)
        }
    };
    Ok((Permutation::from_cycles(word.len() - 1, &cycles)?, slot))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bijections::decompose;

    fn example() -> Permutation {
        permutation_from_cycle_notation("(237)(418)(69)(5)", None).unwrap()
    }

    #[test]
    fn insert_after_letter() {
        let p = cycle_insertion(&example(), InsertionSlot::After(2)).unwrap();
        assert_eq!(p.to_symbols().unwrap(), "6941850372");
        let d = decompose(&p);
        assert_eq!(d.blocks, vec![vec![7, 10], vec![5, 2, 9], vec![6]]);
        assert_eq!(d.right, vec![4, 8, 3, 11]);
        assert_eq!(d.block_count(), 4);
    }

    #[test]
    fn insert_as_own_cycle() {
        let p = cycle_insertion(&example(), InsertionSlot::OwnCycle).unwrap();
        assert_eq!(p.to_symbols().unwrap(), "6941823750");
        assert_eq!(decompose(&p).block_count(), 4);
    }

    #[test]
    fn smallest_case() {
        let p = cycle_insertion(&Permutation::identity(1), InsertionSlot::OwnCycle).unwrap();
        assert_eq!(p.word(), &[2, 1]);
        assert_eq!(decompose(&p).block_count(), 1);
        assert!(cycle_insertion(&Permutation::identity(1), InsertionSlot::After(2)).is_err());
    }

    #[test]
    fn inverse_recovers_input() {
        for n in 1..=6 {
            for sigma in crate::bijections::permutations(n - 1) {
                for slot in InsertionSlot::all(n - 1) {
                    let pi = cycle_insertion(&sigma, slot).unwrap();
                    assert_eq!(cycle_insertion_inverse(&pi).unwrap(), (sigma.clone(), slot));
                }
            }
        }
    }

    #[test]
    fn parsing() {
        assert_eq!(parse_cycles("(2,3,10)(1)").unwrap(), vec![vec![2, 3, 10], vec![1]]);
        assert!(parse_cycles("(23").is_err());
        assert!(parse_cycles("()").is_err());
    }
}
