use std::fmt;

use serde::Serialize;

use super::stats::{descents, perm_weight};
use crate::bijections::Permutation;
use crate::{Error, Result};

/// A set partition of `1..=n`, kept with each block ascending and blocks
/// ordered by their minima.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SetPartition {
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    pub fn new(mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        let n: usize = blocks.iter().map(Vec::len).sum();
        let mut seen = vec![false; n + 1];
        for b in &mut blocks {
            if b.is_empty() {
                return Err(Error::domain("empty block"));
            }
            for &a in b.iter() {
                if a == 0 || a > n || seen[a] {
                    return Err(Error::domain(format!("blocks do not partition 1..={n}")));
                }
                seen[a] = true;
            }
            b.sort_unstable();
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(SetPartition { blocks })
    }

    /// Reads blocks separated by `|`. Blocks with commas hold 1-based
    /// numbers; otherwise each character is a 0-based symbol shifted up by one,
    /// so `25|6130|798|4` is `{3,6} {1,2,4,7} {8,9,10} {5}`.
    pub fn parse(s: &str) -> Result<Self> {
        let comma = s.contains(',');
        let blocks = s
            .split('|')
            .map(|b| {
                if comma {
                    b.split(',')
                        .map(|t| t.trim().parse::<usize>().map_err(|e| Error::Parse(format!("{t:?}: {e}"))))
                        .collect::<Result<Vec<_>>>()
                } else {
                    b.trim()
                        .chars()
                        .map(|c| {
                            c.to_digit(36)
                                .map(|v| v as usize + 1)
                                .ok_or_else(|| Error::Parse(format!("unexpected symbol {c:?}")))
                        })
                        .collect::<Result<Vec<_>>>()
                }
            })
            .collect::<Result<Vec<_>>>()?;
        SetPartition::new(blocks)
    }

    pub fn n(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        f.write_str(&parts.join("|"))
    }
}

/// Blocks written ascending, the block holding 1 last, the rest by
/// decreasing maxima. The result has weight 0 and one descent fewer than
/// there are blocks.
pub fn partition_to_perm(p: &SetPartition) -> Permutation {
    let mut others: Vec<&Vec<usize>> = p.blocks.iter().filter(|b| b[0] != 1).collect();
    others.sort_by_key(|b| std::cmp::Reverse(*b.last().expect("nonempty")));
    let mut word: Vec<usize> = others.into_iter().flatten().copied().collect();
    if let Some(first) = p.blocks.iter().find(|b| b[0] == 1) {
        word.extend(first);
    }
    Permutation::new(word).expect("blocks partition 1..=n")
}

/// Splits a weight-zero permutation at its descents.
pub fn perm_to_partition(pi: &Permutation) -> Result<SetPartition> {
    let w = perm_weight(pi);
    if w != 0 {
        return Err(Error::domain(format!("perm_to_partition needs weight 0, got {w}")));
    }
    let mut blocks = vec![Vec::new()];
    let word = pi.word();
    for (i, &a) in word.iter().enumerate() {
        if i > 0 && word[i - 1] > a {
            blocks.push(Vec::new());
        }
        blocks.last_mut().expect("nonempty").push(a);
    }
    if word.is_empty() {
        blocks.clear();
    }
    debug_assert_eq!(blocks.len(), descents(pi) + usize::from(!word.is_empty()));
    SetPartition::new(blocks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_example() {
        let p = SetPartition::parse("25|6130|798|4").unwrap();
        assert_eq!(p.to_string(), "1,2,4,7|3,6|5|8,9,10");
        let pi = partition_to_perm(&p);
        assert_eq!(pi.to_symbols().unwrap(), "7892540136");
        assert_eq!(descents(&pi), 3);
        assert_eq!(perm_weight(&pi), 0);
        assert_eq!(perm_to_partition(&pi).unwrap(), p);
    }

    #[test]
    fn extremes() {
        let singles = SetPartition::new((1..=4).map(|a| vec![a]).collect()).unwrap();
        assert_eq!(partition_to_perm(&singles), Permutation::longest(4));
        let whole = SetPartition::new(vec![vec![3, 1, 2, 4]]).unwrap();
        assert_eq!(partition_to_perm(&whole), Permutation::identity(4));
    }

    #[test]
    fn rejects() {
        assert!(SetPartition::new(vec![vec![1, 2], vec![2]]).is_err());
        assert!(SetPartition::parse("1,3|2,5").is_err());
        assert!(perm_to_partition(&Permutation::new(vec![1, 3, 2]).unwrap()).is_err());
    }
}
