use crate::bijections::{flatten, split_at_maxima, Permutation};

pub(crate) fn descents_of(seq: &[usize]) -> usize {
    seq.windows(2).filter(|w| w[0] > w[1]).count()
}

pub fn descents(pi: &Permutation) -> usize {
    descents_of(pi.word())
}

pub fn inversions(pi: &Permutation) -> usize {
    let w = pi.word();
    (0..w.len())
        .map(|i| w[i + 1..].iter().filter(|&&b| b < w[i]).count())
        .sum()
}

/// Weight of a word that is a permutation of `1..=len`.
pub(crate) fn word_weight(seq: &[usize]) -> usize {
    let n = seq.len();
    if n <= 1 {
        return 0;
    }
    let identity = seq.iter().enumerate().all(|(i, &a)| a == i + 1);
    let longest = seq.iter().enumerate().all(|(i, &a)| a == n - i);
    if identity || longest {
        return 0;
    }
    let one = seq.iter().position(|&a| a == 1).expect("1 is present");
    let mut right = seq[one + 1..].to_vec();
    right.push(n + 1);
    let mut total = word_weight(&flatten(&right)) + descents_of(&right);
    for block in split_at_maxima(&seq[..one]) {
        total += word_weight(&flatten(&block)) + descents_of(&block);
    }
    total
}

/// `w(pi)`: zero for the identity and the longest element; otherwise
/// `w(pi_R) + d(pi_R) + sum_i (w(pi_i) + d(pi_i))` over the decomposition,
/// each piece flattened before recursing.
pub fn perm_weight(pi: &Permutation) -> usize {
    word_weight(pi.word())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        Permutation::parse(s).unwrap()
    }

    #[test]
    fn statistics() {
        assert_eq!(descents(&Permutation::identity(4)), 0);
        assert_eq!(inversions(&Permutation::identity(4)), 0);
        assert_eq!(descents(&Permutation::longest(4)), 3);
        assert_eq!(inversions(&Permutation::longest(4)), 6);
        assert_eq!(descents(&p("8594673201")), 5);
    }

    #[test]
    fn weights() {
        assert_eq!(perm_weight(&p("15A86290374")), 4);
        assert_eq!(perm_weight(&p("1,3,2")), 1);
        assert_eq!(perm_weight(&p("1,3,2,4")), 1);
        assert_eq!(perm_weight(&p("2,1,3")), 0);
        assert_eq!(perm_weight(&Permutation::longest(6)), 0);
        assert_eq!(perm_weight(&p("1,2,5,4,3")), 4);
    }
}
