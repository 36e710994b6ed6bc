/// Iterator over the integer partitions of `n`, each a weakly decreasing
/// part list, in reverse-lexicographic order: `[3], [2, 1], [1, 1, 1]`.
#[derive(Clone, Debug)]
pub struct Partitions {
    current: Option<Vec<usize>>,
}

pub fn partitions(n: usize) -> Partitions {
    Partitions {
        current: if n == 0 { None } else { Some(vec![n]) },
    }
}

impl Iterator for Partitions {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.take()?;
        let mut next = out.clone();
        // Strip trailing ones, decrement the last part > 1, refill greedily.
        let mut ones = 0;
        while next.last() == Some(&1) {
            next.pop();
            ones += 1;
        }
        if let Some(last) = next.last_mut() {
            *last -= 1;
            let cap = *last;
            let mut rest = ones + 1;
            while rest > 0 {
                let part = rest.min(cap);
                next.push(part);
                rest -= part;
            }
            self.current = Some(next);
        }
        Some(out)
    }
}
