//! The weight of a tiered tree, edge activities and Tutte polynomials, and
//! the weight generating polynomials `P_p(q)` and `T_n(x, q)`.

mod activity;
mod recursion;
mod tutte;

pub use activity::{external_activity, ActivityReport, EdgeActivity};
pub(crate) use recursion::flood as flood_mask;
pub use recursion::{tree_weight, weight_of_candidate};
pub use tutte::{tutte_polynomial, Graph, TutteMethod};

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;

use crate::algebra::{BivarPoly, IntPoly};
use crate::trees::{CompleteTieredGraph, TierType};
use crate::{Error, Result};

/// `P_p(q)`: the sum of `q^w(T)` over all tiered trees of type `p`.
pub fn tier_poly(p: &TierType) -> Result<IntPoly> {
    tier_poly_with_limit(p, crate::TREE_CAPACITY)
}

pub fn tier_poly_with_limit(p: &TierType, limit: usize) -> Result<IntPoly> {
    Error::check_capacity("tier polynomial (vertices)", p.n(), limit)?;
    let assignments: Vec<Vec<usize>> = p.assignments().collect();
    let max_weight = p.n() * p.n();
    let hist = assignments
        .into_par_iter()
        .map(|tiers| {
            let mut h = vec![0u64; max_weight + 1];
            for t in CompleteTieredGraph::new(tiers).spanning_trees() {
                h[tree_weight(&t)] += 1;
            }
            h
        })
        .reduce(
            || vec![0u64; max_weight + 1],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
    Ok(IntPoly::from_counts(&hist))
}

/// `sum_t T_{K_t}(1, q)` over the tier assignments of type `p`;
/// disconnected `K_t` contribute nothing.
pub fn tier_poly_via_tutte(p: &TierType, method: TutteMethod) -> Result<IntPoly> {
    Error::check_capacity("tier polynomial via Tutte (vertices)", p.n(), crate::TREE_CAPACITY)?;
    let assignments: Vec<Vec<usize>> = p.assignments().collect();
    assignments
        .into_par_iter()
        .map(|tiers| {
            let g = CompleteTieredGraph::new(tiers);
            if !g.is_connected() {
                return Ok(IntPoly::zero());
            }
            let t = tutte_polynomial(&Graph::from(&g), method)?;
            Ok(t.specialize_first(&BigInt::one()))
        })
        .try_reduce(IntPoly::zero, |a, b| Ok(&a + &b))
}

/// Tier types of the published table for `3 <= n <= max_n`: partitions of
/// `n` with at least two parts other than `(n-1, 1)`, parts ascending,
/// ordered by `n`, then number of parts, then lexicographically.
pub fn table_tier_types(max_n: usize) -> Vec<TierType> {
    let mut out = Vec::new();
    for n in 3..=max_n {
        let mut rows: Vec<Vec<usize>> = crate::algebra::partitions(n)
            .filter(|p| p.len() >= 2 && !(p.len() == 2 && p[1] == 1))
            .map(|mut p| {
                p.reverse();
                p
            })
            .collect();
        rows.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out.extend(rows.into_iter().map(|p| TierType::new(p).expect("at least two parts")));
    }
    out
}

/// `T_n(x, q)`: the sum of `x^(maxima) q^(weight)` over all maxmin trees on `n` vertices.
pub fn maxmin_polynomial(n: usize) -> Result<BivarPoly> {
    if n < 2 {
        return Err(Error::domain("maxmin trees need at least 2 vertices"));
    }
    Error::check_capacity("maxmin polynomial (vertices)", n, crate::TREE_CAPACITY)?;
    let mut out = BivarPoly::zero();
    for maxima in 1..n {
        let p = TierType::new(vec![n - maxima, maxima])?;
        out += &BivarPoly::from_x_power(maxima, &tier_poly(&p)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tt(parts: &[usize]) -> TierType {
        TierType::new(parts.to_vec()).unwrap()
    }

    fn poly(s: &str) -> IntPoly {
        s.parse().unwrap()
    }

    #[test]
    fn table_rows() {
        assert_eq!(tier_poly(&tt(&[2, 2])).unwrap(), poly("q + 4"));
        assert_eq!(tier_poly(&tt(&[1, 1, 1])).unwrap(), poly("q + 4"));
        assert_eq!(
            tier_poly(&tt(&[1, 2, 2])).unwrap(),
            poly("q^4 + 6q^3 + 22q^2 + 51q + 66")
        );
    }

    #[test]
    fn tutte_route_agrees_small() {
        for parts in [&[2, 2][..], &[1, 1, 1], &[1, 1, 2], &[2, 1, 1]] {
            let p = tt(parts);
            let direct = tier_poly(&p).unwrap();
            for method in [TutteMethod::Activities, TutteMethod::DeletionContraction] {
                assert_eq!(tier_poly_via_tutte(&p, method).unwrap(), direct);
            }
        }
    }

    #[test]
    fn table_rows_order() {
        let rows: Vec<String> = table_tier_types(5).iter().map(|p| p.to_string()).collect();
        assert_eq!(
            rows,
            ["(1, 1, 1)", "(2, 2)", "(1, 1, 2)", "(1, 1, 1, 1)", "(2, 3)", "(1, 1, 3)", "(1, 2, 2)", "(1, 1, 1, 2)", "(1, 1, 1, 1, 1)"]
        );
        assert_eq!(table_tier_types(6).len(), 18);
    }

    #[test]
    fn maxmin_four() {
        let t4 = maxmin_polynomial(4).unwrap();
        let mut expected = BivarPoly::monomial(1, 1, 0);
        expected += &BivarPoly::monomial(1, 3, 0);
        expected += &BivarPoly::from_x_power(2, &poly("q + 4"));
        assert_eq!(t4, expected);
        assert!(maxmin_polynomial(1).is_err());
    }
}
