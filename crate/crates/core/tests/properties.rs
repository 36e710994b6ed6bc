use proptest::prelude::*;

use tiered::algebra::{BigInt, BigRational, IntPoly, RatSeries};
use tiered::bijections::{
    cycle_insertion, cycle_insertion_inverse, decompose, perm_to_tree, tree_to_perm,
    underlying_permutation, Permutation,
};
use tiered::permweight::{descents, partition_to_perm, perm_to_partition, perm_weight, SetPartition};
use tiered::weight::{external_activity, tree_weight};

fn arb_poly() -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-20i64..=20, 0..6).prop_map(|c| IntPoly::from_coeffs(&c))
}

fn arb_perm(max_n: usize) -> impl Strategy<Value = Permutation> {
    (1..=max_n)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<usize>>()).prop_shuffle())
        .prop_map(|w| Permutation::new(w).unwrap())
}

fn arb_partition(max_n: usize) -> impl Strategy<Value = SetPartition> {
    // restricted growth strings give every set partition
    prop::collection::vec(0usize..max_n, 1..=max_n).prop_map(|raw| {
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for (i, r) in raw.into_iter().enumerate() {
            let b = r % (blocks.len() + 1);
            if b == blocks.len() {
                blocks.push(Vec::new());
            }
            blocks[b].push(i + 1);
        }
        SetPartition::new(blocks).unwrap()
    })
}

proptest! {
    #[test]
    fn ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn poly_display_parses_back(a in arb_poly()) {
        let back: IntPoly = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn eval_is_a_homomorphism(a in arb_poly(), b in arb_poly(), x in -5i64..=5) {
        let x = BigInt::from(x);
        prop_assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
    }

    #[test]
    fn exp_log_round_trip(nums in prop::collection::vec(-9i64..=9, 6), dens in prop::collection::vec(1i64..=6, 6)) {
        let s = RatSeries::from_fn(6, |k| {
            if k == 0 { BigRational::from(BigInt::from(0)) }
            else { BigRational::new(nums[k - 1].into(), dens[k - 1].into()) }
        });
        prop_assert_eq!(s.exp().unwrap().log().unwrap(), s);
    }

    #[test]
    fn maxmin_round_trip(pi in arb_perm(8)) {
        let t = perm_to_tree(&pi);
        prop_assert!(t.is_maxmin());
        prop_assert_eq!(tree_weight(&t), 0);
        prop_assert_eq!(t.maxima().len(), descents(&pi) + 1);
        prop_assert_eq!(underlying_permutation(&t).unwrap(), pi.clone());
        prop_assert_eq!(tree_to_perm(&t).unwrap(), pi);
    }

    #[test]
    fn cycle_insertion_round_trip(pi in arb_perm(9)) {
        prop_assume!(pi.len() >= 2);
        let (sigma, slot) = cycle_insertion_inverse(&pi).unwrap();
        prop_assert_eq!(sigma.len(), pi.len() - 1);
        prop_assert_eq!(decompose(&pi).block_count(), sigma.cycles().len());
        prop_assert_eq!(cycle_insertion(&sigma, slot).unwrap(), pi);
    }

    #[test]
    fn partition_round_trip(p in arb_partition(10)) {
        let pi = partition_to_perm(&p);
        prop_assert_eq!(perm_weight(&pi), 0);
        prop_assert_eq!(descents(&pi) + 1, p.blocks().len());
        prop_assert_eq!(perm_to_partition(&pi).unwrap(), p);
    }

    #[test]
    fn weight_agrees_with_activity_on_maxmin_images(pi in arb_perm(7)) {
        let t = perm_to_tree(&pi);
        prop_assert_eq!(external_activity(&t).external, tree_weight(&t));
    }
}
