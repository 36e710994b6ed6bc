use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

use super::golden;
use super::{Profile, VerifyOptions, VerifyReport};
use crate::algebra::{
    bell, eulerian, factorial, partition_count, partitions, stirling1_unsigned, stirling2, BivarPoly,
    IntPoly, RatSeries,
};
use crate::bijections::{
    bessel_check, cnat_to_tiered, cycle_insertion, decompose, enumerate_cnat, perm_to_tree,
    permutations, tiered_to_cnat, tree_to_perm, underlying_permutation, InsertionSlot, Permutation,
};
use crate::counting::{count_closed_form, count_proper, egf_check, rooted_count};
use crate::permweight::{
    coefficient_checks_on, descents, max_weight_check, partition_to_perm, perm_to_partition,
    perm_weight, promotion, q_eulerian, stanley_q_eulerian, triangle_agreement,
    two_colored_triangle, wd_prefix_from, SetPartition,
};
use crate::trees::{count_brute, enumerate_tiered_trees, CountMode, TierType, TieredTree};
use crate::weight::{
    external_activity, maxmin_polynomial, tier_poly, tier_poly_via_tutte, tree_weight,
    tutte_polynomial, Graph, TutteMethod,
};
use crate::{Error, Result};

struct Bounds {
    trees: usize,
    maxmin: usize,
    perm_round_trip: usize,
    weight_zero_stirling: usize,
    cycle_insertion: usize,
    cnat: usize,
    cnat_round_trip: usize,
    bessel: usize,
    coefficients: usize,
    max_weight: usize,
    weight_oracle: usize,
    wd: usize,
    egf: usize,
    rooted: usize,
}

fn bounds(opts: &VerifyOptions) -> Bounds {
    match opts.profile {
        Profile::Quick => Bounds {
            trees: 5,
            maxmin: 5,
            perm_round_trip: 5,
            weight_zero_stirling: 5,
            cycle_insertion: 5,
            cnat: 4,
            cnat_round_trip: 4,
            bessel: 5,
            coefficients: 5,
            max_weight: 5,
            weight_oracle: 4,
            wd: 5,
            egf: 4,
            rooted: 4,
        },
        Profile::Full => Bounds {
            trees: 6,
            maxmin: 7,
            perm_round_trip: 6,
            weight_zero_stirling: 8,
            cycle_insertion: 7,
            cnat: 5,
            cnat_round_trip: 4,
            bessel: 6,
            coefficients: 9,
            max_weight: 8,
            weight_oracle: 5,
            wd: 9,
            egf: 5,
            rooted: 5,
        },
    }
}

fn mismatch(what: impl std::fmt::Display) -> Error {
    Error::Verification(what.to_string())
}

fn poly(s: &str) -> IntPoly {
    s.parse().expect("reference polynomials parse")
}

/// Every tier type on `2..=max_n` vertices.
fn all_tier_types(max_n: usize) -> Vec<TierType> {
    (2..=max_n)
        .flat_map(|n| (2..=n).flat_map(move |m| TierType::compositions(n, m)))
        .collect()
}

pub(super) fn algebra(r: &mut VerifyReport, opts: &VerifyOptions) {
    r.record("algebra: row sums of Eulerian and Stirling numbers", (|| {
        for n in 1..=9 {
            let e: BigInt = (0..n).map(|k| eulerian(k, n)).sum::<Result<BigInt>>()?;
            let s1: BigInt = (0..=n).map(|k| stirling1_unsigned(n, k)).sum::<Result<BigInt>>()?;
            let s2: BigInt = (0..=n).map(|k| stirling2(n, k)).sum::<Result<BigInt>>()?;
            if e != factorial(n) || s1 != factorial(n) || s2 != bell(n) {
                return Err(mismatch(format!("row sums disagree at n = {n}")));
            }
        }
        Ok("n <= 9".into())
    })());
    r.record("algebra: partition iterator matches partition numbers", (|| {
        for n in 1..=20 {
            if BigInt::from(partitions(n).count()) != partition_count(n) {
                return Err(mismatch(format!("n = {n}")));
            }
        }
        Ok("1 <= n <= 20".into())
    })());
    let seed = opts.seed;
    r.record("algebra: sampled exp/log round trips", (|| {
        let mut rng = StdRng::seed_from_u64(seed);
        let order = 8;
        for _ in 0..25 {
            let s = RatSeries::from_fn(order, |k| {
                if k == 0 {
                    BigRational::zero()
                } else {
                    BigRational::new(rng.gen_range(-9..=9).into(), rng.gen_range(1..=9).into())
                }
            });
            if s.exp()?.log()? != s {
                return Err(mismatch(format!("log(exp(s)) != s for s = {s}")));
            }
            let one_plus = &RatSeries::one(order) + &s;
            if one_plus.log()?.exp()? != one_plus {
                return Err(mismatch(format!("exp(log(1 + s)) != 1 + s for s = {s}")));
            }
        }
        Ok(format!("25 random series of order 8, seed {seed}"))
    })());
}

pub(super) fn trees(r: &mut VerifyReport, opts: &VerifyOptions) {
    let n_max = bounds(opts).trees;
    r.record(format!("trees: brute-force counts match the closed form (n <= {n_max})"), (|| {
        let cells: Vec<(usize, usize)> = (2..=n_max).flat_map(|n| (1..=n_max).map(move |m| (n, m))).collect();
        cells.into_par_iter().try_for_each(|(n, m)| {
            let all = count_brute(n, m, CountMode::All)?;
            let proper = count_brute(n, m, CountMode::Proper)?;
            if all != count_closed_form(n, m)? || proper != count_proper(n, m)? {
                return Err(mismatch(format!("n = {n}, m = {m}")));
            }
            Ok(())
        })?;
        Ok(format!("2 <= n <= {n_max}, 1 <= m <= {n_max}"))
    })());
    r.record(format!("trees: enumeration by tier type sums to P(n,m) (n <= {n_max})"), (|| {
        for n in 2..=n_max {
            for m in 2..=n {
                let total: usize = TierType::compositions(n, m)
                    .par_iter()
                    .map(|p| enumerate_tiered_trees(p).map(|it| it.count()))
                    .sum::<Result<usize>>()?;
                if BigInt::from(total) != count_proper(n, m)? {
                    return Err(mismatch(format!("n = {n}, m = {m}: enumerated {total}")));
                }
            }
        }
        Ok(format!("n <= {n_max}"))
    })());
}

pub(super) fn weight(r: &mut VerifyReport, opts: &VerifyOptions) {
    let b = bounds(opts);
    let types = all_tier_types(b.trees);
    r.record(format!("weight: weight equals external activity (n <= {})", b.trees), (|| {
        let checked = types
            .par_iter()
            .map(|p| {
                let mut count = 0usize;
                for t in enumerate_tiered_trees(p)? {
                    let w = tree_weight(&t);
                    let a = external_activity(&t).external;
                    if w != a {
                        return Err(mismatch(format!("{}: weight {w}, external activity {a}", t.to_json())));
                    }
                    count += 1;
                }
                Ok(count)
            })
            .sum::<Result<usize>>()?;
        Ok(format!("{checked} trees over {} tier types", types.len()))
    })());
    let tutte_n = 5;
    r.record(format!("weight: Tutte by activities equals deletion-contraction (K_t, n <= {tutte_n}; C_4; K_4)"), (|| {
        let mut graphs = vec![Graph::cycle(4), Graph::complete(4)];
        for p in all_tier_types(tutte_n) {
            for tiers in p.assignments() {
                let g = crate::trees::CompleteTieredGraph::new(tiers);
                if g.is_connected() {
                    graphs.push(Graph::from(&g));
                }
            }
        }
        graphs.par_iter().try_for_each(|g| {
            let a = tutte_polynomial(g, TutteMethod::Activities)?;
            let d = tutte_polynomial(g, TutteMethod::DeletionContraction)?;
            if a != d {
                return Err(mismatch(format!("{g:?}: {} vs {}", a.display_vars("x", "y"), d.display_vars("x", "y"))));
            }
            Ok(())
        })?;
        let c4 = tutte_polynomial(&Graph::cycle(4), TutteMethod::Activities)?;
        if c4.display_vars("x", "y") != "x^3 + x^2 + x + y" {
            return Err(mismatch(format!("C_4 gives {}", c4.display_vars("x", "y"))));
        }
        Ok(format!("{} graphs", graphs.len()))
    })());
    r.record(format!("weight: tier polynomial equals summed Tutte evaluations (n <= {tutte_n})"), (|| {
        let small = all_tier_types(tutte_n);
        small.par_iter().try_for_each(|p| {
            let direct = tier_poly(p)?;
            let via = tier_poly_via_tutte(p, TutteMethod::Activities)?;
            if direct != via {
                return Err(mismatch(format!("{p}: {direct} vs {via}")));
            }
            Ok(())
        })?;
        Ok(format!("{} tier types", small.len()))
    })());
    let polys: Result<BTreeMap<Vec<usize>, IntPoly>> = types
        .par_iter()
        .map(|p| Ok((p.parts().to_vec(), tier_poly(p)?)))
        .collect();
    let polys = match polys {
        Ok(p) => p,
        Err(e) => {
            r.record("weight: tier polynomials", Err(e));
            return;
        }
    };
    r.record(format!("weight: tier polynomials are invariant under reordering parts (n <= {})", b.trees), (|| {
        let mut by_multiset: BTreeMap<Vec<usize>, &IntPoly> = BTreeMap::new();
        for (parts, p) in &polys {
            let mut key = parts.clone();
            key.sort_unstable();
            if let Some(q) = by_multiset.insert(key, p) {
                if q != p {
                    return Err(mismatch(format!("{parts:?}: {p} vs {q}")));
                }
            }
        }
        Ok(format!("{} tier types, {} multisets", polys.len(), by_multiset.len()))
    })());
    r.record(format!("weight: tier polynomials match the reference table (n <= {})", b.trees), (|| {
        let mut rows = 0;
        for &(parts, want) in golden::TIER_POLYS {
            if let Some(got) = polys.get(parts) {
                if *got != poly(want) {
                    return Err(mismatch(format!("{parts:?}: got {got}, expected {want}")));
                }
                rows += 1;
            }
        }
        Ok(format!("{rows} rows"))
    })());
    r.record(format!("weight: weight-zero fully tiered trees count CNATs (n <= {})", b.trees), (|| {
        for n in 2..=b.trees {
            let c = polys[&vec![1; n]].coeff(0);
            if c != BigInt::from(golden::CNAT_COUNTS[n - 1]) {
                return Err(mismatch(format!("n = {n}: constant term {c}")));
            }
        }
        Ok(format!("b_1..b_{}", b.trees - 1))
    })());
    r.record(format!("weight: maxmin polynomial, Eulerian layer and totals (n <= {})", b.maxmin), (|| {
        for n in 2..=b.maxmin {
            let t = maxmin_polynomial(n)?;
            for k in 1..n {
                let at_zero = t.coeff(k, 0);
                if at_zero != eulerian(k - 1, n - 1)? {
                    return Err(mismatch(format!("n = {n}: [x^{k} q^0] = {at_zero}")));
                }
            }
            let total = t.eval(&BigInt::one(), &BigInt::one());
            if total != count_closed_form(n, 2)? {
                return Err(mismatch(format!("n = {n}: total {total}")));
            }
            if let Some(&(_, want)) = golden::MAXMIN.iter().find(|g| g.0 == n) {
                for (k, w) in want.iter().enumerate() {
                    if t.coeff_x(k) != poly(w) {
                        return Err(mismatch(format!("n = {n}: [x^{k}] = {}", t.coeff_x(k))));
                    }
                }
            }
        }
        Ok(format!("n <= {}", b.maxmin))
    })());
}

pub(super) fn counting(r: &mut VerifyReport, opts: &VerifyOptions) {
    let b = bounds(opts);
    r.record(format!("counting: closed form and proper counts match the reference table (n <= {})", b.trees), (|| {
        let mut rows = 0;
        for &(n, m, t, p) in golden::COUNTS.iter().filter(|c| c.0 <= b.trees) {
            let (gt, gp) = (count_closed_form(n, m)?, count_proper(n, m)?);
            if gt != BigInt::from(t) || gp != BigInt::from(p) {
                return Err(mismatch(format!("({n}, {m}): got ({gt}, {gp}), expected ({t}, {p})")));
            }
            rows += 1;
        }
        Ok(format!(
            "{rows} rows; P(n,m) = sum_k (-1)^k C(m, m-k) T(n, m-k), with T(n, m-k) in place of the printed T(n, k)"
        ))
    })());
    r.record(format!("counting: rooted counts equal (n/m) T(n,m) (n <= {})", b.rooted), (|| {
        for n in 2..=b.rooted {
            for m in 2..=b.rooted {
                let t = count_closed_form(n, m)? * BigInt::from(n);
                if (&t % BigInt::from(m)) != BigInt::zero() {
                    return Err(mismatch(format!("n T(n,m) not divisible by m at ({n}, {m})")));
                }
                let want = t / BigInt::from(m);
                for i in 1..=m {
                    let got = rooted_count(i, n, m)?;
                    if got != want {
                        return Err(mismatch(format!("M({i},{n},{m}) = {got}, expected {want}")));
                    }
                }
            }
        }
        Ok(format!("2 <= n, m <= {}", b.rooted))
    })());
    r.record(format!("counting: exponential generating function relation (order {})", b.egf), (|| {
        for m in 2..=4 {
            egf_check(m, b.egf)?;
        }
        Ok("T_m = sum_{k=1}^{m-1} exp(k M) - (m - 1) for m = 2, 3, 4".into())
    })());
}

pub(super) fn bijections(r: &mut VerifyReport, opts: &VerifyOptions) {
    let b = bounds(opts);
    r.record("bijections: worked examples", (|| {
        let pi = Permutation::from_symbols("8594673201")?;
        let d = decompose(&pi);
        if d.blocks != vec![vec![9, 6, 10], vec![5, 7, 8], vec![4], vec![3]] || d.right != vec![2, 11] {
            return Err(mismatch(format!("decomposition {d:?}")));
        }
        let t = perm_to_tree(&pi);
        if t.maxima().len() != 6 || tree_weight(&t) != 0 {
            return Err(mismatch("example tree should have six maxima and weight 0"));
        }
        let sigma = crate::bijections::permutation_from_cycle_notation("(237)(418)(69)(5)", None)?;
        let after = cycle_insertion(&sigma, InsertionSlot::After(2))?;
        let own = cycle_insertion(&sigma, InsertionSlot::OwnCycle)?;
        if after.to_symbols().as_deref() != Some("6941850372") || own.to_symbols().as_deref() != Some("6941823750") {
            return Err(mismatch(format!("cycle insertion gave {after} and {own}")));
        }
        Ok("decomposition, six maxima, cycle insertion 6941850372 / 6941823750".into())
    })());
    r.record(format!("bijections: permutations and weight-zero maxmin trees (n <= {})", b.perm_round_trip), (|| {
        for n in 1..=b.perm_round_trip {
            let mut image = BTreeSet::new();
            let mut by_maxima = vec![0usize; n + 1];
            for pi in permutations(n) {
                let t = perm_to_tree(&pi);
                if tree_to_perm(&t)? != pi {
                    return Err(mismatch(format!("round trip fails at {pi}")));
                }
                if t.maxima().len() != descents(&pi) + 1 {
                    return Err(mismatch(format!("{pi}: maxima != descents + 1")));
                }
                by_maxima[t.maxima().len()] += 1;
                image.insert(t);
            }
            let zero: BTreeSet<TieredTree> = (1..=n)
                .flat_map(|k| enumerate_tiered_trees(&TierType::new(vec![n + 1 - k, k]).expect("two parts")).expect("within capacity"))
                .filter(|t| tree_weight(t) == 0)
                .collect();
            if zero != image {
                return Err(mismatch(format!("n = {n}: image is not the set of weight-zero maxmin trees")));
            }
            for k in 1..=n {
                if BigInt::from(by_maxima[k]) != eulerian(k - 1, n)? {
                    return Err(mismatch(format!("n = {n}: {k} maxima on {} trees", by_maxima[k])));
                }
            }
        }
        Ok(format!("n <= {}", b.perm_round_trip))
    })());
    r.record(format!("bijections: cycle insertion block counts (n <= {})", b.cycle_insertion), (|| {
        for n in 2..=b.cycle_insertion {
            let mut seen = BTreeSet::new();
            let mut by_blocks = vec![0usize; n];
            for sigma in permutations(n - 1) {
                let k = sigma.cycles().len();
                for slot in InsertionSlot::all(n - 1) {
                    let pi = cycle_insertion(&sigma, slot)?;
                    if decompose(&pi).block_count() != k {
                        return Err(mismatch(format!("{pi} from {sigma:?}: block count differs from {k}")));
                    }
                    by_blocks[k] += 1;
                    if !seen.insert(pi.clone()) {
                        return Err(mismatch(format!("{pi} produced twice")));
                    }
                }
            }
            for k in 1..n {
                let want = stirling1_unsigned(n - 1, k)? * BigInt::from(n);
                if BigInt::from(by_blocks[k]) != want {
                    return Err(mismatch(format!("n = {n}, k = {k}: {} permutations", by_blocks[k])));
                }
            }
        }
        Ok(format!("n <= {}", b.cycle_insertion))
    })());
    r.record(format!("bijections: CNAT counts (k <= {})", b.cnat), (|| {
        for k in 0..=b.cnat {
            let c = enumerate_cnat(k)?.len() as u64;
            if c != golden::CNAT_COUNTS[k] {
                return Err(mismatch(format!("k = {k}: {c}")));
            }
        }
        Ok(format!("{:?}", &golden::CNAT_COUNTS[..=b.cnat]))
    })());
    r.record(format!("bijections: CNATs and weight-zero fully tiered trees (k <= {})", b.cnat_round_trip), (|| {
        for k in 0..=b.cnat_round_trip {
            let all = enumerate_cnat(k)?;
            let mut image = BTreeSet::new();
            for c in &all {
                let t = cnat_to_tiered(c);
                if !t.is_fully_tiered() || tree_weight(&t) != 0 || &tiered_to_cnat(&t)? != c {
                    return Err(mismatch(format!("round trip fails at {}", c.to_json())));
                }
                image.insert(t);
            }
            if image.len() != all.len() {
                return Err(mismatch(format!("k = {k}: map is not injective")));
            }
        }
        Ok(format!("k <= {}", b.cnat_round_trip))
    })());
    r.record(format!("bijections: Bessel series coefficients (order {})", b.bessel), (|| {
        let c = bessel_check(b.bessel)?;
        Ok(c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", "))
    })());
}

pub(super) fn permweight(r: &mut VerifyReport, opts: &VerifyOptions) {
    let b = bounds(opts);
    let top = b.coefficients.max(b.wd);
    let e: Vec<Result<BivarPoly>> = (0..=top).into_par_iter().map(q_eulerian).collect();
    let e: Vec<BivarPoly> = match e.into_iter().collect::<Result<_>>() {
        Ok(e) => e,
        Err(err) => {
            r.record("permweight: E_n", Err(err));
            return;
        }
    };
    r.record("permweight: E_n matches the displayed polynomials", (|| {
        let mut shown = Vec::new();
        for &(n, rows) in golden::Q_EULERIAN.iter().filter(|g| g.0 <= top) {
            for (d, w) in rows.iter().enumerate() {
                if e[n].coeff_x(d) != poly(w) {
                    return Err(mismatch(format!("n = {n}: [x^{d}] = {}", e[n].coeff_x(d))));
                }
            }
            shown.push(n);
        }
        Ok(format!("n in {shown:?}"))
    })());
    r.record("permweight: Stanley polynomials (n = 3, 4; the second display is labelled n = 3 but has degree 6 in q)", (|| {
        for &(n, rows) in golden::STANLEY {
            let s = stanley_q_eulerian(n)?;
            for (d, w) in rows.iter().enumerate() {
                if s.coeff_x(d) != poly(w) {
                    return Err(mismatch(format!("n = {n}: [x^{d}] = {}", s.coeff_x(d))));
                }
            }
        }
        Ok("n = 3, 4".into())
    })());
    r.record(format!("permweight: E_n(x,1) is Eulerian and E_n(x,0) counts set partitions (n <= {top})"), (|| {
        for n in 1..=top {
            if e[n].eval(&BigInt::one(), &BigInt::one()) != factorial(n) {
                return Err(mismatch(format!("E_{n}(1,1) != {n}!")));
            }
            let at_one = e[n].specialize_second(&BigInt::one());
            for d in 0..n {
                if at_one.coeff(d) != eulerian(d, n)? {
                    return Err(mismatch(format!("n = {n}: [x^{d}] E_n(x,1) = {}", at_one.coeff(d))));
                }
                if e[n].coeff(d, 0) != stirling2(n, d + 1)? {
                    return Err(mismatch(format!("n = {n}: [x^{d} q^0] = {}", e[n].coeff(d, 0))));
                }
            }
        }
        Ok(format!("n <= {top}"))
    })());
    r.record(format!("permweight: coefficients of x and x^(n-2) (n <= {})", b.coefficients), (|| {
        for n in 2..=b.coefficients {
            coefficient_checks_on(n, &e[n])?;
        }
        Ok(format!("2 <= n <= {}", b.coefficients))
    })());
    r.record(format!("permweight: maximum weights and ascent endings (n <= {})", b.max_weight), (|| {
        let mut endings = 0;
        for n in 1..=b.max_weight {
            endings += max_weight_check(n)?.ascent_endings;
        }
        Ok(format!("max d(n-1-d), unique maximiser; {endings} permutations ending in an ascent"))
    })());
    r.record(format!("permweight: weight-zero permutations by descents are Stirling numbers (n <= {})", b.weight_zero_stirling), (|| {
        for n in 1..=b.weight_zero_stirling {
            let mut by_blocks = vec![0usize; n + 1];
            for pi in permutations(n) {
                if perm_weight(&pi) == 0 {
                    let blocks = descents(&pi) + 1;
                    by_blocks[blocks] += 1;
                    let p = perm_to_partition(&pi)?;
                    if partition_to_perm(&p) != pi || p.blocks().len() != blocks {
                        return Err(mismatch(format!("partition round trip fails at {pi}")));
                    }
                }
            }
            for k in 1..=n {
                if BigInt::from(by_blocks[k]) != stirling2(n, k)? {
                    return Err(mismatch(format!("n = {n}, k = {k}: {}", by_blocks[k])));
                }
            }
        }
        let example = partition_to_perm(&SetPartition::parse("25|6130|798|4")?);
        if example.to_symbols().as_deref() != Some("7892540136") {
            return Err(mismatch(format!("worked partition example gave {example}")));
        }
        Ok(format!("n <= {}", b.weight_zero_stirling))
    })());
    r.record(format!("permweight: weight is the largest tree weight over the construction (n <= {})", b.weight_oracle), (|| {
        for n in 1..=b.weight_oracle {
            let mut best: BTreeMap<Permutation, usize> = BTreeMap::new();
            for k in 1..=n {
                let p = TierType::new(vec![n + 1 - k, k])?;
                for t in enumerate_tiered_trees(&p)? {
                    let pi = underlying_permutation(&t)?;
                    let w = tree_weight(&t);
                    let slot = best.entry(pi).or_insert(0);
                    *slot = (*slot).max(w);
                }
            }
            if best.len() != factorial(n).to_string().parse::<usize>().expect("small") {
                return Err(mismatch(format!("n = {n}: {} permutations reached", best.len())));
            }
            for (pi, w) in best {
                if perm_weight(&pi) != w {
                    return Err(mismatch(format!("{pi}: recursion {} vs trees {w}", perm_weight(&pi))));
                }
            }
        }
        Ok(format!("n <= {}", b.weight_oracle))
    })());
    r.record(format!("permweight: promotion adds one to the weight (n <= {})", b.max_weight.min(7)), (|| {
        let mut count = 0;
        for n in 2..=b.max_weight.min(7) {
            for pi in permutations(n).filter(|p| descents(p) == 1) {
                let q = promotion(&pi)?;
                if descents(&q) != 1 || perm_weight(&q) != perm_weight(&pi) + 1 {
                    return Err(mismatch(format!("{pi} -> {q}")));
                }
                count += 1;
            }
        }
        Ok(format!("{count} permutations with one descent"))
    })());
    r.record(format!("permweight: W_d leading coefficients of [x^d] E_{} (empirical)", b.wd), (|| {
        let mut parts = Vec::new();
        for (i, want) in golden::W_PREFIXES.iter().enumerate() {
            let d = i + 1;
            if b.wd < d + 2 {
                continue;
            }
            let rep = wd_prefix_from(d, b.wd, &e[b.wd - 1], &e[b.wd]);
            let want: Vec<BigInt> = want.iter().map(|&c| BigInt::from(c)).collect();
            // Smaller n only shows the leading coefficients that agree with the next row.
            let len = if b.wd >= 9 { want.len() } else { rep.stable_upto.min(want.len()) };
            if rep.coefficients.len() < len || rep.coefficients[..len] != want[..len] {
                return Err(mismatch(format!("W_{d}: computed {:?}, expected {want:?}", rep.coefficients)));
            }
            let stable = rep.stable_upto.min(want.len());
            if rep.prefix()[..stable] != want[..stable] {
                return Err(mismatch(format!("W_{d}: stable prefix {:?} contradicts {want:?}", rep.prefix())));
            }
            parts.push(format!("W_{d}: {len} matched, {} agree between n = {} and n = {}", rep.stable_upto, b.wd - 1, b.wd));
        }
        Ok(parts.join("; "))
    })());
    r.record("permweight: two-coloured partition triangle", (|| {
        for (i, row) in golden::TRIANGLE.iter().enumerate() {
            let k = i + 1;
            for (j, &want) in row.iter().enumerate() {
                let got = two_colored_triangle(k + j, k)?;
                if got != BigInt::from(want) {
                    return Err(mismatch(format!("T({}, {k}) = {got}, expected {want}", k + j)));
                }
            }
        }
        Ok("rows k = 1..4, n <= 9".into())
    })());
    r.record(format!("permweight: agreement of W_d with the triangle (from E_{})", b.wd), (|| {
        let mut got = Vec::new();
        for d in 1..=4 {
            if b.wd < d + 2 {
                continue;
            }
            let rep = wd_prefix_from(d, b.wd, &e[b.wd - 1], &e[b.wd]);
            got.push(triangle_agreement(&rep)?);
        }
        if b.wd >= 9 && got != golden::W_TRIANGLE_AGREEMENT {
            return Err(mismatch(format!("agreement lengths {got:?}, expected {:?}", golden::W_TRIANGLE_AGREEMENT)));
        }
        Ok(format!("agreement lengths {got:?}"))
    })());
}
