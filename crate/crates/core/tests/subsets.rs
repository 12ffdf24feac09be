use std::collections::HashSet;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use setcount::subsets::{
    binomial, central_term, complement, complement_inv, decode_subset, dovetail_enumerate,
    encode_subset, extend_subsets, figure1_data, rank, ratio_q, table1_values, unrank,
    verify_ratio_law, FiniteSubset,
};

/// Rows `0..=n` of Pascal's triangle by repeated addition.
fn pascal(n: usize) -> Vec<Vec<BigUint>> {
    let mut rows: Vec<Vec<BigUint>> = vec![vec![BigUint::one()]];
    for i in 1..=n {
        let prev = &rows[i - 1];
        let mut row = vec![BigUint::one(); i + 1];
        for k in 1..i {
            row[k] = &prev[k - 1] + &prev[k];
        }
        rows.push(row);
    }
    rows
}

/// All `p`-subsets of `{0, …, b−1}` in colex order: compare largest elements first.
fn colex_subsets(b: u64, p: usize) -> Vec<FiniteSubset> {
    let mut all: Vec<Vec<u64>> = (0u64..1 << b)
        .filter(|m| m.count_ones() as usize == p)
        .map(|m| (0..b).filter(|i| m >> i & 1 == 1).collect())
        .collect();
    all.sort_by(|x, y| x.iter().rev().cmp(y.iter().rev()));
    all.into_iter()
        .map(|v| FiniteSubset::new(v).unwrap())
        .collect()
}

#[test]
fn binomials_match_pascal_and_sum_to_powers_of_two() {
    let tri = pascal(256);
    for (n, row) in tri.iter().enumerate() {
        let mut sum = BigUint::zero();
        for (p, expected) in row.iter().enumerate() {
            let c = binomial(n as u64, p as u64).unwrap();
            assert_eq!(&c, expected, "C({n},{p})");
            sum += c;
        }
        assert_eq!(sum, BigUint::one() << n);
    }
}

#[test]
fn ratio_law_holds_on_random_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..2000 {
        let n = rng.gen_range(1..600u64);
        let p = rng.gen_range(0..n);
        assert!(verify_ratio_law(n, p).unwrap(), "n={n} p={p}");
    }
}

#[test]
fn q_is_the_neighbour_ratio_for_even_n() {
    let tri = pascal(256);
    for n in (2..=256u64).step_by(2) {
        let mid = &tri[n as usize][n as usize / 2];
        assert_eq!(&central_term(n).unwrap(), mid);
        let mut prev: Option<BigRational> = None;
        for d in 0..n / 2 {
            let q = ratio_q(n, d).unwrap();
            let lo = &tri[n as usize][(n / 2 - d - 1) as usize];
            let hi = &tri[n as usize][(n / 2 - d) as usize];
            let expected = BigRational::new(
                num_bigint::BigInt::from(lo.clone()),
                num_bigint::BigInt::from(hi.clone()),
            );
            assert_eq!(q, expected, "n={n} d={d}");
            if let Some(p) = prev {
                assert!(q < p);
            }
            prev = Some(q);
        }
    }
}

#[test]
fn table_closed_forms_agree_at_2520() {
    let rows = table1_values(2520).unwrap();
    assert_eq!(rows.len(), 24);
    for r in &rows {
        assert!(r.matches(), "label {}", r.label);
    }
}

#[test]
fn figure1_peak_and_endpoints() {
    let fig = figure1_data(40).unwrap();
    let (p, peak) = fig.binomials.iter().max_by_key(|(_, c)| c.clone()).unwrap();
    assert_eq!((*p, peak.clone()), (20, BigUint::from(137_846_528_820u64)));
    assert_eq!(
        fig.ratios.first().unwrap().1,
        BigRational::new(20.into(), 21.into())
    );
    assert_eq!(
        fig.ratios.last().unwrap().1,
        BigRational::new(1.into(), 40.into())
    );
}

#[test]
fn rank_agrees_with_colex_order() {
    for b in 0..=10u64 {
        for p in 0..=b as usize {
            for (i, s) in colex_subsets(b, p).iter().enumerate() {
                assert_eq!(rank(s), BigUint::from(i), "{s}");
                assert_eq!(&unrank(p, &BigUint::from(i)).unwrap(), s);
            }
        }
    }
}

#[test]
fn extension_counts_are_binomial() {
    for b in 0..=20u64 {
        let mut level = vec![FiniteSubset::empty()];
        for p in 1..=6u64 {
            level = extend_subsets(&level, b).unwrap();
            assert_eq!(
                BigUint::from(level.len()),
                binomial(b, p).unwrap_or_default(),
                "b={b} p={p}"
            );
            let unique: HashSet<_> = level.iter().collect();
            assert_eq!(unique.len(), level.len());
        }
    }
}

#[test]
fn dovetail_is_injective_and_reaches_small_subsets() {
    let list = dovetail_enumerate(10_000).unwrap();
    let unique: HashSet<_> = list.iter().collect();
    assert_eq!(unique.len(), list.len());
    for m in 0u32..8 {
        let s = decode_subset(&BigUint::from(m));
        assert!(unique.contains(&s), "{s}");
    }
}

#[test]
fn dovetail_position_bound() {
    let list = dovetail_enumerate(5_000).unwrap();
    for (i, s) in list.iter().enumerate() {
        let t = s.cardinality() as u64 + u64::try_from(rank(s)).unwrap();
        assert!((i as u64) < (t + 1) * (t + 2) / 2);
    }
}

#[test]
fn encoding_round_trips_below_2_16() {
    for m in 0u32..1 << 16 {
        let m = BigUint::from(m);
        assert_eq!(encode_subset(&decode_subset(&m)), m);
    }
}

proptest! {
    #[test]
    fn unrank_inverts_rank(p in 1usize..=5, r in 0u64..=10_000) {
        let s = unrank(p, &BigUint::from(r)).unwrap();
        prop_assert_eq!(s.cardinality(), p);
        prop_assert_eq!(rank(&s), BigUint::from(r));
    }

    #[test]
    fn complement_is_an_involution(elems in prop::collection::btree_set(0u64..=64, 0..12)) {
        let s = FiniteSubset::new(elems.into_iter().collect()).unwrap();
        let c = complement(&s);
        prop_assert_eq!(complement_inv(&c), s.clone());
        for k in 0..=70 {
            prop_assert_eq!(c.contains(k), !s.contains(k));
        }
    }

    #[test]
    fn encode_decode_sets(elems in prop::collection::btree_set(0u64..300, 0..20)) {
        let s = FiniteSubset::new(elems.into_iter().collect()).unwrap();
        prop_assert_eq!(decode_subset(&encode_subset(&s)), s);
    }
}
