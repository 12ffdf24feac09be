use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use setcount::diagonal::{
    antidiagonal_finite, diagonal_cover, enumerate_universe, membership_scan, Alphabet, ArraySpec,
    DigitString, EventuallyPeriodic, ExplicitArray, Family, FlipPolicy, Word,
};

/// Printed 9×10 corners of the binary arrays: printed row `i`, column `j`
/// holds digit `i` of string `j`.
const LOWER_TRI: [&str; 9] = [
    "0111111111",
    "0011111111",
    "0001111111",
    "0000111111",
    "0000011111",
    "0000001111",
    "0000000111",
    "0000000011",
    "0000000001",
];
const UPPER_TRI: [&str; 9] = [
    "1000000000",
    "1100000000",
    "1110000000",
    "1111000000",
    "1111100000",
    "1111110000",
    "1111111000",
    "1111111100",
    "1111111110",
];
const ALT: [&str; 9] = [
    "0111111111",
    "0100000000",
    "0001111111",
    "0001000000",
    "0000011111",
    "0000010000",
    "0000000111",
    "0000000000",
    "0000000001",
];
const ALT_COMPLEMENT: [&str; 9] = [
    "1000000000",
    "0111111111",
    "0010000000",
    "0000111111",
    "0000100000",
    "0000001111",
    "0000001000",
    "0000000011",
    "0000000001",
];
/// Cells of the printed corners that break the construction's own pattern.
const ALT_MISPRINTS: &[(usize, usize)] = &[(8, 8)];
const ALT_COMPLEMENT_MISPRINTS: &[(usize, usize)] = &[(2, 2), (9, 9), (9, 10)];

fn check_corner(family: &Family, corner: &[&str; 9], misprints: &[(usize, usize)]) {
    for (i, line) in corner.iter().enumerate() {
        for (j, ch) in line.bytes().enumerate() {
            let (pos, n) = (i + 1, j + 1);
            let printed = ch - b'0';
            let ours = family.digit(n, pos);
            if misprints.contains(&(pos, n)) {
                assert_ne!(ours, printed, "cell ({pos},{n}) expected to be a misprint");
            } else {
                assert_eq!(ours, printed, "cell ({pos},{n}) of {:?}", family.kind());
            }
        }
    }
}

#[test]
fn printed_corners_match_the_rules() {
    check_corner(&Family::LowerTriangular, &LOWER_TRI, &[]);
    check_corner(&Family::UpperTriangular, &UPPER_TRI, &[]);
    check_corner(&Family::Alternating, &ALT, ALT_MISPRINTS);
    check_corner(
        &Family::AlternatingComplement,
        &ALT_COMPLEMENT,
        ALT_COMPLEMENT_MISPRINTS,
    );
}

#[test]
fn random_below_keeps_the_upper_triangle() {
    for seed in 0..5 {
        let f = Family::RandomBelow { seed };
        for n in 1..=30 {
            for pos in 1..=n {
                assert_eq!(f.digit(n, pos), u8::from(pos < n));
            }
        }
    }
}

#[test]
fn b4_listing_reproduces_the_antidiagonal() {
    let rows: Vec<Word> = [
        "0000", "1000", "0100", "0010", "0001", "1100", "1010", "1001", "0110", "0101", "0011",
        "1110", "1101", "1011", "0111", "1111",
    ]
    .iter()
    .map(|r| Word::parse(Alphabet::Binary, r).unwrap())
    .collect();
    let sorted: Vec<Word> = {
        let mut v = rows.clone();
        v.sort();
        v
    };
    assert_eq!(
        sorted,
        enumerate_universe(4, Alphabet::Binary)
            .unwrap()
            .collect::<Vec<_>>()
    );
    let anti = antidiagonal_finite(&rows[..4], FlipPolicy::Binary).unwrap();
    assert_eq!(anti.to_string(), "1111");
    let spec = ArraySpec::Explicit(ExplicitArray::new(Alphabet::Binary, rows).unwrap());
    let report = membership_scan(&spec, None, 16, 16).unwrap();
    assert_eq!(report.found_at, Some(16));
    assert_eq!(report.cover, diagonal_cover(4));
}

#[test]
fn cover_is_exact_and_vanishing() {
    let mut prev = diagonal_cover(1);
    for n in 1..=60u32 {
        let c = diagonal_cover(n);
        assert_eq!(
            c,
            BigRational::new(BigInt::from(n), BigInt::from(1u128 << n))
        );
        assert!(c <= prev);
        prev = c;
    }
    assert!(prev < BigRational::new(1.into(), BigInt::from(10u64).pow(15)));
}

#[test]
fn family_antidiagonals_differ_from_every_row() {
    let decimal = Family::decimal(
        EventuallyPeriodic::new(Alphabet::Decimal, vec![1, 4], vec![1, 5, 9]).unwrap(),
        Some(3),
    )
    .unwrap();
    let families = [
        Family::LowerTriangular,
        Family::UpperTriangular,
        Family::Alternating,
        Family::AlternatingComplement,
        Family::RandomBelow { seed: 11 },
        decimal,
    ];
    for f in &families {
        let anti = f.antidiagonal();
        for n in 1..=300 {
            assert_ne!(f.digit(n, n), anti.digit_at(n), "{:?} row {n}", f.kind());
            assert_eq!(
                f.row(n).first_difference(&anti),
                Some(n),
                "{:?} row {n}",
                f.kind()
            );
            if let Some(flip) = f.flip_policy() {
                assert_eq!(anti.digit_at(n), flip.flip(f.digit(n, n)));
            }
        }
    }
}

#[test]
fn random_below_antidiagonal_is_seed_independent() {
    let antis: Vec<_> = (0..10)
        .map(|s| Family::RandomBelow { seed: s }.antidiagonal())
        .collect();
    assert!(antis.windows(2).all(|w| w[0] == w[1]));
    let spec = ArraySpec::Family(Family::RandomBelow { seed: 99 });
    let report = membership_scan(&spec, None, 200, 200).unwrap();
    assert_eq!(report.found_at, None);
}

#[test]
fn upper_triangular_lists_its_limit_first() {
    let spec = ArraySpec::Family(Family::UpperTriangular);
    let ones = DigitString::parse(Alphabet::Binary, "(1)").unwrap();
    assert_eq!(
        membership_scan(&spec, Some(&ones), 10, 10)
            .unwrap()
            .found_at,
        Some(1)
    );
    let zeros = DigitString::parse(Alphabet::Binary, "(0)").unwrap();
    assert_eq!(
        membership_scan(&spec, Some(&zeros), 10, 10)
            .unwrap()
            .found_at,
        None
    );
}

fn ep_strategy(radix: u8) -> impl Strategy<Value = (Vec<u8>, Vec<u8>)> {
    (
        prop::collection::vec(0..radix, 0..6),
        prop::collection::vec(0..radix, 1..5),
    )
}

proptest! {
    #[test]
    fn canonical_form_preserves_digits((pre, per) in ep_strategy(2), reps in 1usize..4) {
        let ep = EventuallyPeriodic::new(Alphabet::Binary, pre.clone(), per.clone()).unwrap();
        let raw = |i: usize| if i < pre.len() { pre[i] } else { per[(i - pre.len()) % per.len()] };
        for i in 0..40 {
            prop_assert_eq!(ep.digit_at(i + 1), raw(i));
        }
        // Unrolling the period any number of times gives the same canonical value.
        let mut longer_pre = pre.clone();
        longer_pre.extend(per.iter().copied());
        let longer_per: Vec<u8> = per.iter().copied().cycle().take(per.len() * reps).collect();
        let other = EventuallyPeriodic::new(Alphabet::Binary, longer_pre, longer_per).unwrap();
        prop_assert_eq!(&ep, &other);
    }

    #[test]
    fn first_difference_matches_digitwise_scan(
        a in ep_strategy(3),
        b in ep_strategy(3),
    ) {
        let x = EventuallyPeriodic::new(Alphabet::Decimal, a.0, a.1).unwrap();
        let y = EventuallyPeriodic::new(Alphabet::Decimal, b.0, b.1).unwrap();
        let brute = (1..=200).find(|&i| x.digit_at(i) != y.digit_at(i));
        prop_assert_eq!(x.first_difference(&y), brute);
        prop_assert_eq!(x == y, brute.is_none());
    }

    #[test]
    fn finite_antidiagonal_escapes_its_rows(rows in prop::collection::vec(prop::collection::vec(0u8..10, 6), 1..6)) {
        let words: Vec<Word> =
            rows.iter().map(|r| Word::new(Alphabet::Decimal, r.clone()).unwrap()).collect();
        let anti = antidiagonal_finite(&words, FlipPolicy::Decimal).unwrap();
        for (i, w) in words.iter().enumerate() {
            prop_assert_ne!(anti.digits()[i], w.digits()[i]);
            prop_assert!(anti.digits()[i] != 0 && anti.digits()[i] != 9);
        }
    }

    #[test]
    fn universe_is_complete_and_sorted(len in 1u32..9) {
        let words: Vec<Word> = enumerate_universe(len, Alphabet::Binary).unwrap().collect();
        prop_assert_eq!(words.len(), 1usize << len);
        prop_assert!(words.windows(2).all(|w| w[0] < w[1]));
    }
}
