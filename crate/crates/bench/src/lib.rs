//! Fixed workloads shared by the benchmarks, kept here so the numbers they
//! measure are also covered by `cargo test`.

use num_bigint::BigUint;
use setcount::density::Totients;
use setcount::diagonal::{membership_scan, ArraySpec, Family};
use setcount::subsets::{dovetail_enumerate, figure1_data, rank, unrank};

/// Full membership scan of the lower-triangular family.
pub fn scan_lower_triangular(depth: usize) -> usize {
    let spec = ArraySpec::Family(Family::LowerTriangular);
    let report = membership_scan(&spec, None, depth, depth).expect("valid scan");
    report.first_difference.len()
}

/// Unranks then reranks `count` subsets of cardinality `p`.
pub fn rank_round_trip(p: usize, count: u64) -> u64 {
    (0..count)
        .filter(|&r| rank(&unrank(p, &BigUint::from(r)).expect("p >= 1")) == BigUint::from(r))
        .count() as u64
}

pub fn dovetail(count: usize) -> usize {
    dovetail_enumerate(count).expect("within cap").len()
}

pub fn figure1_peak(n: u64) -> BigUint {
    let fig = figure1_data(n).expect("even n within cap");
    fig.binomials
        .into_iter()
        .map(|(_, c)| c)
        .max()
        .expect("nonempty")
}

pub fn totient_sum(n: u64) -> u64 {
    Totients::sieve(n).expect("within cap").sum_to(n)
}
