//! Binomial coefficients, their consecutive-ratio law, and enumeration of the
//! finite and cofinite subsets of ℕ.
//!
//! All arithmetic is arbitrary precision. Operations that need a single
//! central coefficient reject odd `n` rather than rounding `n/2`.

mod binomial;
mod enumerate;

use thiserror::Error;

pub use binomial::{
    binomial, central_term, figure1_data, ratio_q, table1_entry, table1_values, verify_ratio_law,
    DLabel, Figure1, Table1Row, MAX_FIGURE1_N, TABLE1_LABELS,
};
pub use enumerate::{
    complement, complement_inv, decode_subset, dovetail_enumerate, encode_subset, extend_subsets,
    rank, unrank, CofiniteSubset, Dovetail, FiniteSubset, MAX_DOVETAIL_COUNT,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SubsetError {
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("n = {0} is odd; an even n is required")]
    OddN(u64),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("label {label} is not an integer for n = {n}")]
    NonIntegerLabel { label: String, n: u64 },
    #[error("{value} exceeds the cap of {cap}")]
    CapExceeded { value: u64, cap: u64 },
    #[error("elements {0:?} are not strictly increasing")]
    NotIncreasing(Vec<u64>),
    #[error("subset maximum {max} is not below the bound {bound}")]
    BoundTooSmall { max: u64, bound: u64 },
}
