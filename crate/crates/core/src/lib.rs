//! Exact-arithmetic workbench for diagonal constructions, subset enumeration,
//! relative densities of number sets and proof-by-contradiction chains.
//!
//! Every quantity is computed exactly: big integers for counts, big rationals
//! for ratios. Floating point only appears when a value is rendered for people.
//!
//! The crate is split by subject:
//!
//! * [`diagonal`]: string universes, rule-generated infinite arrays, antidiagonals
//!   and membership scans.
//! * [`subsets`]: binomial machinery and enumeration of finite and cofinite
//!   subsets of the naturals.
//! * [`density`]: interim-cardinality formulas, their finite ratios and a
//!   totient sieve for the fraction-grid correction factor.
//! * [`chains`]: a small parser and structural analyzer for inference chains.

pub mod chains;
pub mod density;
pub mod diagonal;
pub mod rational;
pub mod subsets;

pub use chains::{
    cda_preset, classify, detect_inconceivable, entailment_closure, parse_chain, verdict, ChainAst,
    ChainError, ChainPattern, Verdict,
};
pub use density::{
    correction_factor, distinct_fraction_count, grid_6_4, phi_eval, rho_finite, rho_limit,
    totient_sieve, DensityError, DensityEstimate, FractionGrid, PhiFormula, Totients,
};
pub use diagonal::{
    antidiagonal_finite, diagonal_cover, enumerate_universe, membership_scan, Alphabet, ArraySpec,
    DiagonalError, DiagonalReport, DigitString, EventuallyPeriodic, Family, FlipPolicy, Word,
};
pub use subsets::{
    binomial, central_term, complement, complement_inv, decode_subset, dovetail_enumerate,
    encode_subset, extend_subsets, rank, ratio_q, unrank, verify_ratio_law, CofiniteSubset,
    FiniteSubset, SubsetError,
};
