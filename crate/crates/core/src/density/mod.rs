//! Interim-count formulas for number sets, their finite ratios, and the
//! reduced-fraction correction factor computed from a totient sieve.
//!
//! A ratio `Φ_A(n)/Φ_B(n)` is sampled along a schedule and then classified by
//! a fixed finite rule: strictly decreasing below `10⁻⁶` means it tends to
//! zero; three settled tail values mean it converges.

mod formula;
mod grid;
mod totient;

use thiserror::Error;

pub use formula::{
    default_tolerance, phi_eval, rho_finite, rho_limit, rho_limit_with, zero_floor, Classification,
    DensityEstimate, PhiEvaluator, PhiFormula, Sample, MIN_SCHEDULE_LEN,
};
pub use grid::{
    figure2_csv, figure2_data, figure2_schedule, grid_6_4, Figure2Point, FractionGrid, GridCell,
    MAX_GRID_N,
};
pub use totient::{correction_factor, distinct_fraction_count, totient_sieve, Totients, MAX_SIEVE};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DensityError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("{value} exceeds the cap of {cap}")]
    CapExceeded { value: u64, cap: u64 },
    #[error("{formula} evaluates to zero at n = {n}")]
    DivisionByZero { formula: PhiFormula, n: u64 },
    #[error("bad schedule: {0}")]
    BadSchedule(String),
    #[error("unknown formula {0:?}")]
    UnknownFormula(String),
}
