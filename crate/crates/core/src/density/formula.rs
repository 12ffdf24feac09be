use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use super::totient::Totients;
use super::DensityError;
use crate::rational::{ratio, round_to_step, serialize_ratio, to_ratio_string};

/// Closed-form interim counts `Φ(n)` for the number sets compared by the
/// density ratios.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum PhiFormula {
    /// `n`
    Nat,
    /// `n/2`, left unfloored for odd `n`.
    Even,
    /// `2n + 1`
    Int,
    /// `2n·((n² − n)/2 · 63/100) + 1`, with a fixed correction factor.
    RatPaper,
    /// `2n·Σ_{b=2..n} φ(b) + 1`, with the exact reduced-fraction count.
    RatExact,
    /// `n·2^(n+1)`
    Real,
    /// `n²·2^(2n+2)`
    Complex,
}

impl PhiFormula {
    pub const ALL: [PhiFormula; 7] = [
        PhiFormula::Nat,
        PhiFormula::Even,
        PhiFormula::Int,
        PhiFormula::RatPaper,
        PhiFormula::RatExact,
        PhiFormula::Real,
        PhiFormula::Complex,
    ];

    /// Command-line spelling.
    pub fn name(self) -> &'static str {
        match self {
            PhiFormula::Nat => "nat",
            PhiFormula::Even => "even",
            PhiFormula::Int => "int",
            PhiFormula::RatPaper => "rat-paper",
            PhiFormula::RatExact => "rat-exact",
            PhiFormula::Real => "real",
            PhiFormula::Complex => "complex",
        }
    }

    pub fn needs_sieve(self) -> bool {
        self == PhiFormula::RatExact
    }
}

impl fmt::Display for PhiFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PhiFormula {
    type Err = DensityError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.trim().to_ascii_lowercase().replace('_', "-");
        PhiFormula::ALL
            .into_iter()
            .find(|f| f.name() == key)
            .ok_or_else(|| DensityError::UnknownFormula(s.to_string()))
    }
}

/// Evaluates formulas, reusing one sieve for the exact rational count.
#[derive(Clone, Debug, Default)]
pub struct PhiEvaluator {
    totients: Option<Totients>,
}

impl PhiEvaluator {
    /// An evaluator able to handle every formula for `n ≤ bound`.
    pub fn with_bound(bound: u64) -> Result<Self, DensityError> {
        Ok(PhiEvaluator {
            totients: Some(Totients::sieve(bound.max(1))?),
        })
    }

    /// An evaluator without a sieve; the exact rational count is rejected.
    pub fn without_sieve() -> Self {
        PhiEvaluator { totients: None }
    }

    pub fn eval(&self, formula: PhiFormula, n: u64) -> Result<BigRational, DensityError> {
        if n == 0 {
            return Err(DensityError::Domain(
                "interim counts are defined for n >= 1".into(),
            ));
        }
        let big = |v: u64| BigRational::from_integer(BigInt::from(v));
        let pow2 = |e: u64| BigRational::from_integer(BigInt::one() << e);
        let value = match formula {
            PhiFormula::Nat => big(n),
            PhiFormula::Even => big(n) / big(2),
            PhiFormula::Int => big(2 * n + 1),
            PhiFormula::RatPaper => {
                let pairs = big(n) * big(n - 1) / big(2);
                big(2 * n) * pairs * ratio(63, 100) + BigRational::one()
            }
            PhiFormula::RatExact => {
                let count = if n < 2 {
                    0
                } else {
                    let t = self.totients.as_ref().ok_or_else(|| {
                        DensityError::Domain("exact rational count needs a sieve".into())
                    })?;
                    t.distinct_fractions(n)?
                };
                big(2 * n) * big(count) + BigRational::one()
            }
            PhiFormula::Real => big(n) * pow2(n + 1),
            PhiFormula::Complex => big(n) * big(n) * pow2(2 * n + 2),
        };
        Ok(value)
    }
}

/// `Φ(n)` for a single `n`. The exact rational count sieves up to `n`.
pub fn phi_eval(formula: PhiFormula, n: u64) -> Result<BigRational, DensityError> {
    let evaluator = if formula.needs_sieve() {
        PhiEvaluator::with_bound(n)?
    } else {
        PhiEvaluator::without_sieve()
    };
    evaluator.eval(formula, n)
}

/// `Φ_A(n) / Φ_B(n)`.
pub fn rho_finite(a: PhiFormula, b: PhiFormula, n: u64) -> Result<BigRational, DensityError> {
    let evaluator = if a.needs_sieve() || b.needs_sieve() {
        PhiEvaluator::with_bound(n)?
    } else {
        PhiEvaluator::without_sieve()
    };
    rho_with(&evaluator, a, b, n)
}

fn rho_with(
    evaluator: &PhiEvaluator,
    a: PhiFormula,
    b: PhiFormula,
    n: u64,
) -> Result<BigRational, DensityError> {
    let denom = evaluator.eval(b, n)?;
    if denom.is_zero() {
        return Err(DensityError::DivisionByZero { formula: b, n });
    }
    Ok(evaluator.eval(a, n)? / denom)
}

/// Samples below this are treated as numerically zero.
pub fn zero_floor() -> BigRational {
    ratio(1, 1_000_000)
}

/// Default tolerance for the convergence test.
pub fn default_tolerance() -> BigRational {
    ratio(1, 100)
}

/// Minimum number of schedule points.
pub const MIN_SCHEDULE_LEN: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Classification {
    Converges {
        limit: BigRational,
        tolerance: BigRational,
    },
    TendsToZero,
    Inconclusive,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::Converges { limit, .. } => {
                write!(f, "CONVERGES({})", to_ratio_string(limit))
            }
            Classification::TendsToZero => f.write_str("TENDS_TO_ZERO"),
            Classification::Inconclusive => f.write_str("INCONCLUSIVE"),
        }
    }
}

impl Serialize for Classification {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Classification", 3)?;
        match self {
            Classification::Converges { limit, tolerance } => {
                st.serialize_field("kind", "CONVERGES")?;
                st.serialize_field("limit", &to_ratio_string(limit))?;
                st.serialize_field("tolerance", &to_ratio_string(tolerance))?;
            }
            Classification::TendsToZero => {
                st.serialize_field("kind", "TENDS_TO_ZERO")?;
                st.serialize_field("limit", &Option::<String>::None)?;
                st.serialize_field("tolerance", &Option::<String>::None)?;
            }
            Classification::Inconclusive => {
                st.serialize_field("kind", "INCONCLUSIVE")?;
                st.serialize_field("limit", &Option::<String>::None)?;
                st.serialize_field("tolerance", &Option::<String>::None)?;
            }
        }
        st.end()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Sample {
    pub n: u64,
    #[serde(serialize_with = "serialize_ratio")]
    pub rho: BigRational,
}

/// Finite ratios along a schedule and the verdict drawn from them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DensityEstimate {
    pub a: PhiFormula,
    pub b: PhiFormula,
    pub samples: Vec<Sample>,
    pub classification: Classification,
    /// `Φ_A(n) ≤ Φ_B(n)` at every sampled `n`.
    pub pointwise_dominated: bool,
}

impl DensityEstimate {
    /// `n,rho_num,rho_den,rho_decimal`.
    pub fn samples_csv(&self, places: usize) -> String {
        let mut out = String::from("n,rho_num,rho_den,rho_decimal\n");
        for s in &self.samples {
            out.push_str(&format!(
                "{},{},{},{}\n",
                s.n,
                s.rho.numer(),
                s.rho.denom(),
                crate::rational::to_decimal(&s.rho, places)
            ));
        }
        out
    }
}

/// Evaluates the ratio along `schedule` and classifies with the default tolerance.
pub fn rho_limit(
    a: PhiFormula,
    b: PhiFormula,
    schedule: &[u64],
) -> Result<DensityEstimate, DensityError> {
    rho_limit_with(a, b, schedule, &default_tolerance())
}

pub fn rho_limit_with(
    a: PhiFormula,
    b: PhiFormula,
    schedule: &[u64],
    tolerance: &BigRational,
) -> Result<DensityEstimate, DensityError> {
    if schedule.len() < MIN_SCHEDULE_LEN {
        return Err(DensityError::BadSchedule(format!(
            "need at least {MIN_SCHEDULE_LEN} points, got {}",
            schedule.len()
        )));
    }
    if schedule.windows(2).any(|w| w[0] >= w[1]) {
        return Err(DensityError::BadSchedule(
            "points must be strictly increasing".into(),
        ));
    }
    if schedule[0] == 0 {
        return Err(DensityError::BadSchedule(
            "points must be at least 1".into(),
        ));
    }
    if tolerance <= &BigRational::zero() {
        return Err(DensityError::Domain("tolerance must be positive".into()));
    }
    let last = *schedule.last().expect("nonempty");
    let evaluator = if a.needs_sieve() || b.needs_sieve() {
        PhiEvaluator::with_bound(last)?
    } else {
        PhiEvaluator::without_sieve()
    };
    let mut samples = Vec::with_capacity(schedule.len());
    let mut dominated = true;
    for &n in schedule {
        let fa = evaluator.eval(a, n)?;
        let fb = evaluator.eval(b, n)?;
        if fb.is_zero() {
            return Err(DensityError::DivisionByZero { formula: b, n });
        }
        dominated &= fa <= fb;
        samples.push(Sample { n, rho: fa / fb });
    }
    let classification = classify_samples(&samples, tolerance);
    Ok(DensityEstimate {
        a,
        b,
        samples,
        classification,
        pointwise_dominated: dominated,
    })
}

fn classify_samples(samples: &[Sample], tolerance: &BigRational) -> Classification {
    let values: Vec<&BigRational> = samples.iter().map(|s| &s.rho).collect();
    let last = *values.last().expect("schedule length checked");
    if values.windows(2).all(|w| w[0] > w[1]) && last < &zero_floor() {
        return Classification::TendsToZero;
    }
    let limit = round_to_step(last, tolerance);
    let tail = &values[values.len() - 3..];
    let close = |x: &BigRational, y: &BigRational| {
        let d = x - y;
        (if d < BigRational::zero() { -d } else { d }) <= *tolerance
    };
    let settled = tail.iter().all(|x| close(x, &limit))
        && tail.iter().all(|x| tail.iter().all(|y| close(x, y)));
    if settled {
        Classification::Converges {
            limit,
            tolerance: tolerance.clone(),
        }
    } else {
        Classification::Inconclusive
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_forms() {
        assert_eq!(phi_eval(PhiFormula::Int, 10).unwrap(), ratio(21, 1));
        assert_eq!(phi_eval(PhiFormula::Real, 5).unwrap(), ratio(320, 1));
        assert_eq!(phi_eval(PhiFormula::Complex, 3).unwrap(), ratio(2304, 1));
        assert_eq!(phi_eval(PhiFormula::Even, 7).unwrap(), ratio(7, 2));
        // 2·4·(6 · 63/100) + 1
        assert_eq!(phi_eval(PhiFormula::RatPaper, 4).unwrap(), ratio(781, 25));
        // 2·9·27 + 1
        assert_eq!(phi_eval(PhiFormula::RatExact, 9).unwrap(), ratio(487, 1));
        assert_eq!(phi_eval(PhiFormula::RatExact, 1).unwrap(), ratio(1, 1));
        assert!(phi_eval(PhiFormula::Nat, 0).is_err());
    }

    #[test]
    fn finite_ratios() {
        use PhiFormula::*;
        assert_eq!(rho_finite(Even, Nat, 13).unwrap(), ratio(1, 2));
        assert_eq!(rho_finite(Nat, Int, 10).unwrap(), ratio(10, 21));
        assert_eq!(rho_finite(Nat, Real, 5).unwrap(), ratio(1, 64));
    }

    #[test]
    fn names_round_trip() {
        for f in PhiFormula::ALL {
            assert_eq!(f.name().parse::<PhiFormula>().unwrap(), f);
        }
        assert!("RAT_EXACT".parse::<PhiFormula>().is_ok());
        assert!("quaternion".parse::<PhiFormula>().is_err());
    }

    #[test]
    fn classifications() {
        use PhiFormula::*;
        let dense = [10, 100, 1000, 10_000];
        let e = rho_limit(Nat, Int, &dense).unwrap();
        assert_eq!(e.classification.to_string(), "CONVERGES(1/2)");
        assert!(e.pointwise_dominated);
        let e = rho_limit(Nat, Real, &[5, 10, 20, 40]).unwrap();
        assert_eq!(e.classification, Classification::TendsToZero);
        let e = rho_limit(Int, Nat, &dense).unwrap();
        assert_eq!(e.classification.to_string(), "CONVERGES(2/1)");
        assert!(!e.pointwise_dominated);
        let e = rho_limit(Nat, Real, &[1, 2, 3, 4]).unwrap();
        assert_eq!(e.classification, Classification::Inconclusive);
    }

    #[test]
    fn bad_schedules() {
        use PhiFormula::*;
        assert!(matches!(
            rho_limit(Nat, Int, &[1, 2, 3]),
            Err(DensityError::BadSchedule(_))
        ));
        assert!(matches!(
            rho_limit(Nat, Int, &[1, 2, 2, 3]),
            Err(DensityError::BadSchedule(_))
        ));
        assert!(matches!(
            rho_limit(Nat, Int, &[0, 2, 3, 4]),
            Err(DensityError::BadSchedule(_))
        ));
    }

    #[test]
    fn samples_csv_format() {
        let e = rho_limit(PhiFormula::Even, PhiFormula::Nat, &[1, 2, 3, 4]).unwrap();
        assert!(e
            .samples_csv(6)
            .starts_with("n,rho_num,rho_den,rho_decimal\n1,1,2,0.500000\n"));
    }
}
