use num_bigint::BigInt;
use num_rational::BigRational;

use super::DensityError;

/// Largest sieve bound accepted by [`Totients::sieve`].
pub const MAX_SIEVE: u64 = 10_000_000;

/// Euler's φ for `1..=n`, with running sums.
#[derive(Clone, Debug)]
pub struct Totients {
    phi: Vec<u32>,
    // cumulative[k] = φ(1) + … + φ(k); cumulative[0] = 0.
    cumulative: Vec<u64>,
}

impl Totients {
    pub fn sieve(n: u64) -> Result<Self, DensityError> {
        if n == 0 {
            return Err(DensityError::Domain(
                "sieve bound must be at least 1".into(),
            ));
        }
        if n > MAX_SIEVE {
            return Err(DensityError::CapExceeded {
                value: n,
                cap: MAX_SIEVE,
            });
        }
        let n = n as usize;
        let mut phi: Vec<u32> = (0..=n as u32).collect();
        for p in 2..=n {
            if phi[p] == p as u32 {
                for m in (p..=n).step_by(p) {
                    phi[m] -= phi[m] / p as u32;
                }
            }
        }
        let mut cumulative = Vec::with_capacity(n + 1);
        let mut acc = 0u64;
        cumulative.push(0);
        for &v in &phi[1..] {
            acc += u64::from(v);
            cumulative.push(acc);
        }
        Ok(Totients { phi, cumulative })
    }

    pub fn bound(&self) -> u64 {
        (self.phi.len() - 1) as u64
    }

    /// φ(k) for `1 ≤ k ≤ bound`.
    pub fn phi(&self, k: u64) -> u32 {
        assert!(
            k >= 1 && k <= self.bound(),
            "φ({k}) outside sieve bound {}",
            self.bound()
        );
        self.phi[k as usize]
    }

    /// φ(1) + … + φ(k).
    pub fn sum_to(&self, k: u64) -> u64 {
        assert!(
            k <= self.bound(),
            "sum to {k} outside sieve bound {}",
            self.bound()
        );
        self.cumulative[k as usize]
    }

    /// φ(1..=bound) as a slice.
    pub fn values(&self) -> &[u32] {
        &self.phi[1..]
    }

    /// Reduced fractions `a/b` with `1 ≤ a < b ≤ n`, i.e. `Σ_{b=2..n} φ(b)`.
    pub fn distinct_fractions(&self, n: u64) -> Result<u64, DensityError> {
        if n < 2 {
            return Err(DensityError::Domain(format!(
                "fraction count needs n >= 2, got {n}"
            )));
        }
        self.check_bound(n)?;
        Ok(self.sum_to(n) - 1)
    }

    /// The share of pairs `a < b ≤ n` that survive reduction to lowest terms.
    pub fn correction(&self, n: u64) -> Result<BigRational, DensityError> {
        let count = self.distinct_fractions(n)?;
        let pairs = n * (n - 1) / 2;
        Ok(BigRational::new(BigInt::from(count), BigInt::from(pairs)))
    }

    fn check_bound(&self, n: u64) -> Result<(), DensityError> {
        if n > self.bound() {
            return Err(DensityError::CapExceeded {
                value: n,
                cap: self.bound(),
            });
        }
        Ok(())
    }
}

/// φ(1..=n), shorthand for [`Totients::sieve`].
pub fn totient_sieve(n: u64) -> Result<Totients, DensityError> {
    Totients::sieve(n)
}

/// `Σ_{b=2..n} φ(b)`.
pub fn distinct_fraction_count(n: u64) -> Result<u64, DensityError> {
    if n < 2 {
        return Err(DensityError::Domain(format!(
            "fraction count needs n >= 2, got {n}"
        )));
    }
    Totients::sieve(n)?.distinct_fractions(n)
}

/// `distinct_fraction_count(n) / ((n² − n)/2)`.
pub fn correction_factor(n: u64) -> Result<BigRational, DensityError> {
    if n < 2 {
        return Err(DensityError::Domain(format!(
            "correction factor needs n >= 2, got {n}"
        )));
    }
    Totients::sieve(n)?.correction(n)
}
