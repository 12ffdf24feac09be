//! Finite string universes, rule-generated infinite arrays and the
//! antidiagonal construction.
//!
//! Infinite strings are restricted to eventually periodic ones, which are
//! stored and compared exactly (see [`EventuallyPeriodic`]). Scans over the
//! rule families report finite facts only: where each listed string first
//! disagrees with a candidate, and whether the candidate occurs in the scanned
//! prefix of the listing.

mod family;
mod word;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;
use thiserror::Error;

pub use family::{ArraySpec, ExplicitArray, Family, FamilyKind};
pub use word::{Alphabet, DigitString, EventuallyPeriodic, FlipPolicy, Word};

/// Longest binary universe [`enumerate_universe`] will produce.
pub const MAX_BINARY_UNIVERSE_LEN: u32 = 24;
/// Longest decimal universe [`enumerate_universe`] will produce.
pub const MAX_DECIMAL_UNIVERSE_LEN: u32 = 7;
/// Deepest [`membership_scan`] allowed.
pub const MAX_SCAN_DEPTH: usize = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagonalError {
    #[error("radix {0} is not supported (use 2 or 10)")]
    BadRadix(u32),
    #[error("digit {digit} is out of range for radix {radix}")]
    DigitOutOfRange { digit: u8, radix: u8 },
    #[error("period must be nonempty")]
    EmptyPeriod,
    #[error("universe length {len} exceeds the cap of {cap} for radix {radix}")]
    CapExceeded { len: u32, cap: u32, radix: u8 },
    #[error("scan depth {0} exceeds the cap of {MAX_SCAN_DEPTH}")]
    DepthCapExceeded(usize),
    #[error("row {row} has length {len}, needs at least {needed}")]
    RowTooShort {
        row: usize,
        len: usize,
        needed: usize,
    },
    #[error("flip policy expects radix {policy}, row has radix {row}")]
    PolicyRadixMismatch { policy: u8, row: u8 },
    #[error("expected radix {expected}, found radix {found}")]
    RadixMismatch { expected: u8, found: u8 },
    #[error("operation needs a rule family, not an explicit array")]
    NotAFamily,
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("array has no rows")]
    EmptyArray,
    #[error("row {row} has length {len}, expected {width}")]
    RaggedRows {
        row: usize,
        len: usize,
        width: usize,
    },
    #[error("decimal antidiagonal digits must lie in 1..=9")]
    ZeroAntidiagonalDigit,
    #[error("candidate must be {0}")]
    CandidateShape(&'static str),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
}

/// All `radix^len` words of length `len` in lexicographic order.
#[derive(Clone, Debug)]
pub struct Universe {
    alphabet: Alphabet,
    len: u32,
    next: u64,
    end: u64,
}

impl Iterator for Universe {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        if self.next == self.end {
            return None;
        }
        let radix = u64::from(self.alphabet.radix());
        let mut digits = vec![0u8; self.len as usize];
        let mut k = self.next;
        for slot in digits.iter_mut().rev() {
            *slot = (k % radix) as u8;
            k /= radix;
        }
        self.next += 1;
        Some(Word::new(self.alphabet, digits).expect("digits below radix"))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = (self.end - self.next) as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Universe {}

pub fn enumerate_universe(len: u32, alphabet: Alphabet) -> Result<Universe, DiagonalError> {
    let cap = match alphabet {
        Alphabet::Binary => MAX_BINARY_UNIVERSE_LEN,
        Alphabet::Decimal => MAX_DECIMAL_UNIVERSE_LEN,
    };
    if len == 0 {
        return Err(DiagonalError::InvalidArgument(
            "universe length must be at least 1".into(),
        ));
    }
    if len > cap {
        return Err(DiagonalError::CapExceeded {
            len,
            cap,
            radix: alphabet.radix(),
        });
    }
    Ok(Universe {
        alphabet,
        len,
        next: 0,
        end: u64::from(alphabet.radix()).pow(len),
    })
}

/// Flips the diagonal of the first `rows.len()` rows.
pub fn antidiagonal_finite(rows: &[Word], flip: FlipPolicy) -> Result<Word, DiagonalError> {
    if rows.is_empty() {
        return Err(DiagonalError::EmptyArray);
    }
    let needed = rows.len();
    let digits = rows
        .iter()
        .enumerate()
        .map(|(i, row)| {
            if row.alphabet() != flip.alphabet() {
                return Err(DiagonalError::PolicyRadixMismatch {
                    policy: flip.alphabet().radix(),
                    row: row.alphabet().radix(),
                });
            }
            if row.len() < needed {
                return Err(DiagonalError::RowTooShort {
                    row: i + 1,
                    len: row.len(),
                    needed,
                });
            }
            Ok(flip.flip(row.digits()[i]))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Word::new(flip.alphabet(), digits)
}

/// Diagonal cover of the length-`n` binary universe: `n / 2ⁿ`, exactly.
pub fn diagonal_cover(n: u32) -> BigRational {
    cover_for(n as usize, Alphabet::Binary)
}

/// `len / radix^len`.
fn cover_for(len: usize, alphabet: Alphabet) -> BigRational {
    let total = num_traits::pow(BigInt::from(alphabet.radix()), len);
    BigRational::new(BigInt::from(len), total)
}

/// Outcome of scanning a listing for a candidate string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiagonalReport {
    pub antidiagonal: DigitString,
    /// Rows whose diagonal digit the antidiagonal uses, over the rows of the
    /// universe they are drawn from: `N / rows` for an explicit array and
    /// `K / radixᴷ` for a family scanned to depth `K`.
    #[serde(serialize_with = "crate::rational::serialize_ratio")]
    pub cover: BigRational,
    pub scan_depth: usize,
    pub found_at: Option<usize>,
    /// Row index → first 1-based position where row and candidate disagree.
    /// Rows past `found_at` are not scanned.
    pub first_difference: BTreeMap<usize, usize>,
}

/// Scans rows `1..=depth` of `spec` for `candidate`.
///
/// For rule families a row matches when it agrees with the candidate on the
/// first `prefix_len` digits and the two are equal as eventually periodic
/// strings; recorded differences are exact even when they lie past
/// `prefix_len`. Explicit rows are finite words and match on full equality,
/// so `prefix_len` only has to satisfy the `prefix_len ≥ depth` precondition.
///
/// `candidate` defaults to the array's own antidiagonal when `None`.
pub fn membership_scan(
    spec: &ArraySpec,
    candidate: Option<&DigitString>,
    depth: usize,
    prefix_len: usize,
) -> Result<DiagonalReport, DiagonalError> {
    if depth == 0 {
        return Err(DiagonalError::InvalidArgument(
            "scan depth must be at least 1".into(),
        ));
    }
    if depth > MAX_SCAN_DEPTH {
        return Err(DiagonalError::DepthCapExceeded(depth));
    }
    if prefix_len < depth {
        return Err(DiagonalError::InvalidArgument(format!(
            "prefix length {prefix_len} is shorter than the depth {depth}"
        )));
    }
    if let Some(c) = candidate {
        if c.alphabet() != spec.alphabet() {
            return Err(DiagonalError::RadixMismatch {
                expected: spec.alphabet().radix(),
                found: c.alphabet().radix(),
            });
        }
    }
    match spec {
        ArraySpec::Explicit(array) => scan_explicit(array, candidate, depth),
        ArraySpec::Family(family) => scan_family(family, candidate, depth, prefix_len),
    }
}

fn scan_explicit(
    array: &ExplicitArray,
    candidate: Option<&DigitString>,
    depth: usize,
) -> Result<DiagonalReport, DiagonalError> {
    let rows = array.rows();
    let diag_len = rows.len().min(array.width());
    let antidiagonal = antidiagonal_finite(
        &rows[..diag_len],
        FlipPolicy::for_alphabet(array.alphabet()),
    )?;
    let target = match candidate {
        None => antidiagonal.clone(),
        Some(DigitString::Finite(w)) => w.clone(),
        Some(DigitString::Periodic(_)) => {
            return Err(DiagonalError::CandidateShape(
                "a finite word for an explicit array",
            ))
        }
    };
    let mut first_difference = BTreeMap::new();
    let mut found_at = None;
    for (i, row) in rows.iter().take(depth).enumerate() {
        let n = i + 1;
        let common = row.len().min(target.len());
        let mismatch = (0..common).find(|&j| row.digits()[j] != target.digits()[j]);
        match mismatch {
            Some(j) => {
                first_difference.insert(n, j + 1);
            }
            None if row.len() == target.len() => {
                found_at = Some(n);
                break;
            }
            None => {
                first_difference.insert(n, common + 1);
            }
        }
    }
    Ok(DiagonalReport {
        antidiagonal: antidiagonal.into(),
        cover: BigRational::new(BigInt::from(diag_len), BigInt::from(rows.len())),
        scan_depth: depth.min(rows.len()),
        found_at,
        first_difference,
    })
}

fn scan_family(
    family: &Family,
    candidate: Option<&DigitString>,
    depth: usize,
    prefix_len: usize,
) -> Result<DiagonalReport, DiagonalError> {
    let antidiagonal = family.antidiagonal();
    let target = match candidate {
        None => antidiagonal.clone(),
        Some(DigitString::Periodic(p)) => p.clone(),
        Some(DigitString::Finite(_)) => {
            return Err(DiagonalError::CandidateShape(
                "an eventually periodic string for a rule family",
            ))
        }
    };
    let mut first_difference = BTreeMap::new();
    let mut found_at = None;
    for n in 1..=depth {
        let mismatch = (1..=prefix_len).find(|&i| family.digit(n, i) != target.digit_at(i));
        match mismatch {
            Some(i) => {
                first_difference.insert(n, i);
            }
            None => match family.row(n).first_difference(&target) {
                None => {
                    found_at = Some(n);
                    break;
                }
                Some(i) => {
                    first_difference.insert(n, i);
                }
            },
        }
    }
    Ok(DiagonalReport {
        antidiagonal: antidiagonal.into(),
        cover: cover_for(depth, family.alphabet()),
        scan_depth: depth,
        found_at,
        first_difference,
    })
}

/// CSV with one line per listed string: `row,digits`.
pub fn array_csv(
    spec: &ArraySpec,
    depth: usize,
    prefix_len: usize,
) -> Result<String, DiagonalError> {
    let mut out = csv::Writer::from_writer(Vec::new());
    let write_err = |e: csv::Error| DiagonalError::Parse(e.to_string());
    out.write_record(["row", "digits"]).map_err(write_err)?;
    let depth = match spec {
        ArraySpec::Explicit(a) => depth.min(a.rows().len()),
        ArraySpec::Family(_) => depth,
    };
    let prefix_len = match spec {
        ArraySpec::Explicit(a) => prefix_len.min(a.width()),
        ArraySpec::Family(_) => prefix_len,
    };
    for n in 1..=depth {
        let row = spec.row(n, prefix_len)?;
        out.write_record([n.to_string(), row.to_string()])
            .map_err(write_err)?;
    }
    let bytes = out
        .into_inner()
        .map_err(|e| DiagonalError::Parse(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is ascii"))
}
