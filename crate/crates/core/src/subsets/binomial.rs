use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use super::SubsetError;
use crate::rational::{serialize_ratio, to_ratio_string};

/// Largest `n` accepted by [`figure1_data`].
pub const MAX_FIGURE1_N: u64 = 1 << 10;

/// `C(n, p)`, exactly.
pub fn binomial(n: u64, p: u64) -> Result<BigUint, SubsetError> {
    if p > n {
        return Err(SubsetError::OutOfRange(format!("p = {p} exceeds n = {n}")));
    }
    let k = p.min(n - p);
    let mut acc = BigUint::one();
    // Each partial product C(n-k+i, i) is an integer, so the division is exact.
    for i in 1..=k {
        acc *= n - k + i;
        acc /= i;
    }
    Ok(acc)
}

/// Checks `C(n, p+1)·(p+1) = C(n, p)·(n−p)` exactly.
pub fn verify_ratio_law(n: u64, p: u64) -> Result<bool, SubsetError> {
    if p >= n {
        return Err(SubsetError::OutOfRange(format!(
            "need p < n, got p = {p}, n = {n}"
        )));
    }
    Ok(binomial(n, p + 1)? * (p + 1) == binomial(n, p)? * (n - p))
}

fn check_even(n: u64) -> Result<(), SubsetError> {
    if n % 2 == 1 {
        Err(SubsetError::OddN(n))
    } else {
        Ok(())
    }
}

/// Ratio between consecutive coefficients past the centre:
/// `C(n, n/2+d+1) = C(n, n/2+d) · q` with `q = (n − 2d) / (n + 2(d+1))`.
pub fn ratio_q(n: u64, d: u64) -> Result<BigRational, SubsetError> {
    check_even(n)?;
    if n == 0 || d > n / 2 - 1 {
        return Err(SubsetError::Domain(format!(
            "d = {d} outside 0..=n/2-1 for n = {n}"
        )));
    }
    Ok(BigRational::new(
        BigInt::from(n - 2 * d),
        BigInt::from(n + 2 * (d + 1)),
    ))
}

/// `C(n, n/2)`, the largest coefficient of row `n`.
pub fn central_term(n: u64) -> Result<BigUint, SubsetError> {
    check_even(n)?;
    binomial(n, n / 2)
}

/// A row label of the q-versus-d table: how `d` depends on `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DLabel {
    /// `d = k`.
    Fixed(u64),
    /// `d = n / m`.
    Fraction(u64),
    /// `d = n/2 − k`.
    HalfMinus(u64),
}

/// The 24 labels, column by column.
pub const TABLE1_LABELS: [DLabel; 24] = [
    DLabel::Fixed(0),
    DLabel::Fixed(1),
    DLabel::Fixed(2),
    DLabel::Fixed(3),
    DLabel::Fixed(4),
    DLabel::Fixed(5),
    DLabel::Fixed(6),
    DLabel::Fixed(7),
    DLabel::Fraction(10),
    DLabel::Fraction(9),
    DLabel::Fraction(8),
    DLabel::Fraction(7),
    DLabel::Fraction(6),
    DLabel::Fraction(5),
    DLabel::Fraction(4),
    DLabel::Fraction(3),
    DLabel::HalfMinus(8),
    DLabel::HalfMinus(7),
    DLabel::HalfMinus(6),
    DLabel::HalfMinus(5),
    DLabel::HalfMinus(4),
    DLabel::HalfMinus(3),
    DLabel::HalfMinus(2),
    DLabel::HalfMinus(1),
];

/// `d = n/m` rows are tabulated as `a / (b + c/n)`.
fn fraction_form(m: u64) -> Option<(i64, i64, i64)> {
    Some(match m {
        10 => (2, 3, 5),
        9 => (7, 11, 18),
        8 => (3, 5, 8),
        7 => (5, 9, 14),
        6 => (2, 4, 6),
        5 => (3, 7, 10),
        4 => (1, 3, 4),
        3 => (1, 5, 6),
        _ => return None,
    })
}

impl DLabel {
    /// The integer `d` this label denotes for `n`.
    pub fn resolve(self, n: u64) -> Result<u64, SubsetError> {
        check_even(n)?;
        let d = match self {
            DLabel::Fixed(k) => k,
            DLabel::Fraction(m) => {
                if !n.is_multiple_of(m) {
                    return Err(SubsetError::NonIntegerLabel {
                        label: self.to_string(),
                        n,
                    });
                }
                n / m
            }
            DLabel::HalfMinus(k) => (n / 2).checked_sub(k).ok_or_else(|| {
                SubsetError::Domain(format!("label {self} is negative for n = {n}"))
            })?,
        };
        if n == 0 || d > n / 2 - 1 {
            return Err(SubsetError::Domain(format!(
                "label {self} gives d = {d} for n = {n}"
            )));
        }
        Ok(d)
    }

    /// The tabulated closed form of q, evaluated as written.
    pub fn closed_form(self, n: u64) -> Result<BigRational, SubsetError> {
        let n_big = BigRational::from_integer(BigInt::from(n));
        let int = |v: i64| BigRational::from_integer(BigInt::from(v));
        Ok(match self {
            DLabel::Fixed(k) => {
                let k = k as i64;
                let two = int(2);
                (int(1) - &two / &n_big * int(k)) / (int(1) + &two / &n_big * int(k + 1))
            }
            DLabel::Fraction(m) => {
                let (a, b, c) = fraction_form(m).ok_or_else(|| {
                    SubsetError::Domain(format!("no tabulated form for d = n/{m}"))
                })?;
                int(a) / (int(b) + int(c) / &n_big)
            }
            DLabel::HalfMinus(k) => {
                let k = k as i64;
                int(k) / (n_big - int(k - 1))
            }
        })
    }
}

impl fmt::Display for DLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DLabel::Fixed(k) => write!(f, "{k}"),
            DLabel::Fraction(m) => write!(f, "n/{m}"),
            DLabel::HalfMinus(k) => write!(f, "n/2 - {k}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Table1Row {
    #[serde(serialize_with = "serialize_label")]
    pub label: DLabel,
    pub d: u64,
    #[serde(serialize_with = "serialize_ratio")]
    pub closed_form: BigRational,
    #[serde(serialize_with = "serialize_ratio")]
    pub q: BigRational,
}

fn serialize_label<S: serde::Serializer>(l: &DLabel, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&l.to_string())
}

impl Table1Row {
    pub fn matches(&self) -> bool {
        self.closed_form == self.q
    }
}

pub fn table1_entry(n: u64, label: DLabel) -> Result<Table1Row, SubsetError> {
    let d = label.resolve(n)?;
    Ok(Table1Row {
        label,
        d,
        closed_form: label.closed_form(n)?,
        q: ratio_q(n, d)?,
    })
}

/// Every table row for `n`; fails on the first label that is not an integer.
pub fn table1_values(n: u64) -> Result<Vec<Table1Row>, SubsetError> {
    if n < 20 {
        return Err(SubsetError::Domain(format!("table needs n >= 20, got {n}")));
    }
    TABLE1_LABELS.iter().map(|&l| table1_entry(n, l)).collect()
}

/// The two series of the coefficient plot: `C(n, p)` for `p = 0..=n`, and
/// `q` for `d = 0..=n/2-1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Figure1 {
    pub n: u64,
    pub binomials: Vec<(u64, BigUint)>,
    pub ratios: Vec<(u64, BigRational)>,
}

pub fn figure1_data(n: u64) -> Result<Figure1, SubsetError> {
    check_even(n)?;
    if n == 0 {
        return Err(SubsetError::Domain("n must be at least 2".into()));
    }
    if n > MAX_FIGURE1_N {
        return Err(SubsetError::CapExceeded {
            value: n,
            cap: MAX_FIGURE1_N,
        });
    }
    // Walk the row with the ratio law instead of recomputing each coefficient.
    let mut binomials = Vec::with_capacity(n as usize + 1);
    let mut c = BigUint::one();
    for p in 0..=n {
        binomials.push((p, c.clone()));
        c = c * (n - p) / (p + 1);
    }
    let ratios = (0..n / 2)
        .map(|d| Ok((d, ratio_q(n, d)?)))
        .collect::<Result<_, _>>()?;
    Ok(Figure1 {
        n,
        binomials,
        ratios,
    })
}

impl Figure1 {
    /// `p,binomial`.
    pub fn binomial_csv(&self) -> String {
        let mut out = String::from("p,binomial\n");
        for (p, c) in &self.binomials {
            out.push_str(&format!("{p},{c}\n"));
        }
        out
    }

    /// `d,q_num,q_den`.
    pub fn ratio_csv(&self) -> String {
        let mut out = String::from("d,q_num,q_den\n");
        for (d, q) in &self.ratios {
            out.push_str(&format!("{d},{},{}\n", q.numer(), q.denom()));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "binomials": self.binomials.iter()
                .map(|(p, c)| serde_json::json!({ "p": p, "binomial": c.to_string() }))
                .collect::<Vec<_>>(),
            "ratios": self.ratios.iter()
                .map(|(d, q)| serde_json::json!({ "d": d, "q": to_ratio_string(q) }))
                .collect::<Vec<_>>(),
        })
    }
}
