use std::fmt;
use std::str::FromStr;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::DiagonalError;

/// Digit alphabet of a string universe.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Alphabet {
    Binary,
    Decimal,
}

impl Alphabet {
    pub fn from_radix(radix: u32) -> Result<Self, DiagonalError> {
        match radix {
            2 => Ok(Alphabet::Binary),
            10 => Ok(Alphabet::Decimal),
            other => Err(DiagonalError::BadRadix(other)),
        }
    }

    pub fn radix(self) -> u8 {
        match self {
            Alphabet::Binary => 2,
            Alphabet::Decimal => 10,
        }
    }

    pub(crate) fn check(self, digits: &[u8]) -> Result<(), DiagonalError> {
        match digits.iter().find(|&&d| d >= self.radix()) {
            Some(&d) => Err(DiagonalError::DigitOutOfRange {
                digit: d,
                radix: self.radix(),
            }),
            None => Ok(()),
        }
    }
}

impl Serialize for Alphabet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_u8(self.radix())
    }
}

fn parse_digits(text: &str) -> Result<Vec<u8>, DiagonalError> {
    text.chars()
        .map(|c| {
            c.to_digit(10)
                .map(|d| d as u8)
                .ok_or_else(|| DiagonalError::Parse(format!("'{c}' is not a digit")))
        })
        .collect()
}

fn digits_to_string(digits: &[u8]) -> String {
    digits.iter().map(|d| char::from(b'0' + d)).collect()
}

/// A finite digit string.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    alphabet: Alphabet,
    digits: Vec<u8>,
}

impl Word {
    pub fn new(alphabet: Alphabet, digits: Vec<u8>) -> Result<Self, DiagonalError> {
        alphabet.check(&digits)?;
        Ok(Word { alphabet, digits })
    }

    pub fn parse(alphabet: Alphabet, text: &str) -> Result<Self, DiagonalError> {
        Word::new(alphabet, parse_digits(text.trim())?)
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    /// Digit at 1-based `position`.
    pub fn digit_at(&self, position: usize) -> Option<u8> {
        position
            .checked_sub(1)
            .and_then(|i| self.digits.get(i).copied())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&digits_to_string(&self.digits))
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// An infinite digit string `preperiod · period^ω`, always held in canonical
/// form, so structural equality is equality of the infinite strings.
///
/// Canonical form means the period is primitive (not a power of a shorter
/// word) and the preperiod is as short as possible: it is empty, or its last
/// digit differs from the last digit of the period.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EventuallyPeriodic {
    alphabet: Alphabet,
    preperiod: Vec<u8>,
    period: Vec<u8>,
}

impl EventuallyPeriodic {
    pub fn new(
        alphabet: Alphabet,
        preperiod: Vec<u8>,
        period: Vec<u8>,
    ) -> Result<Self, DiagonalError> {
        if period.is_empty() {
            return Err(DiagonalError::EmptyPeriod);
        }
        alphabet.check(&preperiod)?;
        alphabet.check(&period)?;
        let (preperiod, period) = canonicalize(preperiod, period);
        Ok(EventuallyPeriodic {
            alphabet,
            preperiod,
            period,
        })
    }

    /// A purely periodic string `period^ω`.
    pub fn periodic(alphabet: Alphabet, period: Vec<u8>) -> Result<Self, DiagonalError> {
        EventuallyPeriodic::new(alphabet, Vec::new(), period)
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn preperiod(&self) -> &[u8] {
        &self.preperiod
    }

    pub fn period(&self) -> &[u8] {
        &self.period
    }

    /// Digit at 1-based `position`.
    ///
    /// # Panics
    ///
    /// Panics when `position` is zero.
    pub fn digit_at(&self, position: usize) -> u8 {
        assert!(position >= 1, "positions are 1-based");
        let i = position - 1;
        if i < self.preperiod.len() {
            self.preperiod[i]
        } else {
            self.period[(i - self.preperiod.len()) % self.period.len()]
        }
    }

    pub fn prefix(&self, len: usize) -> Vec<u8> {
        (1..=len).map(|i| self.digit_at(i)).collect()
    }

    /// First 1-based position where `self` and `other` disagree, or `None`
    /// when they are the same string.
    pub fn first_difference(&self, other: &EventuallyPeriodic) -> Option<usize> {
        if self == other {
            return None;
        }
        // Past max(preperiod) both are periodic; one joint period suffices.
        let pre = self.preperiod.len().max(other.preperiod.len());
        let joint = num_integer::lcm(self.period.len(), other.period.len());
        (1..=pre + joint).find(|&i| self.digit_at(i) != other.digit_at(i))
    }
}

/// Reduces the period to its primitive root, then folds trailing preperiod
/// digits into the period while they match.
fn canonicalize(mut preperiod: Vec<u8>, period: Vec<u8>) -> (Vec<u8>, Vec<u8>) {
    let root = primitive_root_len(&period);
    let mut period = period[..root].to_vec();
    while let Some(&last) = preperiod.last() {
        if last != *period.last().expect("period is nonempty") {
            break;
        }
        preperiod.pop();
        period.rotate_right(1);
    }
    (preperiod, period)
}

/// Length of the shortest word whose power is `w` (KMP failure function).
fn primitive_root_len(w: &[u8]) -> usize {
    let n = w.len();
    let mut fail = vec![0usize; n];
    let mut k = 0;
    for i in 1..n {
        while k > 0 && w[i] != w[k] {
            k = fail[k - 1];
        }
        if w[i] == w[k] {
            k += 1;
        }
        fail[i] = k;
    }
    let p = n - fail[n - 1];
    if n.is_multiple_of(p) {
        p
    } else {
        n
    }
}

impl fmt::Display for EventuallyPeriodic {
    /// `pre(period)`, e.g. `1(0)` for 1000...
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}({})",
            digits_to_string(&self.preperiod),
            digits_to_string(&self.period)
        )
    }
}

impl Serialize for EventuallyPeriodic {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("EventuallyPeriodic", 3)?;
        st.serialize_field("radix", &self.alphabet)?;
        st.serialize_field("preperiod", &digits_to_string(&self.preperiod))?;
        st.serialize_field("period", &digits_to_string(&self.period))?;
        st.end()
    }
}

/// Either a finite word or an eventually periodic infinite string.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum DigitString {
    Finite(Word),
    Periodic(EventuallyPeriodic),
}

impl DigitString {
    /// Parses `0110` as a finite word and `01(10)` as `01` followed by `10`
    /// repeated forever.
    pub fn parse(alphabet: Alphabet, text: &str) -> Result<Self, DiagonalError> {
        let text = text.trim();
        match text.find('(') {
            None => Word::parse(alphabet, text).map(DigitString::Finite),
            Some(open) => {
                let rest = &text[open + 1..];
                let period = rest
                    .strip_suffix(')')
                    .ok_or_else(|| DiagonalError::Parse(format!("unclosed period in '{text}'")))?;
                EventuallyPeriodic::new(
                    alphabet,
                    parse_digits(&text[..open])?,
                    parse_digits(period)?,
                )
                .map(DigitString::Periodic)
            }
        }
    }

    pub fn alphabet(&self) -> Alphabet {
        match self {
            DigitString::Finite(w) => w.alphabet(),
            DigitString::Periodic(p) => p.alphabet(),
        }
    }
}

impl From<Word> for DigitString {
    fn from(w: Word) -> Self {
        DigitString::Finite(w)
    }
}

impl From<EventuallyPeriodic> for DigitString {
    fn from(p: EventuallyPeriodic) -> Self {
        DigitString::Periodic(p)
    }
}

impl fmt::Display for DigitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DigitString::Finite(w) => w.fmt(f),
            DigitString::Periodic(p) => p.fmt(f),
        }
    }
}

impl Serialize for DigitString {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            DigitString::Finite(w) => w.serialize(s),
            DigitString::Periodic(p) => p.serialize(s),
        }
    }
}

/// How a diagonal digit is changed to build the antidiagonal.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FlipPolicy {
    /// 0 ↔ 1.
    Binary,
    /// Any digit becomes 5, except 5 which becomes 4. Never produces 0 or 9.
    Decimal,
}

impl FlipPolicy {
    pub fn for_alphabet(alphabet: Alphabet) -> Self {
        match alphabet {
            Alphabet::Binary => FlipPolicy::Binary,
            Alphabet::Decimal => FlipPolicy::Decimal,
        }
    }

    pub fn alphabet(self) -> Alphabet {
        match self {
            FlipPolicy::Binary => Alphabet::Binary,
            FlipPolicy::Decimal => Alphabet::Decimal,
        }
    }

    pub fn flip(self, digit: u8) -> u8 {
        match self {
            FlipPolicy::Binary => 1 - digit,
            FlipPolicy::Decimal => {
                if digit == 5 {
                    4
                } else {
                    5
                }
            }
        }
    }
}

impl FromStr for FlipPolicy {
    type Err = DiagonalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "binary" => Ok(FlipPolicy::Binary),
            "decimal" => Ok(FlipPolicy::Decimal),
            other => Err(DiagonalError::Parse(format!(
                "unknown flip policy '{other}'"
            ))),
        }
    }
}
