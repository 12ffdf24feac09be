use num_integer::Integer;
use num_rational::BigRational;
use serde::Serialize;

use super::totient::{Totients, MAX_SIEVE};
use super::DensityError;
use crate::rational::to_decimal;

/// Largest side accepted by [`grid_6_4`].
pub const MAX_GRID_N: u64 = 100;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GridCell {
    pub a: u64,
    pub b: u64,
    pub in_unit: bool,
    pub lowest_terms: bool,
}

impl GridCell {
    /// A proper fraction in lowest terms: `a < b` and `gcd(a, b) = 1`.
    pub fn is_bold(&self) -> bool {
        self.a < self.b && self.lowest_terms
    }
}

/// The table of fractions `a/b` for `1 ≤ a, b ≤ n`, row-major by `a`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FractionGrid {
    pub n: u64,
    pub cells: Vec<GridCell>,
}

impl FractionGrid {
    pub fn cell(&self, a: u64, b: u64) -> Option<&GridCell> {
        if a == 0 || b == 0 || a > self.n || b > self.n {
            return None;
        }
        self.cells.get(((a - 1) * self.n + (b - 1)) as usize)
    }

    pub fn bold_count(&self) -> usize {
        self.cells.iter().filter(|c| c.is_bold()).count()
    }

    /// `a,b,in_unit,lowest_terms`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("a,b,in_unit,lowest_terms\n");
        for c in &self.cells {
            out.push_str(&format!(
                "{},{},{},{}\n",
                c.a, c.b, c.in_unit, c.lowest_terms
            ));
        }
        out
    }
}

pub fn grid_6_4(n: u64) -> Result<FractionGrid, DensityError> {
    if n < 2 {
        return Err(DensityError::Domain(format!("grid needs n >= 2, got {n}")));
    }
    if n > MAX_GRID_N {
        return Err(DensityError::CapExceeded {
            value: n,
            cap: MAX_GRID_N,
        });
    }
    let cells = (1..=n)
        .flat_map(|a| {
            (1..=n).map(move |b| GridCell {
                a,
                b,
                in_unit: a <= b,
                lowest_terms: a.gcd(&b) == 1,
            })
        })
        .collect();
    Ok(FractionGrid { n, cells })
}

/// `2, 3, …, 10` followed by `20, 50, 100, 200, 500, …` up to `max`.
///
/// A plain geometric grid is not suitable for showing the downward trend of
/// the correction factor: it wobbles between neighbouring `n`.
pub fn figure2_schedule(max: u64) -> Vec<u64> {
    let mut out: Vec<u64> = (2..=max.min(10)).collect();
    let mut decade = 10u64;
    'outer: loop {
        for m in [2, 5, 10] {
            let Some(v) = decade.checked_mul(m) else {
                break 'outer;
            };
            if v > max {
                break 'outer;
            }
            out.push(v);
        }
        decade *= 10;
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Figure2Point {
    pub n: u64,
    pub f: BigRational,
}

/// The correction factor at every point of `schedule`, from one sieve.
pub fn figure2_data(schedule: &[u64]) -> Result<Vec<Figure2Point>, DensityError> {
    let Some(&max) = schedule.iter().max() else {
        return Ok(Vec::new());
    };
    if max > MAX_SIEVE {
        return Err(DensityError::CapExceeded {
            value: max,
            cap: MAX_SIEVE,
        });
    }
    let totients = Totients::sieve(max.max(2))?;
    schedule
        .iter()
        .map(|&n| {
            Ok(Figure2Point {
                n,
                f: totients.correction(n)?,
            })
        })
        .collect()
}

/// `n,f_num,f_den,f_decimal`.
pub fn figure2_csv(points: &[Figure2Point], places: usize) -> String {
    let mut out = String::from("n,f_num,f_den,f_decimal\n");
    for p in points {
        out.push_str(&format!(
            "{},{},{},{}\n",
            p.n,
            p.f.numer(),
            p.f.denom(),
            to_decimal(&p.f, places)
        ));
    }
    out
}
