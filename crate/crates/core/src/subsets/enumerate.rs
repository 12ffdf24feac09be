use std::collections::HashSet;
use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;
use serde::Serialize;

use super::binomial::binomial;
use super::SubsetError;

/// Largest `count` accepted by [`dovetail_enumerate`].
pub const MAX_DOVETAIL_COUNT: usize = 1_000_000;

/// A finite subset of ℕ, stored as its strictly increasing elements.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct FiniteSubset(Vec<u64>);

impl FiniteSubset {
    pub fn new(elements: Vec<u64>) -> Result<Self, SubsetError> {
        if elements.windows(2).any(|w| w[0] >= w[1]) {
            return Err(SubsetError::NotIncreasing(elements));
        }
        Ok(FiniteSubset(elements))
    }

    /// Sorts and deduplicates.
    pub fn from_unsorted(mut elements: Vec<u64>) -> Self {
        elements.sort_unstable();
        elements.dedup();
        FiniteSubset(elements)
    }

    pub fn empty() -> Self {
        FiniteSubset(Vec::new())
    }

    pub fn elements(&self) -> &[u64] {
        &self.0
    }

    pub fn cardinality(&self) -> usize {
        self.0.len()
    }

    pub fn max_element(&self) -> Option<u64> {
        self.0.last().copied()
    }

    pub fn contains(&self, k: u64) -> bool {
        self.0.binary_search(&k).is_ok()
    }
}

impl fmt::Display for FiniteSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

/// Colexicographic rank: `Σᵢ C(cᵢ, i)` over the elements `c₁ < … < c_p`.
pub fn rank(s: &FiniteSubset) -> BigUint {
    s.0.iter()
        .enumerate()
        .map(|(i, &c)| choose(c, i as u64 + 1))
        .sum()
}

/// Inverse of [`rank`] among subsets of cardinality `p`.
///
/// Every rank is taken for `p ≥ 1`; the only subset with `p = 0` is `∅`, of rank 0.
pub fn unrank(p: usize, r: &BigUint) -> Result<FiniteSubset, SubsetError> {
    if p == 0 && !r.is_zero() {
        return Err(SubsetError::OutOfRange(format!(
            "rank {r} with cardinality 0"
        )));
    }
    let mut rest = r.clone();
    let mut elements = vec![0u64; p];
    for i in (1..=p as u64).rev() {
        let c = largest_with_binomial_at_most(i, &rest);
        rest -= choose(c, i);
        elements[i as usize - 1] = c;
    }
    Ok(FiniteSubset(elements))
}

/// `C(c, i)`, zero when `c < i`.
fn choose(c: u64, i: u64) -> BigUint {
    if c < i {
        BigUint::zero()
    } else {
        binomial(c, i).expect("c >= i")
    }
}

/// Largest `c` with `C(c, i) ≤ r`. `C(i−1, i) = 0`, so `c ≥ i − 1`.
fn largest_with_binomial_at_most(i: u64, r: &BigUint) -> u64 {
    let mut lo = i - 1;
    let mut step = 1u64;
    let mut hi = lo + step;
    while &choose(hi, i) <= r {
        lo = hi;
        step *= 2;
        hi = lo + step;
    }
    // Invariant: C(lo, i) ≤ r < C(hi, i).
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if &choose(mid, i) <= r {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// Extends each `p`-subset with every `i` above its maximum and below `bound`.
///
/// Output order follows input order, then `i`. Repeated inputs are ignored.
pub fn extend_subsets(
    level: &[FiniteSubset],
    bound: u64,
) -> Result<Vec<FiniteSubset>, SubsetError> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for s in level {
        if let Some(m) = s.max_element() {
            if m >= bound {
                return Err(SubsetError::BoundTooSmall { max: m, bound });
            }
        }
        if !seen.insert(s) {
            continue;
        }
        let start = s.max_element().map_or(0, |m| m + 1);
        for i in start..bound {
            let mut e = s.0.clone();
            e.push(i);
            out.push(FiniteSubset(e));
        }
    }
    Ok(out)
}

/// Stage-by-stage enumeration of every finite subset of ℕ.
///
/// Stage `t` emits `unrank(p, t − p)` for `p = 0, 1, …, t` in order, where
/// cardinality 0 contributes only rank 0 (the empty set, at stage 0). The
/// subset with cardinality `p` and rank `r` therefore appears within the
/// first `(p+r+1)(p+r+2)/2` outputs.
#[derive(Clone, Debug, Default)]
pub struct Dovetail {
    stage: u64,
    p: u64,
}

impl Dovetail {
    pub fn new() -> Self {
        Dovetail::default()
    }
}

impl Iterator for Dovetail {
    type Item = FiniteSubset;

    fn next(&mut self) -> Option<FiniteSubset> {
        if self.p > self.stage {
            self.stage += 1;
            self.p = 0;
        }
        if self.p == 0 && self.stage > 0 {
            self.p = 1;
        }
        let item = unrank(self.p as usize, &BigUint::from(self.stage - self.p))
            .expect("rank 0 at cardinality 0 only");
        self.p += 1;
        Some(item)
    }
}

pub fn dovetail_enumerate(count: usize) -> Result<Vec<FiniteSubset>, SubsetError> {
    if count > MAX_DOVETAIL_COUNT {
        return Err(SubsetError::CapExceeded {
            value: count as u64,
            cap: MAX_DOVETAIL_COUNT as u64,
        });
    }
    Ok(Dovetail::new().take(count).collect())
}

/// `Σ_{i∈S} 2ⁱ`.
pub fn encode_subset(s: &FiniteSubset) -> BigUint {
    let mut m = BigUint::zero();
    for &e in &s.0 {
        m.set_bit(e, true);
    }
    m
}

pub fn decode_subset(m: &BigUint) -> FiniteSubset {
    FiniteSubset((0..m.bits()).filter(|&i| m.bit(i)).collect())
}

/// An infinite subset of ℕ whose complement is finite.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct CofiniteSubset {
    missing: FiniteSubset,
}

impl CofiniteSubset {
    pub fn missing(&self) -> &FiniteSubset {
        &self.missing
    }

    pub fn contains(&self, k: u64) -> bool {
        !self.missing.contains(k)
    }

    /// Members in increasing order (an infinite iterator).
    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        (0u64..).filter(move |&k| self.contains(k))
    }
}

impl fmt::Display for CofiniteSubset {
    /// Lists members up to two past the largest missing element, then `...`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let shown = self.missing.max_element().map_or(3, |m| m + 3);
        f.write_str("{")?;
        for k in self.iter().take_while(|&k| k < shown) {
            write!(f, "{k}, ")?;
        }
        f.write_str("...}")
    }
}

pub fn complement(s: &FiniteSubset) -> CofiniteSubset {
    CofiniteSubset { missing: s.clone() }
}

pub fn complement_inv(c: &CofiniteSubset) -> FiniteSubset {
    c.missing.clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn set(e: &[u64]) -> FiniteSubset {
        FiniteSubset::new(e.to_vec()).unwrap()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&set(&[0, 1, 2])), BigUint::zero());
        assert_eq!(rank(&set(&[1, 3])), BigUint::from(4u32));
        assert_eq!(rank(&FiniteSubset::empty()), BigUint::zero());
        assert_eq!(unrank(3, &BigUint::one()).unwrap(), set(&[0, 1, 3]));
        assert_eq!(unrank(0, &BigUint::zero()).unwrap(), FiniteSubset::empty());
        assert!(matches!(
            unrank(0, &BigUint::one()),
            Err(SubsetError::OutOfRange(_))
        ));
    }

    #[test]
    fn unrank_large_rank() {
        let r = BigUint::from(10u32).pow(30);
        let s = unrank(4, &r).unwrap();
        assert_eq!(rank(&s), r);
    }

    #[test]
    fn rejects_unsorted() {
        assert!(matches!(
            FiniteSubset::new(vec![2, 1]),
            Err(SubsetError::NotIncreasing(_))
        ));
        assert!(FiniteSubset::new(vec![1, 1]).is_err());
        assert_eq!(FiniteSubset::from_unsorted(vec![3, 1, 3]), set(&[1, 3]));
    }

    #[test]
    fn extend_examples() {
        assert_eq!(
            extend_subsets(&[set(&[0]), set(&[1])], 3).unwrap(),
            vec![set(&[0, 1]), set(&[0, 2]), set(&[1, 2])]
        );
        assert_eq!(
            extend_subsets(&[FiniteSubset::empty()], 2).unwrap(),
            vec![set(&[0]), set(&[1])]
        );
        assert_eq!(
            extend_subsets(&[set(&[0, 1])], 4).unwrap(),
            vec![set(&[0, 1, 2]), set(&[0, 1, 3])]
        );
        assert!(matches!(
            extend_subsets(&[set(&[5])], 5),
            Err(SubsetError::BoundTooSmall { .. })
        ));
        assert_eq!(
            extend_subsets(&[set(&[0]), set(&[0])], 2).unwrap(),
            vec![set(&[0, 1])]
        );
    }

    #[test]
    fn dovetail_prefix() {
        let got = dovetail_enumerate(6).unwrap();
        assert_eq!(
            got,
            vec![
                FiniteSubset::empty(),
                set(&[0]),
                set(&[1]),
                set(&[0, 1]),
                set(&[2]),
                set(&[0, 2]),
            ]
        );
        assert!(dovetail_enumerate(MAX_DOVETAIL_COUNT + 1).is_err());
    }

    #[test]
    fn encoding_examples() {
        assert_eq!(encode_subset(&set(&[0, 2])), BigUint::from(5u32));
        assert_eq!(decode_subset(&BigUint::from(6u32)), set(&[1, 2]));
        assert_eq!(decode_subset(&BigUint::zero()), FiniteSubset::empty());
    }

    #[test]
    fn complements() {
        let c = complement(&set(&[0]));
        assert_eq!(c.to_string(), "{1, 2, ...}");
        assert!(!c.contains(0) && c.contains(1));
        let c = complement(&set(&[1]));
        assert_eq!(c.iter().take(4).collect::<Vec<_>>(), vec![0, 2, 3, 4]);
        let all = complement(&FiniteSubset::empty());
        assert!(all.missing().elements().is_empty());
        assert_eq!(all.iter().take(3).collect::<Vec<_>>(), vec![0, 1, 2]);
        assert_eq!(complement_inv(&complement(&set(&[3, 9]))), set(&[3, 9]));
    }

    #[test]
    fn json_is_array_of_arrays() {
        let v = serde_json::to_string(&vec![FiniteSubset::empty(), set(&[0, 2])]).unwrap();
        assert_eq!(v, "[[],[0,2]]");
    }
}
