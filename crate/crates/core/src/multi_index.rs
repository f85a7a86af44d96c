//! Multi-indices `α ∈ Z_+^m` under the graded order `≺`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Exponent vector with non-negative entries.
///
/// `Ord` is the graded order: smaller total degree first, and for equal
/// degrees the first differing coordinate decides. Indices of different
/// lengths are ordered by length first so the order stays total.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiIndex {
    exps: Vec<u32>,
    degree: u32,
}

impl MultiIndex {
    pub fn new(exps: Vec<u32>) -> Self {
        let degree = exps.iter().sum();
        Self { exps, degree }
    }

    pub fn zero(m: usize) -> Self {
        Self::new(vec![0; m])
    }

    /// `k · e_i` with 1-based `i`.
    pub fn unit(m: usize, i: usize, k: u32) -> Self {
        let mut exps = vec![0; m];
        exps[i - 1] = k;
        Self::new(exps)
    }

    pub fn len(&self) -> usize {
        self.exps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    /// 1-based coordinate.
    pub fn get(&self, i: usize) -> u32 {
        self.exps[i - 1]
    }

    /// `self + e_i`, 1-based.
    pub fn plus(&self, i: usize) -> Self {
        let mut exps = self.exps.clone();
        exps[i - 1] += 1;
        Self::new(exps)
    }

    /// `self - e_i`, or `None` when that coordinate is zero.
    pub fn minus(&self, i: usize) -> Option<Self> {
        let mut exps = self.exps.clone();
        exps[i - 1] = exps[i - 1].checked_sub(1)?;
        Some(Self::new(exps))
    }

    /// Componentwise `self - other` as signed integers.
    pub fn signed_diff(&self, other: &MultiIndex) -> Vec<i64> {
        self.exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a as i64 - b as i64)
            .collect()
    }

    /// `self + shift`, or `None` when a coordinate would go negative.
    pub fn shifted(&self, shift: &[i64]) -> Option<Self> {
        let exps = self
            .exps
            .iter()
            .zip(shift)
            .map(|(&a, &s)| u32::try_from(a as i64 + s).ok())
            .collect::<Option<Vec<_>>>()?;
        Some(Self::new(exps))
    }

    /// All multi-indices of length `m` and total degree `d`, ascending in `≺`.
    pub fn all_of_degree(m: usize, d: u32) -> Vec<MultiIndex> {
        let mut out = Vec::new();
        let mut cur = vec![0u32; m];
        fn rec(pos: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<MultiIndex>) {
            let m = cur.len();
            if pos + 1 == m {
                cur[pos] = left;
                out.push(MultiIndex::new(cur.clone()));
                return;
            }
            for k in 0..=left {
                cur[pos] = k;
                rec(pos + 1, left - k, cur, out);
            }
        }
        if m == 0 {
            if d == 0 {
                out.push(MultiIndex::new(Vec::new()));
            }
            return out;
        }
        rec(0, d, &mut cur, &mut out);
        out.sort();
        out
    }

    /// All multi-indices with degree at most `d`, ascending in `≺`.
    pub fn all_up_to_degree(m: usize, d: u32) -> Vec<MultiIndex> {
        (0..=d).flat_map(|k| Self::all_of_degree(m, k)).collect()
    }
}

impl Ord for MultiIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.exps
            .len()
            .cmp(&other.exps.len())
            .then(self.degree.cmp(&other.degree))
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for MultiIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps)
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.exps.iter().map(|e| e.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `α ≺ β`: strictly smaller degree, or equal degree and smaller at the
/// first coordinate where the two differ.
pub fn grlex_less(alpha: &MultiIndex, beta: &MultiIndex) -> Result<bool> {
    if alpha.len() != beta.len() {
        return Err(Error::Dimension {
            expected: alpha.len(),
            found: beta.len(),
        });
    }
    Ok(alpha < beta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mi(v: &[u32]) -> MultiIndex {
        MultiIndex::new(v.to_vec())
    }

    #[test]
    fn order_examples() {
        assert!(grlex_less(&mi(&[0, 0]), &mi(&[1, 0])).unwrap());
        assert!(grlex_less(&mi(&[0, 2, 0]), &mi(&[1, 1, 0])).unwrap());
        assert!(!grlex_less(&mi(&[1, 1]), &mi(&[1, 1])).unwrap());
        assert!(grlex_less(&mi(&[0, 1]), &mi(&[1, 0])).unwrap());
        assert!(grlex_less(&mi(&[0, 2]), &mi(&[1, 1])).unwrap());
    }

    #[test]
    fn length_mismatch_is_dimension_error() {
        assert!(matches!(
            grlex_less(&mi(&[0]), &mi(&[0, 1])),
            Err(Error::Dimension { .. })
        ));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(MultiIndex::all_of_degree(3, 2).len(), 6);
        assert_eq!(MultiIndex::all_up_to_degree(2, 3).len(), 10);
        let d2 = MultiIndex::all_of_degree(2, 2);
        assert_eq!(d2, vec![mi(&[0, 2]), mi(&[1, 1]), mi(&[2, 0])]);
    }

    fn triple() -> impl Strategy<Value = (MultiIndex, MultiIndex, MultiIndex)> {
        let one = || proptest::collection::vec(0u32..4, 3).prop_map(MultiIndex::new);
        (one(), one(), one())
    }

    proptest! {
        #[test]
        fn strict_total_order((a, b, c) in triple()) {
            let ab = grlex_less(&a, &b).unwrap();
            let ba = grlex_less(&b, &a).unwrap();
            let eq = a == b;
            prop_assert_eq!([ab, ba, eq].iter().filter(|x| **x).count(), 1);
            if ab && grlex_less(&b, &c).unwrap() {
                prop_assert!(grlex_less(&a, &c).unwrap());
            }
        }
    }
}
