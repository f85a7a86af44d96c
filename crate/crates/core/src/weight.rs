//! Weights, root-lattice drops and two-block profiles.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{as_natural, format_rational, int, parse_rational, Rational};

/// A gl(m) weight `(μ_1, ..., μ_m)` with `μ_i = μ(E_{i,i})`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Weight(Vec<Rational>);

/// Difference `μ - ν` between a highest weight and a weight below it,
/// stored as an integer vector (it lies in the root lattice).
pub type WeightDrop = Vec<i64>;

impl Weight {
    pub fn new(entries: Vec<Rational>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::domain("a weight needs at least one entry"));
        }
        Ok(Self(entries))
    }

    pub fn from_ints(entries: &[i64]) -> Self {
        Self(entries.iter().map(|&x| int(x)).collect())
    }

    pub fn parse<S: AsRef<str>>(entries: &[S]) -> Result<Self> {
        Self::new(
            entries
                .iter()
                .map(|s| parse_rational(s.as_ref()))
                .collect::<Result<_>>()?,
        )
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.0
    }

    /// 1-based entry.
    pub fn get(&self, i: usize) -> &Rational {
        &self.0[i - 1]
    }

    /// `|μ| = Σ μ_i`.
    pub fn total(&self) -> Rational {
        self.0.iter().fold(Rational::zero(), |acc, x| acc + x)
    }

    /// `self - drop`.
    pub fn lowered(&self, drop: &[i64]) -> Weight {
        Weight(self.0.iter().zip(drop).map(|(x, &d)| x - int(d)).collect())
    }

    /// `self + c (1, ..., 1)`.
    pub fn add_constant(&self, c: &Rational) -> Weight {
        Weight(self.0.iter().map(|x| x + c).collect())
    }

    /// `μ_s - μ_{s+1} ∈ Z_+` for every `s`.
    pub fn is_dominant_integral(&self) -> bool {
        self.0.windows(2).all(|w| {
            let d = &w[0] - &w[1];
            d.is_integer() && !d.is_negative()
        })
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(format_rational).collect()
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_strings().join(", "))
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Partial sums `Σ_{t≤s} γ_t` for `s = 1..m-1`: the simple-root coordinates.
pub fn simple_root_coords(drop: &[i64]) -> Vec<i64> {
    let mut acc = 0;
    drop.iter()
        .take(drop.len().saturating_sub(1))
        .map(|&g| {
            acc += g;
            acc
        })
        .collect()
}

/// Whether `drop` is a non-negative integer combination of positive roots.
pub fn is_positive_drop(drop: &[i64]) -> bool {
    drop.iter().sum::<i64>() == 0 && simple_root_coords(drop).iter().all(|&k| k >= 0)
}

/// Height: number of simple roots in the drop.
pub fn drop_height(drop: &[i64]) -> i64 {
    simple_root_coords(drop).iter().sum()
}

/// Every positive drop of height at most `h`, ordered by height then
/// lexicographically in simple-root coordinates.
pub fn drops_up_to_height(m: usize, h: usize) -> Vec<WeightDrop> {
    let mut out = Vec::new();
    let r = m.saturating_sub(1);
    let mut coords = vec![0i64; r];
    fn rec(pos: usize, left: i64, coords: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if pos == coords.len() {
            out.push(coords.clone());
            return;
        }
        for k in 0..=left {
            coords[pos] = k;
            rec(pos + 1, left - k, coords, out);
        }
    }
    rec(0, h as i64, &mut coords, &mut out);
    out.sort_by_key(|c| (c.iter().sum::<i64>(), c.clone()));
    out.into_iter()
        .map(|c| drop_from_simple_coords(&c, m))
        .collect()
}

pub fn drop_from_simple_coords(coords: &[i64], m: usize) -> WeightDrop {
    (0..m)
        .map(|s| {
            let cur = if s < coords.len() { coords[s] } else { 0 };
            let prev = if s > 0 { coords[s - 1] } else { 0 };
            cur - prev
        })
        .collect()
}

/// The shape `μ_1 = ... = μ_ī`, `μ_{ī+1} = ... = μ_m` of a highest weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockProfile {
    pub m: usize,
    /// 1-based; equals `m` exactly when all entries agree.
    pub ibar: usize,
    /// `μ_ī - μ_{ī+1}`, absent when `ī = m`.
    pub a: Option<Rational>,
    /// `μ_ī + m + 1 - ī` when that is a positive integer.
    pub l: Option<u64>,
}

impl BlockProfile {
    pub fn from_weight(mu: &Weight) -> Result<Self> {
        let m = mu.len();
        let e = mu.entries();
        let ibar = (1..m).find(|&s| e[s] != e[s - 1]).unwrap_or(m);
        if e[ibar..].iter().any(|x| *x != e[m - 1]) {
            return Err(Error::domain(format!(
                "weight {mu} is not of two-block shape"
            )));
        }
        Self::with_ibar(mu, ibar)
    }

    /// Profile for an explicitly chosen `ī`; fails unless `μ` has that shape.
    pub fn with_ibar(mu: &Weight, ibar: usize) -> Result<Self> {
        let m = mu.len();
        if ibar == 0 || ibar > m {
            return Err(Error::domain(format!("ibar = {ibar} outside 1..{m}")));
        }
        let e = mu.entries();
        let first_ok = e[..ibar].iter().all(|x| *x == e[0]);
        let second_ok = e[ibar..].iter().all(|x| *x == e[m - 1]);
        let split_ok = ibar == m || e[ibar - 1] != e[ibar];
        if !(first_ok && second_ok && split_ok) {
            return Err(Error::domain(format!(
                "weight {mu} does not have two-block shape with ibar = {ibar}"
            )));
        }
        let a = (ibar < m).then(|| &e[ibar - 1] - &e[ibar]);
        let l = as_natural(&(&e[ibar - 1] + int((m + 1 - ibar) as i64)));
        Ok(Self { m, ibar, a, l })
    }
}
