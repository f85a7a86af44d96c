//! Closed-form band model of L(μ) for two-block highest weights.
//!
//! With `a = μ_ī - μ_{ī+1}` the weight spaces `μ + e_{i_1} + ... + e_{i_k} - k e_ī`
//! (`i_s > ī`) are one-dimensional and spanned by `v(i_1, ..., i_k)`, normalized
//! by `E_{ī,i_1} ⋯ E_{ī,i_k} v(i_1, ..., i_k) = A_l^k v_μ`.

use std::fmt;

use num_traits::Zero;

use super::simple::SimpleModule;
use super::verma::PbwMonomial;
use super::{GlModule, HwVector, MatrixUnit};
use crate::error::{Error, Result};
use crate::lincomb::LinComb;
use crate::rational::{as_natural, falling_factorial, format_rational, int, Rational};
use crate::weight::{BlockProfile, Weight, WeightDrop};

/// Sorted multiset `i_1 ≤ ... ≤ i_k` of indices above `ī`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BandLabel(Vec<usize>);

impl BandLabel {
    pub fn new(mut indices: Vec<usize>) -> Self {
        indices.sort_unstable();
        Self(indices)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.len()
    }

    pub fn count(&self, i: usize) -> usize {
        self.0.iter().filter(|&&x| x == i).count()
    }

    fn with(&self, i: usize) -> Self {
        let mut v = self.0.clone();
        v.push(i);
        Self::new(v)
    }

    fn without(&self, p: usize) -> Option<Self> {
        let pos = self.0.iter().position(|&x| x == p)?;
        let mut v = self.0.clone();
        v.remove(pos);
        Some(Self(v))
    }
}

impl fmt::Debug for BandLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            write!(f, "v_mu")
        } else {
            let parts: Vec<_> = self.0.iter().map(|i| i.to_string()).collect();
            write!(f, "v({})", parts.join(","))
        }
    }
}

/// Multisets of size `k` over `ī+1..m`; empty when `a ∈ ℕ` and `k > a`.
pub fn band_basis(profile: &BlockProfile, k: usize) -> Result<Vec<BandLabel>> {
    let a = profile
        .a
        .as_ref()
        .ok_or_else(|| Error::domain("ibar = m: the weight has no band"))?;
    if let Some(a) = as_natural(a) {
        if k as u64 > a {
            return Ok(Vec::new());
        }
    }
    let lo = profile.ibar + 1;
    let hi = profile.m;
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, hi: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<BandLabel>) {
        if cur.len() == k {
            out.push(BandLabel(cur.clone()));
            return;
        }
        for i in start..=hi {
            cur.push(i);
            rec(i, hi, k, cur, out);
            cur.pop();
        }
    }
    rec(lo, hi, k, &mut cur, &mut out);
    Ok(out)
}

/// Band realization of `L(μ)` with normalization constant `l`.
#[derive(Clone)]
pub struct BandModule {
    mu: Weight,
    profile: BlockProfile,
    a: Rational,
    l: u64,
    cutoff: usize,
}

impl BandModule {
    /// Requires `ī < m`, `a ≠ 0` and `l ≥ 1`.
    pub fn new(mu: Weight, profile: BlockProfile, l: u64, cutoff: usize) -> Result<Self> {
        let checked = BlockProfile::with_ibar(&mu, profile.ibar)?;
        if checked != profile {
            return Err(Error::domain("profile does not describe the weight"));
        }
        let a = profile
            .a
            .clone()
            .ok_or_else(|| Error::domain("ibar = m: the weight has no band"))?;
        if a.is_zero() {
            return Err(Error::domain("band model needs mu_ibar != mu_{ibar+1}"));
        }
        if l == 0 {
            return Err(Error::domain("normalization l must be positive"));
        }
        Ok(Self {
            mu,
            profile,
            a,
            l,
            cutoff,
        })
    }

    /// Band model of a two-block weight with `ī` detected from `μ`.
    pub fn from_weight(mu: Weight, l: u64, cutoff: usize) -> Result<Self> {
        let profile = BlockProfile::from_weight(&mu)?;
        Self::new(mu, profile, l, cutoff)
    }

    pub fn profile(&self) -> &BlockProfile {
        &self.profile
    }

    pub fn l(&self) -> u64 {
        self.l
    }

    pub fn ibar(&self) -> usize {
        self.profile.ibar
    }

    fn a_natural(&self) -> Option<u64> {
        as_natural(&self.a)
    }

    /// Label of the band weight space with this drop, `None` when the drop
    /// is not of band shape.
    fn band_label(&self, drop: &[i64]) -> Option<BandLabel> {
        let b = self.ibar();
        if drop[..b - 1].iter().any(|&x| x != 0) || drop[b - 1] < 0 {
            return None;
        }
        let mut idx = Vec::new();
        for (j, &x) in drop.iter().enumerate().skip(b) {
            if x > 0 {
                return None;
            }
            idx.extend(std::iter::repeat_n(j + 1, (-x) as usize));
        }
        (idx.len() as i64 == drop[b - 1]).then_some(BandLabel(idx))
    }

    /// Drops supported on `ī, ..., m`; off the band these spaces vanish.
    fn inside_band_rows(&self, drop: &[i64]) -> bool {
        drop[..self.ibar() - 1].iter().all(|&x| x == 0)
    }

    fn inside_one_block(&self, drop: &[i64]) -> bool {
        let b = self.ibar();
        drop[b..].iter().all(|&x| x == 0) || drop[..b].iter().all(|&x| x == 0)
    }
}

impl GlModule for BandModule {
    type Label = BandLabel;

    fn realization(&self) -> &'static str {
        "band"
    }

    fn rank(&self) -> usize {
        self.mu.len()
    }

    fn highest_weight(&self) -> &Weight {
        &self.mu
    }

    fn highest_label(&self) -> BandLabel {
        BandLabel::empty()
    }

    fn cutoff(&self) -> usize {
        self.cutoff
    }

    fn drop_of(&self, label: &BandLabel) -> WeightDrop {
        let mut d = vec![0i64; self.rank()];
        d[self.ibar() - 1] = label.size() as i64;
        for &i in label.indices() {
            d[i - 1] -= 1;
        }
        d
    }

    fn weight_basis(&self, drop: &[i64]) -> Result<Vec<BandLabel>> {
        if drop.len() != self.rank() {
            return Err(Error::Dimension {
                expected: self.rank(),
                found: drop.len(),
            });
        }
        if !self.classify_drop(drop)? {
            return Ok(Vec::new());
        }
        let label = match self.band_label(drop) {
            Some(label) => label,
            None if self.inside_band_rows(drop) || self.inside_one_block(drop) => {
                return Ok(Vec::new())
            }
            None => {
                return Err(Error::domain(format!(
                    "weight space at drop {drop:?} lies outside the band"
                )))
            }
        };
        let k = label.size() as u64;
        if k == 0 {
            return Ok(vec![label]);
        }
        if self.a_natural().is_some_and(|a| k > a) {
            return Ok(Vec::new());
        }
        if k > self.l {
            return Err(Error::domain(format!(
                "band vectors with k = {k} > l = {} are not normalized",
                self.l
            )));
        }
        Ok(vec![label])
    }

    fn act_unit(&self, g: MatrixUnit, label: &BandLabel) -> Result<HwVector<BandLabel>> {
        g.check_range(self.rank())?;
        let drop = self.drop_of(label);
        if g.is_cartan() {
            return Ok(LinComb::term(
                label.clone(),
                self.cartan_eigenvalue(g.i, &drop),
            ));
        }
        let target = g.shift_drop(&drop);
        if !self.classify_drop(&target)? {
            return Ok(LinComb::zero());
        }
        let b = self.ibar();
        let k = label.size();
        let (i, j) = (g.i, g.j);
        let (coeff, image) = if i > b && j == b {
            if k as u64 >= self.l {
                return Err(Error::domain(format!(
                    "E_{{i,ibar}} on v(...) needs k < l, got k = {k}, l = {}",
                    self.l
                )));
            }
            let c = (&self.a - int(k as i64)) * int(1 + label.count(i) as i64)
                / int(self.l as i64 - k as i64);
            (c, label.with(i))
        } else if i > b && j > b {
            match label.without(j) {
                Some(rest) => (int(1 + label.count(i) as i64), rest.with(i)),
                None => return Ok(LinComb::zero()),
            }
        } else if i == b && j > b {
            match label.without(j) {
                Some(rest) => (int(self.l as i64 - k as i64 + 1), rest),
                None => return Ok(LinComb::zero()),
            }
        } else {
            return Err(Error::UnsupportedGenerator {
                generator: g.to_string(),
                realization: "band",
            });
        };
        if self.weight_basis(&target)?.is_empty() {
            return Ok(LinComb::zero());
        }
        Ok(LinComb::term(image, coeff))
    }

    fn label_string(&self, label: &BandLabel) -> String {
        format!("{label:?}")
    }
}

impl fmt::Debug for BandModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "BandModule(μ = {}, ibar = {}, a = {}, l = {})",
            self.mu,
            self.ibar(),
            format_rational(&self.a),
            self.l
        )
    }
}

/// Rewrites band vectors in the quotient realization:
/// `v(i_1..i_k) = c · E_{i_1,ī} ⋯ E_{i_k,ī} v_μ` with `c` fixed by the
/// normalization.
pub fn band_embed(
    band: &BandModule,
    quotient: &SimpleModule,
    x: &HwVector<BandLabel>,
) -> Result<HwVector<PbwMonomial>> {
    if band.highest_weight() != quotient.highest_weight() {
        return Err(Error::domain(
            "band and quotient realizations have different weights",
        ));
    }
    let mut out = LinComb::zero();
    for (label, c) in x {
        out.add_scaled(&embed_label(band, quotient, label)?, c);
    }
    Ok(out)
}

fn embed_label(
    band: &BandModule,
    quotient: &SimpleModule,
    label: &BandLabel,
) -> Result<HwVector<PbwMonomial>> {
    let b = band.ibar();
    let k = label.size();
    let target = falling_factorial(band.l() as i64, k as u32);
    let drop = band.drop_of(label);
    let dim = quotient.weight_basis(&drop)?.len();
    if dim == 0 {
        if target.is_zero() {
            return Ok(LinComb::zero());
        }
        return Err(Error::consistency(format!(
            "{label:?} has nonzero normalization but its weight space vanishes"
        )));
    }
    if dim != 1 {
        return Err(Error::consistency(format!(
            "band weight space of {label:?} has dimension {dim}"
        )));
    }
    let word: Vec<MatrixUnit> = label
        .indices()
        .iter()
        .map(|&i| MatrixUnit::new(i, b))
        .collect();
    let mono = quotient.word_vector(&word)?;
    let mut raised = mono.clone();
    for &i in label.indices() {
        raised = quotient.act(MatrixUnit::new(b, i), &raised)?;
    }
    let s = raised.coeff(&quotient.highest_label());
    if s.is_zero() || raised.len() != 1 {
        return Err(Error::consistency(format!(
            "raising {label:?} back does not reach a nonzero multiple of v_mu"
        )));
    }
    Ok(mono.scaled(&(target / s)))
}
