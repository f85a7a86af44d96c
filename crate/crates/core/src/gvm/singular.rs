//! Closed-form singular vectors.

use num_traits::One;

use super::{GvmModule, GvmVector};
use crate::error::{Error, Result};
use crate::gl::{
    band_basis, band_embed, BandLabel, BandModule, GlModule, PbwMonomial, SimpleModule,
};
use crate::lincomb::LinComb;
use crate::multi_index::MultiIndex;
use crate::rational::{as_natural, in_int_range, int, Rational};
use crate::weight::{BlockProfile, Weight};

/// `Y_{(μ_m+1) e_m} ⊗ v_μ`, defined when `μ_m + 1 ∈ ℕ`.
pub fn build_singular_case2<V: GlModule>(gvm: &GvmModule<V>) -> Result<GvmVector<V::Label>> {
    let mu = gvm.highest_weight();
    let m = mu.len();
    let n = as_natural(&(mu.get(m) + int(1))).ok_or_else(|| {
        Error::domain(format!(
            "mu_m + 1 = {} is not a positive integer",
            mu.get(m) + int(1)
        ))
    })?;
    Ok(gvm.y_top(MultiIndex::unit(m, m, n as u32)))
}

fn case1_l(mu: &Weight, profile: &BlockProfile) -> Result<u64> {
    let checked = BlockProfile::with_ibar(mu, profile.ibar)?;
    let a = checked
        .a
        .as_ref()
        .ok_or_else(|| Error::domain("case (1) needs ibar < m"))?;
    let l = checked
        .l
        .ok_or_else(|| Error::domain("mu_ibar + m + 1 - ibar is not a positive integer"))?;
    if in_int_range(a, 0, l as i64 - 1) {
        return Err(Error::domain(format!(
            "mu_ibar - mu_(ibar+1) lies in {{0, ..., {}}}",
            l - 1
        )));
    }
    Ok(l)
}

/// `u = Σ_{k=0}^{l} Σ_{i_1 ≤ ... ≤ i_k} Y_{l e_ī + e_{i_1} + ... + e_{i_k} - k e_ī} ⊗ v(i_1, ..., i_k)`
/// in the band realization with `l = μ_ī + m + 1 - ī`.
pub fn build_singular_case1_band(band: &BandModule) -> Result<GvmVector<BandLabel>> {
    let mu = band.highest_weight();
    let profile = band.profile();
    let l = case1_l(mu, profile)?;
    if band.l() != l {
        return Err(Error::domain(format!(
            "band model normalized with l = {}, expected {l}",
            band.l()
        )));
    }
    let m = mu.len();
    let b = profile.ibar;
    let mut u = LinComb::zero();
    for k in 0..=l as usize {
        for label in band_basis(profile, k)? {
            let mut exps = vec![0u32; m];
            exps[b - 1] = (l as usize - k) as u32;
            for &i in label.indices() {
                exps[i - 1] += 1;
            }
            u.add_term((MultiIndex::new(exps), label), Rational::one());
        }
    }
    Ok(u)
}

/// Rewrites a band-labelled vector of `M_p(V)` in the quotient realization.
pub fn embed_gvm(
    band: &BandModule,
    quotient: &SimpleModule,
    x: &GvmVector<BandLabel>,
) -> Result<GvmVector<PbwMonomial>> {
    let mut out = LinComb::zero();
    for ((alpha, label), c) in x {
        let v = band_embed(band, quotient, &LinComb::basis(label.clone()))?;
        for (y, d) in &v {
            out.add_term((alpha.clone(), y.clone()), c * d);
        }
    }
    Ok(out)
}

/// Case (1) singular vector assembled from the band model and written in the
/// quotient realization served by `quotient`.
pub fn build_singular_case1(
    profile: &BlockProfile,
    quotient: &SimpleModule,
) -> Result<GvmVector<PbwMonomial>> {
    let mu = quotient.highest_weight().clone();
    let l = case1_l(&mu, profile)?;
    let band = BandModule::new(mu, profile.clone(), l, quotient.cutoff())?;
    let u = build_singular_case1_band(&band)?;
    embed_gvm(&band, quotient, &u)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gl::MatrixUnit;
    use crate::gvm::leading_term;
    use crate::rational::frac;

    fn mi(v: &[u32]) -> MultiIndex {
        MultiIndex::new(v.to_vec())
    }

    #[test]
    fn case_two_vectors() {
        for (mu, alpha) in [
            (vec![0, 0], vec![0, 1]),
            (vec![2, 2, 0], vec![0, 0, 1]),
            (vec![5, 1], vec![0, 2]),
        ] {
            let gvm = GvmModule::new(SimpleModule::new(Weight::from_ints(&mu), 4));
            let u = build_singular_case2(&gvm).unwrap();
            assert_eq!(u, gvm.y_top(mi(&alpha)));
            assert!(gvm.is_highest_weight(&u).unwrap());
        }
        let gvm = GvmModule::new(SimpleModule::new(Weight::from_ints(&[0, -1]), 2));
        assert!(build_singular_case2(&gvm).is_err());
    }

    #[test]
    fn case_one_rank_two() {
        let mu = Weight::new(vec![int(-1), frac(-1, 2)]).unwrap();
        let p = BlockProfile::from_weight(&mu).unwrap();
        let q = SimpleModule::new(mu, 3);
        let u = build_singular_case1(&p, &q).unwrap();
        let gvm = GvmModule::new(q);
        let mut expected = gvm.y_top(mi(&[1, 0]));
        let f = gvm.inner().word_vector(&[MatrixUnit::new(2, 1)]).unwrap();
        expected.add_assign(&gvm.tensor(&mi(&[0, 1]), &f.scaled(&int(-2))));
        assert_eq!(u, expected);
        assert!(gvm.is_highest_weight(&u).unwrap());
        let (a, c) = leading_term(&u).unwrap();
        assert_eq!((a, c), (mi(&[1, 0]), gvm.inner().highest_vector()));
    }

    #[test]
    fn case_one_rank_three() {
        let mu = Weight::new(vec![int(-2), frac(1, 2), frac(1, 2)]).unwrap();
        let p = BlockProfile::from_weight(&mu).unwrap();
        let q = SimpleModule::new(mu, 5);
        let u = build_singular_case1(&p, &q).unwrap();
        let gvm = GvmModule::new(q);
        assert_eq!(u.len(), 3);
        assert!(gvm.is_highest_weight(&u).unwrap());
    }

    #[test]
    fn hypotheses_are_enforced() {
        let mu = Weight::from_ints(&[0, -1, -1]);
        let p = BlockProfile::from_weight(&mu).unwrap();
        assert!(build_singular_case1(&p, &SimpleModule::new(mu, 4)).is_err());
        let mu = Weight::from_ints(&[1, 1]);
        let p = BlockProfile::from_weight(&mu).unwrap();
        assert!(build_singular_case1(&p, &SimpleModule::new(mu, 4)).is_err());
    }
}
