//! The Weyl-algebra module `Ω(λ) = ℚ[x_1, ..., x_m]` in the basis
//! `X_η = ∏_i (x_i+1)(x_i+2)⋯(x_i+η_i)`.

use num_traits::Zero;

use super::Lambda;
use crate::error::{Error, Result};
use crate::lincomb::LinComb;
use crate::multi_index::MultiIndex;
use crate::rational::{falling_factorial, int, Rational};

pub type OmegaPoly = LinComb<MultiIndex>;

/// Generators of the Weyl algebra `K_m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KmGenerator {
    /// `t_i`: `f ↦ λ_i f(x_i - 1)`.
    T(usize),
    /// `t_i^{-1}`: `f ↦ λ_i^{-1} f(x_i + 1)`.
    TInv(usize),
    /// `t_i ∂_i`: multiplication by `x_i`.
    Euler(usize),
    /// `∂_i = t_i^{-1} ∘ (t_i ∂_i)`.
    Partial(usize),
}

fn with_coord(eta: &MultiIndex, i: usize, value: i64) -> Option<MultiIndex> {
    let mut shift = vec![0i64; eta.len()];
    shift[i - 1] = value - eta.get(i) as i64;
    eta.shifted(&shift)
}

/// `x_i X_j = X_{j+1} - (j+1) X_j`.
fn mul_x(i: usize, f: &OmegaPoly) -> OmegaPoly {
    let mut out = OmegaPoly::zero();
    for (eta, c) in f {
        let j = eta.get(i) as i64;
        out.add_term(eta.plus(i), c.clone());
        out.add_term(eta.clone(), -(c * int(j + 1)));
    }
    out
}

/// `X_j(x - 1) = X_j - j X_{j-1}`, times `λ_i`.
fn shift_down(lambda: &Lambda, i: usize, f: &OmegaPoly) -> OmegaPoly {
    let mut out = OmegaPoly::zero();
    for (eta, c) in f {
        let j = eta.get(i) as i64;
        let c = c * lambda.get(i);
        if j > 0 {
            out.add_term(eta.minus(i).unwrap(), -(&c * int(j)));
        }
        out.add_term(eta.clone(), c);
    }
    out
}

/// `X_j(x + 1) = Σ_{r=0}^{j} A_j^r X_{j-r}`, times `λ_i^{-1}`.
fn shift_up(lambda: &Lambda, i: usize, f: &OmegaPoly) -> OmegaPoly {
    let inv = lambda.get(i).recip();
    let mut out = OmegaPoly::zero();
    for (eta, c) in f {
        let j = eta.get(i) as i64;
        for r in 0..=j {
            let target = with_coord(eta, i, j - r).unwrap();
            out.add_term(target, c * &inv * falling_factorial(j, r as u32));
        }
    }
    out
}

pub fn omega_act(g: KmGenerator, f: &OmegaPoly, lambda: &Lambda) -> Result<OmegaPoly> {
    let m = lambda.len();
    let i = match g {
        KmGenerator::T(i)
        | KmGenerator::TInv(i)
        | KmGenerator::Euler(i)
        | KmGenerator::Partial(i) => i,
    };
    if i == 0 || i > m {
        return Err(Error::domain(format!("variable index {i} outside 1..{m}")));
    }
    if let Some(eta) = f.keys().find(|eta| eta.len() != m) {
        return Err(Error::Dimension {
            expected: m,
            found: eta.len(),
        });
    }
    Ok(match g {
        KmGenerator::T(i) => shift_down(lambda, i, f),
        KmGenerator::TInv(i) => shift_up(lambda, i, f),
        KmGenerator::Euler(i) => mul_x(i, f),
        KmGenerator::Partial(i) => shift_up(lambda, i, &mul_x(i, f)),
    })
}

/// `t^α ∂_i = t^{α - e_i} ∘ (t_i ∂_i)` on `Ω(λ)`.
pub(crate) fn witt_on_omega(alpha: &[i64], i: usize, f: &OmegaPoly, lambda: &Lambda) -> OmegaPoly {
    let mut out = mul_x(i, f);
    for (k, &a) in alpha.iter().enumerate() {
        let e = a - if k + 1 == i { 1 } else { 0 };
        for _ in 0..e.max(0) {
            out = shift_down(lambda, k + 1, &out);
        }
        for _ in 0..(-e).max(0) {
            out = shift_up(lambda, k + 1, &out);
        }
    }
    out
}

/// `t^β` on `Ω(λ)`.
pub(crate) fn laurent_on_omega(beta: &[i64], f: &OmegaPoly, lambda: &Lambda) -> OmegaPoly {
    let mut out = f.clone();
    for (k, &b) in beta.iter().enumerate() {
        for _ in 0..b.max(0) {
            out = shift_down(lambda, k + 1, &out);
        }
        for _ in 0..(-b).max(0) {
            out = shift_up(lambda, k + 1, &out);
        }
    }
    out
}

/// Value of `f` at a rational point.
pub fn omega_eval(f: &OmegaPoly, x: &[Rational]) -> Rational {
    let mut acc = Rational::zero();
    for (eta, c) in f {
        let mut term = c.clone();
        for (k, xi) in x.iter().enumerate() {
            for r in 1..=eta.get(k + 1) as i64 {
                term *= xi + int(r);
            }
        }
        acc += term;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;
    use proptest::prelude::*;

    fn one(m: usize) -> OmegaPoly {
        OmegaPoly::basis(MultiIndex::zero(m))
    }

    fn x(eta: &[u32]) -> OmegaPoly {
        OmegaPoly::basis(MultiIndex::new(eta.to_vec()))
    }

    #[test]
    fn examples() {
        let lam = Lambda::new(vec![frac(3, 2), frac(-2, 7)]).unwrap();
        let out = omega_act(KmGenerator::T(1), &one(2), &lam).unwrap();
        assert_eq!(out, one(2).scaled(&frac(3, 2)));
        let out = omega_act(KmGenerator::Euler(1), &x(&[1, 0]), &lam).unwrap();
        let mut expected = x(&[2, 0]);
        expected.add_term(MultiIndex::new(vec![1, 0]), int(-2));
        assert_eq!(out, expected);
        let out = omega_act(KmGenerator::Partial(1), &one(2), &lam).unwrap();
        assert_eq!(out, x(&[1, 0]).scaled(&frac(2, 3)));
    }

    fn poly() -> impl Strategy<Value = OmegaPoly> {
        prop::collection::vec(((0u32..4, 0u32..4), -5i64..5), 1..5).prop_map(|terms| {
            terms
                .into_iter()
                .map(|((a, b), c)| (MultiIndex::new(vec![a, b]), int(c)))
                .collect()
        })
    }

    proptest! {
        #[test]
        fn defining_action_holds_pointwise(
            f in poly(),
            p in prop::collection::vec((-9i64..9, 1i64..5), 2),
            l in prop::collection::vec((1i64..6, 1i64..4), 2),
        ) {
            let lam = Lambda::new(l.iter().map(|&(n, d)| frac(n, d)).collect()).unwrap();
            let pt: Vec<Rational> = p.iter().map(|&(n, d)| frac(n, d)).collect();
            let at = |f: &OmegaPoly, shift: i64, i: usize| {
                let mut q = pt.clone();
                q[i - 1] += int(shift);
                omega_eval(f, &q)
            };
            for i in 1..=2 {
                let t = omega_act(KmGenerator::T(i), &f, &lam).unwrap();
                prop_assert_eq!(omega_eval(&t, &pt), lam.get(i) * at(&f, -1, i));
                let ti = omega_act(KmGenerator::TInv(i), &f, &lam).unwrap();
                prop_assert_eq!(omega_eval(&ti, &pt), at(&f, 1, i) / lam.get(i));
                let e = omega_act(KmGenerator::Euler(i), &f, &lam).unwrap();
                prop_assert_eq!(omega_eval(&e, &pt), &pt[i - 1] * omega_eval(&f, &pt));
                let d = omega_act(KmGenerator::Partial(i), &f, &lam).unwrap();
                prop_assert_eq!(omega_eval(&d, &pt), (&pt[i - 1] + int(1)) * at(&f, 1, i) / lam.get(i));
            }
        }
    }
}
