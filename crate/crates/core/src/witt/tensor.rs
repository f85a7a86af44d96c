//! `F(Ω(λ), W)` with the action `π(t^α ∂_i) = t^α ∂_i ⊗ 1 + Σ_s ∂_s(t^α) ⊗ E_{s,i}`.

use num_traits::One;

use super::omega::{laurent_on_omega, witt_on_omega};
use super::{l_element, sigma_lambda, Lambda, OmegaPoly, WittElement, WittTerm};
use crate::error::Result;
use crate::gl::{GlModule, HwVector, MatrixUnit};
use crate::gvm::{decompose, Part, SlElement};
use crate::lincomb::LinComb;
use crate::multi_index::MultiIndex;
use crate::rational::{int, Rational};

/// `Σ X_η ⊗ w`, keyed by `(η, label of W)`.
pub type TensorVector<L> = LinComb<(MultiIndex, L)>;

/// Spanning elements of the image of `σ_λ` with closed-form actions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SPrimeGenerator {
    /// `λ_i^{-1} λ_j t_i ∂_j - λ_j ∂_j`, `i ≠ j`.
    Offdiag(usize, usize),
    /// `λ_i ∂_i - t_i ∂_i`.
    Diag(usize),
    /// `L_i`.
    L(usize),
}

impl SPrimeGenerator {
    pub fn element(&self, lambda: &Lambda) -> WittElement {
        let m = lambda.len();
        match *self {
            SPrimeGenerator::Offdiag(i, j) => {
                let mut e = WittElement::term(WittTerm::linear(m, i, j), lambda.ratio(i, j));
                e.add_term(WittTerm::partial(m, j), -lambda.get(j).clone());
                e
            }
            SPrimeGenerator::Diag(i) => {
                let mut e = WittElement::term(WittTerm::partial(m, i), lambda.get(i).clone());
                e.add_term(WittTerm::linear(m, i, i), -Rational::one());
                e
            }
            SPrimeGenerator::L(i) => l_element(lambda, i),
        }
    }

    pub fn all(m: usize) -> Vec<SPrimeGenerator> {
        let mut out = Vec::new();
        for i in 1..=m {
            for j in 1..=m {
                if i != j {
                    out.push(SPrimeGenerator::Offdiag(i, j));
                }
            }
        }
        out.extend((1..=m).map(SPrimeGenerator::Diag));
        out.extend((1..=m).map(SPrimeGenerator::L));
        out
    }
}

/// The tensor module `F(Ω(λ), W)`.
pub struct TensorModule<W: GlModule> {
    w: W,
    lambda: Lambda,
}

impl<W: GlModule> TensorModule<W> {
    pub fn new(w: W, lambda: Lambda) -> Result<Self> {
        if w.rank() != lambda.len() {
            return Err(crate::error::Error::Dimension {
                expected: w.rank(),
                found: lambda.len(),
            });
        }
        Ok(Self { w, lambda })
    }

    pub fn inner(&self) -> &W {
        &self.w
    }

    pub fn lambda(&self) -> &Lambda {
        &self.lambda
    }

    pub fn rank(&self) -> usize {
        self.lambda.len()
    }

    fn tensor(&self, p: &OmegaPoly, v: &HwVector<W::Label>) -> TensorVector<W::Label> {
        let mut out = LinComb::zero();
        for (eta, a) in p {
            for (l, b) in v {
                out.add_term((eta.clone(), l.clone()), a * b);
            }
        }
        out
    }

    /// `π(t^α ∂_i)` applied to `x`.
    pub fn pi_act_term(
        &self,
        term: &WittTerm,
        x: &TensorVector<W::Label>,
    ) -> Result<TensorVector<W::Label>> {
        let mut out = LinComb::zero();
        for ((eta, label), c) in x {
            let xe = OmegaPoly::basis(eta.clone());
            let first = witt_on_omega(&term.alpha, term.dir, &xe, &self.lambda);
            let v = HwVector::basis(label.clone());
            out.add_scaled(&self.tensor(&first, &v), c);
            for s in 1..=self.rank() {
                let a = term.alpha[s - 1];
                if a == 0 {
                    continue;
                }
                let mut beta = term.alpha.clone();
                beta[s - 1] -= 1;
                let p = laurent_on_omega(&beta, &xe, &self.lambda);
                let ev = self.w.act_unit(MatrixUnit::new(s, term.dir), label)?;
                out.add_scaled(&self.tensor(&p, &ev), &(c * int(a)));
            }
        }
        Ok(out)
    }

    pub fn pi_act(
        &self,
        g: &WittElement,
        x: &TensorVector<W::Label>,
    ) -> Result<TensorVector<W::Label>> {
        let mut out = LinComb::zero();
        for (term, c) in g {
            out.add_scaled(&self.pi_act_term(term, x)?, c);
        }
        Ok(out)
    }

    /// Closed-form action of the `σ_λ`-image generators.
    pub fn sprime_closed_act(
        &self,
        g: SPrimeGenerator,
        x: &TensorVector<W::Label>,
    ) -> Result<TensorVector<W::Label>> {
        let m = self.rank();
        let mut out = LinComb::zero();
        for ((eta, label), c) in x {
            let v = HwVector::basis(label.clone());
            match g {
                SPrimeGenerator::Offdiag(i, j) => {
                    let ei = eta.get(i) as i64;
                    if ei > 0 {
                        let key = (eta.minus(i).unwrap().plus(j), label.clone());
                        out.add_term(key, -(c * int(ei)));
                    }
                    let ev = self.w.act_unit(MatrixUnit::new(i, j), label)?;
                    out.add_scaled(&self.at(eta, &ev), &(c * self.lambda.ratio(i, j)));
                }
                SPrimeGenerator::Diag(i) => {
                    out.add_term((eta.clone(), label.clone()), c * int(eta.get(i) as i64 + 1));
                    let ev = self.w.act_unit(MatrixUnit::new(i, i), label)?;
                    out.add_scaled(&self.at(eta, &ev), &-c.clone());
                }
                SPrimeGenerator::L(i) => {
                    let ei = eta.get(i) as i64;
                    if ei > 0 {
                        let lower = eta.minus(i).unwrap();
                        let scalar = int(ei * (eta.degree() as i64 + m as i64));
                        out.add_term((lower.clone(), label.clone()), c * scalar);
                        let mut total = HwVector::zero();
                        for s in 1..=m {
                            total.add_assign(&self.w.act(MatrixUnit::new(s, s), &v)?);
                        }
                        out.add_scaled(&self.at(&lower, &total), &-(c * int(ei)));
                    }
                    for s in 1..=m {
                        let es = eta.get(s) as i64;
                        if es == 0 {
                            continue;
                        }
                        let lower = eta.minus(s).unwrap();
                        let ev = self.w.act_unit(MatrixUnit::new(i, s), label)?;
                        let k = -(c * int(es) * self.lambda.ratio(i, s));
                        out.add_scaled(&self.at(&lower, &ev), &k);
                    }
                }
            }
        }
        Ok(out)
    }

    fn at(&self, eta: &MultiIndex, v: &HwVector<W::Label>) -> TensorVector<W::Label> {
        v.map_keys(|l| (eta.clone(), l.clone()))
    }

    /// sl(m+1) acting through `σ_λ`, using the closed forms.
    pub fn sigma_act(
        &self,
        g: &SlElement,
        x: &TensorVector<W::Label>,
    ) -> Result<TensorVector<W::Label>> {
        let m = self.rank();
        let mut out = LinComb::zero();
        for (part, c) in decompose(m, g)? {
            let img = match part {
                Part::Levi(u) if u.i != u.j => {
                    self.sprime_closed_act(SPrimeGenerator::Offdiag(u.i, u.j), x)?
                }
                Part::Levi(u) => {
                    let mut acc = self.sprime_closed_act(SPrimeGenerator::Diag(u.i), x)?;
                    for s in 1..=m {
                        acc.add_assign(&self.sprime_closed_act(SPrimeGenerator::Diag(s), x)?);
                    }
                    acc.scaled(&int(-1))
                }
                Part::Up(i) => self.sprime_closed_act(SPrimeGenerator::L(i), x)?,
                Part::Down(i) => {
                    let mut acc = LinComb::zero();
                    for ((eta, l), d) in x {
                        acc.add_term((eta.plus(i), l.clone()), -d.clone());
                    }
                    acc
                }
            };
            out.add_scaled(&img, &c);
        }
        Ok(out)
    }

    /// sl(m+1) acting through `σ_λ` and the defining formula for `π`.
    pub fn sigma_act_pi(
        &self,
        g: &SlElement,
        x: &TensorVector<W::Label>,
    ) -> Result<TensorVector<W::Label>> {
        self.pi_act(&sigma_lambda(&self.lambda, g)?, x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gl::SimpleModule;
    use crate::gvm::SlGenerator;
    use crate::rational::frac;
    use crate::weight::Weight;

    fn module() -> TensorModule<SimpleModule> {
        let w = SimpleModule::new(Weight::from_ints(&[1, 0]), 3);
        TensorModule::new(w, Lambda::from_ints(&[1, 2]).unwrap()).unwrap()
    }

    #[test]
    fn pi_examples() {
        let f = module();
        let top = f.inner().highest_label();
        let x = LinComb::basis((MultiIndex::zero(2), top.clone()));
        let out = f.pi_act_term(&WittTerm::partial(2, 2), &x).unwrap();
        assert_eq!(
            out,
            LinComb::term((MultiIndex::new(vec![0, 1]), top.clone()), frac(1, 2))
        );

        // π(t_1 ∂_2)(1 ⊗ w) = λ_1 λ_2^{-1} X_{e_2} ⊗ w + 1 ⊗ E_{1,2} w
        let low = f.inner().word_vector(&[MatrixUnit::new(2, 1)]).unwrap();
        let low_label = low.keys().next().unwrap().clone();
        let x = LinComb::basis((MultiIndex::zero(2), low_label.clone()));
        let out = f.pi_act_term(&WittTerm::linear(2, 1, 2), &x).unwrap();
        let mut expected = LinComb::term((MultiIndex::new(vec![0, 1]), low_label), frac(1, 2));
        for (l, c) in &f.inner().act(MatrixUnit::new(1, 2), &low).unwrap() {
            expected.add_term((MultiIndex::zero(2), l.clone()), c.clone());
        }
        assert_eq!(out, expected);
    }

    #[test]
    fn closed_forms_on_constants() {
        let f = module();
        let top = f.inner().highest_label();
        let x = LinComb::basis((MultiIndex::zero(2), top));
        for i in 1..=2 {
            assert!(f
                .sprime_closed_act(SPrimeGenerator::L(i), &x)
                .unwrap()
                .is_zero());
        }
        let d1 = f.sprime_closed_act(SPrimeGenerator::Diag(1), &x).unwrap();
        assert!(d1.is_zero());
        let d2 = f.sprime_closed_act(SPrimeGenerator::Diag(2), &x).unwrap();
        assert_eq!(d2, x);
    }

    #[test]
    fn closed_forms_match_pi() {
        let f = module();
        for drop in crate::weight::drops_up_to_height(2, 1) {
            for l in f.inner().weight_basis(&drop).unwrap() {
                for eta in MultiIndex::all_up_to_degree(2, 2) {
                    let x = LinComb::basis((eta, l.clone()));
                    for g in SPrimeGenerator::all(2) {
                        let closed = f.sprime_closed_act(g, &x).unwrap();
                        let via_pi = f.pi_act(&g.element(f.lambda()), &x).unwrap();
                        assert_eq!(closed, via_pi, "{g:?}");
                    }
                    for g in SlGenerator::basis(2) {
                        let e = g.element();
                        assert_eq!(
                            f.sigma_act(&e, &x).unwrap(),
                            f.sigma_act_pi(&e, &x).unwrap(),
                            "{g}"
                        );
                    }
                }
            }
        }
    }
}
