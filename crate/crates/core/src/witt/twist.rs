//! The gl(m)-module that makes `F(Ω(λ), W)` a generalized Verma module.

use std::fmt;

use super::Lambda;
use crate::error::{Error, Result};
use crate::gl::{GlModule, HwVector, MatrixUnit};
use crate::rational::int;
use crate::weight::{Weight, WeightDrop};

/// `W` with `E_{i,j}` acting as `λ_i^{-1} λ_j E_{i,j}` for `i ≠ j` and
/// `E_{i,i}` acting as `Σ_s E_{s,s} + E_{i,i} - (m+1)`.
///
/// Its highest weight is `μ + (|μ| - m - 1)·(1, ..., 1)` and drops agree
/// with those of `W`.
pub struct TwistedModule<W: GlModule> {
    w: W,
    lambda: Lambda,
    weight: Weight,
}

impl<W: GlModule> TwistedModule<W> {
    pub fn new(w: W, lambda: Lambda) -> Result<Self> {
        if w.rank() != lambda.len() {
            return Err(Error::Dimension {
                expected: w.rank(),
                found: lambda.len(),
            });
        }
        let mu = w.highest_weight();
        let shift = mu.total() - int(mu.len() as i64 + 1);
        let weight = mu.add_constant(&shift);
        Ok(Self { w, lambda, weight })
    }

    pub fn inner(&self) -> &W {
        &self.w
    }

    pub fn lambda(&self) -> &Lambda {
        &self.lambda
    }
}

impl<W: GlModule> GlModule for TwistedModule<W> {
    type Label = W::Label;

    fn realization(&self) -> &'static str {
        "twisted"
    }

    fn rank(&self) -> usize {
        self.w.rank()
    }

    fn highest_weight(&self) -> &Weight {
        &self.weight
    }

    fn highest_label(&self) -> W::Label {
        self.w.highest_label()
    }

    fn cutoff(&self) -> usize {
        self.w.cutoff()
    }

    fn drop_of(&self, label: &W::Label) -> WeightDrop {
        self.w.drop_of(label)
    }

    fn weight_basis(&self, drop: &[i64]) -> Result<Vec<W::Label>> {
        self.w.weight_basis(drop)
    }

    fn act_unit(&self, g: MatrixUnit, label: &W::Label) -> Result<HwVector<W::Label>> {
        g.check_range(self.rank())?;
        if g.i != g.j {
            let out = self.w.act_unit(g, label)?;
            return Ok(out.scaled(&self.lambda.ratio(g.i, g.j)));
        }
        let drop = self.w.drop_of(label);
        let ev = self.cartan_eigenvalue(g.i, &drop);
        Ok(HwVector::term(label.clone(), ev))
    }

    fn label_string(&self, label: &W::Label) -> String {
        self.w.label_string(label)
    }
}

impl<W: GlModule> fmt::Debug for TwistedModule<W> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "TwistedModule(μ = {}, λ = {:?})",
            self.weight,
            self.lambda.to_strings()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gl::{all_units, basis_up_to_height, bracket_defect, SimpleModule};

    #[test]
    fn shifted_weight_and_brackets() {
        let w = SimpleModule::new(Weight::from_ints(&[1, 0]), 3);
        let t = TwistedModule::new(w, Lambda::from_ints(&[1, 2]).unwrap()).unwrap();
        assert_eq!(t.highest_weight(), &Weight::from_ints(&[-1, -2]));
        for l in basis_up_to_height(&t, 1).unwrap() {
            let v = HwVector::basis(l);
            for x in all_units(2) {
                for y in all_units(2) {
                    assert!(bracket_defect(&t, x, y, &v).unwrap().is_zero());
                }
            }
        }
    }
}
