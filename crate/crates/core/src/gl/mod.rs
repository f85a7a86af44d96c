//! gl(m): matrix units, brackets, and the module interface shared by every
//! realization of a highest-weight module.

mod band;
mod simple;
mod verma;
mod weyl;

use std::fmt;

use num_traits::One;

use crate::error::{Error, Result};
use crate::lincomb::LinComb;
use crate::rational::{int, Rational};
use crate::weight::{drop_height, is_positive_drop, Weight, WeightDrop};

pub use band::{band_basis, band_embed, BandLabel, BandModule};
pub use simple::{shapovalov_gram, simple_weight_basis, SimpleModule};
pub use verma::{verma_basis, NegativeRoots, PbwMonomial, VermaModule};
pub use weyl::weyl_dimension;

/// Matrix unit `E_{i,j}`, indices 1-based. In gl(m) a diagonal unit is a
/// Cartan generator; in sl(m+1) diagonal units only occur in traceless
/// combinations.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MatrixUnit {
    pub i: usize,
    pub j: usize,
}

impl MatrixUnit {
    pub const fn new(i: usize, j: usize) -> Self {
        Self { i, j }
    }

    pub fn is_cartan(&self) -> bool {
        self.i == self.j
    }

    pub fn is_raising(&self) -> bool {
        self.i < self.j
    }

    pub fn is_lowering(&self) -> bool {
        self.i > self.j
    }

    pub fn transpose(&self) -> Self {
        Self::new(self.j, self.i)
    }

    pub fn check_range(&self, m: usize) -> Result<()> {
        if self.i == 0 || self.j == 0 || self.i > m || self.j > m {
            return Err(Error::domain(format!("{self} has an index outside 1..{m}")));
        }
        Ok(())
    }

    /// Drop of `E_{i,j}·x` given the drop of `x`: the weight moves by `e_i - e_j`.
    pub fn shift_drop(&self, drop: &[i64]) -> WeightDrop {
        let mut out = drop.to_vec();
        out[self.i - 1] -= 1;
        out[self.j - 1] += 1;
        out
    }
}

impl fmt::Display for MatrixUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E_{{{},{}}}", self.i, self.j)
    }
}

impl fmt::Debug for MatrixUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Linear combination of matrix units.
pub type MatrixElement = LinComb<MatrixUnit>;

/// `[E_{i,j}, E_{k,l}] = δ_{j,k} E_{i,l} - δ_{l,i} E_{k,j}`.
pub fn bracket_units(a: MatrixUnit, b: MatrixUnit) -> MatrixElement {
    let mut out = MatrixElement::zero();
    if a.j == b.i {
        out.add_term(MatrixUnit::new(a.i, b.j), Rational::one());
    }
    if b.j == a.i {
        out.add_term(MatrixUnit::new(b.i, a.j), -Rational::one());
    }
    out
}

pub fn bracket(x: &MatrixElement, y: &MatrixElement) -> MatrixElement {
    let mut out = MatrixElement::zero();
    for (a, ca) in x {
        for (b, cb) in y {
            out.add_scaled(&bracket_units(*a, *b), &(ca * cb));
        }
    }
    out
}

/// Every matrix unit of gl(m), row-major.
pub fn all_units(m: usize) -> Vec<MatrixUnit> {
    (1..=m)
        .flat_map(|i| (1..=m).map(move |j| MatrixUnit::new(i, j)))
        .collect()
}

/// Vector of a module, as a combination of the realization's basis labels.
pub type HwVector<L> = LinComb<L>;

/// A weight module over gl(m) generated by a highest-weight vector and
/// realized at bounded height.
///
/// Labels index a basis; each label sits in a single weight space, recorded
/// by its drop `μ - weight`.
pub trait GlModule: Sync {
    type Label: Ord + Clone + fmt::Debug + Send + Sync;

    /// Short name used in error messages.
    fn realization(&self) -> &'static str;

    fn rank(&self) -> usize;

    fn highest_weight(&self) -> &Weight;

    fn highest_label(&self) -> Self::Label;

    /// Largest drop height the realization serves.
    fn cutoff(&self) -> usize;

    fn drop_of(&self, label: &Self::Label) -> WeightDrop;

    /// Basis of the weight space `μ - drop`; empty when that space vanishes.
    fn weight_basis(&self, drop: &[i64]) -> Result<Vec<Self::Label>>;

    fn act_unit(&self, g: MatrixUnit, label: &Self::Label) -> Result<HwVector<Self::Label>>;

    fn label_string(&self, label: &Self::Label) -> String;

    fn highest_vector(&self) -> HwVector<Self::Label> {
        LinComb::basis(self.highest_label())
    }

    fn act(&self, g: MatrixUnit, x: &HwVector<Self::Label>) -> Result<HwVector<Self::Label>> {
        let mut out = LinComb::zero();
        for (label, c) in x {
            out.add_scaled(&self.act_unit(g, label)?, c);
        }
        Ok(out)
    }

    fn act_element(
        &self,
        g: &MatrixElement,
        x: &HwVector<Self::Label>,
    ) -> Result<HwVector<Self::Label>> {
        let mut out = LinComb::zero();
        for (unit, c) in g {
            out.add_scaled(&self.act(*unit, x)?, c);
        }
        Ok(out)
    }

    /// Eigenvalue of `E_{k,k}` on the weight space `μ - drop`.
    fn cartan_eigenvalue(&self, k: usize, drop: &[i64]) -> Rational {
        self.highest_weight().get(k) - int(drop[k - 1])
    }

    /// Zero space, out-of-cutoff and normal cases for a target drop.
    fn classify_drop(&self, drop: &[i64]) -> Result<bool> {
        if !is_positive_drop(drop) {
            return Ok(false);
        }
        let h = drop_height(drop);
        if h as usize > self.cutoff() {
            return Err(Error::Truncation {
                what: format!("{} weight space at height {h}", self.realization()),
                cutoff: self.cutoff(),
            });
        }
        Ok(true)
    }

    /// Readable rendering `c·label + ...`.
    fn render(&self, x: &HwVector<Self::Label>) -> String {
        if x.is_zero() {
            return "0".into();
        }
        x.iter()
            .map(|(l, c)| {
                format!(
                    "({})·{}",
                    crate::rational::format_rational(c),
                    self.label_string(l)
                )
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// `x·(y·v) - y·(x·v) - [x,y]·v`, zero whenever the module structure is sound.
pub fn bracket_defect<M: GlModule>(
    module: &M,
    x: MatrixUnit,
    y: MatrixUnit,
    v: &HwVector<M::Label>,
) -> Result<HwVector<M::Label>> {
    let xy = module.act(x, &module.act(y, v)?)?;
    let yx = module.act(y, &module.act(x, v)?)?;
    let br = module.act_element(&bracket_units(x, y), v)?;
    let mut out = xy;
    out.sub_assign(&yx);
    out.sub_assign(&br);
    Ok(out)
}

/// Basis labels of every weight space up to the given drop height.
pub fn basis_up_to_height<M: GlModule>(module: &M, h: usize) -> Result<Vec<M::Label>> {
    let mut out = Vec::new();
    for drop in crate::weight::drops_up_to_height(module.rank(), h) {
        out.extend(module.weight_basis(&drop)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_brackets() {
        let e12 = MatrixUnit::new(1, 2);
        let e21 = MatrixUnit::new(2, 1);
        let h = bracket_units(e12, e21);
        assert_eq!(h.coeff(&MatrixUnit::new(1, 1)), int(1));
        assert_eq!(h.coeff(&MatrixUnit::new(2, 2)), int(-1));
        assert!(bracket_units(e12, e12).is_zero());
        assert!(bracket_units(MatrixUnit::new(1, 1), MatrixUnit::new(1, 1)).is_zero());
    }

    #[test]
    fn jacobi_on_units() {
        let units = all_units(3);
        for &a in &units {
            for &b in &units {
                for &c in &units {
                    let ea = MatrixElement::basis(a);
                    let eb = MatrixElement::basis(b);
                    let ec = MatrixElement::basis(c);
                    let mut s = bracket(&ea, &bracket(&eb, &ec));
                    s.add_assign(&bracket(&eb, &bracket(&ec, &ea)));
                    s.add_assign(&bracket(&ec, &bracket(&ea, &eb)));
                    assert!(s.is_zero());
                }
            }
        }
    }

    #[test]
    fn drop_shift() {
        assert_eq!(MatrixUnit::new(2, 1).shift_drop(&[0, 0]), vec![1, -1]);
        assert_eq!(MatrixUnit::new(1, 2).shift_drop(&[1, -1]), vec![0, 0]);
    }
}
