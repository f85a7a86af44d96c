//! Simple quotient L(μ) = M(μ)/rad, via the contravariant form.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use num_traits::{One, Zero};

use super::verma::{PbwMonomial, VermaModule};
use super::{GlModule, HwVector, MatrixUnit};
use crate::error::{Error, Result};
use crate::linalg::RationalMatrix;
use crate::lincomb::LinComb;
use crate::rational::Rational;
use crate::weight::{Weight, WeightDrop};

struct QuotientSpace {
    index: HashMap<PbwMonomial, usize>,
    reps: Vec<PbwMonomial>,
    /// Rows: representatives; columns: Verma basis. Maps Verma coordinates
    /// to quotient coordinates.
    projection: RationalMatrix,
}

/// Monomials of one weight space with their Gram matrix.
type GramBlock = (Vec<PbwMonomial>, RationalMatrix);

/// `L(μ)` realized on pivot-monomial representatives, truncated at a drop
/// height.
pub struct SimpleModule {
    verma: VermaModule,
    grams: Mutex<HashMap<WeightDrop, Arc<GramBlock>>>,
    spaces: Mutex<HashMap<WeightDrop, Arc<QuotientSpace>>>,
}

impl SimpleModule {
    pub fn new(mu: Weight, cutoff: usize) -> Self {
        Self {
            verma: VermaModule::new(mu, cutoff),
            grams: Mutex::new(HashMap::new()),
            spaces: Mutex::new(HashMap::new()),
        }
    }

    pub fn verma(&self) -> &VermaModule {
        &self.verma
    }

    /// Verma basis of the weight space together with its Gram matrix.
    pub fn gram(&self, drop: &[i64]) -> Result<Arc<GramBlock>> {
        if let Some(hit) = self.grams.lock().unwrap().get(drop) {
            return Ok(hit.clone());
        }
        let basis = self.verma.weight_basis(drop)?;
        let n = basis.len();
        let mut g = RationalMatrix::zeros(n, n);
        if drop.iter().all(|&x| x == 0) {
            g.set(0, 0, Rational::one());
        } else {
            let roots = self.verma.roots();
            for (r, yr) in basis.iter().enumerate() {
                // <F_t Y', Y_s> = <Y', F_t^T Y_s>
                let t = yr.exponents().iter().rposition(|&a| a > 0).unwrap();
                let f = roots.root(t);
                let mut e = yr.exponents().to_vec();
                e[t] -= 1;
                let rest = PbwMonomial::from_exponents(e);
                let inner = self.gram(&rest.drop(roots))?;
                let (inner_basis, inner_g) = (&inner.0, &inner.1);
                let row = inner_basis.iter().position(|x| *x == rest).unwrap();
                for (s, ys) in basis.iter().enumerate() {
                    let raised = self.verma.act_unit(f.transpose(), ys)?;
                    let mut acc = Rational::zero();
                    for (z, c) in &raised {
                        let col = inner_basis.iter().position(|x| x == z).ok_or_else(|| {
                            Error::consistency("raised monomial outside its weight space")
                        })?;
                        acc += c * inner_g.get(row, col);
                    }
                    g.set(r, s, acc);
                }
            }
        }
        let entry = Arc::new((basis, g));
        self.grams
            .lock()
            .unwrap()
            .insert(drop.to_vec(), entry.clone());
        Ok(entry)
    }

    fn space(&self, drop: &[i64]) -> Result<Arc<QuotientSpace>> {
        if let Some(hit) = self.spaces.lock().unwrap().get(drop) {
            return Ok(hit.clone());
        }
        let gram = self.gram(drop)?;
        let (basis, g) = (&gram.0, &gram.1);
        let pivots = g.echelon().pivots;
        let projection = if pivots.is_empty() {
            RationalMatrix::zeros(0, basis.len())
        } else {
            let all: Vec<usize> = (0..basis.len()).collect();
            let inv = g
                .submatrix(&pivots, &pivots)
                .inverse()
                .ok_or_else(|| Error::consistency("pivot block of the Gram matrix is singular"))?;
            inv.mul(&g.submatrix(&pivots, &all))?
        };
        let space = Arc::new(QuotientSpace {
            index: basis
                .iter()
                .cloned()
                .enumerate()
                .map(|(i, b)| (b, i))
                .collect(),
            reps: pivots.iter().map(|&p| basis[p].clone()).collect(),
            projection,
        });
        self.spaces
            .lock()
            .unwrap()
            .insert(drop.to_vec(), space.clone());
        Ok(space)
    }

    /// Class in `L(μ)` of a Verma vector, written on representatives.
    pub fn project(&self, x: &HwVector<PbwMonomial>) -> Result<HwVector<PbwMonomial>> {
        let mut by_drop: HashMap<WeightDrop, Vec<(&PbwMonomial, &Rational)>> = HashMap::new();
        for (y, c) in x {
            by_drop
                .entry(y.drop(self.verma.roots()))
                .or_default()
                .push((y, c));
        }
        let mut out = LinComb::zero();
        for (drop, terms) in by_drop {
            let space = self.space(&drop)?;
            for (y, c) in terms {
                let col = space.index[y];
                for (r, rep) in space.reps.iter().enumerate() {
                    let q = space.projection.get(r, col);
                    if !q.is_zero() {
                        out.add_term(rep.clone(), c * q);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Class of `E_{i_1,j_1} ⋯ E_{i_k,j_k} v_μ`.
    pub fn word_vector(&self, word: &[MatrixUnit]) -> Result<HwVector<PbwMonomial>> {
        let mut v = self.highest_vector();
        for &g in word.iter().rev() {
            v = self.act(g, &v)?;
        }
        Ok(v)
    }
}

impl GlModule for SimpleModule {
    type Label = PbwMonomial;

    fn realization(&self) -> &'static str {
        "verma-quotient"
    }

    fn rank(&self) -> usize {
        self.verma.rank()
    }

    fn highest_weight(&self) -> &Weight {
        self.verma.highest_weight()
    }

    fn highest_label(&self) -> PbwMonomial {
        self.verma.highest_label()
    }

    fn cutoff(&self) -> usize {
        self.verma.cutoff()
    }

    fn drop_of(&self, label: &PbwMonomial) -> WeightDrop {
        self.verma.drop_of(label)
    }

    fn weight_basis(&self, drop: &[i64]) -> Result<Vec<PbwMonomial>> {
        if drop.len() != self.rank() {
            return Err(Error::Dimension {
                expected: self.rank(),
                found: drop.len(),
            });
        }
        if !self.classify_drop(drop)? {
            return Ok(Vec::new());
        }
        Ok(self.space(drop)?.reps.clone())
    }

    fn act_unit(&self, g: MatrixUnit, label: &PbwMonomial) -> Result<HwVector<PbwMonomial>> {
        let raw = self.verma.act_unit(g, label)?;
        self.project(&raw)
    }

    fn label_string(&self, label: &PbwMonomial) -> String {
        self.verma.label_string(label)
    }
}

impl fmt::Debug for SimpleModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "SimpleModule(μ = {}, cutoff = {})",
            self.highest_weight(),
            self.cutoff()
        )
    }
}

/// Gram matrix of the contravariant form on `M(μ)_{μ - drop}`, in the sorted
/// PBW basis.
pub fn shapovalov_gram(mu: &Weight, drop: &[i64], depth: usize) -> Result<RationalMatrix> {
    let module = SimpleModule::new(mu.clone(), depth);
    Ok(module.gram(drop)?.1.clone())
}

/// Representatives of a basis of `L(μ)_{μ - drop}`.
pub fn simple_weight_basis(mu: &Weight, drop: &[i64], depth: usize) -> Result<Vec<PbwMonomial>> {
    SimpleModule::new(mu.clone(), depth).weight_basis(drop)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gl::{all_units, bracket_defect, weyl_dimension};
    use crate::rational::{frac, int};
    use crate::weight::drops_up_to_height;

    #[test]
    fn gram_examples() {
        let mu = Weight::new(vec![frac(5, 2), frac(1, 3)]).unwrap();
        let g = shapovalov_gram(&mu, &[1, -1], 2).unwrap();
        assert_eq!(
            g,
            RationalMatrix::from_rows(vec![vec![frac(13, 6)]]).unwrap()
        );
        let g = shapovalov_gram(&Weight::from_ints(&[0, 0]), &[1, -1], 2).unwrap();
        assert_eq!(g, RationalMatrix::from_rows(vec![vec![int(0)]]).unwrap());
        let g = shapovalov_gram(&Weight::from_ints(&[4, 1, 7]), &[0, 0, 0], 2).unwrap();
        assert_eq!(g, RationalMatrix::identity(1));
    }

    #[test]
    fn gram_is_symmetric() {
        let mu = Weight::new(vec![frac(1, 2), int(3), frac(-2, 5)]).unwrap();
        for drop in drops_up_to_height(3, 3) {
            assert!(shapovalov_gram(&mu, &drop, 3).unwrap().is_symmetric());
        }
    }

    #[test]
    fn quotient_dimensions() {
        let zero = Weight::from_ints(&[0, 0]);
        assert!(simple_weight_basis(&zero, &[1, -1], 2).unwrap().is_empty());
        let vec_rep = Weight::from_ints(&[1, 0]);
        assert_eq!(simple_weight_basis(&vec_rep, &[1, -1], 2).unwrap().len(), 1);
        assert_eq!(simple_weight_basis(&vec_rep, &[2, -2], 2).unwrap().len(), 0);
        let band = Weight::from_ints(&[3, 1, 1]);
        assert_eq!(simple_weight_basis(&band, &[1, -1, 0], 2).unwrap().len(), 1);
    }

    #[test]
    fn finite_dimensional_totals() {
        for (mu, h) in [(vec![2, 1, 0], 4usize), (vec![1, 1, 0], 2), (vec![3, 0], 3)] {
            let w = Weight::from_ints(&mu);
            let module = SimpleModule::new(w.clone(), h + 1);
            let total: usize = drops_up_to_height(w.len(), h + 1)
                .iter()
                .map(|d| module.weight_basis(d).unwrap().len())
                .sum();
            assert_eq!(total as u64, weyl_dimension(&w).unwrap());
        }
    }

    #[test]
    fn quotient_brackets() {
        let mu = Weight::from_ints(&[2, 1, 1]);
        let module = SimpleModule::new(mu, 5);
        for drop in drops_up_to_height(3, 3) {
            for y in module.weight_basis(&drop).unwrap() {
                let y = LinComb::basis(y);
                for &a in &all_units(3) {
                    for &b in &all_units(3) {
                        assert!(bracket_defect(&module, a, b, &y).unwrap().is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn singular_monomial_vanishes() {
        let module = SimpleModule::new(Weight::from_ints(&[1, 0]), 3);
        let x = module
            .word_vector(&[MatrixUnit::new(2, 1), MatrixUnit::new(2, 1)])
            .unwrap();
        assert!(x.is_zero());
    }
}
