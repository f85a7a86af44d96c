//! Generalized Verma module `M_p(V) = U(u⁻) ⊗ V` over sl(m+1), where the
//! Levi factor is identified with gl(m) through
//! `E_{i,j} ↦ E_{i,j}` and `E_{i,i} ↦ E_{i,i} - E_{m+1,m+1}`.

mod criterion;
mod search;
mod singular;
mod structure;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::gl::{bracket, GlModule, HwVector, MatrixUnit};
use crate::lincomb::LinComb;
use crate::multi_index::MultiIndex;
use crate::rational::{int, Rational};
use crate::weight::Weight;

pub use criterion::{simplicity_criterion, SimplicityVerdict};
pub use search::{singular_search, SearchResult, SingularLine};
pub use singular::{
    build_singular_case1, build_singular_case1_band, build_singular_case2, embed_gvm,
};
pub use structure::structural_checks;

/// Element of sl(m+1) as a combination of gl(m+1) matrix units with zero trace.
pub type SlElement = LinComb<MatrixUnit>;

/// `Σ Y_α ⊗ u(α)`, stored as a combination of pairs `(α, label of V)`.
pub type GvmVector<L> = LinComb<(MultiIndex, L)>;

/// Standard generators of sl(m+1).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SlGenerator {
    /// `E_{k,l}` with `k ≠ l`.
    Unit(MatrixUnit),
    /// `E_{i,i} - E_{j,j}`.
    Cartan(usize, usize),
}

impl SlGenerator {
    pub fn unit(k: usize, l: usize) -> Self {
        SlGenerator::Unit(MatrixUnit::new(k, l))
    }

    pub fn element(&self) -> SlElement {
        match *self {
            SlGenerator::Unit(u) => LinComb::basis(u),
            SlGenerator::Cartan(i, j) => {
                let mut out = LinComb::basis(MatrixUnit::new(i, i));
                out.add_term(MatrixUnit::new(j, j), -Rational::one());
                out
            }
        }
    }

    pub fn check(&self, m: usize) -> Result<()> {
        let n = m + 1;
        let ok = match *self {
            SlGenerator::Unit(u) => u.i != u.j && u.check_range(n).is_ok(),
            SlGenerator::Cartan(i, j) => i != j && (1..=n).contains(&i) && (1..=n).contains(&j),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::domain(format!(
                "{self} is not a generator of sl({n})"
            )))
        }
    }

    /// Off-diagonal units and `E_{i,i} - E_{m+1,m+1}`, `i = 1..m`.
    pub fn basis(m: usize) -> Vec<SlGenerator> {
        let n = m + 1;
        let mut out = Vec::new();
        for k in 1..=n {
            for l in 1..=n {
                if k != l {
                    out.push(Self::unit(k, l));
                }
            }
        }
        out.extend((1..=m).map(|i| SlGenerator::Cartan(i, n)));
        out
    }

    /// `E_{1,2}, ..., E_{m-1,m}, E_{m,m+1}`.
    pub fn simple_raising(m: usize) -> Vec<SlGenerator> {
        (1..=m).map(|i| Self::unit(i, i + 1)).collect()
    }
}

impl fmt::Display for SlGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SlGenerator::Unit(u) => write!(f, "{u}"),
            SlGenerator::Cartan(i, j) => write!(f, "E_{{{i},{i}}}-E_{{{j},{j}}}"),
        }
    }
}

impl fmt::Debug for SlGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub fn sl_bracket(x: &SlElement, y: &SlElement) -> SlElement {
    bracket(x, y)
}

/// Generators split by their role with respect to `p = l ⊕ u`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Part {
    /// Levi element; a diagonal unit `E_{i,i}` stands for `E_{i,i} - E_{m+1,m+1}`.
    Levi(MatrixUnit),
    /// `E_{i,m+1}`.
    Up(usize),
    /// `E_{m+1,i}`.
    Down(usize),
}

pub(crate) fn decompose(m: usize, g: &SlElement) -> Result<Vec<(Part, Rational)>> {
    let n = m + 1;
    let mut out = Vec::new();
    let mut trace = Rational::zero();
    for (u, c) in g {
        u.check_range(n)?;
        if u.i == u.j {
            trace += c;
            if u.i <= m {
                out.push((Part::Levi(*u), c.clone()));
            }
        } else if u.j == n {
            out.push((Part::Up(u.i), c.clone()));
        } else if u.i == n {
            out.push((Part::Down(u.j), c.clone()));
        } else {
            out.push((Part::Levi(*u), c.clone()));
        }
    }
    if !trace.is_zero() {
        return Err(Error::domain("element is not traceless"));
    }
    Ok(out)
}

/// `M_p(V)` for a highest-weight gl(m)-module `V`.
pub struct GvmModule<V: GlModule> {
    v: V,
}

impl<V: GlModule> GvmModule<V> {
    pub fn new(v: V) -> Self {
        Self { v }
    }

    pub fn inner(&self) -> &V {
        &self.v
    }

    pub fn rank(&self) -> usize {
        self.v.rank()
    }

    pub fn highest_weight(&self) -> &Weight {
        self.v.highest_weight()
    }

    /// `Y_α ⊗ v_μ`.
    pub fn y_top(&self, alpha: MultiIndex) -> GvmVector<V::Label> {
        LinComb::basis((alpha, self.v.highest_label()))
    }

    /// `Y_α ⊗ x`.
    pub fn tensor(&self, alpha: &MultiIndex, x: &HwVector<V::Label>) -> GvmVector<V::Label> {
        x.map_keys(|l| (alpha.clone(), l.clone()))
    }

    /// sl(m+1)-weight of `Y_α ⊗ v` for `v` in the weight space of `label`.
    pub fn weight_of(&self, alpha: &MultiIndex, label: &V::Label) -> Weight {
        let beta: Vec<i64> = self.v.drop_of(label).iter().map(|d| -d).collect();
        gvm_weight_unchecked(self.highest_weight(), alpha, &beta)
    }

    /// Action through the closed forms on `Y_α ⊗ v`.
    pub fn act(&self, g: &SlElement, x: &GvmVector<V::Label>) -> Result<GvmVector<V::Label>> {
        let parts = decompose(self.rank(), g)?;
        let mut out = LinComb::zero();
        for ((alpha, label), c) in x {
            for (part, pc) in &parts {
                let img = self.act_part(*part, alpha, label)?;
                out.add_scaled(&img, &(c * pc));
            }
        }
        Ok(out)
    }

    pub fn act_gen(&self, g: SlGenerator, x: &GvmVector<V::Label>) -> Result<GvmVector<V::Label>> {
        g.check(self.rank())?;
        self.act(&g.element(), x)
    }

    fn act_part(
        &self,
        part: Part,
        alpha: &MultiIndex,
        label: &V::Label,
    ) -> Result<GvmVector<V::Label>> {
        let mut out = LinComb::zero();
        let deg = alpha.degree() as i64;
        match part {
            Part::Levi(u) if u.i != u.j => {
                let ai = alpha.get(u.i);
                if ai > 0 {
                    let shifted = alpha.minus(u.i).unwrap().plus(u.j);
                    out.add_term((shifted, label.clone()), -int(ai as i64));
                }
                let ev = self.v.act_unit(u, label)?;
                out.add_assign(&self.tensor(alpha, &ev));
            }
            Part::Levi(u) => {
                let coeff = -int(alpha.get(u.i) as i64 + deg);
                out.add_term((alpha.clone(), label.clone()), coeff);
                let ev = self.v.act_unit(u, label)?;
                out.add_assign(&self.tensor(alpha, &ev));
            }
            Part::Down(i) => {
                out.add_term((alpha.plus(i), label.clone()), Rational::one());
            }
            Part::Up(i) => {
                let ai = alpha.get(i) as i64;
                if ai > 0 {
                    let lower = alpha.minus(i).unwrap();
                    out.add_term((lower.clone(), label.clone()), int(ai * (1 - deg)));
                    let ev = self.v.act_unit(MatrixUnit::new(i, i), label)?;
                    out.add_scaled(&self.tensor(&lower, &ev), &int(ai));
                }
                for j in 1..=self.rank() {
                    let aj = alpha.get(j) as i64;
                    if j == i || aj == 0 {
                        continue;
                    }
                    let lower = alpha.minus(j).unwrap();
                    let ev = self.v.act_unit(MatrixUnit::new(i, j), label)?;
                    out.add_scaled(&self.tensor(&lower, &ev), &int(aj));
                }
            }
        }
        Ok(out)
    }

    /// Action computed by commuting `g` past the factors `E_{m+1,s}` of `Y_α`
    /// one at a time, with only the sl(m+1) bracket and the Levi action on `V`.
    pub fn act_oracle(
        &self,
        g: &SlElement,
        x: &GvmVector<V::Label>,
    ) -> Result<GvmVector<V::Label>> {
        let mut out = LinComb::zero();
        for ((alpha, label), c) in x {
            out.add_scaled(&self.oracle_basis(g, alpha, label)?, c);
        }
        Ok(out)
    }

    fn oracle_basis(
        &self,
        g: &SlElement,
        alpha: &MultiIndex,
        label: &V::Label,
    ) -> Result<GvmVector<V::Label>> {
        let m = self.rank();
        let mut out = LinComb::zero();
        if alpha.degree() == 0 {
            for (part, c) in decompose(m, g)? {
                match part {
                    Part::Levi(u) => {
                        let ev = self.v.act_unit(u, label)?;
                        out.add_scaled(&self.tensor(alpha, &ev), &c);
                    }
                    Part::Up(_) => {}
                    Part::Down(i) => out.add_term((alpha.plus(i), label.clone()), c),
                }
            }
            return Ok(out);
        }
        let s = (1..=m).find(|&s| alpha.get(s) > 0).unwrap();
        let rest = alpha.minus(s).unwrap();
        let f = LinComb::basis(MatrixUnit::new(m + 1, s));
        // g F Y' = F (g Y') + [g, F] Y'
        for ((beta, l), c) in &self.oracle_basis(g, &rest, label)? {
            out.add_term((beta.plus(s), l.clone()), c.clone());
        }
        let br = bracket(g, &f);
        if !br.is_zero() {
            out.add_assign(&self.oracle_basis(&br, &rest, label)?);
        }
        Ok(out)
    }

    /// `(α_x, x(α_x))` for the ≺-maximal exponent in the support.
    pub fn leading_term(
        &self,
        x: &GvmVector<V::Label>,
    ) -> Result<(MultiIndex, HwVector<V::Label>)> {
        leading_term(x)
    }

    /// Common weight of a homogeneous vector.
    pub fn homogeneous_weight(&self, x: &GvmVector<V::Label>) -> Result<Weight> {
        let mut keys = x.keys();
        let (a0, l0) = keys
            .next()
            .ok_or_else(|| Error::domain("zero vector has no weight"))?;
        let w = self.weight_of(a0, l0);
        for (a, l) in keys {
            if self.weight_of(a, l) != w {
                return Err(Error::domain("vector is not weight-homogeneous"));
            }
        }
        Ok(w)
    }

    /// Images under the simple raising operators that fail to vanish.
    pub fn raising_defects(
        &self,
        x: &GvmVector<V::Label>,
    ) -> Result<Vec<(SlGenerator, GvmVector<V::Label>)>> {
        let mut out = Vec::new();
        for g in SlGenerator::simple_raising(self.rank()) {
            let img = self.act_gen(g, x)?;
            if !img.is_zero() {
                out.push((g, img));
            }
        }
        Ok(out)
    }

    /// Nonzero, weight-homogeneous and killed by every simple raising operator.
    pub fn is_highest_weight(&self, x: &GvmVector<V::Label>) -> Result<bool> {
        if x.is_zero() {
            return Err(Error::domain("zero vector"));
        }
        self.homogeneous_weight(x)?;
        Ok(self.raising_defects(x)?.is_empty())
    }

    pub fn render(&self, x: &GvmVector<V::Label>) -> String {
        if x.is_zero() {
            return "0".into();
        }
        group_by_exponent(x)
            .iter()
            .map(|(alpha, hw)| format!("Y_{alpha}⊗[{}]", self.v.render(hw)))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Components `u(α)` keyed by `α`, in ≺ order.
pub fn group_by_exponent<L: Ord + Clone>(x: &GvmVector<L>) -> BTreeMap<MultiIndex, HwVector<L>> {
    let mut out: BTreeMap<MultiIndex, HwVector<L>> = BTreeMap::new();
    for ((alpha, l), c) in x {
        out.entry(alpha.clone())
            .or_default()
            .add_term(l.clone(), c.clone());
    }
    out
}

pub fn leading_term<L: Ord + Clone>(x: &GvmVector<L>) -> Result<(MultiIndex, HwVector<L>)> {
    let ((top, _), _) = x
        .max_term()
        .ok_or_else(|| Error::domain("leading term of the zero vector"))?;
    let top = top.clone();
    let comp = x
        .iter()
        .filter(|((a, _), _)| *a == top)
        .map(|((_, l), c)| (l.clone(), c.clone()))
        .collect();
    Ok((top, comp))
}

fn gvm_weight_unchecked(mu: &Weight, alpha: &MultiIndex, beta: &[i64]) -> Weight {
    let deg = alpha.degree() as i64;
    let entries = (1..=mu.len())
        .map(|i| mu.get(i) + int(beta[i - 1] - alpha.get(i) as i64 - deg))
        .collect();
    Weight::new(entries).expect("weight of positive length")
}

/// Eigenvalues of `E_{i,i} - E_{m+1,m+1}` on `Y_α ⊗ V_{μ+β}`.
pub fn gvm_weight(mu: &Weight, alpha: &MultiIndex, beta: &[i64]) -> Result<Weight> {
    if alpha.len() != mu.len() || beta.len() != mu.len() {
        return Err(Error::Dimension {
            expected: mu.len(),
            found: if alpha.len() != mu.len() {
                alpha.len()
            } else {
                beta.len()
            },
        });
    }
    if beta.iter().sum::<i64>() != 0 {
        return Err(Error::domain(
            "weights of V differ from mu by |beta| = 0 shifts only",
        ));
    }
    Ok(gvm_weight_unchecked(mu, alpha, beta))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gl::{SimpleModule, VermaModule};
    use crate::rational::frac;
    use proptest::prelude::*;

    fn mi(v: &[u32]) -> MultiIndex {
        MultiIndex::new(v.to_vec())
    }

    #[test]
    fn weights() {
        let mu = Weight::from_ints(&[0, 0]);
        assert_eq!(gvm_weight(&mu, &mi(&[0, 0]), &[0, 0]).unwrap(), mu);
        assert_eq!(
            gvm_weight(&mu, &mi(&[0, 1]), &[0, 0]).unwrap(),
            Weight::from_ints(&[-1, -2])
        );
        assert!(gvm_weight(&mu, &mi(&[0, 1]), &[1, 0]).is_err());
    }

    #[test]
    fn closed_form_examples() {
        let mu = Weight::new(vec![frac(3, 7), frac(-5, 2)]).unwrap();
        let gvm = GvmModule::new(SimpleModule::new(mu.clone(), 4));
        let x = gvm.y_top(mi(&[1, 0]));
        let out = gvm.act_gen(SlGenerator::unit(3, 1), &x).unwrap();
        assert_eq!(out, gvm.y_top(mi(&[2, 0])));
        let out = gvm.act_gen(SlGenerator::unit(1, 3), &x).unwrap();
        assert_eq!(out, gvm.y_top(mi(&[0, 0])).scaled(mu.get(1)));
        let out = gvm.act_gen(SlGenerator::unit(1, 2), &x).unwrap();
        assert_eq!(out, gvm.y_top(mi(&[0, 1])).scaled(&int(-1)));
    }

    #[test]
    fn leading_terms() {
        let gvm = GvmModule::new(SimpleModule::new(Weight::from_ints(&[0, 0]), 2));
        let mut x = gvm.y_top(mi(&[1, 0]));
        x.add_assign(&gvm.y_top(mi(&[0, 1])));
        let (a, c) = leading_term(&x).unwrap();
        assert_eq!(a, mi(&[1, 0]));
        assert_eq!(c, gvm.inner().highest_vector());
        let (a, _) = leading_term(&gvm.y_top(mi(&[0, 0]))).unwrap();
        assert_eq!(a, mi(&[0, 0]));
        let mut x = gvm.y_top(mi(&[0, 2]));
        x.add_assign(&gvm.y_top(mi(&[1, 1])).scaled(&int(3)));
        assert_eq!(leading_term(&x).unwrap().0, mi(&[1, 1]));
        assert!(leading_term(&GvmVector::<crate::gl::PbwMonomial>::zero()).is_err());
    }

    #[test]
    fn highest_weight_tests() {
        let gvm = GvmModule::new(SimpleModule::new(Weight::from_ints(&[1, 0]), 3));
        assert!(gvm.is_highest_weight(&gvm.y_top(mi(&[0, 0]))).unwrap());
        assert!(!gvm.is_highest_weight(&gvm.y_top(mi(&[1, 0]))).unwrap());
        let gvm = GvmModule::new(SimpleModule::new(Weight::from_ints(&[0, 0]), 3));
        assert!(gvm.is_highest_weight(&gvm.y_top(mi(&[0, 1]))).unwrap());
        let mut mixed = gvm.y_top(mi(&[0, 1]));
        mixed.add_assign(&gvm.y_top(mi(&[0, 0])));
        assert!(gvm.is_highest_weight(&mixed).is_err());
    }

    #[test]
    fn cartan_requires_trace_zero() {
        let gvm = GvmModule::new(SimpleModule::new(Weight::from_ints(&[0, 0]), 2));
        let bad = LinComb::basis(MatrixUnit::new(1, 1));
        assert!(gvm.act(&bad, &gvm.y_top(mi(&[0, 0]))).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(8))]
        #[test]
        fn closed_form_matches_oracle(n in prop::collection::vec(-5i64..5, 2), d in 1i64..4) {
            let mu = Weight::new(n.iter().map(|&x| frac(x, d)).collect()).unwrap();
            let gvm = GvmModule::new(VermaModule::new(mu, 6));
            for alpha in MultiIndex::all_up_to_degree(2, 2) {
                for drop in crate::weight::drops_up_to_height(2, 1) {
                    for l in gvm.inner().weight_basis(&drop).unwrap() {
                        let x = LinComb::basis((alpha.clone(), l));
                        for g in SlGenerator::basis(2) {
                            let e = g.element();
                            prop_assert_eq!(gvm.act(&e, &x).unwrap(), gvm.act_oracle(&e, &x).unwrap());
                        }
                    }
                }
            }
        }
    }
}
