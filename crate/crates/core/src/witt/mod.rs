//! Witt algebra `W_m`, the embeddings of sl(m+1) into it, and the tensor
//! modules `F(Ω(λ), W)`.

mod iso;
mod omega;
mod tensor;
mod twist;

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::gvm::{decompose, Part, SlElement, SlGenerator};
use crate::lincomb::LinComb;
use crate::rational::{format_rational, int, parse_rational, Rational};

pub use iso::{iso_map, iso_verify, tensor_simplicity, GeneratorReport, IsoReport};
pub use omega::{omega_act, omega_eval, KmGenerator, OmegaPoly};
pub use tensor::{SPrimeGenerator, TensorModule, TensorVector};
pub use twist::TwistedModule;

/// `λ ∈ (ℚ*)^m`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Lambda(Vec<Rational>);

impl Lambda {
    pub fn new(entries: Vec<Rational>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::domain("lambda needs at least one entry"));
        }
        if entries.iter().any(|x| x.is_zero()) {
            return Err(Error::domain("lambda entries must be nonzero"));
        }
        Ok(Self(entries))
    }

    pub fn from_ints(entries: &[i64]) -> Result<Self> {
        Self::new(entries.iter().map(|&x| int(x)).collect())
    }

    pub fn parse<S: AsRef<str>>(entries: &[S]) -> Result<Self> {
        Self::new(
            entries
                .iter()
                .map(|s| parse_rational(s.as_ref()))
                .collect::<Result<_>>()?,
        )
    }

    pub fn ones(m: usize) -> Self {
        Self(vec![Rational::one(); m])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// 1-based.
    pub fn get(&self, i: usize) -> &Rational {
        &self.0[i - 1]
    }

    /// `λ_i^{-1} λ_j`.
    pub fn ratio(&self, i: usize, j: usize) -> Rational {
        self.get(j) / self.get(i)
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(format_rational).collect()
    }
}

impl fmt::Debug for Lambda {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_strings().join(", "))
    }
}

/// Symbol `t^α ∂_i` with `α ∈ Z^m`, `i` 1-based.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WittTerm {
    pub alpha: Vec<i64>,
    pub dir: usize,
}

impl WittTerm {
    pub fn new(alpha: Vec<i64>, dir: usize) -> Self {
        Self { alpha, dir }
    }

    /// `∂_i`.
    pub fn partial(m: usize, i: usize) -> Self {
        Self::new(vec![0; m], i)
    }

    /// `t^{e_k} ∂_i`.
    pub fn linear(m: usize, k: usize, i: usize) -> Self {
        let mut alpha = vec![0; m];
        alpha[k - 1] = 1;
        Self::new(alpha, i)
    }

    /// `t^{e_k + e_s} ∂_i`.
    pub fn quadratic(m: usize, k: usize, s: usize, i: usize) -> Self {
        let mut alpha = vec![0; m];
        alpha[k - 1] += 1;
        alpha[s - 1] += 1;
        Self::new(alpha, i)
    }
}

impl fmt::Debug for WittTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<_> = self.alpha.iter().map(|a| a.to_string()).collect();
        write!(f, "t^({})∂_{}", parts.join(","), self.dir)
    }
}

pub type WittElement = LinComb<WittTerm>;

/// `[t^α ∂_i, t^β ∂_j] = β_i t^{α+β-e_i} ∂_j - α_j t^{α+β-e_j} ∂_i`.
pub fn witt_bracket_terms(a: &WittTerm, b: &WittTerm) -> WittElement {
    let mut out = WittElement::zero();
    let sum: Vec<i64> = a.alpha.iter().zip(&b.alpha).map(|(x, y)| x + y).collect();
    let bi = b.alpha[a.dir - 1];
    if bi != 0 {
        let mut g = sum.clone();
        g[a.dir - 1] -= 1;
        out.add_term(WittTerm::new(g, b.dir), int(bi));
    }
    let aj = a.alpha[b.dir - 1];
    if aj != 0 {
        let mut g = sum;
        g[b.dir - 1] -= 1;
        out.add_term(WittTerm::new(g, a.dir), int(-aj));
    }
    out
}

pub fn witt_bracket(x: &WittElement, y: &WittElement) -> WittElement {
    let mut out = WittElement::zero();
    for (a, ca) in x {
        for (b, cb) in y {
            out.add_scaled(&witt_bracket_terms(a, b), &(ca * cb));
        }
    }
    out
}

/// `d = Σ_s t_s ∂_s`.
pub fn euler(m: usize) -> WittElement {
    (1..=m)
        .map(|s| (WittTerm::linear(m, s, s), Rational::one()))
        .collect()
}

/// `t_i d = Σ_s t_i t_s ∂_s`.
fn t_times_euler(m: usize, i: usize) -> WittElement {
    (1..=m)
        .map(|s| (WittTerm::quadratic(m, i, s, s), Rational::one()))
        .collect()
}

/// The standard embedding `E_{i,j} ↦ t_i ∂_j`, `E_{m+1,i} ↦ -∂_i`,
/// `E_{i,m+1} ↦ t_i d`, `E_{i,i} - E_{m+1,m+1} ↦ d + t_i ∂_i`.
pub fn embed_standard(m: usize, g: &SlElement) -> Result<WittElement> {
    let mut out = WittElement::zero();
    for (part, c) in decompose(m, g)? {
        let img = match part {
            Part::Levi(u) if u.i != u.j => WittElement::basis(WittTerm::linear(m, u.i, u.j)),
            Part::Levi(u) => {
                let mut e = euler(m);
                e.add_term(WittTerm::linear(m, u.i, u.i), Rational::one());
                e
            }
            Part::Up(i) => t_times_euler(m, i),
            Part::Down(i) => WittElement::term(WittTerm::partial(m, i), -Rational::one()),
        };
        out.add_scaled(&img, &c);
    }
    Ok(out)
}

/// `L_i = λ_i^{-1} t_i d - d - Σ_s (λ_s λ_i^{-1} t_i ∂_s - λ_s ∂_s)`.
pub fn l_element(lambda: &Lambda, i: usize) -> WittElement {
    let m = lambda.len();
    let inv = lambda.get(i).recip();
    let mut out = t_times_euler(m, i).scaled(&inv);
    out.sub_assign(&euler(m));
    for s in 1..=m {
        out.add_term(WittTerm::linear(m, i, s), -(lambda.get(s) * &inv));
        out.add_term(WittTerm::partial(m, s), lambda.get(s).clone());
    }
    out
}

/// The isomorphism `σ_λ` of sl(m+1) onto the image of the standard embedding.
pub fn sigma_lambda(lambda: &Lambda, g: &SlElement) -> Result<WittElement> {
    let m = lambda.len();
    let mut out = WittElement::zero();
    for (part, c) in decompose(m, g)? {
        let img = match part {
            Part::Levi(u) if u.i != u.j => {
                let (i, j) = (u.i, u.j);
                let mut e = WittElement::term(WittTerm::linear(m, i, j), lambda.ratio(i, j));
                e.add_term(WittTerm::partial(m, j), -lambda.get(j).clone());
                e
            }
            Part::Levi(u) => {
                let mut e = WittElement::zero();
                for s in (1..=m).chain(std::iter::once(u.i)) {
                    e.add_term(WittTerm::linear(m, s, s), Rational::one());
                    e.add_term(WittTerm::partial(m, s), -lambda.get(s).clone());
                }
                e
            }
            Part::Up(i) => l_element(lambda, i),
            Part::Down(i) => WittElement::term(WittTerm::partial(m, i), -lambda.get(i).clone()),
        };
        out.add_scaled(&img, &c);
    }
    Ok(out)
}

/// Generators `g, h` of sl(m+1) for which `[φ(g), φ(h)] ≠ φ([g, h])`.
pub fn homomorphism_defects(
    m: usize,
    phi: impl Fn(&SlElement) -> Result<WittElement>,
) -> Result<Vec<(SlGenerator, SlGenerator)>> {
    let gens = SlGenerator::basis(m);
    let images: Vec<WittElement> = gens
        .iter()
        .map(|g| phi(&g.element()))
        .collect::<Result<_>>()?;
    let mut bad = Vec::new();
    for (a, ga) in gens.iter().enumerate() {
        for (b, gb) in gens.iter().enumerate() {
            let lhs = witt_bracket(&images[a], &images[b]);
            let rhs = phi(&crate::gvm::sl_bracket(&ga.element(), &gb.element()))?;
            if lhs != rhs {
                bad.push((*ga, *gb));
            }
        }
    }
    Ok(bad)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    #[test]
    fn embedding_images() {
        let m = 2;
        let e12 = SlGenerator::unit(1, 2).element();
        assert_eq!(
            embed_standard(m, &e12).unwrap(),
            WittElement::basis(WittTerm::linear(2, 1, 2))
        );
        let e31 = SlGenerator::unit(3, 1).element();
        assert_eq!(
            embed_standard(m, &e31).unwrap(),
            WittElement::term(WittTerm::partial(2, 1), int(-1))
        );
        let up = embed_standard(m, &SlGenerator::unit(1, 3).element()).unwrap();
        let down = embed_standard(m, &e31).unwrap();
        let h = embed_standard(m, &SlGenerator::Cartan(1, 3).element()).unwrap();
        assert_eq!(witt_bracket(&up, &down), h);
    }

    #[test]
    fn sigma_images() {
        let ones = Lambda::ones(3);
        for i in 1..=3 {
            let g = SlGenerator::unit(4, i).element();
            assert_eq!(
                sigma_lambda(&ones, &g).unwrap(),
                embed_standard(3, &g).unwrap()
            );
        }
        let lam = Lambda::from_ints(&[1, 2]).unwrap();
        let mut expected = WittElement::term(WittTerm::linear(2, 1, 2), int(2));
        expected.add_term(WittTerm::partial(2, 2), int(-2));
        assert_eq!(
            sigma_lambda(&lam, &SlGenerator::unit(1, 2).element()).unwrap(),
            expected
        );
        for i in 1..=2 {
            let down = sigma_lambda(&lam, &SlGenerator::unit(3, i).element()).unwrap();
            let up = sigma_lambda(&lam, &SlGenerator::unit(i, 3).element()).unwrap();
            let h = sigma_lambda(&lam, &SlGenerator::Cartan(i, 3).element()).unwrap();
            assert_eq!(witt_bracket(&down, &up), h.scaled(&int(-1)));
        }
    }

    #[test]
    fn both_maps_are_homomorphisms() {
        for m in 1..=3 {
            assert!(homomorphism_defects(m, |g| embed_standard(m, g))
                .unwrap()
                .is_empty());
            let lam = Lambda::new(
                (1..=m)
                    .map(|k| frac(2 * k as i64 - 5, k as i64 + 1))
                    .collect(),
            )
            .unwrap();
            assert!(homomorphism_defects(m, |g| sigma_lambda(&lam, g))
                .unwrap()
                .is_empty());
        }
    }

    #[test]
    fn lambda_rejects_zero() {
        assert!(Lambda::from_ints(&[1, 0]).is_err());
    }
}
