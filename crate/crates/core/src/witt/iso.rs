//! The isomorphism `M_p(W̃) → F(Ω(λ), W)` checked at finite degree, and the
//! simplicity criterion it transports.

use rayon::prelude::*;

use super::{
    embed_standard, homomorphism_defects, sigma_lambda, Lambda, SPrimeGenerator, TensorModule,
    TensorVector, TwistedModule,
};
use crate::error::{Error, Result};
use crate::gl::{basis_up_to_height, GlModule, SimpleModule};
use crate::gvm::{simplicity_criterion, GvmModule, GvmVector, SimplicityVerdict, SlGenerator};
use crate::lincomb::LinComb;
use crate::multi_index::MultiIndex;
use crate::rational::{int, Rational};
use crate::weight::{BlockProfile, Weight};

/// `Y_α ⊗ w ↦ (-1)^{|α|} X_α ⊗ w`; the map is its own inverse.
pub fn iso_map<L: Ord + Clone>(x: &GvmVector<L>) -> TensorVector<L> {
    let mut out = LinComb::zero();
    for ((alpha, l), c) in x {
        let c: Rational = if alpha.degree() % 2 == 0 {
            c.clone()
        } else {
            -c.clone()
        };
        out.add_term((alpha.clone(), l.clone()), c);
    }
    out
}

/// Per-generator outcome of the intertwining check.
#[derive(Clone, Debug)]
pub struct GeneratorReport {
    pub generator: SlGenerator,
    pub checked: usize,
    pub passed: bool,
    pub counterexample: Option<String>,
}

#[derive(Clone, Debug)]
pub struct IsoReport {
    pub mu_w: Weight,
    pub lambda: Lambda,
    /// Basis vectors `Y_α ⊗ w` with `|α| < degree` were tested.
    pub degree: u32,
    pub w_height: usize,
    pub generators: Vec<GeneratorReport>,
    pub sigma_homomorphism: bool,
    pub standard_homomorphism: bool,
    pub sprime_checked: usize,
    pub sprime_matches_pi: bool,
    pub truncated: Option<String>,
}

impl IsoReport {
    pub fn passed(&self) -> bool {
        self.truncated.is_none()
            && self.sigma_homomorphism
            && self.standard_homomorphism
            && self.sprime_matches_pi
            && self.generators.iter().all(|g| g.passed)
    }
}

/// Checks `f(g·x) = g·f(x)` for every sl(m+1) generator `g` and every
/// `x = Y_α ⊗ w` with `|α| < degree` and `w` of drop height at most `w_height`,
/// where `W = L(μ_W)` and sl(m+1) acts on `F(Ω(λ), W)` through `σ_λ`.
pub fn iso_verify(
    mu_w: &Weight,
    lambda: &Lambda,
    degree: u32,
    w_height: usize,
) -> Result<IsoReport> {
    let m = mu_w.len();
    if lambda.len() != m {
        return Err(Error::Dimension {
            expected: m,
            found: lambda.len(),
        });
    }
    let cutoff = w_height + m;
    let tensor = TensorModule::new(SimpleModule::new(mu_w.clone(), cutoff), lambda.clone())?;
    let twisted = TwistedModule::new(SimpleModule::new(mu_w.clone(), cutoff), lambda.clone())?;
    let gvm = GvmModule::new(twisted);

    let labels = basis_up_to_height(tensor.inner(), w_height)?;
    let exps = if degree == 0 {
        Vec::new()
    } else {
        MultiIndex::all_up_to_degree(m, degree - 1)
    };
    let basis: Vec<_> = exps
        .iter()
        .flat_map(|a| labels.iter().map(move |l| (a.clone(), l.clone())))
        .collect();

    let mut truncated = None;
    let outcomes: Vec<Result<GeneratorReport>> = SlGenerator::basis(m)
        .into_par_iter()
        .map(|g| {
            let e = g.element();
            let mut report = GeneratorReport {
                generator: g,
                checked: 0,
                passed: true,
                counterexample: None,
            };
            for key in &basis {
                let y = LinComb::basis(key.clone());
                let lhs = iso_map(&gvm.act(&e, &y)?);
                let rhs = tensor.sigma_act(&e, &iso_map(&y))?;
                report.checked += 1;
                if lhs != rhs {
                    report.passed = false;
                    report.counterexample = Some(format!(
                        "{g} on Y^{:?} ⊗ {}",
                        key.0.exps(),
                        tensor.inner().label_string(&key.1)
                    ));
                    break;
                }
            }
            Ok(report)
        })
        .collect();
    let mut generators = Vec::new();
    for r in outcomes {
        match r {
            Ok(r) => generators.push(r),
            Err(e) if e.is_truncation() => truncated = Some(e.to_string()),
            Err(e) => return Err(e),
        }
    }

    let mut sprime_checked = 0;
    let mut sprime_matches_pi = true;
    'outer: for g in SPrimeGenerator::all(m) {
        let elem = g.element(lambda);
        for key in &basis {
            let x = LinComb::basis(key.clone());
            let closed = tensor.sprime_closed_act(g, &x);
            let via_pi = tensor.pi_act(&elem, &x);
            match (closed, via_pi) {
                (Ok(a), Ok(b)) => {
                    sprime_checked += 1;
                    if a != b {
                        sprime_matches_pi = false;
                        break 'outer;
                    }
                }
                (Err(e), _) | (_, Err(e)) if e.is_truncation() => {
                    truncated = Some(e.to_string());
                    break 'outer;
                }
                (Err(e), _) | (_, Err(e)) => return Err(e),
            }
        }
    }

    let sigma_homomorphism = homomorphism_defects(m, |g| sigma_lambda(lambda, g))?.is_empty();
    let standard_homomorphism = homomorphism_defects(m, |g| embed_standard(m, g))?.is_empty();

    Ok(IsoReport {
        mu_w: mu_w.clone(),
        lambda: lambda.clone(),
        degree,
        w_height,
        generators,
        sigma_homomorphism,
        standard_homomorphism,
        sprime_checked,
        sprime_matches_pi,
        truncated,
    })
}

/// Simplicity of `F(Ω(λ), L(μ))` as an sl(m+1)-module.
///
/// Not simple exactly when
/// (1) `ī ≠ m`, `n = μ_ī + |μ| - ī ∈ ℕ` and `μ_ī - μ_{ī+1} ∉ {0, ..., n-1}`, or
/// (2) `μ_m + |μ| - m ∈ ℕ`.
/// The verdict is cross-checked against the generalized Verma criterion for
/// the twisted weight; a disagreement is reported as an error.
pub fn tensor_simplicity(
    lambda: &Lambda,
    mu: &Weight,
    profile: &BlockProfile,
) -> Result<SimplicityVerdict> {
    let m = mu.len();
    if lambda.len() != m {
        return Err(Error::Dimension {
            expected: m,
            found: lambda.len(),
        });
    }
    let checked = BlockProfile::with_ibar(mu, profile.ibar)?;
    let total = mu.total();
    let ibar = checked.ibar;
    let n = crate::rational::as_natural(&(mu.get(ibar) + &total - int(ibar as i64)));
    let case1 = ibar != m
        && match (n, &checked.a) {
            (Some(n), Some(a)) => !crate::rational::in_int_range(a, 0, n as i64 - 1),
            _ => false,
        };
    let case2 = crate::rational::is_natural(&(mu.get(m) + &total - int(m as i64)));

    let shift = total - int(m as i64 + 1);
    let twisted = mu.add_constant(&shift);
    let reference = simplicity_criterion(&twisted, &BlockProfile::with_ibar(&twisted, ibar)?)?;
    if reference.case1 != case1 || reference.case2 != case2 {
        return Err(Error::consistency(format!(
            "tensor criterion (case1 = {case1}, case2 = {case2}) disagrees with the twisted weight {twisted}"
        )));
    }
    Ok(SimplicityVerdict {
        simple: !(case1 || case2),
        case1,
        case2,
        l: if ibar < m { n } else { None },
        predicted: reference.predicted,
    })
}
