//! Named invariant suites shared by the command line and the tests.

use std::fmt;

use crate::error::Result;
use crate::gl::{
    all_units, band_embed, basis_up_to_height, bracket_defect, BandModule, GlModule, HwVector,
    SimpleModule,
};
use crate::gvm::{group_by_exponent, sl_bracket, GvmModule, GvmVector, SlGenerator};
use crate::lincomb::LinComb;
use crate::multi_index::MultiIndex;
use crate::weight::{BlockProfile, Weight};
use crate::witt::{
    embed_standard, homomorphism_defects, sigma_lambda, Lambda, SPrimeGenerator, TensorModule,
};

/// One named assertion with a readable account of what was compared.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckOutcome {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = if self.passed { "ok" } else { "FAILED" };
        write!(f, "{mark}: {} ({})", self.name, self.detail)
    }
}

/// Suite names accepted by [`run_suites`].
pub const SUITES: &[&str] = &[
    "brackets",
    "band",
    "gvm-closed-forms",
    "tensor-closed-forms",
    "homomorphisms",
];

/// Sizes and parameters the suites run at.
#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub mu: Weight,
    pub lambda: Lambda,
    /// Drop height for gl(m)-modules and `|α|` bound for the sl(m+1)-modules.
    pub depth: usize,
    pub ibar: Option<usize>,
}

impl SuiteConfig {
    pub fn new(mu: Weight, depth: usize) -> Self {
        let lambda = Lambda::ones(mu.len());
        Self {
            mu,
            lambda,
            depth,
            ibar: None,
        }
    }
}

/// Runs the suites whose names contain `filter` (all when `None`), in the
/// order of [`SUITES`].
pub fn run_suites(config: &SuiteConfig, filter: Option<&str>) -> Result<Vec<CheckOutcome>> {
    let selected: Vec<&str> = SUITES
        .iter()
        .copied()
        .filter(|s| filter.is_none_or(|f| s.contains(f)))
        .collect();
    if selected.is_empty() {
        return Err(crate::error::Error::domain(format!(
            "no suite matches '{}'; known suites: {}",
            filter.unwrap_or_default(),
            SUITES.join(", ")
        )));
    }
    let m = config.mu.len();
    let d = config.depth;
    let quotient = SimpleModule::new(config.mu.clone(), d + 2 * m);
    let mut out = Vec::new();
    for suite in selected {
        match suite {
            "brackets" => {
                out.push(module_brackets("brackets: L(mu), quotient", &quotient, d)?);
                if let Some(band) = band_for(config)? {
                    out.push(module_brackets("brackets: L(mu), band", &band, d)?);
                }
                let gvm = GvmModule::new(SimpleModule::new(config.mu.clone(), 2 * d + 2 * m));
                out.push(gvm_brackets("brackets: M_p(L(mu))", &gvm, d, d)?);
                let tensor = TensorModule::new(
                    SimpleModule::new(config.mu.clone(), d + 2 * m),
                    config.lambda.clone(),
                )?;
                out.push(tensor_brackets(
                    "brackets: F(Omega(lambda), L(mu))",
                    &tensor,
                    d,
                    d,
                )?);
            }
            "band" => match band_for(config)? {
                Some(band) => out.extend(band_checks(&band, &quotient, d)?),
                None => out.push(CheckOutcome::new(
                    "band",
                    true,
                    "not applicable: the weight has no band",
                )),
            },
            "gvm-closed-forms" => {
                let gvm = GvmModule::new(SimpleModule::new(config.mu.clone(), 2 * d + 2 * m));
                out.push(gvm_closed_vs_oracle(&gvm, d, d)?);
            }
            "tensor-closed-forms" => {
                let tensor = TensorModule::new(
                    SimpleModule::new(config.mu.clone(), d + 2 * m),
                    config.lambda.clone(),
                )?;
                out.push(sprime_vs_pi(&tensor, d, d)?);
                out.push(sigma_closed_vs_pi(&tensor, d, d)?);
            }
            "homomorphisms" => {
                let bad = homomorphism_defects(m, |g| sigma_lambda(&config.lambda, g))?;
                out.push(pairs_outcome("sigma_lambda is a homomorphism", &bad));
                let bad = homomorphism_defects(m, |g| embed_standard(m, g))?;
                out.push(pairs_outcome("standard embedding is a homomorphism", &bad));
            }
            _ => unreachable!(),
        }
    }
    Ok(out)
}

fn band_for(config: &SuiteConfig) -> Result<Option<BandModule>> {
    let profile = match config.ibar {
        Some(i) => BlockProfile::with_ibar(&config.mu, i)?,
        None => match BlockProfile::from_weight(&config.mu) {
            Ok(p) => p,
            Err(_) => return Ok(None),
        },
    };
    // with ī > 1 the band covers only part of L(μ)
    let usable = profile.ibar == 1
        && profile.m > 1
        && profile
            .a
            .as_ref()
            .is_some_and(|a| !num_traits::Zero::is_zero(a));
    if !usable {
        return Ok(None);
    }
    // normalize every band vector the cutoff can reach
    let cutoff = config.depth + 2 * config.mu.len();
    let l = profile.l.unwrap_or(0).max(cutoff as u64);
    BandModule::new(config.mu.clone(), profile, l, cutoff).map(Some)
}

fn pairs_outcome(name: &str, bad: &[(SlGenerator, SlGenerator)]) -> CheckOutcome {
    match bad.first() {
        None => CheckOutcome::new(name, true, "all generator pairs"),
        Some((a, b)) => CheckOutcome::new(
            name,
            false,
            format!("[{a}, {b}] is not preserved ({} pairs)", bad.len()),
        ),
    }
}

fn render_pairs<L: Ord + Clone, M: GlModule<Label = L>>(
    v: &M,
    prefix: &str,
    x: &GvmVector<L>,
) -> String {
    if x.is_zero() {
        return "0".into();
    }
    group_by_exponent(x)
        .iter()
        .map(|(alpha, hw)| format!("{prefix}_{alpha}⊗[{}]", v.render(hw)))
        .collect::<Vec<_>>()
        .join(" + ")
}

fn pair_basis<M: GlModule>(
    module: &M,
    degree: usize,
    height: usize,
) -> Result<Vec<(MultiIndex, M::Label)>> {
    let labels = basis_up_to_height(module, height)?;
    Ok(MultiIndex::all_up_to_degree(module.rank(), degree as u32)
        .into_iter()
        .flat_map(|a| labels.iter().map(move |l| (a.clone(), l.clone())))
        .collect())
}

/// `x(yv) - y(xv) = [x,y]v` for all matrix units on every basis vector up to
/// the given drop height.
pub fn module_brackets<M: GlModule>(name: &str, module: &M, height: usize) -> Result<CheckOutcome> {
    let labels = basis_up_to_height(module, height)?;
    let units = all_units(module.rank());
    let mut count = 0;
    for l in &labels {
        let v = HwVector::basis(l.clone());
        for &x in &units {
            for &y in &units {
                let defect = bracket_defect(module, x, y, &v)?;
                count += 1;
                if !defect.is_zero() {
                    let lhs = {
                        let mut a = module.act(x, &module.act(y, &v)?)?;
                        a.sub_assign(&module.act(y, &module.act(x, &v)?)?);
                        a
                    };
                    let rhs = module.act_element(&crate::gl::bracket_units(x, y), &v)?;
                    return Ok(CheckOutcome::new(
                        name,
                        false,
                        format!(
                            "[{x}, {y}] on {}: commutator gives {}, bracket gives {}",
                            module.label_string(l),
                            module.render(&lhs),
                            module.render(&rhs)
                        ),
                    ));
                }
            }
        }
    }
    Ok(CheckOutcome::new(
        name,
        true,
        format!("{count} identities on {} basis vectors", labels.len()),
    ))
}

fn sl_brackets<L: Ord + Clone>(
    name: &str,
    m: usize,
    basis: &[(MultiIndex, L)],
    act: impl Fn(&crate::gvm::SlElement, &GvmVector<L>) -> Result<GvmVector<L>>,
    render: impl Fn(&GvmVector<L>) -> String,
) -> Result<CheckOutcome> {
    let gens = SlGenerator::basis(m);
    let mut count = 0;
    for key in basis {
        let v = LinComb::basis(key.clone());
        for a in &gens {
            for b in &gens {
                let (ea, eb) = (a.element(), b.element());
                let mut lhs = act(&ea, &act(&eb, &v)?)?;
                lhs.sub_assign(&act(&eb, &act(&ea, &v)?)?);
                let rhs = act(&sl_bracket(&ea, &eb), &v)?;
                count += 1;
                if lhs != rhs {
                    return Ok(CheckOutcome::new(
                        name,
                        false,
                        format!(
                            "[{a}, {b}] on {}: commutator gives {}, bracket gives {}",
                            render(&v),
                            render(&lhs),
                            render(&rhs)
                        ),
                    ));
                }
            }
        }
    }
    Ok(CheckOutcome::new(
        name,
        true,
        format!("{count} identities on {} basis vectors", basis.len()),
    ))
}

/// Commutator identity for all sl(m+1) generator pairs on `Y_α ⊗ w`.
pub fn gvm_brackets<V: GlModule>(
    name: &str,
    gvm: &GvmModule<V>,
    degree: usize,
    v_height: usize,
) -> Result<CheckOutcome> {
    let basis = pair_basis(gvm.inner(), degree, v_height)?;
    sl_brackets(
        name,
        gvm.rank(),
        &basis,
        |g, x| gvm.act(g, x),
        |x| gvm.render(x),
    )
}

/// Commutator identity for all sl(m+1) generator pairs on `X_η ⊗ w`, acting
/// through `σ_λ`.
pub fn tensor_brackets<W: GlModule>(
    name: &str,
    tensor: &TensorModule<W>,
    degree: usize,
    w_height: usize,
) -> Result<CheckOutcome> {
    let basis = pair_basis(tensor.inner(), degree, w_height)?;
    sl_brackets(
        name,
        tensor.rank(),
        &basis,
        |g, x| tensor.sigma_act(g, x),
        |x| render_pairs(tensor.inner(), "X", x),
    )
}

/// Closed-form action on `M_p(V)` against the commutation oracle.
pub fn gvm_closed_vs_oracle<V: GlModule>(
    gvm: &GvmModule<V>,
    degree: usize,
    v_height: usize,
) -> Result<CheckOutcome> {
    let name = "closed-form action on M_p(V) matches the commutation oracle";
    let basis = pair_basis(gvm.inner(), degree, v_height)?;
    let mut count = 0;
    for key in &basis {
        let x = LinComb::basis(key.clone());
        for g in SlGenerator::basis(gvm.rank()) {
            let e = g.element();
            let closed = gvm.act(&e, &x)?;
            let oracle = gvm.act_oracle(&e, &x)?;
            count += 1;
            if closed != oracle {
                return Ok(CheckOutcome::new(
                    name,
                    false,
                    format!(
                        "{g} on {}: closed form {}, oracle {}",
                        gvm.render(&x),
                        gvm.render(&closed),
                        gvm.render(&oracle)
                    ),
                ));
            }
        }
    }
    Ok(CheckOutcome::new(
        name,
        true,
        format!("{count} generator applications"),
    ))
}

/// Closed forms for the `σ_λ`-image generators against the defining action `π`.
pub fn sprime_vs_pi<W: GlModule>(
    tensor: &TensorModule<W>,
    degree: usize,
    w_height: usize,
) -> Result<CheckOutcome> {
    let name = "closed forms on F(Omega(lambda), W) match pi";
    let basis = pair_basis(tensor.inner(), degree, w_height)?;
    let mut count = 0;
    for key in &basis {
        let x = LinComb::basis(key.clone());
        for g in SPrimeGenerator::all(tensor.rank()) {
            let closed = tensor.sprime_closed_act(g, &x)?;
            let via_pi = tensor.pi_act(&g.element(tensor.lambda()), &x)?;
            count += 1;
            if closed != via_pi {
                let r = |y: &GvmVector<W::Label>| render_pairs(tensor.inner(), "X", y);
                return Ok(CheckOutcome::new(
                    name,
                    false,
                    format!(
                        "{g:?} on {}: closed form {}, pi {}",
                        r(&x),
                        r(&closed),
                        r(&via_pi)
                    ),
                ));
            }
        }
    }
    Ok(CheckOutcome::new(
        name,
        true,
        format!("{count} generator applications"),
    ))
}

/// sl(m+1) through `σ_λ`: closed forms against `π(σ_λ(g))`.
pub fn sigma_closed_vs_pi<W: GlModule>(
    tensor: &TensorModule<W>,
    degree: usize,
    w_height: usize,
) -> Result<CheckOutcome> {
    let name = "sl(m+1) closed forms on F(Omega(lambda), W) match pi(sigma_lambda(g))";
    let basis = pair_basis(tensor.inner(), degree, w_height)?;
    let mut count = 0;
    for key in &basis {
        let x = LinComb::basis(key.clone());
        for g in SlGenerator::basis(tensor.rank()) {
            let e = g.element();
            let closed = tensor.sigma_act(&e, &x)?;
            let via_pi = tensor.sigma_act_pi(&e, &x)?;
            count += 1;
            if closed != via_pi {
                let r = |y: &GvmVector<W::Label>| render_pairs(tensor.inner(), "X", y);
                return Ok(CheckOutcome::new(
                    name,
                    false,
                    format!(
                        "{g} on {}: closed form {}, pi {}",
                        r(&x),
                        r(&closed),
                        r(&via_pi)
                    ),
                ));
            }
        }
    }
    Ok(CheckOutcome::new(
        name,
        true,
        format!("{count} generator applications"),
    ))
}

/// Band model against the quotient realization: brackets, weight-space
/// dimensions, and `embed(E·v) = E·embed(v)` for every matrix unit.
pub fn band_checks(
    band: &BandModule,
    quotient: &SimpleModule,
    height: usize,
) -> Result<Vec<CheckOutcome>> {
    let mut out = vec![module_brackets("band: brackets", band, height)?];

    let mut bad = None;
    let mut spaces = 0;
    for drop in crate::weight::drops_up_to_height(band.rank(), height) {
        let b = band.weight_basis(&drop)?.len();
        let q = quotient.weight_basis(&drop)?.len();
        spaces += 1;
        if b != q {
            bad = Some(format!("drop {drop:?}: band {b}, quotient {q}"));
            break;
        }
    }
    out.push(CheckOutcome::new(
        "band: weight spaces match the quotient",
        bad.is_none(),
        bad.unwrap_or_else(|| format!("{spaces} weight spaces")),
    ));

    let mut bad = None;
    let mut count = 0;
    'outer: for l in basis_up_to_height(band, height)? {
        let v = HwVector::basis(l.clone());
        let image = band_embed(band, quotient, &v)?;
        for g in all_units(band.rank()) {
            let lhs = band_embed(band, quotient, &band.act(g, &v)?)?;
            let rhs = quotient.act(g, &image)?;
            count += 1;
            if lhs != rhs {
                bad = Some(format!(
                    "{g} on {}: band then embed {}, embed then act {}",
                    band.label_string(&l),
                    quotient.render(&lhs),
                    quotient.render(&rhs)
                ));
                break 'outer;
            }
        }
    }
    out.push(CheckOutcome::new(
        "band: embedding intertwines the action",
        bad.is_none(),
        bad.unwrap_or_else(|| format!("{count} generator applications")),
    ));
    Ok(out)
}
