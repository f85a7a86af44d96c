//! Relations every minimal singular vector must satisfy.

use num_traits::Zero;

use super::{group_by_exponent, leading_term, GvmModule, GvmVector, SlGenerator};
use crate::checks::CheckOutcome;
use crate::error::Result;
use crate::gl::{GlModule, HwVector, MatrixUnit};
use crate::lincomb::LinComb;
use crate::multi_index::MultiIndex;
use crate::rational::{as_natural, format_rational, in_int_range, int, Rational};

/// Checks on a minimal singular vector `w` with leading exponent `ᾱ`:
/// leading component `v_μ`; `w(ᾱ+β) ∈ V_{μ+β}`; the Cartan eigenvalues;
/// `E_{i,j} w(ᾱ+β) = (ᾱ_i+β_i+1) w(ᾱ+β+e_i-e_j)` for `i < j`;
/// `(Σ_{s≤i}(ᾱ_s+1) - μ_i - m - 1) ᾱ_i = 0`;
/// `μ_j - μ_{j+1} ∉ {0, ..., ᾱ_j - 1}` when `ᾱ_j ≠ 0`; and, for
/// finite-dimensional `V`, `ᾱ = (μ_i + m + 1 - i) e_i` for some `i`.
pub fn structural_checks<V: GlModule>(
    gvm: &GvmModule<V>,
    w: &GvmVector<V::Label>,
) -> Result<Vec<CheckOutcome>> {
    let mu = gvm.highest_weight().clone();
    let m = mu.len();
    let v = gvm.inner();
    let (abar, lead) = leading_term(w)?;
    let comps = group_by_exponent(w);
    let component = |a: &MultiIndex| comps.get(a).cloned().unwrap_or_default();
    let mut out = Vec::new();

    let lead_ok = lead.len() == 1 && !lead.coeff(&v.highest_label()).is_zero();
    out.push(CheckOutcome::new(
        "leading component is a multiple of v_mu",
        lead_ok,
        if lead_ok {
            format!("leading exponent {abar}")
        } else {
            format!("w({abar}) = {}", v.render(&lead))
        },
    ));

    let mut bad = None;
    for (alpha, label) in w.keys() {
        let expected: Vec<i64> = abar.signed_diff(alpha);
        if v.drop_of(label) != expected {
            bad = Some(format!(
                "component at {alpha} has label {} of the wrong weight",
                v.label_string(label)
            ));
            break;
        }
    }
    out.push(CheckOutcome::new(
        "components w(abar+beta) lie in V_(mu+beta)",
        bad.is_none(),
        bad.unwrap_or_else(|| format!("{} components checked", w.len())),
    ));

    let mut bad = None;
    for i in 1..=m {
        let expected = mu.get(i) - int(abar.get(i) as i64 + abar.degree() as i64);
        let img = gvm.act_gen(SlGenerator::Cartan(i, m + 1), w)?;
        let mut diff = img;
        diff.sub_assign(&w.scaled(&expected));
        if !diff.is_zero() {
            bad = Some(format!(
                "E_{{{i},{i}}}-E_{{{n},{n}}} is not {} on w",
                format_rational(&expected),
                n = m + 1
            ));
            break;
        }
    }
    out.push(CheckOutcome::new(
        "Cartan eigenvalues mu_i - abar_i - |abar|",
        bad.is_none(),
        bad.unwrap_or_else(|| format!("{m} eigenvalues match")),
    ));

    let candidates: Vec<MultiIndex> = comps.keys().cloned().collect();
    let mut bad = None;
    'outer: for i in 1..=m {
        for j in i + 1..=m {
            let mut alphas = candidates.clone();
            for a in &candidates {
                if let Some(b) = a.minus(i).map(|b| b.plus(j)) {
                    alphas.push(b);
                }
            }
            alphas.sort();
            alphas.dedup();
            for alpha in &alphas {
                let lhs = v.act(MatrixUnit::new(i, j), &component(alpha))?;
                let rhs: HwVector<V::Label> = match alpha.plus(i).minus(j) {
                    Some(t) => component(&t).scaled(&int(alpha.get(i) as i64 + 1)),
                    None => LinComb::zero(),
                };
                if lhs != rhs {
                    bad = Some(format!(
                        "i = {i}, j = {j}, at {alpha}: lhs {} vs rhs {}",
                        v.render(&lhs),
                        v.render(&rhs)
                    ));
                    break 'outer;
                }
            }
        }
    }
    out.push(CheckOutcome::new(
        "E_ij w(abar+beta) = (abar_i+beta_i+1) w(abar+beta+e_i-e_j)",
        bad.is_none(),
        bad.unwrap_or_else(|| "all pairs i < j hold".into()),
    ));

    let mut bad = None;
    let mut partial = Rational::zero();
    for i in 1..=m {
        partial += int(abar.get(i) as i64 + 1);
        let val = (&partial - mu.get(i) - int(m as i64 + 1)) * int(abar.get(i) as i64);
        if !val.is_zero() {
            bad = Some(format!("i = {i}: value {}", format_rational(&val)));
            break;
        }
    }
    out.push(CheckOutcome::new(
        "(sum_{s<=i}(abar_s+1) - mu_i - m - 1) abar_i = 0",
        bad.is_none(),
        bad.unwrap_or_else(|| format!("holds for i = 1..{m}")),
    ));

    let mut bad = None;
    for j in 1..m {
        let aj = abar.get(j) as i64;
        if aj == 0 {
            continue;
        }
        let gap = mu.get(j) - mu.get(j + 1);
        if in_int_range(&gap, 0, aj - 1) {
            bad = Some(format!(
                "j = {j}: mu_j - mu_(j+1) = {} in {{0..{}}}",
                format_rational(&gap),
                aj - 1
            ));
            break;
        }
    }
    out.push(CheckOutcome::new(
        "mu_j - mu_(j+1) avoids {0, ..., abar_j - 1}",
        bad.is_none(),
        bad.unwrap_or_else(|| "no violating j".into()),
    ));

    if mu.is_dominant_integral() {
        let hit = (1..=m).find(|&i| {
            let target = mu.get(i) + int((m + 1 - i) as i64);
            as_natural(&target).is_some_and(|n| abar == MultiIndex::unit(m, i, n as u32))
        });
        out.push(CheckOutcome::new(
            "finite-dimensional V: abar = (mu_i + m + 1 - i) e_i",
            hit.is_some(),
            match hit {
                Some(i) => format!("i = {i}"),
                None => format!("abar = {abar} has no such form"),
            },
        ));
    } else {
        out.push(CheckOutcome::new(
            "finite-dimensional V: abar = (mu_i + m + 1 - i) e_i",
            true,
            "not applicable: V is infinite-dimensional",
        ));
    }
    Ok(out)
}
