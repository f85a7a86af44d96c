//! Brute-force search for singular vectors, one weight class at a time.

use std::collections::BTreeMap;

use num_traits::Zero;
use rayon::prelude::*;

use super::{GvmModule, GvmVector, SlGenerator};
use crate::error::{Error, Result};
use crate::gl::GlModule;
use crate::linalg::RationalMatrix;
use crate::lincomb::LinComb;
use crate::multi_index::MultiIndex;
use crate::weight::Weight;

/// A singular line, normalized so that its leading term is `Y_α ⊗ v_μ`.
#[derive(Clone, Debug)]
pub struct SingularLine<L: Ord> {
    pub leading: MultiIndex,
    pub weight: Weight,
    pub vector: GvmVector<L>,
}

#[derive(Clone, Debug)]
pub struct SearchResult<L: Ord> {
    /// Lines in ≺ order of their leading exponents.
    pub lines: Vec<SingularLine<L>>,
    pub requested_degree: u32,
    /// Every degree up to this one was searched completely.
    pub completed_degree: u32,
    /// Reason the search stopped early, if it did.
    pub truncated: Option<String>,
    /// Drop height of `V` the full request needs.
    pub v_height_needed: usize,
}

impl<L: Ord> SearchResult<L> {
    pub fn minimal(&self) -> Option<&SingularLine<L>> {
        self.lines.first()
    }
}

/// Singular vectors of `M_p(V)` other than `v_μ` with `|α| ≤ max_degree`.
///
/// A singular vector has leading term `Y_c ⊗ v_μ`, so its weight class is
/// `{(α, β) : |α| = |c|, α - β = c}` for some `c ∈ Z_+^m`; each class holds at
/// most one line. The search runs the classes of each degree in parallel and
/// stops at the first degree whose weight spaces exceed the cutoff of `V`.
pub fn singular_search<V: GlModule>(
    gvm: &GvmModule<V>,
    max_degree: u32,
) -> Result<SearchResult<V::Label>> {
    let m = gvm.rank();
    let mut lines = Vec::new();
    let mut completed = 0;
    let mut truncated = None;
    for d in 1..=max_degree {
        let classes = MultiIndex::all_of_degree(m, d);
        let found: Vec<Result<Option<SingularLine<V::Label>>>> =
            classes.par_iter().map(|c| class_kernel(gvm, c)).collect();
        let mut batch = Vec::new();
        let mut stop = None;
        for r in found {
            match r {
                Ok(Some(line)) => batch.push(line),
                Ok(None) => {}
                Err(e) if e.is_truncation() => {
                    stop.get_or_insert(e.to_string());
                }
                Err(e) => return Err(e),
            }
        }
        if let Some(reason) = stop {
            truncated = Some(format!("degree {d}: {reason}"));
            break;
        }
        lines.extend(batch);
        completed = d;
    }
    Ok(SearchResult {
        lines,
        requested_degree: max_degree,
        completed_degree: completed,
        truncated,
        v_height_needed: (m.saturating_sub(1)) * max_degree as usize,
    })
}

fn class_kernel<V: GlModule>(
    gvm: &GvmModule<V>,
    class: &MultiIndex,
) -> Result<Option<SingularLine<V::Label>>> {
    let m = gvm.rank();
    let v = gvm.inner();
    let mut columns = Vec::new();
    for alpha in MultiIndex::all_of_degree(m, class.degree()) {
        let drop = class.signed_diff(&alpha);
        for label in v.weight_basis(&drop)? {
            columns.push((alpha.clone(), label));
        }
    }
    let mut rows: BTreeMap<(usize, (MultiIndex, V::Label)), usize> = BTreeMap::new();
    let mut images = Vec::with_capacity(columns.len());
    for key in &columns {
        let basis = LinComb::basis(key.clone());
        let mut img = Vec::new();
        for (op, g) in SlGenerator::simple_raising(m).into_iter().enumerate() {
            for (k, c) in &gvm.act_gen(g, &basis)? {
                let next = rows.len();
                let r = *rows.entry((op, k.clone())).or_insert(next);
                img.push((r, c.clone()));
            }
        }
        images.push(img);
    }
    let mut mat = RationalMatrix::zeros(rows.len(), columns.len());
    for (col, img) in images.iter().enumerate() {
        for (r, c) in img {
            mat.add_to(*r, col, c);
        }
    }
    let kernel = mat.nullspace();
    match kernel.len() {
        0 => Ok(None),
        1 => {
            let top = (class.clone(), v.highest_label());
            let lead_col = columns.iter().position(|k| *k == top).unwrap();
            let lead = kernel[0][lead_col].clone();
            if lead.is_zero() {
                return Err(Error::consistency(format!(
                    "kernel vector in class {class} has no Y_c v_mu term"
                )));
            }
            let vector: GvmVector<V::Label> = columns
                .iter()
                .zip(&kernel[0])
                .filter(|(_, x)| !x.is_zero())
                .map(|(k, x)| (k.clone(), x / &lead))
                .collect();
            Ok(Some(SingularLine {
                leading: class.clone(),
                weight: gvm.weight_of(class, &v.highest_label()),
                vector,
            }))
        }
        n => Err(Error::consistency(format!(
            "class {class} carries {n} independent singular vectors"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gl::SimpleModule;
    use crate::rational::{frac, int};

    fn search(mu: Weight, d: u32) -> SearchResult<crate::gl::PbwMonomial> {
        let h = (mu.len() - 1) * d as usize + mu.len();
        singular_search(&GvmModule::new(SimpleModule::new(mu, h)), d).unwrap()
    }

    #[test]
    fn trivial_weight() {
        let r = search(Weight::from_ints(&[0, 0]), 2);
        assert!(r.truncated.is_none());
        assert_eq!(r.lines[0].leading, MultiIndex::new(vec![0, 1]));
        assert_eq!(r.lines[0].vector.len(), 1);
    }

    #[test]
    fn generic_weight_is_empty() {
        let r = search(Weight::new(vec![frac(-1, 2), frac(-1, 3)]).unwrap(), 4);
        assert!(r.lines.is_empty());
        assert_eq!(r.completed_degree, 4);
    }

    #[test]
    fn case_one_line() {
        let r = search(Weight::new(vec![int(-1), frac(-1, 2)]).unwrap(), 2);
        assert_eq!(r.lines.len(), 1);
        assert_eq!(r.lines[0].leading, MultiIndex::new(vec![1, 0]));
    }

    #[test]
    fn truncation_gives_partial_result() {
        let mu = Weight::new(vec![frac(1, 3), frac(1, 5), frac(1, 7)]).unwrap();
        let gvm = GvmModule::new(SimpleModule::new(mu, 2));
        let r = singular_search(&gvm, 3).unwrap();
        assert!(r.truncated.is_some());
        assert_eq!(r.completed_degree, 1);
        assert_eq!(r.v_height_needed, 6);
    }
}
