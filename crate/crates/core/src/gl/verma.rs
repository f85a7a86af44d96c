//! Verma module M(μ) in the PBW basis, with recursive straightening.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Mutex;

use super::{bracket_units, GlModule, HwVector, MatrixUnit};
use crate::error::{Error, Result};
use crate::lincomb::LinComb;
use crate::weight::{drop_height, is_positive_drop, simple_root_coords, Weight, WeightDrop};

/// Negative roots `E_{i,j}` (`i > j`) sorted by `(j, i)`.
#[derive(Clone, Debug)]
pub struct NegativeRoots {
    m: usize,
    roots: Vec<MatrixUnit>,
}

impl NegativeRoots {
    pub fn new(m: usize) -> Self {
        let mut roots = Vec::new();
        for j in 1..=m {
            for i in j + 1..=m {
                roots.push(MatrixUnit::new(i, j));
            }
        }
        Self { m, roots }
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn root(&self, r: usize) -> MatrixUnit {
        self.roots[r]
    }

    pub fn index_of(&self, g: MatrixUnit) -> Option<usize> {
        self.roots.iter().position(|&x| x == g)
    }

    pub fn rank(&self) -> usize {
        self.m
    }
}

/// PBW monomial `F_N^{a_N} ⋯ F_1^{a_1} v_μ`: the factor with the highest
/// root index stands leftmost.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PbwMonomial(Vec<u32>);

impl PbwMonomial {
    pub fn identity(roots: &NegativeRoots) -> Self {
        Self(vec![0; roots.len()])
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Self(exps)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    /// Number of lowering factors.
    pub fn depth(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn drop(&self, roots: &NegativeRoots) -> WeightDrop {
        let mut d = vec![0i64; roots.rank()];
        for (r, &a) in self.0.iter().enumerate() {
            let g = roots.root(r);
            d[g.j - 1] += a as i64;
            d[g.i - 1] -= a as i64;
        }
        d
    }

    fn top(&self) -> Option<usize> {
        self.0.iter().rposition(|&a| a > 0)
    }

    fn bumped(&self, r: usize, by: i32) -> Self {
        let mut e = self.0.clone();
        e[r] = (e[r] as i32 + by) as u32;
        Self(e)
    }

    pub fn render(&self, roots: &NegativeRoots) -> String {
        let mut parts = Vec::new();
        for r in (0..self.0.len()).rev() {
            let a = self.0[r];
            if a == 0 {
                continue;
            }
            let g = roots.root(r);
            if a == 1 {
                parts.push(g.to_string());
            } else {
                parts.push(format!("{g}^{a}"));
            }
        }
        if parts.is_empty() {
            "v".into()
        } else {
            format!("{}v", parts.concat())
        }
    }
}

impl fmt::Debug for PbwMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// All PBW monomials with at most `depth` factors, grouped by weight and
/// listed by increasing depth of the group's first appearance.
pub fn verma_basis(mu: &Weight, depth: u32) -> Vec<(Weight, Vec<PbwMonomial>)> {
    let roots = NegativeRoots::new(mu.len());
    let mut groups: BTreeMap<(i64, WeightDrop), Vec<PbwMonomial>> = BTreeMap::new();
    let mut exps = vec![0u32; roots.len()];
    fn rec(
        pos: usize,
        left: u32,
        exps: &mut Vec<u32>,
        roots: &NegativeRoots,
        groups: &mut BTreeMap<(i64, WeightDrop), Vec<PbwMonomial>>,
    ) {
        if pos == exps.len() {
            let mono = PbwMonomial(exps.clone());
            let d = mono.drop(roots);
            groups.entry((drop_height(&d), d)).or_default().push(mono);
            return;
        }
        for a in 0..=left {
            exps[pos] = a;
            rec(pos + 1, left - a, exps, roots, groups);
        }
        exps[pos] = 0;
    }
    rec(0, depth, &mut exps, &roots, &mut groups);
    groups
        .into_iter()
        .map(|((_, d), mut monos)| {
            monos.sort();
            (mu.lowered(&d), monos)
        })
        .collect()
}

/// All PBW monomials of the given drop, sorted.
pub(crate) fn monomials_of_drop(roots: &NegativeRoots, drop: &[i64]) -> Vec<PbwMonomial> {
    if !is_positive_drop(drop) {
        return Vec::new();
    }
    let mut left = simple_root_coords(drop);
    let mut exps = vec![0u32; roots.len()];
    let mut out = Vec::new();
    fn rec(
        pos: usize,
        left: &mut Vec<i64>,
        exps: &mut Vec<u32>,
        roots: &NegativeRoots,
        out: &mut Vec<PbwMonomial>,
    ) {
        if pos == exps.len() {
            if left.iter().all(|&x| x == 0) {
                out.push(PbwMonomial(exps.clone()));
            }
            return;
        }
        let g = roots.root(pos);
        let span = g.j - 1..g.i - 1;
        let cap = span.clone().map(|s| left[s]).min().unwrap_or(0);
        for a in 0..=cap {
            for s in span.clone() {
                left[s] -= a;
            }
            exps[pos] = a as u32;
            rec(pos + 1, left, exps, roots, out);
            for s in span.clone() {
                left[s] += a;
            }
        }
        exps[pos] = 0;
    }
    rec(0, &mut left, &mut exps, roots, &mut out);
    out.sort();
    out
}

type Memo = HashMap<(MatrixUnit, PbwMonomial), LinComb<PbwMonomial>>;

/// `M(μ)` truncated at a maximal drop height.
pub struct VermaModule {
    mu: Weight,
    roots: NegativeRoots,
    cutoff: usize,
    memo: Mutex<Memo>,
}

impl VermaModule {
    pub fn new(mu: Weight, cutoff: usize) -> Self {
        let roots = NegativeRoots::new(mu.len());
        Self {
            mu,
            roots,
            cutoff,
            memo: Mutex::new(HashMap::new()),
        }
    }

    pub fn roots(&self) -> &NegativeRoots {
        &self.roots
    }

    /// Monomial `E_{i_1,j_1} ⋯ E_{i_k,j_k} v_μ` for an arbitrary word of
    /// lowering units (rightmost applied first).
    pub fn word_vector(&self, word: &[MatrixUnit]) -> Result<HwVector<PbwMonomial>> {
        let mut v = self.highest_vector();
        for &g in word.iter().rev() {
            v = self.act(g, &v)?;
        }
        Ok(v)
    }

    fn straighten(&self, g: MatrixUnit, y: &PbwMonomial) -> Result<LinComb<PbwMonomial>> {
        let key = (g, y.clone());
        if let Some(hit) = self.memo.lock().unwrap().get(&key) {
            return Ok(hit.clone());
        }
        let out = self.straighten_uncached(g, y)?;
        self.memo.lock().unwrap().insert(key, out.clone());
        Ok(out)
    }

    fn straighten_uncached(&self, g: MatrixUnit, y: &PbwMonomial) -> Result<LinComb<PbwMonomial>> {
        let drop = y.drop(&self.roots);
        if g.is_cartan() {
            return Ok(LinComb::term(y.clone(), self.cartan_eigenvalue(g.i, &drop)));
        }
        if !self.classify_drop(&g.shift_drop(&drop))? {
            return Ok(LinComb::zero());
        }
        let top = y.top();
        if g.is_lowering() {
            let idx = self
                .roots
                .index_of(g)
                .expect("lowering unit is a negative root");
            if top.is_none_or(|t| idx >= t) {
                return Ok(LinComb::basis(y.bumped(idx, 1)));
            }
        }
        let t = match top {
            Some(t) => t,
            None => return Ok(LinComb::zero()),
        };
        // g F_t Y' = F_t (g Y') + [g, F_t] Y'
        let f = self.roots.root(t);
        let rest = y.bumped(t, -1);
        let mut out = LinComb::zero();
        for (z, c) in &self.straighten(g, &rest)? {
            out.add_scaled(&self.straighten(f, z)?, c);
        }
        for (h, c) in &bracket_units(g, f) {
            out.add_scaled(&self.straighten(*h, &rest)?, c);
        }
        Ok(out)
    }
}

impl GlModule for VermaModule {
    type Label = PbwMonomial;

    fn realization(&self) -> &'static str {
        "verma"
    }

    fn rank(&self) -> usize {
        self.mu.len()
    }

    fn highest_weight(&self) -> &Weight {
        &self.mu
    }

    fn highest_label(&self) -> PbwMonomial {
        PbwMonomial::identity(&self.roots)
    }

    fn cutoff(&self) -> usize {
        self.cutoff
    }

    fn drop_of(&self, label: &PbwMonomial) -> WeightDrop {
        label.drop(&self.roots)
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
        Ok(monomials_of_drop(&self.roots, drop))
    }

    fn act_unit(&self, g: MatrixUnit, label: &PbwMonomial) -> Result<HwVector<PbwMonomial>> {
        g.check_range(self.rank())?;
        self.straighten(g, label)
    }

    fn label_string(&self, label: &PbwMonomial) -> String {
        label.render(&self.roots)
    }
}

impl fmt::Debug for VermaModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VermaModule(μ = {}, cutoff = {})", self.mu, self.cutoff)
    }
}
