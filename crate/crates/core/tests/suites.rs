use gvmlab::checks::{module_brackets, run_suites, SuiteConfig, SUITES};
use gvmlab::gl::{GlModule, HwVector, MatrixUnit, PbwMonomial, SimpleModule};
use gvmlab::witt::Lambda;
use gvmlab::{Rational, Result, Weight, WeightDrop};

/// `L(μ)` with the coefficient of one action entry doubled.
struct Corrupted(SimpleModule);

impl GlModule for Corrupted {
    type Label = PbwMonomial;

    fn realization(&self) -> &'static str {
        "corrupted"
    }
    fn rank(&self) -> usize {
        self.0.rank()
    }
    fn highest_weight(&self) -> &Weight {
        self.0.highest_weight()
    }
    fn highest_label(&self) -> PbwMonomial {
        self.0.highest_label()
    }
    fn cutoff(&self) -> usize {
        self.0.cutoff()
    }
    fn drop_of(&self, label: &PbwMonomial) -> WeightDrop {
        self.0.drop_of(label)
    }
    fn weight_basis(&self, drop: &[i64]) -> Result<Vec<PbwMonomial>> {
        self.0.weight_basis(drop)
    }
    fn act_unit(&self, g: MatrixUnit, label: &PbwMonomial) -> Result<HwVector<PbwMonomial>> {
        let out = self.0.act_unit(g, label)?;
        if g == MatrixUnit::new(1, 2) && *label != self.highest_label() {
            return Ok(out.scaled(&Rational::from_integer(2.into())));
        }
        Ok(out)
    }
    fn label_string(&self, label: &PbwMonomial) -> String {
        self.0.label_string(label)
    }
}

#[test]
fn corrupted_coefficient_is_reported_with_the_identity() {
    let module = Corrupted(SimpleModule::new(Weight::parse(&["1/2", "0"]).unwrap(), 6));
    let outcome = module_brackets("corrupted", &module, 2).unwrap();
    assert!(!outcome.passed);
    assert!(outcome.detail.starts_with("[E_{"), "{}", outcome.detail);
    assert!(
        outcome.detail.contains("commutator gives"),
        "{}",
        outcome.detail
    );

    let honest = module_brackets("honest", &module.0, 2).unwrap();
    assert!(honest.passed);
}

#[test]
fn full_suite_rank_two_depth_three() {
    let mut cfg = SuiteConfig::new(Weight::parse(&["-1", "-1/2"]).unwrap(), 3);
    cfg.lambda = Lambda::from_ints(&[1, 2]).unwrap();
    let out = run_suites(&cfg, None).unwrap();
    assert!(out.len() >= SUITES.len());
    for c in &out {
        assert!(c.passed, "{c}");
    }
}

#[test]
fn full_suite_rank_three() {
    let mut cfg = SuiteConfig::new(Weight::from_ints(&[3, 1, 1]), 2);
    cfg.lambda = Lambda::parse(&["1", "-2", "1/3"]).unwrap();
    for c in run_suites(&cfg, None).unwrap() {
        assert!(c.passed, "{c}");
    }
}

#[test]
fn band_suite_without_band_is_not_applicable() {
    let cfg = SuiteConfig::new(Weight::from_ints(&[0, 0]), 1);
    let out = run_suites(&cfg, Some("band")).unwrap();
    assert_eq!(out.len(), 1);
    assert!(out[0].passed && out[0].detail.contains("not applicable"));
}

#[test]
fn suites_run_in_fixed_order() {
    let cfg = SuiteConfig::new(Weight::from_ints(&[1, 0]), 1);
    let a = run_suites(&cfg, None).unwrap();
    let b = run_suites(&cfg, None).unwrap();
    assert_eq!(a, b);
}
