use serde::{Deserialize, Serialize};

use gvmlab::checks::CheckOutcome;
use gvmlab::gl::GlModule;
use gvmlab::gvm::{SimplicityVerdict, SingularLine};
use gvmlab::rational::format_rational;

use crate::config::JobConfig;

/// Machine-readable result of one command; field names are stable.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub config: JobConfig,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verdict: Option<VerdictReport>,
    #[serde(default)]
    pub lines: Vec<LineReport>,
    #[serde(default)]
    pub checks: Vec<CheckReport>,
    #[serde(default)]
    pub notes: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub truncated: Option<String>,
    pub passed: bool,
    pub timing_ms: u64,
}

impl Report {
    pub fn new(command: &str, config: JobConfig) -> Self {
        Self {
            command: command.into(),
            config,
            verdict: None,
            lines: Vec::new(),
            checks: Vec::new(),
            notes: Vec::new(),
            truncated: None,
            passed: true,
            timing_ms: 0,
        }
    }

    pub fn push_check(&mut self, c: CheckOutcome) {
        self.passed &= c.passed;
        self.checks.push(CheckReport {
            name: c.name,
            passed: c.passed,
            detail: c.detail,
        });
    }

    pub fn mark_truncated(&mut self, why: String) {
        self.passed = false;
        self.truncated = Some(why);
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictReport {
    pub simple: bool,
    pub case1: bool,
    pub case2: bool,
    pub ibar: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub l: Option<u64>,
    pub predicted: Vec<Vec<u32>>,
    /// Whether a bounded search confirmed the prediction, when one was run.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub agreement: Option<bool>,
}

impl VerdictReport {
    pub fn new(v: &SimplicityVerdict, ibar: usize) -> Self {
        Self {
            simple: v.simple,
            case1: v.case1,
            case2: v.case2,
            ibar,
            l: v.l,
            predicted: v.predicted.iter().map(|p| p.exps().to_vec()).collect(),
            agreement: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LineReport {
    pub leading: Vec<u32>,
    pub weight: Vec<String>,
    /// Human-readable form of the vector.
    pub rendered: String,
    pub terms: Vec<TermReport>,
}

/// One term `coeff · Y_alpha ⊗ vector`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermReport {
    pub alpha: Vec<u32>,
    pub vector: String,
    pub coeff: String,
}

impl LineReport {
    pub fn new<V: GlModule>(v: &V, line: &SingularLine<V::Label>, rendered: String) -> Self {
        Self {
            leading: line.leading.exps().to_vec(),
            weight: line.weight.to_strings(),
            rendered,
            terms: line
                .vector
                .iter()
                .map(|((alpha, label), c)| TermReport {
                    alpha: alpha.exps().to_vec(),
                    vector: v.label_string(label),
                    coeff: format_rational(c),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}
