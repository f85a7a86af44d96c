use std::path::Path;

use serde::{Deserialize, Serialize};

use gvmlab::rational::{format_rational, parse_rational};
use gvmlab::witt::Lambda;
use gvmlab::{BlockProfile, Weight};

/// Environment variable capping `depth` for every command.
pub const MAX_DEPTH_VAR: &str = "GVMLAB_MAX_DEPTH";

/// Problems with the job description itself; reported with exit status 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn usage(msg: impl Into<String>) -> UsageError {
    UsageError(msg.into())
}

fn default_depth() -> usize {
    3
}

/// A job as read from a config file, after command-line overrides.
///
/// Rationals are kept as strings so that files never pass through floats.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobConfig {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(default)]
    pub mu: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ibar: Option<usize>,
    #[serde(default = "default_depth")]
    pub depth: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu_w: Option<Vec<String>>,
    #[serde(default)]
    pub confirm: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub suite: Option<String>,
}

impl Default for JobConfig {
    fn default() -> Self {
        Self {
            m: None,
            mu: Vec::new(),
            ibar: None,
            depth: default_depth(),
            lambda: None,
            mu_w: None,
            confirm: false,
            suite: None,
        }
    }
}

fn canonical(field: &str, entries: &[String]) -> Result<Vec<String>, UsageError> {
    entries
        .iter()
        .map(|e| {
            parse_rational(e)
                .map(|q| format_rational(&q))
                .map_err(|err| usage(format!("{field}: {err}")))
        })
        .collect()
}

impl JobConfig {
    /// Reads TOML, or JSON when the file name ends in `.json`.
    pub fn from_file(path: &Path) -> Result<Self, UsageError> {
        let text =
            std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
        if path.extension().is_some_and(|e| e == "json") {
            serde_json::from_str(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
        } else {
            Self::from_toml(&text)
        }
    }

    pub fn from_toml(text: &str) -> Result<Self, UsageError> {
        toml::from_str(text).map_err(|e| usage(format!("config: {e}")))
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("config serializes")
    }

    /// Checks every field, fills `m` from `mu` and rewrites rationals in
    /// canonical form.
    pub fn normalized(&self, max_depth: Option<usize>) -> Result<JobConfig, UsageError> {
        let mut out = self.clone();
        let base = if out.mu.is_empty() {
            out.mu_w.clone().unwrap_or_default()
        } else {
            out.mu.clone()
        };
        if base.is_empty() {
            return Err(usage("mu: missing"));
        }
        let m = out.m.unwrap_or(base.len());
        if m < 2 {
            return Err(usage(format!("m: must be at least 2, got {m}")));
        }
        out.m = Some(m);
        out.mu = canonical("mu", &base)?;
        if out.mu.len() != m {
            return Err(usage(format!(
                "mu: expected {m} entries, got {}",
                out.mu.len()
            )));
        }
        if let Some(w) = &out.mu_w {
            let w = canonical("mu_w", w)?;
            if w.len() != m {
                return Err(usage(format!(
                    "mu_w: expected {m} entries, got {}",
                    w.len()
                )));
            }
            out.mu_w = Some(w);
        }
        if let Some(l) = &out.lambda {
            let l = canonical("lambda", l)?;
            if l.len() != m {
                return Err(usage(format!(
                    "lambda: expected {m} entries, got {}",
                    l.len()
                )));
            }
            if l.iter().any(|x| x == "0") {
                return Err(usage("lambda: entries must be nonzero"));
            }
            out.lambda = Some(l);
        }
        if out.depth == 0 {
            return Err(usage("depth: must be at least 1"));
        }
        if let Some(cap) = max_depth {
            if out.depth > cap {
                return Err(usage(format!(
                    "depth: {} exceeds {MAX_DEPTH_VAR} = {cap}",
                    out.depth
                )));
            }
        }
        if let Some(i) = out.ibar {
            if !(1..=m).contains(&i) {
                return Err(usage(format!("ibar: must lie in 1..={m}, got {i}")));
            }
        }
        Ok(out)
    }

    pub fn m(&self) -> usize {
        self.m.unwrap_or(self.mu.len())
    }

    pub fn weight(&self) -> Result<Weight, UsageError> {
        Weight::parse(&self.mu).map_err(|e| usage(format!("mu: {e}")))
    }

    pub fn weight_w(&self) -> Result<Weight, UsageError> {
        match &self.mu_w {
            Some(w) => Weight::parse(w).map_err(|e| usage(format!("mu_w: {e}"))),
            None => self.weight(),
        }
    }

    pub fn lambda_or_ones(&self) -> Result<Lambda, UsageError> {
        match &self.lambda {
            Some(l) => Lambda::parse(l).map_err(|e| usage(format!("lambda: {e}"))),
            None => Ok(Lambda::ones(self.m())),
        }
    }

    /// Block profile of `mu`, from `ibar` when given and detected otherwise.
    pub fn profile(&self, mu: &Weight) -> Result<BlockProfile, UsageError> {
        let found = match self.ibar {
            Some(i) => BlockProfile::with_ibar(mu, i),
            None => BlockProfile::from_weight(mu),
        };
        found.map_err(|e| usage(format!("mu = {mu} is not a two-block weight: {e}")))
    }
}

/// `GVMLAB_MAX_DEPTH` when set to a number.
pub fn max_depth_from_env() -> Result<Option<usize>, UsageError> {
    match std::env::var(MAX_DEPTH_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| usage(format!("{MAX_DEPTH_VAR}: not a number: {v}"))),
        Err(_) => Ok(None),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn job(mu: &[&str]) -> JobConfig {
        JobConfig {
            mu: mu.iter().map(|s| s.to_string()).collect(),
            ..JobConfig::default()
        }
    }

    #[test]
    fn normalization() {
        let c = job(&["-2/4", "6/3"]).normalized(None).unwrap();
        assert_eq!(c.mu, vec!["-1/2", "2"]);
        assert_eq!(c.m, Some(2));
    }

    #[test]
    fn rejections() {
        assert!(JobConfig {
            m: Some(3),
            ..job(&["0", "0"])
        }
        .normalized(None)
        .is_err());
        assert!(JobConfig {
            depth: 0,
            ..job(&["0", "0"])
        }
        .normalized(None)
        .is_err());
        assert!(JobConfig {
            depth: 5,
            ..job(&["0", "0"])
        }
        .normalized(Some(4))
        .is_err());
        let bad_lambda = JobConfig {
            lambda: Some(vec!["1".into(), "0".into()]),
            ..job(&["0", "0"])
        };
        assert!(bad_lambda.normalized(None).is_err());
        assert!(job(&["x", "0"]).normalized(None).is_err());
    }

    #[test]
    fn toml_round_trip() {
        let c = JobConfig {
            lambda: Some(vec!["1".into(), "-3/2".into()]),
            confirm: true,
            ..job(&["-1", "-1/2"])
        }
        .normalized(None)
        .unwrap();
        assert_eq!(JobConfig::from_toml(&c.to_toml()).unwrap(), c);
    }
}
