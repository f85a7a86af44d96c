use std::time::Instant;

use gvmlab::checks::{run_suites, CheckOutcome, SuiteConfig};
use gvmlab::gl::SimpleModule;
use gvmlab::gvm::{
    simplicity_criterion, singular_search, structural_checks, GvmModule, SearchResult,
};
use gvmlab::witt::{iso_verify, tensor_simplicity};
use gvmlab::Error;

use crate::config::{JobConfig, UsageError};
use crate::report::{LineReport, Report, VerdictReport};

/// The four subcommands.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Simplicity,
    Search,
    Verify,
    Iso,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Simplicity => "simplicity",
            Command::Search => "search",
            Command::Verify => "verify",
            Command::Iso => "iso",
        }
    }
}

/// Failure to produce a report at all.
#[derive(Debug)]
pub enum RunError {
    Usage(UsageError),
    Engine(Error),
}

impl std::fmt::Display for RunError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RunError::Usage(e) => write!(f, "usage: {e}"),
            RunError::Engine(e) => write!(f, "{e}"),
        }
    }
}

impl From<UsageError> for RunError {
    fn from(e: UsageError) -> Self {
        RunError::Usage(e)
    }
}

impl From<Error> for RunError {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(msg) | Error::Domain(msg) => RunError::Usage(UsageError(msg)),
            Error::Dimension { expected, found } => RunError::Usage(UsageError(format!(
                "dimension mismatch: expected {expected}, got {found}"
            ))),
            other => RunError::Engine(other),
        }
    }
}

/// Runs `command` on an already normalized config.
pub fn run(command: Command, config: &JobConfig) -> Result<Report, RunError> {
    let start = Instant::now();
    let mut report = Report::new(command.name(), config.clone());
    match command {
        Command::Simplicity => simplicity(config, &mut report)?,
        Command::Search => search(config, &mut report)?,
        Command::Verify => verify(config, &mut report)?,
        Command::Iso => iso(config, &mut report)?,
    }
    report.timing_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

fn gvm_for(config: &JobConfig, degree: usize) -> Result<GvmModule<SimpleModule>, UsageError> {
    let mu = config.weight()?;
    let m = mu.len();
    Ok(GvmModule::new(SimpleModule::new(
        mu,
        (m - 1) * degree + 2 * m,
    )))
}

fn record_lines(
    report: &mut Report,
    gvm: &GvmModule<SimpleModule>,
    found: &SearchResult<gvmlab::gl::PbwMonomial>,
) {
    for line in &found.lines {
        report
            .lines
            .push(LineReport::new(gvm.inner(), line, gvm.render(&line.vector)));
    }
    if let Some(why) = &found.truncated {
        report.mark_truncated(format!(
            "{why}; completed degree {} of {}, V needs drop height {}",
            found.completed_degree, found.requested_degree, found.v_height_needed
        ));
    }
}

fn simplicity(config: &JobConfig, report: &mut Report) -> Result<(), RunError> {
    let mu = config.weight()?;
    let profile = config.profile(&mu)?;
    let verdict = simplicity_criterion(&mu, &profile)?;
    let mut out = VerdictReport::new(&verdict, profile.ibar);
    if config.confirm {
        let degree = verdict
            .predicted
            .iter()
            .map(|p| p.degree() as usize)
            .max()
            .unwrap_or(config.depth);
        let gvm = gvm_for(config, degree)?;
        let found = singular_search(&gvm, degree as u32)?;
        record_lines(report, &gvm, &found);
        let leadings: Vec<_> = found.lines.iter().map(|l| &l.leading).collect();
        let agreement = found.truncated.is_none()
            && found.minimal().map(|l| &l.leading) == verdict.predicted.first()
            && verdict.predicted.iter().all(|p| leadings.contains(&p));
        out.agreement = Some(agreement);
        report.push_check(CheckOutcome::new(
            "search confirms the criterion",
            agreement,
            format!("{} line(s) up to degree {degree}", found.lines.len()),
        ));
    }
    report.verdict = Some(out);
    Ok(())
}

fn search(config: &JobConfig, report: &mut Report) -> Result<(), RunError> {
    let gvm = gvm_for(config, config.depth)?;
    let found = singular_search(&gvm, config.depth as u32)?;
    record_lines(report, &gvm, &found);
    match found.minimal() {
        Some(line) => {
            for c in structural_checks(&gvm, &line.vector)? {
                report.push_check(c);
            }
        }
        None if found.truncated.is_none() => {
            report
                .notes
                .push(format!("no singular vectors up to depth {}", config.depth));
        }
        None => {}
    }
    Ok(())
}

fn verify(config: &JobConfig, report: &mut Report) -> Result<(), RunError> {
    let suite = SuiteConfig {
        mu: config.weight()?,
        lambda: config.lambda_or_ones()?,
        depth: config.depth,
        ibar: config.ibar,
    };
    match run_suites(&suite, config.suite.as_deref()) {
        Ok(checks) => checks.into_iter().for_each(|c| report.push_check(c)),
        Err(e) if e.is_truncation() => report.mark_truncated(e.to_string()),
        Err(e) => return Err(e.into()),
    }
    Ok(())
}

fn iso(config: &JobConfig, report: &mut Report) -> Result<(), RunError> {
    let lambda = match &config.lambda {
        Some(_) => config.lambda_or_ones()?,
        None => return Err(UsageError("lambda: required by iso".into()).into()),
    };
    let mu_w = config.weight_w()?;
    let iso = iso_verify(&mu_w, &lambda, config.depth as u32, config.depth)?;
    for g in &iso.generators {
        report.push_check(CheckOutcome::new(
            format!("isomorphism intertwines {}", g.generator),
            g.passed,
            g.counterexample
                .clone()
                .unwrap_or_else(|| format!("{} basis vectors", g.checked)),
        ));
    }
    report.push_check(CheckOutcome::new(
        "sigma_lambda is a homomorphism",
        iso.sigma_homomorphism,
        "all generator pairs",
    ));
    report.push_check(CheckOutcome::new(
        "standard embedding is a homomorphism",
        iso.standard_homomorphism,
        "all generator pairs",
    ));
    report.push_check(CheckOutcome::new(
        "closed forms agree with pi",
        iso.sprime_matches_pi,
        format!("{} applications", iso.sprime_checked),
    ));
    if let Some(why) = iso.truncated {
        report.mark_truncated(why);
    }
    match config.profile(&mu_w) {
        Ok(profile) => match tensor_simplicity(&lambda, &mu_w, &profile) {
            Ok(v) => {
                report.push_check(CheckOutcome::new(
                    "tensor simplicity equals the twisted criterion",
                    true,
                    format!("simple = {}", v.simple),
                ));
                report.verdict = Some(VerdictReport::new(&v, profile.ibar));
            }
            Err(Error::Consistency(msg)) => {
                report.push_check(CheckOutcome::new(
                    "tensor simplicity equals the twisted criterion",
                    false,
                    msg,
                ));
            }
            Err(e) => return Err(e.into()),
        },
        Err(e) => report
            .notes
            .push(format!("simplicity cross-check skipped: {e}")),
    }
    Ok(())
}
