//! Running an instance end to end and writing the report document.

use serde::Serialize;

use hilbound_core::checks::Check;
use hilbound_core::{analyze, evaluate, Analysis, AnalysisOptions, BoundReport, InstanceInvariants};

use crate::instance::{InstanceError, InstanceFile};

pub const REPORT_VERSION: &str = "1";

#[derive(Debug, thiserror::Error)]
pub enum RunError {
    #[error(transparent)]
    Input(#[from] InstanceError),
    #[error("analysis failed: {0}")]
    Engine(hilbound_core::Error),
}

impl RunError {
    /// Process exit code: 2 for bad input, 1 for engine failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            RunError::Input(_) | RunError::Engine(hilbound_core::Error::NotPrimary) => 2,
            RunError::Engine(_) => 1,
        }
    }
}

/// Command-line overrides of the options stored in an instance file.
#[derive(Clone, Copy, Debug, Default)]
pub struct Overrides {
    pub n_max: Option<u32>,
    pub trials: Option<u32>,
    pub samples: Option<u32>,
    pub seed: Option<u64>,
    pub strict: bool,
}

impl Overrides {
    pub fn apply(&self, base: AnalysisOptions) -> AnalysisOptions {
        AnalysisOptions {
            n_max: self.n_max.unwrap_or(base.n_max),
            trials: self.trials.unwrap_or(base.trials),
            samples: self.samples.unwrap_or(base.samples),
            seed: self.seed.unwrap_or(base.seed),
        }
    }
}

/// A fully evaluated instance.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub instance: InstanceFile,
    pub options: AnalysisOptions,
    pub analysis: Analysis,
    pub bounds: BoundReport,
    pub violations: Vec<String>,
}

impl Outcome {
    pub fn invariants(&self) -> &InstanceInvariants {
        &self.analysis.invariants
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn report(&self) -> Report<'_> {
        Report {
            version: REPORT_VERSION,
            instance: &self.instance,
            options: self.options,
            invariants: &self.analysis.invariants,
            checks: &self.analysis.checks,
            bounds: &self.bounds,
            violations: &self.violations,
            passed: self.passed(),
        }
    }

    pub fn to_json(&self) -> String {
        to_sorted_json(&self.report())
    }
}

#[derive(Serialize)]
pub struct Report<'a> {
    pub version: &'static str,
    pub instance: &'a InstanceFile,
    pub options: AnalysisOptions,
    pub invariants: &'a InstanceInvariants,
    pub checks: &'a [Check],
    pub bounds: &'a BoundReport,
    pub violations: &'a [String],
    pub passed: bool,
}

/// Pretty JSON with every object's keys in sorted order.
pub fn to_sorted_json<T: Serialize>(value: &T) -> String {
    let value = serde_json::to_value(value).expect("report serializes");
    let mut s = serde_json::to_string_pretty(&value).expect("value serializes");
    s.push('\n');
    s
}

/// Superficial certificates whose reduction number differs from the
/// postulation number, which no superficial element can do in dimension one.
fn unconfirmed(inv: &InstanceInvariants) -> impl Iterator<Item = usize> + '_ {
    let pn = inv.graded.reg as u32;
    inv.certificates.iter().enumerate().filter(move |(_, c)| c.reduction_number != pn).map(|(i, _)| i)
}

pub fn run(instance: &InstanceFile, overrides: &Overrides) -> Result<Outcome, RunError> {
    let built = instance.build()?;
    let options = overrides.apply(instance.options.resolve());
    let analysis = analyze(&built.ideal, &built.module, instance.lift, &options).map_err(RunError::Engine)?;
    let bounds = evaluate(&analysis.invariants).map_err(RunError::Engine)?;
    let mut violations: Vec<String> = analysis.checks.iter().filter(|c| !c.holds).map(|c| format!("check:{}", c.id)).collect();
    violations.extend(bounds.violations().into_iter().map(|id| format!("bound:{id}")));
    if overrides.strict {
        violations.extend(unconfirmed(&analysis.invariants).map(|i| format!("certificate:{i}")));
    }
    Ok(Outcome { instance: instance.clone(), options, analysis, bounds, violations })
}
