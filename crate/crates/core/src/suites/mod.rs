//! End-to-end identity checks. Every suite returns a [`VerificationReport`]
//! with one case per compared quantity.

mod elliptic;
mod no;
mod trace;
mod wreath_checks;

use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::coeff::{random_eval_point, EvalPoint, LaurentPoly, PointConfig};
use crate::error::{Error, Result};

pub use elliptic::{elliptic_core_independence, elliptic_sum_side, theta, theta_symmetry_check, EllipticConfig};
pub use no::{
    box_ratio, classical_check, classical_product_printed, core_generating_function, hook_ratio,
    no_modular_product_side, no_modular_product_side_exact, no_modular_sum_side, no_modular_sum_side_exact,
    no_modular_verify, no_weak_form_verify, qtu_t, NoConfig, NoMode, PochhammerReading, PochhammerSpec, WeakConfig,
};
pub use trace::{trace_check, trace_lhs, trace_rhs, TraceCase, TraceConfig};
pub use wreath_checks::{
    delta_suite, ext_pairing_suite, hook_norm, norm_suite, pieri_suite, r1_sanity_suite, tesler_suite, PieriKind,
    WreathSuiteConfig,
};

/// How a suite evaluates coefficients.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SuiteMode {
    /// Exact where cheap, evaluation points above a size threshold.
    #[default]
    Auto,
    Exact,
    Points,
    Series,
}

impl std::str::FromStr for SuiteMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(Self::Auto),
            "exact" => Ok(Self::Exact),
            "points" => Ok(Self::Points),
            "series" => Ok(Self::Series),
            _ => Err(Error::InvalidInput(format!("unknown mode {}", s))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CaseStatus {
    Pass,
    Fail,
    Error,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CaseResult {
    pub key: String,
    pub status: CaseStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub params: Value,
    pub cases: Vec<CaseResult>,
    pub wall_ms: u128,
    /// Informational outcomes that do not affect the verdict.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(skip)]
    started: Option<StartTime>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
struct StartTime(Instant);

impl VerificationReport {
    pub fn new(suite: &str, params: Value) -> Self {
        Self {
            suite: suite.to_string(),
            params,
            cases: Vec::new(),
            wall_ms: 0,
            notes: Vec::new(),
            started: Some(StartTime(Instant::now())),
        }
    }

    /// Records a comparison; the canonical forms are kept only on failure.
    pub fn check(
        &mut self,
        key: impl Into<String>,
        ok: bool,
        lhs: impl FnOnce() -> String,
        rhs: impl FnOnce() -> String,
    ) {
        let (lhs, rhs) = if ok { (None, None) } else { (Some(lhs()), Some(rhs())) };
        self.cases.push(CaseResult {
            key: key.into(),
            status: if ok { CaseStatus::Pass } else { CaseStatus::Fail },
            lhs,
            rhs,
            note: None,
        });
    }

    /// Records a pass/fail case with a free-form witness.
    pub fn flag(&mut self, key: impl Into<String>, ok: bool, note: impl FnOnce() -> String) {
        self.cases.push(CaseResult {
            key: key.into(),
            status: if ok { CaseStatus::Pass } else { CaseStatus::Fail },
            lhs: None,
            rhs: None,
            note: if ok { None } else { Some(note()) },
        });
    }

    pub fn error(&mut self, key: impl Into<String>, e: &Error) {
        self.cases.push(CaseResult {
            key: key.into(),
            status: CaseStatus::Error,
            lhs: None,
            rhs: None,
            note: Some(e.to_string()),
        });
    }

    /// Runs `f`, turning an error into an error case.
    pub fn attempt(&mut self, key: impl Into<String>, f: impl FnOnce(&mut Self) -> Result<()>) {
        let key = key.into();
        if let Err(e) = f(self) {
            self.error(key, &e);
        }
    }

    pub fn note(&mut self, text: String) {
        self.notes.push(text);
    }

    pub fn merge(&mut self, other: VerificationReport) {
        self.cases.extend(other.cases);
        self.notes.extend(other.notes);
    }

    pub fn finish(mut self) -> Self {
        if let Some(StartTime(t)) = self.started.take() {
            self.wall_ms = t.elapsed().as_millis();
        }
        self
    }

    pub fn passed(&self) -> bool {
        !self.cases.is_empty() && self.cases.iter().all(|c| c.status == CaseStatus::Pass)
    }

    pub fn count(&self, status: CaseStatus) -> usize {
        self.cases.iter().filter(|c| c.status == status).count()
    }

    pub fn first_failure(&self) -> Option<&CaseResult> {
        self.cases.iter().find(|c| c.status != CaseStatus::Pass)
    }

    /// One line: suite, verdict and counts.
    pub fn summary(&self) -> String {
        format!(
            "{} {}: {} pass, {} fail, {} error ({} ms)",
            if self.passed() { "PASS" } else { "FAIL" },
            self.suite,
            self.count(CaseStatus::Pass),
            self.count(CaseStatus::Fail),
            self.count(CaseStatus::Error),
            self.wall_ms
        )
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).unwrap_or(Value::Null)
    }
}

/// `k` deterministic points avoiding the given polynomials.
pub fn eval_points(seed: u64, k: usize, forbidden: &[LaurentPoly]) -> Result<Vec<EvalPoint>> {
    let cfg = PointConfig::default();
    (0..k)
        .map(|i| random_eval_point(seed.wrapping_add(i as u64 * 7919), forbidden, &cfg))
        .collect()
}
