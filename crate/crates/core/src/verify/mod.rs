//! Named verification suites.
//!
//! Each suite recomputes closed formulas from the ring models and compares
//! exactly. Suites are deterministic: the same parameters give the same report.

mod blowup;
mod charclass_suites;
mod coeff_suites;
mod model;
mod pe_suites;
mod pencil_suites;
mod strata_suites;

use std::fmt::{self, Debug};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::pool::pool;

pub use model::{EtaClass, FreePeRing};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Discrepancy,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Discrepancy => "DISCREPANCY",
        })
    }
}

/// A failed comparison: what was computed where, against what.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub input: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: String,
    pub status: Status,
    pub checks_run: usize,
    pub witnesses: Vec<Witness>,
    pub notes: Vec<String>,
}

impl Report {
    /// Whether this report is the outcome the suite is registered to produce.
    pub fn meets_expectation(&self) -> bool {
        match expected_discrepancy(&self.suite) {
            None => self.status == Status::Pass,
            Some(w) => self.status == Status::Discrepancy && self.witnesses.contains(&w),
        }
    }
}

/// Bounds and knobs shared by the suites. `None` means the suite default.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuiteParams {
    /// Upper bound on the main size parameter (`N`, `n` or rank).
    pub max_n: Option<u32>,
    /// Sample `d` in `1..=d_max` instead of the default `1..=N+3`.
    pub d_max: Option<u32>,
    /// Number of random cases for randomized suites.
    pub samples: Option<usize>,
    /// Seed for randomized suites.
    pub seed: Option<u64>,
}

impl SuiteParams {
    pub fn max_n_or(&self, default: u32) -> u32 {
        self.max_n.unwrap_or(default)
    }

    /// Sample points for `d` at fiber dimension `n`.
    pub(crate) fn d_samples(&self, n: u32) -> Vec<u32> {
        let top = self.d_max.unwrap_or(n + 3);
        (1..=top).collect()
    }
}

/// Registered suite names, in reporting order.
pub const SUITES: &[&str] = &[
    "formal-coeffs",
    "squared-closed-as-printed",
    "rho-line",
    "rho-split",
    "phi-mult",
    "pe-sigma",
    "pe-c1cN",
    "pe-quotient",
    "pe-derivation",
    "blowup-cr",
    "blowup-quadric-beta",
    "u-arith",
    "v-from-u",
    "td-ratio-deg2",
    "cross-linear-pe",
    "cy-semistable",
];

/// The witness a suite must report when its registered outcome is a discrepancy.
pub fn expected_discrepancy(suite: &str) -> Option<Witness> {
    match suite {
        "squared-closed-as-printed" => Some(coeff_suites::documented_squared_witness()),
        _ => None,
    }
}

pub fn run_suite(name: &str, params: &SuiteParams) -> Result<Report> {
    let report = match name {
        "formal-coeffs" => coeff_suites::formal_coeffs(params),
        "squared-closed-as-printed" => coeff_suites::squared_as_printed(params),
        "rho-line" => charclass_suites::rho_line(params),
        "rho-split" => charclass_suites::rho_split(params),
        "phi-mult" => charclass_suites::phi_mult(params),
        "pe-sigma" => pe_suites::pe_sigma(params),
        "pe-c1cN" => pe_suites::pe_c1cn(params),
        "pe-quotient" => pe_suites::pe_quotient(params),
        "pe-derivation" => pe_suites::pe_derivation(params),
        "blowup-cr" => blowup::blowup_cr(params),
        "blowup-quadric-beta" => blowup::quadric_beta(params),
        "u-arith" => blowup::u_arith(params),
        "v-from-u" => blowup::v_from_u(params),
        "td-ratio-deg2" => strata_suites::td_ratio_deg2(params),
        "cross-linear-pe" => pencil_suites::cross_linear_pe(params),
        "cy-semistable" => strata_suites::cy_semistable(params),
        other => return Err(Error::UnknownSuite(other.to_string())),
    };
    Ok(report.finish(name))
}

/// Runs the named suites on the shared pool; output order follows `names`.
pub fn run_suites(names: &[&str], params: &SuiteParams) -> Result<Vec<Report>> {
    pool().install(|| names.par_iter().map(|n| run_suite(n, params)).collect())
}

pub fn run_all(params: &SuiteParams) -> Vec<Report> {
    run_suites(SUITES, params).expect("registered suites")
}

/// Maximum number of witnesses kept per suite; the rest are counted in a note.
const WITNESS_CAP: usize = 25;

/// Accumulates checks for one suite or one slice of a suite.
#[derive(Debug, Default)]
pub(crate) struct Checker {
    checks: usize,
    failures: usize,
    witnesses: Vec<Witness>,
    notes: Vec<String>,
    discrepancy: bool,
}

impl Checker {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn check_eq<T: PartialEq + Debug>(&mut self, input: impl FnOnce() -> String, expected: &T, actual: &T) {
        self.checks += 1;
        if expected != actual {
            self.fail(input(), format!("{expected:?}"), format!("{actual:?}"));
        }
    }

    pub fn check(&mut self, ok: bool, input: impl FnOnce() -> String, expected: impl FnOnce() -> String, actual: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.fail(input(), expected(), actual());
        }
    }

    fn fail(&mut self, input: String, expected: String, actual: String) {
        self.failures += 1;
        if self.witnesses.len() < WITNESS_CAP {
            self.witnesses.push(Witness { input, expected, actual });
        }
    }

    /// Records a known deviation; the suite reports `DISCREPANCY` instead of `FAIL`.
    pub fn discrepancy(&mut self, w: Witness) {
        self.discrepancy = true;
        self.witnesses.push(w);
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    pub fn merge(&mut self, other: Checker) {
        self.checks += other.checks;
        self.failures += other.failures;
        self.discrepancy |= other.discrepancy;
        for w in other.witnesses {
            if self.witnesses.len() < WITNESS_CAP {
                self.witnesses.push(w);
            }
        }
        self.notes.extend(other.notes);
    }

    pub fn merged(parts: Vec<Checker>) -> Checker {
        let mut out = Checker::new();
        for p in parts {
            out.merge(p);
        }
        out
    }

    fn finish(mut self, name: &str) -> Report {
        let omitted = self.failures.saturating_sub(self.witnesses.len().min(self.failures));
        if omitted > 0 {
            self.notes.push(format!("{omitted} further failing checks omitted"));
        }
        let status = if self.failures > 0 {
            Status::Fail
        } else if self.discrepancy {
            Status::Discrepancy
        } else {
            Status::Pass
        };
        Report {
            suite: name.to_string(),
            status,
            checks_run: self.checks,
            witnesses: self.witnesses,
            notes: self.notes,
        }
    }
}
