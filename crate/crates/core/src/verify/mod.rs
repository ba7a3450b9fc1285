//! Replays of the published results: table rows, exhaustive sweeps over
//! low- and high-cardinality connection sets, end-to-end core checks, and
//! the certified counterexamples.

mod counterexamples;
pub mod fixtures;
mod sweep;
mod tables;

use std::fmt;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::gfp::DEFAULT_ENUMERATION_CAP;
use crate::homcore::DEFAULT_SEARCH_CAP;

pub use counterexamples::{counterexample, verify_counterexamples, Counterexample};
pub use sweep::{low_regime_sets, sweep_proposition, verify_theorem_end_to_end};
pub use tables::verify_table;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Cap on `p^d` for witness searches.
    pub witness_cap: u64,
    /// Cap on vertex count for exact core searches.
    pub max_vertices: usize,
    /// Also search the high-cardinality sets directly instead of relying on
    /// duality alone.
    pub direct: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            witness_cap: DEFAULT_ENUMERATION_CAP,
            max_vertices: DEFAULT_SEARCH_CAP,
            direct: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub item: String,
    pub reason: String,
}

/// Counts for one part of a suite.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    pub name: String,
    pub examined: u64,
    pub passed: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Parameters {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table: Option<u8>,
    /// Low regime: `|C| < low_bound`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub low_bound: Option<u64>,
    /// High regime: `|C| ≥ high_bound`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub high_bound: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub suite: String,
    pub parameters: Parameters,
    pub examined: u64,
    pub passed: u64,
    pub failed: Vec<Failure>,
    pub elapsed_ms: u64,
    #[serde(default)]
    pub tallies: Vec<Tally>,
    /// Diagnostics that are recorded but not asserted.
    #[serde(default)]
    pub notes: Vec<String>,
}

impl SweepReport {
    pub fn succeeded(&self) -> bool {
        self.failed.is_empty()
    }

    /// Merges reports of several runs into one under `suite`.
    pub fn combine(suite: &str, parameters: Parameters, reports: Vec<SweepReport>) -> Self {
        let mut out = Recorder::new(suite, parameters).finish();
        for r in reports {
            out.examined += r.examined;
            out.passed += r.passed;
            out.elapsed_ms += r.elapsed_ms;
            let prefix = |s: String| format!("{}: {s}", r.suite);
            out.failed.extend(r.failed.into_iter().map(|f| Failure {
                item: prefix(f.item),
                reason: f.reason,
            }));
            out.tallies.extend(r.tallies.into_iter().map(|t| Tally {
                name: prefix(t.name),
                ..t
            }));
            out.notes.extend(r.notes.into_iter().map(prefix));
        }
        out
    }
}

impl fmt::Display for SweepReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.succeeded() { "PASS" } else { "FAIL" };
        writeln!(
            f,
            "{status} {}: {} examined, {} passed, {} failed ({} ms)",
            self.suite,
            self.examined,
            self.passed,
            self.failed.len(),
            self.elapsed_ms
        )?;
        for t in &self.tallies {
            writeln!(
                f,
                "  {}: {} examined, {} passed",
                t.name, t.examined, t.passed
            )?;
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        for x in &self.failed {
            writeln!(f, "  failed {}: {}", x.item, x.reason)?;
        }
        Ok(())
    }
}

/// Accumulates checks for one suite.
pub(crate) struct Recorder {
    suite: String,
    parameters: Parameters,
    start: Instant,
    examined: u64,
    passed: u64,
    failed: Vec<Failure>,
    tallies: Vec<Tally>,
    notes: Vec<String>,
}

impl Recorder {
    pub(crate) fn new(suite: &str, parameters: Parameters) -> Self {
        Recorder {
            suite: suite.to_string(),
            parameters,
            start: Instant::now(),
            examined: 0,
            passed: 0,
            failed: Vec::new(),
            tallies: Vec::new(),
            notes: Vec::new(),
        }
    }

    /// Records one item; `Err(reason)` is a failure.
    pub(crate) fn item(&mut self, item: impl fmt::Display, outcome: Result<(), String>) {
        self.examined += 1;
        match outcome {
            Ok(()) => self.passed += 1,
            Err(reason) => self.failed.push(Failure {
                item: item.to_string(),
                reason,
            }),
        }
    }

    pub(crate) fn tally(&mut self, name: &str, examined: u64, passed: u64) {
        self.tallies.push(Tally {
            name: name.to_string(),
            examined,
            passed,
        });
    }

    pub(crate) fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub(crate) fn finish(self) -> SweepReport {
        SweepReport {
            suite: self.suite,
            parameters: self.parameters,
            examined: self.examined,
            passed: self.passed,
            failed: self.failed,
            elapsed_ms: self.start.elapsed().as_millis() as u64,
            tallies: self.tallies,
            notes: self.notes,
        }
    }
}

/// `Ok(())` when `cond` holds, else the formatted reason.
pub(crate) fn ensure(cond: bool, reason: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(reason())
    }
}
