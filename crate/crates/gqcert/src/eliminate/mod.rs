//! One verification engine per elimination lemma.
//!
//! Every engine produces a [`Certificate`]: the swept set, the surviving
//! parameter pairs (always empty on a pass), and the reproduced
//! intermediates (bound cutoffs, digit values, candidate families). A
//! counterexample never aborts a run; it lands in `survivors` and fails the
//! certificate while the other cases still execute.

pub mod bounds;
pub mod cross;
pub mod same_type;
pub mod unitary_cases;

use crate::gq::{check_divisibility, solve_order, GqOrder, PointLineCounts};
use serde::Serialize;
use serde_json::{json, Value};
use std::time::Instant;

#[derive(Clone, Debug, Serialize)]
pub struct Survivor {
    pub context: String,
    pub s: String,
    pub t: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Timing {
    pub millis: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct Certificate {
    pub case: String,
    pub paper_ref: String,
    pub range: String,
    pub survivors: Vec<Survivor>,
    pub intermediates: serde_json::Map<String, Value>,
    pub notes: Vec<String>,
    pub failed_checks: Vec<String>,
    pub pass: bool,
    pub timing: Timing,
}

/// Accumulates a certificate; `pass` is derived, never set directly.
pub struct CertBuilder {
    case: String,
    paper_ref: String,
    range: String,
    survivors: Vec<Survivor>,
    intermediates: serde_json::Map<String, Value>,
    notes: Vec<String>,
    failed_checks: Vec<String>,
    started: Instant,
}

impl CertBuilder {
    pub fn new(case: &str, paper_ref: &str, range: impl Into<String>) -> CertBuilder {
        CertBuilder {
            case: case.to_string(),
            paper_ref: paper_ref.to_string(),
            range: range.into(),
            survivors: Vec::new(),
            intermediates: serde_json::Map::new(),
            notes: Vec::new(),
            failed_checks: Vec::new(),
            started: Instant::now(),
        }
    }

    pub fn intermediate(&mut self, key: &str, value: impl Serialize) {
        self.intermediates
            .insert(key.to_string(), serde_json::to_value(value).expect("serializable"));
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    /// Records a named requirement; a false verdict fails the certificate.
    pub fn require(&mut self, name: &str, ok: bool) -> bool {
        if !ok {
            self.failed_checks.push(name.to_string());
        }
        ok
    }

    pub fn survivor(&mut self, context: impl Into<String>, order: &GqOrder) {
        self.survivors.push(Survivor {
            context: context.into(),
            s: order.s.to_string(),
            t: order.t.to_string(),
        });
    }

    /// Solves one (v, b) cell; thick orders passing the divisibility law
    /// are counterexamples, thin solutions are only counted.
    pub fn sweep_cell(&mut self, context: &str, counts: &PointLineCounts) -> CellOutcome {
        let mut outcome = CellOutcome::default();
        for order in solve_order(counts) {
            if order.is_thick() && check_divisibility(&order) {
                self.survivor(context, &order);
                outcome.survivors += 1;
            } else {
                outcome.thin_or_rejected += 1;
            }
        }
        outcome
    }

    pub fn finish(self) -> Certificate {
        let pass = self.survivors.is_empty() && self.failed_checks.is_empty();
        Certificate {
            case: self.case,
            paper_ref: self.paper_ref,
            range: self.range,
            survivors: self.survivors,
            intermediates: self.intermediates,
            notes: self.notes,
            failed_checks: self.failed_checks,
            pass,
            timing: Timing { millis: self.started.elapsed().as_millis() as u64 },
        }
    }
}

#[derive(Default, Clone, Copy, Debug)]
pub struct CellOutcome {
    pub survivors: usize,
    pub thin_or_rejected: usize,
}

/// Shared engine knobs; every cap is at least the published threshold.
#[derive(Clone, Debug, Serialize)]
pub struct EngineParams {
    pub heavy: bool,
    pub seed: u64,
    /// Cap override for open-ended sweeps.
    pub q_cap: Option<u64>,
}

impl Default for EngineParams {
    fn default() -> Self {
        EngineParams { heavy: false, seed: 0xC0FFEE, q_cap: None }
    }
}

impl EngineParams {
    /// An open-ended sweep cap, clamped to never fall below the published
    /// threshold it must cover.
    pub fn cap(&self, default_cap: u64, floor: u64) -> u64 {
        self.q_cap.unwrap_or(default_cap).max(floor)
    }
}

pub fn json_u64s(values: impl IntoIterator<Item = u64>) -> Value {
    json!(values.into_iter().collect::<Vec<u64>>())
}
