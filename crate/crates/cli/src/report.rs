use std::fmt::Write as _;

use orthograph::combinat::CheckReport;
use orthograph::report::Verdict;
use serde::Serialize;
use serde_json::{json, Value};

/// Result of one claim run. Failures always carry a counterexample.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub claim_id: String,
    pub anchor: String,
    pub k: u32,
    pub verdict: Verdict,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

/// What a claim runner hands back before the registry stamps it.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub verdict: Verdict,
    pub detail: String,
    pub witness: Option<Value>,
    pub counterexample: Option<Value>,
}

impl Outcome {
    pub fn pass(detail: impl Into<String>) -> Self {
        Outcome { verdict: Verdict::Pass, detail: detail.into(), witness: None, counterexample: None }
    }

    pub fn fail(detail: impl Into<String>, counterexample: Value) -> Self {
        Outcome { verdict: Verdict::Fail, detail: detail.into(), witness: None, counterexample: Some(counterexample) }
    }

    pub fn vacuous(detail: impl Into<String>) -> Self {
        Outcome { verdict: Verdict::Vacuous, detail: detail.into(), witness: None, counterexample: None }
    }

    pub fn skipped(detail: impl Into<String>) -> Self {
        Outcome { verdict: Verdict::SkippedCap, detail: detail.into(), witness: None, counterexample: None }
    }

    pub fn with_witness(mut self, witness: impl Serialize) -> Self {
        self.witness = Some(serde_json::to_value(witness).expect("witness serializes"));
        self
    }

    pub fn from_check(r: CheckReport) -> Self {
        let detail = format!("{} over {}", r.lemma, r.range);
        let counterexample = r.counterexample.map(|c| json!(c));
        match r.verdict {
            Verdict::Fail => Outcome::fail(detail, counterexample.unwrap_or(Value::Null)),
            verdict => Outcome { verdict, detail, witness: None, counterexample: None },
        }
    }
}

pub fn render_text(reports: &[Report]) -> String {
    let mut out = String::new();
    for r in reports {
        let _ = write!(out, "{:<11} {:<22} k={:<3} {}: {}", r.verdict.to_string(), r.claim_id, r.k, r.anchor, r.detail);
        if let Some(ms) = r.elapsed_ms {
            let _ = write!(out, " [{ms} ms]");
        }
        if let Some(c) = &r.counterexample {
            let _ = write!(out, "\n    counterexample: {c}");
        }
        out.push('\n');
    }
    out
}
