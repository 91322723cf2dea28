//! Shared verdict vocabulary for verification reports.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "fail")]
    Fail,
    /// The claim's hypotheses admit no instance in the requested range.
    #[serde(rename = "vacuous")]
    Vacuous,
    /// The run would exceed a configured size cap.
    #[serde(rename = "skipped-cap")]
    SkippedCap,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn is_failure(self) -> bool {
        self == Verdict::Fail
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Vacuous => "vacuous",
            Verdict::SkippedCap => "skipped-cap",
        })
    }
}

/// Named parameters of a concrete instance, e.g. `{"k": "5", "m": "3"}`.
pub type Instance = BTreeMap<String, String>;

pub fn instance<const N: usize>(pairs: [(&str, String); N]) -> Instance {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}
