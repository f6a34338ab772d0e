//! Campaign outcome types and their JSON form.

use serde::Serialize;

/// Outcome of a campaign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

/// A point where the checked inequality failed.
#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct Counterexample {
    /// The x value or index, kept as a string so nothing is rounded.
    pub at: String,
    pub lhs: f64,
    pub rhs: f64,
}

/// The tightest margin seen and where.
#[derive(Debug, Clone, Copy, Serialize, PartialEq)]
pub struct WorstMargin {
    pub x: f64,
    pub value: f64,
}

/// What a campaign did and found. `status == Fail` exactly when
/// `counterexamples` is nonempty; `Error` carries a `detail`.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub campaign: String,
    pub status: Status,
    pub checked: u64,
    pub counterexamples: Vec<Counterexample>,
    pub worst_margin: Option<WorstMargin>,
    pub escalations: u64,
    pub wall_ms: u128,
    pub axioms_used: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl VerificationReport {
    pub fn new(campaign: impl Into<String>) -> Self {
        VerificationReport {
            campaign: campaign.into(),
            status: Status::Pass,
            checked: 0,
            counterexamples: Vec::new(),
            worst_margin: None,
            escalations: 0,
            wall_ms: 0,
            axioms_used: Vec::new(),
            detail: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Folds in a margin observation, keeping the smallest.
    pub fn observe_margin(&mut self, x: f64, value: f64) {
        match &self.worst_margin {
            Some(w) if w.value <= value => {}
            _ => self.worst_margin = Some(WorstMargin { x, value }),
        }
    }

    pub fn add_counterexample(&mut self, at: impl Into<String>, lhs: f64, rhs: f64) {
        self.counterexamples.push(Counterexample { at: at.into(), lhs, rhs });
        self.status = Status::Fail;
    }

    pub fn fail_if_counterexamples(&mut self) {
        if !self.counterexamples.is_empty() {
            self.status = Status::Fail;
        }
    }

    pub fn error(mut self, detail: impl Into<String>) -> Self {
        self.status = Status::Error;
        self.detail = Some(detail.into());
        self
    }

    /// The report with the wall clock zeroed, for determinism
    /// comparisons (everything else is reproducible bit for bit).
    pub fn normalized(&self) -> VerificationReport {
        let mut r = self.clone();
        r.wall_ms = 0;
        r
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }

    /// Process exit code convention: 0 pass, 1 fail, 3 indeterminate.
    pub fn exit_code(&self) -> i32 {
        match self.status {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Error => 3,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_schema_fields() {
        let mut r = VerificationReport::new("demo");
        r.checked = 7;
        r.observe_margin(100.0, 3.5);
        r.observe_margin(200.0, 1.25);
        r.observe_margin(300.0, 2.0);
        let v = r.to_json();
        for key in [
            "campaign", "status", "checked", "counterexamples", "worst_margin",
            "escalations", "wall_ms", "axioms_used",
        ] {
            assert!(v.get(key).is_some(), "missing {key}");
        }
        assert_eq!(v["worst_margin"]["x"], 200.0);
        assert_eq!(v["status"], "pass");
        assert_eq!(r.exit_code(), 0);
    }

    #[test]
    fn fail_wiring() {
        let mut r = VerificationReport::new("demo");
        r.add_counterexample("41", 1.0, 2.0);
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.exit_code(), 1);
        let v = r.to_json();
        assert_eq!(v["counterexamples"][0]["at"], "41");
    }
}
