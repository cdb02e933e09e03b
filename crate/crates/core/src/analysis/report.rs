use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// A hypothesis of the claim does not hold on this group.
    Skip,
    /// Informational finding; never affects the verdict.
    Note,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

/// One claim evaluated on a concrete group.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub label: String,
    pub lhs: String,
    pub rhs: String,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Check {
    pub fn new(label: impl Into<String>, lhs: impl ToString, rhs: impl ToString, ok: bool) -> Self {
        Check {
            label: label.into(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            status: Status::from_bool(ok),
            witnesses: Vec::new(),
            note: None,
        }
    }

    /// Compares two values for equality.
    pub fn eq<T: ToString + PartialEq>(label: impl Into<String>, lhs: T, rhs: T) -> Self {
        let ok = lhs == rhs;
        Check::new(label, lhs, rhs, ok)
    }

    pub fn skipped(label: impl Into<String>, reason: impl Into<String>) -> Self {
        Check {
            label: label.into(),
            lhs: String::new(),
            rhs: String::new(),
            status: Status::Skip,
            witnesses: Vec::new(),
            note: Some(reason.into()),
        }
    }

    pub fn note(label: impl Into<String>, lhs: impl ToString, rhs: impl ToString, note: impl Into<String>) -> Self {
        Check {
            label: label.into(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            status: Status::Note,
            witnesses: Vec::new(),
            note: Some(note.into()),
        }
    }

    pub fn with_witness(mut self, w: impl Into<String>) -> Self {
        self.witnesses.push(w.into());
        self
    }

    pub fn with_witnesses(mut self, ws: impl IntoIterator<Item = String>) -> Self {
        self.witnesses.extend(ws);
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Hypothesis {
    pub met: bool,
    pub detail: String,
}

/// Outcome of checking one statement on one group.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub theorem: String,
    pub group: String,
    pub hypothesis: Hypothesis,
    pub checks: Vec<Check>,
    /// No check failed.
    pub pass: bool,
}

impl TheoremReport {
    pub fn new(theorem: impl Into<String>, group: impl Into<String>, hypothesis: impl Into<String>) -> Self {
        TheoremReport {
            theorem: theorem.into(),
            group: group.into(),
            hypothesis: Hypothesis { met: true, detail: hypothesis.into() },
            checks: Vec::new(),
            pass: true,
        }
    }

    /// Report for a statement whose hypothesis fails on the group.
    pub fn not_applicable(theorem: impl Into<String>, group: impl Into<String>, detail: impl Into<String>) -> Self {
        TheoremReport {
            theorem: theorem.into(),
            group: group.into(),
            hypothesis: Hypothesis { met: false, detail: detail.into() },
            checks: Vec::new(),
            pass: true,
        }
    }

    pub fn push(&mut self, check: Check) {
        if check.status == Status::Fail {
            self.pass = false;
        }
        self.checks.push(check);
    }

    pub fn count(&self, status: Status) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }
}
