//! Pass/fail records produced by the identity checks.

use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Entry {
    pub identity: String,
    pub genus: u32,
    pub pass: bool,
    pub witness: Option<String>,
}

impl Entry {
    pub fn new(identity: &str, genus: u32, pass: bool, witness: Option<String>) -> Self {
        Entry {
            identity: identity.to_string(),
            genus,
            pass,
            witness,
        }
    }

    pub fn passed(identity: &str, genus: u32) -> Self {
        Self::new(identity, genus, true, None)
    }

    pub fn failed(identity: &str, genus: u32, witness: impl Into<String>) -> Self {
        Self::new(identity, genus, false, Some(witness.into()))
    }

    /// Pass iff `ok`; the witness is only built on failure.
    pub fn check(identity: &str, genus: u32, ok: bool, witness: impl FnOnce() -> String) -> Self {
        if ok {
            Self::passed(identity, genus)
        } else {
            Self::failed(identity, genus, witness())
        }
    }
}

/// Overall pass iff every entry passes; an empty report passes.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerificationReport {
    entries: Vec<Entry>,
}

impl VerificationReport {
    pub fn push(&mut self, e: Entry) {
        self.entries.push(e);
    }

    pub fn extend(&mut self, es: impl IntoIterator<Item = Entry>) {
        self.entries.extend(es);
    }

    pub fn entries(&self) -> &[Entry] {
        &self.entries
    }

    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }

    pub fn first_failure(&self) -> Option<&Entry> {
        self.entries.iter().find(|e| !e.pass)
    }

    /// Order by `(identity, genus)` so the report does not depend on the
    /// order the checks finished in.
    pub fn sort(&mut self) {
        self.entries
            .sort_by(|a, b| (&a.identity, a.genus).cmp(&(&b.identity, b.genus)));
    }

    pub fn to_json(&self) -> Value {
        serde_json::json!({
            "pass": self.all_pass(),
            "entries": self.entries,
        })
    }
}

impl FromIterator<Entry> for VerificationReport {
    fn from_iter<I: IntoIterator<Item = Entry>>(iter: I) -> Self {
        VerificationReport {
            entries: iter.into_iter().collect(),
        }
    }
}
