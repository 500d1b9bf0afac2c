//! Structured verdicts returned by every verification routine.

use std::fmt::Write as _;

use serde::Serialize;

use crate::linalg::{is_zero_vector, Vector};
use crate::scalar::{self, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
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

/// The first violated identity: where it failed and both sides there.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub identity: String,
    pub at: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    /// For equivalence suites: the common verdict of the compared statements
    /// when they agree.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<bool>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub children: Vec<CheckReport>,
}

impl CheckReport {
    pub fn pass(name: impl Into<String>) -> Self {
        CheckReport {
            name: name.into(),
            status: Status::Pass,
            witness: None,
            verdict: None,
            notes: Vec::new(),
            children: Vec::new(),
        }
    }

    pub fn fail(name: impl Into<String>, witness: Witness) -> Self {
        CheckReport {
            status: Status::Fail,
            witness: Some(witness),
            ..Self::pass(name)
        }
    }

    pub fn from_witness(name: impl Into<String>, witness: Option<Witness>) -> Self {
        match witness {
            Some(w) => Self::fail(name, w),
            None => Self::pass(name),
        }
    }

    /// Passes iff every child passes.
    pub fn all(name: impl Into<String>, children: Vec<CheckReport>) -> Self {
        let ok = children.iter().all(CheckReport::passed);
        CheckReport {
            status: Status::from_bool(ok),
            children,
            ..Self::pass(name)
        }
    }

    /// Passes iff all children share one verdict; that verdict is recorded.
    pub fn agreement(name: impl Into<String>, children: Vec<CheckReport>) -> Self {
        let first = children.first().map(CheckReport::passed);
        let agree = children.iter().all(|c| Some(c.passed()) == first);
        let verdicts: Vec<&str> = children
            .iter()
            .map(|c| if c.passed() { "pass" } else { "fail" })
            .collect();
        CheckReport {
            status: Status::from_bool(agree),
            verdict: if agree { first } else { None },
            notes: vec![format!("verdicts: [{}]", verdicts.join(", "))],
            children,
            ..Self::pass(name)
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Verdicts of the direct children, in order.
    pub fn verdict_vector(&self) -> Vec<bool> {
        self.children.iter().map(CheckReport::passed).collect()
    }

    pub fn find(&self, name: &str) -> Option<&CheckReport> {
        if self.name == name {
            return Some(self);
        }
        self.children.iter().find_map(|c| c.find(name))
    }

    pub fn count_failures(&self) -> usize {
        if self.children.is_empty() {
            usize::from(!self.passed())
        } else {
            self.children.iter().map(CheckReport::count_failures).sum()
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        self.write_text(&mut out, 0);
        out
    }

    fn write_text(&self, out: &mut String, depth: usize) {
        let pad = "  ".repeat(depth);
        let tag = if self.passed() { "PASS" } else { "FAIL" };
        let _ = writeln!(out, "{pad}[{tag}] {}", self.name);
        if let Some(w) = &self.witness {
            let _ = writeln!(
                out,
                "{pad}    {} at {}: lhs = {}, rhs = {}",
                w.identity, w.at, w.lhs, w.rhs
            );
        }
        for note in &self.notes {
            let _ = writeln!(out, "{pad}    note: {note}");
        }
        for child in &self.children {
            child.write_text(out, depth + 1);
        }
    }
}

pub fn format_vector(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(scalar::format).collect();
    format!("({})", parts.join(", "))
}

/// Values of a bilinear expression on all ordered pairs of basis vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairTable {
    size: usize,
    entries: Vec<Vector>,
}

impl PairTable {
    pub fn build(size: usize, mut f: impl FnMut(usize, usize) -> Vector) -> Self {
        let mut entries = Vec::with_capacity(size * size);
        for u in 0..size {
            for v in 0..size {
                entries.push(f(u, v));
            }
        }
        PairTable { size, entries }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, u: usize, v: usize) -> &Vector {
        &self.entries[u * self.size + v]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| is_zero_vector(e))
    }

    pub fn first_nonzero(&self) -> Option<(usize, usize, &Vector)> {
        self.entries
            .iter()
            .position(|e| !is_zero_vector(e))
            .map(|idx| (idx / self.size, idx % self.size, &self.entries[idx]))
    }

    /// Pass/fail report treating the table as a defect that must vanish.
    pub fn report(&self, name: &str, identity: &str) -> CheckReport {
        let witness = self.first_nonzero().map(|(u, v, defect)| Witness {
            identity: identity.to_string(),
            at: format!("(e{}, e{})", u + 1, v + 1),
            lhs: format_vector(defect),
            rhs: format_vector(&vec![Rational::from_integer(0.into()); defect.len()]),
        });
        CheckReport::from_witness(name, witness)
    }
}
