use std::fmt;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    True,
    False,
    Unknown,
}

/// How a verdict was reached.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    /// A supplied or constructed witness was checked.
    Certificate,
    /// Every candidate over a finite field was examined.
    Exhaustive,
    SimpleShortcut,
    QuotientReduction,
    /// Decided by a closed-form structural argument valid over any field.
    Structural,
}

/// Three-valued decision result. `True` carries a checkable witness unless
/// the method is [`Method::SimpleShortcut`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict<W> {
    pub outcome: Outcome,
    pub method: Method,
    pub witness: Option<W>,
    pub note: String,
}

impl<W> Verdict<W> {
    pub fn yes(method: Method, witness: W) -> Self {
        Verdict { outcome: Outcome::True, method, witness: Some(witness), note: String::new() }
    }

    pub fn yes_bare(method: Method, note: impl Into<String>) -> Self {
        Verdict { outcome: Outcome::True, method, witness: None, note: note.into() }
    }

    pub fn no(method: Method, note: impl Into<String>) -> Self {
        Verdict { outcome: Outcome::False, method, witness: None, note: note.into() }
    }

    pub fn unknown(note: impl Into<String>) -> Self {
        Verdict {
            outcome: Outcome::Unknown,
            method: Method::Certificate,
            witness: None,
            note: note.into(),
        }
    }

    pub fn from_bool(value: bool, method: Method, note: impl Into<String>) -> Self {
        let note = note.into();
        if value {
            Self::yes_bare(method, note)
        } else {
            Self::no(method, note)
        }
    }

    pub fn is_true(&self) -> bool {
        self.outcome == Outcome::True
    }

    pub fn is_false(&self) -> bool {
        self.outcome == Outcome::False
    }

    pub fn is_unknown(&self) -> bool {
        self.outcome == Outcome::Unknown
    }

    /// `None` for `Unknown`.
    pub fn decided(&self) -> Option<bool> {
        match self.outcome {
            Outcome::True => Some(true),
            Outcome::False => Some(false),
            Outcome::Unknown => None,
        }
    }

    pub fn map<V>(self, f: impl FnOnce(W) -> V) -> Verdict<V> {
        Verdict {
            outcome: self.outcome,
            method: self.method,
            witness: self.witness.map(f),
            note: self.note,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = note.into();
        self
    }
}

impl<W> fmt::Display for Verdict<W> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let o = match self.outcome {
            Outcome::True => "true",
            Outcome::False => "false",
            Outcome::Unknown => "unknown",
        };
        write!(f, "{o} ({:?})", self.method)?;
        if !self.note.is_empty() {
            write!(f, ": {}", self.note)?;
        }
        Ok(())
    }
}
