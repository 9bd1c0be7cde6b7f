//! Plain-text reports shared by the property checkers.

use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub witness: String,
    pub detail: String,
}

/// Outcome of a property check over every element up to a length bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub property: String,
    pub graph: String,
    pub bound: usize,
    /// Informational lines, e.g. one per sub-check.
    pub notes: Vec<String>,
    /// In length-then-ShortLex order of the witnesses.
    pub failures: Vec<Failure>,
}

impl Report {
    pub fn new(property: impl Into<String>, graph: impl Into<String>, bound: usize) -> Self {
        Report {
            property: property.into(),
            graph: graph.into(),
            bound,
            notes: Vec::new(),
            failures: Vec::new(),
        }
    }

    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn witness(&self) -> Option<&str> {
        self.failures.first().map(|f| f.witness.as_str())
    }

    pub fn fail(&mut self, witness: impl ToString, detail: impl Into<String>) {
        self.failures.push(Failure { witness: witness.to_string(), detail: detail.into() });
    }

    pub fn note(&mut self, line: impl Into<String>) {
        self.notes.push(line.into());
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# property {} | graph {} | bound {}", self.property, self.graph, self.bound)?;
        match self.witness() {
            None => writeln!(f, "HOLDS")?,
            Some(w) => writeln!(f, "FAILS witness={w}")?,
        }
        for line in &self.notes {
            writeln!(f, "{line}")?;
        }
        for fail in &self.failures {
            writeln!(f, "{}\t{}", fail.witness, fail.detail)?;
        }
        Ok(())
    }
}
