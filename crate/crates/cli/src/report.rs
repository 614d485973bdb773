//! Structured command output with text and JSON renderings.

use gav_core::citations::Citation;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Inconclusive => "INCONCLUSIVE",
        }
    }

    pub fn from_bool(passed: bool) -> Status {
        if passed {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

/// A named value; polynomial witnesses use the expression grammar.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub name: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Section {
    pub title: String,
    pub body: Vec<String>,
    pub witnesses: Vec<Witness>,
}

impl Section {
    pub fn new(title: impl Into<String>) -> Section {
        Section { title: title.into(), body: Vec::new(), witnesses: Vec::new() }
    }

    pub fn line(&mut self, text: impl Into<String>) -> &mut Section {
        self.body.push(text.into());
        self
    }

    pub fn witness(&mut self, name: impl Into<String>, value: impl ToString) -> &mut Section {
        self.witnesses.push(Witness { name: name.into(), value: value.to_string() });
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CitedResult {
    pub label: String,
    pub quote: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub status: Status,
    /// `Isomorphic`, `NonIsomorphic` or `Inconclusive` for comparisons.
    pub verdict: Option<String>,
    pub sections: Vec<Section>,
    pub cited_results: Vec<CitedResult>,
}

impl Report {
    pub fn new(command: &str) -> Report {
        Report { command: command.into(), status: Status::Pass, verdict: None, sections: Vec::new(), cited_results: Vec::new() }
    }

    pub fn push(&mut self, section: Section) {
        self.sections.push(section);
    }

    /// Adds a citation once, keeping first-use order.
    pub fn cite(&mut self, c: Citation) {
        if !self.cited_results.iter().any(|r| r.label == c.label) {
            self.cited_results.push(CitedResult { label: c.label.into(), quote: c.quote.into() });
        }
    }

    /// `0` pass, `1` fail, `2` inconclusive; a `NonIsomorphic` verdict maps
    /// to `1` under `strict`.
    pub fn exit_code(&self, strict: bool) -> i32 {
        match self.status {
            Status::Pass if strict && self.verdict.as_deref() == Some("NonIsomorphic") => 1,
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Inconclusive => 2,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> serde_json::Result<Report> {
        serde_json::from_str(s)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("gav {}: {}\n", self.command, self.status.as_str());
        if let Some(v) = &self.verdict {
            out.push_str(&format!("verdict: {v}\n"));
        }
        for s in &self.sections {
            out.push_str(&format!("\n[{}]\n", s.title));
            for l in &s.body {
                out.push_str(&format!("  {l}\n"));
            }
            for w in &s.witnesses {
                out.push_str(&format!("  witness {} = {}\n", w.name, w.value));
            }
        }
        if !self.cited_results.is_empty() {
            out.push_str("\ncited results:\n");
            for c in &self.cited_results {
                out.push_str(&format!("  {}: \"{}\"\n", c.label, c.quote));
            }
        }
        out
    }
}
