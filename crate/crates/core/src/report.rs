//! Machine-readable results. Every exact value is a decimal integer or a
//! `p/q` string so it parses back to the same rational.

use serde::{Deserialize, Serialize};

use crate::arith::{self, Rational};

pub const SCHEMA: &str = "minshadow-report/1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedValue {
    pub name: String,
    pub value: String,
}

/// One checked claim.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub subject: String,
    pub verdict: String,
    pub passed: bool,
    /// What the claim rests on.
    pub citation: String,
    pub values: Vec<NamedValue>,
}

impl Entry {
    pub fn new(subject: impl Into<String>, verdict: impl Into<String>, passed: bool, citation: impl Into<String>) -> Self {
        Entry {
            subject: subject.into(),
            verdict: verdict.into(),
            passed,
            citation: citation.into(),
            values: Vec::new(),
        }
    }

    pub fn value(mut self, name: impl Into<String>, v: &Rational) -> Self {
        self.values.push(NamedValue {
            name: name.into(),
            value: arith::format_rational(v),
        });
        self
    }

    pub fn int(self, name: impl Into<String>, v: impl Into<i128>) -> Self {
        self.value(name, &Rational::from_integer(v.into().into()))
    }

    pub fn get(&self, name: &str) -> Option<Rational> {
        self.values
            .iter()
            .find(|v| v.name == name)
            .and_then(|v| arith::parse_rational(&v.value).ok())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    pub command: String,
    pub parameters: Vec<NamedValue>,
    pub passed: bool,
    pub entries: Vec<Entry>,
}

impl Report {
    pub fn new(command: &str, parameters: &[(&str, String)]) -> Self {
        Report {
            schema: SCHEMA.to_string(),
            command: command.to_string(),
            parameters: parameters
                .iter()
                .map(|(k, v)| NamedValue {
                    name: k.to_string(),
                    value: v.clone(),
                })
                .collect(),
            passed: true,
            entries: Vec::new(),
        }
    }

    pub fn push(&mut self, e: Entry) {
        self.passed &= e.passed;
        self.entries.push(e);
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes") + "\n"
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    /// One row per entry; value columns in order of first appearance.
    pub fn to_csv(&self) -> String {
        let mut names: Vec<&str> = Vec::new();
        for e in &self.entries {
            for v in &e.values {
                if !names.contains(&v.name.as_str()) {
                    names.push(&v.name);
                }
            }
        }
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header = vec!["subject", "verdict", "passed", "citation"];
        header.extend(&names);
        w.write_record(&header).expect("in-memory write");
        for e in &self.entries {
            let mut rec = vec![
                e.subject.clone(),
                e.verdict.clone(),
                e.passed.to_string(),
                e.citation.clone(),
            ];
            for n in &names {
                rec.push(
                    e.values
                        .iter()
                        .find(|v| v.name == *n)
                        .map(|v| v.value.clone())
                        .unwrap_or_default(),
                );
            }
            w.write_record(&rec).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flushed")).expect("utf-8 input")
    }
}
