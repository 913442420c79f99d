use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Duration;

use sha2::{Digest, Sha256};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Human,
    Machine,
}

/// Outcome of one command: verdict fields, witnesses and timings.
///
/// The machine rendering is `key=value` per line with keys sorted and no
/// timings, so it is byte-stable for identical inputs.
#[derive(Clone, Debug)]
pub struct Report {
    command: &'static str,
    digest: String,
    fields: BTreeMap<String, String>,
    order: Vec<String>,
    timings: Vec<(&'static str, Duration)>,
    body: Option<String>,
}

impl Report {
    /// `inputs` is every byte the result depends on: file contents plus the
    /// normalized arguments.
    pub fn new(command: &'static str, inputs: &[&[u8]]) -> Report {
        let mut hasher = Sha256::new();
        hasher.update(command.as_bytes());
        for chunk in inputs {
            hasher.update((chunk.len() as u64).to_le_bytes());
            hasher.update(chunk);
        }
        let digest = hex::encode(&hasher.finalize()[..8]);
        Report {
            command,
            digest,
            fields: BTreeMap::new(),
            order: Vec::new(),
            timings: Vec::new(),
            body: None,
        }
    }

    pub fn set(&mut self, key: &str, value: impl ToString) -> &mut Self {
        let value = value.to_string().replace('\n', ";");
        if self.fields.insert(key.to_string(), value).is_none() {
            self.order.push(key.to_string());
        }
        self
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.fields.get(key).map(String::as_str)
    }

    pub fn timing(&mut self, label: &'static str, d: Duration) {
        self.timings.push((label, d));
    }

    /// Free text shown after the fields in human output only.
    pub fn body(&mut self, text: String) {
        self.body = Some(text);
    }

    pub fn render(&self, format: Format) -> String {
        let mut out = String::new();
        match format {
            Format::Machine => {
                let _ = writeln!(out, "command={}", self.command);
                let _ = writeln!(out, "input_digest={}", self.digest);
                for (k, v) in &self.fields {
                    let _ = writeln!(out, "{k}={v}");
                }
            }
            Format::Human => {
                let _ = writeln!(out, "mono {} [{}]", self.command, self.digest);
                let width = self.order.iter().map(String::len).max().unwrap_or(0);
                for k in &self.order {
                    let _ = writeln!(out, "  {k:<width$}  {}", self.fields[k]);
                }
                for (label, d) in &self.timings {
                    let _ = writeln!(out, "  ({label}: {d:.2?})");
                }
                if let Some(body) = &self.body {
                    out.push_str(body);
                }
            }
        }
        out
    }
}
