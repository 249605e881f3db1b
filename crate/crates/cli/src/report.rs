//! The JSON document every subcommand writes to stdout.

use serde::Serialize;
use serde_json::Value;

pub const SCHEMA_VERSION: &str = "1.0";

#[derive(Debug, Serialize)]
pub struct Check {
    pub identity: String,
    pub holds: bool,
}

#[derive(Debug, Serialize)]
pub struct ReportDocument {
    pub schema_version: &'static str,
    pub command: &'static str,
    pub input: Value,
    pub result: Value,
    pub verification: Vec<Check>,
}

impl ReportDocument {
    pub fn new(command: &'static str, input: Value, result: Value) -> Self {
        ReportDocument {
            schema_version: SCHEMA_VERSION,
            command,
            input,
            result,
            verification: Vec::new(),
        }
    }

    pub fn check(&mut self, identity: impl Into<String>, holds: bool) {
        self.verification.push(Check {
            identity: identity.into(),
            holds,
        });
    }

    pub fn extend(&mut self, checks: impl IntoIterator<Item = (String, bool)>) {
        for (identity, holds) in checks {
            self.check(identity, holds);
        }
    }

    pub fn failed(&self) -> Vec<&str> {
        self.verification
            .iter()
            .filter(|c| !c.holds)
            .map(|c| c.identity.as_str())
            .collect()
    }
}
