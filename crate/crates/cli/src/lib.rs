//! Report builders behind the `conclab` binary.

pub mod commands;
pub mod source;
pub mod suite;

use std::fmt;

use serde_json::Value;

pub const EXIT_VERIFICATION: u8 = 1;
pub const EXIT_UNKNOWN_INPUT: u8 = 2;
pub const EXIT_PARSE: u8 = 3;

pub const DEFAULT_SEED: u64 = 0x5eed;
pub const DEFAULT_RESOLUTION: usize = 4096;
pub const DEFAULT_SEARCH_BOUND: u32 = 5;

#[derive(Debug, Clone, PartialEq)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn parse(m: impl fmt::Display) -> Self {
        Self { code: EXIT_PARSE, message: m.to_string() }
    }

    pub fn unknown(m: impl fmt::Display) -> Self {
        Self { code: EXIT_UNKNOWN_INPUT, message: m.to_string() }
    }

    pub fn failed(m: impl fmt::Display) -> Self {
        Self { code: EXIT_VERIFICATION, message: m.to_string() }
    }

    pub fn to_json(&self) -> Value {
        serde_json::json!({ "error": self.message, "exit_code": self.code })
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Settings {
    pub search_bound: u32,
    pub resolution: usize,
    pub seed: u64,
}

impl Default for Settings {
    fn default() -> Self {
        Self { search_bound: DEFAULT_SEARCH_BOUND, resolution: DEFAULT_RESOLUTION, seed: DEFAULT_SEED }
    }
}

/// A finished command: JSON payload, human rendering and whether a check failed.
#[derive(Clone, Debug)]
pub struct Report {
    pub json: Value,
    pub human: Vec<String>,
    pub failed: bool,
}

impl Report {
    pub fn new(json: Value) -> Self {
        Self { json, human: Vec::new(), failed: false }
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.human.push(s.into());
    }

    /// Compact JSON goes through `Value`, so keys come out sorted and re-serialization is stable.
    pub fn render(&self, json: bool) -> String {
        if json {
            self.json.to_string()
        } else {
            self.human.join("\n")
        }
    }

    pub fn exit_code(&self) -> u8 {
        if self.failed {
            EXIT_VERIFICATION
        } else {
            0
        }
    }
}

pub(crate) fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report values serialize")
}
