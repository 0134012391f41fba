//! Suite results and their JSON/text serialization.

use std::fmt::Write as _;

use irratio_core::{Group, Witness};
use serde::Serialize;
use serde_json::Value;

pub const REPORT_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessOut {
    pub x: String,
    pub k: u64,
    pub g: String,
}

impl WitnessOut {
    pub fn new(group: &Group, w: &Witness) -> Self {
        WitnessOut {
            x: group.format(&w.x),
            k: w.k,
            g: group.format(&w.g),
        }
    }
}

/// Field order is the serialized key order.
#[derive(Debug, Clone, Serialize)]
pub struct Item {
    pub desc: String,
    pub spec: String,
    pub expected: Value,
    pub observed: Value,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessOut>,
    pub millis: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteResult {
    pub suite: String,
    pub items: Vec<Item>,
    pub pass: bool,
    pub version: &'static str,
    /// Some item ran out of enumeration budget.
    #[serde(skip)]
    pub budget_exceeded: bool,
}

impl SuiteResult {
    pub fn new(suite: impl Into<String>, items: Vec<Item>, budget_exceeded: bool) -> Self {
        let pass = items.iter().all(|i| i.pass);
        SuiteResult {
            suite: suite.into(),
            items,
            pass,
            version: REPORT_VERSION,
            budget_exceeded,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

pub fn emit(result: &SuiteResult, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(result).expect("report serializes"),
        Format::Text => {
            let mut out = String::new();
            for item in &result.items {
                let _ = writeln!(
                    out,
                    "{} {}  [{}]  expected {} observed {} ({} ms)",
                    if item.pass { "PASS" } else { "FAIL" },
                    item.desc,
                    item.spec,
                    item.expected,
                    item.observed,
                    item.millis
                );
                if let Some(w) = &item.witness {
                    let _ = writeln!(out, "     witness: g x g^-1 = x^{} with x = {}, g = {}", w.k, w.x, w.g);
                }
            }
            let passed = result.items.iter().filter(|i| i.pass).count();
            let _ = writeln!(
                out,
                "suite {}: {} ({}/{} items)",
                result.suite,
                if result.pass { "PASS" } else { "FAIL" },
                passed,
                result.items.len()
            );
            out
        }
    }
}
