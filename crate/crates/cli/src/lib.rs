//! Spec parser, verification suites and report emission behind the
//! `irratio` binary.

pub mod check;
pub mod parser;
pub mod report;
pub mod search;
pub mod suites;

pub use check::{check, classes, CheckReport, ClassesReport, PiSpec};
pub use parser::{parse_group_spec, ParseError};
pub use report::{emit, Format, Item, SuiteResult, WitnessOut};
pub use suites::{Runner, SUITES};

/// Process exit codes.
pub mod exit {
    pub const PASS: i32 = 0;
    pub const FAIL: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const BUDGET: i32 = 3;
}
