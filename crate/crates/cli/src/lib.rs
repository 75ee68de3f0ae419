//! Library half of the `trinomial` command: polynomial parsing, report
//! serialization and the command implementations.

pub mod commands;
pub mod parse;
pub mod report;

pub use parse::{parse_polynomial, ParseError};
pub use report::SweepReport;
