//! Command-line front end: run any labeling algorithm with its checkers and
//! emit reports, or run a benchmark suite.

pub mod algorithm;
pub mod bench;
pub mod config;
pub mod report;
pub mod table;

pub use algorithm::{Algorithm, Params};
pub use bench::{render_table, run_suite, BenchOutput, Suite, SummaryRow};
pub use config::{parse_generator, ConfigError, GraphSource, RunConfig};
pub use report::{run, Outcome, Report};
