//! Command-line front end and benchmark harness for `gpss-core`.

pub mod bench;
pub mod commands;
pub mod record;
pub mod suite;

pub use bench::{run_suite, BenchReport};
pub use suite::{InputFormat, SuiteConfig};
