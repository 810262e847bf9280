//! Command-line front end: input parsing, JSON certificates and the
//! benchmark harness.

pub mod bench;
pub mod job;
pub mod json;
pub mod parse;

pub use job::{run, Command, Input, JobConfig, Outcome};
