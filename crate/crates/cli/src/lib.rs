//! Command-line front end for `hurwitz-core`: expression parsing, a threaded
//! executor, deterministic certificates and the named check suite.

pub mod cert;
pub mod commands;
pub mod exec;
pub mod parse;
pub mod suite;

pub use cert::{Certificate, Check};
pub use commands::{run, Cli, Command, CommandError, Context};
pub use exec::Threaded;
pub use suite::{check_count, run_suite, SuiteOptions};
