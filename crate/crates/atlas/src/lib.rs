//! Command-line front end, JSON and DOT output for `gr33-core`.

pub mod cli;
pub mod dot;
pub mod json;

pub use cli::run;
