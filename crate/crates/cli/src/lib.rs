//! Parsing, JSON, DOT output, the verification sweep and the command line
//! for `sumgraph-core`.

pub mod app;
pub mod dot;
pub mod groups;
pub mod json;
pub mod parse;
pub mod verify;
