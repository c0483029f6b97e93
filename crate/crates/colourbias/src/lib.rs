//! File formats, experiment configs and parallel batch runs on top of
//! `colourbias-core`. The `colourbias` binary wraps these.

pub mod config;
pub mod io;
pub mod record;
pub mod runner;

pub use colourbias_core;
