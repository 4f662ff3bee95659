//! Instance files, random generators, the benchmark harness and the command
//! line front end for [`wildrows_core`].

pub mod bench;
pub mod cli;
pub mod format;
pub mod gen;

pub use wildrows_core;
