//! File format, report writers and command-line front end for
//! [`jsj_core`].

pub mod cli;
pub mod dot;
pub mod format;
pub mod report;

pub use jsj_core;
