//! File formats, DOT export and the parallel classification driver behind the `bfk`
//! command-line tool.

pub mod dot;
pub mod formats;
pub mod parallel;

pub use formats::FormatError;
