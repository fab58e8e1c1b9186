//! I/O, parallel surveys and the `mhc` command line on top of `mhc-core`.

pub mod cli;
pub mod formats;
pub mod graph6;
pub mod records;
pub mod spill;
pub mod stream;
pub mod survey;
