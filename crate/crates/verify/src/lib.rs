//! Verification harness for transvectants of biforms and the slice
//! constructions built on them.

pub mod bookkeeping;
pub mod checks;
pub mod fixtures;
pub mod report;

pub use checks::{check_ids, run_all, run_check, run_pair_check, UnknownCheck, REGISTRY};
pub use report::{emit, CheckResult, Format, Report, Status, Summary};
