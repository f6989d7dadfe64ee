//! Independent ground truth and verification suites.

mod audit;
mod bfile;
mod brute;
mod report;
mod suites;

pub use audit::audit_bijection;
pub use bfile::{compare_bfile, BFile};
pub use brute::{brute_force_enumerate, BruteForce, DEFAULT_MARKED_BOUND, DEFAULT_UNMARKED_BOUND};
pub use report::{Failure, VerificationReport};
pub use suites::{
    enumeration_cell, run_suite, series_families, series_table, suite_bijections, suite_families,
    Bounds, Suite,
};
