//! Executable checks of the product, word-sum and specialization identities,
//! each producing a [`Report`] with a verdict and the first differences.

mod products;
mod report;
mod specialization;
mod suite;

pub use products::{
    check_bc_ratio, check_beta_collapse, check_hecke_support, check_product_forms, check_stability,
};
pub use report::{params, Report, Verdict};
pub use specialization::{
    check_macdonald_finite, check_specialization, denominators, floor_for_cutoff, lhs_bound,
    rhs_numerators, rhs_series, rhs_top, specialization_lhs, specialization_rhs,
    specialization_sweep, Numerators, DEFAULT_BETA_CAP, DEFAULT_DEPTH,
};
pub use suite::{check_involution, run_suite, summarize, Suite, SuiteOptions, PRODUCT_FLOOR};
