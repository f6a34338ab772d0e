//! Exact rational arithmetic: polynomials, Sturm chains, rational
//! functions, and log-space evaluation of astronomically scaled sums.
//!
//! Every decimal literal that enters this module is parsed as an exact
//! rational (`466.1275` becomes `4661275/10000` reduced), never as a
//! float. Sign claims near thresholds are decided by Sturm chains over
//! arbitrary-precision integers, so there is no rounding anywhere in a
//! verdict.

mod float;
mod logspace;
mod poly;
mod ratfn;
mod registry;
mod sturm;

pub use float::{rat_to_f64, FloatCtx, Interval};
pub use logspace::{
    logspace_sum_compare, logspace_sum_compare_counted, logspace_sum_interval, LogTerm,
};
pub use poly::{eval_poly, parse_decimal, rat, rat_int, Poly};
pub use ratfn::RationalFn;
pub use registry::{registry, registry_json, registry_lookup, Domain, RegistryEntry, SignClaim};
pub use sturm::{
    is_nonneg_on_interval, is_nonneg_on_ray, is_positive_on_interval, is_positive_on_ray,
    sturm_count_roots, RayCertificate, SturmChain,
};

/// Arbitrary-precision rational, always stored reduced with a positive
/// denominator.
pub type Rat = num_rational::BigRational;
