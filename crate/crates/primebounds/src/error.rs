//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A request went past the configured sieve limit.
    #[error("requested {requested} exceeds the configured limit {limit}")]
    LimitExceeded { requested: u64, limit: u64 },

    /// An argument is outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A Panaitopol-form denominator is not positive at the evaluation
    /// point, i.e. the point lies below the form's domain.
    #[error("denominator not positive at log x = {at}")]
    DenominatorNonpositive { at: f64 },

    /// The denominator of a rational-function inequality could not be
    /// certified sign-constant on the requested ray.
    #[error("denominator sign indeterminate on the requested range")]
    DenominatorSignIndeterminate,

    /// Sturm-chain operations reject the zero polynomial.
    #[error("zero polynomial")]
    ZeroPolynomial,

    /// A comparison stayed ambiguous after exhausting the precision
    /// escalation ladder.
    #[error("precision insufficient: {0}")]
    PrecisionInsufficient(String),

    /// A scan campaign could not certify that its bound is monotone on
    /// the scanned range, so the per-prime check would not cover all x.
    #[error("monotonicity unverified for bound {bound} from t = {from}")]
    MonotonicityUnverified { bound: String, from: String },

    /// Bisection was asked to locate a crossover on a bracket where the
    /// difference does not change sign.
    #[error("no sign change on the bracket [{lo}, {hi}]")]
    NoSignChange { lo: f64, hi: f64 },

    #[error("unknown bound: {0}")]
    UnknownBound(String),

    #[error("unknown identity: {0}")]
    UnknownIdentity(String),

    #[error("unknown campaign: {0}")]
    UnknownCampaign(String),

    #[error("unknown polynomial: {0}")]
    UnknownPolynomial(String),

    /// A persisted file failed its checksum or structural validation.
    #[error("corrupt file {path}: {detail}")]
    CorruptFile { path: String, detail: String },

    #[error("resource error: {0}")]
    Resource(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
