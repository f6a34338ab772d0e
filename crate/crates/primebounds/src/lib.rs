//! Explicit estimates for the prime counting function, machine-checked.
//!
//! This crate bundles three things that are usually spread over a paper,
//! a spreadsheet and a pile of throwaway scripts:
//!
//! * a catalogue of explicit upper and lower bounds for π(x) — sums of
//!   `c·x/logⁱx`, Panaitopol-style quotients `x / (log x − 1 − …)`, the
//!   logarithmic integral and Rosser–Schoenfeld `J` envelopes — together
//!   with their validity thresholds and exact symbolic derivatives
//!   (see [`bounds`]);
//! * exact rational polynomial arithmetic with Sturm-chain root counting,
//!   so that every "p(t) ≥ 0 for t ≥ c" claim behind those bounds is
//!   certified rather than eyeballed (see [`exactmath`]);
//! * a segmented sieve with checkpointing that computes π(x) and θ(x)
//!   exactly at desk scale, plus campaign runners that replay the finite
//!   computer checks the bounds rest on (see [`primes`] and [`verify`]).
//!
//! Floating point is used only where it is safe: every comparison that
//! decides a verdict either has a tracked error margin or escalates to
//! higher precision and, where the quantity is rational, to exact
//! arithmetic.

pub mod bounds;
pub mod error;
pub mod exactmath;
pub mod primes;
pub mod verify;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
