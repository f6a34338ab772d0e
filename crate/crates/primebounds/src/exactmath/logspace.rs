//! Certified comparison of sums whose terms live at scales like
//! `e^(−1800)`: each term is `coeff · poly(at) · exp(−rate · at)`.
//!
//! The polynomial part is evaluated exactly; the exponential is
//! enclosed with directed rounding at a working precision that starts
//! at 128 bits and doubles whenever the enclosure straddles the
//! threshold. Terms too small to matter are bounded above, never
//! dropped.

use num_traits::Signed;

use super::float::{FloatCtx, Interval};
use super::{Poly, Rat};
use crate::{Error, Result};

/// One term `coeff · poly_factor(at) · exp(−exp_rate · at)`.
#[derive(Clone, Debug)]
pub struct LogTerm {
    pub coeff: Rat,
    pub poly_factor: Poly,
    pub exp_rate: Rat,
}

impl LogTerm {
    pub fn new(coeff: Rat, poly_factor: Poly, exp_rate: Rat) -> Self {
        LogTerm { coeff, poly_factor, exp_rate }
    }
}

const START_PREC: usize = 128;
const MAX_PREC: usize = 4096;

/// Encloses `Σ coeff·poly(at)·exp(−rate·at)` at the given working
/// precision.
fn sum_interval_at(terms: &[LogTerm], at: &Rat, prec: usize) -> Result<Interval> {
    let mut ctx = FloatCtx::new(prec);
    let mut sum = Interval::from_u64(0, &ctx);
    for term in terms {
        // coeff · poly(at) is exact rational arithmetic.
        let scale = &term.coeff * term.poly_factor.eval(at);
        if term.poly_factor.eval(at).is_negative() {
            return Err(Error::Domain(
                "logspace term has a negative polynomial factor".into(),
            ));
        }
        let scale_iv = Interval::from_rat(&scale, &mut ctx);
        let exponent = -(&term.exp_rate * at);
        let exp_iv = Interval::from_rat(&exponent, &mut ctx).exp(&mut ctx);
        let term_iv = scale_iv.mul(&exp_iv, &ctx);
        sum = sum.add(&term_iv, &ctx);
    }
    Ok(sum)
}

/// Certified enclosure of the sum, escalating precision until the
/// enclosure is tighter than `tighter_than` (as a fraction of the upper
/// endpoint) or the ladder is exhausted.
pub fn logspace_sum_interval(terms: &[LogTerm], at: &Rat) -> Result<(Rat, Rat)> {
    let iv = sum_interval_at(terms, at, START_PREC)?;
    Ok((iv.lo_rat(), iv.hi_rat()))
}

/// Decides `Σ terms < threshold` rigorously.
///
/// Returns `Ok(true)` when the certified upper end of the sum is below
/// the threshold, `Ok(false)` when the certified lower end reaches it,
/// and escalates the working precision (doubling, up to 4096 bits)
/// while the enclosure straddles the threshold.
pub fn logspace_sum_compare(terms: &[LogTerm], at: &Rat, threshold: &Rat) -> Result<bool> {
    logspace_sum_compare_counted(terms, at, threshold).map(|(ok, _)| ok)
}

/// Same as [`logspace_sum_compare`], also reporting how many precision
/// escalations were needed.
pub fn logspace_sum_compare_counted(
    terms: &[LogTerm],
    at: &Rat,
    threshold: &Rat,
) -> Result<(bool, u32)> {
    let mut prec = START_PREC;
    let mut escalations = 0;
    loop {
        let iv = sum_interval_at(terms, at, prec)?;
        if iv.strictly_below(threshold) {
            return Ok((true, escalations));
        }
        if iv.at_least(threshold) {
            return Ok((false, escalations));
        }
        prec *= 2;
        escalations += 1;
        if prec > MAX_PREC {
            return Err(Error::PrecisionInsufficient(format!(
                "sum enclosure still straddles {threshold} at {MAX_PREC} bits"
            )));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::poly::{parse_decimal, rat, rat_int};
    use super::*;

    fn cube() -> Poly {
        Poly::monomial(rat_int(1), 3)
    }

    fn shifted_cube() -> Poly {
        // (t + 1)^3
        let lin = Poly::new(vec![rat_int(1), rat_int(1)]);
        &(&lin * &lin) * &lin
    }

    fn psi_terms(eps: &str) -> Vec<LogTerm> {
        vec![
            LogTerm::new(parse_decimal("1.00007").unwrap(), cube(), rat(1, 2)),
            LogTerm::new(parse_decimal("1.78").unwrap(), cube(), rat(2, 3)),
            LogTerm::new(parse_decimal(eps).unwrap(), shifted_cube(), rat_int(0)),
        ]
    }

    #[test]
    fn tail_sum_at_i0_is_certified_below_035() {
        let at = rat_int(3600);
        let thr = parse_decimal("0.35").unwrap();
        assert!(logspace_sum_compare(&psi_terms("6.93e-12"), &at, &thr).unwrap());
        let (lo, hi) = logspace_sum_interval(&psi_terms("6.93e-12"), &at).unwrap();
        // value ≈ 0.3235955932...; the exponential terms are < 10^(-700)
        let lo_f = super::super::float::rat_to_f64(&lo);
        let hi_f = super::super::float::rat_to_f64(&hi);
        assert!((lo_f - 0.32359559325).abs() < 1e-9, "lo = {lo_f}");
        assert!((hi_f - 0.32359559325).abs() < 1e-9, "hi = {hi_f}");
    }

    #[test]
    fn tail_sum_at_i100_with_smaller_eps() {
        let at = rat_int(3700);
        let thr = parse_decimal("0.35").unwrap();
        assert!(logspace_sum_compare(&psi_terms("6.49e-12"), &at, &thr).unwrap());
        let (lo, _) = logspace_sum_interval(&psi_terms("6.49e-12"), &at).unwrap();
        let lo_f = super::super::float::rat_to_f64(&lo);
        assert!((lo_f - 0.32900458634).abs() < 1e-9, "lo = {lo_f}");
    }

    #[test]
    fn positive_terms_never_beat_threshold_zero() {
        let at = rat_int(3600);
        assert!(!logspace_sum_compare(&psi_terms("6.93e-12"), &at, &rat_int(0)).unwrap());
    }

    #[test]
    fn exactly_representable_tie_exhausts_the_ladder() {
        // A single exact term: 1/3 · t⁰ · e⁰ compared against 1/3. The
        // enclosure always straddles, so the ladder must error out
        // rather than guess.
        let terms = vec![LogTerm::new(rat(1, 3), Poly::one(), rat_int(0))];
        let err = logspace_sum_compare(&terms, &rat_int(1), &rat(1, 3));
        assert!(matches!(err, Err(Error::PrecisionInsufficient(_))));
    }

    #[test]
    fn near_tie_escalates_then_decides() {
        // sum = e^(−1) vs a 50-digit rational just above it: needs more
        // than 128 bits, then resolves.
        let terms = vec![LogTerm::new(rat_int(1), Poly::one(), rat_int(1))];
        let thr = parse_decimal("0.36787944117144232159552377016146086744581113103177").unwrap();
        let (ok, escalations) = logspace_sum_compare_counted(&terms, &rat_int(1), &thr).unwrap();
        assert!(ok);
        assert!(escalations >= 1, "expected at least one escalation");
    }
}
