//! The two-quotient lower bound for π(c(x)·x) − π(x).
//!
//! The display is evaluated in its x-scaled form (the value divided by
//! x), which keeps the arithmetic in f64 range even at log x = 1500;
//! the sign — the quantity the theorem consumes — is unaffected.

use crate::exactmath::{rat_to_f64, Rat};
use crate::{Error, Result};

/// `(π-difference lower bound)/x` at `t = log x`, for interval factor
/// `c = c(x) ≥ 1` and quotient parameters `a`, `b`:
///
/// ```text
/// (c−1)(t − 1 − 1/t) − log c − (c·log c + b·c − a)/t²
///     − 2b·c·log c/t³ − b·c·log²c/t⁴
/// ─────────────────────────────────────────────────────
/// (log(cx) − 1 − 1/log(cx) − a/log²(cx)) (t − 1 − 1/t − b/t²)
/// ```
pub fn lemma41_scaled(a: &Rat, b: &Rat, c_at_x: f64, log_x: f64) -> Result<f64> {
    if log_x <= 1.0 {
        return Err(Error::Domain(format!("lemma needs log x > 1, got {log_x}")));
    }
    if c_at_x < 1.0 {
        return Err(Error::Domain(format!("c(x) must be at least 1, got {c_at_x}")));
    }
    let (a, b) = (rat_to_f64(a), rat_to_f64(b));
    let t = log_x;
    let lc = c_at_x.ln();
    let tc = t + lc; // log(c(x)·x)

    let den_left = tc - 1.0 - 1.0 / tc - a / (tc * tc);
    let den_right = t - 1.0 - 1.0 / t - b / (t * t);
    if den_left <= 0.0 {
        return Err(Error::DenominatorNonpositive { at: tc });
    }
    if den_right <= 0.0 {
        return Err(Error::DenominatorNonpositive { at: t });
    }

    let num_main = (c_at_x - 1.0) * (t - 1.0 - 1.0 / t)
        - lc
        - (c_at_x * lc + b * c_at_x - a) / (t * t);
    let num_corr = 2.0 * b * c_at_x * lc / (t * t * t) + b * c_at_x * lc * lc / (t * t * t * t);
    Ok((num_main - num_corr) / (den_left * den_right))
}

/// The unscaled lower bound for π(c(x)x) − π(x); saturates to ±∞ when
/// x itself overflows f64.
pub fn lemma41_lower_bound(a: &Rat, b: &Rat, c_at_x: f64, x: f64) -> Result<f64> {
    if !(x > 1.0) {
        return Err(Error::Domain(format!("lemma needs x > 1, got {x}")));
    }
    Ok(x * lemma41_scaled(a, b, c_at_x, x.ln())?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::parse_decimal;

    fn ab() -> (Rat, Rat) {
        (parse_decimal("2.65").unwrap(), parse_decimal("3.83").unwrap())
    }

    #[test]
    fn c_equal_one_collapses_to_a_negative_value() {
        // c = 1 kills every log c term; what is left is −(b−a)/t²
        // over positive denominators, negative whenever b > a.
        let (a, b) = ab();
        let v = lemma41_scaled(&a, &b, 1.0, 30.0).unwrap();
        assert!(v < 0.0, "value = {v}");
        let expected = {
            let t = 30.0f64;
            let den_l = t - 1.0 - 1.0 / t - 2.65 / (t * t);
            let den_r = t - 1.0 - 1.0 / t - 3.83 / (t * t);
            (-(3.83 - 2.65) / (t * t)) / (den_l * den_r)
        };
        assert!((v - expected).abs() < 1e-15);
    }

    #[test]
    fn deep_range_value_is_positive() {
        // frozen oracle: at log x = 1500 with c = 1 + 1.1817/log³x the
        // scaled value is ≈ 2.4501e-17 > 0
        let (a, b) = ab();
        let l = 1500.0f64;
        let c = 1.0 + 1.1817 / (l * l * l);
        let v = lemma41_scaled(&a, &b, c, l).unwrap();
        assert!(v > 0.0);
        assert!((v / 2.4501441427796830e-17 - 1.0).abs() < 1e-6, "v = {v:e}");
    }

    #[test]
    fn mid_range_sign_matches_the_oracle() {
        // at log x = 100 the display is still negative:
        // frozen oracle value ≈ −2.2511e-10
        let (a, b) = ab();
        let l = 100.0f64;
        let c = 1.0 + 1.1817 / (l * l * l);
        let v = lemma41_scaled(&a, &b, c, l).unwrap();
        assert!(v < 0.0);
        assert!((v / -2.2510521515553271e-10 - 1.0).abs() < 1e-6, "v = {v:e}");
    }

    #[test]
    fn denominator_guard() {
        let (a, b) = ab();
        assert!(matches!(
            lemma41_scaled(&a, &b, 1.0, 1.5),
            Err(Error::DenominatorNonpositive { .. })
        ));
        assert!(lemma41_scaled(&a, &b, 0.5, 100.0).is_err());
    }

    #[test]
    fn unscaled_variant_matches() {
        let (a, b) = ab();
        let x = 1e6f64;
        let c = 1.0 + 1.1817 / x.ln().powi(3);
        let scaled = lemma41_scaled(&a, &b, c, x.ln()).unwrap();
        let full = lemma41_lower_bound(&a, &b, c, x).unwrap();
        assert!((full - x * scaled).abs() <= full.abs() * 1e-12);
    }
}
