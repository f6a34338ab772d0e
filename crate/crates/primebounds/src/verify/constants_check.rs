//! Internal consistency of the pinned constants, verified exactly.
//!
//! Claims anchored at x₁ = 10¹⁴ are not reproducible at desk scale,
//! but the arithmetic connecting them — the K₁ brackets from π(x₁),
//! the θ(x₁) enclosure and the log x₁ bracket; the two anchor displays;
//! the bivariate f inequality — is pure rational arithmetic and is
//! checked here with no tolerance at all.

use num_traits::Pow;

use super::report::VerificationReport;
use crate::bounds::{bound, constant_int, constant_range, constant_rat};
use crate::exactmath::{parse_decimal, rat_to_f64, Rat};
use crate::Result;

fn dec(s: &str) -> Rat {
    parse_decimal(s).unwrap()
}

fn int(v: u64) -> Rat {
    Rat::from_integer(v.into())
}

/// The bivariate helper from the quotient-bound proof, evaluated
/// exactly: `f(s, t)` with the seven mixed coefficients.
fn f_bivariate(k1: &Rat, s: &Rat, t: &Rat) -> Rat {
    let term = |kc: &str, sc: &str, pw: u32| -> Rat {
        (dec(kc) * k1 + dec(sc) * s) * t.pow(pw as i32)
    };
    term("1", "0", 7)
        + term("1", "1", 6)
        + term("3.35", "1", 5)
        + term("12.65", "3", 4)
        + term("71.7", "13", 3)
        + term("466.1275", "72.05", 2)
        + term("3489.8225", "467.3", 1)
        + dec("3494.25") * s
}

/// Runs every pinned-constant consistency check. All comparisons are
/// exact rational arithmetic.
pub fn verify_constants_consistency() -> Result<VerificationReport> {
    let started = std::time::Instant::now();
    let mut report = VerificationReport::new("constants_consistency");
    report.axioms_used = vec![
        "pi_1e14".into(),
        "theta_1e14".into(),
        "log_1e14".into(),
        "pi_8e9".into(),
        "theta_8e9_upper".into(),
        "log_8e9".into(),
        "skewes_region_start".into(),
    ];

    let check = |name: &str, ok: bool, lhs: &Rat, rhs: &Rat, report: &mut VerificationReport| {
        report.checked += 1;
        let (lf, rf) = (rat_to_f64(lhs), rat_to_f64(rhs));
        report.observe_margin(report.checked as f64, lf - rf);
        if !ok {
            report.add_counterexample(name.to_string(), lf, rf);
        }
    };

    let x1 = int(100_000_000_000_000);
    let pi1 = int(constant_int("pi_1e14"));
    let (th_lo, th_hi) = constant_range("theta_1e14");
    let (lg_lo, lg_hi) = constant_range("log_1e14");
    let k1_upper = int(constant_int("K1_upper"));
    let k1_lower = int(constant_int("K1_lower"));

    // π(x₁) − θ(x₁)/log x₁ bracketed by the two pinned K₁ values:
    // the upper end takes the small θ over the large log, the lower
    // end the reverse.
    let upper_end = &pi1 - &th_lo / &lg_hi;
    check("k1_upper_bracket", upper_end <= k1_upper, &upper_end, &k1_upper, &mut report);
    let lower_end = &pi1 - &th_hi / &lg_lo;
    check("k1_lower_bracket", lower_end >= k1_lower, &lower_end, &k1_lower, &mut report);
    check("theta_enclosure_width", &th_hi - &th_lo <= int(1), &(&th_hi - &th_lo), &int(1), &mut report);

    // The x₂ = 8·10⁹ anchor: π(x₂) − θ(x₂)/log x₂ ≥ 16952796.
    let x2 = int(8_000_000_000);
    let pi2 = int(constant_int("pi_8e9"));
    let th2_hi = int(constant_int("theta_8e9_upper"));
    let lg2_anchor = constant_rat("log_8e9_anchor_lo");
    let anchor2 = &pi2 - &th2_hi / &lg2_anchor;
    check("x2_anchor", anchor2 >= int(16_952_796), &anchor2, &int(16_952_796), &mut report);

    // Quotient lower bound at x₁: the envelope exceeds the bound by at
    // least 322936 with the adverse ends of every bracket.
    let t104 = bound("t104")?;
    let d_at = |t: &Rat| t104.denominator_at_log(t).expect("t104 denominator");
    let display_x1 = &k1_lower + &x1 / &lg_hi
        - dec("0.35") * &x1 / (&lg_lo).pow(4)
        - &x1 / d_at(&lg_lo);
    check("thm14_x1_display", display_x1 >= int(322_936), &display_x1, &int(322_936), &mut report);

    // Quotient lower bound at x₂: margin at least 2360 with the
    // paper's coarser log bracket [22.8, 22.8028].
    let (lg2_lo, lg2_hi) = constant_range("log_8e9");
    let display_x2 = int(16_952_796) + &x2 / &lg2_hi
        - dec("0.01") * &x2 / (&lg2_lo).pow(3)
        - &x2 / d_at(&lg2_lo);
    check("thm14_x2_display", display_x2 >= int(2_360), &display_x2, &int(2_360), &mut report);

    // Sum upper bound at x₁: the bound exceeds the envelope. The sum
    // form decreases in t, so substituting the high log end gives a
    // valid lower bound for it; the envelope takes its own adverse ends.
    let t101 = bound("t101")?;
    let delta_lower = &x1 * t101.ratio_at_log(&lg_hi)?;
    let envelope_upper = &k1_upper + &x1 / &lg_lo + dec("0.35") * &x1 / (&lg_lo).pow(4);
    check(
        "thm11_x1_display",
        delta_lower > envelope_upper,
        &delta_lower,
        &envelope_upper,
        &mut report,
    );

    // The bivariate inequality f(x₁, a) ≥ b⁸·K₁.
    let a = constant_rat("a_thm13");
    let b = constant_rat("b_thm13");
    let f_val = f_bivariate(&k1_upper, &x1, &a);
    let rhs = (&b).pow(8) * &k1_upper;
    check("thm13_f_inequality", f_val >= rhs, &f_val, &rhs, &mut report);
    check("thm13_a_below_b", a < b, &a, &b, &mut report);
    check("log_bracket_contains_ab", lg_lo <= a && b <= lg_hi, &a, &lg_hi, &mut report);

    // The Skewes-region floor comfortably clears every campaign scale.
    let skewes = int(constant_int("skewes_region_start"));
    check("skewes_above_extended", skewes > int(8_000_000_000), &skewes, &int(8_000_000_000), &mut report);

    report.wall_ms = started.elapsed().as_millis();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_pinned_arithmetic_is_consistent() {
        let report = verify_constants_consistency().unwrap();
        assert!(report.passed(), "{:?}", report.counterexamples);
        assert_eq!(report.checked, 11);
        assert_eq!(report.escalations, 0); // everything exact
    }

    #[test]
    fn bivariate_f_matches_a_spot_value() {
        // f(0, 1) = sum of the K₁ coefficients when s = 0, t = 1
        let k1 = Rat::from_integer(1.into());
        let v = f_bivariate(&k1, &Rat::from_integer(0.into()), &Rat::from_integer(1.into()));
        assert_eq!(v, dec("1") + dec("1") + dec("3.35") + dec("12.65") + dec("71.7") + dec("466.1275") + dec("3489.8225"));
    }
}
