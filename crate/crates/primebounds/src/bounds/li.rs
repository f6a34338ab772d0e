//! The logarithmic integral li(x) = Ei(log x).
//!
//! Default path: the convergent power series
//! `Ei(y) = γ + log y + Σ_{n≥1} yⁿ/(n·n!)` with compensated summation,
//! used for `y = log x ≤ 50` (every campaign point has `y ≤ 35`).
//! Beyond 50 the asymptotic expansion `x/y · Σ i!/yⁱ` takes over, with
//! the first omitted term as the error envelope. A directed-rounding
//! interval variant backs certified comparisons.

use crate::exactmath::{parse_decimal, rat_to_f64, FloatCtx, Interval, Rat};
use crate::primes::KahanSum;
use crate::{Error, Result};

/// Euler–Mascheroni constant, 110 decimal digits.
const GAMMA_DECIMAL: &str = "0.57721566490153286060651209008240243104215933593992359880576723488486772677766467093694706329174674951463144725";

const SERIES_CUTOFF: f64 = 50.0;

/// li(x) to a relative tolerance `tol ≥ 1e-13`.
pub fn eval_li(x: f64, tol: f64) -> Result<f64> {
    if !(tol >= 1e-13) {
        return Err(Error::Domain(format!(
            "li tolerance must be at least 1e-13, got {tol}"
        )));
    }
    if !(x > 1.0) {
        return Err(Error::Domain(format!(
            "li(x) is only evaluated for x > 1, got {x}"
        )));
    }
    let y = x.ln();
    if y <= SERIES_CUTOFF {
        Ok(ei_series_f64(y))
    } else {
        ei_asymptotic_f64(x, y, tol)
    }
}

/// Σ yⁿ/(n·n!) + γ + log y by Kahan summation.
fn ei_series_f64(y: f64) -> f64 {
    const GAMMA: f64 = 0.5772156649015329;
    let mut sum = KahanSum::new();
    sum.add(GAMMA);
    sum.add(y.ln());
    let mut pow_over_fact = 1.0f64; // yⁿ/n!
    let mut n = 0u32;
    loop {
        n += 1;
        pow_over_fact *= y / n as f64;
        let term = pow_over_fact / n as f64;
        sum.add(term);
        if n as f64 > y && term.abs() < sum.value().abs() * 1e-18 {
            break;
        }
        if n > 10_000 {
            break;
        }
    }
    sum.value()
}

/// x/y · Σ i!/yⁱ, truncated at the smallest term; the first omitted
/// term bounds the truncation error.
fn ei_asymptotic_f64(x: f64, y: f64, tol: f64) -> Result<f64> {
    let mut sum = KahanSum::new();
    let mut term = 1.0f64;
    let mut i = 0u32;
    sum.add(term);
    loop {
        i += 1;
        let next = term * i as f64 / y;
        if next >= term {
            break; // divergence point of the asymptotic series
        }
        term = next;
        sum.add(term);
        if term < tol * sum.value() * 0.01 {
            break;
        }
    }
    let tail = term * (i + 1) as f64 / y;
    if tail > tol * sum.value() {
        return Err(Error::PrecisionInsufficient(format!(
            "asymptotic li tail {tail:e} exceeds requested tolerance at log x = {y}"
        )));
    }
    Ok(x / y * sum.value())
}

/// Certified enclosure of li(x) for an exactly-representable argument,
/// via the directed power series. Works for log x up to a few hundred;
/// the series length grows like e·log x.
pub fn li_interval(x: &Rat, ctx: &mut FloatCtx) -> Result<Interval> {
    if *x <= Rat::from_integer(1.into()) {
        return Err(Error::Domain("li interval needs x > 1".into()));
    }
    let xi = Interval::from_rat(x, ctx);
    let y = xi.ln(ctx)?;
    ei_interval(&y, ctx)
}

/// Certified enclosure of Ei(y) from an enclosure of y > 0.
pub fn ei_interval(y: &Interval, ctx: &mut FloatCtx) -> Result<Interval> {
    let gamma = {
        let g = parse_decimal(GAMMA_DECIMAL).expect("gamma literal");
        Interval::from_rat(&g, ctx)
    };
    let ln_y = y.ln(ctx)?;
    let mut sum = gamma.add(&ln_y, ctx);
    // b_n = yⁿ/n!, term = b_n/n, all as intervals.
    let mut b = Interval::from_u64(1, ctx);
    let mut n: u64 = 0;
    let y_hi_f = rat_to_f64(&y.hi_rat());
    loop {
        n += 1;
        let nf = Interval::from_u64(n, ctx);
        b = b.mul(y, ctx).div(&nf, ctx)?;
        let term = b.div(&nf, ctx)?;
        sum = sum.add(&term, ctx);
        // Stop once the geometric tail is provably tiny relative to 2^prec.
        if n as f64 > y_hi_f + 1.0 {
            let ratio = y_hi_f / (n as f64 + 1.0);
            let tail_hi = rat_to_f64(&term.hi_rat()) / (1.0 - ratio);
            let scale = rat_to_f64(&sum.hi_rat()).abs().max(1e-300);
            let target = 2f64.powi(-(ctx.prec().min(900) as i32));
            if tail_hi / scale < target || n > 50_000 {
                // Fold the remaining tail into the upper end.
                let tail = Interval::from_f64(tail_hi * 1.01, ctx);
                sum = Interval {
                    lo: sum.lo.clone(),
                    hi: sum.add(&tail, ctx).hi,
                };
                break;
            }
        }
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat_int;

    #[test]
    fn series_matches_reference_values() {
        // frozen from an independent high-precision evaluation
        assert!((eval_li(2.0, 1e-13).unwrap() - 1.0451637801174928).abs() < 1e-12);
        assert!((eval_li(3.0, 1e-13).unwrap() - 2.163588594667192).abs() < 1e-12);
        assert!((eval_li(1.5, 1e-13).unwrap() - 0.12506498631529636).abs() < 1e-13);
        assert!((eval_li(140000.0, 1e-13).unwrap() - 13051.602831681510).abs() < 1e-7);
    }

    #[test]
    fn asymptotic_branch_matches_reference() {
        let v = eval_li(1e30, 1e-12).unwrap();
        assert!((v / 1.4692398897720448e28 - 1.0).abs() < 1e-12, "li(1e30) = {v:e}");
        let v = eval_li(60f64.exp(), 1e-12).unwrap();
        assert!((v / 1.9361822139292765e24 - 1.0).abs() < 1e-12);
    }

    #[test]
    fn monotone_in_x() {
        assert!(eval_li(4.0, 1e-12).unwrap() > eval_li(3.0, 1e-12).unwrap());
    }

    #[test]
    fn domain_and_tolerance_errors() {
        assert!(eval_li(1.0, 1e-12).is_err());
        assert!(eval_li(0.5, 1e-12).is_err());
        assert!(eval_li(10.0, 1e-14).is_err());
    }

    #[test]
    fn interval_encloses_reference() {
        let mut ctx = FloatCtx::new(128);
        let iv = li_interval(&rat_int(2), &mut ctx).unwrap();
        let reference = 1.0451637801174927848445888891946131365226155781512;
        assert!(rat_to_f64(&iv.lo_rat()) <= reference);
        assert!(rat_to_f64(&iv.hi_rat()) >= reference);
        let width = rat_to_f64(&iv.hi_rat()) - rat_to_f64(&iv.lo_rat());
        assert!(width < 1e-25, "width = {width:e}");

        let iv = li_interval(&rat_int(140_000), &mut ctx).unwrap();
        assert!(rat_to_f64(&iv.lo_rat()) <= 13051.602831681510);
        assert!(rat_to_f64(&iv.hi_rat()) >= 13051.602831681510);
    }
}
