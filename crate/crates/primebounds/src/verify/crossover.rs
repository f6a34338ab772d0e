//! Locates the abscissa where one bound overtakes another, by
//! bisection in log x.

use crate::bounds::bound;
use crate::{Error, Result};

/// Finds x* in `[x_lo, x_hi]` where `bound_a − bound_b` changes sign,
/// to a relative 10⁻⁶ in log x. Errors when the difference has the
/// same sign at both ends.
pub fn find_crossover(bound_a: &str, bound_b: &str, x_lo: f64, x_hi: f64) -> Result<f64> {
    let a = bound(bound_a)?;
    let b = bound(bound_b)?;
    if !(x_lo > 1.0 && x_hi > x_lo) {
        return Err(Error::Domain(format!("bad bracket [{x_lo}, {x_hi}]")));
    }
    let diff = |u: f64| -> Result<f64> {
        let x = u.exp();
        Ok(a.eval(x)? - b.eval(x)?)
    };
    let mut lo = x_lo.ln();
    let mut hi = x_hi.ln();
    let f_lo = diff(lo)?;
    let f_hi = diff(hi)?;
    if f_lo == 0.0 {
        return Ok(lo.exp());
    }
    if f_hi == 0.0 {
        return Ok(hi.exp());
    }
    if f_lo.signum() == f_hi.signum() {
        return Err(Error::NoSignChange { lo: x_lo, hi: x_hi });
    }
    let mut f_lo = f_lo;
    while (hi - lo) > 1e-6 * hi.abs().max(1.0) {
        let mid = 0.5 * (lo + hi);
        let f_mid = diff(mid)?;
        if f_mid == 0.0 {
            return Ok(mid.exp());
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    Ok((0.5 * (lo + hi)).exp())
}
