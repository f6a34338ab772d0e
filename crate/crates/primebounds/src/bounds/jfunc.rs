//! Rosser–Schoenfeld envelopes: `J` converts a pinned or sieved θ(x₁)
//! bound into a π(x) bound,
//!
//! ```text
//! J(x) = π(x₁) − θ(x₁)/log x₁ + x/log x + η·x/log^(k+1) x
//!        + ∫_{x₁}^{x} (1/log²t + η/log^(k+2) t) dt.
//! ```
//!
//! The integral is reduced analytically to li via
//! `∫ dt/log^(m+1) t = (∫ dt/log^m t − t/log^m t)/m`, so no quadrature
//! error enters a certified comparison. `+η` instances are upper
//! envelopes and take the adverse (low) end of the θ interval over the
//! high end of log x₁; `−η` instances do the reverse.

use num_traits::Signed;

use super::constants::eta_table;
use super::li::{ei_interval, eval_li};
use crate::exactmath::{rat_to_f64, FloatCtx, Interval, Rat};
use crate::primes::{Primes, ThetaValue};
use crate::{Error, Result};

/// A concrete J instance: shape parameters plus the pinned anchor data.
#[derive(Debug, Clone)]
pub struct JSpec {
    pub k: u32,
    /// Signed η; the sign selects the envelope direction.
    pub eta: Rat,
    pub x1: u64,
    pub pi_x1: u64,
    /// Rational enclosure of θ(x₁).
    pub theta_x1: (Rat, Rat),
}

impl JSpec {
    /// Builds a spec, enforcing that (k, |η|, x₁) is justified by a row
    /// of the pinned θ-distance table.
    pub fn new(k: u32, eta: Rat, x1: u64, pi_x1: u64, theta_x1: (Rat, Rat)) -> Result<Self> {
        if k == 0 || k > 4 {
            return Err(Error::Domain(format!("J requires 1 ≤ k ≤ 4, got {k}")));
        }
        let abs_eta = eta.abs();
        let ok = eta_table().iter().any(|row| {
            row.k == k && row.eta == abs_eta && Rat::from_integer(x1.into()) >= row.x0_lower()
        });
        if !ok {
            return Err(Error::Domain(format!(
                "(k = {k}, |eta| = {abs_eta}, x1 = {x1}) matches no row of the θ-distance table"
            )));
        }
        if theta_x1.0 > theta_x1.1 {
            return Err(Error::Domain("empty θ(x₁) enclosure".into()));
        }
        Ok(JSpec { k, eta, x1, pi_x1, theta_x1 })
    }

    /// Builds a spec with θ(x₁) and π(x₁) taken from the sieve.
    pub fn sieved(k: u32, eta: Rat, x1: u64, primes: &Primes) -> Result<Self> {
        let (pi, theta) = primes.pi_theta(x1)?;
        Self::new(k, eta, x1, pi, theta_enclosure(&theta))
    }

    /// Upper envelope (η > 0) or lower envelope (η < 0)?
    pub fn is_upper(&self) -> bool {
        self.eta.is_positive()
    }

    /// The adverse-end constant term `π(x₁) − θ(x₁)/log x₁`: high for
    /// upper envelopes, low for lower ones.
    fn base_term(&self, ctx: &mut FloatCtx) -> Result<Interval> {
        let pi = Interval::from_u64(self.pi_x1, ctx);
        let lx = Interval::from_u64(self.x1, ctx).ln(ctx)?;
        let (theta_adverse, lx_adverse) = if self.is_upper() {
            // minimise θ/log: small θ over large log
            (
                Interval::from_rat(&self.theta_x1.0, ctx),
                Interval::point(lx.hi.clone()),
            )
        } else {
            (
                Interval::from_rat(&self.theta_x1.1, ctx),
                Interval::point(lx.lo.clone()),
            )
        };
        let quot = theta_adverse.div(&lx_adverse, ctx)?;
        Ok(pi.sub(&quot, ctx))
    }

    /// Certified enclosure of J(x).
    pub fn eval_interval(&self, x: u64, ctx: &mut FloatCtx) -> Result<Interval> {
        if x < self.x1 {
            return Err(Error::Domain(format!(
                "J is defined from its anchor {} on; got {x}",
                self.x1
            )));
        }
        let base = self.base_term(ctx)?;
        let xi = Interval::from_u64(x, ctx);
        let t = xi.ln(ctx)?;
        let x1i = Interval::from_u64(self.x1, ctx);
        let t1 = x1i.ln(ctx)?;
        let eta = Interval::from_rat(&self.eta, ctx);

        let mut out = base.add(&xi.div(&t, ctx)?, ctx);
        let tk1 = pow_interval(&t, self.k + 1, ctx);
        out = out.add(&eta.mul(&xi.div(&tk1, ctx)?, ctx), ctx);

        // ∫ 1/log² = I₂ and ∫ η/log^(k+2) = η·I_{k+2}, both via the
        // antiderivative ladder starting at li.
        let i2 = antiderivative(&xi, &t, 2, ctx)?.sub(&antiderivative(&x1i, &t1, 2, ctx)?, ctx);
        let ik2 = antiderivative(&xi, &t, self.k + 2, ctx)?
            .sub(&antiderivative(&x1i, &t1, self.k + 2, ctx)?, ctx);
        out = out.add(&i2, ctx).add(&eta.mul(&ik2, ctx), ctx);
        Ok(out)
    }

    /// Double-precision J(x) for plots and first-tier comparisons.
    pub fn eval_f64(&self, x: f64) -> Result<f64> {
        if x < self.x1 as f64 {
            return Err(Error::Domain(format!(
                "J is defined from its anchor {} on; got {x}",
                self.x1
            )));
        }
        let theta = if self.is_upper() { &self.theta_x1.0 } else { &self.theta_x1.1 };
        let lx1 = (self.x1 as f64).ln();
        let base = self.pi_x1 as f64 - rat_to_f64(theta) / lx1;
        let t = x.ln();
        let eta = rat_to_f64(&self.eta);
        let k = self.k as i32;
        let head = x / t + eta * x / t.powi(k + 1);
        let i2 = antiderivative_f64(x, t, 2)? - antiderivative_f64(self.x1 as f64, lx1, 2)?;
        let ik2 = antiderivative_f64(x, t, self.k + 2)?
            - antiderivative_f64(self.x1 as f64, lx1, self.k + 2)?;
        Ok(base + head + i2 + eta * ik2)
    }
}

pub(crate) fn theta_enclosure(theta: &ThetaValue) -> (Rat, Rat) {
    let lo = Rat::from_float(theta.lower()).expect("finite theta");
    let hi = Rat::from_float(theta.upper()).expect("finite theta");
    (lo, hi)
}

fn pow_interval(t: &Interval, e: u32, ctx: &mut FloatCtx) -> Interval {
    let mut acc = Interval::from_u64(1, ctx);
    for _ in 0..e {
        acc = acc.mul(t, ctx);
    }
    acc
}

/// `I_m(v)`: the antiderivative of `1/log^m` at `v`, with
/// `I₁ = li` and `I_{m+1} = (I_m − v/log^m v)/m`.
fn antiderivative(v: &Interval, ln_v: &Interval, m: u32, ctx: &mut FloatCtx) -> Result<Interval> {
    let mut acc = ei_interval(ln_v, ctx)?;
    for j in 1..m {
        let tj = pow_interval(ln_v, j, ctx);
        let corr = v.div(&tj, ctx)?;
        let jf = Interval::from_u64(j as u64, ctx);
        acc = acc.sub(&corr, ctx).div(&jf, ctx)?;
    }
    Ok(acc)
}

fn antiderivative_f64(v: f64, ln_v: f64, m: u32) -> Result<f64> {
    let mut acc = eval_li(v, 1e-12)?;
    for j in 1..m {
        acc = (acc - v / ln_v.powi(j as i32)) / j as f64;
    }
    Ok(acc)
}

/// `eval_J`: double-precision J(x), the flat operation form.
pub fn eval_j(spec: &JSpec, x: f64) -> Result<f64> {
    spec.eval_f64(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::parse_decimal;

    fn k4_spec(eta_sign: i64, primes: &Primes) -> JSpec {
        // k = 4 row holds from x₀ = 2 on, so desk anchors are valid.
        let eta = parse_decimal("1300").unwrap() * Rat::from_integer(eta_sign.into());
        JSpec::sieved(4, eta, 1000, primes).unwrap()
    }

    #[test]
    fn at_the_anchor_the_integral_vanishes() {
        let primes = Primes::new(1 << 20);
        let spec = k4_spec(1, &primes);
        let expected = {
            let t1 = 1000f64.ln();
            let theta_lo = rat_to_f64(&spec.theta_x1.0);
            spec.pi_x1 as f64 - theta_lo / t1 + 1000.0 / t1
                + 1300.0 * 1000.0 / t1.powi(5)
        };
        let got = spec.eval_f64(1000.0).unwrap();
        assert!((got - expected).abs() < 1e-6, "got {got}, expected {expected}");
        let mut ctx = FloatCtx::new(128);
        let iv = spec.eval_interval(1000, &mut ctx).unwrap();
        assert!(rat_to_f64(&iv.lo_rat()) <= expected + 1e-6);
        assert!(rat_to_f64(&iv.hi_rat()) >= expected - 1e-6);
    }

    #[test]
    fn eta_symmetry_makes_upper_exceed_lower() {
        let primes = Primes::new(1 << 20);
        let hi = k4_spec(1, &primes);
        let lo = k4_spec(-1, &primes);
        for x in [1000u64, 5000, 50_000, 1_000_000] {
            let a = hi.eval_f64(x as f64).unwrap();
            let b = lo.eval_f64(x as f64).unwrap();
            assert!(a > b, "x = {x}: {a} vs {b}");
        }
    }

    #[test]
    fn brackets_pi_under_the_pinned_k4_row() {
        // |θ(x) − x| < 1300·x/log⁴x holds for every x ≥ 2, so the two
        // envelopes must bracket exact π on any desk range.
        let primes = Primes::new(1 << 21);
        let upper = k4_spec(1, &primes);
        let lower = k4_spec(-1, &primes);
        for x in [1500u64, 10_000, 100_000, 1_000_000, 2_000_000] {
            let pi = primes.pi(x).unwrap() as f64;
            let u = upper.eval_f64(x as f64).unwrap();
            let l = lower.eval_f64(x as f64).unwrap();
            assert!(l < pi && pi < u, "x = {x}: {l} < {pi} < {u} violated");
        }
    }

    #[test]
    fn anchor_domain_is_enforced() {
        let primes = Primes::new(1 << 20);
        let spec = k4_spec(1, &primes);
        assert!(spec.eval_f64(999.0).is_err());
        // k/η/x₁ combinations outside the table are rejected
        assert!(JSpec::new(
            3,
            parse_decimal("0.2").unwrap(),
            10u64.pow(14),
            1,
            (Rat::from_integer(0.into()), Rat::from_integer(0.into()))
        )
        .is_err());
    }
}
