//! The bound catalogue: every named π(x) estimate, its validity
//! threshold and direction, evaluators at three precision tiers, and
//! exact symbolic derivatives.
//!
//! Precision policy: evaluation defaults to double precision. Any
//! comparison with a relative margin below 10⁻⁹ escalates to 128-bit
//! interval arithmetic and from there — for the rational shapes — to
//! exact rational evaluation on a certified enclosure of log x.
//! Comparisons that stay ambiguous fail loudly instead of guessing.

mod catalogue;
mod constants;
mod derivative;
mod jfunc;
mod li;
mod panaitopol;

pub use catalogue::{bound, bound_names, catalogue, catalogue_json};
pub use constants::{
    constant, constant_int, constant_range, constant_rat, constants, eta_table, ConstValue,
    EtaRow, EtaStart, ProofConstant,
};
pub use derivative::{bound_derivative_in_t, panaitopol_denominator_poly};
pub use jfunc::{eval_j, JSpec};
pub use li::{ei_interval, eval_li, li_interval};
pub use panaitopol::{observed_alpha, panaitopol_coefficients};

use num_traits::Signed;

use crate::exactmath::{rat_to_f64, FloatCtx, Interval, Rat};
use crate::{Error, Result};

/// Whether a bound over- or under-estimates π(x) on its range.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Upper,
    Lower,
}

/// Where a bound's claim starts.
#[derive(Debug, Clone, PartialEq)]
pub enum Threshold {
    /// Valid for `x ≥ value` (or `x > value` for the open all-x forms).
    AtX(Rat),
    /// Valid for `x ≥ e^value`.
    AtLogX(Rat),
}

impl Threshold {
    pub fn approx_x(&self) -> f64 {
        match self {
            Threshold::AtX(v) => rat_to_f64(v),
            Threshold::AtLogX(c) => rat_to_f64(c).exp(),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            Threshold::AtX(v) => format!("x >= {v}"),
            Threshold::AtLogX(c) => format!("x >= e^{c}"),
        }
    }
}

/// The algebraic shape of an estimate.
#[derive(Debug, Clone)]
pub enum Shape {
    /// `Σ cᵢ · x / logⁱ x`, `i` from 1.
    Sum { coeffs: Vec<Rat> },
    /// `x / (log x − d₀ − d₁/log x − … − d_m/log^m x)`.
    Panaitopol { denom: Vec<Rat> },
    /// The logarithmic integral.
    Li,
    /// A Rosser–Schoenfeld envelope.
    J(JSpec),
}

/// A named estimate of π(x).
#[derive(Debug, Clone)]
pub struct BoundSpec {
    pub name: &'static str,
    pub shape: Shape,
    pub direction: Direction,
    pub threshold: Threshold,
    pub location: &'static str,
    /// Set when the bound's validity rests on a pinned axiom rather
    /// than on campaigns this crate can replay.
    pub axiom: Option<&'static str>,
}

impl BoundSpec {
    /// Double-precision evaluation at `x > 1`.
    pub fn eval(&self, x: f64) -> Result<f64> {
        if !(x > 1.0) {
            return Err(Error::Domain(format!("bounds are evaluated for x > 1, got {x}")));
        }
        match &self.shape {
            Shape::Sum { coeffs } => {
                let t = x.ln();
                let mut acc = 0.0;
                for c in coeffs.iter().rev() {
                    acc = (acc + rat_to_f64(c)) / t;
                }
                Ok(acc * x)
            }
            Shape::Panaitopol { denom } => {
                let t = x.ln();
                let mut tail = 0.0;
                for d in denom.iter().skip(1).rev() {
                    tail = (tail + rat_to_f64(d)) / t;
                }
                let dval = t - rat_to_f64(&denom[0]) - tail;
                if dval <= 0.0 {
                    return Err(Error::DenominatorNonpositive { at: t });
                }
                Ok(x / dval)
            }
            Shape::Li => eval_li(x, 1e-12),
            Shape::J(spec) => spec.eval_f64(x),
        }
    }

    /// Exact value of `bound(x)/x` as a function of `t = log x`
    /// (rational shapes only). Decreasing in `t` for every catalogue
    /// entry, which the interval evaluator relies on.
    pub fn ratio_at_log(&self, t: &Rat) -> Result<Rat> {
        match &self.shape {
            Shape::Sum { coeffs } => {
                let mut acc = Rat::from_integer(0.into());
                for c in coeffs.iter().rev() {
                    acc = (acc + c) / t;
                }
                Ok(acc)
            }
            Shape::Panaitopol { .. } => {
                let d = self
                    .denominator_at_log(t)
                    .expect("panaitopol shape has a denominator");
                if !d.is_positive() {
                    return Err(Error::DenominatorNonpositive { at: rat_to_f64(t) });
                }
                Ok(d.recip())
            }
            _ => Err(Error::Domain(format!(
                "{} has no exact rational form in log x",
                self.name
            ))),
        }
    }

    /// Exact Panaitopol denominator `D(t)`; `None` for other shapes.
    pub fn denominator_at_log(&self, t: &Rat) -> Option<Rat> {
        match &self.shape {
            Shape::Panaitopol { denom } => {
                let mut tail = Rat::from_integer(0.into());
                for d in denom.iter().skip(1).rev() {
                    tail = (tail + d) / t;
                }
                Some(t - &denom[0] - tail)
            }
            _ => None,
        }
    }

    fn coefficients_nonnegative(&self) -> bool {
        match &self.shape {
            Shape::Sum { coeffs } => coeffs.iter().all(|c| !c.is_negative()),
            Shape::Panaitopol { denom } => denom.iter().all(|d| !d.is_negative()),
            _ => false,
        }
    }

    /// Certified enclosure of `bound(x)` for integer `x ≥ 2`.
    ///
    /// For the rational shapes, the value is monotone decreasing in
    /// `t = log x` (all coefficients are nonnegative), so evaluating
    /// exactly at the two rational ends of a directed-rounding log
    /// enclosure gives exact rational bounds. li and J shapes fall back
    /// to full interval arithmetic.
    pub fn eval_enclosure(&self, x: u64, ctx: &mut FloatCtx) -> Result<(Rat, Rat)> {
        match &self.shape {
            Shape::Sum { .. } | Shape::Panaitopol { .. } => {
                assert!(
                    self.coefficients_nonnegative(),
                    "monotone enclosure needs nonnegative coefficients"
                );
                let t = Interval::from_u64(x, ctx).ln(ctx)?;
                let (t_lo, t_hi) = (t.lo_rat(), t.hi_rat());
                let xr = Rat::from_integer(x.into());
                let lo = &xr * self.ratio_at_log(&t_hi)?;
                let hi = &xr * self.ratio_at_log(&t_lo)?;
                Ok((lo, hi))
            }
            Shape::Li => {
                let iv = li_interval(&Rat::from_integer(x.into()), ctx)?;
                Ok((iv.lo_rat(), iv.hi_rat()))
            }
            Shape::J(spec) => {
                let iv = spec.eval_interval(x, ctx)?;
                Ok((iv.lo_rat(), iv.hi_rat()))
            }
        }
    }

    /// Decides `bound(x) > rhs` (strict) or `bound(x) ≥ rhs`, with the
    /// escalation ladder. Returns the verdict and the number of
    /// escalations it took. Any verdict reached only at an escalated
    /// tier is re-verified at the next tier before being returned.
    pub fn certified_cmp(&self, x: u64, rhs: &Rat, strict: bool) -> Result<(bool, u32)> {
        const REL_MARGIN: f64 = 1e-9;
        let xf = x as f64;
        let v = self.eval(xf)?;
        let rhs_f = rat_to_f64(rhs);
        let scale = v.abs().max(rhs_f.abs()).max(1.0);
        if (v - rhs_f).abs() > REL_MARGIN * scale {
            return Ok((v > rhs_f, 0));
        }

        let precisions = [128usize, 256, 512, 1024, 2048];
        let mut escalations = 0u32;
        let mut verdict: Option<bool> = None;
        for (i, &prec) in precisions.iter().enumerate() {
            escalations += 1;
            let mut ctx = FloatCtx::new(prec);
            let (lo, hi) = self.eval_enclosure(x, &mut ctx)?;
            let decided = if strict {
                if lo > *rhs {
                    Some(true)
                } else if hi <= *rhs {
                    Some(false)
                } else {
                    None
                }
            } else if lo >= *rhs {
                Some(true)
            } else if hi < *rhs {
                Some(false)
            } else {
                None
            };
            match (verdict, decided) {
                (None, Some(d)) => {
                    verdict = Some(d);
                    if i == precisions.len() - 1 {
                        return Ok((d, escalations));
                    }
                    // loop once more to re-verify at the next tier
                }
                (Some(prev), Some(d)) => {
                    if prev != d {
                        return Err(Error::PrecisionInsufficient(format!(
                            "escalation tiers disagree for {} at x = {x}",
                            self.name
                        )));
                    }
                    return Ok((d, escalations));
                }
                (Some(_), None) => {
                    return Err(Error::PrecisionInsufficient(format!(
                        "re-verification tier could not confirm {} at x = {x}",
                        self.name
                    )));
                }
                (None, None) => {}
            }
        }
        Err(Error::PrecisionInsufficient(format!(
            "comparison of {} at x = {x} ambiguous at every tier",
            self.name
        )))
    }
}

/// Evaluates a sum-form bound (errors on other shapes).
pub fn eval_sum_bound(spec: &BoundSpec, x: f64) -> Result<f64> {
    match spec.shape {
        Shape::Sum { .. } => spec.eval(x),
        _ => Err(Error::Domain(format!("{} is not a sum-form bound", spec.name))),
    }
}

/// Evaluates a Panaitopol-form bound (errors on other shapes).
pub fn eval_panaitopol_bound(spec: &BoundSpec, x: f64) -> Result<f64> {
    match spec.shape {
        Shape::Panaitopol { .. } => spec.eval(x),
        _ => Err(Error::Domain(format!("{} is not a Panaitopol-form bound", spec.name))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{parse_decimal, rat, rat_int};

    #[test]
    fn sum_bound_at_e_collapses_to_coefficient_sum() {
        let t101 = bound("t101").unwrap();
        let v = eval_sum_bound(t101, std::f64::consts::E).unwrap();
        assert!((v - 7688.35 * std::f64::consts::E).abs() < 1e-9 * v);
        let t102 = bound("t102").unwrap();
        let v = eval_sum_bound(t102, std::f64::consts::E).unwrap();
        assert!((v - 5827.55 * std::f64::consts::E).abs() < 1e-9 * v);
    }

    #[test]
    fn panaitopol_exact_denominator_at_log_ten() {
        let t103 = bound("t103").unwrap();
        let d = t103.denominator_at_log(&rat_int(10)).unwrap();
        assert_eq!(d, parse_decimal("8.8385289025").unwrap());
    }

    #[test]
    fn panaitopol_below_domain_errors() {
        let t104 = bound("t104").unwrap();
        // exact check: D(3) < 0
        assert!(matches!(
            t104.ratio_at_log(&rat_int(3)),
            Err(Error::DenominatorNonpositive { .. })
        ));
        let e3 = std::f64::consts::E.powi(3);
        assert!(matches!(
            t104.eval(e3),
            Err(Error::DenominatorNonpositive { .. })
        ));
    }

    #[test]
    fn domain_error_below_one() {
        let t101 = bound("t101").unwrap();
        assert!(t101.eval(1.0).is_err());
        assert!(t101.eval(0.5).is_err());
    }

    #[test]
    fn enclosure_brackets_f64_value() {
        let mut ctx = FloatCtx::new(128);
        for name in ["t101", "t103", "li"] {
            let b = bound(name).unwrap();
            let (lo, hi) = b.eval_enclosure(1_000_003, &mut ctx).unwrap();
            let v = b.eval(1_000_003.0).unwrap();
            assert!(rat_to_f64(&lo) <= v + v.abs() * 1e-9, "{name}");
            assert!(rat_to_f64(&hi) >= v - v.abs() * 1e-9, "{name}");
            assert!(lo < hi, "{name}");
        }
    }

    #[test]
    fn certified_cmp_decides_and_escalates() {
        let t101 = bound("t101").unwrap();
        // Easy margin: π(10⁶) = 78498, t101(10⁶) is comfortably above.
        let (ok, esc) = t101.certified_cmp(1_000_000, &rat_int(78_498), true).unwrap();
        assert!(ok);
        assert_eq!(esc, 0);
        // A rational within 1e-12 of the value exercises the ladder.
        let v = t101.eval(1000.0).unwrap();
        let close = Rat::from_float(v).unwrap() + rat(1, 1_000_000_000_000i64);
        let (above, esc) = t101.certified_cmp(1000, &close, true).unwrap();
        assert!(esc >= 1, "expected escalation, got {esc}");
        // verdict must agree with a high-precision recomputation
        let mut ctx = FloatCtx::new(256);
        let (lo, _hi) = t101.eval_enclosure(1000, &mut ctx).unwrap();
        assert_eq!(above, lo > close);
    }
}
