//! Directed-rounding interval arithmetic over arbitrary-precision
//! floats.
//!
//! This is the escalation tier between plain f64 and exact rationals:
//! every operation rounds the lower end down and the upper end up, so
//! an [`Interval`] always encloses the true value. Endpoints convert
//! exactly to rationals, which lets a comparison against a rational
//! threshold be decided without any further rounding.

use astro_float::{BigFloat, Consts, RoundingMode, Sign};
use num_bigint::{BigInt, BigUint, Sign as NumSign};
use num_traits::{Signed, ToPrimitive, Zero};

use super::{Poly, Rat};
use crate::{Error, Result};

const RM_DOWN: RoundingMode = RoundingMode::Down;
const RM_UP: RoundingMode = RoundingMode::Up;

/// Working-precision context; holds the constants cache astro-float
/// needs for `exp`/`ln`.
pub struct FloatCtx {
    prec: usize,
    cc: Consts,
}

impl FloatCtx {
    pub fn new(prec: usize) -> Self {
        FloatCtx {
            prec,
            cc: Consts::new().expect("constants cache"),
        }
    }

    pub fn prec(&self) -> usize {
        self.prec
    }
}

/// A closed enclosure `[lo, hi]` of a real number.
#[derive(Clone, Debug)]
pub struct Interval {
    pub lo: BigFloat,
    pub hi: BigFloat,
}

impl Interval {
    pub fn point(v: BigFloat) -> Self {
        Interval { lo: v.clone(), hi: v }
    }

    pub fn from_u64(v: u64, ctx: &FloatCtx) -> Self {
        Interval::point(BigFloat::from_u64(v, ctx.prec.max(64)))
    }

    pub fn from_f64(v: f64, ctx: &FloatCtx) -> Self {
        Interval::point(BigFloat::from_f64(v, ctx.prec.max(64)))
    }

    /// Encloses an exact rational with directed rounding.
    pub fn from_rat(r: &Rat, ctx: &mut FloatCtx) -> Self {
        if r.is_zero() {
            return Interval::point(BigFloat::from_u64(0, ctx.prec));
        }
        let negative = r.is_negative();
        let num = big_to_bf(&r.numer().abs(), ctx);
        let den = big_to_bf(&r.denom().clone(), ctx);
        let lo = num.0.div(&den.1, ctx.prec, RM_DOWN);
        let hi = num.1.div(&den.0, ctx.prec, RM_UP);
        if negative {
            Interval { lo: hi.neg(), hi: lo.neg() }
        } else {
            Interval { lo, hi }
        }
    }

    pub fn add(&self, rhs: &Interval, ctx: &FloatCtx) -> Interval {
        Interval {
            lo: self.lo.add(&rhs.lo, ctx.prec, RM_DOWN),
            hi: self.hi.add(&rhs.hi, ctx.prec, RM_UP),
        }
    }

    pub fn sub(&self, rhs: &Interval, ctx: &FloatCtx) -> Interval {
        Interval {
            lo: self.lo.sub(&rhs.hi, ctx.prec, RM_DOWN),
            hi: self.hi.sub(&rhs.lo, ctx.prec, RM_UP),
        }
    }

    pub fn neg(&self) -> Interval {
        Interval {
            lo: self.hi.neg(),
            hi: self.lo.neg(),
        }
    }

    pub fn mul(&self, rhs: &Interval, ctx: &FloatCtx) -> Interval {
        let combos = [
            (&self.lo, &rhs.lo),
            (&self.lo, &rhs.hi),
            (&self.hi, &rhs.lo),
            (&self.hi, &rhs.hi),
        ];
        let mut lo: Option<BigFloat> = None;
        let mut hi: Option<BigFloat> = None;
        for (a, b) in combos {
            let d = a.mul(b, ctx.prec, RM_DOWN);
            let u = a.mul(b, ctx.prec, RM_UP);
            lo = Some(match lo {
                None => d,
                Some(cur) => if d < cur { d } else { cur },
            });
            hi = Some(match hi {
                None => u,
                Some(cur) => if u > cur { u } else { cur },
            });
        }
        Interval { lo: lo.unwrap(), hi: hi.unwrap() }
    }

    /// Interval division; fails if the divisor encloses zero.
    pub fn div(&self, rhs: &Interval, ctx: &FloatCtx) -> Result<Interval> {
        let zero = BigFloat::from_u64(0, 64);
        if rhs.lo <= zero && rhs.hi >= zero {
            return Err(Error::PrecisionInsufficient(
                "interval division by an enclosure of zero".into(),
            ));
        }
        let combos = [
            (&self.lo, &rhs.lo),
            (&self.lo, &rhs.hi),
            (&self.hi, &rhs.lo),
            (&self.hi, &rhs.hi),
        ];
        let mut lo: Option<BigFloat> = None;
        let mut hi: Option<BigFloat> = None;
        for (a, b) in combos {
            let d = a.div(b, ctx.prec, RM_DOWN);
            let u = a.div(b, ctx.prec, RM_UP);
            lo = Some(match lo {
                None => d,
                Some(cur) => if d < cur { d } else { cur },
            });
            hi = Some(match hi {
                None => u,
                Some(cur) => if u > cur { u } else { cur },
            });
        }
        Ok(Interval { lo: lo.unwrap(), hi: hi.unwrap() })
    }

    pub fn exp(&self, ctx: &mut FloatCtx) -> Interval {
        Interval {
            lo: self.lo.exp(ctx.prec, RM_DOWN, &mut ctx.cc),
            hi: self.hi.exp(ctx.prec, RM_UP, &mut ctx.cc),
        }
    }

    /// Natural log; requires a strictly positive enclosure.
    pub fn ln(&self, ctx: &mut FloatCtx) -> Result<Interval> {
        let zero = BigFloat::from_u64(0, 64);
        if self.lo <= zero {
            return Err(Error::Domain("ln of a nonpositive enclosure".into()));
        }
        Ok(Interval {
            lo: self.lo.ln(ctx.prec, RM_DOWN, &mut ctx.cc),
            hi: self.hi.ln(ctx.prec, RM_UP, &mut ctx.cc),
        })
    }

    /// Exact rational lower endpoint.
    pub fn lo_rat(&self) -> Rat {
        bf_to_rat(&self.lo)
    }

    /// Exact rational upper endpoint.
    pub fn hi_rat(&self) -> Rat {
        bf_to_rat(&self.hi)
    }

    /// The whole enclosure lies strictly below `r`.
    pub fn strictly_below(&self, r: &Rat) -> bool {
        self.hi_rat() < *r
    }

    /// The whole enclosure lies at or above `r`.
    pub fn at_least(&self, r: &Rat) -> bool {
        self.lo_rat() >= *r
    }

    /// The whole enclosure lies strictly above `r`.
    pub fn strictly_above(&self, r: &Rat) -> bool {
        self.lo_rat() > *r
    }

    pub fn contains_zero(&self) -> bool {
        let zero = BigFloat::from_u64(0, 64);
        self.lo <= zero && self.hi >= zero
    }

    /// Approximate midpoint for reports.
    pub fn approx_f64(&self) -> f64 {
        let lo = rat_to_f64(&self.lo_rat());
        let hi = rat_to_f64(&self.hi_rat());
        0.5 * (lo + hi)
    }

    /// Horner evaluation of a rational-coefficient polynomial on an
    /// interval argument.
    pub fn eval_poly(p: &Poly, t: &Interval, ctx: &mut FloatCtx) -> Interval {
        let mut acc = Interval::point(BigFloat::from_u64(0, ctx.prec));
        for c in p.coeffs().iter().rev() {
            let c = Interval::from_rat(c, ctx);
            acc = acc.mul(t, ctx).add(&c, ctx);
        }
        acc
    }
}

/// Exact conversion of a nonnegative big integer to a directed pair of
/// floats (lower, upper).
fn big_to_bf(v: &BigInt, ctx: &mut FloatCtx) -> (BigFloat, BigFloat) {
    let s = v.to_string();
    let lo = BigFloat::parse(&s, astro_float::Radix::Dec, ctx.prec, RM_DOWN, &mut ctx.cc);
    let hi = BigFloat::parse(&s, astro_float::Radix::Dec, ctx.prec, RM_UP, &mut ctx.cc);
    (lo, hi)
}

/// Exact conversion of a finite BigFloat to a rational: the float is
/// `±m · 2^(e − n)` with an `n`-bit mantissa `m`.
pub(crate) fn bf_to_rat(v: &BigFloat) -> Rat {
    if v.is_zero() {
        return Rat::zero();
    }
    let (words, n, sign, exp, _) = v
        .as_raw_parts()
        .expect("finite BigFloat expected in bf_to_rat");
    let mut bytes = Vec::with_capacity(words.len() * 8);
    for w in words {
        bytes.extend_from_slice(&w.to_le_bytes());
    }
    let mant = BigUint::from_bytes_le(&bytes);
    let mant = BigInt::from_biguint(
        if sign == Sign::Neg { NumSign::Minus } else { NumSign::Plus },
        mant,
    );
    let shift = exp as i64 - n as i64;
    if shift >= 0 {
        Rat::from(mant << shift as usize)
    } else {
        Rat::new(mant, BigInt::from(1) << (-shift) as usize)
    }
}

/// Rational to nearest-ish f64, safe for astronomically large or tiny
/// values (saturates to ±inf / 0 as appropriate). Report quality, not
/// certified.
pub fn rat_to_f64(r: &Rat) -> f64 {
    if r.is_zero() {
        return 0.0;
    }
    let num_bits = r.numer().bits() as i64;
    let den_bits = r.denom().bits() as i64;
    // Keep both operands comfortably inside f64 range.
    let excess = (num_bits.max(den_bits)) - 900;
    let (n, d) = if excess > 0 {
        (r.numer() >> excess as usize, r.denom() >> excess as usize)
    } else {
        (r.numer().clone(), r.denom().clone())
    };
    if d.is_zero() {
        return if r.is_negative() { f64::NEG_INFINITY } else { f64::INFINITY };
    }
    let nf = n.to_f64().unwrap_or(f64::INFINITY);
    let df = d.to_f64().unwrap_or(f64::INFINITY);
    nf / df
}

#[cfg(test)]
mod tests {
    use super::super::poly::rat;
    use super::*;

    #[test]
    fn bf_rat_roundtrip() {
        let ctx = FloatCtx::new(128);
        let v = BigFloat::from_f64(1.5, ctx.prec());
        assert_eq!(bf_to_rat(&v), rat(3, 2));
        let v = BigFloat::from_f64(-0.375, ctx.prec());
        assert_eq!(bf_to_rat(&v), rat(-3, 8));
        let v = BigFloat::from_u64(u64::MAX, 128);
        assert_eq!(bf_to_rat(&v), Rat::from(BigInt::from(u64::MAX)));
    }

    #[test]
    fn rational_enclosure_brackets_value() {
        let mut ctx = FloatCtx::new(96);
        let r = rat(1, 3);
        let iv = Interval::from_rat(&r, &mut ctx);
        assert!(iv.lo_rat() <= r && r <= iv.hi_rat());
        assert!(iv.lo_rat() < iv.hi_rat()); // 1/3 is not a binary float
        let r = rat(-7, 16);
        let iv = Interval::from_rat(&r, &mut ctx);
        assert_eq!(iv.lo_rat(), r);
        assert_eq!(iv.hi_rat(), r);
    }

    #[test]
    fn exp_of_large_negative_argument_does_not_underflow() {
        let mut ctx = FloatCtx::new(128);
        let x = Interval::from_u64(1800, &ctx).neg();
        let e = x.exp(&mut ctx);
        assert!(e.lo_rat() > Rat::zero());
        assert!(e.strictly_below(&rat(1, 10).pow(700)));
        // and still bracketed: e^(−1800) > 10^(−790)
        assert!(e.lo_rat() > rat(1, 10).pow(790));
    }

    #[test]
    fn ln_brackets_are_tight() {
        let mut ctx = FloatCtx::new(128);
        let x = Interval::from_u64(36909396, &ctx);
        let l = x.ln(&mut ctx).unwrap();
        assert!(l.lo_rat() < l.hi_rat());
        let width = l.hi_rat() - l.lo_rat();
        assert!(width < rat(1, 10).pow(30));
        let f = rat_to_f64(&l.lo_rat());
        assert!((f - 17.423976710743325).abs() < 1e-9);
    }

    #[test]
    fn interval_poly_eval_encloses_exact_value() {
        let mut ctx = FloatCtx::new(128);
        let p = Poly::from_terms(&[(2, "1"), (1, "-2.5"), (0, "0.125")]).unwrap();
        let t = Interval::from_rat(&rat(22, 7), &mut ctx);
        let exact = p.eval(&rat(22, 7));
        let iv = Interval::eval_poly(&p, &t, &mut ctx);
        assert!(iv.lo_rat() <= exact && exact <= iv.hi_rat());
    }

    #[test]
    fn rat_to_f64_saturates() {
        let huge = Rat::from(BigInt::from(10).pow(400));
        assert!(rat_to_f64(&huge).is_infinite());
        let tiny = Rat::new(BigInt::from(1), BigInt::from(10).pow(400));
        assert!(rat_to_f64(&tiny) >= 0.0 && rat_to_f64(&tiny) < 1e-300);
        assert_eq!(rat_to_f64(&rat(3, 2)), 1.5);
    }
}
