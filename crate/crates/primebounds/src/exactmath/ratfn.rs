//! Quotients of rational-coefficient polynomials in `t = log x`.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::One;

use super::{Poly, Rat};

/// A rational function `num/den`, kept in canonical form:
/// `gcd(num, den) = 1` and the denominator is monic (so in particular
/// its leading coefficient is positive). Equality of canonical forms is
/// exact identity of functions.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalFn {
    num: Poly,
    den: Poly,
}

impl RationalFn {
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return RationalFn { num: Poly::zero(), den: Poly::one() };
        }
        let g = num.gcd(&den);
        let (num, den) = if g.degree().unwrap_or(0) > 0 {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        } else {
            (num, den)
        };
        // Scale so the denominator is monic.
        let lead = den.leading().unwrap().clone();
        let inv = Rat::one() / lead;
        RationalFn {
            num: num.scale(&inv),
            den: den.scale(&inv),
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        RationalFn { num: p, den: Poly::one() }
    }

    pub fn zero() -> Self {
        RationalFn::from_poly(Poly::zero())
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Exact evaluation; `None` when the denominator vanishes at `t`.
    pub fn eval(&self, t: &Rat) -> Option<Rat> {
        let d = self.den.eval(t);
        if d == Rat::from_integer(0.into()) {
            return None;
        }
        Some(self.num.eval(t) / d)
    }

    pub fn eval_f64(&self, t: f64) -> f64 {
        self.num.eval_f64(t) / self.den.eval_f64(t)
    }

    /// Derivative with respect to `t`.
    pub fn derivative(&self) -> RationalFn {
        let num = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        let den = &self.den * &self.den;
        RationalFn::new(num, den)
    }
}

impl Add for &RationalFn {
    type Output = RationalFn;
    fn add(self, rhs: &RationalFn) -> RationalFn {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RationalFn::new(num, &self.den * &rhs.den)
    }
}

impl Sub for &RationalFn {
    type Output = RationalFn;
    fn sub(self, rhs: &RationalFn) -> RationalFn {
        let num = &(&self.num * &rhs.den) - &(&rhs.num * &self.den);
        RationalFn::new(num, &self.den * &rhs.den)
    }
}

impl Mul for &RationalFn {
    type Output = RationalFn;
    fn mul(self, rhs: &RationalFn) -> RationalFn {
        RationalFn::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &RationalFn {
    type Output = RationalFn;
    fn neg(self) -> RationalFn {
        RationalFn { num: -&self.num, den: self.den.clone() }
    }
}
