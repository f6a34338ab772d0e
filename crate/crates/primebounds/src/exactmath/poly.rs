//! Dense polynomials with exact rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Rat;
use crate::{Error, Result};

/// Shorthand for a rational from an integer pair.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Shorthand for an integer rational.
pub fn rat_int(n: i64) -> Rat {
    Rat::from(BigInt::from(n))
}

/// Parses a decimal literal into an exact rational.
///
/// Finite decimals convert exactly: `"466.1275"` is `4661275/10000`
/// reduced, `"6.93e-12"` is `693/10^14`. This is how every coefficient
/// quoted from the literature enters the crate; floats are never
/// involved.
pub fn parse_decimal(s: &str) -> Result<Rat> {
    let s = s.trim();
    let (mantissa, exp10) = match s.find(['e', 'E']) {
        Some(pos) => {
            let e: i64 = s[pos + 1..]
                .parse()
                .map_err(|_| Error::Domain(format!("bad exponent in decimal literal {s:?}")))?;
            (&s[..pos], e)
        }
        None => (s, 0),
    };
    let (sign, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = match digits.find('.') {
        Some(pos) => (&digits[..pos], &digits[pos + 1..]),
        None => (digits, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(Error::Domain(format!("empty decimal literal {s:?}")));
    }
    let all: String = [int_part, frac_part].concat();
    if !all.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Domain(format!("bad decimal literal {s:?}")));
    }
    let numer: BigInt = all.parse().unwrap();
    let shift = exp10 - frac_part.len() as i64;
    let ten = BigInt::from(10);
    let value = if shift >= 0 {
        Rat::from(numer * ten.pow(shift as u32))
    } else {
        Rat::new(numer, ten.pow((-shift) as u32))
    };
    Ok(if sign < 0 { -value } else { value })
}

/// Dense polynomial over the rationals, coefficients in ascending
/// degree order. The zero polynomial has an empty coefficient vector;
/// otherwise the trailing coefficient is nonzero.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Poly::new(vec![c])
    }

    /// `c · t^d`.
    pub fn monomial(c: Rat, d: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); d + 1];
        coeffs[d] = c;
        Poly::new(coeffs)
    }

    /// Builds a polynomial from `(degree, decimal literal)` pairs.
    pub fn from_terms(terms: &[(usize, &str)]) -> Result<Self> {
        let deg = terms.iter().map(|&(d, _)| d).max().unwrap_or(0);
        let mut coeffs = vec![Rat::zero(); deg + 1];
        for &(d, lit) in terms {
            coeffs[d] += parse_decimal(lit)?;
        }
        Ok(Poly::new(coeffs))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> Rat {
        self.coeffs.get(d).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    /// Exact evaluation by Horner's rule.
    pub fn eval(&self, t: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    /// Evaluation in f64, for plotting and first-tier comparisons only.
    pub fn eval_f64(&self, t: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * t + super::float::rat_to_f64(c);
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Rat::from(BigInt::from(i)))
            .collect();
        Poly::new(coeffs)
    }

    pub fn scale(&self, k: &Rat) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Multiplies by `t^d`.
    pub fn shift_up(&self, d: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rat::zero(); d];
        coeffs.extend_from_slice(&self.coeffs);
        Poly::new(coeffs)
    }

    /// Quotient and remainder of exact division (coefficients form a
    /// field, so this is always defined for a nonzero divisor).
    pub fn div_rem(&self, div: &Poly) -> (Poly, Poly) {
        assert!(!div.is_zero(), "division by the zero polynomial");
        let dd = div.degree().unwrap();
        let lead = div.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rat::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let q = rem.last().unwrap() / &lead;
            if !q.is_zero() {
                for (i, c) in div.coeffs.iter().enumerate() {
                    let v = &q * c;
                    rem[k + i] -= v;
                }
                quot[k] = q;
            }
            rem.pop();
        }
        (Poly::new(quot), Poly::new(rem))
    }

    /// Monic gcd via the Euclidean algorithm on primitive integer
    /// images, which keeps intermediate coefficients small.
    pub fn gcd(&self, other: &Poly) -> Poly {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        let a = ZPoly::from_poly(self).primitive();
        let b = ZPoly::from_poly(other).primitive();
        a.prs_gcd(&b).to_poly().monic()
    }

    /// Scales so the leading coefficient is 1 (zero stays zero).
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(l) => {
                let inv = Rat::one() / l;
                self.scale(&inv)
            }
        }
    }

    /// Square-free part `p / gcd(p, p')`.
    pub fn square_free(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == Some(0) {
            return self.clone();
        }
        self.div_rem(&g).0
    }

    /// Square-free decomposition by Yun's algorithm: returns
    /// `[(f₁, 1), (f₂, 2), …]` with `p = lc · Π fᵢ^i` and the `fᵢ`
    /// pairwise coprime and square-free.
    pub fn square_free_decomposition(&self) -> Vec<(Poly, usize)> {
        if self.is_zero() || self.degree() == Some(0) {
            return Vec::new();
        }
        let p = self.monic();
        let dp = p.derivative();
        let mut g = p.gcd(&dp);
        if g.degree() == Some(0) {
            return vec![(p, 1)];
        }
        let mut w = p.div_rem(&g).0;
        let mut y = dp.div_rem(&g).0;
        let mut out = Vec::new();
        let mut i = 1usize;
        loop {
            let z = &y - &w.derivative();
            if z.is_zero() {
                if w.degree().unwrap_or(0) > 0 {
                    out.push((w.monic(), i));
                }
                break;
            }
            g = w.gcd(&z);
            if g.degree().unwrap_or(0) > 0 {
                out.push((g.monic(), i));
            }
            w = w.div_rem(&g).0;
            y = z.div_rem(&g).0;
            i += 1;
            if w.degree() == Some(0) {
                break;
            }
        }
        out
    }

    /// Product of the square-free factors of odd multiplicity; the
    /// polynomial changes sign exactly at the real roots of this part.
    pub fn odd_multiplicity_part(&self) -> Poly {
        let mut out = Poly::one();
        for (f, m) in self.square_free_decomposition() {
            if m % 2 == 1 {
                out = &out * &f;
            }
        }
        out
    }

    /// Cauchy root bound: all real roots lie in `(-M, M)`.
    pub fn root_bound(&self) -> Rat {
        let lead = match self.leading() {
            Some(l) => l.abs(),
            None => return Rat::one(),
        };
        let mut max = Rat::zero();
        for c in &self.coeffs[..self.coeffs.len() - 1] {
            let q = c.abs() / &lead;
            if q > max {
                max = q;
            }
        }
        max + Rat::one()
    }

    /// Sign of the exact value at `t`.
    pub fn sign_at(&self, t: &Rat) -> i8 {
        sign_of(&self.eval(t))
    }

    /// Sign of `p` immediately to the right of `t`: the sign of the
    /// first nonvanishing derivative at `t`.
    pub fn sign_right_of(&self, t: &Rat) -> i8 {
        let mut p = self.clone();
        loop {
            if p.is_zero() {
                return 0;
            }
            let s = p.sign_at(t);
            if s != 0 {
                return s;
            }
            p = p.derivative();
        }
    }
}

pub(crate) fn sign_of(r: &Rat) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// Exact evaluation of `p` at a rational point.
pub fn eval_poly(p: &Poly, t: &Rat) -> Rat {
    p.eval(t)
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}·t")?,
                _ => write!(f, "{c}·t^{i}")?,
            }
        }
        Ok(())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + rhs.coeff(i));
        }
        Poly::new(coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) - rhs.coeff(i));
        }
        Poly::new(coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::new(coeffs)
    }
}

/// Integer polynomial used internally for Sturm chains and gcds;
/// pseudo-remainders with primitive-part reduction keep the coefficient
/// growth polynomial instead of exponential.
#[derive(Clone, PartialEq, Eq)]
pub(crate) struct ZPoly {
    pub coeffs: Vec<BigInt>,
}

impl ZPoly {
    pub fn from_poly(p: &Poly) -> ZPoly {
        // Multiply by the lcm of the denominators.
        let mut lcm = BigInt::one();
        for c in p.coeffs() {
            lcm = lcm.lcm(c.denom());
        }
        let coeffs = p
            .coeffs()
            .iter()
            .map(|c| {
                let scaled = c * Rat::from(lcm.clone());
                debug_assert!(scaled.is_integer());
                scaled.to_integer()
            })
            .collect();
        ZPoly { coeffs }
    }

    pub fn to_poly(&self) -> Poly {
        Poly::new(self.coeffs.iter().cloned().map(Rat::from).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn trim(mut coeffs: Vec<BigInt>) -> ZPoly {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        ZPoly { coeffs }
    }

    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        g
    }

    /// Divides out the content, preserving sign.
    pub fn primitive(&self) -> ZPoly {
        if self.is_zero() {
            return self.clone();
        }
        let c = self.content();
        ZPoly {
            coeffs: self.coeffs.iter().map(|x| x / &c).collect(),
        }
    }

    pub fn derivative(&self) -> ZPoly {
        if self.coeffs.len() <= 1 {
            return ZPoly { coeffs: vec![] };
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect();
        ZPoly::trim(coeffs)
    }

    /// Pseudo-remainder of `lc(div)^(δ+1) · self` by `div`.
    pub fn pseudo_rem(&self, div: &ZPoly) -> ZPoly {
        let dd = div.degree().expect("pseudo_rem by zero");
        let lead = div.coeffs.last().unwrap().clone();
        let mut rem = self.coeffs.clone();
        while rem.len() > dd {
            let q = rem.last().unwrap().clone();
            let k = rem.len() - 1 - dd;
            for c in rem.iter_mut() {
                *c *= &lead;
            }
            for (i, c) in div.coeffs.iter().enumerate() {
                rem[k + i] -= &q * c;
            }
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
            if rem.len() <= dd {
                break;
            }
        }
        ZPoly::trim(rem)
    }

    /// Gcd via the primitive polynomial remainder sequence.
    pub fn prs_gcd(&self, other: &ZPoly) -> ZPoly {
        let (mut a, mut b) = (self.primitive(), other.primitive());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive();
            a = b;
            b = r;
        }
        a.primitive()
    }

    pub fn eval_sign(&self, t: &Rat) -> i8 {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + Rat::from(c.clone());
        }
        sign_of(&acc)
    }

    pub fn leading_sign(&self) -> i8 {
        match self.coeffs.last() {
            None => 0,
            Some(c) => {
                if c.is_positive() {
                    1
                } else if c.is_negative() {
                    -1
                } else {
                    0
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimal_parsing_is_exact() {
        assert_eq!(parse_decimal("466.1275").unwrap(), rat(4661275, 10000));
        assert_eq!(parse_decimal("-1.05").unwrap(), rat(-105, 100));
        assert_eq!(parse_decimal("3489.8225").unwrap(), rat(34898225, 10000));
        assert_eq!(
            parse_decimal("6.93e-12").unwrap(),
            Rat::new(BigInt::from(693), BigInt::from(10u64).pow(14))
        );
        assert_eq!(parse_decimal("2e3").unwrap(), rat_int(2000));
        assert!(parse_decimal("abc").is_err());
        assert!(parse_decimal("").is_err());
    }

    #[test]
    fn div_rem_roundtrip() {
        let p = Poly::new(vec![rat_int(-1), rat_int(0), rat_int(1)]); // t² − 1
        let d = Poly::new(vec![rat_int(1), rat_int(1)]); // t + 1
        let (q, r) = p.div_rem(&d);
        assert!(r.is_zero());
        assert_eq!(q, Poly::new(vec![rat_int(-1), rat_int(1)]));
    }

    #[test]
    fn yun_decomposition() {
        // (t−1)²(t+2)
        let f = Poly::new(vec![rat_int(-1), rat_int(1)]);
        let g = Poly::new(vec![rat_int(2), rat_int(1)]);
        let p = &(&f * &f) * &g;
        let dec = p.square_free_decomposition();
        assert_eq!(dec.len(), 2);
        assert_eq!(dec[0], (g.clone(), 1));
        assert_eq!(dec[1], (f.clone(), 2));
        assert_eq!(p.odd_multiplicity_part(), g);
    }

    #[test]
    fn sign_right_of_handles_roots() {
        // p = (t−1)²·(t−3)
        let sq = Poly::new(vec![rat_int(-1), rat_int(1)]);
        let lin = Poly::new(vec![rat_int(-3), rat_int(1)]);
        let p = &(&sq * &sq) * &lin;
        assert_eq!(p.sign_right_of(&rat_int(1)), -1);
        assert_eq!(p.sign_right_of(&rat_int(3)), 1);
        assert_eq!(p.sign_right_of(&rat_int(0)), -1);
    }
}
