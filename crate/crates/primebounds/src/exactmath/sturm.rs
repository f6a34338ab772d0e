//! Sturm chains: exact real-root counting and sign certificates on rays
//! and intervals.
//!
//! Chains are computed over the integers with sign-preserving
//! pseudo-remainders reduced to primitive parts, which keeps the
//! coefficient growth tame for the degree ≤ 18 polynomials that appear
//! in the bound proofs.

use super::poly::ZPoly;
use super::{Poly, Rat};
use crate::{Error, Result};

/// Sturm chain of the square-free part of a polynomial.
pub struct SturmChain {
    chain: Vec<ZPoly>,
}

impl SturmChain {
    /// Builds the chain for the square-free part of `p`.
    pub fn new(p: &Poly) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let q = p.square_free();
        let c0 = ZPoly::from_poly(&q).primitive();
        let c1 = c0.derivative().primitive();
        let mut chain = vec![c0, c1];
        loop {
            let n = chain.len();
            if chain[n - 1].is_zero() {
                chain.pop();
                break;
            }
            if chain[n - 1].degree() == Some(0) {
                break;
            }
            let r = chain[n - 2].pseudo_rem_signed(&chain[n - 1]);
            if r.is_zero() {
                break;
            }
            chain.push(r.neg().primitive());
        }
        Ok(SturmChain { chain })
    }

    fn variations_at(&self, x: &Rat) -> usize {
        let mut last = 0i8;
        let mut v = 0;
        for c in &self.chain {
            let s = c.eval_sign(x);
            if s != 0 {
                if last != 0 && s != last {
                    v += 1;
                }
                last = s;
            }
        }
        v
    }

    fn variations_at_pos_inf(&self) -> usize {
        let mut last = 0i8;
        let mut v = 0;
        for c in &self.chain {
            let s = c.leading_sign();
            if s != 0 {
                if last != 0 && s != last {
                    v += 1;
                }
                last = s;
            }
        }
        v
    }

    /// Number of distinct real roots in `(a, b]`, or in `(a, ∞)` when
    /// `b` is `None`.
    pub fn count_roots(&self, a: &Rat, b: Option<&Rat>) -> usize {
        let hi = match b {
            Some(b) => self.variations_at(b),
            None => self.variations_at_pos_inf(),
        };
        self.variations_at(a).saturating_sub(hi)
    }

    /// Number of distinct real roots in the open interval `(a, b)`.
    pub fn count_roots_open(&self, a: &Rat, b: &Rat) -> usize {
        let mut n = self.count_roots(a, Some(b));
        if !self.chain.is_empty() && self.chain[0].eval_sign(b) == 0 {
            n -= 1;
        }
        n
    }

    /// True when the square-free part vanishes at `x`.
    pub fn is_root(&self, x: &Rat) -> bool {
        !self.chain.is_empty() && self.chain[0].eval_sign(x) == 0
    }
}

/// Counts the distinct real roots of `p` in `(a, b]` (`b = None` means
/// `+∞`). Multiple roots are counted once.
pub fn sturm_count_roots(p: &Poly, a: &Rat, b: Option<&Rat>) -> Result<usize> {
    if let Some(b) = b {
        if a >= b {
            return Err(Error::Domain(format!("empty interval: a = {a}, b = {b}")));
        }
    }
    Ok(SturmChain::new(p)?.count_roots(a, b))
}

/// What a ray/interval sign check found; enough to audit the verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RayCertificate {
    /// Sign of `p` at the left endpoint.
    pub sign_at_a: i8,
    /// Distinct real roots of `p` strictly inside the range.
    pub distinct_roots: usize,
    /// Roots of odd multiplicity (these flip the sign).
    pub crossing_roots: usize,
    /// Roots of even multiplicity (tangencies; sign is preserved).
    pub tangential_roots: usize,
}

/// Decides `p(t) ≥ 0` for all `t ≥ a`, exactly.
///
/// The criterion: the leading coefficient is positive and no root of
/// odd multiplicity lies in `(a, ∞)`. Tangential (even multiplicity)
/// roots do not falsify nonnegativity and are reported separately in
/// the certificate.
pub fn is_nonneg_on_ray(p: &Poly, a: &Rat) -> Result<(bool, RayCertificate)> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let odd = p.odd_multiplicity_part();
    let distinct = SturmChain::new(p)?.count_roots(a, None);
    let crossing = if odd.degree().unwrap_or(0) == 0 {
        0
    } else {
        SturmChain::new(&odd)?.count_roots(a, None)
    };
    let cert = RayCertificate {
        sign_at_a: p.sign_at(a),
        distinct_roots: distinct,
        crossing_roots: crossing,
        tangential_roots: distinct - crossing,
    };
    let lead_pos = p.leading().is_some_and(num_traits::Signed::is_positive);
    let ok = lead_pos && crossing == 0 && cert.sign_at_a >= 0;
    Ok((ok, cert))
}

/// Decides `p(t) > 0` for all `t ≥ a`, exactly.
pub fn is_positive_on_ray(p: &Poly, a: &Rat) -> Result<(bool, RayCertificate)> {
    let (_, cert) = is_nonneg_on_ray(p, a)?;
    let lead_pos = p.leading().is_some_and(num_traits::Signed::is_positive);
    let ok = lead_pos && cert.distinct_roots == 0 && cert.sign_at_a > 0;
    Ok((ok, cert))
}

/// Decides `p(t) ≥ 0` for all `t ∈ [a, b]`, exactly.
pub fn is_nonneg_on_interval(p: &Poly, a: &Rat, b: &Rat) -> Result<(bool, RayCertificate)> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if a >= b {
        return Err(Error::Domain(format!("empty interval: a = {a}, b = {b}")));
    }
    let odd = p.odd_multiplicity_part();
    let distinct = SturmChain::new(p)?.count_roots_open(a, b);
    let crossing = if odd.degree().unwrap_or(0) == 0 {
        0
    } else {
        SturmChain::new(&odd)?.count_roots_open(a, b)
    };
    let cert = RayCertificate {
        sign_at_a: p.sign_at(a),
        distinct_roots: distinct,
        crossing_roots: crossing,
        tangential_roots: distinct - crossing,
    };
    // With no sign flip inside (a, b), the sign just right of a rules
    // the whole interval; the endpoints follow by continuity.
    let ok = crossing == 0 && p.sign_right_of(a) > 0 && cert.sign_at_a >= 0 && p.sign_at(b) >= 0;
    Ok((ok, cert))
}

/// Decides `p(t) > 0` for all `t ∈ [a, b]`, exactly.
pub fn is_positive_on_interval(p: &Poly, a: &Rat, b: &Rat) -> Result<(bool, RayCertificate)> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if a >= b {
        return Err(Error::Domain(format!("empty interval: a = {a}, b = {b}")));
    }
    let chain = SturmChain::new(p)?;
    let in_half_open = chain.count_roots(a, Some(b));
    let at_a = chain.is_root(a);
    let distinct = in_half_open + usize::from(at_a);
    let cert = RayCertificate {
        sign_at_a: p.sign_at(a),
        distinct_roots: distinct,
        crossing_roots: 0,
        tangential_roots: 0,
    };
    let ok = distinct == 0 && cert.sign_at_a > 0;
    Ok((ok, cert))
}

impl ZPoly {
    /// Pseudo-remainder that is a positive multiple of the true
    /// remainder: each reduction step scales by |lc| and cancels with
    /// the signed quotient, so the sign sequence of a Sturm chain is
    /// preserved.
    pub(crate) fn pseudo_rem_signed(&self, div: &ZPoly) -> ZPoly {
        use num_bigint::BigInt;
        use num_traits::{Signed, Zero};
        let dd = div.degree().expect("pseudo_rem by zero polynomial");
        let lead: BigInt = div.coeffs.last().unwrap().clone();
        let lead_abs = lead.abs();
        let neg = lead < BigInt::zero();
        let mut rem = self.coeffs.clone();
        while rem.len() > dd {
            let q = rem.last().unwrap().clone();
            let q = if neg { -q } else { q };
            let k = rem.len() - 1 - dd;
            for c in rem.iter_mut() {
                *c *= &lead_abs;
            }
            for (i, c) in div.coeffs.iter().enumerate() {
                rem[k + i] -= &q * c;
            }
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        ZPoly { coeffs: rem }
    }

    pub(crate) fn neg(&self) -> ZPoly {
        ZPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::poly::{rat, rat_int};
    use super::*;

    fn poly(coeffs: &[i64]) -> Poly {
        Poly::new(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    #[test]
    fn counts_roots_of_t2_minus_2() {
        let p = poly(&[-2, 0, 1]);
        assert_eq!(
            sturm_count_roots(&p, &rat_int(0), Some(&rat_int(2))).unwrap(),
            1
        );
        assert_eq!(
            sturm_count_roots(&p, &rat_int(-2), Some(&rat_int(2))).unwrap(),
            2
        );
        assert_eq!(sturm_count_roots(&p, &rat_int(2), None).unwrap(), 0);
    }

    #[test]
    fn counts_rational_roots_at_endpoints() {
        // roots 1 and 2; (1, 2] must contain exactly one (the root at
        // the left endpoint is excluded, at the right included).
        let p = poly(&[2, -3, 1]);
        assert_eq!(
            sturm_count_roots(&p, &rat_int(1), Some(&rat_int(2))).unwrap(),
            1
        );
        assert_eq!(
            sturm_count_roots(&p, &rat_int(0), Some(&rat_int(1))).unwrap(),
            1
        );
        let chain = SturmChain::new(&p).unwrap();
        assert_eq!(chain.count_roots_open(&rat_int(1), &rat_int(2)), 0);
    }

    #[test]
    fn multiple_roots_counted_once() {
        // (t−1)³(t+1)
        let f = poly(&[-1, 1]);
        let p = &(&(&f * &f) * &f) * &poly(&[1, 1]);
        assert_eq!(
            sturm_count_roots(&p, &rat_int(-2), Some(&rat_int(2))).unwrap(),
            2
        );
    }

    #[test]
    fn ray_nonnegativity() {
        // t − 1 is negative at 0.
        let (ok, cert) = is_nonneg_on_ray(&poly(&[-1, 1]), &rat_int(0)).unwrap();
        assert!(!ok);
        assert_eq!(cert.crossing_roots, 1);

        // (t−1)² is nonnegative everywhere but not positive at 1.
        let sq = &poly(&[-1, 1]) * &poly(&[-1, 1]);
        let (ok, cert) = is_nonneg_on_ray(&sq, &rat_int(0)).unwrap();
        assert!(ok);
        assert_eq!(cert.tangential_roots, 1);
        let (ok, _) = is_positive_on_ray(&sq, &rat_int(0)).unwrap();
        assert!(!ok);

        // odd root exactly at the ray start is allowed for ≥ 0.
        let (ok, _) = is_nonneg_on_ray(&poly(&[-1, 1]), &rat_int(1)).unwrap();
        assert!(ok);

        // negative leading coefficient can never be nonnegative on a ray.
        let (ok, _) = is_nonneg_on_ray(&poly(&[5, -1]), &rat_int(0)).unwrap();
        assert!(!ok);
    }

    #[test]
    fn interval_checks() {
        // t(4 − t) is nonnegative exactly on [0, 4].
        let p = poly(&[0, 4, -1]);
        assert!(is_nonneg_on_interval(&p, &rat_int(0), &rat_int(4)).unwrap().0);
        assert!(!is_nonneg_on_interval(&p, &rat_int(0), &rat_int(5)).unwrap().0);
        assert!(!is_positive_on_interval(&p, &rat_int(0), &rat_int(4)).unwrap().0);
        assert!(is_positive_on_interval(&p, &rat(1, 2), &rat(7, 2)).unwrap().0);

        // touching zero inside the interval is fine for ≥ 0.
        let sq = &poly(&[-1, 1]) * &poly(&[-1, 1]);
        assert!(is_nonneg_on_interval(&sq, &rat_int(0), &rat_int(2)).unwrap().0);
        assert!(!is_positive_on_interval(&sq, &rat_int(0), &rat_int(2)).unwrap().0);
    }

    #[test]
    fn zero_polynomial_is_rejected() {
        assert!(matches!(
            sturm_count_roots(&Poly::zero(), &rat_int(0), None),
            Err(Error::ZeroPolynomial)
        ));
    }
}
