//! Rational-function inequalities on rays and intervals, decided by
//! clearing denominators (with certified signs) and running the Sturm
//! nonnegativity check on the resulting polynomial.

use once_cell::sync::Lazy;

use crate::bounds::{bound, bound_derivative_in_t, constant_int, constant_range, JSpec, Shape};
use crate::exactmath::{
    is_nonneg_on_interval, is_nonneg_on_ray, is_positive_on_interval, is_positive_on_ray,
    parse_decimal, registry_lookup, Poly, Rat, RayCertificate, RationalFn,
};
use crate::{Error, Result};

/// Decides `lhs(t) ≥ rhs(t)` for all `t ≥ t_min`.
///
/// The difference is brought over a common denominator; the
/// denominator must be certifiably positive on the ray (otherwise
/// `DenominatorSignIndeterminate`), after which the numerator's
/// nonnegativity is decided exactly.
pub fn verify_rational_inequality(
    lhs: &RationalFn,
    rhs: &RationalFn,
    t_min: &Rat,
) -> Result<(bool, RayCertificate)> {
    let diff = lhs - rhs;
    if diff.is_zero() {
        return is_nonneg_on_ray(&Poly::one(), t_min);
    }
    let (den_pos, _) = is_positive_on_ray(diff.den(), t_min)?;
    if !den_pos {
        return Err(Error::DenominatorSignIndeterminate);
    }
    is_nonneg_on_ray(diff.num(), t_min)
}

/// Interval variant: `lhs(t) ≥ rhs(t)` for all `t ∈ [a, b]`.
pub fn verify_rational_inequality_on_interval(
    lhs: &RationalFn,
    rhs: &RationalFn,
    a: &Rat,
    b: &Rat,
) -> Result<(bool, RayCertificate)> {
    let diff = lhs - rhs;
    if diff.is_zero() {
        return is_nonneg_on_interval(&Poly::one(), a, b);
    }
    let (den_pos, _) = is_positive_on_interval(diff.den(), a, b)?;
    if !den_pos {
        return Err(Error::DenominatorSignIndeterminate);
    }
    is_nonneg_on_interval(diff.num(), a, b)
}

pub enum InequalityDomain {
    Ray(&'static str),
    Interval(&'static str, &'static str),
}

pub struct NamedInequality {
    pub name: &'static str,
    pub location: &'static str,
    pub domain: InequalityDomain,
    build: fn() -> (RationalFn, RationalFn),
}

impl NamedInequality {
    pub fn verify(&self) -> Result<(bool, RayCertificate)> {
        let (lhs, rhs) = (self.build)();
        match &self.domain {
            InequalityDomain::Ray(from) => {
                verify_rational_inequality(&lhs, &rhs, &parse_decimal(from).unwrap())
            }
            InequalityDomain::Interval(a, b) => verify_rational_inequality_on_interval(
                &lhs,
                &rhs,
                &parse_decimal(a).unwrap(),
                &parse_decimal(b).unwrap(),
            ),
        }
    }
}

fn registry_poly(name: &str) -> Poly {
    registry_lookup(name).expect("registered polynomial").poly.clone()
}

fn t_power(k: usize) -> Poly {
    Poly::monomial(Rat::from_integer(1.into()), k)
}

fn pinned_j(k: u32, eta: &str) -> Shape {
    let (lo, hi) = constant_range("theta_1e14");
    Shape::J(
        JSpec::new(
            k,
            parse_decimal(eta).unwrap(),
            100_000_000_000_000,
            constant_int("pi_1e14"),
            (lo, hi),
        )
        .expect("pinned J spec"),
    )
}

fn deriv(name: &str) -> RationalFn {
    bound_derivative_in_t(&bound(name).unwrap().shape)
}

/// `ξ′ − J′_{3,0.35} ≥ h/(g²·t⁴)` on `t ≥ 3.804`.
fn eq318() -> (RationalFn, RationalFn) {
    let lhs = &deriv("t103") - &bound_derivative_in_t(&pinned_j(3, "0.35"));
    let g = registry_poly("g_thm13");
    let rhs = RationalFn::new(registry_poly("h_thm13"), &(&g * &g) * &t_power(4));
    (lhs, rhs)
}

/// `ξ′ − li′ ≥ r/(g²·t)` on `t ≥ 10.9`.
fn eq319() -> (RationalFn, RationalFn) {
    let lhs = &deriv("t103") - &deriv("li");
    let g = registry_poly("g_thm13");
    let rhs = RationalFn::new(registry_poly("r_thm13"), &(&g * &g) * &t_power(1));
    (lhs, rhs)
}

/// `J′_{3,−0.35} − φ′ ≥ r/(S²·t⁵)` on `t ≥ 3.79`.
fn eq321() -> (RationalFn, RationalFn) {
    let lhs = &bound_derivative_in_t(&pinned_j(3, "-0.35")) - &deriv("t104");
    let s = registry_poly("S_thm12");
    let rhs = RationalFn::new(registry_poly("r_thm14"), &(&s * &s) * &t_power(5));
    (lhs, rhs)
}

/// `J′_{2,−0.01} − φ′ ≥ h/(S²·t⁴)` on `23 ≤ t ≤ 33`.
fn eq322() -> (RationalFn, RationalFn) {
    let x2 = 8_000_000_000u64;
    let theta_hi = Rat::from_integer(constant_int("theta_8e9_upper").into());
    let j = Shape::J(
        JSpec::new(
            2,
            parse_decimal("-0.01").unwrap(),
            x2,
            constant_int("pi_8e9"),
            (Rat::from_integer(0.into()), theta_hi),
        )
        .expect("x2 J spec"),
    );
    let lhs = &bound_derivative_in_t(&j) - &deriv("t104");
    let s = registry_poly("S_thm12");
    let rhs = RationalFn::new(registry_poly("h_thm14"), &(&s * &s) * &t_power(4));
    (lhs, rhs)
}

static INEQUALITIES: Lazy<Vec<NamedInequality>> = Lazy::new(|| {
    vec![
        NamedInequality {
            name: "eq318",
            location: "eq. 318",
            domain: InequalityDomain::Ray("3.804"),
            build: eq318,
        },
        NamedInequality {
            name: "eq319",
            location: "eq. 319",
            domain: InequalityDomain::Ray("10.9"),
            build: eq319,
        },
        NamedInequality {
            name: "eq321",
            location: "eq. 321",
            domain: InequalityDomain::Ray("3.79"),
            build: eq321,
        },
        NamedInequality {
            name: "eq322",
            location: "eq. 322",
            domain: InequalityDomain::Interval("23", "33"),
            build: eq322,
        },
    ]
});

pub fn inequalities() -> &'static [NamedInequality] {
    &INEQUALITIES
}

pub fn verify_named_inequality(name: &str) -> Result<(bool, RayCertificate)> {
    INEQUALITIES
        .iter()
        .find(|i| i.name == name)
        .ok_or_else(|| Error::UnknownIdentity(name.to_string()))?
        .verify()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat_int;

    #[test]
    fn trivial_ray_inequality() {
        // 1/t ≥ 0 on t ≥ 1
        let lhs = RationalFn::new(Poly::one(), t_power(1));
        let rhs = RationalFn::zero();
        let (ok, _) = verify_rational_inequality(&lhs, &rhs, &rat_int(1)).unwrap();
        assert!(ok);
    }

    #[test]
    fn indeterminate_denominator_is_reported() {
        // 1/(t − 5) changes sign past t = 1
        let lhs = RationalFn::new(Poly::one(), Poly::new(vec![rat_int(-5), rat_int(1)]));
        let rhs = RationalFn::zero();
        assert!(matches!(
            verify_rational_inequality(&lhs, &rhs, &rat_int(1)),
            Err(Error::DenominatorSignIndeterminate)
        ));
    }

    #[test]
    fn all_named_inequalities_hold() {
        for ineq in inequalities() {
            let (ok, cert) = ineq.verify().unwrap();
            assert!(ok, "{} failed: {cert:?}", ineq.name);
        }
    }

    #[test]
    fn a_false_inequality_is_rejected() {
        // li′ ≥ δ′ fails for large t (the reverse of a true statement)
        let lhs = deriv("li");
        let rhs = deriv("t101");
        let (ok, _) = verify_rational_inequality(&lhs, &rhs, &rat_int(14)).unwrap();
        assert!(!ok);
    }
}
