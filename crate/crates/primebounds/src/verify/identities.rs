//! Coefficient-exact polynomial identities from the bound proofs.
//!
//! Each identity equates two `Poly`/`RationalFn` expressions built from
//! independent inputs (catalogue coefficients on one side, registry
//! polynomials on the other), so a pass means the printed apparatus is
//! internally consistent — no tolerance anywhere.

use once_cell::sync::Lazy;

use crate::bounds::{bound, bound_derivative_in_t, constant_int, constant_range, JSpec, Shape};
use crate::exactmath::{parse_decimal, registry_lookup, Poly, Rat, RationalFn};
use crate::{Error, Result};

pub struct Identity {
    pub name: &'static str,
    pub location: &'static str,
    check: fn() -> bool,
}

fn registry_poly(name: &str) -> Poly {
    registry_lookup(name).expect("registered polynomial").poly.clone()
}

fn t_power(k: usize) -> Poly {
    Poly::monomial(Rat::from_integer(1.into()), k)
}

fn pinned_j(k: u32, eta: &str) -> JSpec {
    let (lo, hi) = constant_range("theta_1e14");
    JSpec::new(
        k,
        parse_decimal(eta).unwrap(),
        100_000_000_000_000,
        constant_int("pi_1e14"),
        (lo, hi),
    )
    .expect("pinned J spec")
}

fn deriv(name: &str) -> RationalFn {
    bound_derivative_in_t(&bound(name).unwrap().shape)
}

/// `y¹³·R(y)·S(y) = y¹⁴ − T(y)`: the cleared form multiplies the two
/// degree-7 numerators.
fn thm12_rst() -> bool {
    let r = registry_poly("R_thm12");
    let s = registry_poly("S_thm12");
    let t = registry_poly("T_thm12");
    let lhs = &r * &s;
    let rhs = &t_power(14) - &t;
    lhs == rhs
}

/// `δ′ − J′_{3,0.35} = (1687.9t − 54411.2)/t⁹`.
fn eq316_difference() -> bool {
    let lhs = &deriv("t101") - &bound_derivative_in_t(&Shape::J(pinned_j(3, "0.35")));
    let rhs = RationalFn::new(
        Poly::from_terms(&[(1, "1687.9"), (0, "-54411.2")]).unwrap(),
        t_power(9),
    );
    lhs == rhs
}

/// `δ′ − li′ = (0.35t⁵ − 1.05t⁴ + 1687.9t − 54411.2)/t⁹`.
fn thm11_li_difference() -> bool {
    let lhs = &deriv("t101") - &deriv("li");
    let rhs = RationalFn::new(
        Poly::from_terms(&[(5, "0.35"), (4, "-1.05"), (1, "1687.9"), (0, "-54411.2")]).unwrap(),
        t_power(9),
    );
    lhs == rhs
}

/// `g²·ξ′/t⁵ = s`: the quotient bound's derivative in closed form.
fn eq320() -> bool {
    let xi_prime = deriv("t103");
    let g = registry_poly("g_thm13");
    let s = registry_poly("s_thm13");
    let lhs = &xi_prime * &RationalFn::new(&g * &g, t_power(5));
    lhs == RationalFn::from_poly(s)
}

/// `U′ = u(t)/t⁹`.
fn thm12_uprime() -> bool {
    deriv("U_thm12") == RationalFn::new(registry_poly("u_thm12"), t_power(9))
}

/// `φ′ = s(t)·t⁵/S(t)²`: the lower quotient's derivative in closed form.
fn thm14_phiprime() -> bool {
    let s = registry_poly("s_thm14");
    let big_s = registry_poly("S_thm12");
    let rhs = RationalFn::new(&t_power(5) * &s, &big_s * &big_s);
    deriv("t104") == rhs
}

static IDENTITIES: Lazy<Vec<Identity>> = Lazy::new(|| {
    vec![
        Identity { name: "thm12_RST", location: "thm 1.2 proof", check: thm12_rst },
        Identity { name: "eq316_difference", location: "eq. 316", check: eq316_difference },
        Identity {
            name: "thm11_li_difference",
            location: "thm 1.1 proof",
            check: thm11_li_difference,
        },
        Identity { name: "eq320", location: "eq. 320", check: eq320 },
        Identity { name: "thm12_Uprime", location: "thm 1.2 proof", check: thm12_uprime },
        Identity { name: "thm14_phiprime", location: "thm 1.4 proof", check: thm14_phiprime },
    ]
});

pub fn identities() -> &'static [Identity] {
    &IDENTITIES
}

/// Checks one registered identity coefficient-exactly.
pub fn verify_polynomial_identity(name: &str) -> Result<bool> {
    let id = IDENTITIES
        .iter()
        .find(|i| i.name == name)
        .ok_or_else(|| Error::UnknownIdentity(name.to_string()))?;
    Ok((id.check)())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat_int;

    #[test]
    fn all_registered_identities_hold() {
        for id in identities() {
            assert!((id.check)(), "{} failed", id.name);
        }
    }

    #[test]
    fn unknown_identity_errors() {
        assert!(matches!(
            verify_polynomial_identity("thm99_bogus"),
            Err(Error::UnknownIdentity(_))
        ));
    }

    #[test]
    fn simple_square_expansion() {
        // (t+1)² = t² + 2t + 1, the same machinery on a toy input
        let lin = Poly::new(vec![rat_int(1), rat_int(1)]);
        let sq = &lin * &lin;
        assert_eq!(sq, Poly::new(vec![rat_int(1), rat_int(2), rat_int(1)]));
    }
}
