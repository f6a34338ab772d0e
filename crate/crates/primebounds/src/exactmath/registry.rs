//! The catalogue of named polynomials underlying the bound proofs,
//! each with its domain and the sign claim it must satisfy.
//!
//! Two distinct polynomials are named `s` in the source theorems; they
//! are registered here as `s_thm13` and `s_thm14`. Derived entries
//! (`s_thm13_prime`, the `h_thm14` case minorants, the negated descent
//! window) make every step of the two-case arguments a checkable claim
//! of its own.

use once_cell::sync::Lazy;
use serde_json::json;

use super::poly::parse_decimal;
use super::{Poly, Rat};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Domain {
    /// `[from, ∞)`
    Ray(Rat),
    /// `[a, b]`
    Interval(Rat, Rat),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SignClaim {
    /// `p(t) > 0` on the domain.
    Positive,
    /// `p(t) ≥ 0` on the domain.
    Nonnegative,
    /// `p(t) ≥ floor · t^scale_deg` on the domain (used for claims
    /// stated about `p(t)/t^scale_deg`).
    AtLeastScaled { floor: Rat, scale_deg: usize },
}

#[derive(Clone, Debug)]
pub struct RegistryEntry {
    pub name: &'static str,
    pub poly: Poly,
    pub domain: Domain,
    pub claim: SignClaim,
    pub location: &'static str,
}

fn ray(s: &str) -> Domain {
    Domain::Ray(parse_decimal(s).unwrap())
}

fn interval(a: &str, b: &str) -> Domain {
    Domain::Interval(parse_decimal(a).unwrap(), parse_decimal(b).unwrap())
}

fn p(terms: &[(usize, &str)]) -> Poly {
    Poly::from_terms(terms).unwrap()
}

static REGISTRY: Lazy<Vec<RegistryEntry>> = Lazy::new(|| {
    let g_thm13 = p(&[
        (7, "1"),
        (6, "-1"),
        (5, "-1"),
        (4, "-3.35"),
        (3, "-12.65"),
        (2, "-71.7"),
        (1, "-466.1275"),
        (0, "-3489.8225"),
    ]);
    let s_thm13 = p(&[
        (8, "1"),
        (7, "-2"),
        (6, "-1"),
        (5, "-4.35"),
        (4, "-19.35"),
        (3, "-109.65"),
        (2, "-752.9275"),
        (1, "-5820.46"),
        (0, "-20938.935"),
    ]);
    let h_thm14 = p(&[
        (15, "-0.01"),
        (14, "0.39"),
        (13, "-1.78"),
        (12, "1.763"),
        (11, "0.033"),
        (10, "-2.997"),
    ]);

    vec![
        RegistryEntry {
            name: "g_thm13",
            poly: g_thm13,
            domain: ray("3.804"),
            claim: SignClaim::Positive,
            location: "thm 1.3 proof",
        },
        RegistryEntry {
            name: "h_thm13",
            poly: p(&[
                (10, "29470"),
                (9, "11770"),
                (8, "39068"),
                (7, "164238"),
                (6, "712906"),
                (5, "3255002"),
                (4, "12190826"),
                (3, "88308"),
                (2, "385090"),
                (1, "846526"),
                (0, "-12787805"),
            ]),
            domain: ray("1"),
            claim: SignClaim::Nonnegative,
            location: "thm 1.3 proof",
        },
        RegistryEntry {
            name: "r_thm13",
            poly: p(&[
                (11, "0.35"),
                (10, "-1.75"),
                (9, "1.75"),
                (8, "-0.6"),
                (7, "-1.3"),
                (6, "-29492"),
                (5, "-11917"),
                (4, "-40316"),
                (3, "-155136"),
                (2, "-717716"),
                (1, "-3253405"),
                (0, "-12178862"),
            ]),
            domain: ray("10.9"),
            claim: SignClaim::Nonnegative,
            location: "thm 1.3 proof",
        },
        RegistryEntry {
            name: "s_thm13",
            poly: s_thm13.clone(),
            domain: ray("4.53"),
            claim: SignClaim::Nonnegative,
            location: "thm 1.3 proof",
        },
        RegistryEntry {
            name: "s_thm13_prime",
            poly: s_thm13.derivative(),
            domain: ray("3.48"),
            claim: SignClaim::Positive,
            location: "thm 1.3 proof",
        },
        RegistryEntry {
            name: "s_thm13_neg_window",
            poly: -&s_thm13,
            domain: interval("3.804", "4.52"),
            claim: SignClaim::Nonnegative,
            location: "thm 1.3 proof, descent case",
        },
        RegistryEntry {
            name: "r_thm14",
            poly: p(&[
                (10, "28714"),
                (9, "11244"),
                (8, "36367"),
                (7, "146093"),
                (6, "691057"),
                (5, "3101649"),
                (4, "11572765"),
                (3, "-77484"),
                (2, "-365233"),
                (1, "-799121"),
                (0, "12169597"),
            ]),
            domain: ray("1"),
            claim: SignClaim::Nonnegative,
            location: "thm 1.4 proof",
        },
        RegistryEntry {
            name: "s_thm14",
            poly: p(&[
                (8, "1"),
                (7, "-2"),
                (6, "-1"),
                (5, "-3.65"),
                (4, "-18.65"),
                (3, "-110.35"),
                (2, "-736.8275"),
                (1, "-5682.56"),
                (0, "-20426.535"),
            ]),
            domain: ray("4.6"),
            claim: SignClaim::Nonnegative,
            location: "thm 1.4 proof",
        },
        RegistryEntry {
            name: "h_thm14",
            poly: h_thm14.clone(),
            domain: interval("23", "33"),
            claim: SignClaim::Positive,
            location: "thm 1.4 proof",
        },
        RegistryEntry {
            name: "h_thm14_case_lo",
            poly: &h_thm14 - &p(&[(12, "13.723"), (10, "-2.997")]),
            domain: interval("23", "29"),
            claim: SignClaim::Nonnegative,
            location: "thm 1.4 proof, lower case",
        },
        RegistryEntry {
            name: "h_thm14_case_hi",
            poly: &h_thm14 - &p(&[(12, "0.443"), (10, "-2.997")]),
            domain: interval("29", "33"),
            claim: SignClaim::Nonnegative,
            location: "thm 1.4 proof, upper case",
        },
        RegistryEntry {
            name: "u_thm12",
            poly: p(&[(8, "1"), (5, "-0.35"), (4, "1.05"), (0, "-39732")]),
            domain: ray("3.8"),
            claim: SignClaim::Nonnegative,
            location: "thm 1.2 proof",
        },
        RegistryEntry {
            name: "R_thm12",
            poly: p(&[
                (7, "1"),
                (6, "1"),
                (5, "2"),
                (4, "5.65"),
                (3, "23.65"),
                (2, "118.25"),
                (1, "709.5"),
                (0, "4966.5"),
            ]),
            domain: ray("0"),
            claim: SignClaim::Positive,
            location: "thm 1.2 proof",
        },
        RegistryEntry {
            name: "S_thm12",
            poly: p(&[
                (7, "1"),
                (6, "-1"),
                (5, "-1"),
                (4, "-2.65"),
                (3, "-13.35"),
                (2, "-70.3"),
                (1, "-455.6275"),
                (0, "-3404.4225"),
            ]),
            domain: ray("3.79"),
            claim: SignClaim::Positive,
            location: "thm 1.2 proof; also the thm 1.4 denominator",
        },
        RegistryEntry {
            name: "T_thm12",
            poly: p(&[
                (6, "11017.9625"),
                (5, "19471.047875"),
                (4, "60956.6025"),
                (3, "250573.169"),
                (2, "1074985.621875"),
                (1, "4678311.7425"),
                (0, "16908064.34625"),
            ]),
            domain: ray("0"),
            claim: SignClaim::Positive,
            location: "thm 1.2 proof",
        },
        RegistryEntry {
            name: "u_thm11",
            poly: p(&[
                (8, "1"),
                (5, "0.35"),
                (4, "-1.05"),
                (1, "1687.9"),
                (0, "-54411.2"),
            ]),
            domain: ray("3.85"),
            claim: SignClaim::Nonnegative,
            location: "thm 1.1 proof, monotonicity",
        },
        RegistryEntry {
            name: "g_thm15",
            poly: p(&[
                (11, "0.0017"),
                (10, "-2.3634"),
                (9, "-1.1817"),
                (8, "-5.707611"),
                (7, "-9.051822"),
                (5, "-1.39641489"),
                (4, "-10.6965380574"),
                (3, "-5.3482690287"),
                (0, "-6.32004951121479"),
            ]),
            domain: ray("1423.728"),
            claim: SignClaim::AtLeastScaled {
                floor: parse_decimal("0.056").unwrap(),
                scale_deg: 9,
            },
            location: "thm 1.5 proof, cleared by x^9",
        },
    ]
});

/// All registered polynomials.
pub fn registry() -> &'static [RegistryEntry] {
    &REGISTRY
}

/// Looks up a registry entry by name.
pub fn registry_lookup(name: &str) -> Option<&'static RegistryEntry> {
    REGISTRY.iter().find(|e| e.name == name)
}

/// Audit dump of the registry as JSON.
pub fn registry_json() -> serde_json::Value {
    let entries: Vec<_> = REGISTRY
        .iter()
        .map(|e| {
            let coeffs: Vec<String> = e.poly.coeffs().iter().map(|c| c.to_string()).collect();
            let threshold = match &e.domain {
                Domain::Ray(a) => json!(a.to_string()),
                Domain::Interval(a, b) => json!([a.to_string(), b.to_string()]),
            };
            let claimed_sign = match &e.claim {
                SignClaim::Positive => json!("> 0"),
                SignClaim::Nonnegative => json!(">= 0"),
                SignClaim::AtLeastScaled { floor, scale_deg } => {
                    json!(format!(">= {} * t^{}", floor, scale_deg))
                }
            };
            json!({
                "name": e.name,
                "degree": e.poly.degree(),
                "coefficients": coeffs,
                "threshold": threshold,
                "claimed_sign": claimed_sign,
                "paper_location": e.location,
            })
        })
        .collect();
    json!(entries)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_are_unique() {
        let mut names: Vec<_> = registry().iter().map(|e| e.name).collect();
        names.sort_unstable();
        let n = names.len();
        names.dedup();
        assert_eq!(n, names.len());
    }

    #[test]
    fn both_s_polynomials_are_registered() {
        assert!(registry_lookup("s_thm13").is_some());
        assert!(registry_lookup("s_thm14").is_some());
        assert_ne!(
            registry_lookup("s_thm13").unwrap().poly,
            registry_lookup("s_thm14").unwrap().poly
        );
    }

    #[test]
    fn json_dump_is_complete() {
        let v = registry_json();
        let arr = v.as_array().unwrap();
        assert_eq!(arr.len(), registry().len());
        for e in arr {
            for key in ["name", "degree", "coefficients", "threshold", "claimed_sign", "paper_location"] {
                assert!(e.get(key).is_some(), "missing {key}");
            }
        }
    }
}
