//! Pinned constants: values the toolkit consumes as axioms (published
//! table values and anchors at scales no desk machine re-derives),
//! each with its provenance. Their internal consistency is verified
//! exactly by the `verify` module's constants campaign.

use once_cell::sync::Lazy;

use crate::exactmath::{parse_decimal, Rat};

#[derive(Debug, Clone)]
pub enum ConstValue {
    Int(u64),
    Rational(Rat),
    /// A two-sided rational enclosure `[lo, hi]`.
    Range(Rat, Rat),
}

#[derive(Debug, Clone)]
pub struct ProofConstant {
    pub name: &'static str,
    pub value: ConstValue,
    pub provenance: &'static str,
}

fn dec(s: &str) -> Rat {
    parse_decimal(s).unwrap()
}

static CONSTANTS: Lazy<Vec<ProofConstant>> = Lazy::new(|| {
    vec![
        ProofConstant {
            name: "pi_1e14",
            value: ConstValue::Int(3_204_941_750_802),
            provenance: "π(10^14), published prime-count tables",
        },
        ProofConstant {
            name: "theta_1e14",
            value: ConstValue::Range(dec("99999990573246"), dec("99999990573247")),
            provenance: "θ(10^14) enclosure, Dusart's table 6.2 (pinned, not recomputed)",
        },
        ProofConstant {
            name: "log_1e14",
            value: ConstValue::Range(dec("32.23619"), dec("32.2362")),
            provenance: "log 10^14 bracket used by the x₁ displays",
        },
        ProofConstant {
            name: "K1_upper",
            value: ConstValue::Int(102_839_438_084),
            provenance: "upper bound for π(x₁) − θ(x₁)/log x₁, eq. 317",
        },
        ProofConstant {
            name: "K1_lower",
            value: ConstValue::Int(102_838_475_779),
            provenance: "lower bound for π(x₁) − θ(x₁)/log x₁, thm 1.4 proof",
        },
        ProofConstant {
            name: "pi_8e9",
            value: ConstValue::Int(367_783_654),
            provenance: "π(8·10^9), thm 1.4 proof (reproducible with --extended)",
        },
        ProofConstant {
            name: "theta_8e9_upper",
            value: ConstValue::Int(7_999_890_793),
            provenance: "θ(8·10^9) upper bound, Dusart's table 6.1",
        },
        ProofConstant {
            name: "log_8e9",
            value: ConstValue::Range(dec("22.8"), dec("22.8028")),
            provenance: "log 8·10^9 bracket used by the x₂ display",
        },
        ProofConstant {
            name: "log_8e9_anchor_lo",
            value: ConstValue::Rational(dec("22.8027")),
            provenance: "tighter log 8·10^9 lower bound used by the x₂ anchor",
        },
        ProofConstant {
            name: "skewes_region_start",
            value: ConstValue::Int(100_000_000_000_000),
            provenance: "Ξ > 10^14: π(x) ≤ li(x) holds below (pinned axiom)",
        },
        ProofConstant {
            name: "z1_a_2.65",
            value: ConstValue::Int(36_917_641),
            provenance: "z₁(2.65), thm 1.5 proof (computer-checked threshold)",
        },
        ProofConstant {
            name: "z2_b_3.83",
            value: ConstValue::Int(10),
            provenance: "z₂(3.83), thm 1.5 proof via cor. 3.9",
        },
        ProofConstant {
            name: "z3_a_2.65",
            value: ConstValue::Int(36_909_396),
            provenance: "z₃(2.65) = min{k : k·c(k) ≥ z₁}, thm 1.5 proof",
        },
        ProofConstant {
            name: "a_thm13",
            value: ConstValue::Rational(dec("32.23619")),
            provenance: "thm 1.3 proof, f(x₁, a) ≥ b⁸K₁ display",
        },
        ProofConstant {
            name: "b_thm13",
            value: ConstValue::Rational(dec("32.236192")),
            provenance: "thm 1.3 proof, f(x₁, a) ≥ b⁸K₁ display",
        },
        ProofConstant {
            name: "gap_ramare_saouter",
            value: ConstValue::Int(28_313_999),
            provenance: "prime in (x, x(1 + 1/28313999)] for x ≥ 10726905041 (pinned)",
        },
        ProofConstant {
            name: "gap_ramare_saouter_from",
            value: ConstValue::Int(10_726_905_041),
            provenance: "validity start of the 1/28313999 gap result",
        },
        ProofConstant {
            name: "gap_kadiri_lumley",
            value: ConstValue::Int(2_442_159_713),
            provenance: "prime in (x, x(1 + 1/2442159713)] for x ≥ e^150 (pinned)",
        },
        ProofConstant {
            name: "gap_trudgian_from",
            value: ConstValue::Int(2_898_239),
            provenance: "prime in (x, x(1 + 1/(111 log² x))] for x ≥ 2898239 (pinned)",
        },
        ProofConstant {
            name: "thm15_c",
            value: ConstValue::Rational(dec("1.1817")),
            provenance: "thm 1.5 interval coefficient",
        },
        ProofConstant {
            name: "thm15_c_threshold_log",
            value: ConstValue::Rational(dec("1423.728")),
            provenance: "log-x start of the two-quotient positivity regime, thm 1.5 proof",
        },
    ]
});

/// All pinned constants.
pub fn constants() -> &'static [ProofConstant] {
    &CONSTANTS
}

pub fn constant(name: &str) -> Option<&'static ProofConstant> {
    CONSTANTS.iter().find(|c| c.name == name)
}

/// A pinned constant that must be a single integer.
pub fn constant_int(name: &str) -> u64 {
    match constant(name).map(|c| &c.value) {
        Some(ConstValue::Int(v)) => *v,
        _ => panic!("{name} is not a pinned integer constant"),
    }
}

/// A pinned constant that must be a single rational.
pub fn constant_rat(name: &str) -> Rat {
    match constant(name).map(|c| &c.value) {
        Some(ConstValue::Rational(v)) => v.clone(),
        Some(ConstValue::Int(v)) => Rat::from_integer((*v).into()),
        _ => panic!("{name} is not a pinned rational constant"),
    }
}

/// A pinned enclosure `[lo, hi]`.
pub fn constant_range(name: &str) -> (Rat, Rat) {
    match constant(name).map(|c| &c.value) {
        Some(ConstValue::Range(lo, hi)) => (lo.clone(), hi.clone()),
        _ => panic!("{name} is not a pinned range constant"),
    }
}

/// One row of the pinned θ-distance table:
/// `|θ(x) − x| < η·x/log^k x` for every `x ≥ x₀`.
#[derive(Debug, Clone)]
pub struct EtaRow {
    pub k: u32,
    pub eta: Rat,
    /// `x₀` itself, or the exponent `c` when the row starts at `e^c`.
    pub x0: EtaStart,
    pub provenance: &'static str,
}

#[derive(Debug, Clone)]
pub enum EtaStart {
    AtX(u64),
    AtLogX(Rat),
}

impl EtaRow {
    /// A rational at or above x₀: any anchor at or above the returned
    /// value is certainly inside the row's validity range.
    pub fn x0_lower(&self) -> Rat {
        match &self.x0 {
            EtaStart::AtX(v) => Rat::from_integer((*v).into()),
            EtaStart::AtLogX(c) => {
                let mut ctx = crate::exactmath::FloatCtx::new(96);
                let iv = crate::exactmath::Interval::from_rat(c, &mut ctx).exp(&mut ctx);
                iv.hi_rat()
            }
        }
    }
}

static ETA_TABLE: Lazy<Vec<EtaRow>> = Lazy::new(|| {
    vec![
        EtaRow { k: 1, eta: dec("0.001"), x0: EtaStart::AtX(908_994_923), provenance: "θ-distance table, k = 1" },
        EtaRow { k: 2, eta: dec("0.01"), x0: EtaStart::AtX(7_713_133_853), provenance: "θ-distance table, k = 2" },
        EtaRow { k: 3, eta: dec("0.78"), x0: EtaStart::AtX(158_822_621), provenance: "θ-distance table, k = 3" },
        EtaRow { k: 4, eta: dec("1300"), x0: EtaStart::AtX(2), provenance: "θ-distance table, k = 4" },
        EtaRow { k: 3, eta: dec("0.35"), x0: EtaStart::AtLogX(dec("30")), provenance: "prop 3.3 (tail check at a = 3600)" },
    ]
});

/// The pinned θ-distance rows usable as J anchors.
pub fn eta_table() -> &'static [EtaRow] {
    &ETA_TABLE
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lookups_work() {
        assert_eq!(constant_int("pi_1e14"), 3_204_941_750_802);
        let (lo, hi) = constant_range("theta_1e14");
        assert!(lo < hi);
        assert_eq!(constant_rat("thm15_c"), dec("1.1817"));
        assert!(constant("nonexistent").is_none());
    }

    #[test]
    fn eta_rows_cover_all_k() {
        for k in 1..=4 {
            assert!(eta_table().iter().any(|r| r.k == k), "missing k = {k}");
        }
        // the e^30 row's certified start sits between e^30 and 10^14
        let row = eta_table().iter().find(|r| matches!(r.x0, EtaStart::AtLogX(_))).unwrap();
        let lower = row.x0_lower();
        assert!(lower > Rat::from_integer(10_000_000_000_000u64.into()));
        assert!(lower < Rat::from_integer(100_000_000_000_000u64.into()));
    }
}
