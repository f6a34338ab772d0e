//! Campaign runners: every finite verification step behind the bound
//! theorems, replayable from the command line and from tests.
//!
//! A campaign takes a `Primes` engine, runs its checks (scans,
//! identities, Sturm certificates, the ψ-tail sum, coverage
//! arithmetic), and produces a [`VerificationReport`] whose JSON form
//! is stable: identical campaign and checkpoint file give a
//! bit-identical report apart from the wall clock.

mod constants_check;
mod crossover;
mod eq312;
mod identities;
mod inequalities;
mod lemma41;
mod positivity;
mod report;
mod scans;
mod stitching;

pub use constants_check::verify_constants_consistency;
pub use crossover::find_crossover;
pub use eq312::{verify_eq312, verify_eq312_with_threshold};
pub use identities::{identities, verify_polynomial_identity, Identity};
pub use inequalities::{
    inequalities, verify_named_inequality, verify_rational_inequality,
    verify_rational_inequality_on_interval, InequalityDomain, NamedInequality,
};
pub use lemma41::{lemma41_lower_bound, lemma41_scaled};
pub use positivity::{verify_positivity, verify_positivity_all};
pub use report::{Counterexample, Status, VerificationReport, WorstMargin};
pub use scans::{
    certify_monotone_increasing, downward_first_violation, downward_gap_violation,
    verify_gap_range, verify_lower_at_primes, verify_upper_at_primes,
};
pub use stitching::{verify_stitching_thm15, verify_stitching_thm15_with};

use crate::exactmath::parse_decimal;
use crate::primes::Primes;
use crate::{Error, Result};

/// An index endpoint resolved against the sieve at run time.
#[derive(Debug, Clone, Copy)]
pub enum IndexSpec {
    /// `π(x) + offset`
    PiOfPlus(u64, u64),
}

impl IndexSpec {
    fn resolve(&self, primes: &Primes) -> Result<u64> {
        match self {
            IndexSpec::PiOfPlus(x, off) => Ok(primes.pi(*x)? + off),
        }
    }

    fn describe(&self) -> String {
        match self {
            IndexSpec::PiOfPlus(x, 0) => format!("pi({x})"),
            IndexSpec::PiOfPlus(x, off) => format!("pi({x})+{off}"),
        }
    }
}

/// What a campaign does.
#[derive(Debug, Clone)]
pub enum Mode {
    UpperScan { bound: &'static str, from: IndexSpec, to: IndexSpec, mono_from: &'static str },
    LowerScan {
        bound: &'static str,
        from: IndexSpec,
        to: IndexSpec,
        mono_from: &'static str,
        strict: bool,
    },
    GapScan { c: &'static str, from: IndexSpec, to: IndexSpec },
    Identities,
    Positivity,
    Inequalities,
    Eq312,
    Stitching,
    Constants,
}

/// A named, replayable verification step.
#[derive(Debug, Clone)]
pub struct Campaign {
    pub id: &'static str,
    pub mode: Mode,
    /// Human-readable claim, with the source location.
    pub claim: &'static str,
    /// Needs a sieve beyond the default desk limit.
    pub extended: bool,
    pub axioms: &'static [&'static str],
}

/// All campaign presets reachable from the command line.
pub fn campaigns() -> &'static [Campaign] {
    static CAMPAIGNS: &[Campaign] = &[
        Campaign {
            id: "t101_primescan",
            mode: Mode::UpperScan {
                bound: "t101",
                from: IndexSpec::PiOfPlus(47, 0),
                to: IndexSpec::PiOfPlus(500_000, 1),
                mono_from: "3.85",
            },
            claim: "thm 1.1 scan: t101(p_i) > i for pi(47) <= i <= pi(500000)+1",
            extended: false,
            axioms: &[],
        },
        Campaign {
            id: "t103_primescan",
            mode: Mode::UpperScan {
                bound: "t103",
                from: IndexSpec::PiOfPlus(93, 0),
                to: IndexSpec::PiOfPlus(140_000, 1),
                mono_from: "4.53",
            },
            claim: "thm 1.3 scan: t103(p_n) > n for pi(ceil(e^4.53)) <= n <= pi(140000)+1",
            extended: false,
            axioms: &[],
        },
        Campaign {
            id: "t102_boundary",
            mode: Mode::LowerScan {
                bound: "U_thm12",
                from: IndexSpec::PiOfPlus(1_332_450_001, 0),
                to: IndexSpec::PiOfPlus(1_332_479_531, 0),
                mono_from: "3.8",
                strict: true,
            },
            claim: "thm 1.2 boundary: pi(p_i) > U(p_{i+1}) for pi(1332450001) <= i <= pi(1332479531)",
            extended: true,
            axioms: &[],
        },
        Campaign {
            id: "t104_primescan",
            mode: Mode::LowerScan {
                bound: "t104",
                from: IndexSpec::PiOfPlus(1_332_479_531, 0),
                to: IndexSpec::PiOfPlus(8_000_000_000, 1),
                mono_from: "4.6",
                strict: false,
            },
            claim: "thm 1.4 scan: pi(p_i) >= t104(p_{i+1}) for pi(1332479531) <= i <= pi(8e9)+1",
            extended: true,
            axioms: &[],
        },
        Campaign {
            id: "thm15_gap",
            mode: Mode::GapScan {
                c: "1.1817",
                from: IndexSpec::PiOfPlus(58_889, 0),
                to: IndexSpec::PiOfPlus(2_898_239, 1),
            },
            claim: "thm 1.5 scan: p_n(1 + 1.1817/log^3 p_n) > p_{n+1} for pi(58889) <= n <= pi(2898239)+1",
            extended: false,
            axioms: &[],
        },
        Campaign {
            id: "eq312",
            mode: Mode::Eq312,
            claim: "eq. 312: psi-tail sums below 0.35 for a = 3600, i = 0..100",
            extended: false,
            axioms: &["psi error-term constants (pinned)"],
        },
        Campaign {
            id: "identities_all",
            mode: Mode::Identities,
            claim: "coefficient-exact identity suite",
            extended: false,
            axioms: &[],
        },
        Campaign {
            id: "positivity_all",
            mode: Mode::Positivity,
            claim: "Sturm certificates for every registered sign claim",
            extended: false,
            axioms: &[],
        },
        Campaign {
            id: "inequalities_all",
            mode: Mode::Inequalities,
            claim: "rational-function inequality suite (eq. 318, 319, 321, 322)",
            extended: false,
            axioms: &[],
        },
        Campaign {
            id: "stitching_thm15",
            mode: Mode::Stitching,
            claim: "thm 1.5 coverage arithmetic across the pinned gap results",
            extended: false,
            axioms: &["gap_kadiri_lumley", "gap_ramare_saouter", "gap_trudgian_from"],
        },
        Campaign {
            id: "constants_consistency",
            mode: Mode::Constants,
            claim: "pinned-constant internal consistency (exact)",
            extended: false,
            axioms: &["pi_1e14", "theta_1e14", "log_1e14", "pi_8e9", "theta_8e9_upper"],
        },
    ];
    CAMPAIGNS
}

pub fn campaign(id: &str) -> Result<&'static Campaign> {
    campaigns()
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::UnknownCampaign(id.to_string()))
}

/// Multi-line dry-run description: the ranges, bounds and claims a
/// campaign would use, with no sieving at all.
pub fn describe_campaign(c: &Campaign) -> String {
    let mut out = format!("campaign {}\n  claim: {}\n", c.id, c.claim);
    match &c.mode {
        Mode::UpperScan { bound, from, to, mono_from } => {
            out += &format!(
                "  mode: upper scan of {bound}; i from {} to {}; monotone from log x = {mono_from}\n",
                from.describe(),
                to.describe()
            );
        }
        Mode::LowerScan { bound, from, to, mono_from, strict } => {
            out += &format!(
                "  mode: lower scan of {bound} ({}); i from {} to {}; monotone from log x = {mono_from}\n",
                if *strict { "strict" } else { "non-strict" },
                from.describe(),
                to.describe()
            );
        }
        Mode::GapScan { c: coeff, from, to } => {
            out += &format!(
                "  mode: gap scan with c = {coeff}; n from {} to {}\n",
                from.describe(),
                to.describe()
            );
        }
        Mode::Identities => {
            for id in identities() {
                out += &format!("  identity {} ({})\n", id.name, id.location);
            }
        }
        Mode::Positivity => {
            for e in crate::exactmath::registry() {
                out += &format!("  claim {} ({})\n", e.name, e.location);
            }
        }
        Mode::Inequalities => {
            for i in inequalities() {
                out += &format!("  inequality {} ({})\n", i.name, i.location);
            }
        }
        Mode::Eq312 | Mode::Stitching | Mode::Constants => {}
    }
    if c.extended {
        out += "  extended: needs a sieve beyond the default limit\n";
    }
    if !c.axioms.is_empty() {
        out += &format!("  axioms: {}\n", c.axioms.join(", "));
    }
    out
}

/// Runs a campaign preset against a prime engine.
pub fn run_campaign(primes: &Primes, id: &str) -> Result<VerificationReport> {
    let c = campaign(id)?;
    let mut report = match &c.mode {
        Mode::UpperScan { bound, from, to, mono_from } => {
            let (lo, hi) = (from.resolve(primes)?, to.resolve(primes)?);
            verify_upper_at_primes(primes, bound, lo, hi, &parse_decimal(mono_from)?)?
        }
        Mode::LowerScan { bound, from, to, mono_from, strict } => {
            let (lo, hi) = (from.resolve(primes)?, to.resolve(primes)?);
            verify_lower_at_primes(primes, bound, lo, hi, &parse_decimal(mono_from)?, *strict)?
        }
        Mode::GapScan { c: coeff, from, to } => {
            let (lo, hi) = (from.resolve(primes)?, to.resolve(primes)?);
            verify_gap_range(primes, lo, hi, &parse_decimal(coeff)?)?
        }
        Mode::Identities => {
            let started = std::time::Instant::now();
            let mut r = VerificationReport::new(id);
            for ident in identities() {
                r.checked += 1;
                if !verify_polynomial_identity(ident.name)? {
                    r.add_counterexample(ident.name.to_string(), 0.0, 0.0);
                }
            }
            r.wall_ms = started.elapsed().as_millis();
            r
        }
        Mode::Positivity => verify_positivity_all()?,
        Mode::Inequalities => {
            let started = std::time::Instant::now();
            let mut r = VerificationReport::new(id);
            for ineq in inequalities() {
                r.checked += 1;
                let (ok, cert) = ineq.verify()?;
                if !ok {
                    r.add_counterexample(
                        ineq.name.to_string(),
                        cert.sign_at_a as f64,
                        cert.crossing_roots as f64,
                    );
                }
            }
            r.wall_ms = started.elapsed().as_millis();
            r
        }
        Mode::Eq312 => verify_eq312()?.0,
        Mode::Stitching => verify_stitching_thm15(primes)?,
        Mode::Constants => verify_constants_consistency()?,
    };
    report.campaign = c.id.to_string();
    let mut axioms: Vec<String> = c.axioms.iter().map(|s| s.to_string()).collect();
    for a in report.axioms_used.drain(..) {
        if !axioms.contains(&a) {
            axioms.push(a);
        }
    }
    report.axioms_used = axioms;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn campaign_presets_exist() {
        for id in [
            "t101_primescan", "t103_primescan", "t102_boundary", "t104_primescan",
            "thm15_gap", "eq312", "identities_all", "positivity_all", "stitching_thm15",
        ] {
            assert!(campaign(id).is_ok(), "missing {id}");
        }
        assert!(matches!(campaign("nope"), Err(Error::UnknownCampaign(_))));
    }

    #[test]
    fn dry_run_description_has_ranges_without_sieving() {
        let c = campaign("t101_primescan").unwrap();
        let d = describe_campaign(c);
        assert!(d.contains("pi(47)"));
        assert!(d.contains("pi(500000)+1"));
        assert!(d.contains("t101"));
        let c = campaign("t104_primescan").unwrap();
        assert!(describe_campaign(c).contains("extended"));
    }

    #[test]
    fn identities_campaign_runs_green() {
        let primes = Primes::new(1 << 20);
        let r = run_campaign(&primes, "identities_all").unwrap();
        assert!(r.passed());
        assert_eq!(r.checked, identities().len() as u64);
    }

    #[test]
    fn extended_campaigns_error_cleanly_at_desk_limits() {
        let primes = Primes::new(1 << 20);
        let err = run_campaign(&primes, "t102_boundary");
        assert!(matches!(err, Err(Error::LimitExceeded { .. })));
    }
}
