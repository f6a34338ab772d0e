//! The named bound catalogue.
//!
//! `t101`/`t102` are the eight-term sum bounds, `t103`/`t104` the
//! six-term Panaitopol quotients, `dusart308`/`dusart309` the earlier
//! three-term estimates they improve on, `cor39_*` the four weakened
//! upper quotients, `cor311_*` the fourteen weakened lower quotients,
//! `U_thm12` the sum form used by the boundary scan, and `li` the
//! logarithmic integral (an upper bound below the Skewes region by the
//! pinned axiom).

use once_cell::sync::Lazy;
use serde_json::json;

use super::{BoundSpec, Direction, Shape, Threshold};
use crate::exactmath::{parse_decimal, Rat};

fn dec(s: &str) -> Rat {
    parse_decimal(s).unwrap()
}

fn sum(coeffs: &[&str]) -> Shape {
    Shape::Sum { coeffs: coeffs.iter().map(|s| dec(s)).collect() }
}

fn pan(denom: &[&str]) -> Shape {
    Shape::Panaitopol { denom: denom.iter().map(|s| dec(s)).collect() }
}

fn at_x(s: &str) -> Threshold {
    Threshold::AtX(dec(s))
}

fn at_log(s: &str) -> Threshold {
    Threshold::AtLogX(dec(s))
}

static CATALOGUE: Lazy<Vec<BoundSpec>> = Lazy::new(|| {
    let mut v = vec![
        BoundSpec {
            name: "t101",
            shape: sum(&["1", "1", "2", "6.35", "24.35", "121.75", "730.5", "6801.4"]),
            direction: Direction::Upper,
            threshold: at_x("1"),
            location: "thm 1.1",
            axiom: None,
        },
        BoundSpec {
            name: "t102",
            shape: sum(&["1", "1", "2", "5.65", "23.65", "118.25", "709.5", "4966.5"]),
            direction: Direction::Lower,
            threshold: at_x("1332450001"),
            location: "thm 1.2",
            axiom: None,
        },
        BoundSpec {
            name: "t103",
            shape: pan(&["1", "1", "3.35", "12.65", "71.7", "466.1275", "3489.8225"]),
            direction: Direction::Upper,
            threshold: at_log("3.804"),
            location: "thm 1.3",
            axiom: None,
        },
        BoundSpec {
            name: "t104",
            shape: pan(&["1", "1", "2.65", "13.35", "70.3", "455.6275", "3404.4225"]),
            direction: Direction::Lower,
            threshold: at_x("1332479531"),
            location: "thm 1.4",
            axiom: None,
        },
        BoundSpec {
            name: "dusart308",
            shape: sum(&["1", "1", "2.334"]),
            direction: Direction::Upper,
            threshold: at_x("2953652287"),
            location: "eq. 308 (pinned)",
            axiom: Some("published three-term upper bound, taken as given"),
        },
        BoundSpec {
            name: "dusart309",
            shape: sum(&["1", "1", "2"]),
            direction: Direction::Lower,
            threshold: at_x("88783"),
            location: "eq. 309 (pinned)",
            axiom: Some("published three-term lower bound, taken as given"),
        },
        BoundSpec {
            name: "U_thm12",
            shape: sum(&["1", "1", "2", "5.65", "23.65", "118.25", "709.5", "4966.5"]),
            direction: Direction::Lower,
            threshold: at_log("3.8"),
            location: "thm 1.2 proof, scan helper",
            axiom: None,
        },
        BoundSpec {
            name: "li",
            shape: Shape::Li,
            direction: Direction::Upper,
            threshold: at_x("2"),
            location: "logarithmic integral",
            axiom: Some("pi(x) <= li(x) for x <= 10^14 (Skewes-region bound, pinned)"),
        },
        // the four weakened upper quotients
        BoundSpec {
            name: "cor39_a",
            shape: pan(&["1", "1", "3.35", "12.65", "89.6"]),
            direction: Direction::Upper,
            threshold: at_x("21.95"),
            location: "cor. 3.9",
            axiom: None,
        },
        BoundSpec {
            name: "cor39_b",
            shape: pan(&["1", "1", "3.35", "15.43"]),
            direction: Direction::Upper,
            threshold: at_x("14.36"),
            location: "cor. 3.9",
            axiom: None,
        },
        BoundSpec {
            name: "cor39_c",
            shape: pan(&["1", "1", "3.83"]),
            direction: Direction::Upper,
            threshold: at_x("9.25"),
            location: "cor. 3.9",
            axiom: None,
        },
        BoundSpec {
            name: "cor39_d",
            shape: pan(&["1", "1.17"]),
            direction: Direction::Upper,
            threshold: at_x("5.43"),
            location: "cor. 3.9",
            axiom: None,
        },
    ];

    // the fourteen weakened lower quotients: (a, b, c, d, x0)
    let rows: [(&str, &str, &str, &str, &str); 14] = [
        ("2.65", "13.35", "70.3", "276", "1245750347"),
        ("2.65", "13.35", "70.3", "69", "909050897"),
        ("2.65", "13.35", "45", "0", "768338551"),
        ("2.65", "13.35", "34", "0", "547068751"),
        ("2.65", "13.35", "5", "0", "374123969"),
        ("2.65", "13.1", "0", "0", "235194097"),
        ("2.65", "11.6", "0", "0", "166219973"),
        ("2.65", "8.6", "0", "0", "93811339"),
        ("2.65", "7.7", "0", "0", "65951927"),
        ("2.65", "4.6", "0", "0", "38168363"),
        ("2.62", "0", "0", "0", "16590551"),
        ("2.1", "0", "0", "0", "6690557"),
        ("1", "0", "0", "0", "1772201"),
        ("0", "0", "0", "0", "468049"),
    ];
    static NAMES: [&str; 14] = [
        "cor311_01", "cor311_02", "cor311_03", "cor311_04", "cor311_05", "cor311_06",
        "cor311_07", "cor311_08", "cor311_09", "cor311_10", "cor311_11", "cor311_12",
        "cor311_13", "cor311_14",
    ];
    for (i, (a, b, c, d, x0)) in rows.iter().enumerate() {
        // trailing zero coefficients are dropped from the shape
        let mut denom = vec!["1".to_string(), "1".to_string(), a.to_string(), b.to_string(), c.to_string(), d.to_string()];
        while denom.len() > 2 && denom.last().is_some_and(|s| s == "0") {
            denom.pop();
        }
        let denom_refs: Vec<&str> = denom.iter().map(String::as_str).collect();
        v.push(BoundSpec {
            name: NAMES[i],
            shape: pan(&denom_refs),
            direction: Direction::Lower,
            threshold: at_x(x0),
            location: "cor. 3.11",
            axiom: None,
        });
    }
    v
});

/// All catalogued bounds.
pub fn catalogue() -> &'static [BoundSpec] {
    &CATALOGUE
}

/// Looks up a bound by name.
pub fn bound(name: &str) -> crate::Result<&'static BoundSpec> {
    CATALOGUE
        .iter()
        .find(|b| b.name == name)
        .ok_or_else(|| crate::Error::UnknownBound(name.to_string()))
}

pub fn bound_names() -> Vec<&'static str> {
    CATALOGUE.iter().map(|b| b.name).collect()
}

/// The catalogue as JSON for export.
pub fn catalogue_json() -> serde_json::Value {
    let entries: Vec<_> = CATALOGUE
        .iter()
        .map(|b| {
            let (shape, coefficients) = match &b.shape {
                Shape::Sum { coeffs } => (
                    "sum",
                    coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                ),
                Shape::Panaitopol { denom } => (
                    "panaitopol",
                    denom.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                ),
                Shape::Li => ("li", Vec::new()),
                Shape::J(_) => ("j", Vec::new()),
            };
            json!({
                "name": b.name,
                "shape": shape,
                "coefficients": coefficients,
                "direction": b.direction,
                "threshold": b.threshold.describe(),
                "paper_location": b.location,
                "axiom": b.axiom,
            })
        })
        .collect();
    json!(entries)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalogue_is_complete() {
        let names = bound_names();
        for required in [
            "t101", "t102", "t103", "t104", "dusart308", "dusart309", "U_thm12", "li",
            "cor39_a", "cor39_b", "cor39_c", "cor39_d",
        ] {
            assert!(names.contains(&required), "missing {required}");
        }
        let cor311 = names.iter().filter(|n| n.starts_with("cor311_")).count();
        assert_eq!(cor311, 14);
        assert_eq!(names.len(), 26);
    }

    #[test]
    fn directions_and_thresholds_are_set() {
        for b in catalogue() {
            match b.direction {
                Direction::Upper | Direction::Lower => {}
            }
            assert!(b.threshold.approx_x() >= 1.0, "{}", b.name);
        }
        assert_eq!(bound("t101").unwrap().direction, Direction::Upper);
        assert_eq!(bound("t104").unwrap().direction, Direction::Lower);
        assert_eq!(bound("cor311_10").unwrap().threshold, Threshold::AtX(dec("38168363")));
    }

    #[test]
    fn unknown_bound_is_an_error() {
        assert!(matches!(bound("t999"), Err(crate::Error::UnknownBound(_))));
    }

    #[test]
    fn json_export_has_the_interface_fields() {
        let v = catalogue_json();
        for e in v.as_array().unwrap() {
            for key in ["name", "shape", "coefficients", "direction", "threshold", "paper_location"] {
                assert!(e.get(key).is_some(), "missing {key}");
            }
        }
    }

    #[test]
    fn weakened_bounds_exceed_pi_at_desk_scale() {
        // spot check: the single-term weakened upper quotient at 10⁶
        let b = bound("cor39_d").unwrap();
        let v = b.eval(1e6).unwrap();
        assert!(v > 78_498.0, "cor39_d(1e6) = {v}");
    }
}
