//! Exact symbolic derivatives of bound shapes, as rational functions in
//! `t = log x`: `d/dx bound(x) = R(log x)`.

use num_bigint::BigInt;
use num_traits::One;

use super::{JSpec, Shape};
use crate::exactmath::{Poly, Rat, RationalFn};

/// `R(t)` with `d/dx bound(x) = R(log x)`.
///
/// * sum form `x·Σ cᵢ/tⁱ`: numerator `Σ cᵢ(t^(n+1−i) − i·t^(n−i))`
///   over `t^(n+1)`;
/// * Panaitopol form `x/D(t)`: `(D − D′)/D²`;
/// * li: `1/t`;
/// * J: `1/t + η/t^(k+1) − kη/t^(k+2)`.
pub fn bound_derivative_in_t(shape: &Shape) -> RationalFn {
    match shape {
        Shape::Sum { coeffs } => sum_derivative(coeffs),
        Shape::Panaitopol { denom } => panaitopol_derivative(denom),
        Shape::Li => RationalFn::new(Poly::one(), Poly::monomial(Rat::one(), 1)),
        Shape::J(spec) => j_derivative(spec),
    }
}

fn sum_derivative(coeffs: &[Rat]) -> RationalFn {
    let n = coeffs.len();
    let mut num = Poly::zero();
    for (idx, c) in coeffs.iter().enumerate() {
        let i = idx + 1; // term c·x/tⁱ
        let a = Poly::monomial(c.clone(), n + 1 - i);
        let b = Poly::monomial(c * Rat::from(BigInt::from(i)), n - i);
        num = &(&num + &a) - &b;
    }
    RationalFn::new(num, Poly::monomial(Rat::one(), n + 1))
}

/// Numerator polynomial of the Panaitopol denominator: for
/// `D(t) = t − d₀ − d₁/t − … − d_m/t^m` this is `D·t^m`, of degree
/// `m + 1`.
pub fn panaitopol_denominator_poly(denom: &[Rat]) -> Poly {
    let m = denom.len() - 1;
    let mut num = Poly::monomial(Rat::one(), m + 1);
    for (i, d) in denom.iter().enumerate() {
        num = &num - &Poly::monomial(d.clone(), m - i);
    }
    num
}

fn panaitopol_derivative(denom: &[Rat]) -> RationalFn {
    // R = t^(m−1) · ((t+m)·N − t·N′) / N² with N = D·t^m; the m = 0
    // case puts the stray power of t in the denominator instead.
    let m = denom.len() - 1;
    let nd = panaitopol_denominator_poly(denom);
    let core = &(&Poly::new(vec![Rat::from(BigInt::from(m)), Rat::one()]) * &nd)
        - &(&Poly::monomial(Rat::one(), 1) * &nd.derivative());
    let den = &nd * &nd;
    if m == 0 {
        RationalFn::new(core, &den * &Poly::monomial(Rat::one(), 1))
    } else {
        RationalFn::new(&Poly::monomial(Rat::one(), m - 1) * &core, den)
    }
}

fn j_derivative(spec: &JSpec) -> RationalFn {
    let k = spec.k as usize;
    let mut num = Poly::monomial(Rat::one(), k + 1);
    num = &num + &Poly::monomial(spec.eta.clone(), 1);
    num = &num - &Poly::constant(&spec.eta * Rat::from(BigInt::from(k)));
    RationalFn::new(num, Poly::monomial(Rat::one(), k + 2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{parse_decimal, rat_int};

    #[test]
    fn li_derivative_is_one_over_t() {
        let d = bound_derivative_in_t(&Shape::Li);
        assert_eq!(d.eval(&rat_int(4)).unwrap(), Rat::new(1.into(), 4.into()));
    }

    #[test]
    fn sum_derivative_of_x_over_log() {
        // d/dx (x/t) = (t − 1)/t²
        let d = sum_derivative(&[rat_int(1)]);
        let expected = RationalFn::new(
            Poly::new(vec![rat_int(-1), rat_int(1)]),
            Poly::monomial(Rat::one(), 2),
        );
        assert_eq!(d, expected);
    }

    #[test]
    fn panaitopol_derivative_of_simplest_form() {
        // bound = x/(t − 1): derivative = (t − 2)/(t − 1)²
        let d = panaitopol_derivative(&[rat_int(1)]);
        let expected = RationalFn::new(
            Poly::new(vec![rat_int(-2), rat_int(1)]),
            {
                let den = Poly::new(vec![rat_int(-1), rat_int(1)]);
                &den * &den
            },
        );
        assert_eq!(d, expected);
    }

    #[test]
    fn finite_difference_agreement() {
        let coeffs: Vec<Rat> = ["1", "1", "2", "6.35"]
            .iter()
            .map(|s| parse_decimal(s).unwrap())
            .collect();
        let shape = Shape::Sum { coeffs: coeffs.clone() };
        let d = bound_derivative_in_t(&shape);
        let f = |x: f64| {
            let t = x.ln();
            coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| crate::exactmath::rat_to_f64(c) * x / t.powi(i as i32 + 1))
                .sum::<f64>()
        };
        for &x in &[100.0f64, 1e4, 1e8] {
            let h = x * 1e-6;
            let fd = (f(x + h) - f(x - h)) / (2.0 * h);
            let sym = d.eval_f64(x.ln());
            assert!((fd - sym).abs() <= 1e-6 * sym.abs().max(1e-12), "x = {x}");
        }
    }
}
