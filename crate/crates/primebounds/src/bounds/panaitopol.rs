//! The integer coefficients of the Panaitopol expansion and the
//! observed correction term α_n(x).

use num_bigint::BigInt;
use num_traits::One;

use crate::exactmath::{rat_to_f64, Rat};
use crate::primes::Primes;
use crate::{Error, Result};

/// The coefficients k₁..k_n of
/// `π(x) = x / (log x − 1 − k₁/log x − … − k_n(1+α_n(x))/logⁿ x)`,
/// generated by the recurrence
/// `k_n + 1!·k_{n−1} + 2!·k_{n−2} + … + (n−1)!·k₁ = n·n!`.
pub fn panaitopol_coefficients(n: usize) -> Vec<BigInt> {
    let mut ks: Vec<BigInt> = Vec::with_capacity(n);
    let mut factorials: Vec<BigInt> = vec![BigInt::one()]; // 0! = 1
    for m in 1..=n {
        factorials.push(&factorials[m - 1] * BigInt::from(m));
        let mut acc = BigInt::from(m) * &factorials[m];
        for j in 1..m {
            acc -= &factorials[j] * &ks[m - 1 - j];
        }
        ks.push(acc);
    }
    ks
}

/// The observed α_n(x), by inverting the expansion at an exact π(x):
/// `α_n(x) = (logⁿx / k_n)·(log x − 1 − Σ_{i<n} kᵢ/logⁱx − x/π(x)) − 1`.
pub fn observed_alpha(n: usize, x: u64, primes: &Primes) -> Result<f64> {
    if !(1..=6).contains(&n) {
        return Err(Error::Domain(format!("alpha is tracked for 1 ≤ n ≤ 6, got {n}")));
    }
    let pi = primes.pi(x)?;
    if pi == 0 {
        return Err(Error::Domain(format!("π({x}) = 0; no expansion to invert")));
    }
    let ks = panaitopol_coefficients(n);
    let t = (x as f64).ln();
    let mut inner = t - 1.0 - x as f64 / pi as f64;
    for (idx, k) in ks.iter().take(n - 1).enumerate() {
        inner -= rat_to_f64(&Rat::from(k.clone())) / t.powi(idx as i32 + 1);
    }
    let kn = rat_to_f64(&Rat::from(ks[n - 1].clone()));
    Ok(t.powi(n as i32) / kn * inner - 1.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_coefficients() {
        assert_eq!(panaitopol_coefficients(1), vec![BigInt::from(1)]);
        assert_eq!(
            panaitopol_coefficients(2),
            vec![BigInt::from(1), BigInt::from(3)]
        );
        let k6 = panaitopol_coefficients(6);
        assert_eq!(
            k6,
            [1, 3, 13, 71, 461, 3447].map(BigInt::from).to_vec()
        );
    }

    #[test]
    fn recurrence_identity_holds() {
        // k_n + Σ_{j≥1} j!·k_{n−j} = n·n! for every n
        let ks = panaitopol_coefficients(10);
        let mut fact = vec![BigInt::one()];
        for m in 1..=10usize {
            fact.push(&fact[m - 1] * BigInt::from(m));
        }
        for m in 1..=10usize {
            let mut acc = ks[m - 1].clone();
            for j in 1..m {
                acc += &fact[j] * &ks[m - 1 - j];
            }
            assert_eq!(acc, BigInt::from(m) * &fact[m], "n = {m}");
        }
    }

    #[test]
    fn alpha_is_zero_on_an_exactly_inverted_count() {
        // If π(x) equals the truncated form with α = 0, the inversion
        // must return (numerically) zero. Solve for that synthetic π.
        let primes = Primes::new(1 << 20);
        let x = 1_000_000u64;
        let pi = primes.pi(x).unwrap();
        let t = (x as f64).ln();
        // n = 1: α₁ = t(t − 1 − x/π) − 1 = 0 ⇔ x/π = t − 1 − 1/t
        let synthetic_denom = t - 1.0 - 1.0 / t;
        let alpha_of = |x_over_pi: f64| t * (t - 1.0 - x_over_pi) - 1.0;
        assert!(alpha_of(synthetic_denom).abs() < 1e-12);
        // and the library value at the true π(10⁶) is the frozen one
        let a1 = observed_alpha(1, x, &primes).unwrap();
        assert!((a1 - 0.054572317825226636).abs() < 1e-9, "alpha1 = {a1}");
        let _ = pi;
    }

    #[test]
    fn alpha_reference_values() {
        let primes = Primes::new(100_000_000);
        let a5 = observed_alpha(1, 100_000, &primes).unwrap();
        assert!((a5 - 0.008198429493595696).abs() < 1e-9, "alpha1(1e5) = {a5}");
        let a8 = observed_alpha(1, 100_000_000, &primes).unwrap();
        assert!((a8 - 0.17807648031960121).abs() < 1e-9, "alpha1(1e8) = {a8}");
        // The correction is NOT monotone at desk scale: it grows from
        // 10⁵ to 10⁸ before its slow decay towards zero sets in.
        assert!(a8.abs() > a5.abs());
        assert!(observed_alpha(7, 100, &primes).is_err());
        assert!(observed_alpha(1, 1, &primes).is_err());
    }
}
