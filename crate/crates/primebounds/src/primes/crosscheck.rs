//! Independent π(x) cross-check via the Meissel formula.
//!
//! This path shares no code with the segmented sieve: it combines a
//! plain boolean sieve up to x^(2/3) with the combinatorial Legendre
//! counting function φ(x, a), so agreement between the two is a real
//! two-route check and not a tautology.

use std::collections::HashMap;

/// π(x) by Meissel's method. Intended for cross-checking at x ≤ ~10⁹;
/// the work is dominated by a simple sieve to x^(2/3).
pub fn pi_meissel(x: u64) -> u64 {
    if x < 2 {
        return 0;
    }
    if x < 10_000 {
        return small_sieve_flags(x).iter().filter(|&&p| p).count() as u64;
    }

    let cbrt = integer_cbrt(x);
    let sqrt = integer_sqrt(x);
    // π lookups are needed up to x / p for primes p > cbrt.
    let table_limit = x / (cbrt + 1) + 2;
    let flags = small_sieve_flags(table_limit.max(sqrt + 1));
    let mut primes: Vec<u64> = Vec::new();
    let mut pi_table: Vec<u32> = Vec::with_capacity(flags.len());
    let mut running = 0u32;
    for (n, &is_p) in flags.iter().enumerate() {
        if is_p {
            running += 1;
            primes.push(n as u64);
        }
        pi_table.push(running);
    }
    let pi_of = |v: u64| -> u64 { pi_table[v as usize] as u64 };

    let a = pi_of(cbrt);
    let b = pi_of(sqrt);

    let mut phi = Phi::new(&primes);
    let mut result = phi.eval(x, a) + a - 1;
    for i in (a + 1)..=b {
        let p = primes[(i - 1) as usize];
        result -= pi_of(x / p) - (i - 1);
    }
    result
}

fn small_sieve_flags(n: u64) -> Vec<bool> {
    let n = n as usize;
    let mut is_prime = vec![true; n + 1];
    is_prime[0] = false;
    if n >= 1 {
        is_prime[1] = false;
    }
    let mut p = 2usize;
    while p * p <= n {
        if is_prime[p] {
            let mut m = p * p;
            while m <= n {
                is_prime[m] = false;
                m += p;
            }
        }
        p += 1;
    }
    is_prime
}

fn integer_sqrt(n: u64) -> u64 {
    let mut x = (n as f64).sqrt() as u64;
    while x.checked_mul(x).is_none_or(|s| s > n) {
        x -= 1;
    }
    while (x + 1).checked_mul(x + 1).is_some_and(|s| s <= n) {
        x += 1;
    }
    x
}

fn integer_cbrt(n: u64) -> u64 {
    let mut x = (n as f64).cbrt() as u64;
    while x > 0 && x * x * x > n {
        x -= 1;
    }
    while (x + 1) * (x + 1) * (x + 1) <= n {
        x += 1;
    }
    x
}

/// Legendre's φ(x, a): integers in [1, x] with no prime factor among
/// the first `a` primes. Recursion with memoisation, bottoming out on
/// a mod-210 wheel for a = 4.
struct Phi<'a> {
    primes: &'a [u64],
    wheel_counts: [u64; 211],
    memo: HashMap<(u64, u64), u64>,
}

const WHEEL_MOD: u64 = 210; // 2·3·5·7
const WHEEL_TOTIENT: u64 = 48;

impl<'a> Phi<'a> {
    fn new(primes: &'a [u64]) -> Self {
        let mut wheel_counts = [0u64; 211];
        let mut c = 0;
        for r in 1..=210u64 {
            if r % 2 != 0 && r % 3 != 0 && r % 5 != 0 && r % 7 != 0 {
                c += 1;
            }
            wheel_counts[r as usize] = c;
        }
        Phi { primes, wheel_counts, memo: HashMap::new() }
    }

    fn eval(&mut self, x: u64, a: u64) -> u64 {
        if x == 0 {
            return 0;
        }
        if a == 0 {
            return x;
        }
        if a <= 4 {
            // Walk down to the wheel.
            if a == 4 {
                return (x / WHEEL_MOD) * WHEEL_TOTIENT
                    + self.wheel_counts[(x % WHEEL_MOD) as usize];
            }
            let p = self.primes[(a - 1) as usize];
            return self.eval(x, a - 1) - self.eval(x / p, a - 1);
        }
        if let Some(&v) = self.memo.get(&(x, a)) {
            return v;
        }
        let p = self.primes[(a - 1) as usize];
        let v = if p >= x {
            // only 1 survives
            1
        } else {
            self.eval(x, a - 1) - self.eval(x / p, a - 1)
        };
        self.memo.insert((x, a), v);
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matches_known_pi_values() {
        assert_eq!(pi_meissel(10), 4);
        assert_eq!(pi_meissel(100), 25);
        assert_eq!(pi_meissel(1_000), 168);
        assert_eq!(pi_meissel(10_000), 1_229);
        assert_eq!(pi_meissel(100_000), 9_592);
        assert_eq!(pi_meissel(1_000_000), 78_498);
        assert_eq!(pi_meissel(10_000_000), 664_579);
    }

    #[test]
    fn agrees_with_the_segmented_sieve_on_awkward_inputs() {
        let primes = super::super::Primes::new(3_000_000);
        for x in [10_007u64, 65_537, 999_983, 2_345_678] {
            assert_eq!(pi_meissel(x), primes.pi(x).unwrap(), "x = {x}");
        }
    }
}
