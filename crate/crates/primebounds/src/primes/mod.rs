//! Exact π(x), θ(x) and pₙ at desk scale via a segmented sieve.
//!
//! Segments are independent work units sieved in parallel; the π/θ
//! reduction runs in a fixed order over a fixed absolute segment grid,
//! so results (including θ rounding) are reproducible bit for bit for
//! a given limit and segment size. θ(x) is accumulated in doubles with
//! compensated summation and a tracked rigorous error bound; every
//! consumer takes the adverse end of the interval.

mod checkpoint;
mod crosscheck;
mod kahan;

pub use checkpoint::{
    build_checkpoints, load_checkpoints, read_block_cache, write_block_cache, Checkpoint,
};
pub use crosscheck::pi_meissel;
pub use kahan::KahanSum;

use rayon::prelude::*;

use crate::{Error, Result};

/// Default global sieve limit: enough for every desk-scale campaign.
pub const DEFAULT_LIMIT: u64 = 1_400_000_000;

/// Extended limit for the opt-in large campaigns.
pub const EXTENDED_LIMIT: u64 = 8_000_000_000;

/// Odd-integer bits per sieve segment (128 KiB of bitmap).
pub const SEGMENT_ODDS: usize = 1 << 20;

/// θ(x) with a rigorous bound on the accumulated rounding: the true
/// value lies in `[value − abs_error, value + abs_error]`.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct ThetaValue {
    pub value: f64,
    pub abs_error: f64,
}

impl ThetaValue {
    pub const ZERO: ThetaValue = ThetaValue { value: 0.0, abs_error: 0.0 };

    pub fn lower(&self) -> f64 {
        self.value - self.abs_error
    }

    pub fn upper(&self) -> f64 {
        self.value + self.abs_error
    }

    /// Interval sum: one rounded add plus both error budgets.
    fn plus(&self, rhs: &ThetaValue) -> ThetaValue {
        let value = self.value + rhs.value;
        let ulp = value.abs() * f64::EPSILON;
        ThetaValue {
            value,
            abs_error: (self.abs_error + rhs.abs_error + ulp) * 1.01,
        }
    }
}

/// Primality bitmap for the odd integers of `[lo, hi]`.
pub struct PrimeBlock {
    pub lo: u64,
    pub hi: u64,
    first_odd: u64,
    n_odds: usize,
    words: Vec<u64>,
}

impl PrimeBlock {
    pub fn contains(&self, n: u64) -> bool {
        self.lo <= n && n <= self.hi
    }

    /// Primality of `n`, which must lie in the block.
    pub fn is_prime(&self, n: u64) -> bool {
        debug_assert!(self.contains(n));
        if n == 2 {
            return true;
        }
        if n < 3 || n % 2 == 0 {
            return false;
        }
        let j = ((n - self.first_odd) / 2) as usize;
        self.words[j >> 6] >> (j & 63) & 1 == 1
    }

    /// Primes of the block in increasing order.
    pub fn iter_primes(&self) -> impl Iterator<Item = u64> + '_ {
        let two = (self.lo <= 2 && 2 <= self.hi).then_some(2u64);
        let odds = (0..self.n_odds)
            .filter(|&j| self.words[j >> 6] >> (j & 63) & 1 == 1)
            .map(move |j| self.first_odd + 2 * j as u64);
        two.into_iter().chain(odds)
    }

    pub fn count(&self) -> u64 {
        let mut c: u64 = self.words.iter().map(|w| w.count_ones() as u64).sum();
        if self.lo <= 2 && 2 <= self.hi {
            c += 1;
        }
        c
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }

    pub(crate) fn from_raw(lo: u64, hi: u64, words: Vec<u64>) -> Result<Self> {
        let (first_odd, n_odds) = odd_span(lo, hi);
        if words.len() != n_odds.div_ceil(64) {
            return Err(Error::CorruptFile {
                path: String::new(),
                detail: "bitmap length does not match the block span".into(),
            });
        }
        Ok(PrimeBlock { lo, hi, first_odd, n_odds, words })
    }
}

fn odd_span(lo: u64, hi: u64) -> (u64, usize) {
    let first_odd = if lo <= 1 { 1 } else { lo | 1 };
    let n_odds = if hi < first_odd {
        0
    } else {
        ((hi - first_odd) / 2 + 1) as usize
    };
    (first_odd, n_odds)
}

pub(crate) fn isqrt(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    let mut x = (n as f64).sqrt() as u64;
    while x > 0 && x.checked_mul(x).is_none_or(|sq| sq > n) {
        x -= 1;
    }
    while (x + 1).checked_mul(x + 1).is_some_and(|sq| sq <= n) {
        x += 1;
    }
    x
}

/// Simple in-memory sieve, used for the base primes.
pub(crate) fn simple_sieve(n: u64) -> Vec<u32> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for p in 2..=n {
        if !composite[p] {
            out.push(p as u32);
            let mut m = p * p;
            while m <= n {
                composite[m] = true;
                m += p;
            }
        }
    }
    out
}

/// Per-range statistics produced by the ordered segment reduction.
#[derive(Debug, Clone, Copy)]
pub struct RangeStats {
    pub count: u64,
    pub theta: ThetaValue,
}

/// The segmented sieve with its base primes and a hard global limit.
pub struct Sieve {
    limit: u64,
    segment_odds: usize,
    base: Vec<u32>,
}

impl Sieve {
    pub fn new(limit: u64) -> Self {
        Self::with_segment(limit, SEGMENT_ODDS)
    }

    pub fn with_segment(limit: u64, segment_odds: usize) -> Self {
        Sieve {
            limit,
            segment_odds,
            base: simple_sieve(isqrt(limit)),
        }
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    fn check_limit(&self, x: u64) -> Result<()> {
        if x > self.limit {
            return Err(Error::LimitExceeded { requested: x, limit: self.limit });
        }
        Ok(())
    }

    /// Sieves the primality bitmap of `[lo, hi]`.
    pub fn sieve_segment(&self, lo: u64, hi: u64) -> Result<PrimeBlock> {
        if lo > hi {
            return Err(Error::Domain(format!("empty segment [{lo}, {hi}]")));
        }
        self.check_limit(hi)?;
        let (first_odd, n_odds) = odd_span(lo, hi);
        let mut words = vec![!0u64; n_odds.div_ceil(64)];
        // Clear the slack bits past the end of the block.
        if n_odds % 64 != 0 {
            if let Some(last) = words.last_mut() {
                *last &= (1u64 << (n_odds % 64)) - 1;
            }
        }
        if n_odds > 0 && first_odd == 1 {
            words[0] &= !1; // 1 is not prime
        }
        for &p in &self.base {
            let p = p as u64;
            if p == 2 {
                continue;
            }
            match p.checked_mul(p) {
                Some(sq) if sq > hi => break,
                None => break,
                _ => {}
            }
            let mut start = lo.div_ceil(p) * p;
            if start < p * p {
                start = p * p;
            }
            if start % 2 == 0 {
                start += p;
            }
            if start > hi {
                continue;
            }
            let mut j = ((start - first_odd) / 2) as usize;
            while j < n_odds {
                words[j >> 6] &= !(1u64 << (j & 63));
                j += p as usize;
            }
        }
        Ok(PrimeBlock { lo, hi, first_odd, n_odds, words })
    }

    /// The absolute segment grid covering `[lo, hi]`: segments never
    /// straddle grid lines, so a range decomposes identically no matter
    /// where the caller starts.
    fn grid(&self, lo: u64, hi: u64) -> Vec<(u64, u64)> {
        let span = 2 * self.segment_odds as u64;
        let mut out = Vec::new();
        let mut cur = lo;
        while cur <= hi {
            let cell_end = (cur / span + 1) * span - 1;
            let end = cell_end.min(hi);
            out.push((cur, end));
            if end == u64::MAX {
                break;
            }
            cur = end + 1;
        }
        out
    }

    /// Count and θ-sum over `[lo, hi]`: segments are sieved in
    /// parallel, then reduced in grid order.
    pub fn range_stats(&self, lo: u64, hi: u64) -> Result<RangeStats> {
        if lo > hi {
            return Ok(RangeStats { count: 0, theta: ThetaValue::ZERO });
        }
        self.check_limit(hi)?;
        let cells = self.grid(lo, hi);
        let partials: Vec<Result<(u64, f64, f64)>> = cells
            .par_iter()
            .map(|&(a, b)| {
                let block = self.sieve_segment(a, b)?;
                let mut k = KahanSum::new();
                for p in block.iter_primes() {
                    k.add((p as f64).ln());
                }
                // 2 ulp per ln call on top of the summation bound.
                let term_err = k.abs_sum() * (2.0 * f64::EPSILON);
                Ok((block.count(), k.value(), k.bound() + term_err))
            })
            .collect();
        let mut count = 0u64;
        let mut fold = KahanSum::new();
        let mut err = 0.0f64;
        for partial in partials {
            let (c, sum, e) = partial?;
            count += c;
            fold.add(sum);
            err += e;
        }
        let theta = ThetaValue {
            value: fold.value(),
            abs_error: (err + fold.bound()) * 1.01,
        };
        Ok(RangeStats { count, theta })
    }

    /// Visits every prime of `[lo, hi]` in order together with its
    /// index `i = π(p)`; the closure returns `false` to stop early.
    pub fn for_primes_indexed<F>(&self, lo: u64, hi: u64, index_before: u64, mut f: F) -> Result<()>
    where
        F: FnMut(u64, u64) -> bool,
    {
        self.check_limit(hi)?;
        let mut i = index_before;
        for (a, b) in self.grid(lo, hi) {
            let block = self.sieve_segment(a, b)?;
            for p in block.iter_primes() {
                i += 1;
                if !f(i, p) {
                    return Ok(());
                }
            }
        }
        Ok(())
    }
}

/// π/θ/pₙ engine: a sieve plus optional checkpoints to resume from.
pub struct Primes {
    sieve: Sieve,
    checkpoints: Vec<Checkpoint>,
}

impl Primes {
    pub fn new(limit: u64) -> Self {
        Primes { sieve: Sieve::new(limit), checkpoints: Vec::new() }
    }

    pub fn with_checkpoints(limit: u64, mut checkpoints: Vec<Checkpoint>) -> Self {
        checkpoints.retain(|c| c.x <= limit);
        Primes { sieve: Sieve::new(limit), checkpoints }
    }

    pub fn sieve(&self) -> &Sieve {
        &self.sieve
    }

    pub fn limit(&self) -> u64 {
        self.sieve.limit()
    }

    fn nearest_checkpoint(&self, x: u64) -> Option<&Checkpoint> {
        self.checkpoints.iter().rev().find(|c| c.x <= x)
    }

    /// Exact π(x).
    pub fn pi(&self, x: u64) -> Result<u64> {
        Ok(self.pi_theta(x)?.0)
    }

    /// Exact π(x) together with the θ(x) enclosure.
    pub fn pi_theta(&self, x: u64) -> Result<(u64, ThetaValue)> {
        match self.nearest_checkpoint(x) {
            Some(cp) => {
                let tail = self.sieve.range_stats(cp.x + 1, x)?;
                Ok((cp.pi + tail.count, cp.theta.plus(&tail.theta)))
            }
            None => {
                let stats = self.sieve.range_stats(0, x)?;
                Ok((stats.count, stats.theta))
            }
        }
    }

    /// θ(x) enclosure.
    pub fn theta(&self, x: u64) -> Result<ThetaValue> {
        Ok(self.pi_theta(x)?.1)
    }

    /// The n-th prime, `p₁ = 2`.
    pub fn nth_prime(&self, n: u64) -> Result<u64> {
        if n == 0 {
            return Err(Error::Domain("prime indices start at 1".into()));
        }
        let (mut from, mut index) = (0u64, 0u64);
        if let Some(cp) = self.checkpoints.iter().rev().find(|c| c.pi < n) {
            from = cp.x + 1;
            index = cp.pi;
        }
        let mut found = None;
        self.sieve.for_primes_indexed(from, self.sieve.limit(), index, |i, p| {
            if i == n {
                found = Some(p);
                false
            } else {
                true
            }
        })?;
        found.ok_or(Error::LimitExceeded {
            requested: n,
            limit: self.sieve.limit(),
        })
    }

    /// Streams primes of `[lo, hi]` with their indices, resuming the
    /// index from the nearest checkpoint below.
    pub fn for_primes_indexed<F>(&self, lo: u64, hi: u64, f: F) -> Result<()>
    where
        F: FnMut(u64, u64) -> bool,
    {
        let before = if lo == 0 { 0 } else { self.pi(lo - 1)? };
        self.sieve.for_primes_indexed(lo, hi, before, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trial_division_primes(lo: u64, hi: u64) -> Vec<u64> {
        (lo.max(2)..=hi)
            .filter(|&n| {
                let mut d = 2;
                while d * d <= n {
                    if n % d == 0 {
                        return false;
                    }
                    d += 1;
                }
                true
            })
            .collect()
    }

    #[test]
    fn first_primes() {
        let sieve = Sieve::new(1 << 20);
        let block = sieve.sieve_segment(2, 10).unwrap();
        assert_eq!(block.iter_primes().collect::<Vec<_>>(), vec![2, 3, 5, 7]);
    }

    #[test]
    fn no_primes_below_two() {
        let sieve = Sieve::new(1 << 20);
        let block = sieve.sieve_segment(0, 1).unwrap();
        assert_eq!(block.iter_primes().count(), 0);
        assert_eq!(block.count(), 0);
    }

    #[test]
    fn segment_matches_trial_division() {
        let sieve = Sieve::new(1 << 20);
        let block = sieve.sieve_segment(10, 20).unwrap();
        assert_eq!(block.iter_primes().collect::<Vec<_>>(), vec![11, 13, 17, 19]);
        for (lo, hi) in [(0, 100), (95, 205), (9_900, 10_100), (65_000, 66_000)] {
            let block = sieve.sieve_segment(lo, hi).unwrap();
            assert_eq!(
                block.iter_primes().collect::<Vec<_>>(),
                trial_division_primes(lo, hi),
                "range [{lo}, {hi}]"
            );
        }
    }

    #[test]
    fn limit_is_enforced() {
        let sieve = Sieve::new(1000);
        assert!(matches!(
            sieve.sieve_segment(0, 1001),
            Err(Error::LimitExceeded { .. })
        ));
        let primes = Primes::new(1000);
        assert!(primes.pi(1001).is_err());
        assert!(primes.nth_prime(169).is_err()); // p_168 = 997 is the last reachable
        assert_eq!(primes.nth_prime(168).unwrap(), 997);
    }

    #[test]
    fn pi_small_values() {
        let primes = Primes::new(1 << 21);
        assert_eq!(primes.pi(0).unwrap(), 0);
        assert_eq!(primes.pi(1).unwrap(), 0);
        assert_eq!(primes.pi(2).unwrap(), 1);
        assert_eq!(primes.pi(10).unwrap(), 4);
        assert_eq!(primes.pi(100).unwrap(), 25);
        assert_eq!(primes.pi(1_000_000).unwrap(), 78_498);
    }

    #[test]
    fn theta_examples() {
        let primes = Primes::new(1 << 20);
        let t2 = primes.theta(2).unwrap();
        assert!((t2.value - std::f64::consts::LN_2).abs() <= t2.abs_error + 1e-15);
        let t10 = primes.theta(10).unwrap();
        let log210 = 210f64.ln(); // log 2 + log 3 + log 5 + log 7
        assert!(t10.lower() <= log210 && log210 <= t10.upper());
        assert!((t10.value - 5.347107530717469).abs() < 1e-12);
    }

    #[test]
    fn theta_error_policy() {
        let primes = Primes::new(2_000_000);
        let t = primes.theta(2_000_000).unwrap();
        assert!(t.abs_error <= t.value / (1u64 << 30) as f64);
        // frozen high-precision reference for θ(10⁶)
        let t6 = primes.theta(1_000_000).unwrap();
        let reference = 998484.1750256343;
        assert!(t6.lower() <= reference && reference <= t6.upper());
    }

    #[test]
    fn nth_prime_examples() {
        let primes = Primes::new(1 << 20);
        assert_eq!(primes.nth_prime(1).unwrap(), 2);
        assert_eq!(primes.nth_prime(25).unwrap(), 97);
        assert_eq!(primes.nth_prime(5950).unwrap(), 58_889);
        assert_eq!(primes.pi(58_837).unwrap(), 5949);
        assert!(primes.nth_prime(0).is_err());
    }

    #[test]
    fn indexed_stream_matches_pi() {
        let primes = Primes::new(1 << 20);
        let mut seen = Vec::new();
        primes
            .for_primes_indexed(50, 100, |i, p| {
                seen.push((i, p));
                true
            })
            .unwrap();
        // π(47) = 15, so the first prime above 50 is p₁₆ = 53.
        assert_eq!(seen.first().copied(), Some((16, 53)));
        assert_eq!(seen.last().copied(), Some((25, 97)));
    }

    #[test]
    fn range_stats_split_is_consistent() {
        let sieve = Sieve::with_segment(200_000, 1 << 12);
        let whole = sieve.range_stats(0, 150_000).unwrap();
        let a = sieve.range_stats(0, 99_999).unwrap();
        let b = sieve.range_stats(100_000, 150_000).unwrap();
        assert_eq!(whole.count, a.count + b.count);
        let merged = a.theta.plus(&b.theta);
        let slack = whole.theta.abs_error + merged.abs_error;
        assert!((whole.theta.value - merged.value).abs() <= slack);
    }

    #[test]
    fn theta_reduction_is_deterministic() {
        let sieve = Sieve::new(3_000_000);
        let a = sieve.range_stats(0, 2_500_000).unwrap();
        let b = sieve.range_stats(0, 2_500_000).unwrap();
        assert_eq!(a.theta.value.to_bits(), b.theta.value.to_bits());
        assert_eq!(a.theta.abs_error.to_bits(), b.theta.abs_error.to_bits());
    }
}
