//! Compensated summation with a rigorous running error bound.

/// Kahan accumulator. `bound()` returns a provable bound on
/// `|value() − Σ xᵢ|`: the classic compensated-summation estimate
/// `(2ε + nε²)·Σ|xᵢ|` with ε = 2⁻⁵³, inflated by 1% to absorb the
/// rounding of the bound computation itself.
#[derive(Debug, Clone, Copy, Default)]
pub struct KahanSum {
    sum: f64,
    compensation: f64,
    abs_sum: f64,
    terms: u64,
}

impl KahanSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, x: f64) {
        let y = x - self.compensation;
        let t = self.sum + y;
        self.compensation = (t - self.sum) - y;
        self.sum = t;
        self.abs_sum += x.abs();
        self.terms += 1;
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum
    }

    pub fn terms(&self) -> u64 {
        self.terms
    }

    pub fn abs_sum(&self) -> f64 {
        self.abs_sum
    }

    /// Rigorous bound on the accumulated rounding error.
    pub fn bound(&self) -> f64 {
        const EPS: f64 = 1.1102230246251565e-16; // 2^-53
        let n = self.terms as f64;
        (2.0 * EPS + n * EPS * EPS) * self.abs_sum * 1.01
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compensation_beats_naive_summation() {
        let mut k = KahanSum::new();
        let mut naive = 0.0f64;
        // One big value plus many tiny ones that naive addition drops.
        k.add(1e16);
        naive += 1e16;
        for _ in 0..1000 {
            k.add(1.0);
            naive += 1.0;
        }
        assert_eq!(k.value(), 1e16 + 1000.0);
        assert!(naive < k.value());
        assert!(k.bound() >= (k.value() - (1e16 + 1000.0)).abs());
    }

    #[test]
    fn bound_scales_with_magnitude() {
        let mut k = KahanSum::new();
        for i in 1..=10_000u64 {
            k.add((i as f64).ln());
        }
        assert!(k.bound() < 1e-10);
        assert!(k.bound() > 0.0);
    }
}
