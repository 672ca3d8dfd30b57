//! Compensated (Kahan–Neumaier) summation with cancellation tracking.

/// Neumaier-compensated accumulator. `magnitude()` tracks Σ|term| so callers
/// can compute a cancellation ratio Σ|term| / |Σ term|.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: f64,
    comp: f64,
    abs_sum: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, term: f64) {
        let t = self.sum + term;
        if self.sum.abs() >= term.abs() {
            self.comp += (self.sum - t) + term;
        } else {
            self.comp += (term - t) + self.sum;
        }
        self.sum = t;
        self.abs_sum += term.abs();
    }

    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }

    /// Σ|term| over everything added so far.
    pub fn magnitude(&self) -> f64 {
        self.abs_sum
    }

    /// Σ|term| / |Σ term|; f64::INFINITY when the sum vanished entirely.
    pub fn cancellation_ratio(&self) -> f64 {
        let v = self.value().abs();
        if v == 0.0 {
            if self.abs_sum == 0.0 {
                1.0
            } else {
                f64::INFINITY
            }
        } else {
            self.abs_sum / v
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recovers_lost_low_bits() {
        let mut s = CompensatedSum::new();
        s.add(1.0);
        s.add(1e-16);
        s.add(1e-16);
        s.add(-1.0);
        assert_eq!(s.value(), 2e-16);
    }

    #[test]
    fn cancellation_ratio_grows_with_cancellation() {
        let mut s = CompensatedSum::new();
        s.add(1e8);
        s.add(-1e8);
        s.add(1.0);
        assert!(s.cancellation_ratio() > 1e8);
    }

    #[test]
    fn harmonic_matches_naive_closely() {
        let mut s = CompensatedSum::new();
        for i in 1..=100_000u64 {
            s.add(1.0 / i as f64);
        }
        assert!((s.value() - 12.090_146_129_863_427).abs() < 1e-11);
        assert!((s.cancellation_ratio() - 1.0).abs() < 1e-12);
    }
}
