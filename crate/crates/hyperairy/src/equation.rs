//! The generalized Airy-type equation y⁽ⁿ⁻¹⁾ + c·x·y = 0 and its case split.
//!
//! An [`AirySpec`] fixes the order parameter `n` (the ODE has order n−1) and
//! the real coefficient `c`. The n−1 independent solutions split into two
//! regimes: `n` odd or `n` even with c < 0, versus `n` even with c > 0. Index
//! ranges, angles and integral shapes all depend on that split, so everything
//! downstream starts from [`classify`].

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// ODE instance: order parameter n ≥ 2 (equation order n−1) and coefficient c ≠ 0.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AirySpec {
    n: u32,
    c: f64,
}

impl AirySpec {
    pub fn new(n: u32, c: f64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidSpec(format!("n must be >= 2, got {n}")));
        }
        if c == 0.0 || !c.is_finite() {
            return Err(Error::InvalidSpec(format!("c must be finite and nonzero, got {c}")));
        }
        Ok(Self { n, c })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    /// Damping strength of the wⁿ/n term: (−c)ⁿ⁻¹ in the odd/negative-c case,
    /// cⁿ⁻¹ in the even/positive-c case. Both equal |c|ⁿ⁻¹ on their domains.
    pub fn damping_strength(&self) -> f64 {
        self.c.abs().powi(self.n as i32 - 1)
    }

    /// Number of linearly independent solutions, n − 1.
    pub fn solution_count(&self) -> u32 {
        self.n - 1
    }
}

/// Regime of the Theorem's case split.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CaseVariant {
    /// n odd (any c ≠ 0), or n even with c < 0.
    OddOrEvenNegC,
    /// n even with c > 0.
    EvenPosC,
}

/// Case classification plus the derived n = 2 (Gaussian solution) flag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseClass {
    pub variant: CaseVariant,
    pub gaussian: bool,
}

/// Which of the two solution families a branch index selects.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Branch {
    Plus,
    Minus,
}

/// One of the n − 1 independent solutions: natural index k plus branch.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BranchIndex {
    pub k: u32,
    pub branch: Branch,
}

impl BranchIndex {
    pub fn plus(k: u32) -> Self {
        Self { k, branch: Branch::Plus }
    }

    pub fn minus(k: u32) -> Self {
        Self { k, branch: Branch::Minus }
    }
}

/// Which integral representation an angle belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum AngleForm {
    /// θ = 2kπ/n (odd/negative-c) or (2k+1)π/n (even/positive-c).
    Base,
    /// θ = (4k+1)π/(2n); ray rotated to the upper edge of the convergence wedge.
    RotatedUpper,
    /// θ = (4k−1)π/(2n); ray rotated to the lower edge.
    RotatedLower,
}

/// (cos θ, sin θ, θ) for a branch angle. θ is kept explicitly because the
/// half-line integral formulas consume θ itself, not cos θ.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AngleCoefficients {
    pub a: f64,
    pub b: f64,
    pub theta: f64,
}

/// Classify a valid spec into its regime.
pub fn classify(spec: &AirySpec) -> CaseClass {
    let variant = if spec.n % 2 == 0 && spec.c > 0.0 {
        CaseVariant::EvenPosC
    } else {
        CaseVariant::OddOrEvenNegC
    };
    CaseClass { variant, gaussian: spec.n == 2 }
}

/// The n − 1 admissible (k, branch) pairs, in a fixed deterministic order.
///
/// Odd/negative-c case: k ascending, Plus before Minus, with the identically
/// zero (k = n/2, Minus) pair omitted for even n. Even/positive-c case: Plus
/// for k = 1..n/2−1 then Minus for k = 0..n/2−1.
pub fn solution_indices(spec: &AirySpec) -> Vec<BranchIndex> {
    let n = spec.n;
    let mut out = Vec::with_capacity((n - 1) as usize);
    match classify(spec).variant {
        CaseVariant::OddOrEvenNegC => {
            for k in 1..=n / 2 {
                out.push(BranchIndex::plus(k));
                if !(n % 2 == 0 && k == n / 2) {
                    out.push(BranchIndex::minus(k));
                }
            }
        }
        CaseVariant::EvenPosC => {
            for k in 1..n / 2 {
                out.push(BranchIndex::plus(k));
            }
            for k in 0..n / 2 {
                out.push(BranchIndex::minus(k));
            }
        }
    }
    debug_assert_eq!(out.len(), (n - 1) as usize);
    out
}

/// Check admissibility of a (k, branch) pair for the spec's case.
pub fn check_index(spec: &AirySpec, idx: BranchIndex) -> Result<()> {
    let n = spec.n;
    let ok = match classify(spec).variant {
        CaseVariant::OddOrEvenNegC => match idx.branch {
            Branch::Plus => idx.k >= 1 && idx.k <= n / 2,
            Branch::Minus => {
                if n % 2 == 0 && idx.k == n / 2 {
                    return Err(Error::IndexOutOfRange(format!(
                        "(k = n/2 = {}, Minus) is the zero function for even n and is not \
                         an independent solution",
                        idx.k
                    )));
                }
                idx.k >= 1 && idx.k <= n / 2
            }
        },
        CaseVariant::EvenPosC => match idx.branch {
            Branch::Plus => idx.k >= 1 && idx.k < n / 2,
            Branch::Minus => idx.k < n / 2,
        },
    };
    if ok {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange(format!(
            "k = {}, branch {:?} not admissible for n = {}, c = {}",
            idx.k, idx.branch, n, spec.c
        )))
    }
}

/// Base-form angle of a branch as an exact rational multiple of π:
/// returns (num, den) with θ = num·π/den.
pub(crate) fn base_angle_rational(spec: &AirySpec, idx: BranchIndex) -> (i64, i64) {
    match classify(spec).variant {
        CaseVariant::OddOrEvenNegC => (2 * idx.k as i64, spec.n as i64),
        CaseVariant::EvenPosC => (2 * idx.k as i64 + 1, spec.n as i64),
    }
}

/// Angle coefficients for the requested representation.
pub fn angle_coefficients(
    spec: &AirySpec,
    idx: BranchIndex,
    form: AngleForm,
) -> Result<AngleCoefficients> {
    check_index(spec, idx)?;
    let n = spec.n as i64;
    let k = idx.k as i64;
    let (num, den) = match form {
        AngleForm::Base => base_angle_rational(spec, idx),
        AngleForm::RotatedUpper | AngleForm::RotatedLower => {
            if classify(spec).variant != CaseVariant::OddOrEvenNegC {
                return Err(Error::MethodInadmissible(
                    "rotated forms are only defined for n odd or n even with c < 0".into(),
                ));
            }
            match form {
                AngleForm::RotatedUpper => (4 * k + 1, 2 * n),
                _ => (4 * k - 1, 2 * n),
            }
        }
    };
    Ok(AngleCoefficients {
        a: cos_pi_rational(num, den),
        b: sin_pi_rational(num, den),
        theta: num as f64 * std::f64::consts::PI / den as f64,
    })
}

/// sin(num·π/den) with the angle reduced exactly modulo 2π first, so that
/// exact multiples of π give exactly 0.0 and large multipliers lose no
/// precision. Used heavily by the series coefficients where num grows with
/// the term index.
pub(crate) fn sin_pi_rational(num: i64, den: i64) -> f64 {
    debug_assert!(den > 0);
    let m = num.rem_euclid(2 * den); // angle = m*pi/den, m in [0, 2den)
    if m == 0 || m == den {
        return 0.0;
    }
    if 2 * m == den {
        return 1.0;
    }
    if 2 * m == 3 * den {
        return -1.0;
    }
    (m as f64 * std::f64::consts::PI / den as f64).sin()
}

/// cos(num·π/den) with exact modular reduction; exact ±1 and 0 at the axes.
pub(crate) fn cos_pi_rational(num: i64, den: i64) -> f64 {
    debug_assert!(den > 0);
    let m = num.rem_euclid(2 * den);
    if m == 0 {
        return 1.0;
    }
    if m == den {
        return -1.0;
    }
    if 2 * m == den || 2 * m == 3 * den {
        return 0.0;
    }
    (m as f64 * std::f64::consts::PI / den as f64).cos()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classify_examples() {
        let c = classify(&AirySpec::new(3, -1.0).unwrap());
        assert_eq!(c.variant, CaseVariant::OddOrEvenNegC);
        assert!(!c.gaussian);

        let c = classify(&AirySpec::new(2, -1.0).unwrap());
        assert_eq!(c.variant, CaseVariant::OddOrEvenNegC);
        assert!(c.gaussian);

        let c = classify(&AirySpec::new(4, 1.0).unwrap());
        assert_eq!(c.variant, CaseVariant::EvenPosC);
    }

    #[test]
    fn invalid_specs_rejected() {
        assert!(AirySpec::new(1, -1.0).is_err());
        assert!(AirySpec::new(3, 0.0).is_err());
        assert!(AirySpec::new(3, f64::NAN).is_err());
    }

    #[test]
    fn indices_n3() {
        let spec = AirySpec::new(3, -1.0).unwrap();
        assert_eq!(
            solution_indices(&spec),
            vec![BranchIndex::plus(1), BranchIndex::minus(1)]
        );
    }

    #[test]
    fn indices_n4_negc() {
        let spec = AirySpec::new(4, -1.0).unwrap();
        assert_eq!(
            solution_indices(&spec),
            vec![BranchIndex::plus(1), BranchIndex::minus(1), BranchIndex::plus(2)]
        );
    }

    #[test]
    fn indices_n4_posc() {
        let spec = AirySpec::new(4, 1.0).unwrap();
        assert_eq!(
            solution_indices(&spec),
            vec![BranchIndex::plus(1), BranchIndex::minus(0), BranchIndex::minus(1)]
        );
    }

    #[test]
    fn zero_branch_rejected_with_specific_error() {
        let spec = AirySpec::new(4, -1.0).unwrap();
        let err = check_index(&spec, BranchIndex::minus(2)).unwrap_err();
        assert!(matches!(err, Error::IndexOutOfRange(_)));
        assert!(err.to_string().contains("zero function"));
    }

    #[test]
    fn count_matches_n_minus_1() {
        for n in 2..=40 {
            for c in [-1.0, 1.0, -0.3, 2.5] {
                let spec = AirySpec::new(n, c).unwrap();
                assert_eq!(solution_indices(&spec).len() as u32, n - 1, "n={n} c={c}");
                for idx in solution_indices(&spec) {
                    check_index(&spec, idx).unwrap();
                }
            }
        }
    }

    #[test]
    fn angles_n3_base() {
        let spec = AirySpec::new(3, -1.0).unwrap();
        let ac = angle_coefficients(&spec, BranchIndex::minus(1), AngleForm::Base).unwrap();
        assert!((ac.theta - 2.0 * std::f64::consts::PI / 3.0).abs() < 1e-15);
        assert!((ac.a + 0.5).abs() < 1e-15);
        assert!((ac.b - 0.75f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn angles_n5_golden_ratio() {
        // cos(2π/5) = 1/(2φ), sin(2π/5) = 5^{1/4}·√φ/2 with φ the golden ratio
        let spec = AirySpec::new(5, -1.0).unwrap();
        let ac = angle_coefficients(&spec, BranchIndex::minus(1), AngleForm::Base).unwrap();
        let phi = (1.0 + 5.0f64.sqrt()) / 2.0;
        assert!((ac.a - 1.0 / (2.0 * phi)).abs() < 1e-15);
        assert!((ac.b - 5.0f64.powf(0.25) * phi.sqrt() / 2.0).abs() < 1e-15);
    }

    #[test]
    fn angles_rotated_upper_n3() {
        let spec = AirySpec::new(3, -1.0).unwrap();
        let ac =
            angle_coefficients(&spec, BranchIndex::plus(1), AngleForm::RotatedUpper).unwrap();
        assert!((ac.theta - 5.0 * std::f64::consts::PI / 6.0).abs() < 1e-15);
        assert!((ac.a + 0.75f64.sqrt()).abs() < 1e-15);
        assert!((ac.b - 0.5).abs() < 1e-15);
    }

    #[test]
    fn rotated_rejected_for_even_pos_c() {
        let spec = AirySpec::new(4, 1.0).unwrap();
        let err =
            angle_coefficients(&spec, BranchIndex::minus(0), AngleForm::RotatedUpper).unwrap_err();
        assert!(matches!(err, Error::MethodInadmissible(_)));
    }

    #[test]
    fn exact_trig_reductions() {
        assert_eq!(sin_pi_rational(6, 3), 0.0); // sin(2π)
        assert_eq!(sin_pi_rational(3, 3), 0.0); // sin(π)
        assert_eq!(cos_pi_rational(4, 4), -1.0); // cos(π)
        assert_eq!(cos_pi_rational(2, 4), 0.0); // cos(π/2)
        assert_eq!(sin_pi_rational(1, 2), 1.0);
        assert_eq!(sin_pi_rational(-1, 2), -1.0);
        // huge multiplier stays exact: sin(2000001·π) = 0
        assert_eq!(sin_pi_rational(2_000_001, 1), 0.0);
    }
}
