//! Regularization of linear mode sums.
//!
//! The bare Casimir energy of the Rindler cavity reduces to a constant times
//! `Σ_{n≥1} n − ∫_0^∞ n dn`, a difference of two divergent quantities. Three
//! independent routes give it a value:
//!
//! * exponential damping: sum `n e^{−εn}` term by term, subtract the
//!   damped integral `1/ε²`, and Richardson-extrapolate `ε → 0` over the
//!   ladder `ε₀, ε₀/2, ε₀/4, …`;
//! * Euler–Maclaurin with a smooth cutoff `e^{−n/Λ}`: the boundary series
//!   `−Σ_k B_{2k}/(2k)! f^{(2k−1)}(0)` with the derivatives taken from a
//!   Taylor jet, then `Λ → ∞` by Richardson extrapolation;
//! * analytically, `ζ(−1) = −B₂/2 = −1/12`.
//!
//! A sharp cutoff is deliberately absent: it leaves a remainder `cΛ/2` that
//! oscillates with the fractional part of `Λ` instead of vanishing.

use crate::error::{finite, positive, Error, Result};
use crate::jet::Jet;

/// Even Bernoulli numbers `B_2, B_4, …, B_20`.
const BERNOULLI_EVEN: [f64; 10] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
];

/// `ζ(−1) = −B₂/2`.
pub const ZETA_MINUS_ONE: f64 = -BERNOULLI_EVEN[0] / 2.0;

/// Maximum Richardson ladder length.
pub const MAX_LEVELS: usize = 10;

/// Mode density `f(n) = c·n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinearModeDensity {
    pub coefficient: f64,
}

impl LinearModeDensity {
    pub fn new(coefficient: f64) -> Result<Self> {
        finite("mode density coefficient", coefficient)?;
        Ok(LinearModeDensity { coefficient })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RegularizationMethod {
    EulerMaclaurinCutoff,
    ZetaOracle,
    ExponentialDamping,
}

impl RegularizationMethod {
    pub fn tag(self) -> &'static str {
        match self {
            RegularizationMethod::EulerMaclaurinCutoff => "euler_maclaurin_cutoff",
            RegularizationMethod::ZetaOracle => "zeta_oracle",
            RegularizationMethod::ExponentialDamping => "exponential_damping",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegularizationReport {
    pub value: f64,
    pub method: RegularizationMethod,
    /// Largest mode number summed (damping) or largest smooth cutoff `Λ`
    /// (Euler–Maclaurin). `None` for the analytic oracle.
    pub cutoff_used: Option<f64>,
    pub extrapolation_error_estimate: f64,
}

/// Damping ladder for [`regularize_linear_difference_with`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DampingLadder {
    /// Largest damping parameter `ε₀`.
    pub eps0: f64,
    /// Number of ladder rungs, `ε₀ / 2^k` for `k < levels`.
    pub levels: usize,
    /// The damped sum at `ε` stops at `n = ⌈cutoff_multiple / ε⌉`; the
    /// neglected tail is of order `e^{−cutoff_multiple}/ε²`.
    pub cutoff_multiple: f64,
}

impl Default for DampingLadder {
    fn default() -> Self {
        DampingLadder { eps0: 0.1, levels: 5, cutoff_multiple: 60.0 }
    }
}

/// Smooth-cutoff ladder for [`euler_maclaurin_linear_difference`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CutoffLadder {
    /// Smallest cutoff `Λ₀`; rungs are `Λ₀ 2^k`.
    pub lambda0: f64,
    pub levels: usize,
}

impl Default for CutoffLadder {
    fn default() -> Self {
        CutoffLadder { lambda0: 4.0, levels: 4 }
    }
}

/// `lim (Σ_{n=1}^{Λ} c n − ∫_0^{Λ} c n dn)` by exponential damping.
pub fn regularize_linear_difference(d: LinearModeDensity) -> Result<RegularizationReport> {
    regularize_linear_difference_with(d, &DampingLadder::default())
}

pub fn regularize_linear_difference_with(d: LinearModeDensity, ladder: &DampingLadder) -> Result<RegularizationReport> {
    finite("mode density coefficient", d.coefficient)?;
    positive("damping eps0", ladder.eps0)?;
    positive("damping cutoff multiple", ladder.cutoff_multiple)?;
    check_levels(ladder.levels)?;

    // The density is linear, so the unit density is regularized once and
    // scaled; this keeps the result exactly linear in c.
    let mut samples = [0.0; MAX_LEVELS];
    let mut eps = ladder.eps0;
    let mut largest_n = 0.0;
    for slot in samples.iter_mut().take(ladder.levels) {
        let n_max = libm::ceil(ladder.cutoff_multiple / eps);
        *slot = damped_difference(eps, n_max as u64);
        largest_n = n_max;
        eps *= 0.5;
    }
    // Each sample cancels against 1/ε² at the finest level, which sets the
    // rounding floor.
    let finest = eps * 2.0;
    let (value, estimate) = richardson(&samples[..ladder.levels], 4.0, 1.0 / (finest * finest));
    let value = d.coefficient * value;
    let estimate = libm::fabs(d.coefficient) * estimate;
    converged(estimate, value)?;
    Ok(RegularizationReport {
        value,
        method: RegularizationMethod::ExponentialDamping,
        cutoff_used: Some(largest_n),
        extrapolation_error_estimate: estimate,
    })
}

/// `Σ_{n=1}^{N} n e^{−εn} − 1/ε²` with compensated summation.
fn damped_difference(eps: f64, n_max: u64) -> f64 {
    let mut sum = 0.0;
    let mut comp = 0.0;
    for n in 1..=n_max {
        let nf = n as f64;
        let term = nf * libm::exp(-eps * nf);
        // Neumaier
        let t = sum + term;
        if libm::fabs(sum) >= libm::fabs(term) {
            comp += (sum - t) + term;
        } else {
            comp += (term - t) + sum;
        }
        sum = t;
    }
    let integral = 1.0 / (eps * eps);
    (sum - integral) + comp
}

/// The same limit through Euler–Maclaurin applied to `c n e^{−n/Λ}`.
///
/// For a density whose derivatives vanish at infinity,
/// `Σ_{n≥0} f(n) − ∫_0^∞ f = f(0)/2 − Σ_k B_{2k}/(2k)! f^{(2k−1)}(0)`.
/// The series converges for `Λ > 1/(2π)`; it is summed through `B_20`.
pub fn euler_maclaurin_linear_difference(d: LinearModeDensity, ladder: &CutoffLadder) -> Result<RegularizationReport> {
    finite("mode density coefficient", d.coefficient)?;
    positive("cutoff lambda0", ladder.lambda0)?;
    if ladder.lambda0 <= 1.0 {
        return Err(Error::NonPositive { what: "cutoff lambda0 - 1", value: ladder.lambda0 - 1.0 });
    }
    check_levels(ladder.levels)?;

    let mut samples = [0.0; MAX_LEVELS];
    let mut lambda = ladder.lambda0;
    let mut largest = lambda;
    for slot in samples.iter_mut().take(ladder.levels) {
        *slot = euler_maclaurin_boundary_series(lambda);
        largest = lambda;
        lambda *= 2.0;
    }
    let (value, estimate) = richardson(&samples[..ladder.levels], 4.0, 0.0);
    let value = d.coefficient * value;
    let estimate = libm::fabs(d.coefficient) * estimate;
    converged(estimate, value)?;
    Ok(RegularizationReport {
        value,
        method: RegularizationMethod::EulerMaclaurinCutoff,
        cutoff_used: Some(largest),
        extrapolation_error_estimate: estimate,
    })
}

fn euler_maclaurin_boundary_series(lambda: f64) -> f64 {
    let n = Jet::<21>::variable(0.0);
    let f = n * (n * (-1.0 / lambda)).exp();
    let c = f.coeffs();
    // f^{(2k−1)}(0)/(2k)! = c_{2k−1}/(2k)
    let mut total = c[0] / 2.0;
    for (k, b) in BERNOULLI_EVEN.iter().enumerate() {
        let order = 2 * k + 1;
        total -= b * c[order] / (order + 1) as f64;
    }
    total
}

/// `½ Σ_n n ω₁ ↦ ½ ω₁ ζ(−1) = −ω₁/24`.
pub fn zeta_frequency_sum(omega1: f64) -> Result<f64> {
    positive("fundamental frequency omega1", omega1)?;
    Ok(0.5 * omega1 * ZETA_MINUS_ONE)
}

/// Analytic value `c ζ(−1)` in report form.
pub fn zeta_linear_difference(d: LinearModeDensity) -> RegularizationReport {
    RegularizationReport {
        value: d.coefficient * ZETA_MINUS_ONE,
        method: RegularizationMethod::ZetaOracle,
        cutoff_used: None,
        extrapolation_error_estimate: 0.0,
    }
}

fn check_levels(levels: usize) -> Result<()> {
    if !(2..=MAX_LEVELS).contains(&levels) {
        return Err(Error::TooManyLevels { requested: levels, max: MAX_LEVELS });
    }
    Ok(())
}

fn converged(estimate: f64, value: f64) -> Result<()> {
    if !estimate.is_finite() || !value.is_finite() || estimate > 1e-6 * (1.0 + libm::fabs(value)) {
        return Err(Error::NotConverged { estimate });
    }
    Ok(())
}

/// Richardson extrapolation for samples `T(h/2^k)` with an even error
/// expansion in `h`: column `j` removes the `h^{2j}` term.
///
/// The estimate is the larger of the last two corrections, plus a floor of
/// 64 ulp of the ladder scale.
fn richardson(samples: &[f64], ratio: f64, magnitude: f64) -> (f64, f64) {
    let levels = samples.len();
    let mut table = [[0.0; MAX_LEVELS]; MAX_LEVELS];
    for (i, s) in samples.iter().enumerate() {
        table[i][0] = *s;
        let mut factor = 1.0;
        for j in 1..=i {
            factor *= ratio;
            table[i][j] = table[i][j - 1] + (table[i][j - 1] - table[i - 1][j - 1]) / (factor - 1.0);
        }
    }
    let last = levels - 1;
    let best = table[last][last];
    let along_row = libm::fabs(best - table[last][last - 1]);
    let along_diag = libm::fabs(best - table[last - 1][last - 1]);
    let scale = samples.iter().fold(magnitude, |m, s| libm::fmax(m, libm::fabs(*s)));
    let floor = 16.0 * f64::EPSILON * scale;
    (best, libm::fmax(along_row, along_diag) + floor)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use core::f64::consts::PI;

    /// Independent closed form of the damped difference:
    /// `Σ n e^{−εn} = 1/(4 sinh²(ε/2))`.
    fn damped_closed_form(eps: f64) -> f64 {
        let s = libm::sinh(eps / 2.0);
        1.0 / (4.0 * s * s) - 1.0 / (eps * eps)
    }

    #[test]
    fn damped_sum_matches_closed_form() {
        for eps in [0.1, 0.05, 0.0125] {
            let n_max = libm::ceil(60.0 / eps) as u64;
            assert_relative_eq!(damped_difference(eps, n_max), damped_closed_form(eps), epsilon = 1e-11);
        }
    }

    #[test]
    fn unit_density_gives_minus_one_twelfth() {
        let r = regularize_linear_difference(LinearModeDensity::new(1.0).unwrap()).unwrap();
        assert_eq!(r.method, RegularizationMethod::ExponentialDamping);
        assert!((r.value + 1.0 / 12.0).abs() < 1e-6);
        assert!((r.value - ZETA_MINUS_ONE).abs() < 1e-9);
        assert!(r.extrapolation_error_estimate >= 0.0);
        assert!((r.value + 1.0 / 12.0).abs() <= r.extrapolation_error_estimate.max(1e-12));
    }

    #[test]
    fn zero_density() {
        let r = regularize_linear_difference(LinearModeDensity::new(0.0).unwrap()).unwrap();
        assert_eq!(r.value, 0.0);
    }

    #[test]
    fn half_pi_density() {
        let r = regularize_linear_difference(LinearModeDensity::new(PI / 2.0).unwrap()).unwrap();
        assert!((r.value + PI / 24.0).abs() < 1e-9);
    }

    #[test]
    fn euler_maclaurin_path() {
        let r =
            euler_maclaurin_linear_difference(LinearModeDensity::new(1.0).unwrap(), &CutoffLadder::default()).unwrap();
        assert_eq!(r.method, RegularizationMethod::EulerMaclaurinCutoff);
        assert!((r.value - ZETA_MINUS_ONE).abs() < 1e-12);
    }

    #[test]
    fn euler_maclaurin_series_equals_damped_closed_form() {
        // At finite Λ the Euler–Maclaurin boundary series is the damped
        // difference with ε = 1/Λ (the n = 0 term vanishes).
        for lambda in [2.0, 5.0, 20.0] {
            assert_relative_eq!(
                euler_maclaurin_boundary_series(lambda),
                damped_closed_form(1.0 / lambda),
                epsilon = 1e-12
            );
        }
    }

    #[test]
    fn zeta_frequency_examples() {
        assert_relative_eq!(zeta_frequency_sum(PI).unwrap(), -PI / 24.0, max_relative = 1e-15);
        assert_relative_eq!(zeta_frequency_sum(24.0).unwrap(), -1.0, max_relative = 1e-15);
        assert_relative_eq!(zeta_frequency_sum(2.0).unwrap(), -1.0 / 12.0, max_relative = 1e-15);
        assert!(zeta_frequency_sum(0.0).is_err());
        assert!(zeta_frequency_sum(-1.0).is_err());
    }

    #[test]
    fn oracle_equivalence() {
        for c in [0.1, 1.0, 10.0] {
            let d = LinearModeDensity::new(c).unwrap();
            let numeric = regularize_linear_difference(d).unwrap().value;
            let oracle = c * 2.0 * zeta_frequency_sum(1.0).unwrap();
            assert!((numeric - oracle).abs() < 1e-6);
        }
    }

    #[test]
    fn cutoff_doubling_within_estimate() {
        let d = LinearModeDensity::new(3.0).unwrap();
        let base = DampingLadder::default();
        let r1 = regularize_linear_difference_with(d, &base).unwrap();
        let r2 = regularize_linear_difference_with(
            d,
            &DampingLadder { cutoff_multiple: 2.0 * base.cutoff_multiple, ..base },
        )
        .unwrap();
        assert!((r1.value - r2.value).abs() < r1.extrapolation_error_estimate);
        assert!(r2.cutoff_used.unwrap() > r1.cutoff_used.unwrap());

        let em = CutoffLadder::default();
        let e1 = euler_maclaurin_linear_difference(d, &em).unwrap();
        let e2 = euler_maclaurin_linear_difference(d, &CutoffLadder { lambda0: 2.0 * em.lambda0, ..em }).unwrap();
        assert!((e1.value - e2.value).abs() < e1.extrapolation_error_estimate);
    }

    #[test]
    fn ladder_validation() {
        let d = LinearModeDensity::new(1.0).unwrap();
        let bad = DampingLadder { levels: 1, ..DampingLadder::default() };
        assert!(regularize_linear_difference_with(d, &bad).is_err());
        let bad = DampingLadder { levels: MAX_LEVELS + 1, ..DampingLadder::default() };
        assert!(regularize_linear_difference_with(d, &bad).is_err());
        assert!(LinearModeDensity::new(f64::INFINITY).is_err());
        assert!(euler_maclaurin_linear_difference(d, &CutoffLadder { lambda0: 0.5, levels: 3 }).is_err());
    }

    #[test]
    fn single_damping_level_is_not_converged() {
        // One coarse rung pair cannot resolve −1/12 to the convergence bar.
        let d = LinearModeDensity::new(1.0).unwrap();
        let coarse = DampingLadder { eps0: 3.0, levels: 2, cutoff_multiple: 60.0 };
        assert!(matches!(regularize_linear_difference_with(d, &coarse), Err(Error::NotConverged { .. })));
    }

    proptest::proptest! {
        #[test]
        fn linear_in_coefficient(c in -50.0f64..50.0, alpha in -10.0f64..10.0) {
            let r1 = regularize_linear_difference(LinearModeDensity::new(c).unwrap()).unwrap().value;
            let r2 = regularize_linear_difference(LinearModeDensity::new(alpha * c).unwrap()).unwrap().value;
            proptest::prop_assert!((r2 - alpha * r1).abs() <= 1e-12 * (alpha * r1).abs().max(1e-300));
        }
    }
}
