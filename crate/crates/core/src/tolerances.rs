/// Numerical tolerances used by the self-checks and the verification suite.
///
/// All values are dimensionless (relative) unless the field name says
/// otherwise.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Rindler/Minkowski round trip, relative.
    pub round_trip: f64,
    /// Damped or Euler–Maclaurin regularization vs `-c/12`, absolute.
    pub regularization: f64,
    /// Numerical regularization vs the `ζ(−1)` oracle, absolute.
    pub zeta_agreement: f64,
    /// Closed-form reproductions such as `E_c(a=1, A=1, B=e) = −π/24`.
    pub closed_form: f64,
    /// Ratio between the two force definitions.
    pub method_ratio: f64,
    /// Analytic force vs central finite difference of the energy.
    pub finite_difference: f64,
    /// Rindler force through the anomaly pipeline vs the direct result.
    pub conformal_rederivation: f64,
    /// Lorentz invariant `f_x² − f_t²`.
    pub lorentz: f64,
    /// 2D trace consistency.
    pub trace_2d: f64,
    /// 4D trace consistency.
    pub trace_4d: f64,
    /// Printed FLRW forms vs the generic curvature engine, relative.
    pub two_path_curvature: f64,
    /// de Sitter identities (`R = −12H²`, `H1 = 0`, `H3 = 3H⁴g`).
    pub desitter_identity: f64,
    /// Weyl square of conformally flat packs.
    pub weyl: f64,
    /// Finite-difference covariant divergence, in units of the tensor scale.
    pub conservation: f64,
    /// Flat limit of the de Sitter force, relative.
    pub flat_limit: f64,
}

impl Tolerances {
    pub const DEFAULT: Tolerances = Tolerances {
        round_trip: 1e-12,
        regularization: 1e-6,
        zeta_agreement: 1e-9,
        closed_form: 1e-9,
        method_ratio: 1e-10,
        finite_difference: 1e-6,
        conformal_rederivation: 1e-10,
        lorentz: 1e-12,
        trace_2d: 1e-8,
        trace_4d: 1e-10,
        two_path_curvature: 1e-8,
        desitter_identity: 1e-10,
        weyl: 1e-10,
        conservation: 1e-6,
        flat_limit: 1e-6,
    };

    /// Every field set to `tol`.
    pub const fn uniform(tol: f64) -> Tolerances {
        Tolerances {
            round_trip: tol,
            regularization: tol,
            zeta_agreement: tol,
            closed_form: tol,
            method_ratio: tol,
            finite_difference: tol,
            conformal_rederivation: tol,
            lorentz: tol,
            trace_2d: tol,
            trace_4d: tol,
            two_path_curvature: tol,
            desitter_identity: tol,
            weyl: tol,
            conservation: tol,
            flat_limit: tol,
        }
    }
}

impl Default for Tolerances {
    fn default() -> Self {
        Self::DEFAULT
    }
}
