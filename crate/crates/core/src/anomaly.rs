//! Trace anomaly and the stress-tensor transformation law for
//! `g = e^{2σ} η`.
//!
//! In two dimensions
//!
//! ```text
//! ⟨T_μν⟩ = ⟨T_μν⟩₀ + (1/12π) [σ_{,μν} − σ_{,μ}σ_{,ν} + η_μν (½ σ_{,λ}σ^{,λ} − σ^{,λ}_{,λ})]
//! ```
//!
//! with indices moved by `η`, and `g^{μν}⟨T_μν⟩ = −R/(24π)`.
//! In four dimensions, restricted to scale factors depending on conformal
//! time only,
//!
//! ```text
//! ⟨T_μν⟩ = e^{−2σ} ⟨T_μν⟩₀ − (1/16π²) [(c/1080) ⁽¹⁾H_μν + (b/180) ⁽³⁾H_μν]
//! ```
//!
//! whose trace is `(1/2880π²)[a C² + b(R_μνR^μν − R²/3) + c □R]`.
//!
//! The homogeneous part `⟨T⟩₀` is the state pulled back to flat space; only
//! it depends on the state, the remainder is local geometry.

use core::f64::consts::PI;

use crate::coords::{conformal_coordinate, CavityConfig};
use crate::curvature::{self, RiemannSign};
use crate::error::{finite, Error, Result};
use crate::rindler_cavity::{self, Frame2, OutsideState, Plate, PressureForce, StressTensor2};

/// Riemann sign under which the 2D transformation law has trace `−R/(24π)`.
pub const SIGN_2D: RiemannSign = RiemannSign::DeltaFirst;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Species {
    ConformalScalar,
    Maxwell,
}

/// Anomaly coefficients `(a, b, c)` of a conformal field.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FieldSpecies {
    pub name: Species,
    pub a_coef: i32,
    pub b_coef: i32,
    pub c_coef: i32,
}

impl FieldSpecies {
    pub const CONFORMAL_SCALAR: FieldSpecies =
        FieldSpecies { name: Species::ConformalScalar, a_coef: -1, b_coef: -1, c_coef: 1 };
    pub const MAXWELL: FieldSpecies = FieldSpecies { name: Species::Maxwell, a_coef: 13, b_coef: -62, c_coef: -18 };

    pub fn of(name: Species) -> FieldSpecies {
        match name {
            Species::ConformalScalar => Self::CONFORMAL_SCALAR,
            Species::Maxwell => Self::MAXWELL,
        }
    }

    pub fn a(&self) -> f64 {
        self.a_coef as f64
    }

    pub fn b(&self) -> f64 {
        self.b_coef as f64
    }

    pub fn c(&self) -> f64 {
        self.c_coef as f64
    }
}

/// σ and its first and second partials in the flat chart at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SigmaJet2 {
    pub sigma: f64,
    pub grad: [f64; 2],
    pub hessian: [[f64; 2]; 2],
}

impl SigmaJet2 {
    pub fn new(sigma: f64, grad: [f64; 2], hessian: [[f64; 2]; 2]) -> Result<Self> {
        finite("sigma", sigma)?;
        for v in grad.iter().chain(hessian.iter().flatten()) {
            finite("sigma derivative", *v)?;
        }
        let (d01, d10) = (hessian[0][1], hessian[1][0]);
        let scale = libm::fmax(1.0, libm::fmax(libm::fabs(d01), libm::fabs(d10)));
        if libm::fabs(d01 - d10) > 1e-12 * scale {
            return Err(Error::AsymmetricHessian { d01, d10 });
        }
        Ok(SigmaJet2 { sigma, grad, hessian })
    }

    pub const fn zero() -> Self {
        SigmaJet2 { sigma: 0.0, grad: [0.0; 2], hessian: [[0.0; 2]; 2] }
    }

    /// Jet of a profile `σ(t, x)` by central finite differences with step `h`.
    pub fn from_fn<F: Fn(f64, f64) -> f64>(sigma: F, t: f64, x: f64, h: f64) -> Result<Self> {
        let f = |dt: f64, dx: f64| sigma(t + dt * h, x + dx * h);
        let s = f(0.0, 0.0);
        let grad = [(f(1.0, 0.0) - f(-1.0, 0.0)) / (2.0 * h), (f(0.0, 1.0) - f(0.0, -1.0)) / (2.0 * h)];
        let tt = (f(1.0, 0.0) - 2.0 * s + f(-1.0, 0.0)) / (h * h);
        let xx = (f(0.0, 1.0) - 2.0 * s + f(0.0, -1.0)) / (h * h);
        let tx = (f(1.0, 1.0) - f(1.0, -1.0) - f(-1.0, 1.0) + f(-1.0, -1.0)) / (4.0 * h * h);
        SigmaJet2::new(s, grad, [[tt, tx], [tx, xx]])
    }

    /// `σ = aξ` in `(τ, ξ)`: the Rindler wedge.
    pub fn rindler(a: f64, xi: f64) -> Self {
        SigmaJet2 { sigma: a * xi, grad: [0.0, a], hessian: [[0.0; 2]; 2] }
    }

    /// `□σ = σ_tt − σ_xx`.
    pub fn flat_box(&self) -> f64 {
        self.hessian[0][0] - self.hessian[1][1]
    }

    /// `η^{μν} σ_μ σ_ν`.
    pub fn flat_gradient_square(&self) -> f64 {
        self.grad[0] * self.grad[0] - self.grad[1] * self.grad[1]
    }
}

/// Curvature data of a diagonal conformally flat 4D metric at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurvaturePack {
    pub metric_diag: [f64; 4],
    pub ricci_diag: [f64; 4],
    pub ricci_scalar: f64,
    /// `R_μν R^μν`.
    pub ricci_sq: f64,
    /// `C_{λμνξ} C^{λμνξ}`.
    pub weyl_sq: f64,
    /// `R_{;μ}^{;μ}`.
    pub box_r: f64,
    pub h1_diag: [f64; 4],
    pub h3_diag: [f64; 4],
}

impl CurvaturePack {
    pub fn flat() -> Self {
        CurvaturePack {
            metric_diag: [1.0, -1.0, -1.0, -1.0],
            ricci_diag: [0.0; 4],
            ricci_scalar: 0.0,
            ricci_sq: 0.0,
            weyl_sq: 0.0,
            box_r: 0.0,
            h1_diag: [0.0; 4],
            h3_diag: [0.0; 4],
        }
    }

    pub fn is_finite(&self) -> bool {
        self.metric_diag
            .iter()
            .chain(&self.ricci_diag)
            .chain(&self.h1_diag)
            .chain(&self.h3_diag)
            .chain([self.ricci_scalar, self.ricci_sq, self.weyl_sq, self.box_r].iter())
            .all(|v| v.is_finite())
    }
}

/// Frame tag for 4D stress tensors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Frame4 {
    /// Components in the flat metric `η` (state pulled back to Minkowski).
    FlatConformal,
    /// Components in the physical metric `g = e^{2σ} η`.
    Curved,
}

/// Diagonal 4D stress tensor with lower indices, ordered `(η, x, y, z)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StressTensor4 {
    pub diag: [f64; 4],
    pub frame: Frame4,
}

impl StressTensor4 {
    pub const fn zero(frame: Frame4) -> Self {
        StressTensor4 { diag: [0.0; 4], frame }
    }

    pub const fn isotropic(t_eta_eta: f64, t_space: f64, frame: Frame4) -> Self {
        StressTensor4 { diag: [t_eta_eta, t_space, t_space, t_space], frame }
    }

    pub fn t_eta_eta(&self) -> f64 {
        self.diag[0]
    }

    /// `T_zz`, the component normal to plates at constant `z`.
    pub fn t_zz(&self) -> f64 {
        self.diag[3]
    }

    /// `g^{μν} T_μν` for a diagonal metric.
    pub fn trace(&self, metric_diag: &[f64; 4]) -> f64 {
        self.diag.iter().zip(metric_diag).map(|(t, g)| t / g).sum()
    }
}

pub fn anomaly_trace_2d(ricci_scalar: f64) -> f64 {
    -ricci_scalar / (24.0 * PI)
}

pub fn anomaly_trace_4d(species: &FieldSpecies, pack: &CurvaturePack) -> f64 {
    let r = pack.ricci_scalar;
    (species.a() * pack.weyl_sq + species.b() * (pack.ricci_sq - r * r / 3.0) + species.c() * pack.box_r)
        / (2880.0 * PI * PI)
}

/// State-independent part of the 2D law, in the flat chart.
pub fn inhomogeneous_2d(jet: &SigmaJet2) -> StressTensor2 {
    let eta = [1.0, -1.0];
    let half_grad_sq = 0.5 * jet.flat_gradient_square();
    let boxs = jet.flat_box();
    let mut c = [[0.0; 2]; 2];
    for m in 0..2 {
        for n in 0..2 {
            let metric = if m == n { eta[m] } else { 0.0 };
            c[m][n] = (jet.hessian[m][n] - jet.grad[m] * jet.grad[n] + metric * (half_grad_sq - boxs)) / (12.0 * PI);
        }
    }
    StressTensor2 { tt: c[0][0], tx: c[0][1], xx: c[1][1], frame: Frame2::FlatConformal }
}

/// Transform a flat-space expectation value `T0` to `g = e^{2σ} η`. The
/// result keeps the flat chart's coordinates (`Frame2::FlatConformal`), as
/// the law itself does.
pub fn transform_stress_2d(t0: &StressTensor2, jet: &SigmaJet2) -> Result<StressTensor2> {
    t0.expect_frame(Frame2::FlatConformal)?;
    t0.add(&inhomogeneous_2d(jet))
}

/// `g^{μν} T_μν` for components in the flat chart of `g = e^{2σ} η`.
pub fn trace_2d(t: &StressTensor2, sigma: f64) -> f64 {
    libm::exp(-2.0 * sigma) * t.flat_trace()
}

/// Ricci scalar of `e^{2σ} η` through the generic diagonal-metric engine.
pub fn ricci_scalar_2d(jet: &SigmaJet2, sign: RiemannSign) -> f64 {
    let metric = curvature::conformal_metric_2d(jet.sigma, jet.grad, jet.hessian);
    let ric = curvature::ricci(&metric.riemann(sign));
    curvature::ricci_scalar(&ric, &metric.inverse())
}

/// Pressure-method force on a Rindler mirror rebuilt from the 2D law with
/// `σ = aξ`: the flat cavity stress of width `log(B/A)/a` inside, the
/// chosen vacuum outside, both contracted at the plate.
pub fn rindler_plate_force_conformal(
    cfg: &CavityConfig,
    plate: Plate,
    tau: f64,
    outside: OutsideState,
) -> Result<PressureForce> {
    let a = cfg.a();
    let chi = plate.position(cfg);
    let jet = SigmaJet2::rindler(a, conformal_coordinate(chi, a)?);
    let flat_zero = StressTensor2::zero(Frame2::FlatConformal);
    let t0 = rindler_cavity::minkowski_cavity_stress(cfg.log_ratio() / a);
    let inside = transform_stress_2d(&t0, &jet)?;
    let rindler_vacuum = transform_stress_2d(&flat_zero, &jet)?;
    let beyond = match outside {
        OutsideState::RindlerVacuum => rindler_vacuum,
        OutsideState::MinkowskiVacuum => flat_zero,
    };
    // Net push on the plate along +χ; the cavity lies on the −χ side of B.
    let orient = match plate {
        Plate::A => -1.0,
        Plate::B => 1.0,
    };
    let push = |t: StressTensor2| -> Result<f64> {
        Ok(orient * rindler_cavity::plate_pressure(&t.to_rindler(a, chi)?, a, tau, chi)?)
    };
    Ok(PressureForce {
        cavity: push(inside.sub(&rindler_vacuum)?)?,
        outside_correction: push(rindler_vacuum.sub(&beyond)?)?,
    })
}

/// `⁽¹⁾H` and `⁽³⁾H` from curvature data, for diagonal tensors.
///
/// `hess_r` is the covariant Hessian `R_{;μν}` (diagonal), `ricci_sq` is
/// `R_ρλ R^ρλ`.
pub fn h_tensors(
    metric_diag: &[f64; 4],
    ricci_diag: &[f64; 4],
    ricci_scalar: f64,
    ricci_sq: f64,
    hess_r: &[f64; 4],
    box_r: f64,
) -> ([f64; 4], [f64; 4]) {
    let r = ricci_scalar;
    let mut h1 = [0.0; 4];
    let mut h3 = [0.0; 4];
    for m in 0..4 {
        let g = metric_diag[m];
        let ric = ricci_diag[m];
        h1[m] = 2.0 * hess_r[m] - 2.0 * g * box_r - 0.5 * g * r * r + 2.0 * r * ric;
        // R_μ^ρ R_ρμ = R_μμ g^{μμ} R_μμ for diagonal tensors
        h3[m] = ric * ric / g - 2.0 / 3.0 * r * ric - 0.5 * ricci_sq * g + 0.25 * r * r * g;
    }
    (h1, h3)
}

/// State-independent part of the 4D law.
pub fn inhomogeneous_4d(pack: &CurvaturePack, species: &FieldSpecies) -> StressTensor4 {
    let mut diag = [0.0; 4];
    for (m, slot) in diag.iter_mut().enumerate() {
        *slot = -(species.c() / 1080.0 * pack.h1_diag[m] + species.b() / 180.0 * pack.h3_diag[m]) / (16.0 * PI * PI);
    }
    StressTensor4 { diag, frame: Frame4::Curved }
}

pub fn transform_stress_4d(
    t0: &StressTensor4,
    sigma: f64,
    pack: &CurvaturePack,
    species: &FieldSpecies,
) -> Result<StressTensor4> {
    if t0.frame != Frame4::FlatConformal {
        return Err(Error::CurvedInput);
    }
    finite("sigma", sigma)?;
    let weight = libm::exp(-2.0 * sigma);
    let mut out = inhomogeneous_4d(pack, species);
    for (slot, t) in out.diag.iter_mut().zip(t0.diag) {
        *slot += weight * t;
    }
    Ok(out)
}

/// Mirror boundary conditions and their fate under `g ↦ e^{2σ} g`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BoundaryCondition {
    /// `φ = value` on the mirror.
    Dirichlet { value: f64 },
    /// `n^a ∂_a φ = 0`.
    Neumann,
    /// `F_μν t^μ s^ν = 0` for tangent `t, s`.
    PerfectConductor,
}

impl BoundaryCondition {
    /// Whether the condition survives the conformal map with factor `σ` at a
    /// boundary point with unit normal `normal` (flat-chart components).
    ///
    /// Homogeneous Dirichlet and perfect-conductor conditions always do.
    /// Neumann turns into Robin unless `n^a ∂_a σ = 0`.
    pub fn check(&self, jet: &SigmaJet2, normal: [f64; 2], tol: f64) -> Result<()> {
        match *self {
            BoundaryCondition::Dirichlet { value: 0.0 } => Ok(()),
            BoundaryCondition::Dirichlet { value } => {
                Err(Error::BoundaryNotConformal { condition: "inhomogeneous Dirichlet", normal_derivative: value })
            }
            BoundaryCondition::PerfectConductor => Ok(()),
            BoundaryCondition::Neumann => {
                let dn = normal[0] * jet.grad[0] + normal[1] * jet.grad[1];
                if libm::fabs(dn) <= tol {
                    Ok(())
                } else {
                    Err(Error::BoundaryNotConformal { condition: "Neumann", normal_derivative: dn })
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn species_coefficients() {
        let s = FieldSpecies::CONFORMAL_SCALAR;
        assert_eq!((s.a_coef, s.b_coef, s.c_coef), (-1, -1, 1));
        let m = FieldSpecies::MAXWELL;
        assert_eq!((m.a_coef, m.b_coef, m.c_coef), (13, -62, -18));
    }

    #[test]
    fn trace_2d_examples() {
        assert_eq!(anomaly_trace_2d(0.0), 0.0);
        assert_relative_eq!(anomaly_trace_2d(24.0 * PI), -1.0, max_relative = 1e-15);
    }

    #[test]
    fn identity_conformal_factor_leaves_tensor() {
        let t0 = StressTensor2 { tt: 0.3, tx: -0.1, xx: 0.7, frame: Frame2::FlatConformal };
        assert_eq!(transform_stress_2d(&t0, &SigmaJet2::zero()).unwrap(), t0);
    }

    #[test]
    fn rindler_vacuum_from_constant_gradient() {
        // −(a²/12π)[δ^ξ_μ δ^ξ_ν + ½ η_μν]
        let a = 1.7;
        let t = transform_stress_2d(&StressTensor2::zero(Frame2::FlatConformal), &SigmaJet2::rindler(a, 0.4)).unwrap();
        let k = -a * a / (12.0 * PI);
        assert_relative_eq!(t.tt, k * 0.5, max_relative = 1e-15);
        assert_relative_eq!(t.xx, k * (1.0 - 0.5), max_relative = 1e-15);
        assert_eq!(t.tx, 0.0);
    }

    #[test]
    fn two_dimensional_de_sitter_trace() {
        // σ = −log(Hη): constant positive R = 2H² with the δ-first sign.
        let h: f64 = 0.8;
        let eta = 1.3;
        let jet = SigmaJet2::new(-(h * eta).ln(), [-1.0 / eta, 0.0], [[1.0 / (eta * eta), 0.0], [0.0, 0.0]]).unwrap();
        let r = ricci_scalar_2d(&jet, SIGN_2D);
        assert_relative_eq!(r, 2.0 * h * h, max_relative = 1e-13);
        let t = inhomogeneous_2d(&jet);
        assert_relative_eq!(trace_2d(&t, jet.sigma), anomaly_trace_2d(r), max_relative = 1e-13);
        assert!(anomaly_trace_2d(r) != 0.0);
    }

    #[test]
    fn opposite_sign_convention_flips_trace_relation() {
        let jet = SigmaJet2::new(0.1, [0.2, -0.3], [[0.5, 0.05], [0.05, -0.2]]).unwrap();
        let trace = trace_2d(&inhomogeneous_2d(&jet), jet.sigma);
        let r_gamma = ricci_scalar_2d(&jet, RiemannSign::GammaFirst);
        assert_relative_eq!(trace, r_gamma / (24.0 * PI), max_relative = 1e-12);
    }

    #[test]
    fn homogeneous_part_is_additive() {
        let jet = SigmaJet2::new(0.4, [0.3, 0.9], [[0.2, -0.1], [-0.1, 0.6]]).unwrap();
        let t0 = StressTensor2 { tt: 0.3, tx: -0.1, xx: 0.7, frame: Frame2::FlatConformal };
        let s0 = StressTensor2 { tt: -1.1, tx: 0.25, xx: 2.0, frame: Frame2::FlatConformal };
        let both = transform_stress_2d(&t0.add(&s0).unwrap(), &jet).unwrap();
        let only = transform_stress_2d(&t0, &jet).unwrap();
        let diff = both.sub(&only).unwrap();
        assert_relative_eq!(diff.tt, s0.tt, max_relative = 1e-15);
        assert_relative_eq!(diff.tx, s0.tx, max_relative = 1e-14);
        assert_relative_eq!(diff.xx, s0.xx, max_relative = 1e-15);
    }

    #[test]
    fn rindler_frame_input_is_rejected() {
        let t = StressTensor2::zero(Frame2::RindlerCoords);
        assert!(matches!(transform_stress_2d(&t, &SigmaJet2::zero()), Err(Error::FrameMismatch { .. })));
    }

    #[test]
    fn jet_validation() {
        assert!(matches!(
            SigmaJet2::new(0.0, [0.0; 2], [[0.0, 1.0], [2.0, 0.0]]),
            Err(Error::AsymmetricHessian { .. })
        ));
        assert!(SigmaJet2::new(f64::NAN, [0.0; 2], [[0.0; 2]; 2]).is_err());
        let jet = SigmaJet2::from_fn(|t, x| 0.3 * t * t + 0.5 * t * x - x * x * x, 0.2, 0.7, 1e-3).unwrap();
        assert_relative_eq!(jet.grad[0], 0.6 * 0.2 + 0.5 * 0.7, max_relative = 1e-8);
        assert_relative_eq!(jet.grad[1], 0.5 * 0.2 - 3.0 * 0.49, max_relative = 1e-6);
        assert_relative_eq!(jet.hessian[0][1], 0.5, max_relative = 1e-6);
        assert_relative_eq!(jet.hessian[1][1], -6.0 * 0.7, max_relative = 1e-6);
    }

    #[test]
    fn flat_pack_has_no_anomaly() {
        let flat = CurvaturePack::flat();
        assert_eq!(anomaly_trace_4d(&FieldSpecies::MAXWELL, &flat), 0.0);
        let t0 = StressTensor4::isotropic(0.2, -0.1, Frame4::FlatConformal);
        let out = transform_stress_4d(&t0, 0.0, &flat, &FieldSpecies::CONFORMAL_SCALAR).unwrap();
        assert_eq!(out.diag, t0.diag);
        assert_eq!(out.frame, Frame4::Curved);
        assert!(transform_stress_4d(&out, 0.0, &flat, &FieldSpecies::MAXWELL).is_err());
    }

    #[test]
    fn h_tensors_of_maximally_symmetric_space() {
        // R_μν = (R/4) g_μν: H1 = 0 and H3 = (R²/48) g.
        let a2: f64 = 2.3;
        let metric = [a2, -a2, -a2, -a2];
        let r = -12.0 * 0.49;
        let ricci = metric.map(|g| r / 4.0 * g);
        let ricci_sq = r * r / 4.0;
        let (h1, h3) = h_tensors(&metric, &ricci, r, ricci_sq, &[0.0; 4], 0.0);
        for m in 0..4 {
            assert!(h1[m].abs() < 1e-14);
            assert_relative_eq!(h3[m], r * r / 48.0 * metric[m], max_relative = 1e-14);
        }
    }

    #[test]
    fn boundary_condition_admissibility() {
        let rindler = SigmaJet2::rindler(1.0, 0.0);
        let normal = [0.0, 1.0];
        assert!(BoundaryCondition::Dirichlet { value: 0.0 }.check(&rindler, normal, 1e-12).is_ok());
        assert!(BoundaryCondition::PerfectConductor.check(&rindler, normal, 1e-12).is_ok());
        assert!(matches!(
            BoundaryCondition::Neumann.check(&rindler, normal, 1e-12),
            Err(Error::BoundaryNotConformal { .. })
        ));
        assert!(BoundaryCondition::Dirichlet { value: 0.5 }.check(&rindler, normal, 1e-12).is_err());
        // Cosmological factor depends on time only: Neumann survives on
        // mirrors at constant x.
        let cosmological = SigmaJet2::new(0.2, [0.7, 0.0], [[0.1, 0.0], [0.0, 0.0]]).unwrap();
        assert!(BoundaryCondition::Neumann.check(&cosmological, normal, 1e-12).is_ok());
    }

    #[test]
    fn conformal_route_reproduces_rindler_pressure() {
        for (a, left, right, tau) in [(1.0, 1.0, 2.0, 0.0), (0.5, 0.3, 4.0, 1.1), (3.0, 2.0, 2.5, -0.4)] {
            let cfg = CavityConfig::new(a, left, right).unwrap();
            for plate in [Plate::A, Plate::B] {
                for outside in [OutsideState::RindlerVacuum, OutsideState::MinkowskiVacuum] {
                    let direct = rindler_cavity::force_pressure_method(&cfg, plate, tau, outside);
                    let conformal = rindler_plate_force_conformal(&cfg, plate, tau, outside).unwrap();
                    assert_relative_eq!(conformal.cavity, direct.cavity, max_relative = 1e-12);
                    assert!(
                        (conformal.outside_correction - direct.outside_correction).abs() <= 1e-12 * direct.cavity.abs()
                    );
                }
            }
        }
    }
}
