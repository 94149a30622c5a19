//! The uniformly accelerated 1+1 dimensional Dirichlet cavity.
//!
//! Mirrors sit at `χ = A` and `χ = B` in Rindler coordinates. Two
//! definitions of the Casimir force are provided:
//!
//! * the energy method, `F = −∂E_c/∂χ_plate` with
//!   `E_c = −aπ / (24 log(B/A))`, which depends on the arbitrary
//!   parameter `a`;
//! * the pressure method, the stress tensor contracted with the plate normal
//!   `∂_χ` and the inertial translation `∂_x`, which gives
//!   `F = −π cosh(aτ) / (24 B² log²(B/A))` and no `a` dependence at `τ = 0`.
//!
//! The two differ by the redshift factor `aχ_plate` between the Rindler
//! time coordinate and the proper time of the plate; [`local_time_fix`]
//! removes it.

use core::f64::consts::PI;

use crate::coords::{rindler_velocity, CavityConfig};
use crate::error::{positive, Error, Result};
use crate::reg::{self, LinearModeDensity, RegularizationReport};

/// Which mirror a force acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Plate {
    /// Left mirror, `χ = A`.
    A,
    /// Right mirror, `χ = B`.
    B,
}

impl Plate {
    pub fn position(self, cfg: &CavityConfig) -> f64 {
        match self {
            Plate::A => cfg.left(),
            Plate::B => cfg.right(),
        }
    }
}

/// Coordinate frame of a 2D stress tensor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Frame2 {
    /// `(τ, χ)` with `ds² = (aχ)² dτ² − dχ²`.
    RindlerCoords,
    /// `(τ, ξ)` with `ds² = e^{2aξ} (dτ² − dξ²)`, or any flat `(t, x)`
    /// chart of a conformally flat metric.
    FlatConformal,
}

/// Symmetric 2D stress tensor with lower indices, components ordered
/// (time, space).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StressTensor2 {
    pub tt: f64,
    pub tx: f64,
    pub xx: f64,
    pub frame: Frame2,
}

impl StressTensor2 {
    pub const fn zero(frame: Frame2) -> Self {
        StressTensor2 { tt: 0.0, tx: 0.0, xx: 0.0, frame }
    }

    pub fn components(&self) -> [[f64; 2]; 2] {
        [[self.tt, self.tx], [self.tx, self.xx]]
    }

    /// `T_μν u^μ w^ν`.
    pub fn contract(&self, u: [f64; 2], w: [f64; 2]) -> f64 {
        let c = self.components();
        let mut acc = 0.0;
        for i in 0..2 {
            for j in 0..2 {
                acc += c[i][j] * u[i] * w[j];
            }
        }
        acc
    }

    /// `η^{μν} T_μν` with `η = diag(1, −1)`.
    pub fn flat_trace(&self) -> f64 {
        self.tt - self.xx
    }

    pub fn add(&self, other: &StressTensor2) -> Result<StressTensor2> {
        self.expect_frame(other.frame)?;
        Ok(StressTensor2 { tt: self.tt + other.tt, tx: self.tx + other.tx, xx: self.xx + other.xx, frame: self.frame })
    }

    pub fn sub(&self, other: &StressTensor2) -> Result<StressTensor2> {
        self.expect_frame(other.frame)?;
        Ok(StressTensor2 { tt: self.tt - other.tt, tx: self.tx - other.tx, xx: self.xx - other.xx, frame: self.frame })
    }

    pub fn expect_frame(&self, expected: Frame2) -> Result<()> {
        if self.frame != expected {
            return Err(Error::FrameMismatch { expected, found: self.frame });
        }
        Ok(())
    }

    /// Map `(τ, ξ)` components to `(τ, χ)` at position `χ`, using
    /// `dξ/dχ = 1/(aχ)`.
    pub fn to_rindler(&self, a: f64, chi: f64) -> Result<StressTensor2> {
        self.expect_frame(Frame2::FlatConformal)?;
        positive("Rindler parameter a", a)?;
        positive("Rindler position chi", chi)?;
        let j = 1.0 / (a * chi);
        Ok(StressTensor2 { tt: self.tt, tx: self.tx * j, xx: self.xx * j * j, frame: Frame2::RindlerCoords })
    }

    pub fn to_conformal(&self, a: f64, chi: f64) -> Result<StressTensor2> {
        self.expect_frame(Frame2::RindlerCoords)?;
        positive("Rindler parameter a", a)?;
        positive("Rindler position chi", chi)?;
        let j = a * chi;
        Ok(StressTensor2 { tt: self.tt, tx: self.tx * j, xx: self.xx * j * j, frame: Frame2::FlatConformal })
    }
}

/// Vacuum state on the far side of the mirrors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutsideState {
    RindlerVacuum,
    MinkowskiVacuum,
}

/// Relativistic 2-force `(f_t, f_x)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoForce {
    pub f_t: f64,
    pub f_x: f64,
}

impl TwoForce {
    /// `f_x² − f_t²`, invariant under boosts.
    pub fn invariant(&self) -> f64 {
        self.f_x * self.f_x - self.f_t * self.f_t
    }
}

/// Dirichlet cavity mode `ψ_n` with frequency `ω_n` conjugate to `τ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CavityMode {
    pub n: u32,
    pub omega: f64,
}

/// Force from the pressure method, split into the cavity term and the
/// extra term that appears when the outside is the Minkowski vacuum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PressureForce {
    /// Casimir force proper: inside stress minus Rindler-vacuum stress.
    pub cavity: f64,
    /// Extra force from a Minkowski (rather than Rindler) vacuum outside.
    /// Zero for [`OutsideState::RindlerVacuum`]; independent of the cavity
    /// size otherwise.
    pub outside_correction: f64,
}

impl PressureForce {
    pub fn total(&self) -> f64 {
        self.cavity + self.outside_correction
    }
}

/// `ω_n = a n π / log(B/A)`, read off the time dependence of the Dirichlet
/// modes `sin(nπ log(χ/A)/log(B/A)) e^{−iω_n τ}`.
pub fn mode_frequency(cfg: &CavityConfig, n: u32) -> Result<f64> {
    if n == 0 {
        return Err(Error::ZeroMode);
    }
    Ok(cfg.a() * n as f64 * PI / cfg.log_ratio())
}

pub fn mode(cfg: &CavityConfig, n: u32) -> Result<CavityMode> {
    Ok(CavityMode { n, omega: mode_frequency(cfg, n)? })
}

/// `E_c = ½ Σ ω_n` regularized with `ζ(−1)`: `−aπ / (24 log(B/A))`.
pub fn casimir_energy(cfg: &CavityConfig) -> f64 {
    let omega1 = cfg.a() * PI / cfg.log_ratio();
    // omega1 > 0 for any valid config
    0.5 * omega1 * reg::ZETA_MINUS_ONE
}

/// Mode-sum coefficient of the bare energy difference
/// `E_bc = c (Σ n − ∫ n dn)`, `c = ω₁/2 = aπ / (2 log(B/A))`.
pub fn bare_energy_density(cfg: &CavityConfig) -> LinearModeDensity {
    LinearModeDensity { coefficient: 0.5 * cfg.a() * PI / cfg.log_ratio() }
}

/// Casimir energy through the damped mode-sum regulator.
pub fn casimir_energy_damped(cfg: &CavityConfig) -> Result<RegularizationReport> {
    reg::regularize_linear_difference(bare_energy_density(cfg))
}

/// Casimir energy through the Euler–Maclaurin smooth-cutoff regulator.
pub fn casimir_energy_euler_maclaurin(cfg: &CavityConfig) -> Result<RegularizationReport> {
    reg::euler_maclaurin_linear_difference(bare_energy_density(cfg), &reg::CutoffLadder::default())
}

/// `F = −∂E_c/∂χ_plate`:
/// `−aπ/(24 B log²(B/A))` on `B`, `+aπ/(24 A log²(B/A))` on `A`.
pub fn force_energy_method(cfg: &CavityConfig, plate: Plate) -> f64 {
    let l = cfg.log_ratio();
    let magnitude = cfg.a() * PI / (24.0 * l * l);
    match plate {
        Plate::A => magnitude / cfg.left(),
        Plate::B => -magnitude / cfg.right(),
    }
}

/// Central finite difference of [`casimir_energy`] with step
/// `rel_step · χ_plate`.
pub fn force_energy_finite_difference(cfg: &CavityConfig, plate: Plate, rel_step: f64) -> Result<f64> {
    positive("finite-difference step", rel_step)?;
    let (a, left, right) = (cfg.a(), cfg.left(), cfg.right());
    let h = rel_step * plate.position(cfg);
    let (plus, minus) = match plate {
        Plate::A => (CavityConfig::new(a, left + h, right)?, CavityConfig::new(a, left - h, right)?),
        Plate::B => (CavityConfig::new(a, left, right + h)?, CavityConfig::new(a, left, right - h)?),
    };
    Ok(-(casimir_energy(&plus) - casimir_energy(&minus)) / (2.0 * h))
}

/// Stress–momentum contraction `T(∂_χ, ∂_x)` at the plate, with
/// `∂_x = aχ sinh(aτ) ∂_τ + cosh(aτ) ∂_χ`:
/// `F_B = −π cosh(aτ) / (24 B² log²(B/A))` and the mirror image at `A`.
pub fn force_pressure_method(cfg: &CavityConfig, plate: Plate, tau: f64, outside: OutsideState) -> PressureForce {
    let chi = plate.position(cfg);
    let l = cfg.log_ratio();
    let boost = libm::cosh(cfg.a() * tau);
    let inward = -PI * boost / (24.0 * chi * chi * l * l);
    let cavity = match plate {
        Plate::A => -inward,
        Plate::B => inward,
    };
    let outside_correction = match outside {
        OutsideState::RindlerVacuum => 0.0,
        OutsideState::MinkowskiVacuum => {
            // The Rindler vacuum inside carries T_χχ = −1/(24π χ²); without a
            // matching Rindler vacuum outside it is no longer cancelled.
            let rindler = -boost / (24.0 * PI * chi * chi);
            match plate {
                Plate::A => -rindler,
                Plate::B => rindler,
            }
        }
    };
    PressureForce { cavity, outside_correction }
}

/// Convert an energy-method force from Rindler coordinate time to the proper
/// time of the plate: divide by the redshift factor `aχ_plate`.
pub fn local_time_fix(force_energy: f64, cfg: &CavityConfig, plate: Plate) -> f64 {
    force_energy / (cfg.a() * plate.position(cfg))
}

/// Boost a rest-frame pure force `(0, F)` to velocity `v`.
pub fn twoforce_boost(rest_force: f64, v: f64) -> Result<TwoForce> {
    if !(libm::fabs(v) < 1.0) {
        return Err(Error::Superluminal { v });
    }
    let gamma = 1.0 / libm::sqrt((1.0 - v) * (1.0 + v));
    Ok(TwoForce { f_t: gamma * v * rest_force, f_x: gamma * rest_force })
}

/// 2-force on plate `B` at Rindler time `τ`.
pub fn plate_twoforce(cfg: &CavityConfig, tau: f64) -> Result<TwoForce> {
    let rest = force_pressure_method(cfg, Plate::B, 0.0, OutsideState::RindlerVacuum).cavity;
    twoforce_boost(rest, rindler_velocity(cfg.a(), tau))
}

/// Renormalized Casimir part of the cavity stress in `(τ, ξ)` coordinates,
/// `−(a²π / (24 log²(B/A))) (η_μν + 2δ^ξ_μ δ^ξ_ν)`. Constant across the
/// cavity and traceless; `chi` is only checked to lie in `[A, B]`.
pub fn cavity_stress(cfg: &CavityConfig, chi: f64) -> Result<StressTensor2> {
    if !(chi >= cfg.left() && chi <= cfg.right()) {
        return Err(Error::OutsideCavity { chi, left: cfg.left(), right: cfg.right() });
    }
    let delta_xi = cfg.log_ratio() / cfg.a();
    Ok(minkowski_cavity_stress(delta_xi))
}

/// Casimir stress of a static Dirichlet cavity of coordinate length
/// `width` in flat 1+1 space: `−π/(24 width²) (η + 2δ^x δ^x)`.
pub fn minkowski_cavity_stress(width: f64) -> StressTensor2 {
    let k = -PI / (24.0 * width * width);
    StressTensor2 { tt: k, tx: 0.0, xx: k * (-1.0 + 2.0), frame: Frame2::FlatConformal }
}

/// Contract a Rindler-frame stress with `∂_χ` and `∂_x` at `(τ, χ)`.
pub fn plate_pressure(stress: &StressTensor2, a: f64, tau: f64, chi: f64) -> Result<f64> {
    stress.expect_frame(Frame2::RindlerCoords)?;
    let normal = [0.0, 1.0];
    let translation = [a * chi * libm::sinh(a * tau), libm::cosh(a * tau)];
    Ok(stress.contract(normal, translation))
}
