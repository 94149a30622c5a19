//! Rindler and Minkowski coordinates in 1+1 dimensions.
//!
//! Rindler coordinates `(τ, χ)` cover the right wedge `x > |t|`:
//! `χ = √(x² − t²)`, `τ = a⁻¹ artanh(t/x)`, with metric
//! `ds² = (aχ)² dτ² − dχ²`. The worldline `χ = const` has proper
//! acceleration `1/χ`; `a` only rescales the time coordinate.

use crate::error::{positive, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RindlerPoint {
    pub tau: f64,
    pub chi: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MinkowskiPoint {
    pub t: f64,
    pub x: f64,
}

/// Two Dirichlet mirrors at `χ = A` and `χ = B` with Rindler parameter `a`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CavityConfig {
    a: f64,
    left: f64,
    right: f64,
}

impl CavityConfig {
    pub fn new(a: f64, left: f64, right: f64) -> Result<Self> {
        positive("Rindler parameter a", a)?;
        positive("mirror position A", left)?;
        positive("mirror position B", right)?;
        if right <= left {
            return Err(Error::MirrorOrder { left, right });
        }
        Ok(CavityConfig { a, left, right })
    }

    /// Cavity with left mirror at `A` and proper length `L`, so `B = A + L`.
    pub fn with_length(a: f64, left: f64, length: f64) -> Result<Self> {
        positive("cavity length L", length)?;
        CavityConfig::new(a, left, left + length)
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    /// `A`, position of the left mirror.
    pub fn left(&self) -> f64 {
        self.left
    }

    /// `B`, position of the right mirror.
    pub fn right(&self) -> f64 {
        self.right
    }

    pub fn length(&self) -> f64 {
        self.right - self.left
    }

    /// `log(B/A)`, evaluated as `ln_1p(L/A)` to stay accurate far from the
    /// horizon where `B/A → 1`.
    pub fn log_ratio(&self) -> f64 {
        libm::log1p(self.length() / self.left)
    }

    pub fn with_a(&self, a: f64) -> Result<Self> {
        CavityConfig::new(a, self.left, self.right)
    }

    pub fn scaled(&self, factor: f64) -> Result<Self> {
        CavityConfig::new(self.a, self.left * factor, self.right * factor)
    }

    /// Proper accelerations `(1/A, 1/B)` of the two mirrors.
    pub fn proper_accelerations(&self) -> (f64, f64) {
        (1.0 / self.left, 1.0 / self.right)
    }
}

pub fn rindler_from_minkowski(p: MinkowskiPoint, a: f64) -> Result<RindlerPoint> {
    positive("Rindler parameter a", a)?;
    if !(p.x > libm::fabs(p.t)) {
        return Err(Error::OutsideWedge { t: p.t, x: p.x });
    }
    // (x − t)(x + t) avoids cancellation near the horizon.
    let chi = libm::sqrt((p.x - p.t) * (p.x + p.t));
    let tau = libm::atanh(p.t / p.x) / a;
    Ok(RindlerPoint { tau, chi })
}

pub fn minkowski_from_rindler(p: RindlerPoint, a: f64) -> Result<MinkowskiPoint> {
    positive("Rindler parameter a", a)?;
    positive("Rindler position chi", p.chi)?;
    let u = a * p.tau;
    Ok(MinkowskiPoint { t: p.chi * libm::sinh(u), x: p.chi * libm::cosh(u) })
}

/// Position and velocity at inertial time `t` of a body with proper
/// acceleration `acc` that is at rest at `t = 0`.
pub fn trajectory(acc: f64, t: f64) -> Result<(f64, f64)> {
    positive("proper acceleration", acc)?;
    let x = libm::sqrt(1.0 / (acc * acc) + t * t);
    let v = acc * t / libm::sqrt(1.0 + acc * acc * t * t);
    Ok((x, v))
}

/// Velocity of the worldline `χ = const` at Rindler time `τ`: `tanh(aτ)`.
pub fn rindler_velocity(a: f64, tau: f64) -> f64 {
    libm::tanh(a * tau)
}

/// `ξ = log(aχ)/a`, in which `ds² = e^{2aξ}(dτ² − dξ²)`.
pub fn conformal_coordinate(chi: f64, a: f64) -> Result<f64> {
    positive("Rindler position chi", chi)?;
    positive("Rindler parameter a", a)?;
    Ok(libm::log(a * chi) / a)
}

pub fn chi_from_conformal(xi: f64, a: f64) -> Result<f64> {
    positive("Rindler parameter a", a)?;
    Ok(libm::exp(a * xi) / a)
}
