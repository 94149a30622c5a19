//! Spatially flat FLRW backgrounds `ds² = a²(η)(dη² − dx²)` and the
//! Casimir effect between comoving conducting plates.
//!
//! Curvature is available through two independent routes:
//! [`flrw_curvature`] evaluates closed forms in `a, a′, …, a⁗`, and
//! [`flrw_curvature_generic`] runs the generic diagonal-metric engine over
//! Taylor series of the metric. With [`SIGN_4D`] the two agree.
//!
//! The closed-form `⁽¹⁾H` is the usual `2R;μν − 2g□R − ½gR² + 2RRμν`
//! evaluated with γ-first curvature. That combination is covariantly
//! conserved only with δ-first curvature; off de Sitter, where `⁽¹⁾H`
//! vanishes either way, the two differ. A conserved `⁽¹⁾H` comes from
//! `flrw_curvature_generic(jet, RiemannSign::DeltaFirst)`.

use core::f64::consts::PI;

use crate::anomaly::{self, CurvaturePack, FieldSpecies, Frame4, Species, StressTensor4};
use crate::curvature::{self, DiagonalMetric, RiemannSign};
use crate::error::{finite, positive, Error, Result};
use crate::jet::Jet;

/// Riemann sign reproducing the closed forms below (`R_dS = −12H²`).
pub const SIGN_4D: RiemannSign = RiemannSign::GammaFirst;

/// `a(η)` and its first four derivatives at `η`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScaleFactorJet {
    pub eta: f64,
    /// `[a, a′, a″, a‴, a⁗]`
    pub derivs: [f64; 5],
}

impl ScaleFactorJet {
    pub fn new(eta: f64, derivs: [f64; 5]) -> Result<Self> {
        finite("conformal time eta", eta)?;
        positive("scale factor a", derivs[0])?;
        for d in &derivs[1..] {
            finite("scale factor derivative", *d)?;
        }
        Ok(ScaleFactorJet { eta, derivs })
    }

    pub fn a(&self) -> f64 {
        self.derivs[0]
    }

    /// `σ = log a`.
    pub fn sigma(&self) -> f64 {
        libm::log(self.derivs[0])
    }

    fn series(&self) -> Jet<5> {
        Jet::from_derivatives(&self.derivs)
    }
}

/// Built-in scale-factor families.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ScaleFactorFamily {
    /// `a = 1/(H|η|)` on either patch `η > 0` or `η < 0`.
    DeSitter { hubble: f64 },
    /// `a = C ηᵖ` for `η > 0`; `p = 1` radiation, `p = 2` matter.
    PowerLaw { amplitude: f64, exponent: f64 },
    /// `a = 1 + (late − 1)(1 + tanh(η/width))/2`: Minkowski in the far past,
    /// `a → late` in the far future.
    TanhInterpolated { late: f64, width: f64 },
}

impl ScaleFactorFamily {
    fn validate(&self, eta: f64) -> Result<()> {
        finite("conformal time eta", eta)?;
        match *self {
            ScaleFactorFamily::DeSitter { hubble } => {
                positive("Hubble parameter H", hubble)?;
                if eta == 0.0 {
                    return Err(Error::ConformalTimeSingular);
                }
            }
            ScaleFactorFamily::PowerLaw { amplitude, exponent } => {
                positive("power-law amplitude", amplitude)?;
                finite("power-law exponent", exponent)?;
                positive("conformal time eta", eta)?;
            }
            ScaleFactorFamily::TanhInterpolated { late, width } => {
                positive("late-time scale factor", late)?;
                positive("transition width", width)?;
            }
        }
        Ok(())
    }

    pub fn series(&self, eta: f64) -> Result<Jet<5>> {
        self.validate(eta)?;
        let t = Jet::<5>::variable(eta);
        Ok(match *self {
            ScaleFactorFamily::DeSitter { hubble } => {
                let inv = t.recip() / hubble;
                if eta > 0.0 {
                    inv
                } else {
                    -inv
                }
            }
            ScaleFactorFamily::PowerLaw { amplitude, exponent } => t.powf(exponent) * amplitude,
            ScaleFactorFamily::TanhInterpolated { late, width } => {
                ((t / width).tanh() + 1.0) * (0.5 * (late - 1.0)) + 1.0
            }
        })
    }

    pub fn jet(&self, eta: f64) -> Result<ScaleFactorJet> {
        let s = self.series(eta)?;
        let mut derivs = [0.0; 5];
        for (k, d) in derivs.iter_mut().enumerate() {
            *d = s.derivative(k);
        }
        ScaleFactorJet::new(eta, derivs)
    }

    /// Largest relative mismatch between `a_{k+1}` and the central
    /// difference of `a_k` with step `h`, over `k = 0..3`.
    pub fn derivative_consistency(&self, eta: f64, h: f64) -> Result<f64> {
        positive("finite-difference step", h)?;
        let mid = self.jet(eta)?;
        let plus = self.jet(eta + h)?;
        let minus = self.jet(eta - h)?;
        let mut worst: f64 = 0.0;
        for k in 0..4 {
            let fd = (plus.derivs[k] - minus.derivs[k]) / (2.0 * h);
            let scale =
                libm::fmax(libm::fabs(mid.derivs[k + 1]), libm::fabs(mid.derivs[k]) / libm::fmax(libm::fabs(eta), 1.0));
            worst = libm::fmax(worst, libm::fabs(fd - mid.derivs[k + 1]) / scale);
        }
        Ok(worst)
    }
}

/// de Sitter jet `a = 1/(H|η|)` in closed form.
pub fn desitter_jet(hubble: f64, eta: f64) -> Result<ScaleFactorJet> {
    positive("Hubble parameter H", hubble)?;
    if eta == 0.0 {
        return Err(Error::ConformalTimeSingular);
    }
    finite("conformal time eta", eta)?;
    // d^k/dη^k (1/η) = (−1)^k k! / η^{k+1}
    let patch = if eta > 0.0 { 1.0 } else { -1.0 };
    let mut derivs = [0.0; 5];
    let mut factorial = 1.0;
    let mut sign = 1.0;
    let mut power = eta;
    for (k, d) in derivs.iter_mut().enumerate() {
        if k > 0 {
            factorial *= k as f64;
            sign = -sign;
            power *= eta;
        }
        *d = patch * sign * factorial / (hubble * power);
    }
    ScaleFactorJet::new(eta, derivs)
}

/// Metric `a²(1, −1, −1, −1)` with η-derivatives at one point.
pub fn flrw_metric(jet: &ScaleFactorJet) -> DiagonalMetric<f64, 4> {
    let [a, a1, a2, _, _] = jet.derivs;
    let signs = [1.0, -1.0, -1.0, -1.0];
    let mut first = [[0.0; 4]; 4];
    let mut second = [[[0.0; 4]; 4]; 4];
    for m in 0..4 {
        first[m][0] = signs[m] * 2.0 * a * a1;
        second[m][0][0] = signs[m] * 2.0 * (a1 * a1 + a * a2);
    }
    DiagonalMetric { components: signs.map(|s| s * a * a), first, second }
}

/// Curvature from the closed forms in `a` and its derivatives.
pub fn flrw_curvature(jet: &ScaleFactorJet) -> CurvaturePack {
    let [a, a1, a2, a3, a4] = jet.derivs;
    let a_sq = a * a;
    let metric_diag = [a_sq, -a_sq, -a_sq, -a_sq];
    let r_eta = 3.0 * (a1 * a1 - a * a2) / a_sq;
    let r_space = (a1 * a1 + a * a2) / a_sq;
    let ricci_scalar = -6.0 * a2 / (a_sq * a);
    let ricci_sq = (r_eta * r_eta + 3.0 * r_space * r_space) / (a_sq * a_sq);
    let a5 = a_sq * a_sq * a;
    let h1_eta = 6.0 / a5 * 3.0 * (-8.0 * a1 * a1 * a2 + a * a2 * a2 + 2.0 * a * a1 * a3);
    let h1_space = 6.0 / a5 * (-20.0 * a1 * a1 * a2 + 7.0 * a * a2 * a2 + 10.0 * a * a1 * a3 - 2.0 * a_sq * a4);
    let a6 = a5 * a;
    let h3_eta = 3.0 * a1 * a1 * a1 * a1 / a6;
    let h3_space = (5.0 * a1 * a1 * a1 * a1 - 4.0 * a * a1 * a1 * a2) / a6;
    let box_r = 6.0 * (-a_sq * a4 + 4.0 * a * a1 * a3 + 3.0 * a * a2 * a2 - 6.0 * a1 * a1 * a2) / (a6 * a);
    CurvaturePack {
        metric_diag,
        ricci_diag: [r_eta, r_space, r_space, r_space],
        ricci_scalar,
        ricci_sq,
        weyl_sq: 0.0,
        box_r,
        h1_diag: [h1_eta, h1_space, h1_space, h1_space],
        h3_diag: [h3_eta, h3_space, h3_space, h3_space],
    }
}

/// Curvature from the generic diagonal-metric engine, run on Taylor series
/// of the metric in `η`. Uses none of the closed forms.
pub fn flrw_curvature_generic(jet: &ScaleFactorJet, sign: RiemannSign) -> CurvaturePack {
    type S = Jet<5>;
    let a = jet.series();
    let a_sq = a * a;
    let signs = [1.0, -1.0, -1.0, -1.0];
    let components: [S; 4] = signs.map(|s| a_sq * s);
    let zero = S::constant(0.0);
    let mut first = [[zero; 4]; 4];
    let mut second = [[[zero; 4]; 4]; 4];
    for m in 0..4 {
        first[m][0] = components[m].differentiate();
        second[m][0][0] = first[m][0].differentiate();
    }
    let metric = DiagonalMetric { components, first, second };
    let inverse = metric.inverse();
    let christoffel = metric.christoffel();
    let riemann = metric.riemann(sign);
    let ricci = curvature::ricci(&riemann);
    let scalar = curvature::ricci_scalar(&ricci, &inverse);
    let ricci_sq = curvature::ricci_square(&ricci, &inverse);
    let riemann_sq = curvature::riemann_square(&riemann, &components, &inverse);
    let weyl_sq = curvature::weyl_square(riemann_sq, ricci_sq, scalar, 4);

    let d_scalar = scalar.differentiate();
    let mut gradient = [zero; 4];
    gradient[0] = d_scalar;
    let mut hessian = [[zero; 4]; 4];
    hessian[0][0] = d_scalar.differentiate();
    let cov = curvature::covariant_hessian(&gradient, &hessian, &christoffel);

    let metric_diag = components.map(|c| c.value());
    let ricci_diag = [0, 1, 2, 3].map(|i| ricci[i][i].value());
    let hess_r = [0, 1, 2, 3].map(|i| cov[i][i].value());
    let box_r: f64 = (0..4).map(|i| inverse[i].value() * hess_r[i]).sum();
    let (h1_diag, h3_diag) =
        anomaly::h_tensors(&metric_diag, &ricci_diag, scalar.value(), ricci_sq.value(), &hess_r, box_r);
    CurvaturePack {
        metric_diag,
        ricci_diag,
        ricci_scalar: scalar.value(),
        ricci_sq: ricci_sq.value(),
        weyl_sq: weyl_sq.value(),
        box_r,
        h1_diag,
        h3_diag,
    }
}

/// Covariant divergence `∇^μ T_μν` of a diagonal tensor field along a
/// family, with `∂_η` by central differences of step `h`.
pub fn divergence_fd<F>(family: &ScaleFactorFamily, eta: f64, h: f64, tensor: F) -> Result<[f64; 4]>
where
    F: Fn(&ScaleFactorJet) -> [f64; 4],
{
    positive("finite-difference step", h)?;
    let mid = family.jet(eta)?;
    let plus = tensor(&family.jet(eta + h)?);
    let minus = tensor(&family.jet(eta - h)?);
    let mut derivative = [[0.0; 4]; 4];
    for m in 0..4 {
        derivative[m][0] = (plus[m] - minus[m]) / (2.0 * h);
    }
    let metric = flrw_metric(&mid);
    Ok(curvature::divergence_of_diagonal(&tensor(&mid), &derivative, &metric.inverse(), &metric.christoffel()))
}

/// Casimir pressure between perfectly reflecting plates at comoving
/// separation `d` in flat space: `−π²/(240 d⁴)` for the electromagnetic
/// field, half of that for one conformal scalar.
pub fn minkowski_casimir_pressure(d: f64, species: &FieldSpecies) -> Result<f64> {
    positive("plate separation d", d)?;
    let em = -PI * PI / (240.0 * d * d * d * d);
    Ok(match species.name {
        Species::Maxwell => em,
        Species::ConformalScalar => 0.5 * em,
    })
}

/// Flat-space stress between plates normal to `z`:
/// `(π²/720d⁴) diag(−1, 1, 1, −3)` for Maxwell, halved for the scalar.
/// `T_zz` equals [`minkowski_casimir_pressure`].
pub fn minkowski_casimir_stress(d: f64, species: &FieldSpecies) -> Result<StressTensor4> {
    let p = minkowski_casimir_pressure(d, species)?;
    let unit = -p / 3.0;
    Ok(StressTensor4 { diag: [-unit, unit, unit, -3.0 * unit], frame: Frame4::FlatConformal })
}

/// de Sitter stress `H²η² T0 − (H⁴ b / 960π²) g_μν`.
pub fn desitter_stress(hubble: f64, eta: f64, t0: &StressTensor4, species: &FieldSpecies) -> Result<StressTensor4> {
    if t0.frame != Frame4::FlatConformal {
        return Err(Error::CurvedInput);
    }
    let jet = desitter_jet(hubble, eta)?;
    let a_sq = jet.a() * jet.a();
    let weight = hubble * hubble * eta * eta;
    let anomaly = hubble * hubble * hubble * hubble * species.b() / (960.0 * PI * PI);
    let metric = [a_sq, -a_sq, -a_sq, -a_sq];
    let mut diag = [0.0; 4];
    for m in 0..4 {
        diag[m] = weight * t0.diag[m] - anomaly * metric[m];
    }
    Ok(StressTensor4 { diag, frame: Frame4::Curved })
}

/// The same stress through the general transformation law and the closed
/// form curvature pack.
pub fn desitter_stress_pipeline(
    hubble: f64,
    eta: f64,
    t0: &StressTensor4,
    species: &FieldSpecies,
) -> Result<StressTensor4> {
    let jet = desitter_jet(hubble, eta)?;
    anomaly::transform_stress_4d(t0, jet.sigma(), &flrw_curvature(&jet), species)
}

/// Two infinite conducting plates at comoving `z1 < z2` in de Sitter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlatePairConfig {
    z1: f64,
    z2: f64,
    species: FieldSpecies,
    hubble: f64,
}

impl PlatePairConfig {
    pub fn new(z1: f64, z2: f64, species: FieldSpecies, hubble: f64) -> Result<Self> {
        finite("plate position z1", z1)?;
        finite("plate position z2", z2)?;
        positive("plate separation z2 - z1", z2 - z1)?;
        positive("Hubble parameter H", hubble)?;
        Ok(PlatePairConfig { z1, z2, species, hubble })
    }

    pub fn separation(&self) -> f64 {
        self.z2 - self.z1
    }

    pub fn species(&self) -> FieldSpecies {
        self.species
    }

    pub fn hubble(&self) -> f64 {
        self.hubble
    }

    pub fn z1(&self) -> f64 {
        self.z1
    }

    pub fn z2(&self) -> f64 {
        self.z2
    }
}

/// Addends of `F = H²η² F_Mink + H⁴ b/(960π²)`, kept apart because the
/// second depends on the state behind the plates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeSitterForce {
    pub flat_pressure: f64,
    /// `H²η² F_Mink`
    pub conformal_casimir: f64,
    /// `H⁴ b / (960π²)`
    pub anomaly: f64,
    pub total: f64,
}

pub fn desitter_force(cfg: &PlatePairConfig, eta: f64) -> Result<DeSitterForce> {
    finite("conformal time eta", eta)?;
    if eta == 0.0 {
        return Err(Error::ConformalTimeSingular);
    }
    let h = cfg.hubble;
    let flat_pressure = minkowski_casimir_pressure(cfg.separation(), &cfg.species)?;
    let conformal_casimir = h * h * eta * eta * flat_pressure;
    let anomaly = h * h * h * h * cfg.species.b() / (960.0 * PI * PI);
    Ok(DeSitterForce { flat_pressure, conformal_casimir, anomaly, total: conformal_casimir + anomaly })
}

/// [`desitter_force`] along `η = 1/H`, where `a = 1`: the family whose
/// `H → 0` limit is flat space at the evaluation time.
pub fn desitter_force_unit_scale(cfg: &PlatePairConfig) -> Result<DeSitterForce> {
    desitter_force(cfg, 1.0 / cfg.hubble)
}
