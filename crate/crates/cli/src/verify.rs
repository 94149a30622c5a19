//! Self-verification: every cross-method and oracle invariant of the core
//! crate, evaluated at fixed inputs and compared with a tolerance.

use std::f64::consts::{E, PI};
use std::fmt::Write as _;

use casimir_core::anomaly::{self, FieldSpecies, Frame4, SigmaJet2, StressTensor4, SIGN_2D};
use casimir_core::coords::{self, CavityConfig, MinkowskiPoint};
use casimir_core::cosmo::{self, PlatePairConfig, ScaleFactorFamily, SIGN_4D};
use casimir_core::reg::{self, LinearModeDensity};
use casimir_core::rindler_cavity::{self as cavity, OutsideState, Plate};
use casimir_core::Tolerances;
use serde::Serialize;

use crate::commands::pack_deviation;
use crate::error::CliError;
use crate::record::{fmt_number, VERSION};

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub module: &'static str,
    pub name: &'static str,
    /// Measured deviation; `inf` when the check could not be evaluated.
    pub error: f64,
    pub tolerance: f64,
    pub passed: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub version: &'static str,
    pub conventions: &'static str,
    pub tolerance_override: Option<f64>,
    pub passed: usize,
    pub failed: usize,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}

type Measured = Result<f64, casimir_core::Error>;

struct Suite {
    checks: Vec<Check>,
}

impl Suite {
    fn add(&mut self, module: &'static str, name: &'static str, tolerance: f64, measured: Measured) {
        let error = measured.unwrap_or(f64::INFINITY);
        // NaN never passes
        let passed = error <= tolerance;
        self.checks.push(Check { module, name, error, tolerance, passed });
    }
}

fn rel(x: f64, y: f64) -> f64 {
    (x - y).abs() / y.abs().max(f64::MIN_POSITIVE)
}

fn cfg(a: f64, left: f64, right: f64) -> CavityConfig {
    CavityConfig::new(a, left, right).expect("fixed verification inputs are valid")
}

fn reg_oracle() -> Measured {
    let r = reg::regularize_linear_difference(LinearModeDensity::new(1.0)?)?;
    Ok((r.value + 1.0 / 12.0).abs())
}

fn reg_zeta() -> Measured {
    let d = LinearModeDensity::new(1.0)?;
    Ok((reg::regularize_linear_difference(d)?.value - reg::zeta_linear_difference(d).value).abs())
}

fn reg_euler_maclaurin() -> Measured {
    let d = LinearModeDensity::new(1.0)?;
    let em = reg::euler_maclaurin_linear_difference(d, &reg::CutoffLadder::default())?;
    Ok((em.value - reg::zeta_linear_difference(d).value).abs())
}

fn round_trip() -> Measured {
    let mut worst: f64 = 0.0;
    for (t, x, a) in [(0.0, 1.0, 1.0), (0.3, 1.7, 2.0), (-4.9, 5.0, 0.1), (1e3, 1.5e3, 7.0)] {
        let p = MinkowskiPoint { t, x };
        let back = coords::minkowski_from_rindler(coords::rindler_from_minkowski(p, a)?, a)?;
        worst = worst.max((back.t - t).abs().max((back.x - x).abs()) / x);
    }
    Ok(worst)
}

fn energy_closed_form() -> Measured {
    let c = cfg(1.0, 1.0, E);
    let target = -PI / 24.0;
    let damped = cavity::casimir_energy_damped(&c)?.value;
    Ok((cavity::casimir_energy(&c) - target).abs().max((damped - target).abs()))
}

fn energy_finite_difference() -> Measured {
    let mut worst: f64 = 0.0;
    for c in [cfg(1.0, 1.0, 2.0), cfg(0.3, 0.5, 0.6), cfg(4.0, 10.0, 300.0)] {
        for plate in [Plate::A, Plate::B] {
            let fd = cavity::force_energy_finite_difference(&c, plate, 1e-5)?;
            worst = worst.max(rel(fd, cavity::force_energy_method(&c, plate)));
        }
    }
    Ok(worst)
}

fn method_ratio() -> Measured {
    let mut worst: f64 = 0.0;
    for c in [cfg(1.0, 1.0, 2.0), cfg(2.0, 0.5, 3.0), cfg(0.25, 4.0, 4.5)] {
        let energy = cavity::force_energy_method(&c, Plate::B);
        let pressure = cavity::force_pressure_method(&c, Plate::B, 0.0, OutsideState::RindlerVacuum).cavity;
        worst = worst.max(rel(pressure / energy, 1.0 / (c.a() * c.right())));
    }
    Ok(worst)
}

fn local_time_fix() -> Measured {
    let mut worst: f64 = 0.0;
    for c in [cfg(1.0, 1.0, 2.0), cfg(2.0, 0.5, 3.0), cfg(0.25, 4.0, 4.5)] {
        for plate in [Plate::A, Plate::B] {
            let fixed = cavity::local_time_fix(cavity::force_energy_method(&c, plate), &c, plate);
            let pressure = cavity::force_pressure_method(&c, plate, 0.0, OutsideState::RindlerVacuum).cavity;
            worst = worst.max(rel(fixed, pressure));
        }
    }
    Ok(worst)
}

/// `|F + π/24|` at `A = 10⁴`, or `inf` if the approach is not monotone.
fn zero_acceleration() -> Measured {
    let mut previous = f64::INFINITY;
    for left in [1e2, 1e3, 1e4] {
        let c = CavityConfig::with_length(1.0, left, 1.0)?;
        let f = cavity::force_pressure_method(&c, Plate::B, 0.0, OutsideState::RindlerVacuum).cavity;
        let gap = (f + PI / 24.0).abs();
        if !(gap < previous) {
            return Ok(f64::INFINITY);
        }
        previous = gap;
    }
    Ok(previous)
}

fn twoforce_invariant() -> Measured {
    let c = cfg(1.0, 1.0, 2.0);
    let rest = cavity::force_pressure_method(&c, Plate::B, 0.0, OutsideState::RindlerVacuum).cavity;
    let mut worst: f64 = 0.0;
    for tau in [-2.0, -0.5, 0.0, 0.7, 3.0] {
        let f = cavity::plate_twoforce(&c, tau)?;
        worst = worst.max(rel(f.invariant(), rest * rest));
        let direct = cavity::force_pressure_method(&c, Plate::B, tau, OutsideState::RindlerVacuum).cavity;
        worst = worst.max(rel(f.f_x, direct));
    }
    Ok(worst)
}

/// The 20-point grid on which the conformal route must reproduce the
/// direct pressure.
pub fn rederivation_grid() -> Vec<(f64, f64, f64, f64)> {
    let mirrors = [(1.0, 2.0), (0.3, 4.0), (2.0, 2.5), (5.0, 50.0), (0.1, 0.11)];
    let accelerations = [0.5, 1.0, 2.0, 3.0];
    let mut grid = Vec::with_capacity(20);
    for (i, &(left, right)) in mirrors.iter().enumerate() {
        for (j, &a) in accelerations.iter().enumerate() {
            let tau = -1.0 + 0.1 * (4 * i + j) as f64;
            grid.push((a, left, right, tau));
        }
    }
    grid
}

fn conformal_rederivation() -> Measured {
    let mut worst: f64 = 0.0;
    for (a, left, right, tau) in rederivation_grid() {
        let c = CavityConfig::new(a, left, right)?;
        let via_law = anomaly::rindler_plate_force_conformal(&c, Plate::B, tau, OutsideState::RindlerVacuum)?;
        let direct = cavity::force_pressure_method(&c, Plate::B, tau, OutsideState::RindlerVacuum);
        worst = worst.max(rel(via_law.cavity, direct.cavity));
    }
    Ok(worst)
}

/// A conformal factor `σ(t, x)` with the point `(t, x)` where it is sampled.
pub type SigmaProfile = (fn(f64, f64) -> f64, f64, f64);

/// Three smooth conformal factors and the points where they are sampled.
pub fn sigma_profiles() -> [SigmaProfile; 3] {
    fn de_sitter(t: f64, _x: f64) -> f64 {
        -(0.8 * t).ln()
    }
    fn quadratic(t: f64, x: f64) -> f64 {
        0.2 * (t * t - 0.5 * x * x) + 0.1 * t * x
    }
    fn wave(t: f64, x: f64) -> f64 {
        0.5 * (0.7 * t + 0.3 * x).sin() + 0.1 * x + 0.05 * (t * x).cos()
    }
    [(de_sitter, 1.3, 0.2), (quadratic, 0.4, -0.7), (wave, -0.6, 1.1)]
}

fn trace_2d() -> Measured {
    let mut worst: f64 = 0.0;
    for (sigma, t, x) in sigma_profiles() {
        let jet = SigmaJet2::from_fn(sigma, t, x, 1e-4)?;
        let law = anomaly::inhomogeneous_2d(&jet);
        let trace = anomaly::trace_2d(&law, jet.sigma);
        let expected = anomaly::anomaly_trace_2d(anomaly::ricci_scalar_2d(&jet, SIGN_2D));
        worst = worst.max(rel(trace, expected));
    }
    Ok(worst)
}

pub fn curvature_families() -> [(ScaleFactorFamily, f64); 4] {
    [
        (ScaleFactorFamily::DeSitter { hubble: 1.5 }, 0.8),
        (ScaleFactorFamily::PowerLaw { amplitude: 1.0, exponent: 1.0 }, 1.7),
        (ScaleFactorFamily::PowerLaw { amplitude: 0.5, exponent: 2.0 }, 1.3),
        (ScaleFactorFamily::TanhInterpolated { late: 3.0, width: 0.8 }, 0.35),
    ]
}

fn two_path() -> Measured {
    let mut worst: f64 = 0.0;
    for (family, eta) in curvature_families() {
        let jet = family.jet(eta)?;
        worst = worst.max(pack_deviation(&cosmo::flrw_curvature(&jet), &cosmo::flrw_curvature_generic(&jet, SIGN_4D)));
    }
    Ok(worst)
}

fn desitter_identities() -> Measured {
    let mut worst: f64 = 0.0;
    for (h, eta) in [(1.0, 1.0), (0.3, -2.0), (2.5, 0.1)] {
        let jet = cosmo::desitter_jet(h, eta)?;
        let pack = cosmo::flrw_curvature(&jet);
        let h4 = h * h * h * h;
        worst = worst.max(rel(pack.ricci_scalar, -12.0 * h * h));
        for m in 0..4 {
            let g = pack.metric_diag[m];
            worst = worst.max((pack.h1_diag[m] / g).abs() / h4);
            worst = worst.max(rel(pack.h3_diag[m], 3.0 * h4 * g));
        }
        for species in [FieldSpecies::CONFORMAL_SCALAR, FieldSpecies::MAXWELL] {
            let t = cosmo::desitter_stress_pipeline(h, eta, &StressTensor4::zero(Frame4::FlatConformal), &species)?;
            for m in 0..4 {
                worst = worst.max(rel(t.diag[m], -h4 * species.b() / (960.0 * PI * PI) * pack.metric_diag[m]));
            }
        }
    }
    Ok(worst)
}

fn weyl() -> Measured {
    let mut worst: f64 = 0.0;
    for (family, eta) in curvature_families() {
        let pack = cosmo::flrw_curvature_generic(&family.jet(eta)?, SIGN_4D);
        worst = worst.max(pack.weyl_sq.abs() / pack.ricci_sq.abs().max(1.0));
    }
    Ok(worst)
}

fn trace_4d() -> Measured {
    let mut worst: f64 = 0.0;
    for species in [FieldSpecies::CONFORMAL_SCALAR, FieldSpecies::MAXWELL] {
        for (h, eta) in [(1.0, 1.0), (0.4, 3.0)] {
            let jet = cosmo::desitter_jet(h, eta)?;
            let pack = cosmo::flrw_curvature(&jet);
            let t = cosmo::desitter_stress(h, eta, &StressTensor4::zero(Frame4::FlatConformal), &species)?;
            worst = worst.max(rel(t.trace(&pack.metric_diag), anomaly::anomaly_trace_4d(&species, &pack)));
        }
    }
    Ok(worst)
}

fn conservation() -> Measured {
    let h: f64 = 0.9;
    let family = ScaleFactorFamily::DeSitter { hubble: h };
    let zero = StressTensor4::zero(Frame4::FlatConformal);
    let t0 = cosmo::minkowski_casimir_stress(1.0, &FieldSpecies::MAXWELL)?;
    let mut worst: f64 = 0.0;
    for t in [zero, t0] {
        let div = cosmo::divergence_fd(&family, 1.2, 1e-4, |j| {
            cosmo::desitter_stress(h, j.eta, &t, &FieldSpecies::MAXWELL).map(|s| s.diag).unwrap_or([f64::NAN; 4])
        })?;
        let d = div.iter().fold(0.0f64, |m, x| m.max(x.abs()));
        worst = worst.max(d / h.powi(5));
    }
    Ok(worst)
}

fn flat_limit() -> Measured {
    let cfg = PlatePairConfig::new(0.0, 1.0, FieldSpecies::MAXWELL, 1e-3)?;
    let f = cosmo::desitter_force_unit_scale(&cfg)?;
    Ok(rel(f.total, f.flat_pressure))
}

pub fn run(tol: &Tolerances, tolerance_override: Option<f64>) -> VerifyReport {
    let mut s = Suite { checks: Vec::new() };
    s.add("reg", "damped_sum_equals_minus_one_twelfth", tol.regularization, reg_oracle());
    s.add("reg", "damped_sum_matches_zeta", tol.zeta_agreement, reg_zeta());
    s.add("reg", "euler_maclaurin_matches_zeta", tol.zeta_agreement, reg_euler_maclaurin());
    s.add("coords", "rindler_round_trip", tol.round_trip, round_trip());
    s.add("rindler_cavity", "casimir_energy_closed_form", tol.closed_form, energy_closed_form());
    s.add("rindler_cavity", "energy_force_finite_difference", tol.finite_difference, energy_finite_difference());
    s.add("rindler_cavity", "method_ratio_one_over_aB", tol.method_ratio, method_ratio());
    s.add("rindler_cavity", "local_time_fix_reconciles", tol.method_ratio, local_time_fix());
    // fixed physical threshold, not a numerical tolerance
    s.add("rindler_cavity", "zero_acceleration_limit", 1e-2, zero_acceleration());
    s.add("rindler_cavity", "twoforce_invariant", tol.lorentz, twoforce_invariant());
    s.add("anomaly", "conformal_rederivation", tol.conformal_rederivation, conformal_rederivation());
    s.add("anomaly", "trace_2d", tol.trace_2d, trace_2d());
    s.add("cosmo", "two_path_curvature", tol.two_path_curvature, two_path());
    s.add("cosmo", "desitter_identities", tol.desitter_identity, desitter_identities());
    s.add("cosmo", "weyl_vanishes", tol.weyl, weyl());
    s.add("cosmo", "trace_4d", tol.trace_4d, trace_4d());
    s.add("cosmo", "desitter_stress_conserved", tol.conservation, conservation());
    s.add("cosmo", "desitter_flat_limit", tol.flat_limit, flat_limit());
    let failed = s.checks.iter().filter(|c| !c.passed).count();
    VerifyReport {
        version: VERSION,
        conventions: casimir_core::CONVENTION_NOTE,
        tolerance_override,
        passed: s.checks.len() - failed,
        failed,
        checks: s.checks,
    }
}

pub fn render_text(report: &VerifyReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "verify (casimir {})", report.version);
    if let Some(t) = report.tolerance_override {
        let _ = writeln!(s, "tolerance override: {t:e}");
    }
    for c in &report.checks {
        let _ = writeln!(
            s,
            "  {}  {:<15} {:<38} error {:<10.3e} tol {:.0e}",
            if c.passed { "PASS" } else { "FAIL" },
            c.module,
            c.name,
            c.error,
            c.tolerance
        );
    }
    let _ = writeln!(s, "{}/{} checks passed", report.passed, report.checks.len());
    s
}

pub fn render_csv(report: &VerifyReport) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["module", "check", "error", "tolerance", "passed", "version"])?;
    for c in &report.checks {
        w.write_record([
            c.module,
            c.name,
            &fmt_number(c.error),
            &fmt_number(c.tolerance),
            if c.passed { "true" } else { "false" },
            report.version,
        ])?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv writer emits utf-8"))
}
