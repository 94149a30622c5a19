use std::f64::consts::PI;

use approx::assert_relative_eq;
use proptest::prelude::*;

use casimir_core::anomaly::{self, FieldSpecies, Frame4, StressTensor4};
use casimir_core::coords::CavityConfig;
use casimir_core::cosmo::{self, PlatePairConfig, ScaleFactorFamily};
use casimir_core::rindler_cavity::{self as cavity, OutsideState, Plate};
use casimir_core::Error;

#[test]
fn energy_is_scale_invariant_and_forces_scale_inversely() {
    let c = CavityConfig::new(1.3, 0.7, 2.9).unwrap();
    let s = c.scaled(4.0).unwrap();
    assert_relative_eq!(cavity::casimir_energy(&c), cavity::casimir_energy(&s), max_relative = 1e-14);
    for plate in [Plate::A, Plate::B] {
        assert_relative_eq!(
            cavity::force_energy_method(&c, plate),
            4.0 * cavity::force_energy_method(&s, plate),
            max_relative = 1e-13
        );
    }
}

#[test]
fn plate_forces_have_opposite_signs() {
    let c = CavityConfig::new(1.0, 1.0, 3.0).unwrap();
    let fa = cavity::force_energy_method(&c, Plate::A);
    let fb = cavity::force_energy_method(&c, Plate::B);
    assert!(fa > 0.0 && fb < 0.0);
    // E depends only on B/A, so A·F_A + B·F_B = 0
    assert_relative_eq!(c.left() * fa + c.right() * fb, 0.0, epsilon = 1e-15);
}

#[test]
fn three_regularizations_agree() {
    let c = CavityConfig::new(0.8, 1.5, 4.0).unwrap();
    let zeta = cavity::casimir_energy(&c);
    assert_relative_eq!(cavity::casimir_energy_damped(&c).unwrap().value, zeta, max_relative = 1e-9);
    assert_relative_eq!(cavity::casimir_energy_euler_maclaurin(&c).unwrap().value, zeta, max_relative = 1e-9);
}

#[test]
fn conformal_route_matches_direct_pressure_with_minkowski_outside() {
    let c = CavityConfig::new(1.2, 1.0, 2.5).unwrap();
    for plate in [Plate::A, Plate::B] {
        for tau in [-0.7, 0.0, 0.4] {
            let direct = cavity::force_pressure_method(&c, plate, tau, OutsideState::MinkowskiVacuum);
            let law = anomaly::rindler_plate_force_conformal(&c, plate, tau, OutsideState::MinkowskiVacuum).unwrap();
            assert_relative_eq!(law.cavity, direct.cavity, max_relative = 1e-12);
            assert_relative_eq!(law.total(), direct.total(), max_relative = 1e-12);
        }
    }
}

#[test]
fn invalid_cavities_are_rejected() {
    assert!(matches!(CavityConfig::new(1.0, 2.0, 1.0), Err(Error::MirrorOrder { .. })));
    assert!(CavityConfig::new(0.0, 1.0, 2.0).is_err());
    assert!(CavityConfig::new(1.0, -1.0, 2.0).is_err());
    assert!(CavityConfig::new(f64::NAN, 1.0, 2.0).is_err());
}

#[test]
fn desitter_force_total_is_sum_of_addends() {
    for species in [FieldSpecies::CONFORMAL_SCALAR, FieldSpecies::MAXWELL] {
        let cfg = PlatePairConfig::new(0.0, 0.5, species, 2.0).unwrap();
        let f = cosmo::desitter_force(&cfg, 0.3).unwrap();
        assert_relative_eq!(f.total, f.conformal_casimir + f.anomaly, max_relative = 1e-15);
        let b = species.b();
        assert_relative_eq!(f.anomaly, 16.0 * b / (960.0 * PI * PI), max_relative = 1e-14);
    }
}

#[test]
fn anomaly_stress_is_independent_of_eta_on_desitter() {
    let zero = StressTensor4::zero(Frame4::FlatConformal);
    let h = 0.7;
    let mut values = Vec::new();
    for eta in [0.2, 1.0, 5.0] {
        let t = cosmo::desitter_stress(h, eta, &zero, &FieldSpecies::MAXWELL).unwrap();
        let jet = cosmo::desitter_jet(h, eta).unwrap();
        // mixed component T^0_0 = T_00 / g_00
        values.push(t.diag[0] / cosmo::flrw_curvature(&jet).metric_diag[0]);
    }
    assert_relative_eq!(values[0], values[1], max_relative = 1e-12);
    assert_relative_eq!(values[1], values[2], max_relative = 1e-12);
}

proptest! {
    #[test]
    fn ratio_of_methods_is_one_over_a_b(a in 0.1f64..5.0, left in 0.1f64..3.0, gap in 0.05f64..5.0) {
        let c = CavityConfig::new(a, left, left + gap).unwrap();
        let e = cavity::force_energy_method(&c, Plate::B);
        let p = cavity::force_pressure_method(&c, Plate::B, 0.0, OutsideState::RindlerVacuum).cavity;
        prop_assert!(((p / e) * a * c.right() - 1.0).abs() < 1e-12);
        prop_assert!((cavity::local_time_fix(e, &c, Plate::B) / p - 1.0).abs() < 1e-12);
    }

    #[test]
    fn pressure_grows_as_cosh_tau(tau in -3.0f64..3.0) {
        let c = CavityConfig::new(0.9, 1.0, 2.0).unwrap();
        let p0 = cavity::force_pressure_method(&c, Plate::B, 0.0, OutsideState::RindlerVacuum).cavity;
        let p = cavity::force_pressure_method(&c, Plate::B, tau, OutsideState::RindlerVacuum).cavity;
        prop_assert!((p / p0 - (0.9 * tau).cosh()).abs() < 1e-12 * (0.9 * tau).cosh());
    }

    #[test]
    fn power_law_curvature_two_paths(amp in 0.2f64..3.0, p in 0.5f64..3.0, eta in 0.3f64..4.0) {
        let jet = ScaleFactorFamily::PowerLaw { amplitude: amp, exponent: p }.jet(eta).unwrap();
        let a = cosmo::flrw_curvature(&jet);
        let b = cosmo::flrw_curvature_generic(&jet, cosmo::SIGN_4D);
        let scale = a.ricci_scalar.abs().max(1e-300);
        prop_assert!((a.ricci_scalar - b.ricci_scalar).abs() <= 1e-9 * scale);
    }

    #[test]
    fn four_d_trace_matches_anomaly(h in 0.1f64..3.0, eta in 0.1f64..5.0) {
        let jet = cosmo::desitter_jet(h, eta).unwrap();
        let pack = cosmo::flrw_curvature(&jet);
        let t = cosmo::desitter_stress(h, eta, &StressTensor4::zero(Frame4::FlatConformal), &FieldSpecies::CONFORMAL_SCALAR).unwrap();
        let expected = h.powi(4) / (240.0 * PI * PI);
        prop_assert!((t.trace(&pack.metric_diag) - expected).abs() < 1e-10 * expected);
    }
}
