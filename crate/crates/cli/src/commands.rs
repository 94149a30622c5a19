use casimir_core::anomaly::{self, FieldSpecies, Frame4, Species, StressTensor4};
use casimir_core::coords::{rindler_velocity, CavityConfig};
use casimir_core::cosmo::{self, PlatePairConfig, ScaleFactorFamily, SIGN_4D};
use casimir_core::rindler_cavity::{self as cavity, OutsideState, Plate};

use clap::ValueEnum;

use crate::args::{
    AnomalyTraceArgs, CavityArgs, DesitterForceArgs, Dimension, FamilyArgs, FamilyKind, ForceMethod, Outside, PlateArg,
    RindlerForceArgs, SpeciesArg,
};
use crate::error::CliError;
use crate::record::RunRecord;

pub fn cavity_config(args: &CavityArgs) -> Result<CavityConfig, CliError> {
    let cfg = match (args.right, args.length) {
        (Some(b), None) => CavityConfig::new(args.a, args.left, b)?,
        (None, Some(l)) => CavityConfig::with_length(args.a, args.left, l)?,
        _ => return Err(CliError::Usage("exactly one of --B and --L is required".into())),
    };
    Ok(cfg)
}

fn cavity_inputs(record: &mut RunRecord, args: &CavityArgs, cfg: &CavityConfig) {
    record.input("a", cfg.a()).input("A", cfg.left()).input("B", cfg.right());
    if let Some(l) = args.length {
        record.input("L", l);
    }
}

pub fn species(arg: SpeciesArg) -> FieldSpecies {
    match arg {
        SpeciesArg::Scalar => FieldSpecies::of(Species::ConformalScalar),
        SpeciesArg::Maxwell => FieldSpecies::of(Species::Maxwell),
    }
}

fn species_name(arg: SpeciesArg) -> &'static str {
    match arg {
        SpeciesArg::Scalar => "scalar",
        SpeciesArg::Maxwell => "maxwell",
    }
}

pub fn rindler_force(args: &RindlerForceArgs) -> Result<RunRecord, CliError> {
    let cfg = cavity_config(&args.cavity)?;
    if !args.tau.is_finite() {
        return Err(casimir_core::Error::NonFinite { what: "Rindler time tau" }.into());
    }
    let plate = match args.plate {
        PlateArg::A => Plate::A,
        PlateArg::B => Plate::B,
    };
    let outside = match args.outside {
        Outside::Rindler => OutsideState::RindlerVacuum,
        Outside::Minkowski => OutsideState::MinkowskiVacuum,
    };
    let mut r = RunRecord::new("rindler-force");
    cavity_inputs(&mut r, &args.cavity, &cfg);
    r.input("tau", args.tau)
        .input_text("method", args.method.to_possible_value().expect("no skipped variants").get_name())
        .input_text("outside", if outside == OutsideState::RindlerVacuum { "rindler" } else { "minkowski" })
        .input_text("plate", if plate == Plate::A { "A" } else { "B" });

    let energy = cavity::force_energy_method(&cfg, plate);
    let pressure = cavity::force_pressure_method(&cfg, plate, args.tau, outside);
    let rest = cavity::force_pressure_method(&cfg, plate, 0.0, outside);

    if args.method != ForceMethod::Energy {
        r.output("pressure_force", pressure.total(), "force_pressure_method");
        if outside == OutsideState::MinkowskiVacuum {
            r.output("pressure_cavity", pressure.cavity, "force_pressure_method").output(
                "outside_correction",
                pressure.outside_correction,
                "minkowski_outside_correction",
            );
        }
        let two = cavity::twoforce_boost(rest.total(), rindler_velocity(cfg.a(), args.tau))?;
        r.output("twoforce_t", two.f_t, "twoforce_boost").output("twoforce_x", two.f_x, "twoforce_boost");
    }
    if args.method != ForceMethod::Pressure {
        r.output("energy_force", energy, "force_energy_method");
    }
    if args.method == ForceMethod::Both {
        let fixed = cavity::local_time_fix(energy, &cfg, plate);
        r.output("ratio_pressure_over_energy", rest.cavity / energy, "ratio_at_tau0")
            .output("local_time_fixed_energy_force", fixed, "local_time_fix")
            .output("reconciliation_residual", fixed - rest.cavity, "local_time_fix_minus_pressure_at_tau0");
    }
    Ok(r)
}

pub fn rindler_energy(args: &CavityArgs) -> Result<RunRecord, CliError> {
    let cfg = cavity_config(args)?;
    let mut r = RunRecord::new("rindler-energy");
    cavity_inputs(&mut r, args, &cfg);
    let damped = cavity::casimir_energy_damped(&cfg)?;
    let em = cavity::casimir_energy_euler_maclaurin(&cfg)?;
    r.output("omega_1", cavity::mode_frequency(&cfg, 1)?, "mode_frequency")
        .output("energy_zeta", cavity::casimir_energy(&cfg), "zeta_oracle")
        .output("energy_damped", damped.value, damped.method.tag())
        .output("energy_damped_error_estimate", damped.extrapolation_error_estimate, damped.method.tag())
        .output("energy_euler_maclaurin", em.value, em.method.tag())
        .output("energy_euler_maclaurin_error_estimate", em.extrapolation_error_estimate, em.method.tag());
    Ok(r)
}

pub fn desitter_force(args: &DesitterForceArgs) -> Result<RunRecord, CliError> {
    let sp = species(args.species);
    let mut r = RunRecord::new("desitter-force");
    r.input("z1", args.z1).input("z2", args.z2).input_text("species", species_name(args.species));
    if args.flat_limit {
        let d = args.z2 - args.z1;
        let flat = cosmo::minkowski_casimir_pressure(d, &sp)?;
        r.input_text("limit", "H->0 along eta=1/H");
        r.output("flat_pressure", flat, "minkowski_casimir_pressure")
            .output("conformal_casimir", flat, "flat_limit")
            .output("anomaly", 0.0, "flat_limit")
            .output("total", flat, "flat_limit");
        return Ok(r);
    }
    let h = args.hubble.expect("clap requires --H without --flat-limit");
    if !(h > 0.0) {
        return Err(CliError::Usage(format!("H must be positive, got {h}; use --flat-limit for the H -> 0 limit")));
    }
    r.input("H", h).input("eta", args.eta);
    let cfg = PlatePairConfig::new(args.z1, args.z2, sp, h)?;
    let f = cosmo::desitter_force(&cfg, args.eta)?;
    r.output("flat_pressure", f.flat_pressure, "minkowski_casimir_pressure")
        .output("conformal_casimir", f.conformal_casimir, "desitter_force:H2eta2_F_mink")
        .output("anomaly", f.anomaly, "desitter_force:H4b_over_960pi2")
        .output("total", f.total, "desitter_force");
    Ok(r)
}

pub fn family(args: &FamilyArgs) -> ScaleFactorFamily {
    match args.family {
        FamilyKind::Desitter => ScaleFactorFamily::DeSitter { hubble: args.hubble },
        FamilyKind::PowerLaw => ScaleFactorFamily::PowerLaw { amplitude: args.amplitude, exponent: args.exponent },
        FamilyKind::Tanh => ScaleFactorFamily::TanhInterpolated { late: args.late, width: args.width },
    }
}

fn family_inputs(r: &mut RunRecord, args: &FamilyArgs) {
    r.input("eta", args.eta);
    match args.family {
        FamilyKind::Desitter => {
            r.input_text("family", "desitter").input("H", args.hubble);
        }
        FamilyKind::PowerLaw => {
            r.input_text("family", "power-law").input("amplitude", args.amplitude).input("exponent", args.exponent);
        }
        FamilyKind::Tanh => {
            r.input_text("family", "tanh").input("late", args.late).input("width", args.width);
        }
    }
}

/// Largest componentwise deviation between two packs, relative to the
/// largest magnitude in the first.
pub fn pack_deviation(p: &anomaly::CurvaturePack, q: &anomaly::CurvaturePack) -> f64 {
    let flat = |c: &anomaly::CurvaturePack| {
        let mut v = Vec::with_capacity(15);
        v.extend_from_slice(&c.ricci_diag);
        v.extend_from_slice(&c.h1_diag);
        v.extend_from_slice(&c.h3_diag);
        v.extend_from_slice(&[c.ricci_scalar, c.ricci_sq, c.box_r]);
        v
    };
    let (a, b) = (flat(p), flat(q));
    let scale = a.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    if scale == 0.0 {
        return b.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    }
    a.iter().zip(&b).fold(0.0f64, |m, (x, y)| m.max((x - y).abs())) / scale
}

pub fn flrw_curvature(args: &FamilyArgs) -> Result<RunRecord, CliError> {
    let jet = family(args).jet(args.eta)?;
    let printed = cosmo::flrw_curvature(&jet);
    let generic = cosmo::flrw_curvature_generic(&jet, SIGN_4D);
    let mut r = RunRecord::new("flrw-curvature");
    family_inputs(&mut r, args);
    let m = "flrw_curvature";
    r.output("a", jet.derivs[0], "scale_factor_jet")
        .output("R", printed.ricci_scalar, m)
        .output("ricci_eta_eta", printed.ricci_diag[0], m)
        .output("ricci_ii", printed.ricci_diag[1], m)
        .output("ricci_square", printed.ricci_sq, m)
        .output("box_R", printed.box_r, m)
        .output("H1_eta_eta", printed.h1_diag[0], m)
        .output("H1_ii", printed.h1_diag[1], m)
        .output("H3_eta_eta", printed.h3_diag[0], m)
        .output("H3_ii", printed.h3_diag[1], m)
        .output("weyl_square", generic.weyl_sq, "flrw_curvature_generic")
        .output("two_path_deviation", pack_deviation(&printed, &generic), "flrw_curvature_generic");
    Ok(r)
}

pub fn anomaly_trace(args: &AnomalyTraceArgs) -> Result<RunRecord, CliError> {
    let mut r = RunRecord::new("anomaly-trace");
    match args.dim {
        Dimension::Two => {
            let ricci = args.ricci_scalar.expect("clap requires --R with --dim 2");
            if !ricci.is_finite() {
                return Err(casimir_core::Error::NonFinite { what: "Ricci scalar R" }.into());
            }
            r.input("dim", 2.0).input("R", ricci);
            r.output("trace", anomaly::anomaly_trace_2d(ricci), "anomaly_trace_2d");
        }
        Dimension::Four => {
            let sp = species(args.species);
            let jet = family(&args.background).jet(args.background.eta)?;
            let pack = cosmo::flrw_curvature(&jet);
            r.input("dim", 4.0).input_text("species", species_name(args.species));
            family_inputs(&mut r, &args.background);
            let law =
                anomaly::transform_stress_4d(&StressTensor4::zero(Frame4::FlatConformal), jet.sigma(), &pack, &sp)?;
            r.output("trace", anomaly::anomaly_trace_4d(&sp, &pack), "anomaly_trace_4d").output(
                "transformation_law_trace",
                law.trace(&pack.metric_diag),
                "transform_stress_4d",
            );
        }
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    fn cav(a: f64, left: f64, right: f64) -> CavityArgs {
        CavityArgs { a, left, right: Some(right), length: None }
    }

    fn force_args(tau: f64, outside: Outside) -> RindlerForceArgs {
        RindlerForceArgs { cavity: cav(1.0, 1.0, 2.0), tau, method: ForceMethod::Both, outside, plate: PlateArg::B }
    }

    #[test]
    fn rindler_force_example() {
        let r = rindler_force(&force_args(0.0, Outside::Rindler)).unwrap();
        let l2 = 2f64.ln().powi(2);
        assert_relative_eq!(r.get("pressure_force").unwrap(), -PI / (96.0 * l2), max_relative = 1e-14);
        assert_relative_eq!(r.get("energy_force").unwrap(), -PI / (48.0 * l2), max_relative = 1e-14);
        assert_relative_eq!(r.get("ratio_pressure_over_energy").unwrap(), 0.5, max_relative = 1e-14);
        assert!(r.get("reconciliation_residual").unwrap().abs() < 1e-16);
        assert!(r.outputs.iter().all(|o| !o.method.is_empty()));
    }

    #[test]
    fn tau_scales_pressure_by_cosh() {
        let r0 = rindler_force(&force_args(0.0, Outside::Rindler)).unwrap();
        let r1 = rindler_force(&force_args(1.0, Outside::Rindler)).unwrap();
        assert_relative_eq!(
            r1.get("pressure_force").unwrap(),
            r0.get("pressure_force").unwrap() * 1f64.cosh(),
            max_relative = 1e-14
        );
        assert_eq!(r1.get("energy_force"), r0.get("energy_force"));
    }

    #[test]
    fn minkowski_outside_reports_correction() {
        let r = rindler_force(&force_args(0.0, Outside::Minkowski)).unwrap();
        assert_relative_eq!(r.get("outside_correction").unwrap(), -1.0 / (24.0 * PI * 4.0), max_relative = 1e-14);
    }

    #[test]
    fn inverted_mirrors_rejected() {
        let mut args = force_args(0.0, Outside::Rindler);
        args.cavity = cav(1.0, 1.0, 0.5);
        let err = rindler_force(&args).unwrap_err();
        assert_eq!(err.kind(), "mirror_order");
        assert_eq!(err.exit_code(), 1);
    }

    #[test]
    fn desitter_force_example() {
        let args = DesitterForceArgs {
            hubble: Some(1.0),
            eta: 1.0,
            z1: 0.0,
            z2: 1.0,
            species: SpeciesArg::Maxwell,
            flat_limit: false,
        };
        let r = desitter_force(&args).unwrap();
        assert_relative_eq!(r.get("conformal_casimir").unwrap(), -PI * PI / 240.0, max_relative = 1e-14);
        assert_relative_eq!(r.get("anomaly").unwrap(), -62.0 / (960.0 * PI * PI), max_relative = 1e-14);
        assert_relative_eq!(r.get("total").unwrap(), -0.047_667, max_relative = 1e-4);
        let scalar = desitter_force(&DesitterForceArgs { species: SpeciesArg::Scalar, ..args.clone() }).unwrap();
        assert_relative_eq!(scalar.get("anomaly").unwrap(), -1.0 / (960.0 * PI * PI), max_relative = 1e-14);
        let zero = desitter_force(&DesitterForceArgs { hubble: Some(0.0), ..args }).unwrap_err();
        assert!(zero.to_string().contains("--flat-limit"));
    }

    #[test]
    fn flrw_curvature_two_paths_agree() {
        let args = FamilyArgs {
            family: FamilyKind::Tanh,
            eta: 0.3,
            hubble: 1.0,
            amplitude: 1.0,
            exponent: 2.0,
            late: 3.0,
            width: 0.7,
        };
        let r = flrw_curvature(&args).unwrap();
        assert!(r.get("two_path_deviation").unwrap() < 1e-10);
    }

    #[test]
    fn anomaly_trace_four_dimensional_desitter() {
        let args = AnomalyTraceArgs {
            dim: Dimension::Four,
            ricci_scalar: None,
            species: SpeciesArg::Maxwell,
            background: FamilyArgs {
                family: FamilyKind::Desitter,
                eta: 2.0,
                hubble: 0.5,
                amplitude: 1.0,
                exponent: 2.0,
                late: 2.0,
                width: 1.0,
            },
        };
        let r = anomaly_trace(&args).unwrap();
        let expected = 62.0 * 0.5f64.powi(4) / (240.0 * PI * PI);
        assert_relative_eq!(r.get("trace").unwrap(), expected, max_relative = 1e-10);
        assert_relative_eq!(r.get("transformation_law_trace").unwrap(), expected, max_relative = 1e-10);
    }
}
