use clap::{CommandFactory, Parser};
use rayon::prelude::*;

use crate::args::{Cli, Command, Scale, SweepArgs};
use crate::error::CliError;
use crate::record::RunRecord;

#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub parameter: String,
    pub start: f64,
    pub stop: f64,
    pub count: usize,
    pub scale: Scale,
}

impl SweepSpec {
    pub fn new(parameter: &str, start: f64, stop: f64, count: usize, scale: Scale) -> Result<Self, CliError> {
        if count < 2 {
            return Err(CliError::Usage(format!("sweep count must be at least 2, got {count}")));
        }
        if !(start.is_finite() && stop.is_finite()) {
            return Err(CliError::Usage("sweep bounds must be finite".into()));
        }
        if !(start < stop) {
            return Err(CliError::Usage(format!("sweep requires start < stop, got {start} and {stop}")));
        }
        if scale == Scale::Log && !(start > 0.0) {
            return Err(CliError::Usage(format!("log sweep requires start > 0, got {start}")));
        }
        Ok(SweepSpec { parameter: parameter.to_owned(), start, stop, count, scale })
    }

    /// Grid values, endpoints exact. Log grids interpolate the base-10
    /// exponent so that decades land on round numbers.
    pub fn grid(&self) -> Vec<f64> {
        let n = (self.count - 1) as f64;
        let lerp = |lo: f64, hi: f64, i: usize| (lo * (n - i as f64) + hi * i as f64) / n;
        (0..self.count)
            .map(|i| match self.scale {
                _ if i == 0 => self.start,
                _ if i == self.count - 1 => self.stop,
                Scale::Linear => lerp(self.start, self.stop, i),
                Scale::Log => 10f64.powf(lerp(self.start.log10(), self.stop.log10(), i)),
            })
            .collect()
    }
}

/// Check that `param` names a value-taking input of the base subcommand.
fn check_parameter(base: &str, param: &str) -> Result<(), CliError> {
    let cmd = Cli::command();
    let sub = cmd.find_subcommand(base).ok_or_else(|| CliError::Usage(format!("unknown base command `{base}`")))?;
    let known = sub.get_arguments().any(|a| a.get_long() == Some(param) && a.get_action().takes_values());
    if known {
        Ok(())
    } else {
        Err(CliError::Usage(format!("`{param}` is not a numeric input of `{base}`")))
    }
}

pub fn run<F>(args: &SweepArgs, evaluate: F) -> Result<Vec<RunRecord>, CliError>
where
    F: Fn(&Command) -> Result<RunRecord, CliError> + Sync,
{
    let spec = SweepSpec::new(&args.param, args.start, args.stop, args.count, args.scale)?;
    let base_name = args.base[0].as_str();
    if matches!(base_name, "sweep" | "verify") {
        return Err(CliError::Usage(format!("`{base_name}` cannot be swept")));
    }
    check_parameter(base_name, &spec.parameter)?;

    // Parse every grid point up front so that usage errors surface before
    // any evaluation.
    let commands = spec
        .grid()
        .into_iter()
        .map(|value| {
            let mut argv = vec!["casimir".to_owned()];
            argv.extend(args.base.iter().cloned());
            argv.push(format!("--{}={value}", spec.parameter));
            Cli::try_parse_from(&argv).map(|cli| cli.command).map_err(|e| CliError::Usage(e.to_string()))
        })
        .collect::<Result<Vec<_>, _>>()?;

    // `collect` keeps grid order whatever order the workers finish in.
    let results: Vec<Result<RunRecord, CliError>> = commands.par_iter().map(&evaluate).collect();
    results
        .into_iter()
        .enumerate()
        .map(|(i, r)| {
            r.map(|mut rec| {
                rec.index = Some(i);
                rec
            })
        })
        .collect()
}
