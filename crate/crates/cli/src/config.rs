//! `key = value` config files, spliced into the argument list right after
//! the subcommand so that explicit flags, which come later, win.

use std::ffi::OsString;
use std::fs;
use std::path::Path;

use crate::error::CliError;

/// Global options that consume the following argument.
const GLOBAL_WITH_VALUE: [&str; 3] = ["--config", "--tol", "--out"];

pub fn parse_config(text: &str) -> Result<Vec<OsString>, CliError> {
    let mut args = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(CliError::Usage(format!("config line {}: expected `key = value`", lineno + 1)));
        };
        let key = key.trim().trim_start_matches("--");
        let value = value.trim();
        if key.is_empty() {
            return Err(CliError::Usage(format!("config line {}: empty key", lineno + 1)));
        }
        if key == "config" {
            return Err(CliError::Usage(format!("config line {}: nested config files are not supported", lineno + 1)));
        }
        match value {
            "true" => args.push(format!("--{key}").into()),
            "false" => {}
            _ => args.push(format!("--{key}={value}").into()),
        }
    }
    Ok(args)
}

/// Locate `--config`, read it and splice its flags in. Returns the
/// arguments unchanged when no config is given.
pub fn expand(args: Vec<OsString>) -> Result<Vec<OsString>, CliError> {
    let mut path = None;
    let mut subcommand_at = None;
    let mut i = 1;
    while i < args.len() {
        let arg = args[i].to_string_lossy();
        if let Some(p) = arg.strip_prefix("--config=") {
            path.get_or_insert_with(|| p.to_owned());
        } else if arg == "--config" {
            if let Some(p) = args.get(i + 1) {
                path.get_or_insert_with(|| p.to_string_lossy().into_owned());
            }
            i += 1;
        } else if GLOBAL_WITH_VALUE.contains(&arg.as_ref()) {
            i += 1;
        } else if !arg.starts_with('-') && subcommand_at.is_none() {
            subcommand_at = Some(i);
            // a sweep's base command carries its own flags; stop scanning
            break;
        }
        i += 1;
    }
    // `--config` may also follow the subcommand
    if path.is_none() {
        if let Some(at) = subcommand_at {
            let mut j = at + 1;
            while j < args.len() {
                let arg = args[j].to_string_lossy();
                if let Some(p) = arg.strip_prefix("--config=") {
                    path = Some(p.to_owned());
                    break;
                }
                if arg == "--config" {
                    path = args.get(j + 1).map(|p| p.to_string_lossy().into_owned());
                    break;
                }
                j += 1;
            }
        }
    }
    let (Some(path), Some(at)) = (path, subcommand_at) else {
        return Ok(args);
    };
    let text = read(Path::new(&path))?;
    let extra = parse_config(&text)?;
    let mut out = args;
    out.splice(at + 1..at + 1, extra);
    Ok(out)
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read config {}: {e}", path.display())))
}
