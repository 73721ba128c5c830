// Copyright 2026 The dephasing Authors
// SPDX-License-Identifier: Apache-2.0

//! `--config` files: one `key=value` per line, `#` comments. Each entry
//! becomes `--key=value` placed right after the subcommand, so flags given
//! on the command line (which come later) override it.

use crate::error::CliError;
use std::ffi::OsString;
use std::fs;
use std::path::PathBuf;

fn config_path(args: &[OsString]) -> Option<PathBuf> {
    let mut iter = args.iter().skip(1);
    while let Some(arg) = iter.next() {
        let arg = arg.to_string_lossy();
        if arg == "--" {
            break;
        }
        if arg == "--config" {
            return iter.next().map(PathBuf::from);
        }
        if let Some(path) = arg.strip_prefix("--config=") {
            return Some(PathBuf::from(path));
        }
    }
    None
}

pub fn parse_config(text: &str) -> Result<Vec<OsString>, CliError> {
    let mut out = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| CliError::Usage(format!("config line {}: expected key=value", n + 1)))?;
        let key = key.trim().trim_start_matches("--");
        if key.is_empty() || key == "config" {
            return Err(CliError::Usage(format!("config line {}: invalid key '{key}'", n + 1)));
        }
        out.push(OsString::from(format!("--{key}={}", value.trim())));
    }
    Ok(out)
}

/// Position of the subcommand, skipping global flags and their values.
fn subcommand_index(args: &[OsString]) -> Option<usize> {
    let mut i = 1;
    while i < args.len() {
        let arg = args[i].to_string_lossy();
        if arg == "--config" || arg == "--threads" {
            i += 2;
        } else if arg.starts_with('-') {
            i += 1;
        } else {
            return Some(i);
        }
    }
    None
}

/// Splices the flags of the `--config` file (if any) after the subcommand.
pub fn expand(args: Vec<OsString>) -> Result<Vec<OsString>, CliError> {
    let Some(path) = config_path(&args) else {
        return Ok(args);
    };
    let text = fs::read_to_string(&path).map_err(|source| CliError::Io { path: path.clone(), source })?;
    let injected = parse_config(&text)?;
    let Some(sub) = subcommand_index(&args) else {
        return Ok(args);
    };
    let at = sub + 1;
    let mut out = args;
    out.splice(at..at, injected);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn os(v: &[&str]) -> Vec<OsString> {
        v.iter().map(OsString::from).collect()
    }

    #[test]
    fn parses_lines() {
        let flags = parse_config("# recipe\n a = 0.05\n\ngamma=0.001\n--theta=pi/2\n").unwrap();
        assert_eq!(flags, os(&["--a=0.05", "--gamma=0.001", "--theta=pi/2"]));
        assert!(parse_config("steps 10").is_err());
        assert!(parse_config("config=x").is_err());
    }

    #[test]
    fn injects_after_subcommand() {
        let args = os(&["bin", "--threads", "2", "eval", "rtn", "--config", "x"]);
        assert_eq!(subcommand_index(&args), Some(3));
        assert_eq!(subcommand_index(&os(&["bin", "--config=x"])), None);
    }

    #[test]
    fn finds_path() {
        assert_eq!(config_path(&os(&["bin", "sweep", "--config", "r.cfg"])), Some(PathBuf::from("r.cfg")));
        assert_eq!(config_path(&os(&["bin", "--config=r.cfg", "sweep"])), Some(PathBuf::from("r.cfg")));
        assert_eq!(config_path(&os(&["bin", "sweep"])), None);
    }
}
