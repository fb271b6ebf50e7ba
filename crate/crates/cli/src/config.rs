//! `key = value` config files, merged under the command-line flags.

use std::fs;
use std::path::Path;

use crate::error::{CliError, CliResult};

/// Parsed entries, in file order.
pub fn parse(text: &str) -> CliResult<Vec<(String, String)>> {
    let mut out: Vec<(String, String)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| {
            CliError::usage(format!("config line {}: expected `key = value`", i + 1))
        })?;
        let key = key.trim().trim_start_matches("--").to_owned();
        if key.is_empty()
            || !key
                .chars()
                .all(|c| c.is_ascii_alphanumeric() || c == '-' || c == '_')
        {
            return Err(CliError::usage(format!(
                "config line {}: bad key `{key}`",
                i + 1
            )));
        }
        if out.iter().any(|(k, _)| *k == key) {
            return Err(CliError::usage(format!(
                "config line {}: duplicate key `{key}`",
                i + 1
            )));
        }
        out.push((key, value.trim().to_owned()));
    }
    Ok(out)
}

fn flag_given(args: &[String], key: &str) -> bool {
    let flag = format!("--{key}");
    let with_eq = format!("{flag}=");
    args.iter().any(|a| *a == flag || a.starts_with(&with_eq))
}

/// Path given via `--config`, if any.
pub fn config_path(args: &[String]) -> CliResult<Option<String>> {
    let mut it = args.iter();
    while let Some(a) = it.next() {
        if a == "--config" {
            return it
                .next()
                .cloned()
                .map(Some)
                .ok_or_else(|| CliError::usage("--config needs a path"));
        }
        if let Some(p) = a.strip_prefix("--config=") {
            return Ok(Some(p.to_owned()));
        }
    }
    Ok(None)
}

/// Appends config entries as flags unless the command line already sets them.
/// Unknown keys surface later as unknown-argument errors.
pub fn merge(mut args: Vec<String>, entries: &[(String, String)]) -> Vec<String> {
    let given: Vec<String> = args.clone();
    for (key, value) in entries {
        if key == "config" || flag_given(&given, key) {
            continue;
        }
        match value.as_str() {
            "true" => args.push(format!("--{key}")),
            "false" => {}
            _ => args.push(format!("--{key}={value}")),
        }
    }
    args
}

pub fn apply(args: Vec<String>) -> CliResult<Vec<String>> {
    match config_path(&args)? {
        None => Ok(args),
        Some(path) => {
            let text = fs::read_to_string(Path::new(&path))
                .map_err(|e| CliError::usage(format!("cannot read config `{path}`: {e}")))?;
            Ok(merge(args, &parse(&text)?))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn argv(s: &str) -> Vec<String> {
        s.split_whitespace().map(str::to_owned).collect()
    }

    #[test]
    fn flags_override_file() {
        let entries =
            parse("n-in = 1\n# comment\nn-out = 2 # trailing\nplanck-overlay = true\n").unwrap();
        let merged = merge(argv("dce spectrum --n-in 1.5"), &entries);
        assert_eq!(
            merged,
            argv("dce spectrum --n-in 1.5 --n-out=2 --planck-overlay")
        );
    }

    #[test]
    fn malformed_lines_are_usage_errors() {
        assert!(parse("n-in 1").is_err());
        assert!(parse("a = 1\na = 2").is_err());
        assert!(parse("bad key = 1").is_err());
    }

    #[test]
    fn finds_config_path() {
        assert_eq!(
            config_path(&argv("dce --config x.cfg budget"))
                .unwrap()
                .as_deref(),
            Some("x.cfg")
        );
        assert_eq!(
            config_path(&argv("dce budget --config=y"))
                .unwrap()
                .as_deref(),
            Some("y")
        );
        assert!(config_path(&argv("dce budget --config")).is_err());
    }
}
