//! Runtime configuration: tolerances, bounds and seeds, read from simple
//! `key=value` files.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Config {
    pub root_tol: f64,
    pub series_tol: f64,
    pub subset_tol: f64,
    /// Largest order `n` in the numeric root-of-unity check.
    pub n_max: u32,
    pub max_denominator: u64,
    pub newton_restarts: usize,
    pub seed: u64,
}

impl Default for Config {
    fn default() -> Self {
        Self {
            root_tol: 1e-12,
            series_tol: 1e-7,
            subset_tol: 1e-8,
            n_max: 64,
            max_denominator: 1_000_000,
            newton_restarts: 16,
            seed: 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConfigError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "config line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ConfigError {}

fn parse_value<T: FromStr>(key: &str, v: &str, line: usize) -> Result<T, ConfigError>
where
    T::Err: fmt::Display,
{
    v.parse().map_err(|e| ConfigError {
        line,
        message: format!("bad value for {key}: {e}"),
    })
}

impl Config {
    /// Applies one `key=value` assignment.
    pub fn set(&mut self, key: &str, value: &str, line: usize) -> Result<(), ConfigError> {
        let v = value.trim();
        match key.trim() {
            "root_tol" => self.root_tol = parse_value(key, v, line)?,
            "series_tol" => self.series_tol = parse_value(key, v, line)?,
            "subset_tol" => self.subset_tol = parse_value(key, v, line)?,
            "n_max" => self.n_max = parse_value(key, v, line)?,
            "max_denominator" => self.max_denominator = parse_value(key, v, line)?,
            "newton_restarts" => self.newton_restarts = parse_value(key, v, line)?,
            "seed" => self.seed = parse_value(key, v, line)?,
            other => {
                return Err(ConfigError {
                    line,
                    message: format!("unknown key {other:?}"),
                })
            }
        }
        Ok(())
    }

    /// Every tolerance and count must be positive; the seed is free.
    pub fn validate(&self) -> Result<(), ConfigError> {
        let bad = |k: &str| {
            Err(ConfigError {
                line: 0,
                message: format!("{k} must be positive"),
            })
        };
        for (k, v) in [
            ("root_tol", self.root_tol),
            ("series_tol", self.series_tol),
            ("subset_tol", self.subset_tol),
        ] {
            if !(v.is_finite() && v > 0.0) {
                return bad(k);
            }
        }
        if self.n_max == 0 {
            return bad("n_max");
        }
        if self.max_denominator == 0 {
            return bad("max_denominator");
        }
        if self.newton_restarts == 0 {
            return bad("newton_restarts");
        }
        Ok(())
    }
}

impl FromStr for Config {
    type Err = ConfigError;

    /// Defaults overridden by `key=value` lines; `#` starts a comment.
    fn from_str(text: &str) -> Result<Self, ConfigError> {
        let mut c = Config::default();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line.split_once('=').ok_or_else(|| ConfigError {
                line: i + 1,
                message: format!("expected key=value, got {line:?}"),
            })?;
            c.set(k, v, i + 1)?;
        }
        c.validate()?;
        Ok(c)
    }
}

impl fmt::Display for Config {
    /// `key=value` lines; floats use the shortest round-tripping form.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "root_tol={:e}", self.root_tol)?;
        writeln!(f, "series_tol={:e}", self.series_tol)?;
        writeln!(f, "subset_tol={:e}", self.subset_tol)?;
        writeln!(f, "n_max={}", self.n_max)?;
        writeln!(f, "max_denominator={}", self.max_denominator)?;
        writeln!(f, "newton_restarts={}", self.newton_restarts)?;
        writeln!(f, "seed={}", self.seed)
    }
}
