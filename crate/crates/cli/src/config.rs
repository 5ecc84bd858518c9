//! Plain-text key-value configuration for family generators and caps.
//!
//! Format: one `key = value` pair per line, `#` comments. Keys:
//! `family` (dirichlet | primes | constant:<q> | table), `n`,
//! `tail_start`, `qs` (comma-separated field orders for the table
//! family), `phi_cap`, `theta` (density threshold as `1`, `0.8`, or
//! `4/5`), `seed`. Command-line flags override file values; the file
//! path comes from `--config` or the `CARLITZ_LAB_CONFIG` environment
//! variable.

use carlitz_core::ultra::{self, FilterMode, UltraFieldFamily};
use carlitz_core::Error as CoreError;

/// Fixed default seed so default runs are reproducible.
pub const DEFAULT_SEED: u64 = 0x00c0_ffee;
pub const DEFAULT_PHI_CAP: u64 = carlitz_core::carlitz::DEFAULT_ENUM_CAP;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyChoice {
    Dirichlet,
    Primes,
    Constant(u64),
    Table,
}

#[derive(Clone, Debug)]
pub struct Config {
    pub family: FamilyChoice,
    pub len: usize,
    pub tail_start: usize,
    pub qs: Vec<u64>,
    pub phi_cap: u64,
    /// Density threshold; `None` means strict tail semantics.
    pub theta: Option<(u32, u32)>,
    pub seed: u64,
}

impl Default for Config {
    fn default() -> Config {
        Config {
            family: FamilyChoice::Dirichlet,
            len: 8,
            tail_start: 3,
            qs: Vec::new(),
            phi_cap: DEFAULT_PHI_CAP,
            theta: None,
            seed: DEFAULT_SEED,
        }
    }
}

impl Config {
    /// Parse the key-value format, overriding `self` in place.
    pub fn apply_text(&mut self, text: &str) -> Result<(), String> {
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| format!("line {}: expected key = value", lineno + 1))?;
            let key = key.trim();
            let value = value.trim();
            match key {
                "family" => self.family = parse_family(value)?,
                "n" | "N" => {
                    self.len = value
                        .parse()
                        .map_err(|_| format!("line {}: bad n", lineno + 1))?
                }
                "tail_start" => {
                    self.tail_start = value
                        .parse()
                        .map_err(|_| format!("line {}: bad tail_start", lineno + 1))?
                }
                "qs" => {
                    self.qs = value
                        .split(',')
                        .map(|s| s.trim().parse::<u64>())
                        .collect::<Result<_, _>>()
                        .map_err(|_| format!("line {}: bad qs list", lineno + 1))?
                }
                "phi_cap" | "caps" => {
                    self.phi_cap = value
                        .parse()
                        .map_err(|_| format!("line {}: bad phi_cap", lineno + 1))?
                }
                "theta" => self.theta = Some(parse_theta(value)?),
                "seed" => {
                    self.seed = value
                        .parse()
                        .map_err(|_| format!("line {}: bad seed", lineno + 1))?
                }
                other => return Err(format!("line {}: unknown key '{other}'", lineno + 1)),
            }
        }
        Ok(())
    }

    /// Build the configured field family.
    pub fn build_family(&self) -> Result<UltraFieldFamily, CoreError> {
        let fam = match &self.family {
            FamilyChoice::Dirichlet => ultra::dirichlet_family(self.len, self.tail_start)?,
            FamilyChoice::Primes => {
                ultra::primes_family(self.len, self.tail_start)?
            }
            FamilyChoice::Constant(q) => {
                ultra::constant_family(*q, self.len, self.tail_start)?
            }
            FamilyChoice::Table => {
                ultra::table_family(&self.qs, self.tail_start)?
            }
        };
        match (self.theta, &fam) {
            (Some((num, den)), UltraFieldFamily::Depth1 { trunc, fields }) => {
                let mode = FilterMode::Density { num, den };
                UltraFieldFamily::depth1(trunc.with_mode(mode)?, fields.clone())
            }
            _ => Ok(fam),
        }
    }
}

pub fn parse_family(value: &str) -> Result<FamilyChoice, String> {
    if value == "dirichlet" {
        return Ok(FamilyChoice::Dirichlet);
    }
    if value == "primes" {
        return Ok(FamilyChoice::Primes);
    }
    if value == "table" {
        return Ok(FamilyChoice::Table);
    }
    let inner = value
        .strip_prefix("constant:")
        .or_else(|| value.strip_prefix("constant(").and_then(|s| s.strip_suffix(')')));
    if let Some(q) = inner {
        let q: u64 = q
            .trim()
            .parse()
            .map_err(|_| format!("bad constant family order '{q}'"))?;
        return Ok(FamilyChoice::Constant(q));
    }
    Err(format!(
        "unknown family '{value}' (expected dirichlet | primes | constant:<q> | table)"
    ))
}

pub fn parse_theta(value: &str) -> Result<(u32, u32), String> {
    if let Some((num, den)) = value.split_once('/') {
        let num: u32 = num.trim().parse().map_err(|_| "bad theta".to_string())?;
        let den: u32 = den.trim().parse().map_err(|_| "bad theta".to_string())?;
        if den == 0 || num > den {
            return Err("theta must lie in [0, 1]".into());
        }
        return Ok((num, den));
    }
    if let Some((int, frac)) = value.split_once('.') {
        let int: u32 = int.parse().map_err(|_| "bad theta".to_string())?;
        if frac.len() > 6 {
            return Err("theta precision limited to 6 decimal places".into());
        }
        let scale = 10u32.pow(frac.len() as u32);
        let frac_v: u32 = frac.parse().map_err(|_| "bad theta".to_string())?;
        let num = int * scale + frac_v;
        if num > scale {
            return Err("theta must lie in [0, 1]".into());
        }
        return Ok((num, scale));
    }
    let int: u32 = value.parse().map_err(|_| "bad theta".to_string())?;
    if int > 1 {
        return Err("theta must lie in [0, 1]".into());
    }
    Ok((int, 1))
}
