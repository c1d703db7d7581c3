//! Flat `key=value` run configuration.
//!
//! Layers, lowest priority first: built-in defaults, the file named by
//! `NUSPECTRA_DEFAULTS`, `--config`, then command-line flags. Keys are the
//! flag names without the leading dashes (`n-max`, `rmax-factor`, ...);
//! underscores are accepted in place of dashes. Unknown keys are rejected.

use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};

use nuspectra::batch::{GridSpec, LimitingSpec, SweepParam};
use nuspectra::radial::PotentialParams;
use nuspectra::validate::Suite;
use nuspectra::Execution;

pub const ENV_DEFAULTS: &str = "NUSPECTRA_DEFAULTS";

pub const KEYS: &[&str] = &[
    "D",
    "A",
    "B",
    "lambda",
    "gamma",
    "zeta",
    "kappa",
    "mu",
    "hbar",
    "n-max",
    "l-max",
    "numeric",
    "format",
    "out",
    "rmax-factor",
    "grid-points",
    "suite",
    "n",
    "l",
    "seed",
    "sequential",
    "limiting-omega",
    "limiting-alpha",
    "limiting-rmax",
];

const POTENTIAL_KEYS: [(&str, SweepParam); 8] = [
    ("A", SweepParam::A),
    ("B", SweepParam::B),
    ("lambda", SweepParam::Lambda),
    ("gamma", SweepParam::Gamma),
    ("zeta", SweepParam::Zeta),
    ("kappa", SweepParam::Kappa),
    ("mu", SweepParam::Mu),
    ("hbar", SweepParam::Hbar),
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfigError(pub String);

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for ConfigError {}

fn err(msg: impl Into<String>) -> ConfigError {
    ConfigError(msg.into())
}

fn canonical_key(raw: &str) -> Option<&'static str> {
    let k = raw.trim().replace('_', "-");
    KEYS.iter().copied().find(|known| *known == k)
}

/// Unresolved key → value text, one layer.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Layer(BTreeMap<&'static str, String>);

impl Layer {
    pub fn parse(text: &str, origin: &str) -> Result<Self, ConfigError> {
        let mut map = BTreeMap::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| err(format!("{origin}:{}: expected key=value, got '{line}'", i + 1)))?;
            let key = canonical_key(k).ok_or_else(|| err(format!("{origin}:{}: unknown key '{}'", i + 1, k.trim())))?;
            if map.insert(key, v.trim().to_string()).is_some() {
                return Err(err(format!("{origin}:{}: duplicate key '{key}'", i + 1)));
            }
        }
        Ok(Self(map))
    }

    pub fn read(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|e| err(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text, &path.display().to_string())
    }

    pub fn set(&mut self, key: &str, value: impl Into<String>) -> Result<(), ConfigError> {
        let key = canonical_key(key).ok_or_else(|| err(format!("unknown key '{key}'")))?;
        self.0.insert(key, value.into());
        Ok(())
    }

    /// `other` wins on shared keys.
    pub fn overlay(mut self, other: Layer) -> Self {
        self.0.extend(other.0);
        self
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.0.get(key).map(String::as_str)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

/// A fully resolved run configuration.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub params: PotentialParams,
    /// Whether any potential or unit key was given (validate then also checks
    /// that point).
    pub params_given: bool,
    /// The one parameter given as a list or range, if any.
    pub ranged: Option<(SweepParam, Vec<f64>)>,
    pub dim: u32,
    pub n_max: u32,
    pub l_max: u32,
    pub numeric: bool,
    pub format: Option<Format>,
    pub out: Option<PathBuf>,
    pub grid: GridSpec,
    pub suite: Suite,
    pub n: u32,
    pub l: u32,
    pub seed: u64,
    pub execution: Execution,
    pub limiting: Option<LimitingSpec>,
}

fn number<T: std::str::FromStr>(layer: &Layer, key: &str, default: T) -> Result<T, ConfigError> {
    match layer.get(key) {
        None => Ok(default),
        Some(v) => v.parse().map_err(|_| err(format!("{key}: cannot parse '{v}'"))),
    }
}

fn boolean(layer: &Layer, key: &str) -> Result<bool, ConfigError> {
    match layer.get(key) {
        None | Some("false") | Some("0") => Ok(false),
        Some("true") | Some("1") => Ok(true),
        Some(v) => Err(err(format!("{key}: expected true or false, got '{v}'"))),
    }
}

/// A single value, a comma list `0.2,0.1,0.05`, or an inclusive linear
/// range `start:stop:count`.
pub fn parse_values(key: &str, text: &str) -> Result<Vec<f64>, ConfigError> {
    let bad = || err(format!("{key}: cannot parse '{text}'"));
    let parts: Vec<&str> = text.split(':').collect();
    let values = match parts.as_slice() {
        [single] => single
            .split(',')
            .map(|s| s.trim().parse::<f64>().map_err(|_| bad()))
            .collect::<Result<Vec<_>, _>>()?,
        [start, stop, count] => {
            let start: f64 = start.trim().parse().map_err(|_| bad())?;
            let stop: f64 = stop.trim().parse().map_err(|_| bad())?;
            let count: usize = count.trim().parse().map_err(|_| bad())?;
            if count == 0 {
                return Err(err(format!("{key}: range needs at least one step")));
            }
            if count == 1 {
                vec![start]
            } else {
                (0..count)
                    .map(|i| start + (stop - start) * i as f64 / (count - 1) as f64)
                    .collect()
            }
        }
        _ => return Err(bad()),
    };
    if values.iter().any(|v| !v.is_finite()) {
        return Err(err(format!("{key}: values must be finite")));
    }
    Ok(values)
}

impl RunConfig {
    pub fn resolve(layer: &Layer) -> Result<Self, ConfigError> {
        let mut params = PotentialParams::default();
        let mut ranged = Vec::new();
        let mut params_given = false;
        for (key, which) in POTENTIAL_KEYS {
            if let Some(text) = layer.get(key) {
                params_given = true;
                let values = parse_values(key, text)?;
                which.apply(&mut params, values[0]);
                if values.len() > 1 {
                    ranged.push((which, values));
                }
            }
        }
        if ranged.len() > 1 {
            let names: Vec<&str> = ranged.iter().map(|(p, _)| p.name()).collect();
            return Err(err(format!("at most one ranged parameter allowed, got {}", names.join(", "))));
        }
        let format = match layer.get("format") {
            None => None,
            Some("csv") => Some(Format::Csv),
            Some("json") => Some(Format::Json),
            Some(v) => return Err(err(format!("format: expected csv or json, got '{v}'"))),
        };
        let suite = match layer.get("suite") {
            None => Suite::All,
            Some(v) => Suite::parse(v).ok_or_else(|| {
                err(format!("unknown suite '{v}' (expected one of {})", Suite::NAMES.join(", ")))
            })?,
        };
        let dim: u32 = number(layer, "D", 3)?;
        if dim < 2 {
            return Err(err(format!("D must be >= 2, got {dim}")));
        }
        let default_grid = GridSpec::default();
        let grid = GridSpec {
            rmax_factor: number(layer, "rmax-factor", default_grid.rmax_factor)?,
            points: number(layer, "grid-points", default_grid.points)?,
        };
        let limiting = match (layer.get("limiting-omega"), layer.get("limiting-alpha")) {
            (None, None) => None,
            (Some(_), Some(_)) => Some(LimitingSpec {
                omega: number(layer, "limiting-omega", 1.0)?,
                alpha: number(layer, "limiting-alpha", 0.0)?,
                r_max: number(layer, "limiting-rmax", 12.0)?,
            }),
            _ => return Err(err("limiting-omega and limiting-alpha go together")),
        };
        Ok(Self {
            params,
            params_given,
            ranged: ranged.pop(),
            dim,
            n_max: number(layer, "n-max", 0)?,
            l_max: number(layer, "l-max", 0)?,
            numeric: boolean(layer, "numeric")?,
            format,
            out: layer.get("out").map(PathBuf::from),
            grid,
            suite,
            n: number(layer, "n", 0)?,
            l: number(layer, "l", 0)?,
            seed: number(layer, "seed", 0x5eed)?,
            execution: if boolean(layer, "sequential")? {
                Execution::Sequential
            } else {
                Execution::Parallel
            },
            limiting,
        })
    }

    /// Refuse a ranged parameter outside `sweep`.
    pub fn require_single_point(&self) -> Result<(), ConfigError> {
        match &self.ranged {
            Some((p, _)) => Err(err(format!("{} is ranged; only sweep accepts ranges", p.name()))),
            None => Ok(()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_overlays() {
        let base = Layer::parse("# comment\nA = 10\nlambda=0.5\nn_max=2\n", "base").unwrap();
        let mut flags = Layer::default();
        flags.set("A", "12").unwrap();
        let cfg = RunConfig::resolve(&base.overlay(flags)).unwrap();
        assert_eq!(cfg.params.a, 12.0);
        assert_eq!(cfg.params.lambda, 0.5);
        assert_eq!(cfg.n_max, 2);
        assert_eq!(cfg.dim, 3);
        assert!(cfg.params_given);
    }

    #[test]
    fn rejects_unknown_and_duplicate_keys() {
        assert!(Layer::parse("alpha=1", "x").unwrap_err().0.contains("unknown key"));
        assert!(Layer::parse("A=1\nA=2", "x").unwrap_err().0.contains("duplicate"));
        assert!(Layer::parse("A 1", "x").is_err());
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_values("x", "0.2,0.1,0.05").unwrap(), vec![0.2, 0.1, 0.05]);
        assert_eq!(parse_values("x", "0:1:3").unwrap(), vec![0.0, 0.5, 1.0]);
        assert!(parse_values("x", "0:1").is_err());
        let two = Layer::parse("A=1,2\nB=1:2:2", "x").unwrap();
        assert!(RunConfig::resolve(&two).is_err());
    }
}
