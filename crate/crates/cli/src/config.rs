//! Experiment configuration files.
//!
//! ```json
//! {
//!   "system": "sys2", "k": 4, "m": 2,
//!   "init": { "x": ["1/2", "3", "7/5"], "y": ["2", "1", "5/3"] },
//!   "iterations": 200, "bit_budget": 4096, "output": "orbit.csv"
//! }
//! ```
//!
//! `init` may instead be `{ "random_positive": { "seed": 7 } }` (optionally
//! with `"count"`, which must equal `nu + 1`). `closed_form` (`s3`, `s4`,
//! `s5`) selects the formula checked by `verify`.

use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use recurra::{InitialConditions, Rational, SystemSpec, DEFAULT_BIT_BUDGET};

use crate::error::CliError;

pub const DEFAULT_ITERATIONS: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SystemTag {
    #[serde(rename = "sys1", alias = "SysOne", alias = "sys_one")]
    SysOne,
    #[serde(rename = "sys2", alias = "SysTwo", alias = "sys_two")]
    SysTwo,
}

impl FromStr for SystemTag {
    type Err = CliError;
    fn from_str(s: &str) -> Result<Self, CliError> {
        serde_json::from_value(serde_json::Value::String(s.to_string()))
            .map_err(|_| CliError::Config(format!("unknown system `{s}` (use sys1 or sys2)")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RandomInit {
    pub seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub count: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum InitSpec {
    Explicit { x: Vec<String>, y: Vec<String> },
    Random { random_positive: RandomInit },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub system: SystemTag,
    pub k: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    pub init: InitSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub iterations: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bit_budget: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<PathBuf>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub closed_form: Option<String>,
}

/// A validated configuration.
#[derive(Debug, Clone)]
pub struct Experiment {
    pub spec: SystemSpec,
    pub init: InitialConditions,
    pub iterations: usize,
    pub bit_budget: u64,
    pub output: Option<PathBuf>,
    pub closed_form: Option<String>,
}

impl ExperimentConfig {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Config(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn spec(&self) -> Result<SystemSpec, CliError> {
        let spec = match (self.system, self.m) {
            (SystemTag::SysOne, None) => SystemSpec::sys_one(self.k)?,
            (SystemTag::SysOne, Some(_)) => {
                return Err(CliError::Config("sys1 takes no `m`".into()));
            }
            (SystemTag::SysTwo, Some(m)) => SystemSpec::sys_two(self.k, m)?,
            (SystemTag::SysTwo, None) => return Err(CliError::Config("sys2 requires `m`".into())),
        };
        Ok(spec)
    }

    /// Checks every invariant and builds the exact initial data.
    pub fn resolve(&self) -> Result<Experiment, CliError> {
        let spec = self.spec()?;
        let init = match &self.init {
            InitSpec::Explicit { x, y } => {
                let parse = |v: &[String]| -> Result<Vec<Rational>, CliError> {
                    v.iter()
                        .map(|s| s.parse::<Rational>().map_err(CliError::from))
                        .collect()
                };
                InitialConditions::new(&spec, parse(x)?, parse(y)?)?
            }
            InitSpec::Random {
                random_positive: RandomInit { seed, count },
            } => {
                if let Some(count) = count.filter(|&c| c != spec.nu() + 1) {
                    return Err(CliError::Config(format!(
                        "random_positive.count is {count} but {spec} needs {}",
                        spec.nu() + 1
                    )));
                }
                InitialConditions::random_positive(&spec, *seed)
            }
        };
        let iterations = self.iterations.unwrap_or(DEFAULT_ITERATIONS);
        let bit_budget = self.bit_budget.unwrap_or(DEFAULT_BIT_BUDGET);
        if iterations == 0 || bit_budget == 0 {
            return Err(CliError::Config(
                "iterations and bit_budget must be positive".into(),
            ));
        }
        Ok(Experiment {
            spec,
            init,
            iterations,
            bit_budget,
            output: self.output.clone(),
            closed_form: self.closed_form.clone(),
        })
    }
}

/// Command-line values that replace or stand in for config fields.
#[derive(Debug, Clone, Default)]
pub struct Overrides {
    pub system: Option<SystemTag>,
    pub k: Option<usize>,
    pub m: Option<usize>,
    pub seed: Option<u64>,
    pub iterations: Option<usize>,
    pub bit_budget: Option<u64>,
    pub output: Option<PathBuf>,
    pub closed_form: Option<String>,
}

impl Overrides {
    /// Layers the overrides over `base`. Without a base, `system`, `k` and
    /// `seed` are required (`m` too for `sys2`).
    pub fn apply(self, base: Option<ExperimentConfig>) -> Result<ExperimentConfig, CliError> {
        let mut cfg = match base {
            Some(cfg) => cfg,
            None => {
                let missing =
                    |what: &str| CliError::Config(format!("no --config given and no --{what}"));
                ExperimentConfig {
                    system: self.system.ok_or_else(|| missing("system"))?,
                    k: self.k.ok_or_else(|| missing("k"))?,
                    m: self.m,
                    init: InitSpec::Random {
                        random_positive: RandomInit {
                            seed: self.seed.ok_or_else(|| missing("seed"))?,
                            count: None,
                        },
                    },
                    iterations: None,
                    bit_budget: None,
                    output: None,
                    closed_form: None,
                }
            }
        };
        if let Some(system) = self.system {
            cfg.system = system;
            if system == SystemTag::SysOne {
                cfg.m = None;
            }
        }
        if let Some(k) = self.k {
            cfg.k = k;
        }
        if self.m.is_some() {
            cfg.m = self.m;
        }
        if let Some(seed) = self.seed {
            cfg.init = InitSpec::Random {
                random_positive: RandomInit { seed, count: None },
            };
        }
        cfg.iterations = self.iterations.or(cfg.iterations);
        cfg.bit_budget = self.bit_budget.or(cfg.bit_budget);
        cfg.output = self.output.or(cfg.output);
        cfg.closed_form = self.closed_form.or(cfg.closed_form);
        Ok(cfg)
    }
}
