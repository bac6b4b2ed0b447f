//! Job configuration, from flags or a JSON file.

use std::collections::BTreeMap;
use std::path::PathBuf;

use kvertex_core::{Assignment, Field, Var};
use kvertex_locvertex::Descendent;
use serde::{Deserialize, Serialize};

use crate::parse::{parse_descendent, parse_rational};
use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    Vertex,
    Capped,
    Psi,
    Verify,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Relations,
    Macdonald,
    Facver,
    Wkz,
    Cocycle,
    Rlimit,
    Classical,
    All,
}

impl Suite {
    pub const EACH: [Suite; 7] =
        [Suite::Relations, Suite::Macdonald, Suite::Facver, Suite::Wkz, Suite::Cocycle, Suite::Rlimit, Suite::Classical];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Relations => "relations",
            Suite::Macdonald => "macdonald",
            Suite::Facver => "facver",
            Suite::Wkz => "wkz",
            Suite::Cocycle => "cocycle",
            Suite::Rlimit => "rlimit",
            Suite::Classical => "classical",
            Suite::All => "all",
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    #[default]
    Symbolic,
    Specialized,
}

fn one() -> u32 {
    1
}

fn three() -> usize {
    3
}

fn two() -> u32 {
    2
}

fn unit() -> String {
    "1".into()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobConfig {
    pub command: Command,
    #[serde(default)]
    pub suite: Option<Suite>,
    /// Instanton number, or the largest one for suites that scan degrees.
    #[serde(default = "one")]
    pub n: u32,
    #[serde(default = "one")]
    pub r: u32,
    /// Largest z-order.
    #[serde(rename = "D", default = "three")]
    pub order: usize,
    /// Fock space truncation.
    #[serde(rename = "N", default = "two")]
    pub truncation: u32,
    #[serde(default = "unit")]
    pub tau: String,
    #[serde(default)]
    pub mode: Mode,
    #[serde(default)]
    pub seed: Option<u64>,
    /// Values of the square-root symbols T1, T2, Q, A1.. as `p/q` strings,
    /// overriding the drawn ones.
    #[serde(default)]
    pub params: BTreeMap<String, String>,
    /// Largest m + n in the Pade scan; defaults to D - 2.
    #[serde(default)]
    pub pade_total: Option<usize>,
    #[serde(default)]
    pub output: Option<PathBuf>,
    /// Worker threads for `verify all`; defaults to the available cores.
    #[serde(default)]
    pub jobs: Option<usize>,
}

impl JobConfig {
    pub fn new(command: Command) -> Self {
        JobConfig {
            command,
            suite: None,
            n: 1,
            r: 1,
            order: 3,
            truncation: 2,
            tau: unit(),
            mode: Mode::Symbolic,
            seed: None,
            params: BTreeMap::new(),
            pade_total: None,
            output: None,
            jobs: None,
        }
    }

    pub fn verify(suite: Suite, truncation: u32, seed: u64) -> Self {
        JobConfig { suite: Some(suite), truncation, seed: Some(seed), mode: Mode::Specialized, ..Self::new(Command::Verify) }
    }

    pub fn from_json(text: &str) -> Result<Self, CliError> {
        Ok(serde_json::from_str(text)?)
    }

    /// The checked job: parsed descendent and explicit assignments.
    pub fn validate(&self) -> Result<Job, CliError> {
        let bad = |m: &str| Err(CliError::Config(m.into()));
        let tau = parse_descendent(&self.tau)?;
        if !(1..=3).contains(&self.r) {
            return bad("r must be 1, 2 or 3");
        }
        if self.mode == Mode::Specialized && self.seed.is_none() {
            return bad("specialized mode needs a seed");
        }
        let mut fixed = Assignment::new();
        for (name, value) in &self.params {
            let v = Var::ALL
                .into_iter()
                .find(|v| v.to_string() == *name && !matches!(v, Var::Aux | Var::Z))
                .ok_or_else(|| CliError::Config(format!("unknown parameter {name:?}")))?;
            let x = parse_rational(value)?;
            if x.is_zero() {
                return bad("parameter values must be nonzero");
            }
            fixed.set(v, x);
        }
        match self.command {
            Command::Capped | Command::Psi => {
                if self.r != 1 {
                    return bad("the capping operator is implemented in rank 1");
                }
                if self.truncation < self.n {
                    return bad("N must be at least n for qde jobs");
                }
                if self.command == Command::Capped && self.mode != Mode::Specialized {
                    return bad("capped needs specialized mode (the Pade scan is over exact rationals)");
                }
            }
            Command::Verify => {
                let suite = self.suite.ok_or_else(|| CliError::Config("verify needs a suite".into()))?;
                let needs_seed = !matches!(suite, Suite::Facver) || self.mode == Mode::Specialized;
                if needs_seed && self.seed.is_none() {
                    return bad("this suite draws its parameters from a seed");
                }
                if matches!(suite, Suite::Facver | Suite::All) && !tau.is_polynomial() {
                    return bad("facver needs a polynomial descendent");
                }
            }
            Command::Vertex => {}
        }
        if self.suite.is_some() && self.command != Command::Verify {
            return bad("suite is only meaningful for verify");
        }
        Ok(Job { config: self.clone(), tau, fixed })
    }
}

/// A validated configuration.
#[derive(Clone, Debug)]
pub struct Job {
    pub config: JobConfig,
    pub tau: Descendent,
    pub fixed: Assignment,
}
