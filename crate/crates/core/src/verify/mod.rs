//! Check suites behind the `verify` command. Every check compares exact
//! values; a report lists each check with its outcome and a short detail.

pub mod golden;
mod suites;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Module {
    Algebra,
    Trees,
    Weight,
    Counting,
    Bijections,
    Permweight,
}

impl Module {
    pub const ALL: [Module; 6] = [
        Module::Algebra,
        Module::Trees,
        Module::Weight,
        Module::Counting,
        Module::Bijections,
        Module::Permweight,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Module::Algebra => "algebra",
            Module::Trees => "trees",
            Module::Weight => "weight",
            Module::Counting => "counting",
            Module::Bijections => "bijections",
            Module::Permweight => "permweight",
        }
    }
}

impl FromStr for Module {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Module::ALL
            .into_iter()
            .find(|m| m.name() == s.trim())
            .ok_or_else(|| Error::Parse(format!("unknown module {s:?}")))
    }
}

/// `all` or a comma-separated module list.
pub fn parse_scope(s: &str) -> Result<Vec<Module>> {
    if s.trim() == "all" {
        return Ok(Module::ALL.to_vec());
    }
    let mut out: Vec<Module> = s.split(',').map(str::parse).collect::<Result<_>>()?;
    out.sort();
    out.dedup();
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Profile {
    /// Up to 5 vertices or letters and 4 internal points.
    Quick,
    /// Up to the default capacities.
    Full,
}

impl FromStr for Profile {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "quick" => Ok(Profile::Quick),
            "full" => Ok(Profile::Full),
            _ => Err(Error::Parse(format!("unknown profile {s:?}"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub profile: Profile,
    /// Seeds the sampled checks; exhaustive checks ignore it.
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            profile: Profile::Quick,
            seed: 0,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub(crate) fn record(&mut self, name: impl Into<String>, outcome: Result<String>) {
        let (status, detail) = match outcome {
            Ok(d) => (Status::Pass, d),
            Err(e) => (Status::Fail, e.to_string()),
        };
        self.checks.push(Check {
            name: name.into(),
            status,
            detail,
        });
    }

    pub fn summary(&self) -> Summary {
        let passed = self.checks.iter().filter(|c| c.status == Status::Pass).count();
        Summary {
            passed,
            failed: self.checks.len() - passed,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary().failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Out<'a> {
            checks: &'a [Check],
            summary: Summary,
        }
        serde_json::to_string_pretty(&Out {
            checks: &self.checks,
            summary: self.summary(),
        })
        .expect("serializable")
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
            };
            writeln!(f, "{tag} {}: {}", c.name, c.detail)?;
        }
        let s = self.summary();
        write!(f, "{} passed, {} failed", s.passed, s.failed)
    }
}

/// Runs the suites of the given modules, in module order.
pub fn run(modules: &[Module], opts: &VerifyOptions) -> VerifyReport {
    let mut report = VerifyReport::default();
    let mut modules = modules.to_vec();
    modules.sort();
    modules.dedup();
    for m in modules {
        match m {
            Module::Algebra => suites::algebra(&mut report, opts),
            Module::Trees => suites::trees(&mut report, opts),
            Module::Weight => suites::weight(&mut report, opts),
            Module::Counting => suites::counting(&mut report, opts),
            Module::Bijections => suites::bijections(&mut report, opts),
            Module::Permweight => suites::permweight(&mut report, opts),
        }
    }
    report
}
