//! Command-line companion to the exact bidyadic kernel: medium spec files,
//! classification/inversion/wave reports, and the wave-surface sampler.
//!
//! The library half exists so integration tests can drive every command
//! in-process; the `bidyadic` binary is a thin argument-parsing shell over
//! these functions.

use std::fmt;

pub mod report;
pub mod spec_file;
pub mod surface;

use bidyadic::corpus::{sample_recipe, Family, Rng};
use spec_file::{parse_str, spec_for_recipe, MediumSpecFile};

/// Everything a command can fail with, mapped onto the documented exit
/// codes: `2` for parse errors, `3` for violated preconditions, `4` for
/// proven negatives that escape report handling, `1` for internal bugs.
#[derive(Clone, Debug)]
pub enum CliError {
    /// Unreadable input: file IO, JSON syntax, schema violations, bad
    /// rationals, wrong format or convention block.
    Parse(String),
    /// Well-formed input outside a command's domain.
    Precondition(String),
    /// A proven negative (no inverse, no wave) surfaced as an error rather
    /// than a report section.
    Negative(String),
    /// Invariant failures inside the kernel; never expected.
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Precondition(_) => 3,
            CliError::Negative(_) => 4,
            CliError::Internal(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(msg) => write!(f, "parse error: {msg}"),
            CliError::Precondition(msg) => write!(f, "precondition violated: {msg}"),
            CliError::Negative(msg) => write!(f, "{msg}"),
            CliError::Internal(msg) => write!(f, "internal error: {msg}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<bidyadic::Error> for CliError {
    fn from(e: bidyadic::Error) -> CliError {
        match e {
            bidyadic::Error::NoInverse { .. } | bidyadic::Error::NoWave => {
                CliError::Negative(e.to_string())
            }
            bidyadic::Error::ConventionBug(_) => CliError::Internal(e.to_string()),
            other => CliError::Precondition(other.to_string()),
        }
    }
}

/// Load a spec from a path, or generate one: `gen:<family>` with a seed
/// draws from the same corpus the test suites use (families `axion`,
/// `skewon`, `skewon-axion`, `p-medium`, `p-axion`, `special-p-axion`,
/// `compound`, `rank-two`, `q-medium`, `q-antisym`, `dense`).
pub fn load_spec(source: &str, seed: u64) -> Result<MediumSpecFile, CliError> {
    if let Some(label) = source.strip_prefix("gen:") {
        let family = Family::parse(label).ok_or_else(|| {
            let known: Vec<&str> = Family::ALL.iter().map(|f| f.label()).collect();
            CliError::Parse(format!(
                "unknown family {label:?}; known families: {}",
                known.join(", ")
            ))
        })?;
        let mut rng = Rng::new(seed);
        Ok(spec_for_recipe(&sample_recipe(family, &mut rng)))
    } else {
        let text = std::fs::read_to_string(source)
            .map_err(|e| CliError::Parse(format!("cannot read {source}: {e}")))?;
        parse_str(&text)
    }
}
