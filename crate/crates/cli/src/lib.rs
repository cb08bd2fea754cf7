//! Command implementations behind the `injcolor` binary. Each command
//! returns a JSON report and an exit code; the binary only parses flags,
//! prints and exits.
//!
//! Exit codes are a stable contract: 0 success, 2 input error, 3 property
//! or audit failure (including a theorem violation), 4 hypothesis rejection.

pub mod analyze;
pub mod color;
pub mod generate;
pub mod verify;

use std::fmt;
use std::path::{Path, PathBuf};

use injcolor::structure::parse_rotation;
use injcolor::{parse_graph, Graph, PlaneEmbedding};
use serde::Serialize;

pub use verify::{verify, InstanceResult, RunReport, Summary, VerifyOptions};

pub const SCHEMA_VERSION: u32 = 1;

pub const EXIT_OK: u8 = 0;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_FAILURE: u8 = 3;
pub const EXIT_HYPOTHESIS: u8 = 4;

/// Node budget for the exact solvers when neither `--budget` nor
/// `INJCOLOR_BUDGET` is given.
pub const DEFAULT_BUDGET: u64 = 20_000_000;
pub const BUDGET_ENV: &str = "INJCOLOR_BUDGET";

/// Unusable input: unreadable or malformed files, bad flag combinations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputError(pub String);

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for InputError {}

pub fn input_error(msg: impl Into<String>) -> InputError {
    InputError(msg.into())
}

/// A finished command: its report, exit code and lines for standard error.
#[derive(Debug, Clone)]
pub struct CmdOutput {
    pub report: serde_json::Value,
    pub exit: u8,
    pub messages: Vec<String>,
}

impl CmdOutput {
    pub fn new<T: Serialize>(report: &T, exit: u8) -> Self {
        CmdOutput { report: serde_json::to_value(report).expect("reports serialize"), exit, messages: Vec::new() }
    }
}

/// Budget from the flag, else the environment, else [`DEFAULT_BUDGET`].
pub fn resolve_budget(flag: Option<u64>) -> Result<u64, InputError> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var(BUDGET_ENV) {
        Ok(s) => s.trim().parse().map_err(|_| input_error(format!("{BUDGET_ENV}={s:?} is not a node count"))),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

pub fn read_graph(path: &Path) -> Result<Graph, InputError> {
    let text = std::fs::read_to_string(path).map_err(|e| input_error(format!("{}: {e}", path.display())))?;
    parse_graph(&text).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

pub fn read_embedding(g: &Graph, path: &Path) -> Result<PlaneEmbedding, InputError> {
    let text = std::fs::read_to_string(path).map_err(|e| input_error(format!("{}: {e}", path.display())))?;
    parse_rotation(g.clone(), &text).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

/// Graph plus optional embedding from the command line.
pub fn load(input: &Path, embedding: Option<&PathBuf>) -> Result<(Graph, Option<PlaneEmbedding>), InputError> {
    let g = read_graph(input)?;
    let emb = embedding.map(|p| read_embedding(&g, p)).transpose()?;
    Ok((g, emb))
}

/// Removes every `timings_ms` field, leaving the deterministic part of a
/// report.
pub fn strip_timings(v: &mut serde_json::Value) {
    match v {
        serde_json::Value::Object(map) => {
            map.remove("timings_ms");
            for x in map.values_mut() {
                strip_timings(x);
            }
        }
        serde_json::Value::Array(xs) => xs.iter_mut().for_each(strip_timings),
        _ => {}
    }
}
