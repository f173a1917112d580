//! Failure classification, run manifests and atomic file output.

use std::fmt;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use langcard::Error;
use serde::Serialize;
use serde_json::{Map, Value};

pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;
pub const EXIT_REFUSAL: i32 = 4;

/// A diagnostic with the process exit code it maps to.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Failure { code: EXIT_USAGE, message: message.into() }
    }

    pub fn context(self, what: impl fmt::Display) -> Self {
        Failure { code: self.code, message: format!("{what}: {}", self.message) }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Syntax { .. }
        | Error::Duplicate { .. }
        | Error::DanglingTarget { .. }
        | Error::MissingHeader(_)
        | Error::UnknownSymbol(_)
        | Error::Regex { .. } => EXIT_PARSE,
        Error::AlphabetMismatch { .. } | Error::InvalidParameter(_) => EXIT_USAGE,
        Error::ResourceLimit(_) | Error::TimeLimit(_) | Error::WalkExhausted { .. } => EXIT_RESOURCE,
        _ => EXIT_REFUSAL,
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure { code: exit_code(&e), message: e.to_string() }
    }
}

pub type CliResult<T> = Result<T, Failure>;

pub fn read_input(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure { code: EXIT_PARSE, message: format!("cannot read {}: {e}", path.display()) })
}

/// Writes through a temporary file in the target directory and renames it into
/// place, so readers never see a partial file.
pub fn write_atomic(path: &Path, contents: &str) -> CliResult<()> {
    let io = |e: std::io::Error| Failure::usage(format!("cannot write {}: {e}", path.display()));
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io)?;
    tmp.write_all(contents.as_bytes()).map_err(io)?;
    tmp.as_file().sync_all().map_err(io)?;
    tmp.persist(path).map_err(|e| io(e.error))?;
    Ok(())
}

pub fn manifest_path(out: &Path) -> PathBuf {
    let mut s = out.as_os_str().to_owned();
    s.push(".manifest.json");
    PathBuf::from(s)
}

/// Everything needed to repeat a run. Only `duration_seconds` varies between
/// replays.
#[derive(Debug, Serialize)]
pub struct RunManifest {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    pub argv: Vec<String>,
    pub inputs: Vec<String>,
    pub output: Option<String>,
    pub config: Map<String, Value>,
    pub results: Map<String, Value>,
    pub duration_seconds: f64,
}

/// Collects manifest fields while a command runs.
pub struct Run {
    started: Instant,
    command: String,
    inputs: Vec<String>,
    config: Map<String, Value>,
    results: Map<String, Value>,
}

impl Run {
    pub fn new(command: &str) -> Self {
        Run {
            started: Instant::now(),
            command: command.to_string(),
            inputs: Vec::new(),
            config: Map::new(),
            results: Map::new(),
        }
    }

    pub fn input(&mut self, path: &Path) {
        self.inputs.push(path.display().to_string());
    }

    pub fn config(&mut self, key: &str, value: impl Serialize) {
        self.config.insert(key.to_string(), serde_json::to_value(value).expect("serialisable"));
    }

    pub fn result(&mut self, key: &str, value: impl Serialize) {
        self.results.insert(key.to_string(), serde_json::to_value(value).expect("serialisable"));
    }

    /// Writes `body` to `out` (or stdout) and the manifest beside it.
    pub fn finish(self, out: Option<&Path>, body: &str) -> CliResult<()> {
        let manifest = RunManifest {
            tool: "langcard",
            version: env!("CARGO_PKG_VERSION"),
            command: self.command,
            argv: std::env::args().skip(1).collect(),
            inputs: self.inputs,
            output: out.map(|p| p.display().to_string()),
            config: self.config,
            results: self.results,
            duration_seconds: self.started.elapsed().as_secs_f64(),
        };
        match out {
            Some(path) => {
                write_atomic(path, body)?;
                let json = serde_json::to_string_pretty(&manifest).expect("serialisable");
                write_atomic(&manifest_path(path), &(json + "\n"))
            }
            None => {
                print!("{body}");
                Ok(())
            }
        }
    }
}
