//! Run manifests: a structured record of every invocation — command,
//! flags, seed, input digests, output paths, wall clock, and exit code —
//! written alongside the outputs (or to standard error when a command
//! writes no files). Certificates themselves are byte-reproducible given
//! the same inputs and seed; manifests carry timing and therefore are not.

use serde::Serialize;
use sha2::{Digest, Sha256};
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::time::Duration;

#[derive(Serialize)]
struct RunManifest<'a> {
    command: &'a str,
    flags: &'a [String],
    #[serde(skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
    inputs: &'a BTreeMap<String, String>,
    outputs: &'a [String],
    wall_clock_ms: u128,
    outcome: u8,
}

/// Collects the manifest fields as a command runs.
pub struct Recorder {
    command: &'static str,
    flags: Vec<String>,
    seed: Option<u64>,
    inputs: BTreeMap<String, String>,
    outputs: Vec<String>,
}

impl Recorder {
    pub fn new(command: &'static str, flags: Vec<String>) -> Self {
        Recorder {
            command,
            flags,
            seed: None,
            inputs: BTreeMap::new(),
            outputs: Vec::new(),
        }
    }

    pub fn set_seed(&mut self, seed: u64) {
        self.seed = Some(seed);
    }

    /// Reads an input file and records its digest.
    pub fn read_input(&mut self, path: &Path) -> grid_minors::Result<String> {
        let text = std::fs::read_to_string(path).map_err(|e| annotate(path, e))?;
        let digest = Sha256::digest(text.as_bytes());
        self.inputs
            .insert(path.display().to_string(), format!("sha256:{digest:x}"));
        Ok(text)
    }

    /// Writes an output file and records its path.
    pub fn write_output(&mut self, path: &Path, text: &str) -> grid_minors::Result<()> {
        std::fs::write(path, text).map_err(|e| annotate(path, e))?;
        self.outputs.push(path.display().to_string());
        Ok(())
    }

    /// Emits the manifest: to `override_path` if given, else next to the
    /// first output file, else as one line on standard error.
    pub fn emit(&self, override_path: Option<&Path>, wall: Duration, outcome: u8) {
        let manifest = RunManifest {
            command: self.command,
            flags: &self.flags,
            seed: self.seed,
            inputs: &self.inputs,
            outputs: &self.outputs,
            wall_clock_ms: wall.as_millis(),
            outcome,
        };
        let target: Option<PathBuf> = override_path.map(Path::to_path_buf).or_else(|| {
            self.outputs
                .first()
                .map(|p| PathBuf::from(format!("{p}.manifest.json")))
        });
        match target {
            Some(path) => {
                let mut text =
                    serde_json::to_string_pretty(&manifest).expect("plain data serializes");
                text.push('\n');
                if let Err(e) = std::fs::write(&path, &text) {
                    eprintln!("warning: could not write manifest {}: {e}", path.display());
                }
            }
            None => {
                let text = serde_json::to_string(&manifest).expect("plain data serializes");
                eprintln!("{text}");
            }
        }
    }
}

fn annotate(path: &Path, e: std::io::Error) -> grid_minors::Error {
    grid_minors::Error::Io(std::io::Error::new(
        e.kind(),
        format!("{}: {e}", path.display()),
    ))
}
