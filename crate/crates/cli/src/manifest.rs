use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use serde::Serialize;

/// Record of one invocation, written next to the primary output.
#[derive(Debug, Serialize)]
pub struct RunManifest {
    pub format: &'static str,
    pub command: String,
    pub parameters: BTreeMap<String, String>,
    pub inputs: Vec<PathBuf>,
    pub outputs: Vec<PathBuf>,
    pub version: &'static str,
    pub exit_code: u8,
    pub outcome: String,
    /// Seconds since the Unix epoch.
    pub timestamp: u64,
}

impl RunManifest {
    pub fn new(command: &str) -> Self {
        RunManifest {
            format: cbo_core::graph::FORMAT_TAG,
            command: command.to_owned(),
            parameters: BTreeMap::new(),
            inputs: Vec::new(),
            outputs: Vec::new(),
            version: env!("CARGO_PKG_VERSION"),
            exit_code: 0,
            outcome: String::new(),
            timestamp: 0,
        }
    }

    pub fn param(&mut self, key: &str, value: impl ToString) {
        self.parameters.insert(key.to_owned(), value.to_string());
    }

    pub fn input(&mut self, path: &Path) {
        self.inputs.push(path.to_owned());
    }

    pub fn output(&mut self, path: &Path) {
        self.outputs.push(path.to_owned());
    }

    /// Writes to `explicit`, else `<first output>.manifest.json`, else stderr.
    pub fn emit(mut self, explicit: Option<&Path>) -> std::io::Result<()> {
        self.timestamp = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0);
        let json = serde_json::to_string_pretty(&self).expect("manifest serialises") + "\n";
        let target = explicit.map(Path::to_owned).or_else(|| {
            self.outputs.first().map(|p| {
                let mut s = p.clone().into_os_string();
                s.push(".manifest.json");
                PathBuf::from(s)
            })
        });
        match target {
            Some(path) => std::fs::write(path, json),
            None => {
                eprint!("{json}");
                Ok(())
            }
        }
    }
}
