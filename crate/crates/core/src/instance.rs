//! The instance file read and written by the command-line tool.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::build::RefinementSpec;
use crate::error::Result;
use crate::label::Labeling;
use crate::simplicial::Triangulation;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Metadata {
    pub generator: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub refinement: Option<RefinementSpec>,
    /// Name of the labeling generator, when one was used.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<String>,
}

impl Metadata {
    pub fn named(generator: &str) -> Self {
        Metadata { generator: generator.to_string(), seed: None, refinement: None, labels: None }
    }
}

/// A triangulation with its labeling. The canonical text form is
/// pretty-printed JSON with a trailing newline; parsing and re-serializing
/// a canonical file reproduces it byte for byte.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceFile {
    pub triangulation: Triangulation,
    pub labeling: Labeling,
    pub metadata: Metadata,
}

impl InstanceFile {
    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn to_json(&self) -> Result<String> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }

    pub fn read(path: &Path) -> Result<Self> {
        Self::from_json(&fs::read_to_string(path)?)
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        fs::write(path, self.to_json()?)?;
        Ok(())
    }
}
