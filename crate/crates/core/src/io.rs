//! JSON file formats for complexes, chains and cycle lists.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::complex::{BuildOptions, Chain, Complex};
use crate::error::{Error, Result};

/// On-disk description of a complex. Faces are optional per record and are
/// bound by vertex tuple when omitted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexFile {
    pub n: usize,
    pub vertices: Vec<String>,
    pub simplices: Vec<SimplexEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimplexEntry {
    pub dim: usize,
    pub id: String,
    pub vertices: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub faces: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainFile {
    pub dim: usize,
    pub simplices: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleListFile {
    pub cycles: Vec<ChainFile>,
}

impl ComplexFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Invalid(format!("complex file: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("complex file serializes")
    }

    pub fn build(&self) -> Result<Complex> {
        Complex::build(self, BuildOptions::default())
    }
}

impl ChainFile {
    pub fn resolve(&self, complex: &Complex) -> Result<Chain> {
        complex.chain_from_ids(self.dim, self.simplices.iter().map(String::as_str))
    }

    pub fn of(complex: &Complex, chain: &Chain) -> Self {
        Self {
            dim: chain.dim(),
            simplices: complex
                .chain_ids(chain)
                .into_iter()
                .map(str::to_owned)
                .collect(),
        }
    }
}

impl CycleListFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Invalid(format!("cycle-list file: {e}")))
    }

    pub fn resolve(&self, complex: &Complex) -> Result<Vec<Chain>> {
        self.cycles.iter().map(|c| c.resolve(complex)).collect()
    }

    pub fn of(complex: &Complex, chains: &[Chain]) -> Self {
        Self {
            cycles: chains.iter().map(|c| ChainFile::of(complex, c)).collect(),
        }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))
}

pub fn load_complex(path: impl AsRef<Path>) -> Result<Complex> {
    ComplexFile::from_json(&read(path.as_ref())?)?.build()
}

pub fn load_cycles(path: impl AsRef<Path>, complex: &Complex) -> Result<Vec<Chain>> {
    CycleListFile::from_json(&read(path.as_ref())?)?.resolve(complex)
}
