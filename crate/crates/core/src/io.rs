//! Lattice file format and Hasse diagram export.
//!
//! Files are JSON objects with `size`, `covers` (pairs `[lower, upper]`),
//! and optional `labels` of length `size`. Written covers are canonical:
//! sorted, irredundant cover pairs recomputed from the order itself.

use crate::lattice::{CoverList, FiniteLattice, LatticeError};
use serde::{Deserialize, Serialize};
use std::fs;
use std::path::Path;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("failed to read or write {path}")]
    File {
        path: String,
        source: std::io::Error,
    },
    #[error("malformed lattice JSON")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

/// On-disk lattice: the cover relation plus optional element labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeFile {
    pub size: usize,
    pub covers: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl LatticeFile {
    pub fn from_lattice(l: &FiniteLattice) -> LatticeFile {
        let CoverList { size, covers } = l.cover_list();
        LatticeFile {
            size,
            covers,
            labels: l.labels().map(|ls| ls.to_vec()),
        }
    }

    pub fn build(&self) -> Result<FiniteLattice, LatticeError> {
        let covers = CoverList {
            size: self.size,
            covers: self.covers.clone(),
        };
        FiniteLattice::from_covers_labeled(&covers, self.labels.clone())
    }
}

/// Renders a lattice as pretty-printed JSON (with a trailing newline).
pub fn lattice_to_json(l: &FiniteLattice) -> String {
    let mut s = serde_json::to_string_pretty(&LatticeFile::from_lattice(l))
        .expect("lattice file serialization cannot fail");
    s.push('\n');
    s
}

/// Parses and validates a JSON lattice.
pub fn lattice_from_json(text: &str) -> Result<FiniteLattice, IoError> {
    let file: LatticeFile = serde_json::from_str(text)?;
    Ok(file.build()?)
}

pub fn read_lattice(path: impl AsRef<Path>) -> Result<FiniteLattice, IoError> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|source| IoError::File {
        path: path.display().to_string(),
        source,
    })?;
    lattice_from_json(&text)
}

pub fn write_lattice(path: impl AsRef<Path>, l: &FiniteLattice) -> Result<(), IoError> {
    let path = path.as_ref();
    fs::write(path, lattice_to_json(l)).map_err(|source| IoError::File {
        path: path.display().to_string(),
        source,
    })
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Hasse diagram in DOT: one node per element (its label, or its index
/// when unlabeled), one edge per cover pair, drawn bottom to top.
pub fn hasse_dot(l: &FiniteLattice) -> String {
    let mut out = String::from("digraph hasse {\n  rankdir=BT;\n  node [shape=circle];\n");
    for i in l.elements() {
        let label = match l.label(i) {
            Some(s) => dot_escape(s),
            None => i.to_string(),
        };
        out.push_str(&format!("  n{i} [label=\"{label}\"];\n"));
    }
    for (lo, hi) in l.cover_list().covers {
        out.push_str(&format!("  n{lo} -> n{hi};\n"));
    }
    out.push_str("}\n");
    out
}

pub fn write_dot(path: impl AsRef<Path>, l: &FiniteLattice) -> Result<(), IoError> {
    let path = path.as_ref();
    fs::write(path, hasse_dot(l)).map_err(|source| IoError::File {
        path: path.display().to_string(),
        source,
    })
}
