//! JSON input formats for algebras, modules and bimodules.
//!
//! Scalars are strings `"p/q"` (or `"p"`), parsed exactly; there is no
//! floating point anywhere in the input path. Brackets omitted from an
//! algebra file are zero; each bracket pair may be given once, in either
//! order, and the antisymmetric partner is filled in automatically.

use std::collections::BTreeMap;
use std::str::FromStr;
use std::sync::Arc;

use serde::Deserialize;
use thiserror::Error;

use crate::ce::{CeError, KcBimodule};
use crate::lie::{LieAlgebra, LieError, LieModule};
use crate::scalar::Rat;
use crate::AlgRef;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unknown basis label {0:?}")]
    UnknownLabel(String),
    #[error("cannot parse {0:?} as an exact rational")]
    BadRational(String),
    #[error("bracket [{0}, {1}] given more than once")]
    DuplicateBracket(String, String),
    #[error("{0}")]
    Shape(String),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Ce(#[from] CeError),
}

fn parse_rat(s: &str) -> Result<Rat, IoError> {
    Rat::from_str(s.trim()).map_err(|_| IoError::BadRational(s.to_string()))
}

#[derive(Deserialize)]
struct AlgebraFile {
    name: String,
    basis: Vec<String>,
    #[serde(default)]
    brackets: Vec<BracketEntry>,
}

#[derive(Deserialize)]
struct BracketEntry {
    left: String,
    right: String,
    value: BTreeMap<String, String>,
}

/// Parse an algebra document. The Lie axioms are *not* checked here, so a
/// deliberately broken table can still be loaded and examined; callers run
/// [`LieAlgebra::validate`] and report.
pub fn parse_algebra(text: &str) -> Result<(String, AlgRef<Rat>), IoError> {
    let file: AlgebraFile = serde_json::from_str(text)?;
    let n = file.basis.len();
    let index = |label: &str| -> Result<usize, IoError> {
        file.basis
            .iter()
            .position(|b| b == label)
            .ok_or_else(|| IoError::UnknownLabel(label.to_string()))
    };
    let mut c = vec![vec![vec![Rat::from_integer(0.into()); n]; n]; n];
    let mut seen = std::collections::BTreeSet::new();
    for entry in &file.brackets {
        let i = index(&entry.left)?;
        let j = index(&entry.right)?;
        if !seen.insert((i.min(j), i.max(j))) {
            return Err(IoError::DuplicateBracket(
                entry.left.clone(),
                entry.right.clone(),
            ));
        }
        for (label, raw) in &entry.value {
            let k = index(label)?;
            let v = parse_rat(raw)?;
            c[i][j][k] = v.clone();
            if i != j {
                c[j][i][k] = -v;
            }
        }
    }
    let algebra = LieAlgebra::new(file.basis, c)?;
    Ok((file.name, Arc::new(algebra)))
}

#[derive(Deserialize)]
struct ModuleFile {
    dim: usize,
    #[serde(default)]
    action: BTreeMap<String, Vec<Vec<String>>>,
}

fn parse_action_table(
    g: &AlgRef<Rat>,
    dim: usize,
    table: &BTreeMap<String, Vec<Vec<String>>>,
) -> Result<Vec<Vec<Vec<Rat>>>, IoError> {
    let n = g.dim();
    let mut action = vec![vec![vec![Rat::from_integer(0.into()); dim]; dim]; n];
    for (label, rows) in table {
        let i = g
            .label_index(label)
            .ok_or_else(|| IoError::UnknownLabel(label.clone()))?;
        if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
            return Err(IoError::Shape(format!(
                "action of {label} must be a {dim}x{dim} row-major matrix"
            )));
        }
        for (r, row) in rows.iter().enumerate() {
            for (c, raw) in row.iter().enumerate() {
                action[i][r][c] = parse_rat(raw)?;
            }
        }
    }
    Ok(action)
}

/// Parse a module document `{"dim": d, "action": {label: rows}}` over a
/// given algebra; omitted generators act by zero. The representation law
/// is validated.
pub fn parse_module(g: &AlgRef<Rat>, text: &str) -> Result<LieModule<Rat>, IoError> {
    let file: ModuleFile = serde_json::from_str(text)?;
    let action = parse_action_table(g, file.dim, &file.action)?;
    Ok(LieModule::new(g, file.dim, action)?)
}

#[derive(Deserialize)]
struct BimoduleFile {
    dim: usize,
    #[serde(default)]
    left: BTreeMap<String, Vec<Vec<String>>>,
    #[serde(default)]
    right: BTreeMap<String, Vec<Vec<String>>>,
}

/// Parse a bimodule document `{"dim": d, "left": {..}, "right": {..}}`.
/// Both action laws and k-centrality are validated.
pub fn parse_bimodule(g: &AlgRef<Rat>, text: &str) -> Result<KcBimodule<Rat>, IoError> {
    let file: BimoduleFile = serde_json::from_str(text)?;
    let left = parse_action_table(g, file.dim, &file.left)?;
    let right = parse_action_table(g, file.dim, &file.right)?;
    Ok(KcBimodule::new(g, file.dim, left, right)?)
}
