//! Serializable output records. Field order is fixed, grids are swept
//! in lexicographic order and polynomials print in their canonical
//! form, so identical inputs produce byte-identical JSON.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use alexpoly::Error;

#[derive(Serialize)]
pub struct ComputeOut {
    pub delta: String,
    pub mu: usize,
    pub linking_matrix: Vec<Vec<i64>>,
    pub num_arcs: usize,
    pub num_crossings: usize,
}

#[derive(Serialize)]
pub struct PolyOut {
    pub delta: String,
}

#[derive(Serialize)]
pub struct SeifertOut {
    pub delta: String,
    pub rows: usize,
    pub cols: usize,
    pub extra_rank: usize,
}

#[derive(Serialize)]
pub struct CableOut {
    pub component: usize,
    pub d: i64,
    pub p: i64,
    pub q: i64,
}

#[derive(Serialize)]
pub struct TorresOut {
    pub component: usize,
    pub holds: bool,
    pub branch: &'static str,
    pub lhs: String,
    pub rhs: String,
    pub details: Vec<String>,
}

#[derive(Serialize)]
pub struct SymmetryOut {
    pub holds: bool,
    pub nu: Option<Vec<i64>>,
    pub parity_ok: bool,
}

#[derive(Serialize)]
pub struct Lemma7Out {
    pub m: Vec<i64>,
    pub holds: bool,
    pub factor_exponent: i64,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Serialize)]
pub struct Prop8Out {
    pub m: Vec<i64>,
    pub d: i64,
    pub d_i: Vec<i64>,
    pub nabla: Option<String>,
    pub cond_i: bool,
    pub cond_ii: Option<bool>,
    pub cond_iii: Option<bool>,
    pub cond_iv: Option<bool>,
    #[serde(rename = "D")]
    pub big_d: i64,
    pub notes: Vec<String>,
    pub passes: bool,
}

/// Oracle fixture: a table of precomputed specializations, typically
/// produced with the specialize command.
pub struct OracleFile {
    pub entries: BTreeMap<Vec<i64>, String>,
}

#[derive(Deserialize)]
struct OracleFileRaw {
    entries: Vec<OracleEntry>,
}

#[derive(Deserialize)]
struct OracleEntry {
    m: Vec<i64>,
    poly: String,
}

impl OracleFile {
    pub fn load(path: &Path) -> Result<OracleFile, Error> {
        let raw: OracleFileRaw = serde_json::from_str(&std::fs::read_to_string(path)?)
            .map_err(|e| Error::Parse(format!("oracle file: {e}")))?;
        Ok(OracleFile {
            entries: raw.entries.into_iter().map(|e| (e.m, e.poly)).collect(),
        })
    }
}
