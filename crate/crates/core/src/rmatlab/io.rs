use serde::{Deserialize, Serialize};

use super::RMatrix;
use crate::error::{QgwError, Result};
use crate::linalg::SMatrix;
use crate::scalars::Scalar;

/// One nonzero entry `R^a_c^b_d`, zero-based.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct RMatrixEntry {
    pub a: usize,
    pub c: usize,
    pub b: usize,
    pub d: usize,
    pub value: String,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct RMatrixFile {
    pub name: String,
    pub dimension: usize,
    #[serde(default)]
    pub grading: Option<Vec<u8>>,
    #[serde(default, rename = "super")]
    pub is_super: bool,
    pub entries: Vec<RMatrixEntry>,
}

impl RMatrix {
    pub fn to_file(&self) -> RMatrixFile {
        RMatrixFile {
            name: self.name.clone(),
            dimension: self.n,
            grading: Some(self.grading.clone()),
            is_super: self.is_super,
            entries: self
                .entries()
                .into_iter()
                .map(|(a, c, b, d, v)| RMatrixEntry { a, c, b, d, value: v.to_string() })
                .collect(),
        }
    }

    pub fn from_file(f: &RMatrixFile) -> Result<RMatrix> {
        let n = f.dimension;
        let mut m = SMatrix::zeros(n * n, n * n);
        for e in &f.entries {
            if [e.a, e.b, e.c, e.d].iter().any(|&i| i >= n) {
                return Err(QgwError::Format(format!("entry index out of range for dimension {n}")));
            }
            m.set(e.a * n + e.b, e.c * n + e.d, Scalar::parse(&e.value)?);
        }
        RMatrix::new(&f.name, n, m, f.grading.clone().unwrap_or_else(|| vec![0; n]), f.is_super)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<RMatrix> {
        let f: RMatrixFile = serde_json::from_str(s).map_err(|e| QgwError::Format(e.to_string()))?;
        RMatrix::from_file(&f)
    }
}

#[cfg(test)]
mod tests {
    use super::super::by_name;
    use super::*;

    #[test]
    fn round_trip() {
        for name in ["ac", "ac-super", "gl(2|1)"] {
            let r = by_name(name).unwrap();
            assert_eq!(RMatrix::from_json(&r.to_json()).unwrap(), r);
        }
    }

    #[test]
    fn singular_rejected() {
        let f = RMatrixFile { name: "zero".into(), dimension: 1, grading: None, is_super: false, entries: vec![] };
        assert_eq!(RMatrix::from_file(&f), Err(QgwError::Singular));
    }
}
