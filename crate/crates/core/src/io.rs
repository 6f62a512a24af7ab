//! Matrix JSON: `{"n": int, "entries": [[[re, im], …], …]}`, row-major.
//! Canonical output prints every number with 17 significant digits, so a
//! canonical file survives load and save byte for byte.

use std::fmt::Write as _;
use std::path::Path;

use num_complex::Complex64 as C64;
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::numkernel::CMatrix;

#[derive(Deserialize)]
struct MatrixFile {
    n: usize,
    entries: Vec<Vec<[f64; 2]>>,
}

pub fn matrix_from_json(src: &str) -> Result<CMatrix> {
    let f: MatrixFile =
        serde_json::from_str(src).map_err(|e| Error::InvalidMatrix(format!("bad matrix JSON: {e}")))?;
    if f.entries.len() != f.n {
        return Err(Error::DimensionMismatch {
            expected: f.n,
            actual: f.entries.len(),
        });
    }
    CMatrix::from_rows(
        f.entries
            .into_iter()
            .map(|row| row.into_iter().map(|[re, im]| C64::new(re, im)).collect())
            .collect(),
    )
}

fn number(out: &mut String, v: f64) {
    write!(out, "{v:.16e}").expect("write to string");
}

pub fn matrix_to_json(m: &CMatrix) -> String {
    let mut out = String::new();
    writeln!(out, "{{\n  \"n\": {},\n  \"entries\": [", m.n()).expect("write to string");
    for i in 0..m.n() {
        out.push_str("    [");
        for (j, z) in m.row(i).iter().enumerate() {
            if j > 0 {
                out.push_str(", ");
            }
            out.push('[');
            number(&mut out, z.re);
            out.push_str(", ");
            number(&mut out, z.im);
            out.push(']');
        }
        out.push(']');
        if i + 1 < m.n() {
            out.push(',');
        }
        out.push('\n');
    }
    out.push_str("  ]\n}\n");
    out
}

pub fn load_matrix(path: impl AsRef<Path>) -> Result<CMatrix> {
    let path = path.as_ref();
    let src = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", path.display())))?;
    matrix_from_json(&src)
}

pub fn save_matrix(path: impl AsRef<Path>, m: &CMatrix) -> Result<()> {
    let path = path.as_ref();
    std::fs::write(path, matrix_to_json(m))
        .map_err(|e| Error::InvalidArgument(format!("cannot write {}: {e}", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_round_trip() {
        let m = CMatrix::from_rows(vec![
            vec![C64::new(0.1, -0.0), C64::new(1.0 / 3.0, 1e-300)],
            vec![C64::new(-2.5e17, 0.0), C64::new(std::f64::consts::PI, -1.0)],
        ])
        .unwrap();
        let s = matrix_to_json(&m);
        let back = matrix_from_json(&s).unwrap();
        assert_eq!(back, m);
        assert_eq!(matrix_to_json(&back), s);
    }

    #[test]
    fn malformed() {
        assert!(matrix_from_json(r#"{"n": 2, "entries": [[[1, 0]]]}"#).is_err());
        assert!(matrix_from_json(r#"{"n": 1, "entries": [[[1, 0], [2, 0]]]}"#).is_err());
        assert!(matrix_from_json("[1, 2]").is_err());
        assert_eq!(
            matrix_from_json(r#"{"n": 1, "entries": [[[2, 1]]]}"#).unwrap()[(0, 0)],
            C64::new(2.0, 1.0)
        );
    }
}
