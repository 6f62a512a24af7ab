//! Quadrature convergence of the sectorial projection as the number of
//! Gauss–Legendre panels per contour segment doubles.

use std::f64::consts::PI;
use std::time::Instant;

use num_complex::Complex64 as C64;

use crate::contours::quadrature_sum;
use crate::error::{Error, Result};
use crate::funcalc::{sectorial_contour, sectorial_integrand, SectorSpec};
use crate::numkernel::CMatrix;

/// Tail tolerance used when truncating the contour for a study.
pub const STUDY_TAIL_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct ConvergeRow {
    pub panels: usize,
    pub max_error: f64,
    pub wall_ms: u128,
}

/// Errors of the projection computed with `panels[i]` panels on every
/// segment of a fixed truncated contour, measured against the same contour
/// with eight times the largest panel count.
pub fn converge_study(a: &CMatrix, s: SectorSpec, panels: &[usize]) -> Result<Vec<ConvergeRow>> {
    let max = *panels
        .iter()
        .max()
        .ok_or_else(|| Error::InvalidArgument("no panel counts given".into()))?;
    if panels.contains(&0) {
        return Err(Error::InvalidArgument("panel counts must be positive".into()));
    }
    let (path, _) = sectorial_contour(a, s, STUDY_TAIL_TOL)?;
    let f = sectorial_integrand(a);
    let c = C64::new(0.0, 0.5 / PI);
    let (reference, _) = quadrature_sum::<CMatrix, _>(&path.with_uniform_panels(8 * max), &f, 1)?;
    let reference = reference.scale(c);
    panels
        .iter()
        .map(|&p| {
            let t = Instant::now();
            let (v, _) = quadrature_sum::<CMatrix, _>(&path.with_uniform_panels(p), &f, 1)?;
            let max_error = v.scale(c).dist_inf(&reference);
            Ok(ConvergeRow {
                panels: p,
                max_error,
                wall_ms: t.elapsed().as_millis(),
            })
        })
        .collect()
}

pub fn to_csv(rows: &[ConvergeRow]) -> String {
    let mut out = String::from("panels,max_error,wall_ms\n");
    for r in rows {
        out.push_str(&format!("{},{:.6e},{}\n", r.panels, r.max_error, r.wall_ms));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn errors_shrink() {
        let a = CMatrix::from_real_diag(&[1.0, -2.0]);
        let s = SectorSpec::new(0.3, 3.0).unwrap();
        let rows = converge_study(&a, s, &[2, 4, 8]).unwrap();
        assert!(rows[0].max_error > rows[2].max_error);
        assert!(to_csv(&rows).starts_with("panels,max_error,wall_ms\n2,"));
    }
}
