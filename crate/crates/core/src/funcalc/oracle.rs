use super::SectorSpec;
use crate::contours::angular_distance;
use crate::error::{Error, Result};
use crate::numkernel::{eig_oracle, CMatrix, CLUSTER_RTOL};

use super::placement::RAY_ATOL;

/// Sum of the oracle Riesz projectors over eigenvalues inside the open
/// sector. A zero eigenvalue lies in no open sector.
pub fn spectral_projection_oracle(a: &CMatrix, s: SectorSpec) -> Result<CMatrix> {
    let data = eig_oracle(a)?;
    let zero_tol = CLUSTER_RTOL * a.norm_inf();
    for z in data.values().filter(|z| z.norm() > zero_tol) {
        for ray in s.rays() {
            if angular_distance(z.arg(), ray) < RAY_ATOL {
                return Err(Error::RayHitsSpectrum { eigenvalue: z, ray });
            }
        }
    }
    Ok(data.projector_sum(|z| z.norm() > zero_tol && s.contains(z)))
}

/// Projector onto the span of eigenvectors of positive eigenvalues of a
/// hermitian matrix, zero on the nullspace. Eigenvalues within
/// `max(tol, 1e-7)·‖A‖∞` of 0 count as zero.
pub fn positive_eigenprojection(a: &CMatrix, tol: f64) -> Result<CMatrix> {
    let defect = a.hermitian_defect();
    if defect > 1e-12 {
        return Err(Error::NotHermitian(defect));
    }
    let data = eig_oracle(a)?;
    let zero_tol = tol.max(CLUSTER_RTOL) * a.norm_inf();
    Ok(data.projector_sum(|z| z.re > zero_tol))
}

#[cfg(test)]
mod tests {
    use std::f64::consts::PI;

    use super::*;
    use crate::numkernel::C64;

    #[test]
    fn oracle_examples() {
        let s = SectorSpec::new(PI / 2.0, 1.5 * PI).unwrap();
        let p = spectral_projection_oracle(&CMatrix::from_real_diag(&[1.0, -1.0]), s).unwrap();
        assert!(p.dist_inf(&CMatrix::from_real_diag(&[0.0, 1.0])) < 1e-9);
        let nil = CMatrix::from_real_rows(&[&[0.0, 1.0], &[0.0, 0.0]]).unwrap();
        assert!(spectral_projection_oracle(&nil, s).unwrap().max_abs() < 1e-12);
    }

    #[test]
    fn positive_examples() {
        let p = positive_eigenprojection(&CMatrix::from_real_diag(&[2.0, -3.0]), 1e-10).unwrap();
        assert!(p.dist_inf(&CMatrix::from_real_diag(&[1.0, 0.0])) < 1e-9);
        let p = positive_eigenprojection(&CMatrix::from_real_diag(&[0.0, 5.0]), 1e-10).unwrap();
        assert!(p.dist_inf(&CMatrix::from_real_diag(&[0.0, 1.0])) < 1e-9);
        let swap = CMatrix::from_real_rows(&[&[0.0, 1.0], &[1.0, 0.0]]).unwrap();
        let p = positive_eigenprojection(&swap, 1e-10).unwrap();
        let half = CMatrix::from_real_rows(&[&[0.5, 0.5], &[0.5, 0.5]]).unwrap();
        assert!(p.dist_inf(&half) < 1e-9);
    }

    #[test]
    fn non_hermitian_rejected() {
        let a = CMatrix::from_rows(vec![
            vec![C64::new(1.0, 0.0), C64::new(0.0, 1.0)],
            vec![C64::new(0.0, 1.0), C64::new(1.0, 0.0)],
        ])
        .unwrap();
        assert!(matches!(positive_eigenprojection(&a, 1e-10), Err(Error::NotHermitian(_))));
    }
}
