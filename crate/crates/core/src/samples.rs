//! Seeded generators of admissible test matrices and sectors.

use std::f64::consts::PI;

use num_complex::Complex64 as C64;
use rand::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::contours::angular_distance;
use crate::error::Result;
use crate::funcalc::SectorSpec;
use crate::numkernel::{expm, inverse, CMatrix};

pub type SampleRng = SplitMix64;

pub fn rng(seed: u64) -> SampleRng {
    SplitMix64::seed_from_u64(seed)
}

/// Angular clearance of generated eigenvalues from the sector's rays.
pub const RAY_CLEARANCE: f64 = 0.15;
/// Upper bound on `‖V‖∞ ‖V⁻¹‖∞` for the eigenvector matrix.
pub const MAX_EIGVEC_COND: f64 = 100.0;
const MIN_SEPARATION: f64 = 0.15;

fn unit_complex(rng: &mut SampleRng) -> C64 {
    C64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
}

/// A sector with `θ ∈ [0, 2π)` and opening in `[0.6, 2π - 0.6]`.
pub fn random_sector(rng: &mut SampleRng) -> SectorSpec {
    let theta = rng.random_range(0.0..2.0 * PI);
    let width = rng.random_range(0.6..2.0 * PI - 0.6);
    SectorSpec::new(theta, theta + width).expect("width within (0, 2π)")
}

/// A diagonalizable matrix `V D V⁻¹` with its construction data.
#[derive(Debug, Clone)]
pub struct Sample {
    pub a: CMatrix,
    pub eigenvalues: Vec<C64>,
    /// Columns are eigenvectors.
    pub v: CMatrix,
    pub v_inv: CMatrix,
}

impl Sample {
    pub fn eigenvector(&self, k: usize) -> Vec<C64> {
        (0..self.v.n()).map(|i| self.v[(i, k)]).collect()
    }

    /// `V diag(keep) V⁻¹`.
    pub fn projector(&self, keep: impl Fn(C64) -> bool) -> CMatrix {
        let d: Vec<C64> = self
            .eigenvalues
            .iter()
            .map(|&z| if keep(z) { C64::new(1.0, 0.0) } else { C64::new(0.0, 0.0) })
            .collect();
        &(&self.v * &CMatrix::from_diag(&d)) * &self.v_inv
    }
}

/// Random eigenvector matrix with condition number at most
/// [`MAX_EIGVEC_COND`].
pub fn random_eigvecs(rng: &mut SampleRng, n: usize) -> (CMatrix, CMatrix) {
    loop {
        let v = CMatrix::from_fn(n, |_, _| unit_complex(rng));
        if let Ok(inv) = inverse(&v) {
            if v.norm_inf() * inv.norm_inf() <= MAX_EIGVEC_COND {
                return (v, inv);
            }
        }
    }
}

pub fn from_eigenvalues(rng: &mut SampleRng, eigenvalues: Vec<C64>) -> Sample {
    let (v, v_inv) = random_eigvecs(rng, eigenvalues.len());
    let a = &(&v * &CMatrix::from_diag(&eigenvalues)) * &v_inv;
    Sample { a, eigenvalues, v, v_inv }
}

/// A random `n×n` matrix with distinct nonzero eigenvalues of modulus in
/// `[0.5, 2]`, all at least [`RAY_CLEARANCE`] from both rays of `s`, at
/// least one on each side.
pub fn admissible_matrix(rng: &mut SampleRng, n: usize, s: SectorSpec) -> Sample {
    let mut ev: Vec<C64> = Vec::with_capacity(n);
    while ev.len() < n {
        let want_inside = match ev.len() {
            0 => Some(true),
            1 => Some(false),
            _ => None,
        };
        let z = C64::from_polar(rng.random_range(0.5..2.0), rng.random_range(0.0..2.0 * PI));
        let clear = s.rays().iter().all(|&r| angular_distance(z.arg(), r) >= RAY_CLEARANCE);
        let side_ok = want_inside.is_none_or(|w| s.contains(z) == w);
        let separated = ev.iter().all(|&w| (w - z).norm() >= MIN_SEPARATION);
        if clear && side_ok && separated {
            ev.push(z);
        }
    }
    from_eigenvalues(rng, ev)
}

/// `exp(B)` for a random `B` with `‖B‖∞ ≤ max_norm`; returns `(exp B, B)`.
pub fn near_identity(rng: &mut SampleRng, n: usize, max_norm: f64) -> (CMatrix, CMatrix) {
    let b = CMatrix::from_fn(n, |_, _| unit_complex(rng));
    let b = b.scale_real(max_norm / b.norm_inf());
    (expm(&b), b)
}

/// Random unitary matrix (Gram–Schmidt on a random complex matrix).
pub fn random_unitary(rng: &mut SampleRng, n: usize) -> CMatrix {
    loop {
        let m = CMatrix::from_fn(n, |_, _| unit_complex(rng));
        let mut cols: Vec<Vec<C64>> = Vec::with_capacity(n);
        let mut ok = true;
        for j in 0..n {
            let mut v: Vec<C64> = (0..n).map(|i| m[(i, j)]).collect();
            for _ in 0..2 {
                for q in &cols {
                    let d: C64 = q.iter().zip(&v).map(|(a, b)| a.conj() * b).sum();
                    for (vi, qi) in v.iter_mut().zip(q) {
                        *vi -= d * qi;
                    }
                }
            }
            let nrm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            if nrm < 1e-3 {
                ok = false;
                break;
            }
            cols.push(v.into_iter().map(|z| z / nrm).collect());
        }
        if ok {
            return CMatrix::from_fn(n, |i, j| cols[j][i]);
        }
    }
}

/// Hermitian `Q D Q*` with real eigenvalues of modulus in `[0.3, 2]`, mixed
/// signs; with `zero_eigenvalue` the last one is replaced by 0.
pub fn random_hermitian(rng: &mut SampleRng, n: usize, zero_eigenvalue: bool) -> Result<(CMatrix, Vec<f64>)> {
    let mut d: Vec<f64> = (0..n)
        .map(|k| {
            let m = rng.random_range(0.3..2.0);
            if k % 2 == 0 { m } else { -m }
        })
        .collect();
    if zero_eigenvalue {
        d[n - 1] = 0.0;
    }
    let q = random_unitary(rng, n);
    let a = &(&q * &CMatrix::from_real_diag(&d)) * &q.adjoint();
    // symmetrize exactly
    let a = (&a + &a.adjoint()).scale_real(0.5);
    Ok((a, d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_matrix() {
        let s = random_sector(&mut rng(7));
        let a = admissible_matrix(&mut rng(1), 4, s);
        let b = admissible_matrix(&mut rng(1), 4, s);
        assert_eq!(a.a, b.a);
    }

    #[test]
    fn construction_is_consistent() {
        let mut r = rng(3);
        let s = random_sector(&mut r);
        let smp = admissible_matrix(&mut r, 5, s);
        for (k, &mu) in smp.eigenvalues.iter().enumerate() {
            let v = smp.eigenvector(k);
            let av = smp.a.matvec(&v);
            let res: f64 = av.iter().zip(&v).map(|(x, y)| (x - mu * y).norm()).fold(0.0, f64::max);
            assert!(res < 1e-12);
        }
        assert!(s.contains(smp.eigenvalues[0]) && !s.contains(smp.eigenvalues[1]));
        let q = random_unitary(&mut r, 4);
        assert!((&q * &q.adjoint()).dist_inf(&CMatrix::identity(4)) < 1e-13);
        let (h, _) = random_hermitian(&mut r, 4, true).unwrap();
        assert_eq!(h.hermitian_defect(), 0.0);
    }
}
