//! Fourier–Galerkin matrices of periodic differential-operator symbols and
//! the comparison of the matrix-level sectorial projection with the
//! operator of the truncated projection symbol.

use std::f64::consts::PI;

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::funcalc::{sectorial_projection_with, CalcSettings, SectorSpec};
use crate::numkernel::CMatrix;
use crate::symbolcalc::{projection_symbol_with, ClassicalSymbol};

/// Largest supported frequency cutoff.
pub const K_MAX: usize = 64;
/// Sample count of the DFT used by [`assemble`].
pub const DFT_SAMPLES: usize = 256;
/// Highest Fourier mode a coefficient may carry in [`assemble`].
pub const BAND_LIMIT: usize = 64;
const DFT_DROP: f64 = 1e-14;

/// `Op(p)` on trigonometric polynomials of degree `K` with values in `C^N`.
/// Unknowns are ordered mode-major: index `(k + K) N + i` for `k ∈ -K..=K`.
#[derive(Debug, Clone, PartialEq)]
pub struct FourierOperator {
    pub k_max: usize,
    pub n: usize,
    pub mat: CMatrix,
}

impl FourierOperator {
    pub fn modes(&self) -> impl Iterator<Item = i64> {
        let k = self.k_max as i64;
        -k..=k
    }

    pub fn block_index(&self, k: i64) -> usize {
        (k + self.k_max as i64) as usize * self.n
    }

    /// Block `(k', k)`.
    pub fn block(&self, row_mode: i64, col_mode: i64) -> CMatrix {
        let (r, c) = (self.block_index(row_mode), self.block_index(col_mode));
        CMatrix::from_fn(self.n, |i, j| self.mat[(r + i, c + j)])
    }

    /// Indices of the unknowns whose mode satisfies `lo ≤ |k| ≤ hi`.
    pub fn band_indices(&self, lo: usize, hi: usize) -> Vec<usize> {
        self.modes()
            .filter(|k| (lo..=hi).contains(&(k.unsigned_abs() as usize)))
            .flat_map(|k| {
                let b = self.block_index(k);
                b..b + self.n
            })
            .collect()
    }
}

fn check_cutoff(k_max: usize) -> Result<()> {
    if (1..=K_MAX).contains(&k_max) {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("frequency cutoff must lie in 1..={K_MAX}, got {k_max}")))
    }
}

/// Fourier coefficients `ĉ_ν`, `|ν| ≤ max_mode`, of samples on a uniform
/// grid of `[0, 2π)`.
fn dft(samples: &[CMatrix], max_mode: usize) -> Vec<CMatrix> {
    let m = samples.len();
    let n = samples[0].n();
    let maxmode = max_mode as i64;
    (-maxmode..=maxmode)
        .map(|nu| {
            let mut acc = CMatrix::zeros(n);
            for (s, v) in samples.iter().enumerate() {
                let w = C64::from_polar(1.0 / m as f64, -2.0 * PI * (nu * s as i64) as f64 / m as f64);
                acc.axpy(w, v);
            }
            acc
        })
        .collect()
}

/// Assembles `Op(p)`: block `(k', k)` is Fourier coefficient `k' - k` of
/// `x ↦ p(x, k)`. Coefficients come from a [`DFT_SAMPLES`]-point DFT of
/// each `ξ`-coefficient, which is exact for band-limited coefficients.
pub fn assemble(p: &ClassicalSymbol, k_max: usize) -> Result<FourierOperator> {
    check_cutoff(k_max)?;
    let n = p.dim();
    let m = p.order();
    // ĉ_t(ν) for the coefficient of ξ^{m-t}
    let mut coeffs = Vec::with_capacity(p.num_terms());
    for t in 0..p.num_terms() {
        let samples: Vec<CMatrix> = (0..DFT_SAMPLES)
            .map(|s| p.eval_term(t, 2.0 * PI * s as f64 / DFT_SAMPLES as f64, 1.0))
            .collect();
        let all = dft(&samples, DFT_SAMPLES / 2 - 1);
        let scale = all.iter().map(CMatrix::max_abs).fold(0.0, f64::max);
        let centre = DFT_SAMPLES / 2 - 1;
        let leak = all
            .iter()
            .enumerate()
            .filter(|(i, _)| (*i as i64 - centre as i64).unsigned_abs() as usize > BAND_LIMIT)
            .map(|(_, c)| c.max_abs())
            .fold(0.0, f64::max);
        if leak > 1e-12 * scale.max(1.0) {
            return Err(Error::BandLimitExceeded { band: BAND_LIMIT });
        }
        let kept: Vec<CMatrix> = all[centre - 2 * k_max..=centre + 2 * k_max]
            .iter()
            .map(|c| {
                CMatrix::from_fn(n, |i, j| {
                    let z = c[(i, j)];
                    let clean = |v: f64| if v.abs() <= DFT_DROP * scale { 0.0 } else { v };
                    C64::new(clean(z.re), clean(z.im))
                })
            })
            .collect();
        coeffs.push(kept);
    }
    let kk = k_max as i64;
    let size = n * (2 * k_max + 1);
    let mut mat = CMatrix::zeros(size);
    for kr in -kk..=kk {
        for kc in -kk..=kk {
            let nu = (kr - kc + 2 * kk) as usize;
            let mut block = CMatrix::zeros(n);
            for (t, c) in coeffs.iter().enumerate() {
                let d = (m - t) as i32;
                block.axpy(C64::new((kc as f64).powi(d), 0.0), &c[nu]);
            }
            mat.set_block((kr + kk) as usize * n, (kc + kk) as usize * n, &block);
        }
    }
    Ok(FourierOperator { k_max, n, mat })
}

/// Assembles the operator of a symbol given by its sampled values
/// `σ(x, ξ)` for `|ξ| ≥ ξ_floor`; block columns with `|k| < ξ_floor` are
/// zero. Fourier coefficients use the trapezoid rule on `4K + 1` points.
pub fn assemble_from_terms<F>(sigma: F, n: usize, k_max: usize, xi_floor: usize) -> Result<FourierOperator>
where
    F: Fn(f64, f64) -> Result<CMatrix>,
{
    check_cutoff(k_max)?;
    if xi_floor < 1 {
        return Err(Error::InvalidArgument("xi_floor must be at least 1".into()));
    }
    let kk = k_max as i64;
    let pts = 4 * k_max + 1;
    let mut mat = CMatrix::zeros(n * (2 * k_max + 1));
    for kc in -kk..=kk {
        if (kc.unsigned_abs() as usize) < xi_floor {
            continue;
        }
        let samples: Vec<CMatrix> = (0..pts)
            .map(|s| sigma(2.0 * PI * s as f64 / pts as f64, kc as f64))
            .collect::<Result<_>>()?;
        let c = dft(&samples, 2 * k_max);
        for kr in -kk..=kk {
            let nu = (kr - kc + 2 * kk) as usize;
            mat.set_block((kr + kk) as usize * n, (kc + kk) as usize * n, &c[nu]);
        }
    }
    Ok(FourierOperator { k_max, n, mat })
}

/// Smallest cutoff accepted by [`cross_check`].
pub const CROSS_CHECK_MIN_K: usize = 8;

/// Mid-band errors of the truncated projection symbol against the matrix
/// projection, at the requested cutoff and at half of it.
#[derive(Debug, Clone, PartialEq)]
pub struct CrossCheck {
    pub k_max: usize,
    pub j_max: usize,
    pub error: f64,
    pub half_k_max: usize,
    pub half_error: f64,
}

/// `E(K, J) = ‖Π(assemble(p, K)) - Op(Σ_{j≤J} π_{θ,φ,-j})‖∞` restricted to
/// modes `1 ≤ |k| ≤ K/2`.
pub fn mid_band_error(p: &ClassicalSymbol, s: SectorSpec, k_max: usize, j_max: usize, tol: f64) -> Result<f64> {
    let (pi, op) = projection_pair(p, s, k_max, j_max, tol)?;
    let idx = pi.band_indices(1, k_max / 2);
    Ok(pi.mat.select(&idx).dist_inf(&op.mat.select(&idx)))
}

/// The matrix projection of `assemble(p, K)` and the operator of the
/// truncated projection symbol, both as Fourier operators.
pub fn projection_pair(
    p: &ClassicalSymbol,
    s: SectorSpec,
    k_max: usize,
    j_max: usize,
    tol: f64,
) -> Result<(FourierOperator, FourierOperator)> {
    let a = assemble(p, k_max)?;
    let cfg = CalcSettings::new(tol);
    let pi = sectorial_projection_with(&a.mat, s, &cfg)?.value;
    let op = assemble_from_terms(
        |x, xi| Ok(projection_symbol_with(p, 0..=j_max, x, xi, s, &cfg)?.value),
        p.dim(),
        k_max,
        1,
    )?;
    Ok((FourierOperator { mat: pi, ..a }, op))
}

pub fn cross_check(p: &ClassicalSymbol, s: SectorSpec, k_max: usize, j_max: usize, tol: f64) -> Result<CrossCheck> {
    if k_max < CROSS_CHECK_MIN_K {
        return Err(Error::InvalidArgument(format!("cross check needs K >= {CROSS_CHECK_MIN_K}, got {k_max}")));
    }
    p.check_minimal_growth(&s.rays())?;
    Ok(CrossCheck {
        k_max,
        j_max,
        error: mid_band_error(p, s, k_max, j_max, tol)?,
        half_k_max: k_max / 2,
        half_error: mid_band_error(p, s, k_max / 2, j_max, tol)?,
    })
}
