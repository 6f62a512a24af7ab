//! Independent eigenstructure oracle for small matrices.
//!
//! Eigenvalues come from the characteristic polynomial (Faddeev–LeVerrier)
//! and Durand–Kerner root finding; nearby roots are clustered to infer
//! algebraic multiplicities. Riesz projectors are computed with the
//! trapezoidal rule on a small circle around each cluster, which is exact up
//! to an exponentially small term for a circle that isolates the cluster.

use std::f64::consts::PI;

use super::lu::resolvent;
use super::matrix::{CMatrix, C64, ONE, ZERO};
use crate::error::{Error, Result};

pub const ORACLE_MAX_N: usize = 12;

/// Relative clustering radius for polynomial roots.
pub const CLUSTER_RTOL: f64 = 1e-7;

const DK_MAX_ITERS: usize = 2000;
const RIESZ_NODES: usize = 256;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Eigenvalue {
    pub value: C64,
    pub multiplicity: usize,
}

#[derive(Debug, Clone)]
pub struct EigenData {
    pub eigenvalues: Vec<Eigenvalue>,
    /// Riesz projector onto the generalized eigenspace of each eigenvalue,
    /// in the same order as `eigenvalues`.
    pub projectors: Vec<CMatrix>,
}

impl EigenData {
    pub fn values(&self) -> impl Iterator<Item = C64> + '_ {
        self.eigenvalues.iter().map(|e| e.value)
    }

    /// Sum of the projectors whose eigenvalue satisfies `keep`.
    pub fn projector_sum(&self, mut keep: impl FnMut(C64) -> bool) -> CMatrix {
        let n = self.projectors.first().map_or(0, |p| p.n());
        let mut sum = CMatrix::zeros(n);
        for (ev, proj) in self.eigenvalues.iter().zip(&self.projectors) {
            if keep(ev.value) {
                sum += proj;
            }
        }
        sum
    }
}

pub(crate) fn cluster_radius(z: C64) -> f64 {
    CLUSTER_RTOL * z.norm().max(1.0)
}

/// Coefficients `c[0..=n]` of `det(zI - A) = Σ c_k z^k` (so `c[n] = 1`).
pub fn characteristic_polynomial(a: &CMatrix) -> Vec<C64> {
    let n = a.n();
    let mut c = vec![ZERO; n + 1];
    c[n] = ONE;
    let mut m = CMatrix::zeros(n);
    for k in 1..=n {
        let mut next = a.matmul(&m);
        for i in 0..n {
            next[(i, i)] += c[n - k + 1];
        }
        m = next;
        c[n - k] = -a.matmul(&m).trace() / k as f64;
    }
    c
}

fn horner(c: &[C64], z: C64) -> C64 {
    c.iter().rev().fold(ZERO, |acc, &ck| acc * z + ck)
}

/// All roots of the monic polynomial `Σ c_k z^k`, `c[n] = 1`.
pub fn durand_kerner(c: &[C64]) -> Result<Vec<C64>> {
    let n = c.len() - 1;
    if n == 0 {
        return Ok(Vec::new());
    }
    // Fujiwara bound on root moduli.
    let bound = (1..=n)
        .map(|k| {
            let coeff = c[n - k].norm();
            if k == n {
                (coeff / 2.0).powf(1.0 / k as f64)
            } else {
                coeff.powf(1.0 / k as f64)
            }
        })
        .fold(0.0, f64::max)
        * 2.0;
    let radius = bound.max(1e-3);
    let mut z: Vec<C64> = (0..n)
        .map(|k| C64::from_polar(radius, 2.0 * PI * k as f64 / n as f64 + 0.4))
        .collect();

    for _ in 0..DK_MAX_ITERS {
        let mut max_step: f64 = 0.0;
        for i in 0..n {
            let mut denom = ONE;
            for j in 0..n {
                if i != j {
                    denom *= z[i] - z[j];
                }
            }
            if denom == ZERO {
                // coincident iterates; nudge apart
                z[i] += C64::new(1e-12, 1e-12) * radius;
                max_step = f64::INFINITY;
                continue;
            }
            let step = horner(c, z[i]) / denom;
            z[i] -= step;
            max_step = max_step.max(step.norm() / z[i].norm().max(1.0));
        }
        if max_step < 1e-15 {
            break;
        }
    }

    // Residual check relative to the polynomial's magnitude.
    for &zi in &z {
        let scale: f64 = c
            .iter()
            .enumerate()
            .map(|(k, ck)| ck.norm() * zi.norm().max(1.0).powi(k as i32))
            .sum();
        if !(horner(c, zi).norm() <= 1e-9 * scale) {
            return Err(Error::RootsDidNotConverge);
        }
    }
    Ok(z)
}

/// Groups roots within `CLUSTER_RTOL` relative distance.
fn cluster_roots(roots: &[C64]) -> Result<Vec<Eigenvalue>> {
    let n = roots.len();
    let mut label: Vec<usize> = (0..n).collect();
    fn find(label: &mut [usize], i: usize) -> usize {
        let mut r = i;
        while label[r] != r {
            r = label[r];
        }
        label[i] = r;
        r
    }
    for i in 0..n {
        for j in i + 1..n {
            let d = (roots[i] - roots[j]).norm();
            if d <= cluster_radius(roots[i]).max(cluster_radius(roots[j])) {
                let (ri, rj) = (find(&mut label, i), find(&mut label, j));
                label[ri.max(rj)] = ri.min(rj);
            }
        }
    }
    let mut clusters: Vec<(usize, C64, usize)> = Vec::new();
    for i in 0..n {
        let r = find(&mut label, i);
        match clusters.iter_mut().find(|c| c.0 == r) {
            Some(c) => {
                c.1 += roots[i];
                c.2 += 1;
            }
            None => clusters.push((r, roots[i], 1)),
        }
    }
    let eigs: Vec<Eigenvalue> = clusters
        .into_iter()
        .map(|(_, sum, m)| Eigenvalue {
            value: sum / m as f64,
            multiplicity: m,
        })
        .collect();
    for i in 0..eigs.len() {
        for j in i + 1..eigs.len() {
            let (a, b) = (eigs[i].value, eigs[j].value);
            if (a - b).norm() < 10.0 * cluster_radius(a).max(cluster_radius(b)) {
                return Err(Error::ClusterAmbiguity { a, b });
            }
        }
    }
    Ok(eigs)
}

fn check_size(a: &CMatrix) -> Result<()> {
    if a.n() > ORACLE_MAX_N {
        return Err(Error::OracleTooLarge {
            n: a.n(),
            max: ORACLE_MAX_N,
        });
    }
    if !a.is_finite() {
        return Err(Error::InvalidMatrix("non-finite entry".into()));
    }
    Ok(())
}

/// Distinct eigenvalues with algebraic multiplicities, without projectors.
pub fn eigenvalues(a: &CMatrix) -> Result<Vec<Eigenvalue>> {
    check_size(a)?;
    let scale = a.norm_inf();
    if scale == 0.0 {
        return Ok(vec![Eigenvalue {
            value: ZERO,
            multiplicity: a.n(),
        }]);
    }
    let c = characteristic_polynomial(&a.scale_real(1.0 / scale));
    let roots: Vec<C64> = durand_kerner(&c)?.into_iter().map(|z| z * scale).collect();
    cluster_roots(&roots)
}

/// Eigenvalues, multiplicities and Riesz projectors of `a` (`n <= 12`).
pub fn eig_oracle(a: &CMatrix) -> Result<EigenData> {
    let eigenvalues = eigenvalues(a)?;
    let n = a.n();
    let projectors = if eigenvalues.len() == 1 {
        vec![CMatrix::identity(n)]
    } else {
        eigenvalues
            .iter()
            .enumerate()
            .map(|(k, ev)| {
                let gap = eigenvalues
                    .iter()
                    .enumerate()
                    .filter(|(l, _)| *l != k)
                    .map(|(_, o)| (o.value - ev.value).norm())
                    .fold(f64::INFINITY, f64::min);
                riesz_projector(a, ev.value, 0.5 * gap)
            })
            .collect::<Result<_>>()?
    };
    Ok(EigenData {
        eigenvalues,
        projectors,
    })
}

/// `(i/2π) ∮ (A - λ)^{-1} dλ` over the circle `|λ - center| = radius`,
/// trapezoidal rule.
fn riesz_projector(a: &CMatrix, center: C64, radius: f64) -> Result<CMatrix> {
    let mut p = CMatrix::zeros(a.n());
    for j in 0..RIESZ_NODES {
        let t = 2.0 * PI * (j as f64 + 0.5) / RIESZ_NODES as f64;
        let e = C64::from_polar(1.0, t);
        let r = resolvent(a, center + e * radius)?;
        p.axpy(e, &r);
    }
    Ok(p.scale_real(-radius / RIESZ_NODES as f64))
}
