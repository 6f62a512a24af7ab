//! LU factorization with partial pivoting and shifted solves.

use super::matrix::{CMatrix, C64, ZERO};
use crate::error::{Error, Result};

/// Relative pivot threshold: a pivot below `PIVOT_RTOL * ‖M‖∞` is singular.
pub const PIVOT_RTOL: f64 = 1e-13;

#[derive(Debug, Clone)]
pub struct Lu {
    lu: CMatrix,
    perm: Vec<usize>,
}

impl Lu {
    /// Factors `m`; `shift` is only used to label a `SingularShift` error.
    pub fn factor(m: &CMatrix, shift: C64) -> Result<Self> {
        let n = m.n();
        let threshold = PIVOT_RTOL * m.norm_inf();
        let mut lu = m.clone();
        let mut perm: Vec<usize> = (0..n).collect();
        for k in 0..n {
            let (p, pmax) = (k..n)
                .map(|i| (i, lu[(i, k)].norm()))
                .fold((k, -1.0), |acc, x| if x.1 > acc.1 { x } else { acc });
            if !(pmax > threshold) || pmax == 0.0 {
                return Err(Error::SingularShift { lambda: shift });
            }
            let data = lu.data_mut();
            if p != k {
                for j in 0..n {
                    data.swap(k * n + j, p * n + j);
                }
                perm.swap(k, p);
            }
            let (head, tail) = data.split_at_mut((k + 1) * n);
            let pivot_row = &head[k * n..];
            let pivot = pivot_row[k];
            for row in tail.chunks_exact_mut(n) {
                let l = row[k] / pivot;
                row[k] = l;
                if l == ZERO {
                    continue;
                }
                for (x, u) in row[k + 1..].iter_mut().zip(&pivot_row[k + 1..]) {
                    *x -= l * u;
                }
            }
        }
        Ok(Self { lu, perm })
    }

    pub fn n(&self) -> usize {
        self.lu.n()
    }

    /// Solves `M X = B` column by column.
    pub fn solve(&self, b: &CMatrix) -> Result<CMatrix> {
        let n = self.n();
        if b.n() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                actual: b.n(),
            });
        }
        // Row-oriented substitution: all right-hand sides at once.
        let mut x = CMatrix::from_fn(n, |i, j| b[(self.perm[i], j)]);
        let xd = x.data_mut();
        for i in 0..n {
            let (done, rest) = xd.split_at_mut(i * n);
            let xi = &mut rest[..n];
            for (k, &l) in self.lu.row(i)[..i].iter().enumerate() {
                if l != ZERO {
                    for (a, b) in xi.iter_mut().zip(&done[k * n..(k + 1) * n]) {
                        *a -= l * b;
                    }
                }
            }
        }
        for i in (0..n).rev() {
            let (head, rest) = xd.split_at_mut((i + 1) * n);
            let xi = &mut head[i * n..];
            let row = self.lu.row(i);
            for (off, &u) in row[i + 1..].iter().enumerate() {
                if u != ZERO {
                    let k = off;
                    for (a, b) in xi.iter_mut().zip(&rest[k * n..(k + 1) * n]) {
                        *a -= u * b;
                    }
                }
            }
            let inv = row[i].inv();
            for a in xi.iter_mut() {
                *a *= inv;
            }
        }
        Ok(x)
    }

    pub fn solve_vec(&self, b: &[C64]) -> Result<Vec<C64>> {
        if b.len() != self.n() {
            return Err(Error::DimensionMismatch {
                expected: self.n(),
                actual: b.len(),
            });
        }
        let mut x: Vec<C64> = self.perm.iter().map(|&p| b[p]).collect();
        self.solve_in_place(&mut x);
        Ok(x)
    }

    fn solve_in_place(&self, x: &mut [C64]) {
        let n = self.n();
        for i in 0..n {
            let row = self.lu.row(i);
            let mut s = x[i];
            for k in 0..i {
                s -= row[k] * x[k];
            }
            x[i] = s;
        }
        for i in (0..n).rev() {
            let row = self.lu.row(i);
            let mut s = x[i];
            for k in i + 1..n {
                s -= row[k] * x[k];
            }
            x[i] = s / row[i];
        }
    }
}

/// Returns `X = (A - λI)^{-1} B`.
pub fn solve_shifted(a: &CMatrix, lambda: C64, b: &CMatrix) -> Result<CMatrix> {
    Lu::factor(&a.shifted(lambda), lambda)?.solve(b)
}

/// Returns `(A - λI)^{-1}`.
pub fn resolvent(a: &CMatrix, lambda: C64) -> Result<CMatrix> {
    solve_shifted(a, lambda, &CMatrix::identity(a.n()))
}

pub fn inverse(a: &CMatrix) -> Result<CMatrix> {
    resolvent(a, ZERO)
}
