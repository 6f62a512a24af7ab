use std::fmt;
use std::sync::{Arc, Mutex};

use num_complex::Complex64 as C64;

use super::words::{seeley_step, WordSum};
use crate::contours::angular_distance;
use crate::error::{Error, Result};
use crate::expr::{parse_coeff, Expr, Var};
use crate::numkernel::{eigenvalues, CMatrix};

/// Deepest supported recursion index and derivative order.
pub const J_MAX: usize = 4;
/// Angular clearance required between principal-symbol eigenvalues and the
/// declared rays in [`ClassicalSymbol::check_minimal_growth`].
pub const RAY_DELTA: f64 = 0.05;
/// Number of `x` samples in the minimal-growth check.
pub const X_SAMPLES: usize = 64;

/// A matrix symbol on the circle, polynomial in `ξ`:
/// `p(x, ξ) = Σ_k p_{m-k}(x, ξ)` with `p_{m-k} = c_{m-k}(x) ξ^{m-k}`.
pub struct ClassicalSymbol {
    m: usize,
    n: usize,
    source: Vec<Expr>,
    /// `coeff[k][a]`: `∂_x^a` of the `N×N` coefficients of `ξ^{m-k}`.
    coeff: Vec<Vec<Vec<Expr>>>,
    recursion: Mutex<Vec<Arc<WordSum>>>,
}

impl fmt::Debug for ClassicalSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ClassicalSymbol")
            .field("m", &self.m)
            .field("n", &self.n)
            .field("entries", &self.source.iter().map(|e| e.to_string()).collect::<Vec<_>>())
            .finish()
    }
}

impl Clone for ClassicalSymbol {
    fn clone(&self) -> Self {
        Self {
            m: self.m,
            n: self.n,
            source: self.source.clone(),
            coeff: self.coeff.clone(),
            recursion: Mutex::new(self.recursion.lock().expect("recursion cache").clone()),
        }
    }
}

impl ClassicalSymbol {
    /// Builds a symbol from `N×N` row-major entry expressions.
    pub fn new(n: usize, entries: Vec<Expr>) -> Result<Self> {
        if n == 0 || entries.len() != n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n,
                actual: entries.len(),
            });
        }
        let polys: Vec<Vec<Expr>> = entries.iter().map(|e| e.xi_poly()).collect::<Result<_>>()?;
        let m = polys.iter().map(|p| p.len() - 1).max().unwrap_or(0);
        if m == 0 {
            return Err(Error::InvalidArgument("symbol must have positive order in xi".into()));
        }
        let coeff = (0..=m)
            .map(|k| {
                let d = m - k;
                let base: Vec<Expr> =
                    polys.iter().map(|p| p.get(d).cloned().unwrap_or(Expr::Num(0.0))).collect();
                let mut levels = vec![base];
                for a in 1..=J_MAX {
                    let next = levels[a - 1].iter().map(|e| e.diff(Var::X)).collect();
                    levels.push(next);
                }
                levels
            })
            .collect();
        Ok(Self {
            m,
            n,
            source: entries,
            coeff,
            recursion: Mutex::new(Vec::new()),
        })
    }

    /// Parses `"e11, e12; e21, e22"`: rows separated by `;`, entries by `,`.
    pub fn parse(src: &str) -> Result<Self> {
        let rows: Vec<&str> = src.split(';').collect();
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            let cells: Vec<&str> = row.split(',').collect();
            if cells.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    actual: cells.len(),
                });
            }
            for c in cells {
                entries.push(parse_coeff(c)?);
            }
        }
        Self::new(n, entries)
    }

    pub fn order(&self) -> usize {
        self.m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[Expr] {
        &self.source
    }

    /// Number of homogeneous terms, `m + 1` (degrees `m, …, 0`).
    pub fn num_terms(&self) -> usize {
        self.m + 1
    }

    fn coeff_level(&self, k: usize, a: usize) -> Vec<Expr> {
        match self.coeff[k].get(a) {
            Some(level) => level.clone(),
            None => self.coeff[k][0].iter().map(|e| e.diff_n(Var::X, a)).collect(),
        }
    }

    /// Whether `∂_x^a ∂_ξ^b p_{m-k}` vanishes identically.
    pub fn deriv_vanishes(&self, k: usize, a: usize, b: usize) -> bool {
        if k > self.m || b > self.m - k {
            return true;
        }
        match self.coeff[k].get(a) {
            Some(level) => level.iter().all(Expr::is_zero),
            None => self.coeff_level(k, a).iter().all(Expr::is_zero),
        }
    }

    pub fn term_vanishes(&self, k: usize) -> bool {
        self.deriv_vanishes(k, 0, 0)
    }

    /// `∂_x^a ∂_ξ^b p_{m-k}(x, ξ)`.
    pub fn eval_deriv(&self, k: usize, a: usize, b: usize, x: f64, xi: f64) -> CMatrix {
        if self.deriv_vanishes(k, a, b) {
            return CMatrix::zeros(self.n);
        }
        let d = self.m - k;
        let falling: f64 = (0..b).map(|i| (d - i) as f64).product();
        let factor = falling * xi.powi((d - b) as i32);
        let level;
        let exprs = match self.coeff[k].get(a) {
            Some(l) => l,
            None => {
                level = self.coeff_level(k, a);
                &level
            }
        };
        CMatrix::from_fn(self.n, |i, j| C64::new(exprs[i * self.n + j].eval(x, 0.0) * factor, 0.0))
    }

    /// `p_{m-k}(x, ξ)`.
    pub fn eval_term(&self, k: usize, x: f64, xi: f64) -> CMatrix {
        self.eval_deriv(k, 0, 0, x, xi)
    }

    pub fn principal(&self, x: f64, xi: f64) -> CMatrix {
        self.eval_term(0, x, xi)
    }

    /// The full polynomial symbol `p(x, ξ)`, valid for every real `ξ`.
    pub fn eval_full(&self, x: f64, xi: f64) -> CMatrix {
        CMatrix::from_fn(self.n, |i, j| C64::new(self.source[i * self.n + j].eval(x, xi), 0.0))
    }

    /// Highest Fourier mode in `x`, if the coefficients are band-limited
    /// trigonometric polynomials.
    pub fn x_band(&self) -> Option<u32> {
        self.source.iter().map(|e| e.x_band()).try_fold(0, |acc, b| Some(acc.max(b?)))
    }

    pub fn is_x_independent(&self) -> bool {
        self.source.iter().all(|e| !e.depends_on(Var::X))
    }

    /// Samples `x` on a uniform grid of [`X_SAMPLES`] points at `ξ = ±1` and
    /// requires `p_m` to be invertible with every eigenvalue at least
    /// [`RAY_DELTA`] away from each ray.
    pub fn check_minimal_growth(&self, rays: &[f64]) -> Result<()> {
        for i in 0..X_SAMPLES {
            let x = 2.0 * std::f64::consts::PI * i as f64 / X_SAMPLES as f64;
            for xi in [1.0, -1.0] {
                let pm = self.principal(x, xi);
                for ev in eigenvalues(&pm)? {
                    let z = ev.value;
                    if z.norm() <= 1e-12 * pm.norm_inf().max(1.0) {
                        return Err(Error::InvalidArgument(format!(
                            "principal symbol is singular at x = {x}, xi = {xi}"
                        )));
                    }
                    for &ray in rays {
                        if angular_distance(z.arg(), ray) < RAY_DELTA {
                            return Err(Error::RayHitsSpectrum { eigenvalue: z, ray });
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// The resolvent-symbol terms `q_{-m}, …, q_{-m-J}` as word sums, built
    /// once and cached.
    pub fn resolvent_terms(&self, j_max: usize) -> Result<Vec<Arc<WordSum>>> {
        if j_max > J_MAX {
            return Err(Error::DepthExceeded {
                requested: j_max,
                max: J_MAX,
            });
        }
        let mut cache = self.recursion.lock().expect("recursion cache");
        while cache.len() <= j_max {
            let next = seeley_step(self, &cache);
            cache.push(Arc::new(next));
        }
        Ok(cache[..=j_max].to_vec())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn terms_of_schroedinger_type_symbol() {
        let p = ClassicalSymbol::parse("xi^2 + 2 + sin(x)").unwrap();
        assert_eq!(p.order(), 2);
        assert!(p.term_vanishes(1));
        assert!(!p.term_vanishes(2));
        assert!((p.eval_term(2, 0.5, 3.0)[(0, 0)].re - (2.0 + 0.5f64.sin())).abs() < 1e-15);
        assert_eq!(p.eval_deriv(0, 0, 1, 0.0, 3.0)[(0, 0)].re, 6.0);
        assert_eq!(p.eval_deriv(0, 0, 2, 0.0, 3.0)[(0, 0)].re, 2.0);
        assert!(p.deriv_vanishes(0, 0, 3));
        assert!(p.deriv_vanishes(0, 1, 0));
        assert!((p.eval_deriv(2, 1, 0, 0.5, 3.0)[(0, 0)].re - 0.5f64.cos()).abs() < 1e-15);
        assert_eq!(p.x_band(), Some(1));
    }

    #[test]
    fn homogeneity_of_terms() {
        let p = ClassicalSymbol::parse("xi, 0.5 + 0.25*cos(x); 0.5 + 0.25*cos(x), -xi").unwrap();
        assert_eq!((p.order(), p.dim()), (1, 2));
        for k in 0..p.num_terms() {
            for xi in [1.0, -1.5, 3.0] {
                let d = (p.order() - k) as i32;
                let lhs = p.eval_term(k, 0.3, 2.0 * xi);
                let rhs = p.eval_term(k, 0.3, xi).scale_real(2f64.powi(d));
                assert!(lhs.dist_inf(&rhs) <= 1e-10);
            }
        }
    }

    #[test]
    fn minimal_growth() {
        let dirac = ClassicalSymbol::parse("xi, 0.5 + 0.25*cos(x); 0.5 + 0.25*cos(x), -xi").unwrap();
        let half = std::f64::consts::FRAC_PI_2;
        assert!(dirac.check_minimal_growth(&[half, 3.0 * half]).is_ok());
        assert!(matches!(dirac.check_minimal_growth(&[0.0]), Err(Error::RayHitsSpectrum { .. })));
        let lap = ClassicalSymbol::parse("xi^2 + 2 + sin(x)").unwrap();
        assert!(lap.check_minimal_growth(&[std::f64::consts::PI]).is_ok());
    }

    #[test]
    fn malformed_sources() {
        assert!(ClassicalSymbol::parse("xi, 1; 2").is_err());
        assert!(ClassicalSymbol::parse("1 + cos(x)").is_err());
        assert!(matches!(ClassicalSymbol::parse("xi").unwrap().resolvent_terms(5), Err(Error::DepthExceeded { .. })));
    }
}
