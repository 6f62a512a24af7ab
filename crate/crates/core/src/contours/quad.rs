//! Composite 16-point Gauss–Legendre quadrature along paths.

use num_complex::Complex64 as C64;

use super::path::{Path, PathPoint};
use crate::error::{Error, Result};
use crate::numkernel::CMatrix;

/// Positive nodes of the 16-point Gauss–Legendre rule on `[-1, 1]` and their
/// weights; the rule is symmetric.
#[allow(clippy::excessive_precision)]
const GL16: [(f64, f64); 8] = [
    (0.095_012_509_837_637_440_185, 0.189_450_610_455_068_496_285),
    (0.281_603_550_779_258_913_230, 0.182_603_415_044_923_588_867),
    (0.458_016_777_657_227_386_342, 0.169_156_519_395_002_538_189),
    (0.617_876_244_402_643_748_447, 0.149_595_988_816_576_732_081),
    (0.755_404_408_355_003_033_895, 0.124_628_971_255_533_872_052),
    (0.865_631_202_387_831_743_880, 0.095_158_511_682_492_784_810),
    (0.944_575_023_073_232_576_078, 0.062_253_523_938_647_892_863),
    (0.989_400_934_991_649_932_596, 0.027_152_459_411_754_094_852),
];

pub const NODES_PER_PANEL: usize = 16;

/// Values that can be integrated: complex scalars and matrices.
pub trait QuadValue: Clone {
    fn add_scaled(&mut self, s: C64, other: &Self);
    fn scaled(&self, s: C64) -> Self;
    fn norm_inf(&self) -> f64;
    fn dist_inf(&self, other: &Self) -> f64;
}

impl QuadValue for C64 {
    fn add_scaled(&mut self, s: C64, other: &Self) {
        *self += s * other;
    }
    fn scaled(&self, s: C64) -> Self {
        self * s
    }
    fn norm_inf(&self) -> f64 {
        self.norm()
    }
    fn dist_inf(&self, other: &Self) -> f64 {
        (self - other).norm()
    }
}

impl QuadValue for CMatrix {
    fn add_scaled(&mut self, s: C64, other: &Self) {
        self.axpy(s, other);
    }
    fn scaled(&self, s: C64) -> Self {
        self.scale(s)
    }
    fn norm_inf(&self) -> f64 {
        CMatrix::norm_inf(self)
    }
    fn dist_inf(&self, other: &Self) -> f64 {
        CMatrix::dist_inf(self, other)
    }
}

#[derive(Debug, Clone)]
pub struct QuadResult<V> {
    pub value: V,
    /// `‖value(2p panels) - value(p panels)‖∞` at the accepted level, plus
    /// any tail bound added by the caller.
    pub est_error: f64,
    pub nodes_used: usize,
}

impl<V: QuadValue> QuadResult<V> {
    pub fn scaled(self, s: C64) -> Self {
        Self {
            value: self.value.scaled(s),
            est_error: self.est_error * s.norm(),
            nodes_used: self.nodes_used,
        }
    }
}

/// One composite Gauss–Legendre sum with `multiplier` times the path's panel
/// counts. Summation order is segment, then panel, then node.
pub fn quadrature_sum<V, F>(path: &Path, f: &F, multiplier: usize) -> Result<(V, usize)>
where
    V: QuadValue,
    F: Fn(&PathPoint) -> Result<V>,
{
    let mut acc: Option<V> = None;
    let mut nodes = 0;
    for (seg, &base) in path.segments().iter().zip(path.panels()) {
        let panels = base * multiplier;
        let h = 1.0 / panels as f64;
        for p in 0..panels {
            let mid = (p as f64 + 0.5) * h;
            for &(x, w) in &GL16 {
                for u in [mid - 0.5 * h * x, mid + 0.5 * h * x] {
                    let (pt, dz) = seg.eval(u);
                    let v = f(&pt).map_err(|e| match e {
                        Error::SingularShift { .. } => Error::IntegrandSingular { lambda: pt.z },
                        other => other,
                    })?;
                    let weight = dz * (0.5 * h * w);
                    match acc.as_mut() {
                        Some(a) => a.add_scaled(weight, &v),
                        None => acc = Some(v.scaled(weight)),
                    }
                    nodes += 1;
                }
            }
        }
    }
    Ok((acc.expect("paths have at least one segment"), nodes))
}

/// Integrates `f` along `path`, doubling every segment's panel count until
/// successive sums agree to `tol * max(1, ‖value‖∞)`. `max_panels` caps the
/// per-segment panel count.
pub fn integrate<V, F>(path: &Path, f: F, tol: f64, max_panels: usize) -> Result<QuadResult<V>>
where
    V: QuadValue,
    F: Fn(&PathPoint) -> Result<V>,
{
    let base_max = path.panels().iter().copied().max().unwrap_or(1);
    let (mut prev, mut nodes_used) = quadrature_sum(path, &f, 1)?;
    let mut mult = 2;
    let mut est_error = f64::INFINITY;
    loop {
        if base_max * mult > max_panels {
            return Err(Error::NoConvergence { est_error });
        }
        let (cur, n) = quadrature_sum(path, &f, mult)?;
        nodes_used += n;
        est_error = cur.dist_inf(&prev);
        if est_error <= tol * cur.norm_inf().max(1.0) {
            return Ok(QuadResult {
                value: cur,
                est_error,
                nodes_used,
            });
        }
        if !est_error.is_finite() {
            return Err(Error::NoConvergence { est_error });
        }
        prev = cur;
        mult *= 2;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::contours::path::Segment;
    use std::f64::consts::PI;

    fn gl_nodes() -> Vec<(f64, f64)> {
        GL16.iter().flat_map(|&(x, w)| [(-x, w), (x, w)]).collect()
    }

    #[test]
    fn rule_weights_and_exactness() {
        let nodes = gl_nodes();
        let wsum: f64 = nodes.iter().map(|n| n.1).sum();
        assert!((wsum - 2.0).abs() < 1e-15);
        for deg in [2, 10, 20, 30] {
            let q: f64 = nodes.iter().map(|&(x, w)| w * x.powi(deg)).sum();
            assert!((q - 2.0 / (deg as f64 + 1.0)).abs() < 1e-14, "degree {deg}");
        }
        let q31: f64 = nodes.iter().map(|&(x, w)| w * x.powi(31)).sum();
        assert!(q31.abs() < 1e-15);
    }

    #[test]
    fn cauchy_on_unit_circle() {
        let p = Path::circles(vec![Segment::circle(C64::new(0.0, 0.0), 1.0)]).unwrap();
        let r = integrate(&p, |pt: &PathPoint| Ok(pt.z.inv()), 1e-13, 1024).unwrap();
        assert!((r.value - C64::new(0.0, 2.0 * PI)).norm() < 1e-13);
        assert!(r.est_error <= 1e-12);
    }

    #[test]
    fn cauchy_off_center() {
        let p = Path::circles(vec![Segment::circle(C64::new(1.0, 0.0), 0.5)]).unwrap();
        let r = integrate(&p, |pt: &PathPoint| Ok((pt.z - 1.0).inv()), 1e-13, 1024).unwrap();
        assert!((r.value - C64::new(0.0, 2.0 * PI)).norm() < 1e-13);
    }

    #[test]
    fn no_convergence_reported() {
        // singularity sitting almost on the path
        let p = Path::circles(vec![Segment::circle(C64::new(0.0, 0.0), 1.0)]).unwrap();
        let z0 = C64::new(1.0 + 1e-9, 0.0);
        let r = integrate(&p, |pt: &PathPoint| Ok((pt.z - z0).inv()), 1e-12, 16);
        assert!(matches!(r, Err(Error::NoConvergence { .. })));
    }
}
