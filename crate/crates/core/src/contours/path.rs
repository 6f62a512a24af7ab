//! Oriented piecewise contours built from rays, arcs about the origin and
//! circles.

use std::f64::consts::PI;

use num_complex::Complex64 as C64;

use super::branch::BranchSpec;
use crate::error::{Error, Result};

/// A point on a path together with its continuous polar angle.
///
/// For rays and origin-centred arcs `arg` is the segment's own angle
/// parameter, so it may lie outside `(-π, π]`; for circles it is `z.arg()`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PathPoint {
    pub z: C64,
    pub arg: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Segment {
    /// `r e^{i angle}` with `r` running from `r_from` to `r_to` (both > 0),
    /// parametrized geometrically in `r`.
    Ray { angle: f64, r_from: f64, r_to: f64 },
    /// `radius e^{iω}` with `ω` running from `from` to `to`.
    Arc { radius: f64, from: f64, to: f64 },
    /// Full circle, counter-clockwise when `positive`.
    Circle {
        center: C64,
        radius: f64,
        positive: bool,
    },
}

impl Segment {
    pub fn ray(angle: f64, r_from: f64, r_to: f64) -> Self {
        Segment::Ray {
            angle,
            r_from,
            r_to,
        }
    }

    pub fn arc(radius: f64, from: f64, to: f64) -> Self {
        Segment::Arc { radius, from, to }
    }

    pub fn circle(center: C64, radius: f64) -> Self {
        Segment::Circle {
            center,
            radius,
            positive: true,
        }
    }

    /// Point and `dz/du` at parameter `u ∈ [0, 1]`.
    pub fn eval(&self, u: f64) -> (PathPoint, C64) {
        match *self {
            Segment::Ray {
                angle,
                r_from,
                r_to,
            } => {
                let log_ratio = (r_to / r_from).ln();
                let r = r_from * (u * log_ratio).exp();
                let z = C64::from_polar(r, angle);
                (PathPoint { z, arg: angle }, z * log_ratio)
            }
            Segment::Arc { radius, from, to } => {
                let w = from + u * (to - from);
                let z = C64::from_polar(radius, w);
                (PathPoint { z, arg: w }, C64::new(0.0, to - from) * z)
            }
            Segment::Circle {
                center,
                radius,
                positive,
            } => {
                let sweep = if positive { 2.0 * PI } else { -2.0 * PI };
                let e = C64::from_polar(radius, u * sweep);
                let z = center + e;
                (PathPoint { z, arg: z.arg() }, C64::new(0.0, sweep) * e)
            }
        }
    }

    pub fn start(&self) -> C64 {
        self.eval(0.0).0.z
    }

    pub fn end(&self) -> C64 {
        self.eval(1.0).0.z
    }

    pub fn reversed(&self) -> Self {
        match *self {
            Segment::Ray {
                angle,
                r_from,
                r_to,
            } => Segment::Ray {
                angle,
                r_from: r_to,
                r_to: r_from,
            },
            Segment::Arc { radius, from, to } => Segment::Arc {
                radius,
                from: to,
                to: from,
            },
            Segment::Circle {
                center,
                radius,
                positive,
            } => Segment::Circle {
                center,
                radius,
                positive: !positive,
            },
        }
    }

    /// Initial Gauss–Legendre panel count, proportional to the length of the
    /// parameter range in log-polar coordinates.
    pub fn default_panels(&self) -> usize {
        match *self {
            Segment::Ray { r_from, r_to, .. } => ((r_to / r_from).ln().abs() / 1.5).ceil() as usize,
            Segment::Arc { from, to, .. } => ((to - from).abs() / (PI / 4.0)).ceil() as usize,
            Segment::Circle { .. } => 4,
        }
        .max(2)
    }

    fn validate(&self) -> Result<()> {
        let ok = match *self {
            Segment::Ray {
                angle,
                r_from,
                r_to,
            } => angle.is_finite() && r_from > 0.0 && r_to > 0.0 && r_to.is_finite() && r_from.is_finite(),
            Segment::Arc { radius, from, to } => {
                radius > 0.0 && radius.is_finite() && from.is_finite() && to.is_finite()
            }
            Segment::Circle { center, radius, .. } => {
                radius > 0.0 && radius.is_finite() && center.re.is_finite() && center.im.is_finite()
            }
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidPath(format!("degenerate segment {self:?}")))
        }
    }
}

/// An oriented contour: consecutive segments share endpoints.
#[derive(Debug, Clone, PartialEq)]
pub struct Path {
    segments: Vec<Segment>,
    panels: Vec<usize>,
    closed: bool,
}

fn close_enough(a: C64, b: C64) -> bool {
    (a - b).norm() <= 1e-12 * a.norm().max(b.norm()).max(1.0)
}

impl Path {
    pub fn new(segments: Vec<Segment>, closed: bool) -> Result<Self> {
        if segments.is_empty() {
            return Err(Error::InvalidPath("no segments".into()));
        }
        for s in &segments {
            s.validate()?;
        }
        for w in segments.windows(2) {
            if !close_enough(w[0].end(), w[1].start()) {
                return Err(Error::InvalidPath(format!(
                    "segment ends at {} but next starts at {}",
                    w[0].end(),
                    w[1].start()
                )));
            }
        }
        if closed && !close_enough(segments[segments.len() - 1].end(), segments[0].start()) {
            return Err(Error::InvalidPath("closed path does not return to its start".into()));
        }
        let panels = segments.iter().map(Segment::default_panels).collect();
        Ok(Self {
            segments,
            panels,
            closed,
        })
    }

    /// A union of full circles; each circle is closed on its own.
    pub fn circles(circles: Vec<Segment>) -> Result<Self> {
        if circles.is_empty() || !circles.iter().all(|s| matches!(s, Segment::Circle { .. })) {
            return Err(Error::InvalidPath("expected one or more circles".into()));
        }
        for s in &circles {
            s.validate()?;
        }
        let panels = circles.iter().map(Segment::default_panels).collect();
        Ok(Self {
            segments: circles,
            panels,
            closed: true,
        })
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn panels(&self) -> &[usize] {
        &self.panels
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    pub fn start(&self) -> C64 {
        self.segments[0].start()
    }

    pub fn end(&self) -> C64 {
        self.segments[self.segments.len() - 1].end()
    }

    /// Appends a segment; with `close` set the result must be closed.
    pub fn then(&self, seg: Segment, close: bool) -> Result<Self> {
        let mut segs = self.segments.clone();
        segs.push(seg);
        let mut p = Path::new(segs, close)?;
        p.panels[..self.panels.len()].copy_from_slice(&self.panels);
        Ok(p)
    }

    /// The same curve traversed backwards.
    pub fn reversed(&self) -> Self {
        Self {
            segments: self.segments.iter().rev().map(Segment::reversed).collect(),
            panels: self.panels.iter().rev().copied().collect(),
            closed: self.closed,
        }
    }

    /// Same geometry with `panels` Gauss–Legendre panels on every segment.
    pub fn with_uniform_panels(&self, panels: usize) -> Self {
        Self {
            panels: vec![panels.max(1); self.segments.len()],
            ..self.clone()
        }
    }

    pub fn with_panels(&self, panels: Vec<usize>) -> Result<Self> {
        if panels.len() != self.segments.len() || panels.contains(&0) {
            return Err(Error::InvalidArgument("one positive panel count per segment".into()));
        }
        Ok(Self {
            panels,
            ..self.clone()
        })
    }

    /// Winding number about `z` of a closed path.
    pub fn winding_number(&self, z: C64) -> Result<i64> {
        if !self.closed {
            return Err(Error::InvalidPath("winding number needs a closed path".into()));
        }
        let res = super::quad::integrate(
            self,
            |pt: &PathPoint| {
                let d = pt.z - z;
                if d.norm() == 0.0 {
                    Err(Error::SingularShift { lambda: pt.z })
                } else {
                    Ok(d.inv())
                }
            },
            1e-8,
            1 << 14,
        )?;
        let w = res.value / C64::new(0.0, 2.0 * PI);
        Ok(w.re.round() as i64)
    }
}

/// Laurent loop: in along `e^{iθ}` from `R` to `r0`, clockwise around the
/// circle of radius `r0` from `θ` to `θ - 2π`, out along `e^{i(θ-2π)}`.
pub fn build_laurent_loop(b: BranchSpec, r0: f64, r_max: f64) -> Result<Path> {
    check_radii(r0, r_max)?;
    let t = b.theta;
    Path::new(
        vec![
            Segment::ray(t, r_max, r0),
            Segment::arc(r0, t, t - 2.0 * PI),
            Segment::ray(t - 2.0 * PI, r0, r_max),
        ],
        false,
    )
}

/// Sectorial contour: in along `e^{iφ}`, clockwise on radius `r0` from `φ`
/// down to `θ`, out along `e^{iθ}`.
pub fn build_sectorial(theta: f64, phi: f64, r0: f64, r_max: f64) -> Result<Path> {
    check_radii(r0, r_max)?;
    if !(theta < phi && phi < theta + 2.0 * PI) {
        return Err(Error::InvalidArgument(format!(
            "sector needs θ < φ < θ + 2π, got θ = {theta}, φ = {phi}"
        )));
    }
    Path::new(
        vec![
            Segment::ray(phi, r_max, r0),
            Segment::arc(r0, phi, theta),
            Segment::ray(theta, r0, r_max),
        ],
        false,
    )
}

/// Closed keyhole around the annulus `r0 < |λ| < R` with a wedge of
/// half-angle `ε` removed around the cut ray.
pub fn build_keyhole_closed(b: BranchSpec, r0: f64, r_max: f64, eps: f64) -> Result<Path> {
    check_radii(r0, r_max)?;
    if !(eps > 0.0 && eps < PI / 4.0) {
        return Err(Error::InvalidArgument(format!("keyhole gap ε = {eps} outside (0, π/4)")));
    }
    let hi = b.theta - eps;
    let lo = b.theta - 2.0 * PI + eps;
    Path::new(
        vec![
            Segment::ray(hi, r_max, r0),
            Segment::arc(r0, hi, lo),
            Segment::ray(lo, r0, r_max),
            Segment::arc(r_max, lo, hi),
        ],
        true,
    )
}

fn check_radii(r0: f64, r_max: f64) -> Result<()> {
    if r0 > 0.0 && r0 < r_max && r_max.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("need 0 < r0 < R, got r0 = {r0}, R = {r_max}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn laurent_loop_endpoints() {
        let p = build_laurent_loop(BranchSpec::new(0.0), 1.0, 2.0).unwrap();
        let s = p.segments();
        assert_eq!(s.len(), 3);
        assert!((s[0].start() - c(2.0, 0.0)).norm() < 1e-15);
        assert!((s[0].end() - c(1.0, 0.0)).norm() < 1e-15);
        assert!((s[1].end() - c(1.0, 0.0)).norm() < 1e-14);
        assert!((p.end() - c(2.0, 0.0)).norm() < 1e-14);
        assert!(!p.is_closed());
    }

    #[test]
    fn laurent_loop_arc_sweep() {
        let p = build_laurent_loop(BranchSpec::new(PI), 0.5, 4.0).unwrap();
        assert_eq!(p.segments()[1], Segment::arc(0.5, PI, -PI));
    }

    #[test]
    fn sectorial_endpoints_and_winding() {
        let p = build_sectorial(0.0, PI, 1.0, 3.0).unwrap();
        assert!((p.start() - c(-3.0, 0.0)).norm() < 1e-14);
        assert!((p.end() - c(3.0, 0.0)).norm() < 1e-14);
        let closed = p.then(Segment::arc(3.0, 0.0, PI), true).unwrap();
        assert_eq!(closed.winding_number(c(0.0, 2.0)).unwrap(), 1);
        assert_eq!(closed.winding_number(c(0.0, -2.0)).unwrap(), 0);
        assert_eq!(closed.winding_number(c(0.0, 0.5)).unwrap(), 0);
    }

    #[test]
    fn sectorial_rejects_bad_sector() {
        assert!(build_sectorial(1.0, 0.5, 1.0, 2.0).is_err());
        assert!(build_sectorial(0.0, 2.0 * PI, 1.0, 2.0).is_err());
        assert!(build_sectorial(0.0, 1.0, 2.0, 1.0).is_err());
    }

    #[test]
    fn keyhole_winding() {
        let (r0, r) = (0.5, 4.0);
        let p = build_keyhole_closed(BranchSpec::new(0.0), r0, r, 0.1).unwrap();
        assert!(p.is_closed());
        assert_eq!(p.winding_number(c(-(r0 + r) / 2.0, 0.0)).unwrap(), 1);
        assert_eq!(p.winding_number(c(0.0, 2.0)).unwrap(), 1);
        assert_eq!(p.winding_number(c((r0 + r) / 2.0, 0.0)).unwrap(), 0);
        // the keyhole lives in the slit plane, so it cannot wind around 0
        assert_eq!(p.winding_number(c(0.0, 0.0)).unwrap(), 0);
        assert_eq!(p.winding_number(c(10.0, 1.0)).unwrap(), 0);
    }

    #[test]
    fn broken_path_rejected() {
        let err = Path::new(vec![Segment::ray(0.0, 2.0, 1.0), Segment::arc(1.5, 0.0, 1.0)], false);
        assert!(matches!(err, Err(Error::InvalidPath(_))));
    }
}
