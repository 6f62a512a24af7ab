//! Verification suites: named checks with measured error, threshold and
//! cost, over seeded random matrices, the desk-scale test symbols and their
//! Fourier discretizations.

use std::f64::consts::PI;
use std::str::FromStr;
use std::time::Instant;

use num_complex::Complex64 as C64;
use rand::Rng;
use serde::Serialize;

use crate::contours::{
    build_laurent_loop, integrate, verify_rational_identity, BranchSpec, PathPoint, DEFAULT_MAX_PANELS,
};
use crate::error::{Error, Result};
use crate::funcalc::{
    branch_logarithm_limit, branch_logarithm_with, branch_power_with, positive_eigenprojection,
    projection_via_logs_with, sectorial_projection_with, spectral_projection_oracle, CalcSettings,
    SectorSpec,
};
use crate::numkernel::{eig_oracle, eigenvalues, solve_shifted, CMatrix};
use crate::opdisc::{assemble, mid_band_error, projection_pair};
use crate::samples::{admissible_matrix, near_identity, random_hermitian, random_sector, rng, SampleRng};
use crate::symbolcalc::{
    composition_identity_holds, homogeneity_defect, log_symbol_assembly, log_symbol_term,
    projection_symbol_with, sectorial_symbol_term, seeley_recursion, vanishing_moment,
    ClassicalSymbol, J_MAX,
};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub check: String,
    pub max_error: f64,
    pub tol: f64,
    pub pass: bool,
    pub nodes_used: usize,
    pub wall_ms: u128,
}

impl Report {
    pub fn new(check: &str, max_error: f64, tol: f64, nodes_used: usize, started: Instant) -> Self {
        Self {
            check: check.to_string(),
            max_error,
            tol,
            pass: max_error <= tol,
            nodes_used,
            wall_ms: started.elapsed().as_millis(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Matrix,
    Symbol,
    Opdisc,
    All,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "matrix" => Ok(Suite::Matrix),
            "symbol" => Ok(Suite::Symbol),
            "opdisc" => Ok(Suite::Opdisc),
            "all" => Ok(Suite::All),
            _ => Err(Error::InvalidArgument(format!("unknown suite {s:?}"))),
        }
    }
}

/// Quadrature tolerance used for a requested verification tolerance.
pub fn quad_tol(tol: f64) -> f64 {
    (tol / 100.0).max(1e-13)
}

/// Runs a suite; reports are sorted by check name.
pub fn run_suite(suite: Suite, seed: u64, tol: f64) -> Result<Vec<Report>> {
    let qt = quad_tol(tol);
    let mut out = Vec::new();
    if matches!(suite, Suite::Matrix | Suite::All) {
        out.extend(numkernel_checks(seed, qt)?);
        out.extend(contour_checks(seed, qt)?);
        out.extend(matrix_projection_checks(seed, 50, qt)?);
        out.push(power_identity_check(seed, 10, qt)?);
        out.push(aps_check(seed, 10, qt)?);
        out.push(limit_mode_check(seed, 5, qt)?);
    }
    if matches!(suite, Suite::Symbol | Suite::All) {
        out.extend(symbol_checks(qt)?);
    }
    if matches!(suite, Suite::Opdisc | Suite::All) {
        out.extend(opdisc_checks(qt)?);
    }
    out.sort_by(|a, b| a.check.cmp(&b.check));
    Ok(out)
}

fn sub_rng(seed: u64, stream: u64) -> SampleRng {
    rng(seed ^ stream.wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

fn vec_norm(v: &[C64]) -> f64 {
    v.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Shifted-solve residuals and eigen-oracle invariants.
pub fn numkernel_checks(seed: u64, _qt: f64) -> Result<Vec<Report>> {
    let t = Instant::now();
    let mut r = sub_rng(seed, 1);
    let mut worst = 0.0f64;
    let mut done = 0;
    while done < 100 {
        let n = r.random_range(2..=6);
        let a = CMatrix::from_fn(n, |_, _| C64::new(r.random_range(-1.0..1.0), r.random_range(-1.0..1.0)));
        let lambda = C64::new(r.random_range(-2.0..2.0), r.random_range(-2.0..2.0));
        let dist = eigenvalues(&a)?.iter().map(|e| (e.value - lambda).norm()).fold(f64::INFINITY, f64::min);
        if dist < 0.1 {
            continue;
        }
        let x = solve_shifted(&a, lambda, &CMatrix::identity(n))?;
        let res = (&a.shifted(lambda) * &x).dist_inf(&CMatrix::identity(n));
        worst = worst.max(res / ((a.norm_inf() + lambda.norm()) * x.norm_inf()));
        done += 1;
    }
    let solve = Report::new("numkernel.solve_residual", worst, 1e-12, 0, t);

    let t = Instant::now();
    let mut worst = 0.0f64;
    for k in 0..20 {
        let s = random_sector(&mut r);
        let smp = admissible_matrix(&mut r, 2 + k % 5, s);
        let data = eig_oracle(&smp.a)?;
        let n = smp.a.n();
        let mut sum = CMatrix::zeros(n);
        for p in &data.projectors {
            sum += p;
            worst = worst.max((p * p).dist_inf(p));
            worst = worst.max((&smp.a * p).dist_inf(&(p * &smp.a)));
        }
        worst = worst.max(sum.dist_inf(&CMatrix::identity(n)));
    }
    let oracle = Report::new("numkernel.oracle_invariants", worst, 1e-7, 0, t);
    Ok(vec![solve, oracle])
}

/// Random configuration for the contour identity: a sector and one point in
/// it and one in its complement, each at least 0.2 rad from the rays.
pub fn random_rational_config(r: &mut SampleRng) -> (C64, C64, f64, f64) {
    let theta = r.random_range(0.0..2.0 * PI);
    let phi = theta + r.random_range(0.6..2.0 * PI - 0.6);
    let a = C64::from_polar(r.random_range(0.5..2.0), r.random_range(theta + 0.2..phi - 0.2));
    let b = C64::from_polar(r.random_range(0.5..2.0), r.random_range(phi + 0.2..theta + 2.0 * PI - 0.2));
    (a, b, theta, phi)
}

/// Branch-log consistency, orientation antisymmetry and the contour
/// identity on 20 random rational test functions.
pub fn contour_checks(seed: u64, qt: f64) -> Result<Vec<Report>> {
    let mut r = sub_rng(seed, 2);
    let t = Instant::now();
    let (mut exp_err, mut shift_err) = (0.0f64, 0.0f64);
    for _ in 0..200 {
        let theta = r.random_range(-2.0 * PI..4.0 * PI);
        let z = C64::from_polar(r.random_range(0.01..100.0), r.random_range(0.0..2.0 * PI));
        let b = BranchSpec::new(theta);
        let Ok(l) = b.log(z) else { continue };
        exp_err = exp_err.max((l.exp() - z).norm() / z.norm());
        let l2 = BranchSpec::new(theta + 2.0 * PI).log(z)?;
        shift_err = shift_err.max((l2 - l - C64::new(0.0, 2.0 * PI)).norm());
    }
    let branch_exp = Report::new("contour.branch_exp", exp_err, 1e-14, 0, t);
    let branch_shift = Report::new("contour.branch_shift", shift_err, 1e-12, 0, t);

    let t = Instant::now();
    let b = BranchSpec::new(PI);
    let path = build_laurent_loop(b, 0.5, 1e3)?;
    let f = |pt: &PathPoint| Ok(b.log_on_path(pt)? * (pt.z - 2.0).powi(-2));
    let fwd = integrate(&path, f, qt, DEFAULT_MAX_PANELS)?;
    let rev = integrate(&path.reversed(), f, qt, DEFAULT_MAX_PANELS)?;
    let orient = Report::new(
        "contour.orientation",
        (fwd.value + rev.value).norm(),
        1e-12,
        fwd.nodes_used + rev.nodes_used,
        t,
    );

    let t = Instant::now();
    let (mut worst, mut nodes) = (0.0f64, 0);
    for _ in 0..20 {
        let (a, bp, theta, phi) = random_rational_config(&mut r);
        let rep = verify_rational_identity(a, bp, theta, phi, qt)?;
        worst = worst.max(rep.defect()).max(rep.closed_form_defect());
        nodes += rep.nodes_used;
    }
    let identity = Report::new("contour.identity_rational", worst, 1e-6, nodes, t);
    Ok(vec![branch_exp, branch_shift, orient, identity])
}

/// Projection invariants over `count` seeded random admissible matrices.
pub fn matrix_projection_checks(seed: u64, count: usize, qt: f64) -> Result<Vec<Report>> {
    let mut r = sub_rng(seed, 3);
    let cfg = CalcSettings::new(qt);
    let mut err = [0.0f64; 6];
    let mut nodes = [0usize; 6];
    let mut ms = [0u128; 6];
    for k in 0..count {
        let s = random_sector(&mut r);
        let smp = admissible_matrix(&mut r, 2 + k % 5, s);
        let a = &smp.a;
        let n = a.n();

        let t = Instant::now();
        let pi = sectorial_projection_with(a, s, &cfg)?;
        err[0] = err[0].max((&pi.value * &pi.value).dist_inf(&pi.value));
        err[1] = err[1].max((a * &pi.value).dist_inf(&(&pi.value * a)));
        nodes[0] += pi.nodes_used;
        ms[0] += t.elapsed().as_millis();

        let t = Instant::now();
        let logs = projection_via_logs_with(a, s, &cfg)?;
        err[2] = err[2].max(pi.value.dist_inf(&logs.value));
        nodes[2] += logs.nodes_used;
        ms[2] += t.elapsed().as_millis();

        let t = Instant::now();
        let oracle = spectral_projection_oracle(a, s)?;
        err[3] = err[3].max(pi.value.dist_inf(&oracle));
        for (j, &mu) in smp.eigenvalues.iter().enumerate() {
            let v = smp.eigenvector(j);
            let pv = pi.value.matvec(&v);
            let e = if s.contains(mu) {
                vec_norm(&pv.iter().zip(&v).map(|(x, y)| x - y).collect::<Vec<_>>())
            } else {
                vec_norm(&pv)
            };
            err[4] = err[4].max(e / vec_norm(&v));
        }
        ms[3] += t.elapsed().as_millis();

        let t = Instant::now();
        let other = sectorial_projection_with(a, s.complement(), &cfg)?;
        err[5] = err[5].max((&pi.value + &other.value).dist_inf(&CMatrix::identity(n)));
        nodes[5] += other.nodes_used;
        ms[5] += t.elapsed().as_millis();
    }
    let mk = |name: &str, e: f64, tol: f64, nd: usize, wall: u128| Report {
        check: name.to_string(),
        max_error: e,
        tol,
        pass: e <= tol,
        nodes_used: nd,
        wall_ms: wall,
    };
    Ok(vec![
        mk("matrix.idempotency", err[0], 1e-8, nodes[0], ms[0]),
        mk("matrix.commutation", err[1], 1e-8, nodes[0], ms[0]),
        mk("matrix.log_route", err[2], 1e-8, nodes[2], ms[2]),
        mk("matrix.oracle", err[3], 1e-7, 0, ms[3]),
        mk("matrix.range_kernel", err[4], 1e-7, 0, ms[3]),
        mk("matrix.completeness", err[5], 1e-7, nodes[5], ms[5]),
    ])
}

/// `A_θ^s - A_φ^s = (1 - e^{2πis}) Π_{θ,φ}(A) A_θ^s` for three exponents.
pub fn power_identity_check(seed: u64, count: usize, qt: f64) -> Result<Report> {
    let t = Instant::now();
    let mut r = sub_rng(seed, 4);
    let cfg = CalcSettings::new(qt);
    let exps = [C64::new(0.5, 0.0), C64::new(0.3, 0.2), C64::new(1.7, 0.0)];
    let (mut worst, mut nodes) = (0.0f64, 0);
    for k in 0..count {
        let s = random_sector(&mut r);
        let a = admissible_matrix(&mut r, 2 + k % 5, s).a;
        let (bt, bp) = s.branches();
        let pi = sectorial_projection_with(&a, s, &cfg)?;
        nodes += pi.nodes_used;
        for &e in &exps {
            let pt = branch_power_with(&a, e, bt, &cfg)?;
            let pp = branch_power_with(&a, e, bp, &cfg)?;
            nodes += pt.nodes_used + pp.nodes_used;
            let factor = C64::new(1.0, 0.0) - (C64::new(0.0, 2.0 * PI) * e).exp();
            let rhs = (&pi.value * &pt.value).scale(factor);
            worst = worst.max((&pt.value - &pp.value).dist_inf(&rhs));
        }
    }
    Ok(Report::new("matrix.power_identity", worst, 1e-7, nodes, t))
}

/// Positive eigenprojection of hermitian matrices against the projection
/// for the sector around the positive axis; the last matrix is singular.
pub fn aps_check(seed: u64, count: usize, qt: f64) -> Result<Report> {
    let t = Instant::now();
    let mut r = sub_rng(seed, 5);
    let cfg = CalcSettings::new(qt);
    let s = SectorSpec::new(-PI / 2.0, PI / 2.0)?;
    let (mut worst, mut nodes) = (0.0f64, 0);
    for k in 0..count {
        let (a, _) = random_hermitian(&mut r, 2 + k % 5, k + 1 == count)?;
        let aps = positive_eigenprojection(&a, qt)?;
        let pi = sectorial_projection_with(&a, s, &cfg)?;
        nodes += pi.nodes_used;
        worst = worst.max(aps.dist_inf(&pi.value));
    }
    Ok(Report::new("matrix.aps", worst, 1e-7, nodes, t))
}

/// Richardson-extrapolated limit of the `λ^{-s}`-regularized logarithm
/// against the keyhole logarithm, on matrices `exp(B)` with `‖B‖∞ = 0.4`.
pub fn limit_mode_check(seed: u64, count: usize, qt: f64) -> Result<Report> {
    let t = Instant::now();
    let mut r = sub_rng(seed, 6);
    let cfg = CalcSettings::new(qt);
    let b = BranchSpec::new(PI);
    let (mut worst, mut nodes) = (0.0f64, 0);
    for k in 0..count {
        let (a, _) = near_identity(&mut r, 2 + k % 3, 0.4);
        let key = branch_logarithm_with(&a, b, &cfg)?;
        let lim = branch_logarithm_limit(&a, b, &cfg)?;
        nodes += key.nodes_used + lim.nodes_used;
        worst = worst.max(key.value.dist_inf(&lim.value));
    }
    Ok(Report::new("matrix.limit_mode_log", worst, 1e-5, nodes, t))
}

pub const LAPLACE_TYPE: &str = "xi^2 + 2 + sin(x)";
pub const DIRAC_TYPE: &str = "xi, 0.5 + 0.25*cos(x); 0.5 + 0.25*cos(x), -xi";
pub const DIRAC_CONSTANT: &str = "xi, 1; 1, -xi";

fn left_half() -> SectorSpec {
    SectorSpec::new(PI / 2.0, 1.5 * PI).expect("valid sector")
}

/// Word-level composition identity and recursion shape.
pub fn recursion_checks() -> Result<Vec<Report>> {
    let t = Instant::now();
    let lap = ClassicalSymbol::parse(LAPLACE_TYPE)?;
    let dirac = ClassicalSymbol::parse(DIRAC_TYPE)?;
    let ok = composition_identity_holds(&lap, 2)? && composition_identity_holds(&dirac, 2)?;
    let comp = Report::new("symbol.composition", if ok { 0.0 } else { 1.0 }, 0.0, 0, t);

    let t = Instant::now();
    let mut bad = 0usize;
    for src in [LAPLACE_TYPE, DIRAC_TYPE, "xi^2*(1.5 + cos(x)) + xi*sin(x) + 1"] {
        let p = ClassicalSymbol::parse(src)?;
        for w in seeley_recursion(&p, J_MAX)? {
            if w.check_structure(&p).is_err() {
                bad += 1;
            }
        }
    }
    let shape = Report::new("symbol.word_structure", bad as f64, 0.0, 0, t);
    Ok(vec![comp, shape])
}

/// `l_{π,-2} = v(x)/ξ²` for `p = ξ² + v`, `v = 2 + sin x`, on a 3×3 grid.
pub fn log_term_closed_form_check(qt: f64) -> Result<Report> {
    let t = Instant::now();
    let p = ClassicalSymbol::parse(LAPLACE_TYPE)?;
    let b = BranchSpec::new(PI);
    let mut worst = 0.0f64;
    for x in [0.0, 2.0 * PI / 3.0, 4.0 * PI / 3.0] {
        for xi in [1.0, 2.0, 4.0] {
            let l = log_symbol_term(&p, 2, x, xi, b, qt)?;
            worst = worst.max((l[(0, 0)] - C64::new((2.0 + x.sin()) / (xi * xi), 0.0)).norm());
        }
    }
    Ok(Report::new("symbol.log_term_closed_form", worst, 1e-7, 0, t))
}

/// Both routes to `π_{θ,φ,-j}` on the Dirac-type symbol, 3×3×3 grid.
pub fn cross_route_check(qt: f64) -> Result<Report> {
    let t = Instant::now();
    let p = ClassicalSymbol::parse(DIRAC_TYPE)?;
    let mut worst = 0.0f64;
    for j in 0..=2 {
        for x in [0.0, 2.1, 4.2] {
            for xi in [1.0, 2.0, 4.0] {
                let (a, b) = sectorial_symbol_term(&p, j, x, xi, left_half(), qt)?;
                worst = worst.max(a.dist_inf(&b));
            }
        }
    }
    Ok(Report::new("symbol.cross_route", worst, 1e-7, 0, t))
}

/// Homogeneity of `l_{θ,-j}` for `t ∈ {2, 4}`, `j ≤ 3`, on the Dirac-type
/// symbol (θ = π/2) and the Laplace-type symbol (θ = π).
pub fn homogeneity_check(qt: f64) -> Result<Report> {
    let t = Instant::now();
    let mut worst = 0.0f64;
    for (src, theta) in [(DIRAC_TYPE, PI / 2.0), (LAPLACE_TYPE, PI)] {
        let p = ClassicalSymbol::parse(src)?;
        for j in 0..=3 {
            for s in [2.0, 4.0] {
                for (x, xi) in [(0.0, 1.0), (2.1, -1.5), (4.2, 2.0)] {
                    worst = worst.max(homogeneity_defect(&p, j, x, xi, s, BranchSpec::new(theta), qt)?);
                }
            }
        }
    }
    Ok(Report::new("symbol.homogeneity", worst, 1e-7, 0, t))
}

/// The remaining symbol checks: projection-term homogeneity, vanishing
/// moments, branch shift and the assembled log symbol.
pub fn symbol_checks(qt: f64) -> Result<Vec<Report>> {
    let mut out = recursion_checks()?;
    out.push(log_term_closed_form_check(qt)?);
    out.push(cross_route_check(qt)?);
    out.push(homogeneity_check(qt)?);

    let dirac = ClassicalSymbol::parse(DIRAC_TYPE)?;
    let lap = ClassicalSymbol::parse(LAPLACE_TYPE)?;
    let cfg = CalcSettings::new(qt);

    let t = Instant::now();
    let mut worst = 0.0f64;
    for j in 0..=2 {
        for s in [2.0, 3.0] {
            let big = projection_symbol_with(&dirac, j..=j, 1.3, s * 1.5, left_half(), &cfg)?.value;
            let small = projection_symbol_with(&dirac, j..=j, 1.3, 1.5, left_half(), &cfg)?.value;
            worst = worst.max(big.dist_inf(&small.scale_real(s.powi(-(j as i32)))));
        }
    }
    out.push(Report::new("symbol.projection_homogeneity", worst, 1e-7, 0, t));

    let t = Instant::now();
    let mut worst = 0.0f64;
    for j in 1..=3 {
        worst = worst.max(vanishing_moment(&lap, j, 0.4, 1.0, 2.0, BranchSpec::new(PI), qt)?);
        worst = worst.max(vanishing_moment(&dirac, j, 0.4, 1.0, 2.0, BranchSpec::new(PI / 2.0), qt)?);
    }
    out.push(Report::new("symbol.vanishing_moment", worst, 1e-8, 0, t));

    let t = Instant::now();
    let b = BranchSpec::new(PI / 2.0);
    let b2 = BranchSpec::new(PI / 2.0 + 2.0 * PI);
    let d = &log_symbol_term(&dirac, 0, 0.5, 1.5, b2, qt)? - &log_symbol_term(&dirac, 0, 0.5, 1.5, b, qt)?;
    let shift = d.dist_inf(&CMatrix::scalar_n(2, C64::new(0.0, 2.0 * PI)));
    out.push(Report::new("symbol.branch_shift", shift, 1e-8, 0, t));

    let t = Instant::now();
    let total = log_symbol_assembly(&lap, 2, 0.0, 4.0, BranchSpec::new(PI), qt)?;
    let err = (total[(0, 0)] - C64::new(2.0 * 4f64.ln() + 0.125, 0.0)).norm();
    out.push(Report::new("symbol.log_assembly", err, 1e-6, 0, t));
    Ok(out)
}

/// `E(32, 2)` against `E(8, 0)` on the Dirac-type symbol; `tol` of the
/// report is `E(8, 0)`.
pub fn opdisc_trend_check(qt: f64) -> Result<Report> {
    let t = Instant::now();
    let p = ClassicalSymbol::parse(DIRAC_TYPE)?;
    let coarse = mid_band_error(&p, left_half(), 8, 0, qt)?;
    let fine = mid_band_error(&p, left_half(), 32, 2, qt)?;
    let mut rep = Report::new("opdisc.cutoff_trend", fine, coarse, 0, t);
    rep.pass = fine < coarse;
    Ok(rep)
}

/// x-independent symbol: the matrix projection is block diagonal with
/// blocks equal to the projections of `p(·, k)`; second report is the
/// relative mid-band agreement with the `J = 2` symbol sum over
/// `K/4 ≤ |k| ≤ K/2`.
pub fn opdisc_x_independent_checks(qt: f64) -> Result<Vec<Report>> {
    let t = Instant::now();
    let p = ClassicalSymbol::parse(DIRAC_CONSTANT)?;
    let k_max = 16usize;
    let (pi, op) = projection_pair(&p, left_half(), k_max, 2, qt)?;
    let a = assemble(&p, k_max)?;
    let kk = k_max as i64;
    let mut worst = 0.0f64;
    for kr in -kk..=kk {
        for kc in -kk..=kk {
            let b = pi.block(kr, kc);
            worst = worst.max(if kr == kc {
                let direct = sectorial_projection_with(&a.block(kc, kc), left_half(), &CalcSettings::new(qt))?.value;
                b.dist_inf(&direct)
            } else {
                b.max_abs()
            });
        }
    }
    let blocks = Report::new("opdisc.x_independent_blocks", worst, 1e-10, 0, t);

    let t = Instant::now();
    let mut rel = 0.0f64;
    for k in (k_max / 4) as i64..=(k_max / 2) as i64 {
        for kc in [k, -k] {
            let exact = pi.block(kc, kc);
            rel = rel.max(exact.dist_inf(&op.block(kc, kc)) / exact.norm_inf());
        }
    }
    let mid = Report::new("opdisc.x_independent_midband", rel, 0.05, 0, t);
    Ok(vec![blocks, mid])
}

pub fn opdisc_checks(qt: f64) -> Result<Vec<Report>> {
    let mut out = vec![opdisc_trend_check(qt)?];
    out.extend(opdisc_x_independent_checks(qt)?);

    let dirac = ClassicalSymbol::parse(DIRAC_TYPE)?;
    let t = Instant::now();
    let e: Vec<f64> = (0..=2).map(|j| mid_band_error(&dirac, left_half(), 16, j, qt)).collect::<Result<_>>()?;
    let rise = e.windows(2).map(|w| (w[1] - w[0]).max(0.0)).fold(0.0, f64::max);
    out.push(Report::new("opdisc.order_trend", rise, 0.0, 0, t));

    let t = Instant::now();
    let a = assemble(&dirac, 16)?;
    let pi = sectorial_projection_with(&a.mat, left_half(), &CalcSettings::new(qt))?;
    let inv = (&pi.value * &pi.value).dist_inf(&pi.value).max((&a.mat * &pi.value).dist_inf(&(&pi.value * &a.mat)));
    out.push(Report::new("opdisc.projection_invariants", inv, 1e-8, pi.nodes_used, t));

    let t = Instant::now();
    let lap = ClassicalSymbol::parse(LAPLACE_TYPE)?;
    let empty = mid_band_error(&lap, left_half(), 8, 2, qt)?;
    out.push(Report::new("opdisc.empty_sector", empty, 1e-6, 0, t));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names() {
        assert_eq!("all".parse::<Suite>().unwrap(), Suite::All);
        assert!("everything".parse::<Suite>().is_err());
    }

    #[test]
    fn report_pass_flag() {
        let t = Instant::now();
        assert!(Report::new("a", 1e-9, 1e-8, 0, t).pass);
        assert!(!Report::new("a", 1e-7, 1e-8, 0, t).pass);
    }

    #[test]
    fn symbol_suite_passes() {
        let reps = run_suite(Suite::Symbol, 0, 1e-8).unwrap();
        for r in &reps {
            assert!(r.pass, "{r:?}");
        }
        let names: Vec<&str> = reps.iter().map(|r| r.check.as_str()).collect();
        let mut sorted = names.clone();
        sorted.sort();
        assert_eq!(names, sorted);
    }
}
