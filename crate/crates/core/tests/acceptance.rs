//! Acceptance criteria, one PASS/FAIL line each. Thresholds are fixed here
//! and do not depend on the tolerances stored in the reports.

use std::f64::consts::PI;
use std::time::Instant;

use sectorial::converge::converge_study;
use sectorial::funcalc::SectorSpec;
use sectorial::io::load_matrix;
use sectorial::opdisc::cross_check;
use sectorial::symbolcalc::{composition_identity_holds, ClassicalSymbol};
use sectorial::verify::*;

const SEED: u64 = 42;
/// Errors below this are quadrature roundoff in the convergence study.
const ROUNDOFF_FLOOR: f64 = 1e-12;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

fn find<'a>(reps: &'a [Report], name: &str) -> &'a Report {
    reps.iter().find(|r| r.check == name).unwrap_or_else(|| panic!("missing report {name}"))
}

fn left_half() -> SectorSpec {
    SectorSpec::new(PI / 2.0, 1.5 * PI).unwrap()
}

fn matrix_criteria(qt: f64) -> sectorial::Result<(Outcome, Outcome)> {
    let t = Instant::now();
    let reps = matrix_projection_checks(SEED, 50, qt)?;
    let secs = t.elapsed().as_secs_f64();
    let logs = find(&reps, "matrix.log_route").max_error;
    let c1 = outcome(logs <= 1e-8 && secs <= 60.0, format!("max |P - P_logs| = {logs:.2e} (<= 1e-8), {secs:.1} s (<= 60 s)"));
    let oracle = find(&reps, "matrix.oracle").max_error;
    let idem = find(&reps, "matrix.idempotency").max_error;
    let comm = find(&reps, "matrix.commutation").max_error;
    let c2 = outcome(
        oracle <= 1e-7 && idem <= 1e-8 && comm <= 1e-8,
        format!("oracle {oracle:.2e} (<= 1e-7), idempotency {idem:.2e}, commutation {comm:.2e} (<= 1e-8)"),
    );
    Ok((c1, c2))
}

fn limit_mode(qt: f64) -> sectorial::Result<Outcome> {
    let e = limit_mode_check(SEED, 5, qt)?.max_error;
    Ok(outcome(e <= 1e-5, format!("max |log_keyhole - log_limit| = {e:.2e} over 5 matrices (<= 1e-5)")))
}

fn rational_identity(qt: f64) -> sectorial::Result<Outcome> {
    let reps = contour_checks(SEED, qt)?;
    let e = find(&reps, "contour.identity_rational").max_error;
    Ok(outcome(e <= 1e-6, format!("max defect incl. closed form 4pi^2/(a-b) = {e:.2e} over 20 configs (<= 1e-6)")))
}

fn power_identity(qt: f64) -> sectorial::Result<Outcome> {
    let e = power_identity_check(SEED, 10, qt)?.max_error;
    Ok(outcome(e <= 1e-7, format!("max residual = {e:.2e}, 3 exponents x 10 matrices (<= 1e-7)")))
}

fn aps(qt: f64) -> sectorial::Result<Outcome> {
    let e = aps_check(SEED, 10, qt)?.max_error;
    Ok(outcome(e <= 1e-7, format!("max |APS - P| = {e:.2e} over 10 hermitian matrices, one singular (<= 1e-7)")))
}

fn symbol_recursion(qt: f64) -> sectorial::Result<Outcome> {
    let p = ClassicalSymbol::parse(LAPLACE_TYPE)?;
    let exact = composition_identity_holds(&p, 2)?;
    let e = log_term_closed_form_check(qt)?.max_error;
    Ok(outcome(exact && e <= 1e-7, format!("composition exact through j=2: {exact}; max |l_-2 - v/xi^2| = {e:.2e} (<= 1e-7)")))
}

fn projection_symbol(qt: f64) -> sectorial::Result<Outcome> {
    let cross = cross_route_check(qt)?.max_error;
    let hom = homogeneity_check(qt)?.max_error;
    Ok(outcome(
        cross <= 1e-7 && hom <= 1e-7,
        format!("cross-route {cross:.2e} (<= 1e-7), homogeneity t in {{2,4}} {hom:.2e} (<= 1e-7)"),
    ))
}

fn operator_trend(qt: f64) -> sectorial::Result<Outcome> {
    let p = ClassicalSymbol::parse(DIRAC_TYPE)?;
    let fine = cross_check(&p, left_half(), 32, 2, qt)?.error;
    let coarse = cross_check(&p, left_half(), 8, 0, qt)?.error;
    let blocks = find(&opdisc_x_independent_checks(qt)?, "opdisc.x_independent_blocks").max_error;
    Ok(outcome(
        fine < coarse && blocks <= 1e-10,
        format!("E(32,2) = {fine:.4e} < E(8,0) = {coarse:.4e}; x-independent block defect {blocks:.2e} (<= 1e-10)"),
    ))
}

fn convergence() -> sectorial::Result<Outcome> {
    let mut ok = true;
    let mut worst_ratio = 0.0f64;
    for name in ["diag_pm1", "jordan", "nonnormal3", "hermitian3"] {
        let a = load_matrix(format!("{}/examples/data/{name}.json", env!("CARGO_MANIFEST_DIR")))?;
        let rows = converge_study(&a, left_half(), &[8, 16, 32, 64])?;
        for w in rows.windows(2) {
            let (e0, e1) = (w[0].max_error, w[1].max_error);
            if e0 > ROUNDOFF_FLOOR {
                worst_ratio = worst_ratio.max(e1 / e0);
                ok &= e1 <= 0.5 * e0;
            } else {
                ok &= e1 <= ROUNDOFF_FLOOR;
            }
        }
    }
    Ok(outcome(ok, format!("4 shipped matrices, worst ratio above the {ROUNDOFF_FLOOR:e} floor = {worst_ratio:.2e} (<= 0.5)")))
}

fn main() {
    let qt = quad_tol(1e-8);
    let (c1, c2) = match matrix_criteria(qt) {
        Ok(pair) => pair,
        Err(e) => (outcome(false, format!("error: {e}")), outcome(false, format!("error: {e}"))),
    };
    let run = |r: sectorial::Result<Outcome>| r.unwrap_or_else(|e| outcome(false, format!("error: {e}")));
    let results = [
        ("1 matrix identity via logarithms", c1),
        ("2 oracle, idempotency, commutation", c2),
        ("3 limit-mode logarithm", run(limit_mode(qt))),
        ("4 rational ray-integral identity", run(rational_identity(qt))),
        ("5 power identity", run(power_identity(qt))),
        ("6 positive eigenprojection", run(aps(qt))),
        ("7 symbol recursion", run(symbol_recursion(qt))),
        ("8 projection symbol routes", run(projection_symbol(qt))),
        ("9 operator truncation trend", run(operator_trend(qt))),
        ("10 quadrature convergence", run(convergence())),
    ];
    let mut failed = 0;
    for (name, o) in &results {
        println!("{} criterion {name}: {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
        failed += usize::from(!o.pass);
    }
    println!("{} of {} criteria passed", results.len() - failed, results.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
