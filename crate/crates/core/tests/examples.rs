// Every example must run to completion.

#[allow(dead_code)]
#[path = "../examples/sectorial_projection.rs"]
mod sectorial_projection;

#[allow(dead_code)]
#[path = "../examples/branch_logarithm.rs"]
mod branch_logarithm;

#[allow(dead_code)]
#[path = "../examples/branch_power.rs"]
mod branch_power;

#[allow(dead_code)]
#[path = "../examples/positive_projection.rs"]
mod positive_projection;

#[allow(dead_code)]
#[path = "../examples/contour_identity.rs"]
mod contour_identity;

#[allow(dead_code)]
#[path = "../examples/resolvent_words.rs"]
mod resolvent_words;

#[allow(dead_code)]
#[path = "../examples/log_symbol.rs"]
mod log_symbol;

#[allow(dead_code)]
#[path = "../examples/projection_symbol.rs"]
mod projection_symbol;

#[allow(dead_code)]
#[path = "../examples/fourier_operator.rs"]
mod fourier_operator;

#[allow(dead_code)]
#[path = "../examples/quadrature_convergence.rs"]
mod quadrature_convergence;

#[allow(dead_code)]
#[path = "../examples/verify_suite.rs"]
mod verify_suite;

#[allow(dead_code)]
#[path = "../examples/matrix_json.rs"]
mod matrix_json;

#[allow(dead_code)]
#[path = "../examples/coefficient_expressions.rs"]
mod coefficient_expressions;


#[test]
fn sectorial_projection_runs() {
    sectorial_projection::run_example().unwrap();
}

#[test]
fn branch_logarithm_runs() {
    branch_logarithm::run_example().unwrap();
}

#[test]
fn branch_power_runs() {
    branch_power::run_example().unwrap();
}

#[test]
fn positive_projection_runs() {
    positive_projection::run_example().unwrap();
}

#[test]
fn contour_identity_runs() {
    contour_identity::run_example().unwrap();
}

#[test]
fn resolvent_words_runs() {
    resolvent_words::run_example().unwrap();
}

#[test]
fn log_symbol_runs() {
    log_symbol::run_example().unwrap();
}

#[test]
fn projection_symbol_runs() {
    projection_symbol::run_example().unwrap();
}

#[test]
fn fourier_operator_runs() {
    fourier_operator::run_example().unwrap();
}

#[test]
fn quadrature_convergence_runs() {
    quadrature_convergence::run_example().unwrap();
}

#[test]
fn verify_suite_runs() {
    verify_suite::run_example().unwrap();
}

#[test]
fn matrix_json_runs() {
    matrix_json::run_example().unwrap();
}

#[test]
fn coefficient_expressions_runs() {
    coefficient_expressions::run_example().unwrap();
}
