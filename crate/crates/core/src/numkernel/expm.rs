use super::matrix::{CMatrix, C64};

/// Matrix exponential by scaling and squaring with a truncated Taylor series.
pub fn expm(a: &CMatrix) -> CMatrix {
    let norm = a.norm_inf();
    let squarings = if norm > 0.25 {
        (norm / 0.25).log2().ceil() as u32
    } else {
        0
    };
    let x = a.scale_real(0.5f64.powi(squarings as i32));
    let n = a.n();
    let mut sum = CMatrix::identity(n);
    let mut term = CMatrix::identity(n);
    for k in 1..=20 {
        term = term.matmul(&x).scale(C64::new(1.0 / k as f64, 0.0));
        sum += &term;
    }
    for _ in 0..squarings {
        sum = sum.matmul(&sum);
    }
    sum
}
