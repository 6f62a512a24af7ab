//! Classical symbols on the circle, the resolvent-symbol recursion as a word
//! algebra, and symbol-level logarithm and projection terms.

mod integrals;
mod symbol;
mod words;

pub use integrals::{
    homogeneity_defect, log_symbol_assembly, log_symbol_term, log_symbol_term_with,
    projection_symbol_with, sector_circles, sectorial_symbol_term, vanishing_moment,
};
pub use symbol::{ClassicalSymbol, J_MAX, RAY_DELTA, X_SAMPLES};
pub use words::{
    composition_identity_holds, composition_term, diff_n, diff_word, eval_wordsum, seeley_recursion,
    Atom, Combination, Dir, PointEvaluator, Word, WordSum,
};
