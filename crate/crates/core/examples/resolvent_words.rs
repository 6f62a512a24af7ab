//! Terms of the resolvent parametrix as sums of words in `q = (p_m - λ)^{-1}`
//! and derivatives of the symbol, and the exact composition check.

use sectorial::symbolcalc::{composition_identity_holds, seeley_recursion, ClassicalSymbol};

pub fn run_example() -> sectorial::Result<()> {
    let p = ClassicalSymbol::parse("xi^2 + 2 + sin(x)")?;
    for (j, w) in seeley_recursion(&p, 3)?.iter().enumerate() {
        println!("q_(-2-{j}) = {w}");
    }
    println!("composition identity through j=2: {}", composition_identity_holds(&p, 2)?);

    let d = ClassicalSymbol::parse("xi, 0.5 + 0.25*cos(x); 0.5 + 0.25*cos(x), -xi")?;
    let q = seeley_recursion(&d, 2)?;
    println!("dirac-type symbol: {} words in q_(-3)", q[2].words.len());
    Ok(())
}

fn main() {
    run_example().expect("example failed");
}
