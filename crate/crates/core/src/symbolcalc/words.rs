//! Resolvent-symbol terms as linear combinations of words
//! `q^{ν₁} b₁ q^{ν₂} … b_M q^{ν_{M+1}}`, with `q = (p_m - λ)⁻¹` and the `b`
//! derivatives of homogeneous terms of `p`.

use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64 as C64;

use super::symbol::ClassicalSymbol;
use crate::error::{Error, Result};
use crate::numkernel::{resolvent, CMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Atom {
    /// `q^ν`.
    QPow(u32),
    /// `∂_x^a ∂_ξ^b p_{m-k}`.
    PDeriv { k: usize, a: usize, b: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dir {
    X,
    Xi,
}

/// A formal linear combination of atom sequences with like terms merged.
pub type Combination = BTreeMap<Vec<Atom>, C64>;

#[derive(Debug, Clone, PartialEq)]
pub struct Word {
    pub coeff: C64,
    pub atoms: Vec<Atom>,
}

/// `q_{-m-j}` as a sum of words.
#[derive(Debug, Clone, PartialEq)]
pub struct WordSum {
    pub j: usize,
    pub words: Vec<Word>,
}

fn accumulate(into: &mut Combination, atoms: Vec<Atom>, c: C64) {
    let e = into.entry(atoms).or_insert(C64::new(0.0, 0.0));
    *e += c;
}

fn prune(mut comb: Combination) -> Combination {
    comb.retain(|_, c| *c != C64::new(0.0, 0.0));
    comb
}

fn vanishes(p: &ClassicalSymbol, atoms: &[Atom]) -> bool {
    atoms.iter().any(|a| matches!(*a, Atom::PDeriv { k, a, b } if p.deriv_vanishes(k, a, b)))
}

/// Derivative of a word by the product rule, with
/// `∂ q = -q (∂ p_m) q`, so `∂ q^ν = -Σ_{i=1}^{ν} q^i (∂ p_m) q^{ν+1-i}`.
pub fn diff_word(p: &ClassicalSymbol, atoms: &[Atom], c: C64, dir: Dir, out: &mut Combination) {
    for (pos, atom) in atoms.iter().enumerate() {
        match *atom {
            Atom::PDeriv { k, a, b } => {
                let (a, b) = match dir {
                    Dir::X => (a + 1, b),
                    Dir::Xi => (a, b + 1),
                };
                if p.deriv_vanishes(k, a, b) {
                    continue;
                }
                let mut w = atoms.to_vec();
                w[pos] = Atom::PDeriv { k, a, b };
                if !vanishes(p, &w) {
                    accumulate(out, w, c);
                }
            }
            Atom::QPow(nu) => {
                let dp = match dir {
                    Dir::X => Atom::PDeriv { k: 0, a: 1, b: 0 },
                    Dir::Xi => Atom::PDeriv { k: 0, a: 0, b: 1 },
                };
                let Atom::PDeriv { k, a, b } = dp else { unreachable!() };
                if p.deriv_vanishes(k, a, b) {
                    continue;
                }
                for i in 1..=nu {
                    let mut w = Vec::with_capacity(atoms.len() + 2);
                    w.extend_from_slice(&atoms[..pos]);
                    w.push(Atom::QPow(i));
                    w.push(dp);
                    w.push(Atom::QPow(nu + 1 - i));
                    w.extend_from_slice(&atoms[pos + 1..]);
                    accumulate(out, w, -c);
                }
            }
        }
    }
}

/// `∂^n` of a combination.
pub fn diff_n(p: &ClassicalSymbol, comb: &Combination, dir: Dir, n: usize) -> Combination {
    let mut cur = comb.clone();
    for _ in 0..n {
        let mut next = Combination::new();
        for (w, &c) in &cur {
            diff_word(p, w, c, dir, &mut next);
        }
        cur = prune(next);
    }
    cur
}

impl WordSum {
    pub fn combination(&self) -> Combination {
        self.words.iter().map(|w| (w.atoms.clone(), w.coeff)).collect()
    }

    fn from_combination(j: usize, comb: Combination) -> Self {
        Self {
            j,
            words: prune(comb).into_iter().map(|(atoms, coeff)| Word { coeff, atoms }).collect(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Checks the word shape: words start and end with a resolvent power,
    /// atoms alternate, exponents sum to at least 2 for `j ≥ 1`, and the
    /// homogeneity degree of every word is `-m-j`.
    pub fn check_structure(&self, p: &ClassicalSymbol) -> Result<()> {
        let m = p.order() as i64;
        for w in &self.words {
            let bad = |why: &str| Err(Error::InvalidArgument(format!("word {w:?} of q_-m-{}: {why}", self.j)));
            if !matches!(w.atoms.first(), Some(Atom::QPow(_))) || !matches!(w.atoms.last(), Some(Atom::QPow(_))) {
                return bad("must start and end with a resolvent power");
            }
            for pair in w.atoms.windows(2) {
                if matches!(pair[0], Atom::QPow(_)) == matches!(pair[1], Atom::QPow(_)) {
                    return bad("atoms must alternate");
                }
            }
            let mut nu_sum = 0i64;
            let mut degree = 0i64;
            for a in &w.atoms {
                match *a {
                    Atom::QPow(nu) => {
                        if nu == 0 {
                            return bad("zero exponent");
                        }
                        nu_sum += nu as i64;
                        degree -= m * nu as i64;
                    }
                    Atom::PDeriv { k, b, .. } => degree += m - k as i64 - b as i64,
                }
            }
            if self.j >= 1 && nu_sum < 2 {
                return bad("exponents must sum to at least 2");
            }
            if self.j == 0 && (w.atoms != [Atom::QPow(1)] || w.coeff != C64::new(1.0, 0.0)) {
                return bad("q_-m is the single word q");
            }
            if degree != -m - self.j as i64 {
                return bad("wrong homogeneity degree");
            }
        }
        Ok(())
    }

    /// Numerical evaluator at a fixed `(x, ξ)`.
    pub fn at<'a>(&'a self, p: &ClassicalSymbol, x: f64, xi: f64) -> PointEvaluator<'a> {
        PointEvaluator::new(std::slice::from_ref(self), p, x, xi)
    }
}

impl fmt::Display for WordSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.words.is_empty() {
            return write!(f, "0");
        }
        for (i, w) in self.words.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({})", w.coeff)?;
            for a in &w.atoms {
                match a {
                    Atom::QPow(1) => write!(f, " q")?,
                    Atom::QPow(nu) => write!(f, " q^{nu}")?,
                    Atom::PDeriv { k, a, b } => write!(f, " d_x^{a} d_xi^{b} p[{k}]")?,
                }
            }
        }
        Ok(())
    }
}

fn factorial(n: usize) -> f64 {
    (1..=n).map(|i| i as f64).product()
}

/// `(-i)^a / a!`.
fn dx_weight(a: usize) -> C64 {
    C64::new(0.0, -1.0).powi(a as i32) / factorial(a)
}

/// Next term of the recursion
/// `q_{-m-j} = -q Σ_{a+k+l=j, l<j} (1/a!) ∂_ξ^a p_{m-k} (-i∂_x)^a q_{-m-l}`.
pub(crate) fn seeley_step(p: &ClassicalSymbol, prev: &[std::sync::Arc<WordSum>]) -> WordSum {
    let j = prev.len();
    if j == 0 {
        return WordSum {
            j: 0,
            words: vec![Word {
                coeff: C64::new(1.0, 0.0),
                atoms: vec![Atom::QPow(1)],
            }],
        };
    }
    let mut out = Combination::new();
    for l in 0..j {
        for a in 0..=(j - l) {
            let k = j - l - a;
            if p.deriv_vanishes(k, 0, a) {
                continue;
            }
            let d = diff_n(p, &prev[l].combination(), Dir::X, a);
            let c = -dx_weight(a);
            for (w, wc) in d {
                let mut atoms = Vec::with_capacity(w.len() + 2);
                atoms.push(Atom::QPow(1));
                atoms.push(Atom::PDeriv { k, a: 0, b: a });
                atoms.extend(w);
                accumulate(&mut out, atoms, c * wc);
            }
        }
    }
    WordSum::from_combination(j, out)
}

/// The resolvent-symbol terms `q_{-m-j}`, `j = 0…J`.
pub fn seeley_recursion(p: &ClassicalSymbol, j_max: usize) -> Result<Vec<WordSum>> {
    Ok(p.resolvent_terms(j_max)?.into_iter().map(|w| (*w).clone()).collect())
}

/// `(p_m - λ)` times a word: absorbs one power of `q` at the left end.
fn absorb_left(atoms: &[Atom]) -> Vec<Atom> {
    match atoms.first() {
        Some(Atom::QPow(1)) => atoms[1..].to_vec(),
        Some(Atom::QPow(nu)) => {
            let mut w = atoms.to_vec();
            w[0] = Atom::QPow(nu - 1);
            w
        }
        _ => unreachable!("resolvent words start with q"),
    }
}

fn absorb_right(atoms: &[Atom]) -> Vec<Atom> {
    let n = atoms.len();
    match atoms.last() {
        Some(Atom::QPow(1)) => atoms[..n - 1].to_vec(),
        Some(Atom::QPow(nu)) => {
            let mut w = atoms.to_vec();
            w[n - 1] = Atom::QPow(nu - 1);
            w
        }
        _ => unreachable!("resolvent words end with q"),
    }
}

/// Degree `-j` part of the symbol of `(P - λ) ∘ Q` (`left = true`) or
/// `Q ∘ (P - λ)`, computed on words. The empty word stands for the identity.
pub fn composition_term(p: &ClassicalSymbol, q: &[WordSum], j: usize, left: bool) -> Combination {
    let mut out = Combination::new();
    for l in 0..=j {
        let ql = q[l].combination();
        for a in 0..=(j - l) {
            let k = j - l - a;
            if k == 0 && a == 0 {
                for (w, c) in &ql {
                    let r = if left { absorb_left(w) } else { absorb_right(w) };
                    accumulate(&mut out, r, *c);
                }
                continue;
            }
            let (pk, derived) = if left {
                (Atom::PDeriv { k, a: 0, b: a }, diff_n(p, &ql, Dir::X, a))
            } else {
                (Atom::PDeriv { k, a, b: 0 }, diff_n(p, &ql, Dir::Xi, a))
            };
            let Atom::PDeriv { k: kk, a: aa, b: bb } = pk else { unreachable!() };
            if p.deriv_vanishes(kk, aa, bb) {
                continue;
            }
            let c = dx_weight(a);
            for (w, wc) in derived {
                let atoms = if left {
                    std::iter::once(pk).chain(w).collect()
                } else {
                    w.into_iter().chain(std::iter::once(pk)).collect()
                };
                accumulate(&mut out, atoms, c * wc);
            }
        }
    }
    prune(out)
}

/// Checks that both compositions of `p - λ` with `Σ_{j≤J} q_{-m-j}` equal
/// the identity order by order, exactly on words.
pub fn composition_identity_holds(p: &ClassicalSymbol, j_max: usize) -> Result<bool> {
    let q = seeley_recursion(p, j_max)?;
    for j in 0..=j_max {
        for left in [true, false] {
            let t = composition_term(p, &q, j, left);
            let mut want = Combination::new();
            if j == 0 {
                want.insert(Vec::new(), C64::new(1.0, 0.0));
            }
            if t != want {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Evaluates word sums at fixed `(x, ξ)` for varying `λ`; the `λ`-free
/// factors are computed once.
pub struct PointEvaluator<'a> {
    sums: &'a [WordSum],
    pm: CMatrix,
    factors: BTreeMap<Atom, CMatrix>,
    max_nu: u32,
}

impl<'a> PointEvaluator<'a> {
    pub fn new(sums: &'a [WordSum], p: &ClassicalSymbol, x: f64, xi: f64) -> Self {
        let mut factors = BTreeMap::new();
        let mut max_nu = 1;
        for s in sums {
            for w in &s.words {
                for &atom in &w.atoms {
                    match atom {
                        Atom::QPow(nu) => max_nu = max_nu.max(nu),
                        Atom::PDeriv { k, a, b } => {
                            factors.entry(atom).or_insert_with(|| p.eval_deriv(k, a, b, x, xi));
                        }
                    }
                }
            }
        }
        Self {
            sums,
            pm: p.principal(x, xi),
            factors,
            max_nu,
        }
    }

    pub fn principal(&self) -> &CMatrix {
        &self.pm
    }

    /// `Σ_sums Σ_words coeff · word(λ)`.
    pub fn eval(&self, lambda: C64) -> Result<CMatrix> {
        let q = resolvent(&self.pm, lambda)?;
        let mut powers = vec![CMatrix::identity(self.pm.n()), q];
        for nu in 2..=self.max_nu as usize {
            let next = &powers[nu - 1] * &powers[1];
            powers.push(next);
        }
        let mut total = CMatrix::zeros(self.pm.n());
        for s in self.sums {
            for w in &s.words {
                let mut acc: Option<CMatrix> = None;
                for atom in &w.atoms {
                    let f = match atom {
                        Atom::QPow(nu) => &powers[*nu as usize],
                        pd => &self.factors[pd],
                    };
                    acc = Some(match acc {
                        None => f.clone(),
                        Some(m) => &m * f,
                    });
                }
                if let Some(m) = acc {
                    total.axpy(w.coeff, &m);
                }
            }
        }
        Ok(total)
    }
}

/// `q_{-m-j}(x, ξ, λ)` from its word sum.
pub fn eval_wordsum(w: &WordSum, p: &ClassicalSymbol, x: f64, xi: f64, lambda: C64) -> Result<CMatrix> {
    w.at(p, x, xi).eval(lambda)
}
