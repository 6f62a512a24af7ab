//! Coefficient expressions in `x` and `xi`:
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := '-' factor | base ('^' uint)?
//! base   := number | 'x' | 'xi' | 'sin' '(' expr ')' | 'cos' '(' expr ')' | '(' expr ')'
//! ```
//!
//! Expressions can be differentiated symbolically in either variable and
//! split into coefficients of powers of `xi`.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Num(f64),
    X,
    Xi,
    Sin(Box<Expr>),
    Cos(Box<Expr>),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    X,
    Xi,
}

use Expr::*;

pub fn num(v: f64) -> Expr {
    Num(v)
}

fn is_num(e: &Expr, v: f64) -> bool {
    matches!(e, Num(w) if *w == v)
}

pub fn add(a: Expr, b: Expr) -> Expr {
    match (a, b) {
        (Num(p), Num(q)) => Num(p + q),
        (a, b) if is_num(&a, 0.0) => b,
        (a, b) if is_num(&b, 0.0) => a,
        (a, Neg(b)) => sub(a, *b),
        (a, b) => Add(Box::new(a), Box::new(b)),
    }
}

pub fn sub(a: Expr, b: Expr) -> Expr {
    match (a, b) {
        (Num(p), Num(q)) => Num(p - q),
        (a, b) if is_num(&b, 0.0) => a,
        (a, b) if is_num(&a, 0.0) => neg(b),
        (a, b) if a == b => Num(0.0),
        (a, b) => Sub(Box::new(a), Box::new(b)),
    }
}

pub fn neg(a: Expr) -> Expr {
    match a {
        Num(p) => Num(-p),
        Neg(b) => *b,
        a => Neg(Box::new(a)),
    }
}

pub fn mul(a: Expr, b: Expr) -> Expr {
    match (a, b) {
        (Num(p), Num(q)) => Num(p * q),
        (a, b) if is_num(&a, 0.0) || is_num(&b, 0.0) => Num(0.0),
        (a, b) if is_num(&a, 1.0) => b,
        (a, b) if is_num(&b, 1.0) => a,
        (a, b) if is_num(&a, -1.0) => neg(b),
        (a, b) if is_num(&b, -1.0) => neg(a),
        (Neg(a), b) => neg(mul(*a, b)),
        (a, Neg(b)) => neg(mul(a, *b)),
        (a, Num(q)) => mul(Num(q), a),
        (Num(p), Mul(b, c)) if matches!(*b, Num(_)) => {
            let Num(q) = *b else { unreachable!() };
            mul(Num(p * q), *c)
        }
        (a, b) => Mul(Box::new(a), Box::new(b)),
    }
}

pub fn pow(a: Expr, n: u32) -> Expr {
    match (a, n) {
        (_, 0) => Num(1.0),
        (a, 1) => a,
        (Num(p), n) => Num(p.powi(n as i32)),
        (Pow(b, m), n) => Pow(b, m * n),
        (a, n) => Pow(Box::new(a), n),
    }
}

pub fn sin(a: Expr) -> Expr {
    match a {
        Num(p) => Num(p.sin()),
        a => Sin(Box::new(a)),
    }
}

pub fn cos(a: Expr) -> Expr {
    match a {
        Num(p) => Num(p.cos()),
        a => Cos(Box::new(a)),
    }
}

impl Expr {
    pub fn eval(&self, x: f64, xi: f64) -> f64 {
        match self {
            Num(v) => *v,
            X => x,
            Xi => xi,
            Sin(a) => a.eval(x, xi).sin(),
            Cos(a) => a.eval(x, xi).cos(),
            Neg(a) => -a.eval(x, xi),
            Add(a, b) => a.eval(x, xi) + b.eval(x, xi),
            Sub(a, b) => a.eval(x, xi) - b.eval(x, xi),
            Mul(a, b) => a.eval(x, xi) * b.eval(x, xi),
            Pow(a, n) => a.eval(x, xi).powi(*n as i32),
        }
    }

    pub fn depends_on(&self, v: Var) -> bool {
        match self {
            Num(_) => false,
            X => v == Var::X,
            Xi => v == Var::Xi,
            Sin(a) | Cos(a) | Neg(a) | Pow(a, _) => a.depends_on(v),
            Add(a, b) | Sub(a, b) | Mul(a, b) => a.depends_on(v) || b.depends_on(v),
        }
    }

    pub fn is_zero(&self) -> bool {
        is_num(self, 0.0)
    }

    /// Symbolic derivative with constant folding.
    pub fn diff(&self, v: Var) -> Expr {
        if !self.depends_on(v) {
            return Num(0.0);
        }
        match self {
            Num(_) => Num(0.0),
            X | Xi => Num(1.0),
            Sin(a) => mul(cos((**a).clone()), a.diff(v)),
            Cos(a) => neg(mul(sin((**a).clone()), a.diff(v))),
            Neg(a) => neg(a.diff(v)),
            Add(a, b) => add(a.diff(v), b.diff(v)),
            Sub(a, b) => sub(a.diff(v), b.diff(v)),
            Mul(a, b) => add(mul(a.diff(v), (**b).clone()), mul((**a).clone(), b.diff(v))),
            Pow(a, n) => mul(mul(Num(*n as f64), pow((**a).clone(), n - 1)), a.diff(v)),
        }
    }

    pub fn diff_n(&self, v: Var, n: usize) -> Expr {
        (0..n).fold(self.clone(), |e, _| e.diff(v))
    }

    /// Coefficients `c_d(x)` with `self = Σ_d c_d(x) ξ^d`; trailing
    /// identically-zero coefficients are dropped (the zero polynomial gives
    /// `[0]`).
    pub fn xi_poly(&self) -> Result<Vec<Expr>> {
        let mut c = match self {
            Num(_) | X => vec![self.clone()],
            Xi => vec![Num(0.0), Num(1.0)],
            Sin(a) | Cos(a) => {
                if a.depends_on(Var::Xi) {
                    return Err(Error::Degree(format!("xi inside a trigonometric function: {self}")));
                }
                vec![self.clone()]
            }
            Neg(a) => a.xi_poly()?.into_iter().map(neg).collect(),
            Add(a, b) | Sub(a, b) => {
                let (pa, pb) = (a.xi_poly()?, b.xi_poly()?);
                let plus = matches!(self, Add(..));
                (0..pa.len().max(pb.len()))
                    .map(|d| {
                        let x = pa.get(d).cloned().unwrap_or(Num(0.0));
                        let y = pb.get(d).cloned().unwrap_or(Num(0.0));
                        if plus { add(x, y) } else { sub(x, y) }
                    })
                    .collect()
            }
            Mul(a, b) => poly_mul(&a.xi_poly()?, &b.xi_poly()?),
            Pow(a, n) => {
                let pa = a.xi_poly()?;
                (0..*n).fold(vec![Num(1.0)], |acc, _| poly_mul(&acc, &pa))
            }
        };
        while c.len() > 1 && c.last().is_some_and(Expr::is_zero) {
            c.pop();
        }
        Ok(c)
    }

    /// Polynomial degree in `xi`.
    pub fn xi_degree(&self) -> Result<usize> {
        Ok(self.xi_poly()?.len() - 1)
    }

    /// Highest Fourier mode in `x`, or `None` if `x` enters through
    /// something other than sums and products of `sin`/`cos` of
    /// `n·x + const` and constants.
    pub fn x_band(&self) -> Option<u32> {
        match self {
            Num(_) | Xi => Some(0),
            X => None,
            Sin(a) | Cos(a) => linear_frequency(a),
            Neg(a) => a.x_band(),
            Add(a, b) | Sub(a, b) => Some(a.x_band()?.max(b.x_band()?)),
            Mul(a, b) => Some(a.x_band()? + b.x_band()?),
            Pow(a, n) => Some(a.x_band()? * n),
        }
    }
}

fn linear_frequency(e: &Expr) -> Option<u32> {
    if !e.depends_on(Var::X) {
        return if e.depends_on(Var::Xi) { None } else { Some(0) };
    }
    let d = e.diff(Var::X);
    match d {
        Num(v) if v.fract() == 0.0 && v.abs() <= 1e6 => Some(v.abs() as u32),
        _ => None,
    }
}

fn poly_mul(a: &[Expr], b: &[Expr]) -> Vec<Expr> {
    let mut out = vec![Num(0.0); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            let t = mul(x.clone(), y.clone());
            out[i + j] = add(std::mem::replace(&mut out[i + j], Num(0.0)), t);
        }
    }
    out
}

impl Expr {
    fn prec(&self) -> u8 {
        match self {
            Add(..) | Sub(..) => 1,
            Neg(_) => 2,
            Num(v) if *v < 0.0 => 2,
            Mul(..) => 3,
            Pow(..) => 4,
            _ => 5,
        }
    }

    fn fmt_at(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.prec() < min {
            write!(f, "(")?;
            self.fmt_at(f, 0)?;
            return write!(f, ")");
        }
        match self {
            Num(v) => write!(f, "{v}"),
            X => write!(f, "x"),
            Xi => write!(f, "xi"),
            Sin(a) => write!(f, "sin({a})"),
            Cos(a) => write!(f, "cos({a})"),
            Neg(a) => {
                write!(f, "-")?;
                a.fmt_at(f, 3)
            }
            Add(a, b) => {
                a.fmt_at(f, 1)?;
                write!(f, " + ")?;
                b.fmt_at(f, 1)
            }
            Sub(a, b) => {
                a.fmt_at(f, 1)?;
                write!(f, " - ")?;
                b.fmt_at(f, 2)
            }
            Mul(a, b) => {
                a.fmt_at(f, 3)?;
                write!(f, "*")?;
                b.fmt_at(f, 4)
            }
            Pow(a, n) => {
                a.fmt_at(f, 5)?;
                write!(f, "^{n}")
            }
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_at(f, 0)
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(f64),
    Ident(String),
    Op(char),
    End,
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    tok: Tok,
    tok_pos: usize,
}

fn parse_err(position: usize, expected: &[&'static str]) -> Error {
    Error::Parse {
        position,
        expected: expected.to_vec(),
    }
}

const BASE_START: &[&str] = &["number", "x", "xi", "sin", "cos", "(", "-"];

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Result<Self> {
        let mut p = Parser {
            src,
            pos: 0,
            tok: Tok::End,
            tok_pos: 0,
        };
        p.advance()?;
        Ok(p)
    }

    fn advance(&mut self) -> Result<()> {
        let bytes = self.src.as_bytes();
        while self.pos < bytes.len() && bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        self.tok_pos = self.pos;
        if self.pos >= bytes.len() {
            self.tok = Tok::End;
            return Ok(());
        }
        let c = bytes[self.pos];
        if c.is_ascii_digit() || c == b'.' {
            let start = self.pos;
            while self.pos < bytes.len() && (bytes[self.pos].is_ascii_digit() || bytes[self.pos] == b'.') {
                self.pos += 1;
            }
            if self.pos < bytes.len() && matches!(bytes[self.pos], b'e' | b'E') {
                let mut q = self.pos + 1;
                if q < bytes.len() && matches!(bytes[q], b'+' | b'-') {
                    q += 1;
                }
                if q < bytes.len() && bytes[q].is_ascii_digit() {
                    while q < bytes.len() && bytes[q].is_ascii_digit() {
                        q += 1;
                    }
                    self.pos = q;
                }
            }
            let text = &self.src[start..self.pos];
            let v: f64 = text.parse().map_err(|_| parse_err(start, &["number"]))?;
            self.tok = Tok::Num(v);
        } else if c.is_ascii_alphabetic() {
            let start = self.pos;
            while self.pos < bytes.len() && bytes[self.pos].is_ascii_alphanumeric() {
                self.pos += 1;
            }
            self.tok = Tok::Ident(self.src[start..self.pos].to_string());
        } else if b"+-*^()".contains(&c) {
            self.pos += 1;
            self.tok = Tok::Op(c as char);
        } else {
            return Err(parse_err(self.pos, BASE_START));
        }
        Ok(())
    }

    fn expect_op(&mut self, c: char, name: &'static str) -> Result<()> {
        if self.tok == Tok::Op(c) {
            self.advance()
        } else {
            Err(parse_err(self.tok_pos, &[name]))
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut e = self.term()?;
        loop {
            match self.tok {
                Tok::Op('+') => {
                    self.advance()?;
                    e = Add(Box::new(e), Box::new(self.term()?));
                }
                Tok::Op('-') => {
                    self.advance()?;
                    e = Sub(Box::new(e), Box::new(self.term()?));
                }
                _ => return Ok(e),
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut e = self.factor()?;
        while self.tok == Tok::Op('*') {
            self.advance()?;
            e = Mul(Box::new(e), Box::new(self.factor()?));
        }
        Ok(e)
    }

    fn factor(&mut self) -> Result<Expr> {
        if self.tok == Tok::Op('-') {
            self.advance()?;
            return Ok(Neg(Box::new(self.factor()?)));
        }
        let base = self.base()?;
        if self.tok != Tok::Op('^') {
            return Ok(base);
        }
        self.advance()?;
        let at = self.tok_pos;
        match self.tok {
            Tok::Num(v) if v.fract() == 0.0 && (0.0..=64.0).contains(&v) => {
                self.advance()?;
                Ok(Pow(Box::new(base), v as u32))
            }
            Tok::Num(v) if base.depends_on(Var::Xi) => {
                Err(Error::Degree(format!("xi raised to the non-integer power {v} at position {at}")))
            }
            _ => Err(parse_err(at, &["unsigned integer"])),
        }
    }

    fn base(&mut self) -> Result<Expr> {
        let at = self.tok_pos;
        match std::mem::replace(&mut self.tok, Tok::End) {
            Tok::Num(v) => {
                self.advance()?;
                Ok(Num(v))
            }
            Tok::Ident(name) => {
                self.advance()?;
                match name.as_str() {
                    "x" => Ok(X),
                    "xi" => Ok(Xi),
                    "sin" | "cos" => {
                        self.expect_op('(', "(")?;
                        let inner = self.expr()?;
                        self.expect_op(')', ")")?;
                        Ok(if name == "sin" { Sin(Box::new(inner)) } else { Cos(Box::new(inner)) })
                    }
                    _ => Err(parse_err(at, &["x", "xi", "sin", "cos"])),
                }
            }
            Tok::Op('(') => {
                self.advance()?;
                let inner = self.expr()?;
                self.expect_op(')', ")")?;
                Ok(inner)
            }
            _ => Err(parse_err(at, BASE_START)),
        }
    }
}

/// Parses a coefficient expression and checks that `xi` enters
/// polynomially.
pub fn parse_coeff(src: &str) -> Result<Expr> {
    if src.trim().is_empty() {
        return Err(parse_err(0, BASE_START));
    }
    let mut p = Parser::new(src)?;
    let e = p.expr()?;
    if p.tok != Tok::End {
        return Err(parse_err(p.tok_pos, &["+", "-", "*", "^", "end of input"]));
    }
    e.xi_poly()?;
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degrees() {
        assert_eq!(parse_coeff("xi^2 + 2 + sin(x)").unwrap().xi_degree().unwrap(), 2);
        assert_eq!(parse_coeff("xi*(1+cos(x))^2").unwrap().xi_degree().unwrap(), 1);
        assert_eq!(parse_coeff("xi - xi + 3").unwrap().xi_degree().unwrap(), 0);
        assert_eq!(parse_coeff("-xi").unwrap().xi_degree().unwrap(), 1);
    }

    #[test]
    fn rejects() {
        assert!(matches!(parse_coeff("xi^0.5"), Err(Error::Degree(_))));
        assert!(matches!(parse_coeff("x^0.5"), Err(Error::Parse { position: 2, .. })));
        assert!(matches!(parse_coeff("sin(xi)"), Err(Error::Degree(_))));
        assert!(matches!(parse_coeff("2 +"), Err(Error::Parse { position: 3, .. })));
        assert!(matches!(parse_coeff("tan(x)"), Err(Error::Parse { position: 0, .. })));
        assert!(matches!(parse_coeff("(x"), Err(Error::Parse { position: 2, .. })));
        assert!(matches!(parse_coeff("x x"), Err(Error::Parse { position: 2, .. })));
        assert!(parse_coeff("").is_err());
    }

    #[test]
    fn evaluation_and_coefficients() {
        let e = parse_coeff("(xi + sin(x))^2 - 1.5e0*xi").unwrap();
        assert!((e.eval(0.3, 2.0) - ((2.0 + 0.3f64.sin()).powi(2) - 3.0)).abs() < 1e-14);
        let c = e.xi_poly().unwrap();
        assert_eq!(c.len(), 3);
        let x = 0.7;
        assert!((c[0].eval(x, 0.0) - x.sin().powi(2)).abs() < 1e-14);
        assert!((c[1].eval(x, 0.0) - (2.0 * x.sin() - 1.5)).abs() < 1e-14);
        assert!((c[2].eval(x, 0.0) - 1.0).abs() < 1e-14);
    }

    #[test]
    fn derivatives_simplify() {
        let e = parse_coeff("xi^2 + 2 + sin(x)").unwrap();
        assert_eq!(e.diff(Var::X), Cos(Box::new(X)));
        assert_eq!(e.diff(Var::Xi).diff(Var::Xi), Num(2.0));
        assert_eq!(e.diff_n(Var::Xi, 3), Num(0.0));
    }

    #[test]
    fn bands() {
        assert_eq!(parse_coeff("0.5+0.25*cos(x)").unwrap().x_band(), Some(1));
        assert_eq!(parse_coeff("sin(2*x)*cos(x+1)").unwrap().x_band(), Some(3));
        assert_eq!(parse_coeff("xi*(1+cos(x))^2").unwrap().x_band(), Some(2));
        assert_eq!(parse_coeff("x").unwrap().x_band(), None);
        assert_eq!(parse_coeff("sin(x*x)").unwrap().x_band(), None);
    }
}
