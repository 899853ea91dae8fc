//! Text syntax for expressions, points and canonical forms.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*'? unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' INT)?
//! atom   := NUMBER 'i'? | 'i' | 'v' INT | 'p' DIGIT DIGIT | 'p(' INT ',' INT ')'
//!         | 'z' INT '~'? | '(' expr ')'
//! NUMBER := INT ('.' DIGITS)? ('/' INT)?
//! ```
//!
//! One expression uses one alphabet: `v` (noncommutative), `p` (projective)
//! or `z` (sphere functions, `z1~` is the conjugate of `z1`).

use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebra::{CrossedElem, NCPoly};
use crate::projective::PExpr;
use crate::scalars::{ApproxComplex, ExactComplex, Rational};
use crate::sphere::ZPoly;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num { value: Rational, decimal: bool },
    Imag { value: Rational, decimal: bool },
    I,
    V(u32),
    P(u32, u32),
    Z(u32, bool),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn err<T>(pos: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse { pos, msg: msg.into() })
}

struct Lexer<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn digits(&mut self) -> Option<&'a str> {
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.s[start..self.pos]).unwrap())
    }

    fn index(&mut self) -> Result<u32> {
        let at = self.pos;
        match self.digits().map(str::parse::<u32>) {
            Some(Ok(0)) => err(at, "indices start at 1"),
            Some(Ok(k)) => Ok(k),
            Some(Err(_)) => err(at, "index too large"),
            None => err(at, "expected an index"),
        }
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            err(self.pos, format!("expected '{}'", c as char))
        }
    }

    fn number(&mut self) -> Result<Tok> {
        let int = self.digits().unwrap();
        let mut value = Rational::from_integer(int.parse::<BigInt>().unwrap());
        let mut decimal = false;
        if self.peek() == Some(b'.') {
            self.pos += 1;
            let at = self.pos;
            let Some(frac) = self.digits() else { return err(at, "expected digits after '.'") };
            let scale = BigInt::from(10).pow(frac.len() as u32);
            value += Rational::new(frac.parse::<BigInt>().unwrap(), scale);
            decimal = true;
        }
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let at = self.pos;
            let Some(den) = self.digits() else { return err(at, "expected a denominator") };
            let den = den.parse::<BigInt>().unwrap();
            if den.is_zero() {
                return err(at, "zero denominator");
            }
            value /= Rational::from_integer(den);
        }
        Ok(Tok::Num { value, decimal })
    }

    fn tokens(mut self) -> Result<Vec<(usize, Tok)>> {
        let mut out = Vec::new();
        while let Some(c) = self.peek() {
            let at = self.pos;
            if c.is_ascii_whitespace() {
                self.pos += 1;
                continue;
            }
            let tok = match c {
                b'0'..=b'9' => {
                    let Tok::Num { value, decimal } = self.number()? else { unreachable!() };
                    if self.peek() == Some(b'i') {
                        self.pos += 1;
                        Tok::Imag { value, decimal }
                    } else {
                        Tok::Num { value, decimal }
                    }
                }
                b'i' => {
                    self.pos += 1;
                    Tok::I
                }
                b'v' => {
                    self.pos += 1;
                    Tok::V(self.index()?)
                }
                b'z' => {
                    self.pos += 1;
                    let k = self.index()?;
                    let conj = self.peek() == Some(b'~');
                    if conj {
                        self.pos += 1;
                    }
                    Tok::Z(k, conj)
                }
                b'p' => {
                    self.pos += 1;
                    if self.peek() == Some(b'(') {
                        self.pos += 1;
                        let i = self.index()?;
                        self.expect(b',')?;
                        let j = self.index()?;
                        self.expect(b')')?;
                        Tok::P(i, j)
                    } else {
                        let mut ij = [0u32; 2];
                        for slot in &mut ij {
                            match self.peek() {
                                Some(d @ b'1'..=b'9') => {
                                    *slot = (d - b'0') as u32;
                                    self.pos += 1;
                                }
                                _ => return err(self.pos, "expected two index digits, or p(i,j)"),
                            }
                        }
                        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
                            return err(self.pos, "write p(i,j) for indices of more than one digit");
                        }
                        Tok::P(ij[0], ij[1])
                    }
                }
                b'+' => {
                    self.pos += 1;
                    Tok::Plus
                }
                b'-' => {
                    self.pos += 1;
                    Tok::Minus
                }
                b'*' => {
                    self.pos += 1;
                    Tok::Star
                }
                b'^' => {
                    self.pos += 1;
                    Tok::Caret
                }
                b'(' => {
                    self.pos += 1;
                    Tok::LParen
                }
                b')' => {
                    self.pos += 1;
                    Tok::RParen
                }
                _ => return err(at, format!("unexpected character '{}'", c as char)),
            };
            out.push((at, tok));
        }
        Ok(out)
    }
}

#[derive(Clone, Debug)]
enum Ast {
    Num(ExactComplex),
    V(u32),
    P(u32, u32),
    Z(u32, bool),
    Add(Box<Ast>, Box<Ast>),
    Sub(Box<Ast>, Box<Ast>),
    Mul(Box<Ast>, Box<Ast>),
    Neg(Box<Ast>),
    Pow(Box<Ast>, u32),
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |(p, _)| *p)
    }

    fn expr(&mut self) -> Result<Ast> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.at += 1;
                    lhs = Ast::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(Tok::Minus) => {
                    self.at += 1;
                    lhs = Ast::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Ast> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.at += 1;
                    lhs = Ast::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                Some(
                    Tok::Num { .. } | Tok::Imag { .. } | Tok::I | Tok::V(_) | Tok::P(..) | Tok::Z(..) | Tok::LParen,
                ) => {
                    lhs = Ast::Mul(Box::new(lhs), Box::new(self.power()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Ast> {
        if self.peek() == Some(&Tok::Minus) {
            self.at += 1;
            return Ok(Ast::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Ast> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.at += 1;
        let pos = self.pos();
        match self.peek() {
            Some(Tok::Num { value, decimal: false }) if value.is_integer() => {
                let Ok(e) = value.to_integer().to_string().parse::<u32>() else {
                    return err(pos, "exponent too large");
                };
                self.at += 1;
                Ok(Ast::Pow(Box::new(base), e))
            }
            _ => err(pos, "expected a nonnegative integer exponent"),
        }
    }

    fn atom(&mut self) -> Result<Ast> {
        let pos = self.pos();
        let Some(tok) = self.peek().cloned() else { return err(pos, "unexpected end of input") };
        self.at += 1;
        Ok(match tok {
            Tok::Num { value, .. } => Ast::Num(ExactComplex::from_rational(value)),
            Tok::Imag { value, .. } => Ast::Num(ExactComplex::new(Rational::zero(), value)),
            Tok::I => Ast::Num(ExactComplex::i()),
            Tok::V(k) => Ast::V(k),
            Tok::P(i, j) => Ast::P(i, j),
            Tok::Z(k, c) => Ast::Z(k, c),
            Tok::LParen => {
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return err(self.pos(), "expected ')'");
                }
                self.at += 1;
                inner
            }
            other => return err(pos, format!("unexpected {}", describe(&other))),
        })
    }
}

fn describe(t: &Tok) -> &'static str {
    match t {
        Tok::Plus => "'+'",
        Tok::Minus => "'-'",
        Tok::Star => "'*'",
        Tok::Caret => "'^'",
        Tok::RParen => "')'",
        _ => "token",
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Alphabet {
    V,
    P,
    Z,
}

fn alphabets(a: &Ast, out: &mut Vec<Alphabet>) {
    match a {
        Ast::Num(_) => {}
        Ast::V(_) => out.push(Alphabet::V),
        Ast::P(..) => out.push(Alphabet::P),
        Ast::Z(..) => out.push(Alphabet::Z),
        Ast::Add(x, y) | Ast::Sub(x, y) | Ast::Mul(x, y) => {
            alphabets(x, out);
            alphabets(y, out);
        }
        Ast::Neg(x) | Ast::Pow(x, _) => alphabets(x, out),
    }
}

fn max_z(a: &Ast) -> u32 {
    match a {
        Ast::Z(k, _) => *k,
        Ast::Num(_) | Ast::V(_) | Ast::P(..) => 0,
        Ast::Add(x, y) | Ast::Sub(x, y) | Ast::Mul(x, y) => max_z(x).max(max_z(y)),
        Ast::Neg(x) | Ast::Pow(x, _) => max_z(x),
    }
}

trait Ring: Sized {
    fn constant(c: ExactComplex, n: usize) -> Self;
    fn leaf(a: &Ast, n: usize) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn pow(&self, e: u32) -> Self;

    fn build(a: &Ast, n: usize) -> Self {
        match a {
            Ast::Num(c) => Self::constant(c.clone(), n),
            Ast::V(_) | Ast::P(..) | Ast::Z(..) => Self::leaf(a, n),
            Ast::Add(x, y) => Self::build(x, n).add(&Self::build(y, n)),
            Ast::Sub(x, y) => Self::build(x, n).sub(&Self::build(y, n)),
            Ast::Mul(x, y) => Self::build(x, n).mul(&Self::build(y, n)),
            Ast::Neg(x) => Self::build(x, n).neg(),
            Ast::Pow(x, e) => Self::build(x, n).pow(*e),
        }
    }
}

impl Ring for NCPoly {
    fn constant(c: ExactComplex, _: usize) -> Self {
        NCPoly::constant(c)
    }
    fn leaf(a: &Ast, _: usize) -> Self {
        match a {
            Ast::V(k) => NCPoly::var(*k),
            _ => unreachable!("alphabet checked"),
        }
    }
    fn add(&self, o: &Self) -> Self {
        NCPoly::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        NCPoly::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        NCPoly::mul(self, o)
    }
    fn neg(&self) -> Self {
        NCPoly::neg(self)
    }
    fn pow(&self, e: u32) -> Self {
        NCPoly::pow(self, e)
    }
}

impl Ring for PExpr {
    fn constant(c: ExactComplex, _: usize) -> Self {
        PExpr::constant(c)
    }
    fn leaf(a: &Ast, _: usize) -> Self {
        match a {
            Ast::P(i, j) => PExpr::p(*i, *j),
            _ => unreachable!("alphabet checked"),
        }
    }
    fn add(&self, o: &Self) -> Self {
        PExpr::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        PExpr::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        PExpr::mul(self, o)
    }
    fn neg(&self) -> Self {
        PExpr::neg(self)
    }
    fn pow(&self, e: u32) -> Self {
        PExpr::pow(self, e)
    }
}

/// Sphere polynomials, unreduced.
impl Ring for ZPoly {
    fn constant(c: ExactComplex, n: usize) -> Self {
        ZPoly::constant(n, c)
    }
    fn leaf(a: &Ast, n: usize) -> Self {
        match a {
            Ast::Z(k, false) => ZPoly::z(n, *k as usize),
            Ast::Z(k, true) => ZPoly::zbar(n, *k as usize),
            _ => unreachable!("alphabet checked"),
        }
    }
    fn add(&self, o: &Self) -> Self {
        ZPoly::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        ZPoly::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        ZPoly::mul(self, o)
    }
    fn neg(&self) -> Self {
        ZPoly::neg(self)
    }
    fn pow(&self, e: u32) -> Self {
        ZPoly::pow(self, e)
    }
}

fn parse_ast(text: &str) -> Result<Ast> {
    let toks = Lexer { s: text.as_bytes(), pos: 0 }.tokens()?;
    let mut p = Parser { toks, at: 0, end: text.len() };
    if p.peek().is_none() {
        return err(0, "empty expression");
    }
    let ast = p.expr()?;
    if p.peek().is_some() {
        return err(p.pos(), "unexpected trailing input");
    }
    Ok(ast)
}

fn alphabet_of(ast: &Ast) -> Result<Option<Alphabet>> {
    let mut found = Vec::new();
    alphabets(ast, &mut found);
    found.dedup();
    let first = found.first().copied();
    if found.iter().any(|a| Some(*a) != first) {
        return Err(Error::MixedAlphabets);
    }
    Ok(first)
}

/// The kind of expression a text denotes.
#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Scalar(ExactComplex),
    Nc(NCPoly),
    Proj(PExpr),
}

/// Parses a `v`- or `p`-expression (or a bare scalar).
pub fn parse_expr(text: &str) -> Result<Expr> {
    let ast = parse_ast(text)?;
    match alphabet_of(&ast)? {
        None => Ok(Expr::Scalar(scalar_value(&ast))),
        Some(Alphabet::V) => Ok(Expr::Nc(NCPoly::build(&ast, 0))),
        Some(Alphabet::P) => Ok(Expr::Proj(PExpr::build(&ast, 0))),
        Some(Alphabet::Z) => err(0, "sphere coordinates z_i are not allowed here"),
    }
}

fn scalar_value(ast: &Ast) -> ExactComplex {
    NCPoly::build(ast, 0).terms().next().map(|(_, c)| c.clone()).unwrap_or_else(ExactComplex::zero)
}

/// A noncommutative polynomial; scalars are accepted as constants.
pub fn parse_nc(text: &str) -> Result<NCPoly> {
    match parse_expr(text)? {
        Expr::Scalar(c) => Ok(NCPoly::constant(c)),
        Expr::Nc(p) => Ok(p),
        Expr::Proj(_) => Err(Error::MixedAlphabets),
    }
}

/// A projective expression; scalars are accepted as constants.
pub fn parse_p(text: &str) -> Result<PExpr> {
    match parse_expr(text)? {
        Expr::Scalar(c) => Ok(PExpr::constant(c)),
        Expr::Proj(e) => Ok(e),
        Expr::Nc(_) => Err(Error::MixedAlphabets),
    }
}

/// A sphere polynomial in `z_1..z_n` and conjugates, unreduced.
pub fn parse_z(n: usize, text: &str) -> Result<ZPoly> {
    let ast = parse_ast(text)?;
    match alphabet_of(&ast)? {
        None | Some(Alphabet::Z) => {}
        Some(_) => return Err(Error::MixedAlphabets),
    }
    let k = max_z(&ast);
    if k as usize > n {
        return Err(Error::IndexOutOfRange { index: k, n });
    }
    Ok(ZPoly::build(&ast, n))
}

/// Reads the canonical form `[even] <f0> [odd] <f1>`.
pub fn parse_crossed(n: usize, text: &str) -> Result<CrossedElem> {
    let t = text.trim();
    let Some(rest) = t.strip_prefix("[even]") else { return err(0, "expected '[even]'") };
    let Some(split) = rest.find("[odd]") else { return err(t.len(), "expected '[odd]'") };
    let f0 = parse_z(n, &rest[..split])?;
    let f1 = parse_z(n, &rest[split + "[odd]".len()..])?;
    CrossedElem::new(f0, f1)
}

/// Coordinates of a point: exact unless some literal has a decimal point.
#[derive(Clone, Debug, PartialEq)]
pub enum PointCoords {
    Exact(Vec<ExactComplex>),
    Approx(Vec<ApproxComplex>),
}

/// Comma-separated complex scalars, e.g. `3/5+0i,0+4/5i` or `0.6,0.8i`.
pub fn parse_point(text: &str) -> Result<PointCoords> {
    let mut coords = Vec::new();
    let mut decimal = false;
    let mut offset = 0;
    for part in text.split(',') {
        let toks = Lexer { s: part.as_bytes(), pos: 0 }.tokens().map_err(|e| shift(e, offset))?;
        decimal |=
            toks.iter().any(|(_, t)| matches!(t, Tok::Num { decimal: true, .. } | Tok::Imag { decimal: true, .. }));
        let ast = parse_ast(part).map_err(|e| shift(e, offset))?;
        if alphabet_of(&ast)?.is_some() {
            return err(offset, "point coordinates must be scalars");
        }
        coords.push(scalar_value(&ast));
        offset += part.len() + 1;
    }
    if decimal {
        Ok(PointCoords::Approx(coords.iter().map(ExactComplex::to_approx).collect()))
    } else {
        Ok(PointCoords::Exact(coords))
    }
}

fn shift(e: Error, by: usize) -> Error {
    match e {
        Error::Parse { pos, msg } => Error::Parse { pos: pos + by, msg },
        other => other,
    }
}

/// Rational parsing for command-line options such as `1/2`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    match parse_expr(text)? {
        Expr::Scalar(c) if c.im.is_zero() => Ok(c.re),
        _ => err(0, "expected a rational number"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;
    use crate::sample::Sampler;
    use proptest::prelude::*;

    fn c(a: i64, b: i64, x: i64, y: i64) -> ExactComplex {
        ExactComplex::from_ratios(a, b, x, y)
    }

    #[test]
    fn nc_expressions() {
        let p = parse_nc("v1*v2*v3 - v3*v2*v1").unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p, NCPoly::word(&[1, 2, 3]).sub(&NCPoly::word(&[3, 2, 1])));
        assert_eq!(parse_nc("v1v2").unwrap(), NCPoly::word(&[1, 2]));
        assert_eq!(parse_nc("2v1^2").unwrap(), NCPoly::word(&[1, 1]).scale(&c(2, 1, 0, 1)));
        assert_eq!(parse_nc("(v1 + v2)^2").unwrap(), NCPoly::var(1).add(&NCPoly::var(2)).pow(2));
        assert_eq!(parse_nc("-(1/2+1/3i)*v10").unwrap(), NCPoly::var(10).scale(&c(-1, 2, -1, 3)));
        assert_eq!(parse_nc("3/5i v1").unwrap(), NCPoly::var(1).scale(&c(0, 1, 3, 5)));
        assert_eq!(parse_nc("i").unwrap(), NCPoly::constant(ExactComplex::i()));
        assert_eq!(parse_nc("2i^2").unwrap(), NCPoly::constant(c(-4, 1, 0, 1)));
    }

    #[test]
    fn p_expressions() {
        let e = parse_p("p12 - p21").unwrap();
        assert_eq!(e.len(), 2);
        assert_eq!(e, PExpr::p(1, 2).sub(&PExpr::p(2, 1)));
        assert_eq!(parse_p("p(10,3)*p11").unwrap(), PExpr::p(10, 3).mul(&PExpr::p(1, 1)));
        assert!(matches!(parse_p("p123"), Err(Error::Parse { pos: 3, .. })));
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(parse_expr("v1 + p11"), Err(Error::MixedAlphabets));
        assert!(matches!(parse_nc("v1 + "), Err(Error::Parse { pos: 5, .. })));
        assert!(matches!(parse_nc("v1 # v2"), Err(Error::Parse { pos: 3, .. })));
        assert!(matches!(parse_nc("v0"), Err(Error::Parse { pos: 1, .. })));
        assert!(matches!(parse_nc("(v1"), Err(Error::Parse { pos: 3, .. })));
        assert!(matches!(parse_nc("v1)"), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!(parse_nc("1/0"), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!(parse_nc(""), Err(Error::Parse { pos: 0, .. })));
        assert!(matches!(parse_nc("v1^v2"), Err(Error::Parse { pos: 3, .. })));
    }

    #[test]
    fn points() {
        assert_eq!(parse_point("3/5+0i,0+4/5i").unwrap(), PointCoords::Exact(vec![c(3, 5, 0, 1), c(0, 1, 4, 5)]));
        assert_eq!(parse_point("-i, 1/2-1/3i").unwrap(), PointCoords::Exact(vec![c(0, 1, -1, 1), c(1, 2, -1, 3)]));
        match parse_point("0.6,0.8i").unwrap() {
            PointCoords::Approx(v) => {
                assert!((v[0].re - 0.6).abs() < 1e-15 && (v[1].im - 0.8).abs() < 1e-15);
            }
            other => panic!("expected approximate coordinates, got {:?}", other),
        }
        assert!(matches!(parse_point("1,v1"), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!(parse_point("1,2+"), Err(Error::Parse { pos: 4, .. })));
    }

    #[test]
    fn sphere_and_canonical_forms() {
        let f = parse_z(2, "z1^2*z1~ - (1/2)*z2~").unwrap();
        assert_eq!(f.to_string(), "z1^2*z1~ - (1/2)*z2~");
        assert_eq!(parse_z(2, "z3"), Err(Error::IndexOutOfRange { index: 3, n: 2 }));
        let a = Algebra::new(3).unwrap();
        let x = a.pi(&parse_nc("v1 + 2v2v3 - i").unwrap()).unwrap();
        assert_eq!(parse_crossed(3, &x.to_string()).unwrap(), x);
        assert_eq!(parse_crossed(3, "[even] 0 [odd] 0").unwrap(), CrossedElem::zero(3));
        assert_eq!(parse_crossed(2, "[even] z1 [odd] 0"), Err(Error::WrongWeight));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn print_parse_round_trip(seed in any::<u64>(), n in 1usize..=4) {
            let mut s = Sampler::new(seed);
            let p = s.nc_poly(n, 4, 4);
            let x = Algebra::new(n).unwrap().pi(&p).unwrap();
            prop_assert_eq!(parse_crossed(n, &x.to_string()).unwrap().to_string(), x.to_string());
            prop_assert_eq!(parse_nc(&p.to_string()).unwrap(), p);
            let e = s.p_expr(n, 3, 4);
            prop_assert_eq!(parse_p(&e.to_string()).unwrap(), e);
        }
    }
}
