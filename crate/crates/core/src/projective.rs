//! Polynomials in the projective coordinates `p_ij` and the isomorphism
//! `Phi: p_ij -> v_i v_j` onto the even part.

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::{CrossedElem, NCPoly, NCWord};
use crate::scalars::ExactComplex;
use crate::sphere::{format_term, ZMonomial, ZPoly};
use crate::{Error, Result};

/// A commutative monomial `p_{i1 j1} ... p_{im jm}`, stored sorted.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct PMonomial(Vec<(u32, u32)>);

impl PMonomial {
    pub fn one() -> Self {
        PMonomial(Vec::new())
    }

    pub fn new(mut pairs: Vec<(u32, u32)>) -> Self {
        pairs.sort_unstable();
        PMonomial(pairs)
    }

    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &PMonomial) -> PMonomial {
        PMonomial::new(self.0.iter().chain(&other.0).copied().collect())
    }

    pub fn transpose(&self) -> PMonomial {
        PMonomial::new(self.0.iter().map(|&(i, j)| (j, i)).collect())
    }

    /// All monomials with `m` factors over indices `1..=n`.
    pub fn all_of_length(n: usize, m: usize) -> Vec<PMonomial> {
        let pairs: Vec<(u32, u32)> = (1..=n as u32).flat_map(|i| (1..=n as u32).map(move |j| (i, j))).collect();
        let mut out = vec![Vec::new()];
        for _ in 0..m {
            let mut next = Vec::new();
            for seq in &out {
                let start = seq.last().map_or(0, |last| pairs.iter().position(|p| p == last).unwrap());
                for p in &pairs[start..] {
                    let mut s: Vec<(u32, u32)> = seq.clone();
                    s.push(*p);
                    next.push(s);
                }
            }
            out = next;
        }
        out.into_iter().map(PMonomial).collect()
    }
}

impl fmt::Display for PMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|&(i, j)| if i < 10 && j < 10 { format!("p{}{}", i, j) } else { format!("p({},{})", i, j) })
            .collect();
        f.write_str(&parts.join("*"))
    }
}

/// Polynomial in the commuting projective coordinates `p_ij`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct PExpr {
    terms: BTreeMap<PMonomial, ExactComplex>,
}

impl PExpr {
    pub fn zero() -> Self {
        PExpr::default()
    }

    pub fn one() -> Self {
        PExpr::constant(ExactComplex::one())
    }

    pub fn constant(c: ExactComplex) -> Self {
        PExpr::term(PMonomial::one(), c)
    }

    pub fn p(i: u32, j: u32) -> Self {
        PExpr::term(PMonomial::new(vec![(i, j)]), ExactComplex::one())
    }

    pub fn term(m: PMonomial, c: ExactComplex) -> Self {
        PExpr::from_terms([(m, c)])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (PMonomial, ExactComplex)>) -> Self {
        let mut out = PExpr::zero();
        for (m, c) in terms {
            out.add_term(m, &c);
        }
        out
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&PMonomial, &ExactComplex)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest number of factors in a monomial.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(PMonomial::len).max().unwrap_or(0)
    }

    pub fn max_index(&self) -> u32 {
        self.terms.keys().flat_map(|m| m.0.iter().map(|&(i, j)| i.max(j))).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, m: PMonomial, c: &ExactComplex) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m.clone()).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, other: &PExpr) -> PExpr {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &PExpr) -> PExpr {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> PExpr {
        self.scale(&ExactComplex::from_int(-1))
    }

    pub fn scale(&self, c: &ExactComplex) -> PExpr {
        PExpr::from_terms(self.terms.iter().map(|(m, x)| (m.clone(), x * c)))
    }

    pub fn mul(&self, other: &PExpr) -> PExpr {
        let mut out = PExpr::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), &(c1 * c2));
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> PExpr {
        let mut acc = PExpr::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Involution: `p_ij^* = p_ji`, coefficients conjugated.
    pub fn star(&self) -> PExpr {
        PExpr::from_terms(self.terms.iter().map(|(m, c)| (m.transpose(), c.conj())))
    }

    fn check(&self, n: usize) -> Result<()> {
        let k = self.max_index();
        if self.terms.keys().any(|m| m.0.iter().any(|&(i, j)| i == 0 || j == 0)) {
            return Err(Error::IndexOutOfRange { index: 0, n });
        }
        if k as usize > n {
            return Err(Error::IndexOutOfRange { index: k, n });
        }
        Ok(())
    }
}

impl fmt::Display for PExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.has_leading_minus();
            let mag = if negative { -c } else { c.clone() };
            match (idx, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            f.write_str(&format_term(&mag, &m.to_string(), m.is_empty()))?;
        }
        Ok(())
    }
}

impl fmt::Debug for PExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Substitutes `p_ij -> z_i conj(z_j)` and reduces; the result has weight 0.
pub fn p_to_model(n: usize, e: &PExpr) -> Result<ZPoly> {
    e.check(n)?;
    let mut out = ZPoly::zero(n);
    for (m, c) in &e.terms {
        let mut mono = ZMonomial::one(n);
        for &(i, j) in &m.0 {
            mono = mono.mul(&ZMonomial::z(n, i as usize)).mul(&ZMonomial::zbar(n, j as usize));
        }
        out.add_term(mono, c);
    }
    Ok(out.reduce())
}

/// Reads a weight-0 polynomial back as a `PExpr`, pairing the sorted `z`
/// letters with the sorted `conj(z)` letters.
pub fn from_model(f: &ZPoly) -> Result<PExpr> {
    let n = f.n();
    let mut out = PExpr::zero();
    for (m, c) in f.terms() {
        if m.weight() != 0 {
            return Err(Error::WrongWeight);
        }
        let mut zs = Vec::new();
        let mut zbs = Vec::new();
        for pos in 0..n {
            zs.extend(std::iter::repeat_n(pos as u32 + 1, m.a(pos) as usize));
            zbs.extend(std::iter::repeat_n(pos as u32 + 1, m.b(pos) as usize));
        }
        out.add_term(PMonomial::new(zs.into_iter().zip(zbs).collect()), c);
    }
    Ok(out)
}

/// One named relation and whether it holds in the model.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationCheck {
    pub name: String,
    pub pass: bool,
}

/// Outcome of checking `p = p^* = p^2`, `tr p = 1` in the model.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectorReport {
    pub n: usize,
    pub checks: Vec<RelationCheck>,
}

impl ProjectorReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

pub fn check_projector_relations(n: usize) -> Result<ProjectorReport> {
    if n == 0 {
        return Err(Error::ZeroDimension);
    }
    let model = |e: &PExpr| p_to_model(n, e).expect("indices in range");
    let idx = 1..=n as u32;
    let mut adjoint = true;
    let mut idempotent = true;
    for i in idx.clone() {
        for j in idx.clone() {
            let pij = model(&PExpr::p(i, j));
            adjoint &= pij.star() == model(&PExpr::p(j, i));
            let sq = idx.clone().fold(PExpr::zero(), |acc, k| acc.add(&PExpr::p(i, k).mul(&PExpr::p(k, j))));
            idempotent &= model(&sq) == pij;
        }
    }
    let trace = idx.fold(PExpr::zero(), |acc, i| acc.add(&PExpr::p(i, i)));
    let checks = vec![
        RelationCheck { name: "adjoint".into(), pass: adjoint },
        RelationCheck { name: "idempotent".into(), pass: idempotent },
        RelationCheck { name: "trace".into(), pass: model(&trace) == ZPoly::one(n) },
    ];
    Ok(ProjectorReport { n, checks })
}

/// `p_{i1 j1} ... p_{im jm} -> v_{i1} v_{j1} ... v_{im} v_{jm}`.
pub fn phi(e: &PExpr) -> NCPoly {
    NCPoly::from_terms(
        e.terms.iter().map(|(m, c)| (NCWord(m.0.iter().flat_map(|&(i, j)| [i, j]).collect()), c.clone())),
    )
}

/// Inverse of `Phi` on the model: the even part of an even element.
pub fn phi_inv(x: &CrossedElem) -> Result<ZPoly> {
    if !x.f1().is_zero() {
        return Err(Error::NotEven);
    }
    Ok(x.f0().clone())
}

/// Complex conjugation on projective space: `p_ij -> p_ji`.
pub fn tau_p(e: &PExpr) -> PExpr {
    PExpr::from_terms(e.terms.iter().map(|(m, c)| (m.transpose(), c.clone())))
}

/// Generators of the ideal of the quotient corresponding to `gens`.
pub fn transport_ideal(gens: &[PExpr]) -> Vec<NCPoly> {
    gens.iter().map(phi).collect()
}
