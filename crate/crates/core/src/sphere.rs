//! Polynomial functions on the complex sphere `S^{n-1}_C`.
//!
//! A [`ZPoly`] is a commutative polynomial in `z_1..z_n` and their conjugates.
//! Normal forms are taken modulo `sum_i z_i conj(z_i) = 1`, rewriting the
//! leading monomial `z_1 conj(z_1)` into `1 - sum_{i>=2} z_i conj(z_i)`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::scalars::{ExactComplex, Scalar};
use crate::{Error, Result};

/// Exponent vector of a monomial `z^a conj(z)^b`.
///
/// Exponents are stored interleaved as `[a_1, b_1, a_2, b_2, ...]`, which is
/// also the variable priority `z_1 > conj(z_1) > z_2 > ...` of the
/// degree-lexicographic order used for [`Ord`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ZMonomial {
    exps: Vec<u32>,
}

impl ZMonomial {
    pub fn one(n: usize) -> Self {
        ZMonomial { exps: vec![0; 2 * n] }
    }

    /// Builds `z^a conj(z)^b`; panics if the lengths differ.
    pub fn new(a: &[u32], b: &[u32]) -> Self {
        assert_eq!(a.len(), b.len(), "exponent vectors must have equal length");
        let exps = a.iter().zip(b).flat_map(|(&x, &y)| [x, y]).collect();
        ZMonomial { exps }
    }

    /// `z_i` (1-based index).
    pub fn z(n: usize, i: usize) -> Self {
        let mut m = Self::one(n);
        m.exps[2 * (i - 1)] = 1;
        m
    }

    /// `conj(z_i)` (1-based index).
    pub fn zbar(n: usize, i: usize) -> Self {
        let mut m = Self::one(n);
        m.exps[2 * (i - 1) + 1] = 1;
        m
    }

    pub fn n(&self) -> usize {
        self.exps.len() / 2
    }

    /// Exponent of `z_i`, 0-based position.
    pub fn a(&self, pos: usize) -> u32 {
        self.exps[2 * pos]
    }

    /// Exponent of `conj(z_i)`, 0-based position.
    pub fn b(&self, pos: usize) -> u32 {
        self.exps[2 * pos + 1]
    }

    pub(crate) fn add_a(&mut self, pos: usize, k: u32) {
        self.exps[2 * pos] += k;
    }

    pub(crate) fn add_b(&mut self, pos: usize, k: u32) {
        self.exps[2 * pos + 1] += k;
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    /// T-weight `sum(a) - sum(b)`.
    pub fn weight(&self) -> i64 {
        self.exps.chunks(2).map(|p| p[0] as i64 - p[1] as i64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Contains the redex `z_1 conj(z_1)`.
    pub fn has_redex(&self) -> bool {
        self.exps[0] > 0 && self.exps[1] > 0
    }

    pub fn mul(&self, other: &ZMonomial) -> ZMonomial {
        assert_eq!(self.exps.len(), other.exps.len(), "monomials over different n");
        ZMonomial { exps: self.exps.iter().zip(&other.exps).map(|(x, y)| x + y).collect() }
    }

    /// Swaps `z_i` and `conj(z_i)` exponents.
    pub fn swap(&self) -> ZMonomial {
        let exps = self.exps.chunks(2).flat_map(|p| [p[1], p[0]]).collect();
        ZMonomial { exps }
    }

    pub fn eval<C: Scalar>(&self, z: &[C], zbar: &[C]) -> C {
        let mut acc = C::one();
        for pos in 0..self.n() {
            for _ in 0..self.a(pos) {
                acc = acc.mul_ref(&z[pos]);
            }
            for _ in 0..self.b(pos) {
                acc = acc.mul_ref(&zbar[pos]);
            }
        }
        acc
    }
}

impl Ord for ZMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for ZMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `z1^2*z1~*z3~`; the unit monomial prints as `1`.
impl fmt::Display for ZMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for pos in 0..self.n() {
            for (e, tilde) in [(self.a(pos), ""), (self.b(pos), "~")] {
                if e == 0 {
                    continue;
                }
                if !first {
                    f.write_str("*")?;
                }
                first = false;
                write!(f, "z{}{}", pos + 1, tilde)?;
                if e > 1 {
                    write!(f, "^{}", e)?;
                }
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

impl fmt::Debug for ZMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Commutative *-polynomial on the complex sphere. No zero coefficients are
/// ever stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ZPoly {
    n: usize,
    terms: BTreeMap<ZMonomial, ExactComplex>,
}

impl ZPoly {
    pub fn zero(n: usize) -> Self {
        ZPoly { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, ExactComplex::one())
    }

    pub fn constant(n: usize, c: ExactComplex) -> Self {
        Self::monomial(ZMonomial::one(n), c)
    }

    pub fn monomial(m: ZMonomial, c: ExactComplex) -> Self {
        let n = m.n();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        ZPoly { n, terms }
    }

    pub fn z(n: usize, i: usize) -> Self {
        Self::monomial(ZMonomial::z(n, i), ExactComplex::one())
    }

    pub fn zbar(n: usize, i: usize) -> Self {
        Self::monomial(ZMonomial::zbar(n, i), ExactComplex::one())
    }

    /// `sum_i z_i conj(z_i)`, the left side of the sphere relation.
    pub fn norm_form(n: usize) -> Self {
        let mut p = ZPoly::zero(n);
        for i in 1..=n {
            p.add_term(ZMonomial::z(n, i).mul(&ZMonomial::zbar(n, i)), &ExactComplex::one());
        }
        p
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (ZMonomial, ExactComplex)>) -> Self {
        let mut p = ZPoly::zero(n);
        for (m, c) in terms {
            assert_eq!(m.n(), n, "monomial over a different n");
            p.add_term(m, &c);
        }
        p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ZMonomial, &ExactComplex)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &ZMonomial) -> ExactComplex {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<(&ZMonomial, &ExactComplex)> {
        self.terms.iter().next_back()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(ZMonomial::degree).max()
    }

    pub fn add_term(&mut self, m: ZMonomial, c: &ExactComplex) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &ZPoly) -> ZPoly {
        assert_eq!(self.n, other.n, "polynomials over different n");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &ZPoly) -> ZPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> ZPoly {
        self.scale(&ExactComplex::from_int(-1))
    }

    pub fn scale(&self, c: &ExactComplex) -> ZPoly {
        if c.is_zero() {
            return ZPoly::zero(self.n);
        }
        ZPoly { n: self.n, terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect() }
    }

    /// Distributive product. The result is not reduced.
    pub fn mul(&self, other: &ZPoly) -> ZPoly {
        assert_eq!(self.n, other.n, "polynomials over different n");
        let mut out = ZPoly::zero(self.n);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), &(c1 * c2));
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> ZPoly {
        let mut acc = ZPoly::one(self.n);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// The involution: conjugate coefficients and swap `z_i <-> conj(z_i)`.
    pub fn star(&self) -> ZPoly {
        ZPoly { n: self.n, terms: self.terms.iter().map(|(m, c)| (m.swap(), c.conj())).collect() }
    }

    /// The linear automorphism induced by complex conjugation of points:
    /// swap `z_i <-> conj(z_i)`, keep coefficients.
    pub fn tau(&self) -> ZPoly {
        ZPoly { n: self.n, terms: self.terms.iter().map(|(m, c)| (m.swap(), c.clone())).collect() }
    }

    pub fn is_reduced(&self) -> bool {
        self.terms.keys().all(|m| !m.has_redex())
    }

    /// Normal form modulo the sphere relation.
    ///
    /// The largest remaining monomial is processed first; rewriting a redex
    /// only produces strictly smaller monomials, so every monomial is visited
    /// at most once.
    pub fn reduce(&self) -> ZPoly {
        if self.is_reduced() {
            return self.clone();
        }
        let n = self.n;
        let mut queue = self.terms.clone();
        let mut out = ZPoly::zero(n);
        while let Some((m, c)) = queue.pop_last() {
            if !m.has_redex() {
                out.terms.insert(m, c);
                continue;
            }
            // z1 z1~ m' -> m' - sum_{i>=2} z_i z_i~ m'
            let mut base = m.clone();
            base.exps[0] -= 1;
            base.exps[1] -= 1;
            let mut targets = vec![(base.clone(), c.clone())];
            for pos in 1..n {
                let mut t = base.clone();
                t.add_a(pos, 1);
                t.add_b(pos, 1);
                targets.push((t, -&c));
            }
            for (t, tc) in targets {
                let entry = queue.entry(t.clone()).or_default();
                *entry += &tc;
                if entry.is_zero() {
                    queue.remove(&t);
                }
            }
        }
        out
    }

    pub fn eval<C: Scalar>(&self, point: &[C]) -> Result<C> {
        if point.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: point.len() });
        }
        Ok(self.eval_unchecked(point))
    }

    pub(crate) fn eval_unchecked<C: Scalar>(&self, point: &[C]) -> C {
        let conj: Vec<C> = point.iter().map(Scalar::conj).collect();
        self.eval_with_conj(point, &conj)
    }

    /// Evaluation with the conjugate coordinates supplied by the caller.
    pub(crate) fn eval_with_conj<C: Scalar>(&self, point: &[C], conj: &[C]) -> C {
        let mut acc = C::zero();
        for (m, c) in &self.terms {
            acc = acc + C::from_exact(c) * m.eval(point, conj);
        }
        acc
    }

    /// Partition of the terms by T-weight.
    pub fn weight_split(&self) -> BTreeMap<i64, ZPoly> {
        let mut parts: BTreeMap<i64, ZPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            parts.entry(m.weight()).or_insert_with(|| ZPoly::zero(self.n)).terms.insert(m.clone(), c.clone());
        }
        parts
    }

    /// True if every term has the given T-weight (vacuously for zero).
    pub fn has_weight(&self, w: i64) -> bool {
        self.terms.keys().all(|m| m.weight() == w)
    }
}

impl fmt::Display for ZPoly {
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
            f.write_str(&format_term(&mag, &m.to_string(), m.is_one()))?;
        }
        Ok(())
    }
}

/// Formats `coeff * body`, with `body` already rendered. Integer coefficients
/// print bare, everything else is parenthesized.
pub(crate) fn format_term(c: &ExactComplex, body: &str, body_is_one: bool) -> String {
    if body_is_one {
        let s = c.to_string();
        return if c.is_real() || c.re.is_zero() { s } else { format!("({})", s) };
    }
    if c.is_one() {
        body.to_string()
    } else if c.is_real() && c.re.is_integer() {
        format!("{}*{}", c, body)
    } else {
        format!("({})*{}", c, body)
    }
}

impl fmt::Debug for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
