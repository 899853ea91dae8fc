//! The half-liberated sphere algebra.
//!
//! Elements are written as noncommutative polynomials in self-adjoint
//! generators `v_1..v_n` ([`NCPoly`]) and canonicalized through the faithful
//! crossed-product model `v_i -> z_i (x) tau` into pairs `(f0, f1)`
//! ([`CrossedElem`]). Two polynomials are equal in the algebra exactly when
//! their crossed-product images agree.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::scalars::ExactComplex;
use crate::sphere::{ZMonomial, ZPoly};
use crate::{Error, Result};

/// A word `v_{i_1} ... v_{i_k}` in the generators, with 1-based letters.
/// The empty word is the unit.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct NCWord(pub Vec<u32>);

impl NCWord {
    pub fn empty() -> Self {
        NCWord(Vec::new())
    }

    pub fn letter(i: u32) -> Self {
        NCWord(vec![i])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_even(&self) -> bool {
        self.0.len().is_multiple_of(2)
    }

    pub fn concat(&self, other: &NCWord) -> NCWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        NCWord(v)
    }

    pub fn reversed(&self) -> NCWord {
        NCWord(self.0.iter().rev().copied().collect())
    }

    /// All words of length exactly `len` over `1..=n`, in lexicographic order.
    pub fn all_of_length(n: usize, len: usize) -> Vec<NCWord> {
        let mut out = vec![NCWord::empty()];
        for _ in 0..len {
            out = out
                .into_iter()
                .flat_map(|w| {
                    (1..=n as u32).map(move |i| {
                        let mut v = w.0.clone();
                        v.push(i);
                        NCWord(v)
                    })
                })
                .collect();
        }
        out
    }
}

impl Ord for NCWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for NCWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for NCWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.0.iter().map(|i| format!("v{}", i)).collect();
        f.write_str(&parts.join("*"))
    }
}

impl fmt::Debug for NCWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Formal noncommutative polynomial in the generators.
///
/// This is syntax only: structurally different polynomials may be equal in the
/// algebra. Use [`Algebra::nc_equal`] to decide equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct NCPoly {
    terms: BTreeMap<NCWord, ExactComplex>,
}

impl NCPoly {
    pub fn zero() -> Self {
        NCPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(ExactComplex::one())
    }

    pub fn constant(c: ExactComplex) -> Self {
        Self::term(NCWord::empty(), c)
    }

    /// The generator `v_i`.
    pub fn var(i: u32) -> Self {
        Self::term(NCWord::letter(i), ExactComplex::one())
    }

    pub fn word(letters: &[u32]) -> Self {
        Self::term(NCWord(letters.to_vec()), ExactComplex::one())
    }

    pub fn term(w: NCWord, c: ExactComplex) -> Self {
        let mut p = NCPoly::zero();
        p.add_term(w, &c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (NCWord, ExactComplex)>) -> Self {
        let mut p = NCPoly::zero();
        for (w, c) in terms {
            p.add_term(w, &c);
        }
        p
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&NCWord, &ExactComplex)> {
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

    /// Longest word length; 0 for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(NCWord::len).max().unwrap_or(0)
    }

    pub fn max_index(&self) -> u32 {
        self.terms.keys().flat_map(|w| w.0.iter().copied()).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, w: NCWord, c: &ExactComplex) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(w.clone()).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn add(&self, other: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &NCPoly) -> NCPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> NCPoly {
        self.scale(&ExactComplex::from_int(-1))
    }

    pub fn scale(&self, c: &ExactComplex) -> NCPoly {
        NCPoly::from_terms(self.terms.iter().map(|(w, x)| (w.clone(), x * c)))
    }

    pub fn mul(&self, other: &NCPoly) -> NCPoly {
        let mut out = NCPoly::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                out.add_term(w1.concat(w2), &(c1 * c2));
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> NCPoly {
        let mut acc = NCPoly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Formal adjoint: generators are self-adjoint, so words reverse and
    /// coefficients conjugate.
    pub fn star(&self) -> NCPoly {
        NCPoly::from_terms(self.terms.iter().map(|(w, c)| (w.reversed(), c.conj())))
    }
}

impl fmt::Display for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (w, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.has_leading_minus();
            let mag = if negative { -c } else { c.clone() };
            match (idx, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            f.write_str(&crate::sphere::format_term(&mag, &w.to_string(), w.is_empty()))?;
        }
        Ok(())
    }
}

impl fmt::Debug for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `f0 (x) 1 + f1 (x) tau` in the crossed product `C(S^{n-1}_C) x| Z_2`.
///
/// Both components are reduced; `f0` has T-weight 0 and `f1` has T-weight 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CrossedElem {
    f0: ZPoly,
    f1: ZPoly,
}

impl CrossedElem {
    /// Reduces both components and checks their weights.
    pub fn new(f0: ZPoly, f1: ZPoly) -> Result<Self> {
        if f0.n() != f1.n() {
            return Err(Error::DimensionMismatch { expected: f0.n(), found: f1.n() });
        }
        let (f0, f1) = (f0.reduce(), f1.reduce());
        if !f0.has_weight(0) || !f1.has_weight(1) {
            return Err(Error::WrongWeight);
        }
        Ok(CrossedElem { f0, f1 })
    }

    /// Components already reduced with the right weights.
    pub(crate) fn from_reduced(f0: ZPoly, f1: ZPoly) -> Self {
        debug_assert!(f0.is_reduced() && f1.is_reduced());
        debug_assert!(f0.has_weight(0) && f1.has_weight(1));
        CrossedElem { f0, f1 }
    }

    pub fn zero(n: usize) -> Self {
        CrossedElem { f0: ZPoly::zero(n), f1: ZPoly::zero(n) }
    }

    pub fn one(n: usize) -> Self {
        CrossedElem { f0: ZPoly::one(n), f1: ZPoly::zero(n) }
    }

    pub fn even(f0: ZPoly) -> Result<Self> {
        let n = f0.n();
        Self::new(f0, ZPoly::zero(n))
    }

    pub fn odd(f1: ZPoly) -> Result<Self> {
        let n = f1.n();
        Self::new(ZPoly::zero(n), f1)
    }

    pub fn n(&self) -> usize {
        self.f0.n()
    }

    pub fn f0(&self) -> &ZPoly {
        &self.f0
    }

    pub fn f1(&self) -> &ZPoly {
        &self.f1
    }

    pub fn is_zero(&self) -> bool {
        self.f0.is_zero() && self.f1.is_zero()
    }

    pub fn is_even(&self) -> bool {
        self.f1.is_zero()
    }

    pub fn is_odd(&self) -> bool {
        self.f0.is_zero()
    }

    /// Largest monomial degree over both components.
    pub fn degree(&self) -> Option<u32> {
        self.f0.degree().max(self.f1.degree())
    }

    pub fn add(&self, other: &CrossedElem) -> CrossedElem {
        CrossedElem { f0: self.f0.add(&other.f0), f1: self.f1.add(&other.f1) }
    }

    pub fn sub(&self, other: &CrossedElem) -> CrossedElem {
        CrossedElem { f0: self.f0.sub(&other.f0), f1: self.f1.sub(&other.f1) }
    }

    pub fn neg(&self) -> CrossedElem {
        CrossedElem { f0: self.f0.neg(), f1: self.f1.neg() }
    }

    pub fn scale(&self, c: &ExactComplex) -> CrossedElem {
        CrossedElem { f0: self.f0.scale(c), f1: self.f1.scale(c) }
    }

    /// Twisted product
    /// `(a0 + a1 tau)(b0 + b1 tau) = (a0 b0 + a1 tau(b1)) + (a0 b1 + a1 tau(b0)) tau`.
    pub fn mul(&self, other: &CrossedElem) -> CrossedElem {
        let f0 = self.f0.mul(&other.f0).add(&self.f1.mul(&other.f1.tau()));
        let f1 = self.f0.mul(&other.f1).add(&self.f1.mul(&other.f0.tau()));
        CrossedElem { f0: f0.reduce(), f1: f1.reduce() }
    }

    /// `(f0 + f1 tau)^* = f0^* + tau(f1^*) tau`.
    pub fn star(&self) -> CrossedElem {
        CrossedElem { f0: self.f0.star().reduce(), f1: self.f1.star().tau().reduce() }
    }

    /// The sign automorphism `v_i -> -v_i`, i.e. `(f0, -f1)`.
    pub fn nu(&self) -> CrossedElem {
        CrossedElem { f0: self.f0.clone(), f1: self.f1.neg() }
    }

    /// Even and odd components.
    pub fn grade(&self) -> (CrossedElem, CrossedElem) {
        let n = self.n();
        (
            CrossedElem { f0: self.f0.clone(), f1: ZPoly::zero(n) },
            CrossedElem { f0: ZPoly::zero(n), f1: self.f1.clone() },
        )
    }

    /// `sum_i v_i x v_i`, in the closed form `(tau(f0), s tau(f1))` with
    /// `s = sum_i z_i^2`.
    pub fn gamma(&self) -> CrossedElem {
        let n = self.n();
        let mut s = ZPoly::zero(n);
        for i in 1..=n {
            s = s.add(&ZPoly::z(n, i).pow(2));
        }
        CrossedElem { f0: self.f0.tau().reduce(), f1: s.mul(&self.f1.tau()).reduce() }
    }

    /// Coordinates in the reduced monomial basis. Even and odd monomials have
    /// different T-weights, so one map holds both components.
    pub fn to_sparse(&self) -> BTreeMap<ZMonomial, ExactComplex> {
        self.f0.terms().chain(self.f1.terms()).map(|(m, c)| (m.clone(), c.clone())).collect()
    }

    pub fn from_sparse(n: usize, v: &BTreeMap<ZMonomial, ExactComplex>) -> CrossedElem {
        let mut f0 = ZPoly::zero(n);
        let mut f1 = ZPoly::zero(n);
        for (m, c) in v {
            match m.weight() {
                0 => f0.add_term(m.clone(), c),
                1 => f1.add_term(m.clone(), c),
                w => panic!("monomial {} of weight {} is not a crossed-product coordinate", m, w),
            }
        }
        CrossedElem::from_reduced(f0, f1)
    }
}

/// `[even] <f0> [odd] <f1>`
impl fmt::Display for CrossedElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[even] {} [odd] {}", self.f0, self.f1)
    }
}

impl fmt::Debug for CrossedElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The algebra `C(S^{n-1}_{R,*})` for a fixed `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Algebra {
    n: usize,
}

impl Algebra {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroDimension);
        }
        Ok(Algebra { n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn check_word(&self, w: &NCWord) -> Result<()> {
        match w.0.iter().find(|&&i| i == 0 || i as usize > self.n) {
            Some(&index) => Err(Error::IndexOutOfRange { index, n: self.n }),
            None => Ok(()),
        }
    }

    pub fn check(&self, p: &NCPoly) -> Result<()> {
        p.terms().try_for_each(|(w, _)| self.check_word(w))
    }

    /// Image of a word: the alternating monomial
    /// `z_{i1} conj(z_{i2}) z_{i3} ...`, placed in the even or odd slot by
    /// parity of the length.
    pub fn pi_word(&self, w: &NCWord) -> Result<CrossedElem> {
        self.check_word(w)?;
        Ok(self.pi_word_unchecked(w))
    }

    pub(crate) fn pi_word_unchecked(&self, w: &NCWord) -> CrossedElem {
        let n = self.n;
        let mut m = ZMonomial::one(n);
        for (t, &i) in w.0.iter().enumerate() {
            let pos = i as usize - 1;
            if t % 2 == 0 {
                m.add_a(pos, 1);
            } else {
                m.add_b(pos, 1);
            }
        }
        let f = ZPoly::monomial(m, ExactComplex::one()).reduce();
        if w.is_even() {
            CrossedElem { f0: f, f1: ZPoly::zero(n) }
        } else {
            CrossedElem { f0: ZPoly::zero(n), f1: f }
        }
    }

    /// Canonical form of `p`.
    pub fn pi(&self, p: &NCPoly) -> Result<CrossedElem> {
        self.check(p)?;
        Ok(self.pi_unchecked(p))
    }

    pub(crate) fn pi_unchecked(&self, p: &NCPoly) -> CrossedElem {
        let mut out = CrossedElem::zero(self.n);
        for (w, c) in p.terms() {
            out = out.add(&self.pi_word_unchecked(w).scale(c));
        }
        out
    }

    /// `pi(v_i)`.
    pub fn generator(&self, i: usize) -> CrossedElem {
        CrossedElem { f0: ZPoly::zero(self.n), f1: ZPoly::z(self.n, i) }
    }

    /// Equality in the algebra, decided through the faithful model.
    pub fn nc_equal(&self, p: &NCPoly, q: &NCPoly) -> Result<bool> {
        Ok(self.pi(p)? == self.pi(q)?)
    }

    /// A noncommutative representative of `x`.
    ///
    /// An even monomial `z_{i1}..z_{im} conj(z_{j1})..conj(z_{jm})` (indices
    /// sorted) lifts to `v_{i1} v_{j1} ... v_{im} v_{jm}`. An odd monomial
    /// sets aside the lowest-index `z` whose exponent exceeds its conjugate's,
    /// lifts the weight-0 remainder and appends that letter.
    pub fn nc_lift(&self, x: &CrossedElem) -> NCPoly {
        let mut out = NCPoly::zero();
        for (m, c) in x.f0.terms().chain(x.f1.terms()) {
            out.add_term(lift_monomial(m), c);
        }
        out
    }
}

fn lift_monomial(m: &ZMonomial) -> NCWord {
    let n = m.n();
    let mut a: Vec<u32> = (0..n).map(|p| m.a(p)).collect();
    let b: Vec<u32> = (0..n).map(|p| m.b(p)).collect();
    let surplus = if m.weight() == 1 {
        let pos = (0..n).find(|&p| a[p] > b[p]).expect("weight-1 monomial has a surplus letter");
        a[pos] -= 1;
        Some(pos as u32 + 1)
    } else {
        None
    };
    let zs = (0..n).flat_map(|p| std::iter::repeat_n(p as u32 + 1, a[p] as usize));
    let zbs = (0..n).flat_map(|p| std::iter::repeat_n(p as u32 + 1, b[p] as usize));
    let mut letters: Vec<u32> = zs.zip(zbs).flat_map(|(i, j)| [i, j]).collect();
    letters.extend(surplus);
    NCWord(letters)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn v(i: u32) -> NCPoly {
        NCPoly::var(i)
    }

    fn w(l: &[u32]) -> NCPoly {
        NCPoly::word(l)
    }

    fn zz(n: usize, i: usize, j: usize) -> ZPoly {
        ZPoly::z(n, i).mul(&ZPoly::zbar(n, j))
    }

    #[test]
    fn cp_mul_examples() {
        let n = 3;
        let a = Algebra::new(n).unwrap();
        let g1 = a.generator(1);
        let sq = g1.mul(&g1);
        assert_eq!(sq, CrossedElem::even(zz(n, 1, 1)).unwrap());
        let x = a.pi(&v(2).add(&w(&[1, 3]))).unwrap();
        assert_eq!(CrossedElem::one(n).mul(&x), x);
        assert_eq!(g1.mul(&a.generator(2)), CrossedElem::even(zz(n, 1, 2)).unwrap());
    }

    #[test]
    fn cp_star_examples() {
        let n = 2;
        let a = Algebra::new(n).unwrap();
        for i in 1..=n {
            assert_eq!(a.generator(i).star(), a.generator(i));
        }
        let f = ZPoly::z(n, 1).mul(&ZPoly::zbar(n, 2)).scale(&ExactComplex::i());
        assert_eq!(CrossedElem::even(f.clone()).unwrap().star(), CrossedElem::even(f.star()).unwrap());
        assert_eq!(CrossedElem::even(zz(n, 1, 2)).unwrap().star(), CrossedElem::even(zz(n, 2, 1)).unwrap());
    }

    #[test]
    fn pi_word_examples() {
        let a = Algebra::new(3).unwrap();
        assert_eq!(a.pi_word(&NCWord::letter(2)).unwrap(), a.generator(2));
        assert_eq!(a.pi_word(&NCWord(vec![1, 2])).unwrap(), CrossedElem::even(zz(3, 1, 2)).unwrap());
        assert_eq!(a.pi_word(&NCWord::empty()).unwrap(), CrossedElem::one(3));
        assert_eq!(a.pi_word(&NCWord(vec![4])), Err(Error::IndexOutOfRange { index: 4, n: 3 }));
    }

    #[test]
    fn pi_examples() {
        for n in 1..=4u32 {
            let a = Algebra::new(n as usize).unwrap();
            let s = (1..=n).fold(NCPoly::zero(), |acc, i| acc.add(&w(&[i, i])));
            assert_eq!(a.pi(&s).unwrap(), CrossedElem::one(n as usize));
        }
        let a = Algebra::new(3).unwrap();
        assert!(a.pi(&w(&[1, 2, 3]).sub(&w(&[3, 2, 1]))).unwrap().is_zero());
        assert!(a.pi(&v(1).sub(&v(1))).unwrap().is_zero());
    }

    #[test]
    fn nc_equal_examples() {
        let a = Algebra::new(3).unwrap();
        assert!(a.nc_equal(&w(&[1, 2, 3]), &w(&[3, 2, 1])).unwrap());
        assert!(!a.nc_equal(&w(&[1, 2]), &w(&[2, 1])).unwrap());
        let s = (1..=3).fold(NCPoly::zero(), |acc, i| acc.add(&w(&[i, i])));
        assert!(a.nc_equal(&NCPoly::one(), &s).unwrap());
    }

    #[test]
    fn grade_examples() {
        let n = 2;
        let a = Algebra::new(n).unwrap();
        let (e, o) = a.pi(&v(1).add(&w(&[1, 2]))).unwrap().grade();
        assert_eq!(e, CrossedElem::even(zz(n, 1, 2)).unwrap());
        assert_eq!(o, a.generator(1));
        let (e, _) = a.pi(&w(&[1, 2, 2])).unwrap().grade();
        assert!(e.is_zero());
        let (e, o) = CrossedElem::one(n).grade();
        assert_eq!((e, o), (CrossedElem::one(n), CrossedElem::zero(n)));
    }

    #[test]
    fn nu_examples() {
        let a = Algebra::new(3).unwrap();
        assert_eq!(a.generator(2).nu(), a.generator(2).neg());
        let x = a.pi(&w(&[1, 2])).unwrap();
        assert_eq!(x.nu(), x);
        let y = a.pi(&v(1).add(&w(&[2, 3]))).unwrap();
        assert_eq!(y.nu().nu(), y);
    }

    /// The defining sum `sum_i v_i x v_i`, computed with the twisted product.
    fn gamma_by_sum(a: &Algebra, x: &CrossedElem) -> CrossedElem {
        (1..=a.n()).fold(CrossedElem::zero(a.n()), |acc, i| {
            let g = a.generator(i);
            acc.add(&g.mul(x).mul(&g))
        })
    }

    #[test]
    fn gamma_examples() {
        let a = Algebra::new(3).unwrap();
        assert_eq!(a.pi(&w(&[1, 2])).unwrap().gamma(), a.pi(&w(&[2, 1])).unwrap());
        assert_eq!(CrossedElem::one(3).gamma(), CrossedElem::one(3));
        let sum = (1..=3).fold(NCPoly::zero(), |acc, i| acc.add(&w(&[i, 1, i])));
        assert_eq!(a.generator(1).gamma(), a.pi(&sum).unwrap());
    }

    #[test]
    fn nc_lift_examples() {
        let a = Algebra::new(3).unwrap();
        assert_eq!(a.nc_lift(&CrossedElem::even(zz(3, 1, 2)).unwrap()), w(&[1, 2]));
        assert_eq!(a.nc_lift(&a.generator(1)), v(1));
        // z1^2 z2~ : surplus letter 1, remainder z1 z2~
        let m = ZPoly::z(3, 1).pow(2).mul(&ZPoly::zbar(3, 2));
        assert_eq!(a.nc_lift(&CrossedElem::odd(m).unwrap()), w(&[1, 2, 1]));
    }

    #[test]
    fn display_canonical_form() {
        let a = Algebra::new(2).unwrap();
        let x = a.pi(&v(1).add(&w(&[1, 2])).scale(&ExactComplex::from_ratios(3, 5, 0, 1))).unwrap();
        assert_eq!(x.to_string(), "[even] (3/5)*z1*z2~ [odd] (3/5)*z1");
        assert_eq!(CrossedElem::zero(2).to_string(), "[even] 0 [odd] 0");
    }

    // --- properties ---

    fn coeff() -> impl Strategy<Value = ExactComplex> {
        (-3i64..=3, 1i64..=3, -3i64..=3).prop_map(|(a, b, c)| ExactComplex::from_ratios(a, b, c, 2))
    }

    fn nc_poly(n: u32, max_len: usize) -> impl Strategy<Value = NCPoly> {
        proptest::collection::vec((proptest::collection::vec(1..=n, 0..=max_len), coeff()), 0..4)
            .prop_map(|ts| NCPoly::from_terms(ts.into_iter().map(|(l, c)| (NCWord(l), c))))
    }

    fn alg_and_pair() -> impl Strategy<Value = (u32, NCPoly, NCPoly)> {
        (1u32..=4).prop_flat_map(|n| (Just(n), nc_poly(n, 3), nc_poly(n, 3)))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn pi_is_star_homomorphism((n, p, q) in alg_and_pair()) {
            let a = Algebra::new(n as usize).unwrap();
            let (pp, pq) = (a.pi(&p).unwrap(), a.pi(&q).unwrap());
            prop_assert_eq!(a.pi(&p.mul(&q)).unwrap(), pp.mul(&pq));
            prop_assert_eq!(a.pi(&p.star()).unwrap(), pp.star());
            prop_assert_eq!(a.pi(&p.add(&q)).unwrap(), pp.add(&pq));
        }

        #[test]
        fn crossed_product_is_associative((n, p, q) in alg_and_pair(), r in nc_poly(2, 2)) {
            let a = Algebra::new(n as usize).unwrap();
            let r = NCPoly::from_terms(r.terms().map(|(w, c)| {
                (NCWord(w.0.iter().map(|&i| (i - 1) % n + 1).collect()), c.clone())
            }));
            let (x, y, z) = (a.pi(&p).unwrap(), a.pi(&q).unwrap(), a.pi(&r).unwrap());
            prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
            prop_assert_eq!(x.mul(&y).star(), y.star().mul(&x.star()));
        }

        #[test]
        fn even_part_commutes((n, p, q) in alg_and_pair()) {
            let a = Algebra::new(n as usize).unwrap();
            let x = a.pi(&p).unwrap().grade().0;
            let y = a.pi(&q).unwrap().grade().0;
            prop_assert_eq!(x.mul(&y), y.mul(&x));
        }

        #[test]
        fn gamma_properties((n, p, q) in alg_and_pair()) {
            let a = Algebra::new(n as usize).unwrap();
            let x = a.pi(&p).unwrap();
            prop_assert_eq!(x.gamma(), gamma_by_sum(&a, &x));
            let (e, o) = x.grade();
            prop_assert_eq!(e.gamma().gamma(), e.clone());
            prop_assert!(e.gamma().is_even() && o.gamma().is_odd());
            let y = a.pi(&q).unwrap().grade().0;
            prop_assert_eq!(e.mul(&y).gamma(), e.gamma().mul(&y.gamma()));
            for i in 1..=a.n() {
                let g = a.generator(i);
                prop_assert_eq!(g.mul(&e), e.gamma().mul(&g));
            }
        }

        #[test]
        fn nu_is_star_automorphism((n, p, q) in alg_and_pair()) {
            let a = Algebra::new(n as usize).unwrap();
            let (x, y) = (a.pi(&p).unwrap(), a.pi(&q).unwrap());
            prop_assert_eq!(x.mul(&y).nu(), x.nu().mul(&y.nu()));
            prop_assert_eq!(x.star().nu(), x.nu().star());
        }

        #[test]
        fn lift_round_trips((n, p, _q) in alg_and_pair()) {
            let a = Algebra::new(n as usize).unwrap();
            let x = a.pi(&p).unwrap();
            prop_assert_eq!(a.pi(&a.nc_lift(&x)).unwrap(), x);
        }
    }

    #[test]
    fn half_commutation_all_triples() {
        for n in 1..=4u32 {
            let a = Algebra::new(n as usize).unwrap();
            for i in 1..=n {
                for j in 1..=n {
                    for k in 1..=n {
                        assert!(a.nc_equal(&w(&[i, j, k]), &w(&[k, j, i])).unwrap());
                    }
                }
            }
        }
    }
}
