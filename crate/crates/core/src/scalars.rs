//! Gaussian-rational scalars and a floating-point companion type.
//!
//! [`ExactComplex`] is the coefficient field for every polynomial ring in the
//! crate. [`ApproxComplex`] is only used when a user supplies floating-point
//! coordinates; comparisons on it go through a [`Tolerance`].

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

/// Binary64 complex number used in approximate mode.
pub type ApproxComplex = Complex64;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Exact square root of a nonnegative rational, when it exists.
pub fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    if &(&n * &n) == q.numer() && &(&d * &d) == q.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

/// Complex number with rational real and imaginary parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ExactComplex {
    pub re: Rational,
    pub im: Rational,
}

impl ExactComplex {
    pub fn new(re: Rational, im: Rational) -> Self {
        ExactComplex { re, im }
    }

    pub fn from_rational(re: Rational) -> Self {
        ExactComplex { re, im: Rational::zero() }
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(v)))
    }

    /// `num/den + (inum/iden) i`, for tests and literals.
    pub fn from_ratios(num: i64, den: i64, inum: i64, iden: i64) -> Self {
        ExactComplex { re: rat(num, den), im: rat(inum, iden) }
    }

    pub fn i() -> Self {
        ExactComplex { re: Rational::zero(), im: Rational::one() }
    }

    pub fn zero() -> Self {
        ExactComplex::default()
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        ExactComplex { re: self.re.clone(), im: -&self.im }
    }

    pub fn modulus_squared(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let m = self.modulus_squared();
        Some(ExactComplex { re: &self.re / &m, im: -&self.im / &m })
    }

    pub fn scale(&self, q: &Rational) -> Self {
        ExactComplex { re: &self.re * q, im: &self.im * q }
    }

    pub fn to_approx(&self) -> ApproxComplex {
        Complex64::new(rational_to_f64(&self.re), rational_to_f64(&self.im))
    }

    /// True when the real part is strictly negative, or the number is a
    /// negative multiple of `i`. Used by printers to pull a leading minus out.
    pub fn has_leading_minus(&self) -> bool {
        if self.re.is_zero() {
            self.im.is_negative()
        } else {
            self.re.is_negative() && self.im.is_zero()
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = ExactComplex::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

pub fn rational_to_f64(q: &Rational) -> f64 {
    q.to_f64().unwrap_or_else(|| {
        // numerator or denominator too large for a direct conversion
        let n = q.numer().to_f64().unwrap_or(f64::NAN);
        let d = q.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

fn fmt_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

fn fmt_imag(q: &Rational) -> String {
    if q.is_one() {
        "i".to_string()
    } else if (-q).is_one() {
        "-i".to_string()
    } else {
        format!("{}i", fmt_rational(q))
    }
}

/// Scalar literal syntax: `3/5`, `-2`, `i`, `4/5i`, `3/5+4/5i`.
impl fmt::Display for ExactComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", fmt_rational(&self.re)),
            (true, false) => write!(f, "{}", fmt_imag(&self.im)),
            (false, false) => {
                let im = fmt_imag(&self.im);
                if im.starts_with('-') {
                    write!(f, "{}{}", fmt_rational(&self.re), im)
                } else {
                    write!(f, "{}+{}", fmt_rational(&self.re), im)
                }
            }
        }
    }
}

impl From<i64> for ExactComplex {
    fn from(v: i64) -> Self {
        ExactComplex::from_int(v)
    }
}

impl From<Rational> for ExactComplex {
    fn from(q: Rational) -> Self {
        ExactComplex::from_rational(q)
    }
}

impl<'a> Add<&'a ExactComplex> for &'a ExactComplex {
    type Output = ExactComplex;
    fn add(self, rhs: &ExactComplex) -> ExactComplex {
        ExactComplex { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl<'a> Sub<&'a ExactComplex> for &'a ExactComplex {
    type Output = ExactComplex;
    fn sub(self, rhs: &ExactComplex) -> ExactComplex {
        ExactComplex { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl<'a> Mul<&'a ExactComplex> for &'a ExactComplex {
    type Output = ExactComplex;
    fn mul(self, rhs: &ExactComplex) -> ExactComplex {
        ExactComplex { re: &self.re * &rhs.re - &self.im * &rhs.im, im: &self.re * &rhs.im + &self.im * &rhs.re }
    }
}

impl<'a> Div<&'a ExactComplex> for &'a ExactComplex {
    type Output = ExactComplex;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &ExactComplex) -> ExactComplex {
        let inv = rhs.inv().expect("division by zero");
        self * &inv
    }
}

impl Neg for &ExactComplex {
    type Output = ExactComplex;
    fn neg(self) -> ExactComplex {
        ExactComplex { re: -&self.re, im: -&self.im }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for ExactComplex {
            type Output = ExactComplex;
            fn $m(self, rhs: ExactComplex) -> ExactComplex {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for ExactComplex {
    type Output = ExactComplex;
    fn neg(self) -> ExactComplex {
        -&self
    }
}

impl AddAssign<&ExactComplex> for ExactComplex {
    fn add_assign(&mut self, rhs: &ExactComplex) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&ExactComplex> for ExactComplex {
    fn sub_assign(&mut self, rhs: &ExactComplex) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&ExactComplex> for ExactComplex {
    fn mul_assign(&mut self, rhs: &ExactComplex) {
        *self = &*self * rhs;
    }
}

impl Sum for ExactComplex {
    fn sum<I: Iterator<Item = ExactComplex>>(iter: I) -> Self {
        iter.fold(ExactComplex::zero(), |mut acc, x| {
            acc += &x;
            acc
        })
    }
}

/// Relative tolerance policy for approximate mode:
/// `|a - b| <= eps * max(1, |a|, |b|)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerance {
    pub eps: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance { eps: 1e-9 }
    }
}

impl Tolerance {
    pub fn new(eps: f64) -> Self {
        Tolerance { eps }
    }

    pub fn approx_eq(&self, a: ApproxComplex, b: ApproxComplex) -> bool {
        let scale = 1f64.max(a.norm()).max(b.norm());
        (a - b).norm() <= self.eps * scale
    }
}

/// Coefficient domains that points, matrices and evaluations can live in.
///
/// Exact scalars ignore the tolerance; approximate ones compare through it.
pub trait Scalar:
    Clone
    + fmt::Debug
    + PartialEq
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
{
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_exact(c: &ExactComplex) -> Self;
    fn conj(&self) -> Self;
    fn inv(&self) -> Self;
    fn to_approx(&self) -> ApproxComplex;
    fn close_to(&self, other: &Self, tol: Tolerance) -> bool;

    fn near_zero(&self, tol: Tolerance) -> bool {
        self.close_to(&Self::zero(), tol)
    }

    /// Imaginary part negligible.
    fn real_within(&self, tol: Tolerance) -> bool {
        self.close_to(&self.conj(), tol)
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self.clone() * other.clone()
    }
}

impl Scalar for ExactComplex {
    const EXACT: bool = true;

    fn zero() -> Self {
        ExactComplex::zero()
    }
    fn one() -> Self {
        ExactComplex::one()
    }
    fn from_exact(c: &ExactComplex) -> Self {
        c.clone()
    }
    fn conj(&self) -> Self {
        ExactComplex::conj(self)
    }
    fn inv(&self) -> Self {
        ExactComplex::inv(self).expect("inverse of zero")
    }
    fn to_approx(&self) -> ApproxComplex {
        ExactComplex::to_approx(self)
    }
    fn close_to(&self, other: &Self, _tol: Tolerance) -> bool {
        self == other
    }
    fn near_zero(&self, _tol: Tolerance) -> bool {
        self.is_zero()
    }
    fn real_within(&self, _tol: Tolerance) -> bool {
        self.is_real()
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
}

impl Scalar for ApproxComplex {
    const EXACT: bool = false;

    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn from_exact(c: &ExactComplex) -> Self {
        c.to_approx()
    }
    fn conj(&self) -> Self {
        Complex64::conj(self)
    }
    fn inv(&self) -> Self {
        Complex64::inv(self)
    }
    fn to_approx(&self) -> ApproxComplex {
        *self
    }
    fn close_to(&self, other: &Self, tol: Tolerance) -> bool {
        tol.approx_eq(*self, *other)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(a: i64, b: i64, x: i64, y: i64) -> ExactComplex {
        ExactComplex::from_ratios(a, b, x, y)
    }

    #[test]
    fn conj_examples() {
        assert_eq!(c(3, 5, 4, 5).conj(), c(3, 5, -4, 5));
        assert_eq!(ExactComplex::zero().conj(), ExactComplex::zero());
    }

    #[test]
    fn modulus_examples() {
        assert_eq!(c(3, 5, 4, 5).modulus_squared(), rat(1, 1));
        assert_eq!(ExactComplex::zero().modulus_squared(), rat(0, 1));
        assert_eq!(ExactComplex::i().modulus_squared(), rat(1, 1));
    }

    #[test]
    fn is_real_examples() {
        assert!(c(3, 5, 0, 1).is_real());
        assert!(!c(0, 1, 4, 5).is_real());
        assert!(ExactComplex::zero().is_real());
    }

    #[test]
    fn display_forms() {
        assert_eq!(c(3, 5, 0, 1).to_string(), "3/5");
        assert_eq!(ExactComplex::from_int(-2).to_string(), "-2");
        assert_eq!(ExactComplex::i().to_string(), "i");
        assert_eq!(c(0, 1, 4, 5).to_string(), "4/5i");
        assert_eq!(c(3, 5, 4, 5).to_string(), "3/5+4/5i");
        assert_eq!(c(3, 5, -4, 5).to_string(), "3/5-4/5i");
        assert_eq!(c(0, 1, -1, 1).to_string(), "-i");
    }

    #[test]
    fn exact_sqrt() {
        assert_eq!(rational_sqrt(&rat(9, 25)), Some(rat(3, 5)));
        assert_eq!(rational_sqrt(&rat(2, 1)), None);
        assert_eq!(rational_sqrt(&rat(-1, 4)), None);
    }

    #[test]
    fn tolerance_is_relative() {
        let tol = Tolerance::default();
        assert!(tol.approx_eq(Complex64::new(1e12, 0.0), Complex64::new(1e12 + 1.0, 0.0)));
        assert!(!tol.approx_eq(Complex64::new(1.0, 0.0), Complex64::new(1.0 + 1e-6, 0.0)));
        assert!(tol.approx_eq(Complex64::new(0.0, 0.0), Complex64::new(1e-10, 0.0)));
    }

    fn small() -> impl Strategy<Value = ExactComplex> {
        (-6i64..=6, 1i64..=5, -6i64..=6, 1i64..=5).prop_map(|(a, b, x, y)| c(a, b, x, y))
    }

    proptest! {
        #[test]
        fn field_axioms(a in small(), b in small(), d in small()) {
            prop_assert_eq!(&(&a * &b) * &d, &a * &(&b * &d));
            prop_assert_eq!(&(&a + &b) + &d, &a + &(&b + &d));
            prop_assert_eq!(&a * &(&b + &d), &(&a * &b) + &(&a * &d));
            prop_assert_eq!(&a * &b, &b * &a);
            if !a.is_zero() {
                prop_assert!((&a * &a.inv().unwrap()).is_one());
            }
        }

        #[test]
        fn conj_is_ring_involution(a in small(), b in small()) {
            prop_assert_eq!(a.conj().conj(), a.clone());
            prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
            prop_assert_eq!((&a + &b).conj(), &a.conj() + &b.conj());
        }

        #[test]
        fn modulus_is_multiplicative(a in small(), b in small()) {
            prop_assert_eq!((&a * &b).modulus_squared(), a.modulus_squared() * b.modulus_squared());
            prop_assert!(!a.modulus_squared().is_negative());
        }
    }
}
