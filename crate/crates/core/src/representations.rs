//! Points of the complex sphere and the representations they define.
//!
//! Every point `z` gives a 2-dimensional representation `theta_z`; real points
//! additionally give characters `phi_y`. `theta_z` is irreducible exactly when
//! `z` is not a unit multiple of a real point.

use std::fmt;

use crate::algebra::{Algebra, CrossedElem};
use crate::linalg;
use crate::scalars::{rational_sqrt, ApproxComplex, ExactComplex, Scalar, Tolerance};
use crate::{Error, Result};

/// A point of `S^{n-1}_C`.
#[derive(Clone, Debug, PartialEq)]
pub struct SpherePoint<C> {
    coords: Vec<C>,
}

impl<C: Scalar> SpherePoint<C> {
    /// Validates `sum |z_i|^2 = 1`, exactly or within the tolerance.
    pub fn new(coords: Vec<C>, tol: Tolerance) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::ZeroDimension);
        }
        let norm = coords.iter().fold(C::zero(), |acc, z| acc + z.mul_ref(&z.conj()));
        if !norm.close_to(&C::one(), tol) {
            return Err(Error::NotOnSphere { norm: format!("{:?}", norm) });
        }
        Ok(SpherePoint { coords })
    }

    pub(crate) fn new_unchecked(coords: Vec<C>) -> Self {
        SpherePoint { coords }
    }

    pub fn coords(&self) -> &[C] {
        &self.coords
    }

    pub fn n(&self) -> usize {
        self.coords.len()
    }

    /// Coordinatewise conjugate, i.e. `tau(z)`.
    pub fn conj(&self) -> Self {
        SpherePoint { coords: self.coords.iter().map(Scalar::conj).collect() }
    }

    pub fn neg(&self) -> Self {
        SpherePoint { coords: self.coords.iter().map(|z| -z.clone()).collect() }
    }

    /// `lambda z`; `lambda` is assumed to have modulus one.
    pub fn scale(&self, lambda: &C) -> Self {
        SpherePoint { coords: self.coords.iter().map(|z| lambda.mul_ref(z)).collect() }
    }

    /// Gram entry `z_i conj(z_j)`, 0-based positions.
    pub fn gram(&self, i: usize, j: usize) -> C {
        self.coords[i].mul_ref(&self.coords[j].conj())
    }

    pub fn to_approx(&self) -> SpherePoint<ApproxComplex> {
        SpherePoint { coords: self.coords.iter().map(Scalar::to_approx).collect() }
    }

    fn check_dim(&self, x: &CrossedElem) -> Result<()> {
        if x.n() != self.n() {
            return Err(Error::DimensionMismatch { expected: x.n(), found: self.n() });
        }
        Ok(())
    }
}

impl fmt::Display for SpherePoint<ExactComplex> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl fmt::Display for SpherePoint<ApproxComplex> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|z| format_approx(*z)).collect();
        f.write_str(&parts.join(","))
    }
}

/// `re+imi` with `{:.12}` precision, trailing zeros trimmed.
pub fn format_approx(z: ApproxComplex) -> String {
    fn num(x: f64) -> String {
        let x = if x == 0.0 { 0.0 } else { x };
        let s = format!("{:.12}", x);
        let s = s.trim_end_matches('0').trim_end_matches('.');
        if s == "-0" {
            "0".to_string()
        } else {
            s.to_string()
        }
    }
    let im = num(z.im);
    if im.starts_with('-') {
        format!("{}{}i", num(z.re), im)
    } else {
        format!("{}+{}i", num(z.re), im)
    }
}

/// Real, torus-real (a unit multiple of a real point, but not real) or
/// regular. The witness `lambda` satisfies `lambda z` real.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum PointClass {
    Real,
    TorusReal { witness: ApproxComplex },
    Regular,
}

impl PointClass {
    pub fn name(&self) -> &'static str {
        match self {
            PointClass::Real => "Real",
            PointClass::TorusReal { .. } => "TorusReal",
            PointClass::Regular => "Regular",
        }
    }

    pub fn is_regular(&self) -> bool {
        matches!(self, PointClass::Regular)
    }
}

impl fmt::Display for PointClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `z` lies in `T * S_R` iff every Gram entry `z_i conj(z_j)` is real.
pub fn classify_point<C: Scalar>(z: &SpherePoint<C>, tol: Tolerance) -> PointClass {
    if z.coords.iter().all(|c| c.real_within(tol)) {
        return PointClass::Real;
    }
    let n = z.n();
    let torus_real = (0..n).all(|i| (i + 1..n).all(|j| z.gram(i, j).real_within(tol)));
    if !torus_real {
        return PointClass::Regular;
    }
    let k = (0..n).find(|&k| !z.coords[k].near_zero(tol)).expect("unit vector has a nonzero coordinate");
    let zk = z.coords[k].to_approx();
    PointClass::TorusReal { witness: zk.conj() / zk.norm() }
}

/// 2x2 matrix over a scalar domain.
#[derive(Clone, Debug, PartialEq)]
pub struct Mat2<C> {
    pub m: [[C; 2]; 2],
}

impl<C: Scalar> Mat2<C> {
    pub fn new(a: C, b: C, c: C, d: C) -> Self {
        Mat2 { m: [[a, b], [c, d]] }
    }

    pub fn identity() -> Self {
        Self::new(C::one(), C::zero(), C::zero(), C::one())
    }

    pub fn zero() -> Self {
        Self::new(C::zero(), C::zero(), C::zero(), C::zero())
    }

    pub fn mul(&self, o: &Mat2<C>) -> Mat2<C> {
        let e = |i: usize, j: usize| self.m[i][0].mul_ref(&o.m[0][j]) + self.m[i][1].mul_ref(&o.m[1][j]);
        Mat2::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }

    pub fn add(&self, o: &Mat2<C>) -> Mat2<C> {
        let e = |i: usize, j: usize| self.m[i][j].clone() + o.m[i][j].clone();
        Mat2::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }

    pub fn sub(&self, o: &Mat2<C>) -> Mat2<C> {
        let e = |i: usize, j: usize| self.m[i][j].clone() - o.m[i][j].clone();
        Mat2::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Mat2<C> {
        let e = |i: usize, j: usize| self.m[j][i].conj();
        Mat2::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }

    pub fn trace(&self) -> C {
        self.m[0][0].clone() + self.m[1][1].clone()
    }

    pub fn det(&self) -> C {
        self.m[0][0].mul_ref(&self.m[1][1]) - self.m[0][1].mul_ref(&self.m[1][0])
    }

    pub fn entries(&self) -> [&C; 4] {
        [&self.m[0][0], &self.m[0][1], &self.m[1][0], &self.m[1][1]]
    }

    pub fn close_to(&self, o: &Mat2<C>, tol: Tolerance) -> bool {
        self.entries().iter().zip(o.entries()).all(|(a, b)| a.close_to(b, tol))
    }

    pub fn is_zero(&self, tol: Tolerance) -> bool {
        self.entries().iter().all(|a| a.near_zero(tol))
    }

    pub fn commutes_with(&self, o: &Mat2<C>, tol: Tolerance) -> bool {
        self.mul(o).close_to(&o.mul(self), tol)
    }

    /// Closed-form eigenvalues `(tr +- sqrt(tr^2 - 4 det)) / 2`, in floating point.
    pub fn eigenvalues(&self) -> (ApproxComplex, ApproxComplex) {
        let tr = self.trace().to_approx();
        let det = self.det().to_approx();
        let disc = (tr * tr - 4.0 * det).sqrt();
        ((tr + disc) / 2.0, (tr - disc) / 2.0)
    }

    /// Whether the eigenvalue multiset is `{a, b}`, checked through the
    /// characteristic polynomial (`a + b = tr`, `a b = det`) so that exact
    /// data stays exact.
    pub fn has_eigenvalues(&self, a: &C, b: &C, tol: Tolerance) -> bool {
        (a.clone() + b.clone()).close_to(&self.trace(), tol) && a.mul_ref(b).close_to(&self.det(), tol)
    }
}

impl<C: Scalar> fmt::Display for Mat2<C>
where
    SpherePoint<C>: fmt::Display,
{
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let row = |i: usize| SpherePoint::new_unchecked(self.m[i].to_vec()).to_string();
        write!(f, "[[{}],[{}]]", row(0).replace(',', ", "), row(1).replace(',', ", "))
    }
}

fn eval_pair<C: Scalar>(z: &SpherePoint<C>, x: &CrossedElem) -> [C; 4] {
    let zb: Vec<C> = z.coords.iter().map(Scalar::conj).collect();
    [
        x.f0().eval_with_conj(&z.coords, &zb),
        x.f1().eval_with_conj(&z.coords, &zb),
        x.f1().eval_with_conj(&zb, &z.coords),
        x.f0().eval_with_conj(&zb, &z.coords),
    ]
}

/// `theta_z(x) = [[f0(z), f1(z)], [f1(conj z), f0(conj z)]]`.
pub fn theta<C: Scalar>(z: &SpherePoint<C>, x: &CrossedElem) -> Result<Mat2<C>> {
    z.check_dim(x)?;
    let [a, b, c, d] = eval_pair(z, x);
    Ok(Mat2::new(a, b, c, d))
}

/// The character `phi_y(x) = f0(y) + f1(y)` of a real point.
pub fn phi_rep<C: Scalar>(y: &SpherePoint<C>, x: &CrossedElem, tol: Tolerance) -> Result<C> {
    y.check_dim(x)?;
    if classify_point(y, tol) != PointClass::Real {
        return Err(Error::NotReal);
    }
    Ok(x.f0().eval_unchecked(&y.coords) + x.f1().eval_unchecked(&y.coords))
}

/// Trace of `theta_z(x)`, i.e. `f0(z) + f0(conj z)`.
pub fn character<C: Scalar>(z: &SpherePoint<C>, x: &CrossedElem) -> Result<C> {
    z.check_dim(x)?;
    let zb: Vec<C> = z.coords.iter().map(Scalar::conj).collect();
    Ok(x.f0().eval_with_conj(&z.coords, &zb) + x.f0().eval_with_conj(&zb, &z.coords))
}

pub fn is_irreducible<C: Scalar>(z: &SpherePoint<C>, tol: Tolerance) -> bool {
    classify_point(z, tol).is_regular()
}

/// Dimension of the commutant of `{theta_z(v_i)}` inside `M_2`, from the
/// linear system `X A_i = A_i X`.
pub fn commutant_dimension<C: Scalar>(z: &SpherePoint<C>, tol: Tolerance) -> usize {
    let alg = Algebra::new(z.n()).expect("nonempty point");
    let units: Vec<Mat2<C>> = (0..4)
        .map(|k| {
            let mut m = Mat2::zero();
            m.m[k / 2][k % 2] = C::one();
            m
        })
        .collect();
    let mut rows: Vec<Vec<C>> = Vec::new();
    for i in 1..=z.n() {
        let a = theta(z, &alg.generator(i)).expect("matching dimension");
        let images: Vec<Mat2<C>> = units.iter().map(|e| e.mul(&a).sub(&a.mul(e))).collect();
        for r in 0..4 {
            rows.push(images.iter().map(|img| img.entries()[r].clone()).collect());
        }
    }
    4 - linalg::rank(&rows, tol)
}

/// Same `(T x| Z_2)`-orbit: the Gram matrices agree, or agree after
/// conjugation.
pub fn orbit_equivalent<C: Scalar>(z: &SpherePoint<C>, x: &SpherePoint<C>, tol: Tolerance) -> bool {
    if z.n() != x.n() {
        return false;
    }
    let n = z.n();
    let pairs = || (0..n).flat_map(|i| (0..n).map(move |j| (i, j)));
    let same = pairs().all(|(i, j)| z.gram(i, j).close_to(&x.gram(i, j), tol));
    same || pairs().all(|(i, j)| z.gram(i, j).close_to(&x.gram(i, j).conj(), tol))
}

/// A real point, exact when the phase of the input could be removed exactly.
#[derive(Clone, Debug, PartialEq)]
pub enum RealPoint<C> {
    Native(SpherePoint<C>),
    Approx(SpherePoint<ApproxComplex>),
}

impl<C: Scalar> RealPoint<C> {
    pub fn to_approx(&self) -> SpherePoint<ApproxComplex> {
        match self {
            RealPoint::Native(p) => p.to_approx(),
            RealPoint::Approx(p) => p.clone(),
        }
    }
}

/// Unit phase `z / |z|`, exactly when possible.
pub trait Phase: Scalar {
    fn phase(&self) -> Option<Self>;
}

impl Phase for ExactComplex {
    fn phase(&self) -> Option<Self> {
        let r = rational_sqrt(&self.modulus_squared())?;
        Some(self.scale(&r.recip()))
    }
}

impl Phase for ApproxComplex {
    fn phase(&self) -> Option<Self> {
        Some(self / self.norm())
    }
}

/// For `z = lambda y` with `y` real, returns `(y, -y)` so that
/// `theta_z ~ phi_y (+) phi_{-y}`.
pub fn decompose_nonregular<C: Phase>(z: &SpherePoint<C>, tol: Tolerance) -> Result<(RealPoint<C>, RealPoint<C>)> {
    if classify_point(z, tol).is_regular() {
        return Err(Error::RegularPoint);
    }
    let approx = z.to_approx();
    let k = (0..z.n()).find(|&k| !z.coords[k].near_zero(tol)).expect("unit vector has a nonzero coordinate");
    if let Some(ph) = z.coords[k].phase() {
        let y = z.scale(&ph.conj());
        let half = C::from_exact(&ExactComplex::from_ratios(1, 2, 0, 1));
        let coords: Vec<C> = y
            .coords
            .iter()
            // real part only, dropping rounding residue in approximate mode
            .map(|c| if C::EXACT { c.clone() } else { (c.clone() + c.conj()).mul_ref(&half) })
            .collect();
        let y = SpherePoint::new_unchecked(coords);
        return Ok((RealPoint::Native(y.clone()), RealPoint::Native(y.neg())));
    }
    let ph = approx.coords[k] / approx.coords[k].norm();
    let y = approx.scale(&ph.conj());
    let y = SpherePoint::new_unchecked(y.coords.iter().map(|c| ApproxComplex::new(c.re, 0.0)).collect());
    Ok((RealPoint::Approx(y.clone()), RealPoint::Approx(y.neg())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{NCPoly, NCWord};
    use crate::sample::Sampler;
    use num_complex::Complex64;
    use proptest::prelude::*;

    fn c(a: i64, b: i64, x: i64, y: i64) -> ExactComplex {
        ExactComplex::from_ratios(a, b, x, y)
    }

    fn pt(coords: Vec<ExactComplex>) -> SpherePoint<ExactComplex> {
        SpherePoint::new(coords, Tolerance::default()).unwrap()
    }

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    fn regular() -> SpherePoint<ExactComplex> {
        pt(vec![c(3, 5, 0, 1), c(0, 1, 4, 5)])
    }

    fn torus() -> SpherePoint<ExactComplex> {
        pt(vec![c(0, 1, 3, 5), c(0, 1, 4, 5)])
    }

    #[test]
    fn rejects_off_sphere() {
        assert!(matches!(SpherePoint::new(vec![c(1, 1, 0, 1), c(1, 1, 0, 1)], tol()), Err(Error::NotOnSphere { .. })));
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify_point(&pt(vec![c(3, 5, 0, 1), c(4, 5, 0, 1)]), tol()), PointClass::Real);
        match classify_point(&torus(), tol()) {
            PointClass::TorusReal { witness } => {
                let y = torus().to_approx().scale(&witness);
                assert!(y.coords().iter().all(|c| c.im.abs() < 1e-12));
                assert!((witness - Complex64::new(0.0, -1.0)).norm() < 1e-12);
            }
            other => panic!("expected TorusReal, got {:?}", other),
        }
        assert_eq!(classify_point(&regular(), tol()), PointClass::Regular);
    }

    #[test]
    fn classify_approx_points() {
        let z = SpherePoint::new(vec![Complex64::new(0.6, 0.0), Complex64::new(0.0, 0.8)], tol()).unwrap();
        assert_eq!(classify_point(&z, tol()), PointClass::Regular);
        let s = 0.5f64.sqrt();
        let z = SpherePoint::new(vec![Complex64::new(s, s) * 0.6, Complex64::new(s, s) * 0.8], tol()).unwrap();
        assert!(matches!(classify_point(&z, tol()), PointClass::TorusReal { .. }));
    }

    #[test]
    fn theta_examples() {
        let a = Algebra::new(2).unwrap();
        let z = regular();
        let t = theta(&z, &a.generator(2)).unwrap();
        assert_eq!(t, Mat2::new(c(0, 1, 0, 1), c(0, 1, 4, 5), c(0, 1, -4, 5), c(0, 1, 0, 1)));
        assert_eq!(theta(&z, &CrossedElem::one(2)).unwrap(), Mat2::identity());
        let x = a.pi(&NCPoly::word(&[1, 2])).unwrap();
        let g = z.gram(0, 1);
        assert_eq!(theta(&z, &x).unwrap(), Mat2::new(g.clone(), c(0, 1, 0, 1), c(0, 1, 0, 1), g.conj()));
        let b = Algebra::new(3).unwrap();
        assert!(matches!(theta(&z, &b.generator(1)), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn phi_rep_examples() {
        let a = Algebra::new(3).unwrap();
        let e1 = pt(vec![c(1, 1, 0, 1), c(0, 1, 0, 1), c(0, 1, 0, 1)]);
        assert_eq!(phi_rep(&e1, &a.generator(1), tol()).unwrap(), ExactComplex::one());
        assert_eq!(phi_rep(&e1, &CrossedElem::one(3), tol()).unwrap(), ExactComplex::one());
        let y = pt(vec![c(3, 5, 0, 1), c(0, 1, 0, 1), c(-4, 5, 0, 1)]);
        let x = a.pi(&NCPoly::word(&[1, 3])).unwrap();
        assert_eq!(phi_rep(&y, &x, tol()).unwrap(), c(-12, 25, 0, 1));
        let b = Algebra::new(2).unwrap();
        assert_eq!(phi_rep(&regular(), &b.generator(1), tol()), Err(Error::NotReal));
    }

    #[test]
    fn character_examples() {
        let a = Algebra::new(2).unwrap();
        let z = regular();
        assert_eq!(character(&z, &CrossedElem::one(2)).unwrap(), ExactComplex::from_int(2));
        assert_eq!(character(&z, &a.generator(1)).unwrap(), ExactComplex::zero());
        let x = a.pi(&NCPoly::word(&[1, 2])).unwrap();
        let g = z.gram(0, 1);
        assert_eq!(character(&z, &x).unwrap(), ExactComplex::from_rational(g.re * crate::scalars::rat(2, 1)));
        assert_eq!(character(&z, &x).unwrap(), theta(&z, &x).unwrap().trace());
    }

    #[test]
    fn irreducibility_examples() {
        assert!(is_irreducible(&regular(), tol()));
        assert_eq!(commutant_dimension(&regular(), tol()), 1);
        let real = pt(vec![c(3, 5, 0, 1), c(4, 5, 0, 1)]);
        assert!(!is_irreducible(&real, tol()));
        assert_eq!(commutant_dimension(&real, tol()), 2);
        assert!(!is_irreducible(&torus(), tol()));
        assert_eq!(commutant_dimension(&torus(), tol()), 2);
    }

    #[test]
    fn orbit_examples() {
        let z = regular();
        for lam in [c(0, 1, 1, 1), c(-1, 1, 0, 1), c(3, 5, 4, 5)] {
            assert!(orbit_equivalent(&z, &z.scale(&lam), tol()));
        }
        assert!(orbit_equivalent(&z, &z.conj(), tol()));
        let swapped = pt(vec![c(0, 1, 4, 5), c(3, 5, 0, 1)]);
        assert!(!orbit_equivalent(&z, &swapped, tol()));
    }

    #[test]
    fn decompose_examples() {
        let real = pt(vec![c(3, 5, 0, 1), c(4, 5, 0, 1)]);
        let (y, my) = decompose_nonregular(&real, tol()).unwrap();
        assert_eq!(y, RealPoint::Native(real.clone()));
        assert_eq!(my, RealPoint::Native(real.neg()));

        let (y, _) = decompose_nonregular(&torus(), tol()).unwrap();
        let RealPoint::Native(y) = y else { panic!("expected an exact point") };
        assert!(y == real || y == real.neg());

        let a = Algebra::new(2).unwrap();
        let m = theta(&torus(), &a.generator(1)).unwrap();
        let v = phi_rep(&y, &a.generator(1), tol()).unwrap();
        let w = phi_rep(&y.neg(), &a.generator(1), tol()).unwrap();
        assert_eq!(v.clone(), -w.clone());
        assert!(v == c(3, 5, 0, 1) || v == c(-3, 5, 0, 1));
        assert!(m.has_eigenvalues(&v, &w, tol()));
        let (e1, e2) = m.eigenvalues();
        let mut ev = [e1.re, e2.re];
        ev.sort_by(f64::total_cmp);
        assert!((ev[0] + 0.6).abs() < 1e-12 && (ev[1] - 0.6).abs() < 1e-12);

        assert_eq!(decompose_nonregular(&regular(), tol()), Err(Error::RegularPoint));
    }

    #[test]
    fn decompose_irrational_phase_is_approximate() {
        // common phase 1+i, |z_1|^2 = 9/50 is not a rational square
        let w = pt(vec![c(3, 10, 3, 10), c(2, 5, 2, 5), c(1, 2, 1, 2)]);
        assert!(matches!(classify_point(&w, tol()), PointClass::TorusReal { .. }));
        let (y, _) = decompose_nonregular(&w, tol()).unwrap();
        let RealPoint::Approx(y) = y else { panic!("phase is irrational") };
        let norm: f64 = y.coords().iter().map(|c| c.norm_sqr()).sum();
        assert!((norm - 1.0).abs() < 1e-12);
        assert!(orbit_equivalent(&w.to_approx(), &y, tol()));
    }

    fn kind(k: u8) -> crate::sample::PointKind {
        use crate::sample::PointKind;
        [PointKind::Real, PointKind::TorusReal, PointKind::Regular][k as usize % 3]
    }

    fn sample_point(s: &mut Sampler, n: usize, k: u8) -> SpherePoint<ExactComplex> {
        s.point(n, kind(k)).unwrap_or_else(|| s.real_point(n))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn theta_is_unital_star_homomorphism(seed in any::<u64>(), n in 1usize..=4, k in 0u8..3) {
            let mut s = Sampler::new(seed);
            let z = sample_point(&mut s, n, k);
            let a = s.element(n, 3, 3);
            let b = s.element(n, 3, 3);
            let ta = theta(&z, &a).unwrap();
            let tb = theta(&z, &b).unwrap();
            prop_assert_eq!(theta(&z, &a.mul(&b)).unwrap(), ta.mul(&tb));
            prop_assert_eq!(theta(&z, &a.star()).unwrap(), ta.adjoint());
            prop_assert_eq!(theta(&z, &CrossedElem::one(n)).unwrap(), Mat2::identity());
        }

        #[test]
        fn phi_rep_is_star_character(seed in any::<u64>(), n in 1usize..=4) {
            let mut s = Sampler::new(seed);
            let y = s.real_point(n);
            let a = s.element(n, 3, 3);
            let b = s.element(n, 3, 3);
            let pa = phi_rep(&y, &a, tol()).unwrap();
            let pb = phi_rep(&y, &b, tol()).unwrap();
            prop_assert_eq!(phi_rep(&y, &a.mul(&b), tol()).unwrap(), pa.clone() * pb);
            prop_assert_eq!(phi_rep(&y, &a.star(), tol()).unwrap(), pa.conj());
            prop_assert!(phi_rep(&y, &a.add(&a.star()), tol()).unwrap().is_real());
        }

        #[test]
        fn character_is_orbit_invariant(seed in any::<u64>(), n in 1usize..=4, k in 0u8..3) {
            let mut s = Sampler::new(seed);
            let z = sample_point(&mut s, n, k);
            let lam = s.torus_real_point(1).coords()[0].clone();
            let w = if s.coin(0.5) { z.scale(&lam) } else { z.conj().scale(&lam) };
            prop_assert!(orbit_equivalent(&z, &w, tol()));
            for _ in 0..4 {
                let x = s.element(n, 4, 3);
                prop_assert_eq!(character(&z, &x).unwrap(), character(&w, &x).unwrap());
                prop_assert_eq!(character(&z, &x).unwrap(), theta(&z, &x).unwrap().trace());
            }
        }

        #[test]
        fn irreducibility_matches_commutant(seed in any::<u64>(), n in 1usize..=4, k in 0u8..3) {
            let mut s = Sampler::new(seed);
            let z = sample_point(&mut s, n, k);
            let dim = commutant_dimension(&z, tol());
            prop_assert_eq!(is_irreducible(&z, tol()), dim == 1);
            prop_assert!(dim == 1 || dim == 2);
            let za = z.to_approx();
            prop_assert_eq!(commutant_dimension(&za, tol()), dim);
            prop_assert_eq!(classify_point(&za, tol()).name(), classify_point(&z, tol()).name());
        }

        #[test]
        fn nonregular_image_is_commutative(seed in any::<u64>(), n in 1usize..=4, real in any::<bool>()) {
            let mut s = Sampler::new(seed);
            let z = if real { s.real_point(n) } else { s.torus_real_point(n) };
            let a = theta(&z, &s.element(n, 3, 3)).unwrap();
            let b = theta(&z, &s.element(n, 3, 3)).unwrap();
            prop_assert_eq!(a.mul(&b), b.mul(&a));
        }

        #[test]
        fn decomposition_matches_eigenvalues(seed in any::<u64>(), n in 1usize..=4, real in any::<bool>()) {
            let mut s = Sampler::new(seed);
            let z = if real { s.real_point(n) } else { s.torus_real_point(n) };
            let x = s.self_adjoint(n, 3, 3);
            let m = theta(&z, &x).unwrap();
            match decompose_nonregular(&z, tol()).unwrap() {
                (RealPoint::Native(y), RealPoint::Native(my)) => {
                    prop_assert!(orbit_equivalent(&z, &y, tol()));
                    let a = phi_rep(&y, &x, tol()).unwrap();
                    let b = phi_rep(&my, &x, tol()).unwrap();
                    prop_assert!(m.has_eigenvalues(&a, &b, tol()));
                }
                (y, my) => {
                    let (y, my) = (y.to_approx(), my.to_approx());
                    let a = phi_rep(&y, &x, tol()).unwrap();
                    let b = phi_rep(&my, &x, tol()).unwrap();
                    let ma = theta(&z.to_approx(), &x).unwrap();
                    prop_assert!(ma.has_eigenvalues(&a, &b, Tolerance::new(1e-9)));
                }
            }
        }

        #[test]
        fn phi_rep_separates_real_points(seed in any::<u64>(), n in 1usize..=3) {
            let mut s = Sampler::new(seed);
            let y = s.real_point(n);
            let w = s.real_point(n);
            let a = Algebra::new(n).unwrap();
            let basis: Vec<CrossedElem> = (0..=4)
                .flat_map(|l| NCWord::all_of_length(n, l))
                .map(|word| a.pi_word(&word).unwrap())
                .collect();
            let same = basis.iter().all(|b| phi_rep(&y, b, tol()).unwrap() == phi_rep(&w, b, tol()).unwrap());
            prop_assert_eq!(same, y == w);
        }
    }
}
