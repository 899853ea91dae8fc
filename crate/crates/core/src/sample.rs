//! Seeded generation of exact sphere points and random algebra elements.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Algebra, CrossedElem, NCPoly, NCWord};
use crate::projective::{PExpr, PMonomial};
use crate::representations::{classify_point, SpherePoint};
use crate::scalars::{ExactComplex, Rational, Tolerance};

/// Stereographic parametrization `u -> ((1 - |u|^2) e_1 + 2u) / (1 + |u|^2)`
/// of the real sphere in dimension `u.len() + 1`.
fn stereographic(u: &[Rational]) -> Vec<Rational> {
    let s: Rational = u.iter().map(|x| x * x).sum();
    let d = Rational::one() + &s;
    let mut x = vec![(Rational::one() - &s) / &d];
    x.extend(u.iter().map(|ui| Rational::from_integer(2.into()) * ui / &d));
    x
}

/// An exact point of `S^{n-1}_C` from `2n - 1` rational parameters; the real
/// coordinates are packed as `z_k = x_{2k-1} + i x_{2k}`.
pub fn sphere_from_params(n: usize, u: &[Rational]) -> Vec<ExactComplex> {
    assert_eq!(u.len() + 1, 2 * n, "need 2n-1 parameters");
    stereographic(u).chunks(2).map(|c| ExactComplex::new(c[0].clone(), c[1].clone())).collect()
}

/// An exact point of `S^{n-1}_R` from `n - 1` rational parameters.
pub fn real_sphere_from_params(n: usize, u: &[Rational]) -> Vec<ExactComplex> {
    assert_eq!(u.len() + 1, n, "need n-1 parameters");
    stereographic(u).into_iter().map(ExactComplex::from_rational).collect()
}

/// The class of point to sample.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PointKind {
    Real,
    TorusReal,
    Regular,
}

/// Reproducible source of random exact data.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    /// `a/b` with `|a| <= 3`, `1 <= b <= 3`.
    pub fn rational(&mut self) -> Rational {
        Rational::new(self.rng.random_range(-3..=3i64).into(), self.rng.random_range(1..=3i64).into())
    }

    /// Small Gaussian rational, never zero.
    pub fn scalar(&mut self) -> ExactComplex {
        loop {
            let re = self.rational();
            let im = if self.rng.random_bool(0.4) { self.rational() } else { Rational::zero() };
            let c = ExactComplex::new(re, im);
            if !c.is_zero() {
                return c;
            }
        }
    }

    fn params(&mut self, k: usize) -> Vec<Rational> {
        (0..k).map(|_| self.rational()).collect()
    }

    pub fn real_point(&mut self, n: usize) -> SpherePoint<ExactComplex> {
        let u = self.params(n - 1);
        SpherePoint::new_unchecked(real_sphere_from_params(n, &u))
    }

    /// A real point times an exact non-real unit.
    pub fn torus_real_point(&mut self, n: usize) -> SpherePoint<ExactComplex> {
        let y = self.real_point(n);
        let t = loop {
            let t = self.rational();
            if !t.is_zero() {
                break t;
            }
        };
        let lam = sphere_from_params(1, &[t]).pop().unwrap();
        y.scale(&lam)
    }

    /// A regular point; `None` for `n = 1`, where none exist.
    pub fn regular_point(&mut self, n: usize) -> Option<SpherePoint<ExactComplex>> {
        if n < 2 {
            return None;
        }
        loop {
            let z = self.generic_point(n);
            if classify_point(&z, Tolerance::default()).is_regular() {
                return Some(z);
            }
        }
    }

    /// Any exact point of `S^{n-1}_C`.
    pub fn generic_point(&mut self, n: usize) -> SpherePoint<ExactComplex> {
        let u = self.params(2 * n - 1);
        SpherePoint::new_unchecked(sphere_from_params(n, &u))
    }

    pub fn point(&mut self, n: usize, kind: PointKind) -> Option<SpherePoint<ExactComplex>> {
        match kind {
            PointKind::Real => Some(self.real_point(n)),
            PointKind::TorusReal => Some(self.torus_real_point(n)),
            PointKind::Regular => self.regular_point(n),
        }
    }

    pub fn word(&mut self, n: usize, len: usize) -> NCWord {
        NCWord((0..len).map(|_| self.rng.random_range(1..=n as u32)).collect())
    }

    /// Up to `terms` random words of length `<= max_deg`.
    pub fn nc_poly(&mut self, n: usize, max_deg: usize, terms: usize) -> NCPoly {
        let k = self.rng.random_range(1..=terms.max(1));
        let mut p = NCPoly::zero();
        for _ in 0..k {
            let len = self.rng.random_range(0..=max_deg);
            let w = self.word(n, len);
            p.add_term(w, &self.scalar());
        }
        p
    }

    /// Random polynomial in even words only.
    pub fn even_nc_poly(&mut self, n: usize, max_deg: usize, terms: usize) -> NCPoly {
        let k = self.rng.random_range(1..=terms.max(1));
        let mut p = NCPoly::zero();
        for _ in 0..k {
            let len = 2 * self.rng.random_range(0..=max_deg / 2);
            let w = self.word(n, len);
            p.add_term(w, &self.scalar());
        }
        p
    }

    /// Canonical form of a random polynomial.
    pub fn element(&mut self, n: usize, max_deg: usize, terms: usize) -> CrossedElem {
        let p = self.nc_poly(n, max_deg, terms);
        Algebra::new(n).unwrap().pi(&p).expect("indices in range")
    }

    /// `x + x^*` for a random `x`.
    pub fn self_adjoint(&mut self, n: usize, max_deg: usize, terms: usize) -> CrossedElem {
        let x = self.element(n, max_deg, terms);
        x.add(&x.star())
    }

    /// Random polynomial in the `p_ij` with monomials of at most `max_len` factors.
    pub fn p_expr(&mut self, n: usize, max_len: usize, terms: usize) -> PExpr {
        let k = self.rng.random_range(1..=terms.max(1));
        let mut e = PExpr::zero();
        for _ in 0..k {
            let len = self.rng.random_range(0..=max_len);
            let pairs =
                (0..len).map(|_| (self.rng.random_range(1..=n as u32), self.rng.random_range(1..=n as u32))).collect();
            e.add_term(PMonomial::new(pairs), &self.scalar());
        }
        e
    }

    /// True with the given probability.
    pub fn coin(&mut self, p: f64) -> bool {
        self.rng.random_bool(p)
    }

    pub fn index(&mut self, bound: usize) -> usize {
        self.rng.random_range(0..bound)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::representations::PointClass;
    use crate::scalars::rat;

    #[test]
    fn parametrization_hits_sphere() {
        let z = sphere_from_params(2, &[rat(1, 2), rat(0, 1), rat(0, 1)]);
        assert_eq!(z[0], ExactComplex::from_ratios(3, 5, 4, 5));
        assert_eq!(z[1], ExactComplex::zero());
        let y = real_sphere_from_params(3, &[rat(1, 3), rat(-2, 3)]);
        let norm: Rational = y.iter().map(|c| c.modulus_squared()).sum();
        assert_eq!(norm, Rational::one());
    }

    #[test]
    fn sampled_points_have_their_class() {
        let mut s = Sampler::new(7);
        let tol = Tolerance::default();
        for n in 1..=4 {
            for _ in 0..20 {
                let y = s.real_point(n);
                assert!(SpherePoint::new(y.coords().to_vec(), tol).is_ok());
                assert_eq!(classify_point(&y, tol), PointClass::Real);
                let t = s.torus_real_point(n);
                assert!(SpherePoint::new(t.coords().to_vec(), tol).is_ok());
                assert!(matches!(classify_point(&t, tol), PointClass::TorusReal { .. }));
                match s.regular_point(n) {
                    Some(z) => {
                        assert!(SpherePoint::new(z.coords().to_vec(), tol).is_ok());
                        assert_eq!(classify_point(&z, tol), PointClass::Regular);
                    }
                    None => assert_eq!(n, 1),
                }
            }
        }
    }

    #[test]
    fn seeds_reproduce() {
        let a = Sampler::new(3).nc_poly(3, 4, 5);
        let b = Sampler::new(3).nc_poly(3, 4, 5);
        assert_eq!(a, b);
    }
}
