//! The acceptance suites, runnable from the library and the command line.
//!
//! Each suite is deterministic given a [`VerifyConfig`].

use std::fmt;

use crate::algebra::{Algebra, CrossedElem, NCPoly, NCWord};
use crate::projective::{check_projector_relations, phi, tau_p, transport_ideal, PExpr, PMonomial};
use crate::representations::{
    character, classify_point, commutant_dimension, decompose_nonregular, is_irreducible, orbit_equivalent, phi_rep,
    theta, PointClass, RealPoint, SpherePoint,
};
use crate::sample::Sampler;
use crate::scalars::{ApproxComplex, ExactComplex, Tolerance};
use crate::subspaces::{
    classify_pair, even_ideal_span, even_to_graded, graded_to_even, ideal_span, sigma_stable, vanishing_ideal,
    IdealSpec,
};
use crate::Result;

/// Parameters shared by all suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Dimension for suites that do not fix their own.
    pub n: usize,
    /// Degree bound for random elements and truncations.
    pub degree: usize,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { n: 3, degree: 5, seed: 0 }
    }
}

/// Suite names, in order; suite `k` has name `SUITES[k - 1]`.
pub const SUITES: [&str; 11] = [
    "relations",
    "homomorphism",
    "even-commutative",
    "projector",
    "phi-bijective",
    "gamma-diagram",
    "intertwining",
    "representations",
    "graded-bijection",
    "dictionary",
    "intermediate",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub index: usize,
    pub name: &'static str,
    pub checks: usize,
    /// First few failures; empty when the suite passes.
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

impl SuiteReport {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.pass() { "PASS" } else { "FAIL" };
        write!(f, "{:>2} {:<18} {} ({} checks)", self.index, self.name, status, self.checks)?;
        for n in &self.notes {
            write!(f, "\n     {}", n)?;
        }
        for m in &self.failures {
            write!(f, "\n     failure: {}", m)?;
        }
        Ok(())
    }
}

struct Checker {
    checks: usize,
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Checker {
    fn new() -> Self {
        Checker { checks: 0, failures: Vec::new(), notes: Vec::new() }
    }

    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok && self.failures.len() < 5 {
            self.failures.push(msg());
        }
    }

    fn note(&mut self, s: String) {
        self.notes.push(s);
    }

    fn finish(self, index: usize) -> SuiteReport {
        SuiteReport { index, name: SUITES[index - 1], checks: self.checks, failures: self.failures, notes: self.notes }
    }
}

/// Looks a suite up by 1-based index or by name.
pub fn suite_index(key: &str) -> Option<usize> {
    if let Ok(k) = key.parse::<usize>() {
        return (1..=SUITES.len()).contains(&k).then_some(k);
    }
    SUITES.iter().position(|s| *s == key).map(|p| p + 1)
}

pub fn run_suite(index: usize, cfg: &VerifyConfig) -> SuiteReport {
    let seed = cfg.seed.wrapping_mul(1000).wrapping_add(index as u64);
    let mut c = Checker::new();
    match index {
        1 => relations(&mut c),
        2 => homomorphism(&mut c, cfg, seed),
        3 => even_commutative(&mut c, cfg, seed),
        4 => projector(&mut c),
        5 => phi_bijective(&mut c),
        6 => gamma_diagram(&mut c, cfg, seed),
        7 => intertwining(&mut c, cfg, seed),
        8 => representations(&mut c, cfg, seed),
        9 => graded_bijection(&mut c, cfg, seed),
        10 => dictionary(&mut c, seed),
        11 => intermediate(&mut c, seed),
        _ => panic!("no suite {}", index),
    }
    c.finish(index)
}

pub fn run_all(cfg: &VerifyConfig) -> Vec<SuiteReport> {
    (1..=SUITES.len()).map(|k| run_suite(k, cfg)).collect()
}

fn alg(n: usize) -> Algebra {
    Algebra::new(n).expect("n >= 1")
}

fn relations(c: &mut Checker) {
    for n in 2..=4usize {
        let a = alg(n);
        let sum = (1..=n as u32).fold(NCPoly::zero(), |acc, i| acc.add(&NCPoly::word(&[i, i])));
        c.check(a.pi(&sum).unwrap() == CrossedElem::one(n), || format!("sum v_i^2 != 1 at n={}", n));
        for i in 1..=n as u32 {
            for j in 1..=n as u32 {
                for k in 1..=n as u32 {
                    let rel = NCPoly::word(&[i, j, k]).sub(&NCPoly::word(&[k, j, i]));
                    c.check(a.pi(&rel).unwrap().is_zero(), || format!("v{}v{}v{} != v{}v{}v{}", i, j, k, k, j, i));
                }
            }
        }
    }
}

fn homomorphism(c: &mut Checker, cfg: &VerifyConfig, seed: u64) {
    let mut s = Sampler::new(seed);
    let a = alg(cfg.n);
    for _ in 0..200 {
        let p = s.nc_poly(cfg.n, cfg.degree, 4);
        let q = s.nc_poly(cfg.n, cfg.degree, 4);
        let (pp, pq) = (a.pi(&p).unwrap(), a.pi(&q).unwrap());
        c.check(a.pi(&p.mul(&q)).unwrap() == pp.mul(&pq), || format!("pi(pq) != pi(p)pi(q) for p={} q={}", p, q));
        c.check(a.pi(&p.star()).unwrap() == pp.star(), || format!("pi(p*) != pi(p)* for p={}", p));
    }
}

fn even_commutative(c: &mut Checker, cfg: &VerifyConfig, seed: u64) {
    let mut s = Sampler::new(seed);
    let a = alg(cfg.n);
    for _ in 0..200 {
        let x = a.pi(&s.even_nc_poly(cfg.n, cfg.degree, 4)).unwrap();
        let y = a.pi(&s.even_nc_poly(cfg.n, cfg.degree, 4)).unwrap();
        c.check(x.is_even() && y.is_even(), || "random even polynomial has an odd part".into());
        c.check(x.mul(&y) == y.mul(&x), || format!("even elements do not commute: {} and {}", x, y));
    }
}

fn projector(c: &mut Checker) {
    for n in 1..=5 {
        let r = check_projector_relations(n).unwrap();
        for chk in &r.checks {
            c.check(chk.pass, || format!("{} relation fails at n={}", chk.name, n));
        }
    }
}

fn phi_bijective(c: &mut Checker) {
    use crate::linalg::Echelon;
    for n in 1..=3usize {
        let a = alg(n);
        for m in 0..=3usize {
            let mut image = Echelon::new();
            for mono in PMonomial::all_of_length(n, m) {
                image.insert(&a.pi(&phi(&PExpr::term(mono, ExactComplex::one()))).unwrap().to_sparse());
            }
            let mut even = Echelon::new();
            for w in NCWord::all_of_length(n, 2 * m) {
                even.insert(&a.pi_word(&w).unwrap().to_sparse());
            }
            c.check(image == even, || format!("image of Phi differs from the even span at n={} m={}", n, m));
        }
    }
}

fn gamma_diagram(c: &mut Checker, cfg: &VerifyConfig, seed: u64) {
    for n in 1..=3usize {
        let a = alg(n);
        for m in 0..=3usize {
            for mono in PMonomial::all_of_length(n, m) {
                let e = PExpr::term(mono, ExactComplex::one());
                let lhs = a.pi(&phi(&tau_p(&e))).unwrap();
                let rhs = a.pi(&phi(&e)).unwrap().gamma();
                c.check(lhs == rhs, || format!("Phi(tau(e)) != gamma(Phi(e)) for e={}", e));
            }
        }
    }
    let mut s = Sampler::new(seed);
    let a = alg(cfg.n);
    for _ in 0..100 {
        let x = s.element(cfg.n, cfg.degree, 4);
        let sum = (1..=cfg.n).fold(CrossedElem::zero(cfg.n), |acc, i| {
            let v = a.generator(i);
            acc.add(&v.mul(&x).mul(&v))
        });
        c.check(x.gamma() == sum, || format!("closed-form gamma differs from sum v_i x v_i at x={}", x));
    }
}

fn intertwining(c: &mut Checker, cfg: &VerifyConfig, seed: u64) {
    let mut s = Sampler::new(seed);
    for k in 0..200 {
        let n = 1 + k % 4;
        let a = alg(n);
        let x = a.pi(&s.even_nc_poly(n, cfg.degree, 4)).unwrap();
        let g = x.gamma();
        for i in 1..=n {
            let v = a.generator(i);
            c.check(v.mul(&x) == g.mul(&v), || format!("v{} x != gamma(x) v{} at x={}", i, i, x));
        }
    }
}

fn i_real_point(s: &mut Sampler, n: usize) -> SpherePoint<ExactComplex> {
    s.real_point(n).scale(&ExactComplex::i())
}

fn representations(c: &mut Checker, cfg: &VerifyConfig, seed: u64) {
    let mut s = Sampler::new(seed);
    let n = cfg.n.max(2);
    let tol = Tolerance::default();
    let units = [ExactComplex::one(), ExactComplex::from_int(-1), ExactComplex::i(), -ExactComplex::i()];
    let mut tally = [0usize; 3];
    for class in 0..3 {
        for _ in 0..50 {
            let z = match class {
                0 => s.real_point(n),
                1 => i_real_point(&mut s, n),
                _ => s.generic_point(n),
            };
            let kind = classify_point(&z, tol);
            tally[match kind.name() {
                "Real" => 0,
                "TorusReal" => 1,
                _ => 2,
            }] += 1;
            let x = s.element(n, 3, 3);
            let y = s.element(n, 3, 3);
            let (tx, ty) = (theta(&z, &x).unwrap(), theta(&z, &y).unwrap());
            c.check(theta(&z, &x.mul(&y)).unwrap() == tx.mul(&ty), || format!("theta not multiplicative at z={}", z));
            c.check(theta(&z, &x.star()).unwrap() == tx.adjoint(), || format!("theta not *-preserving at z={}", z));
            c.check(theta(&z, &x.add(&y)).unwrap() == tx.add(&ty), || format!("theta not additive at z={}", z));

            let za = z.to_approx();
            let (ax, ay) = (theta(&za, &x).unwrap(), theta(&za, &y).unwrap());
            c.check(theta(&za, &x.mul(&y)).unwrap().close_to(&ax.mul(&ay), tol), || {
                format!("approximate theta not multiplicative at z={}", z)
            });

            let dim = commutant_dimension(&z, tol);
            c.check(is_irreducible(&z, tol) == (dim == 1), || {
                format!("irreducibility disagrees with commutant at z={}", z)
            });
            c.check(commutant_dimension(&za, tol) == dim, || format!("approximate commutant differs at z={}", z));

            let orbit: Vec<SpherePoint<ExactComplex>> =
                units.iter().map(|u| z.scale(u)).chain(std::iter::once(z.conj())).collect();
            for w in &orbit {
                c.check(orbit_equivalent(&z, w, tol), || format!("orbit point not equivalent at z={}", z));
                for e in [&x, &y] {
                    c.check(character(&z, e).unwrap() == character(w, e).unwrap(), || {
                        format!("character differs between z={} and {}", z, w)
                    });
                }
            }

            if kind.is_regular() {
                continue;
            }
            let (yp, ym) = decompose_nonregular(&z, tol).unwrap();
            for _ in 0..20 {
                let h = s.self_adjoint(n, 3, 3);
                let m = theta(&z, &h).unwrap();
                match (&yp, &ym) {
                    (RealPoint::Native(yp), RealPoint::Native(ym)) => {
                        let (a, b) = (phi_rep(yp, &h, tol).unwrap(), phi_rep(ym, &h, tol).unwrap());
                        c.check(m.has_eigenvalues(&a, &b, tol), || {
                            format!("eigenvalues differ from phi values at z={}", z)
                        });
                    }
                    _ => {
                        let (yp, ym) = (yp.to_approx(), ym.to_approx());
                        let a: ApproxComplex = phi_rep(&yp, &h, tol).unwrap();
                        let b: ApproxComplex = phi_rep(&ym, &h, tol).unwrap();
                        let ma = theta(&za, &h).unwrap();
                        c.check(ma.has_eigenvalues(&a, &b, tol), || {
                            format!("eigenvalues differ from phi values at z={}", z)
                        });
                    }
                }
            }
        }
    }
    c.note(format!("n={}; sampled Real {} / TorusReal {} / Regular {}", n, tally[0], tally[1], tally[2]));
}

/// Random `Z_2`-homogeneous polynomial with words of length `<= max_deg`.
fn homogeneous(s: &mut Sampler, n: usize, max_deg: usize, odd: bool) -> NCPoly {
    let lens: Vec<usize> = (0..=max_deg).filter(|l| (l % 2 == 1) == odd).collect();
    let mut p = NCPoly::zero();
    for _ in 0..1 + s.index(3) {
        let len = lens[s.index(lens.len())];
        let w = s.word(n, len);
        p.add_term(w, &s.scalar());
    }
    p
}

fn lift_all(a: &Algebra, xs: &[CrossedElem]) -> Vec<NCPoly> {
    xs.iter().map(|x| a.nc_lift(x)).collect()
}

fn graded_bijection(c: &mut Checker, cfg: &VerifyConfig, seed: u64) {
    let mut s = Sampler::new(seed);
    let top = cfg.degree.clamp(2, 5);
    let mut proper = 0;
    for k in 0..20 {
        let n = 2 + k % 2;
        let d = 2 + s.index(top - 1);
        let a = alg(n);

        let gens: Vec<NCPoly> = (0..1 + s.index(2))
            .map(|_| {
                let odd = s.coin(0.5);
                homogeneous(&mut s, n, d - 1, odd)
            })
            .collect();
        let spec = IdealSpec::new(n, gens, d).unwrap();
        let span = ideal_span(&spec);
        if !span.is_full() {
            proper += 1;
        }
        let round =
            graded_to_even(&spec).and_then(|j| even_to_graded(n, &lift_all(&a, &j.basis()), d)).map(|g| ideal_span(&g));
        c.check(round.as_ref() == Ok(&span), || format!("G(F(I)) != I at n={} d={} for {:?}", n, d, spec.generators()));

        let base: Vec<NCPoly> = (0..1 + s.index(2)).map(|_| homogeneous(&mut s, n, d - 2, false)).collect();
        let mut closed = base.clone();
        closed.extend(base.iter().map(|g| a.nc_lift(&a.pi(g).unwrap().gamma())));
        let j = even_ideal_span(n, &closed, d).unwrap();
        let jl = lift_all(&a, &j.basis());
        let back = even_to_graded(n, &jl, d).and_then(|g| graded_to_even(&g));
        c.check(back.as_ref() == Ok(&j), || format!("F(G(J)) != J at n={} d={} for {:?}", n, d, closed));
        let literal = graded_to_even(&IdealSpec::new(n, jl, d).unwrap());
        c.check(back == literal, || format!("F(G(J)) != <J> ∩ A_0 at n={} d={}", n, d));
    }
    c.note(format!("degrees 2..={}; {} of 20 ideals proper at their truncation", top, proper));
}

fn commutators(n: u32) -> Vec<NCPoly> {
    (1..=n).flat_map(|i| (i + 1..=n).map(move |j| NCPoly::word(&[i, j]).sub(&NCPoly::word(&[j, i])))).collect()
}

fn dictionary(c: &mut Checker, seed: u64) {
    let tol = Tolerance::default();
    let mut s = Sampler::new(seed);
    let n = 3;
    let mut reals: Vec<SpherePoint<ExactComplex>> = (0..10).map(|_| s.real_point(n)).collect();
    reals.extend(reals.clone().iter().map(SpherePoint::neg));
    let regulars: Vec<_> = (0..10).map(|_| s.regular_point(n).unwrap()).collect();
    let sample: Vec<_> = reals.iter().chain(&regulars).cloned().collect();

    let comm = IdealSpec::new(n, commutators(n as u32), 4).unwrap();
    let pair = classify_pair(&comm, &sample, tol).unwrap();
    c.check(pair.e.is_empty(), || format!("commutator ideal keeps {} regular points", pair.e.len()));
    c.check(pair.f == reals, || "commutator ideal loses real points".into());
    let sig = sigma_stable(&comm, &sample, tol).unwrap();
    c.check(sig.span_stable && sig.f_symmetric, || format!("commutator ideal not sigma-stable: {:?}", sig));

    let transported = transport_ideal(&[PExpr::p(1, 2).sub(&PExpr::p(2, 1))]);
    let lhs = ideal_span(&IdealSpec::new(2, transported, 4).unwrap());
    let rhs = ideal_span(&IdealSpec::new(2, commutators(2), 4).unwrap());
    c.check(lhs == rhs, || "transported ideal differs from the commutator ideal".into());

    let on_plane = |s: &mut Sampler| {
        let y = s.real_point(2);
        let mut coords = vec![ExactComplex::zero()];
        coords.extend(y.coords().iter().cloned());
        SpherePoint::new(coords, tol).unwrap()
    };
    let mut zs: Vec<SpherePoint<ExactComplex>> = (0..4).map(|_| on_plane(&mut s)).collect();
    for _ in 0..4 {
        let y = on_plane(&mut s);
        let w = s.regular_point(2).unwrap();
        let mut coords = vec![ExactComplex::zero()];
        coords.extend(w.coords().iter().cloned());
        zs.push(SpherePoint::new(coords, tol).unwrap());
        zs.push(y);
    }
    let sample2: Vec<_> = sample.iter().chain(&zs).cloned().collect();
    let sq = IdealSpec::new(n, vec![NCPoly::word(&[1, 1])], 4).unwrap();
    let pair = classify_pair(&sq, &sample2, tol).unwrap();
    let kept: Vec<_> = pair.e.iter().chain(&pair.f).collect();
    c.check(kept.iter().all(|p| p.coords()[0].is_zero()), || "<v1^2> keeps a point with z1 != 0".into());
    let expected = sample2
        .iter()
        .filter(|p| p.coords()[0].is_zero() && !matches!(classify_point(p, tol), PointClass::TorusReal { .. }))
        .count();
    c.check(kept.len() == expected, || format!("<v1^2> keeps {} of {} points with z1 = 0", kept.len(), expected));
    c.check(!pair.e.is_empty(), || "<v1^2> keeps no regular point".into());
}

fn intermediate(c: &mut Checker, seed: u64) {
    let tol = Tolerance::default();
    let n = 3;
    let d = 4;
    for m in 1..=5usize {
        let mut s = Sampler::new(seed.wrapping_add(m as u64 * 7919));
        let mut e: Vec<SpherePoint<ExactComplex>> = Vec::new();
        while e.len() < m {
            let z = s.regular_point(n).unwrap();
            if e.iter().all(|w| !orbit_equivalent(w, &z, tol)) {
                e.push(z);
            }
        }
        let f: Vec<_> = (0..30).map(|_| s.real_point(n)).collect();
        let points: Vec<_> = e.iter().chain(&f).cloned().collect();
        let spec = match vanishing_ideal(n, &points, d) {
            Ok(v) => v.to_spec(),
            Err(err) => {
                c.check(false, || format!("vanishing ideal failed: {}", err));
                continue;
            }
        };
        let units = [ExactComplex::i(), ExactComplex::from_int(-1), -ExactComplex::i()];
        let mut fresh = Vec::new();
        for z in &e {
            let u = &units[s.index(3)];
            fresh.push(z.scale(u));
            fresh.push(z.conj().scale(&units[s.index(3)]));
        }
        let controls: Vec<_> = (0..10).map(|_| s.regular_point(n).unwrap()).collect();
        fresh.extend(controls.iter().cloned());
        fresh.extend((0..10).map(|_| s.real_point(n)));
        let pair = match classify_pair(&spec, &fresh, tol) {
            Ok(p) => p,
            Err(err) => {
                c.check(false, || format!("classify_pair failed: {}", err));
                continue;
            }
        };
        let mut classes: Vec<&SpherePoint<ExactComplex>> = Vec::new();
        for z in &pair.e {
            if classes.iter().all(|w| !orbit_equivalent(w, z, tol)) {
                classes.push(z);
            }
        }
        c.check(classes.len() == m, || format!("m={}: recovered {} orbit classes", m, classes.len()));
        c.check(pair.e.len() == 2 * m, || format!("m={}: kept {} of {} orbit representatives", m, pair.e.len(), 2 * m));
        c.check(classes.iter().all(|w| e.iter().any(|z| orbit_equivalent(z, w, tol))), || {
            format!("m={}: a recovered point lies outside the chosen orbits", m)
        });
        c.check(pair.e.iter().all(|p| !controls.contains(p)), || format!("m={}: a control point survived", m));
        c.note(format!("m={}: {} generators at d={}", m, spec.generators().len(), d));
    }
}

/// Runs the named suite or all of them.
pub fn run_named(key: &str, cfg: &VerifyConfig) -> Result<Vec<SuiteReport>> {
    if key == "all" {
        return Ok(run_all(cfg));
    }
    match suite_index(key) {
        Some(k) => Ok(vec![run_suite(k, cfg)]),
        None => Err(crate::Error::Parse { pos: 0, msg: format!("unknown suite '{}'", key) }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_lookup() {
        assert_eq!(suite_index("1"), Some(1));
        assert_eq!(suite_index("intermediate"), Some(11));
        assert_eq!(suite_index("12"), None);
        assert_eq!(suite_index("nope"), None);
    }

    #[test]
    fn cheap_suites_pass() {
        let cfg = VerifyConfig { n: 2, degree: 3, seed: 1 };
        for k in [1, 4, 5] {
            let r = run_suite(k, &cfg);
            assert!(r.pass(), "{}", r);
        }
    }
}
