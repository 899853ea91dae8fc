//! Degree-truncated two-sided ideals, the graded/even correspondence, and the
//! finite-sample `(E, F)` invariant of a quotient.
//!
//! Let `F_d` be the span of the reduced monomials of degree `<= d`. The span
//! of an ideal at degree `d` is the smallest subspace `V` of `F_d` that
//! contains the generators and satisfies
//! `(sum_i v_i V + V v_i + sum_{i,j} v_i V v_j) ∩ F_d ⊆ V`.
//! Products may leave `F_d` and come back through cancellation, so this can be
//! larger than the span of the words `m1 g m2` of total length `<= d`
//! ([`word_span`]); both are contained in `I ∩ F_d`.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::algebra::{Algebra, CrossedElem, NCPoly};
use crate::linalg::{self, Echelon, SparseVec};
use crate::representations::{classify_point, phi_rep, theta, PointClass, SpherePoint};
use crate::scalars::{ExactComplex, Scalar, Tolerance};
use crate::sphere::ZMonomial;
use crate::{Error, Result};

/// Generators of a two-sided ideal together with the truncation degree.
#[derive(Clone, Debug, PartialEq)]
pub struct IdealSpec {
    n: usize,
    generators: Vec<NCPoly>,
    degree: usize,
}

impl IdealSpec {
    /// Generators above the truncation degree are allowed; they only enter
    /// through cancellations that land back in `F_d`.
    pub fn new(n: usize, generators: Vec<NCPoly>, degree: usize) -> Result<Self> {
        let alg = Algebra::new(n)?;
        for g in &generators {
            alg.check(g)?;
        }
        Ok(IdealSpec { n, generators, degree })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[NCPoly] {
        &self.generators
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    fn algebra(&self) -> Algebra {
        Algebra::new(self.n).expect("validated")
    }

    fn elements(&self) -> Vec<CrossedElem> {
        let alg = self.algebra();
        self.generators.iter().map(|g| alg.pi_unchecked(g)).collect()
    }
}

/// A subspace of `F_d` in reduced echelon form; equal spans compare equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanBasis {
    n: usize,
    degree: usize,
    echelon: Echelon<ZMonomial>,
}

impl SpanBasis {
    pub fn empty(n: usize, degree: usize) -> Self {
        SpanBasis { n, degree, echelon: Echelon::new() }
    }

    pub fn from_elements(n: usize, degree: usize, xs: &[CrossedElem]) -> Self {
        let mut echelon = Echelon::new();
        for x in xs {
            echelon.insert(&x.to_sparse());
        }
        SpanBasis { n, degree, echelon }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The truncation degree this span refers to.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.echelon.rank()
    }

    pub fn is_empty(&self) -> bool {
        self.echelon.is_empty()
    }

    pub fn echelon(&self) -> &Echelon<ZMonomial> {
        &self.echelon
    }

    /// Basis elements, largest pivot first.
    pub fn basis(&self) -> Vec<CrossedElem> {
        self.echelon.rows().map(|(_, r)| CrossedElem::from_sparse(self.n, r)).collect()
    }

    pub fn contains(&self, x: &CrossedElem) -> bool {
        self.echelon.contains(&x.to_sparse())
    }

    pub fn contains_span(&self, other: &SpanBasis) -> bool {
        self.echelon.contains_span(&other.echelon)
    }

    /// Whether the span is the whole truncation `F_d`.
    pub fn is_full(&self) -> bool {
        self.dim() == truncation_basis(self.n, self.degree).len()
    }

    pub fn is_nu_stable(&self) -> bool {
        self.basis().iter().all(|b| self.contains(&b.nu()))
    }

    /// Meaningful for even spans; odd elements have no `gamma` image here.
    pub fn is_gamma_stable(&self) -> bool {
        self.basis().iter().all(|b| self.contains(&b.gamma()))
    }

    /// Span of the even components of the basis.
    pub fn even_part(&self) -> SpanBasis {
        let evens: Vec<CrossedElem> = self.basis().iter().map(|b| b.grade().0).collect();
        SpanBasis::from_elements(self.n, self.degree, &evens)
    }

    pub fn odd_part(&self) -> SpanBasis {
        let odds: Vec<CrossedElem> = self.basis().iter().map(|b| b.grade().1).collect();
        SpanBasis::from_elements(self.n, self.degree, &odds)
    }

    /// An `IdealSpec` generated by lifts of the basis elements.
    pub fn to_spec(&self) -> IdealSpec {
        let alg = Algebra::new(self.n).expect("n >= 1");
        let gens = self.basis().iter().map(|b| alg.nc_lift(b)).collect();
        IdealSpec { n: self.n, generators: gens, degree: self.degree }
    }
}

/// Reduced monomials of degree `<= d` with weight 0 or 1: the coordinates of
/// `F_d`, in increasing order.
pub fn truncation_basis(n: usize, d: usize) -> Vec<ZMonomial> {
    fn rec(exps: &mut Vec<u32>, left: u32, out: &mut Vec<Vec<u32>>, len: usize) {
        if exps.len() == len {
            out.push(exps.clone());
            return;
        }
        for e in 0..=left {
            // z_1 conj(z_1) never survives reduction
            if exps.len() == 1 && exps[0] > 0 && e > 0 {
                break;
            }
            exps.push(e);
            rec(exps, left - e, out, len);
            exps.pop();
        }
    }
    let mut raw = Vec::new();
    rec(&mut Vec::new(), d as u32, &mut raw, 2 * n);
    let mut out: Vec<ZMonomial> = raw
        .into_iter()
        .map(|e| {
            let a: Vec<u32> = e.iter().step_by(2).copied().collect();
            let b: Vec<u32> = e.iter().skip(1).step_by(2).copied().collect();
            ZMonomial::new(&a, &b)
        })
        .filter(|m| m.weight() == 0 || m.weight() == 1)
        .collect();
    out.sort();
    out
}

#[derive(Clone)]
enum Step {
    Left(CrossedElem),
    Right(CrossedElem),
    Both(CrossedElem, CrossedElem),
}

impl Step {
    fn apply(&self, x: &CrossedElem) -> CrossedElem {
        match self {
            Step::Left(a) => a.mul(x),
            Step::Right(b) => x.mul(b),
            Step::Both(a, b) => a.mul(x).mul(b),
        }
    }
}

fn pivot_degree(k: &ZMonomial) -> usize {
    k.degree() as usize
}

/// Least `V ⊆ F_d` containing the seeds with `(sum_s s(V)) ∩ F_d ⊆ V`.
/// Seeds above `d` are kept in the ambient span only.
fn saturate(n: usize, seeds: &[CrossedElem], steps: &[Step], d: usize) -> Echelon<ZMonomial> {
    let mut ambient: Echelon<ZMonomial> = Echelon::new();
    for s in seeds {
        ambient.insert(&s.to_sparse());
    }
    let mut done: Echelon<ZMonomial> = Echelon::new();
    loop {
        let fresh: Vec<SparseVec<ZMonomial>> = ambient
            .rows()
            .filter(|(k, _)| pivot_degree(k) <= d)
            .map(|(_, r)| r.clone())
            .filter(|r| done.insert(r))
            .collect();
        if fresh.is_empty() {
            break;
        }
        let products: Vec<SparseVec<ZMonomial>> = fresh
            .par_iter()
            .flat_map_iter(|r| {
                let x = CrossedElem::from_sparse(n, r);
                steps.iter().map(move |s| s.apply(&x).to_sparse()).collect::<Vec<_>>()
            })
            .collect();
        for p in &products {
            ambient.insert(p);
        }
    }
    done
}

fn letter_steps(alg: &Algebra) -> Vec<Step> {
    let n = alg.n();
    let gens: Vec<CrossedElem> = (1..=n).map(|i| alg.generator(i)).collect();
    let mut steps: Vec<Step> = gens.iter().cloned().map(Step::Left).collect();
    steps.extend(gens.iter().cloned().map(Step::Right));
    for a in &gens {
        for b in &gens {
            steps.push(Step::Both(a.clone(), b.clone()));
        }
    }
    steps
}

/// The ideal generated by `spec` at degree `spec.degree()`.
pub fn ideal_span(spec: &IdealSpec) -> SpanBasis {
    let alg = spec.algebra();
    let echelon = saturate(spec.n, &spec.elements(), &letter_steps(&alg), spec.degree);
    SpanBasis { n: spec.n, degree: spec.degree, echelon }
}

/// Span of `pi(m1 g m2)` over words with `|m1| + deg g + |m2| <= d`, where
/// `deg g` is the length of the longest word of `g`.
pub fn word_span(spec: &IdealSpec) -> SpanBasis {
    let alg = spec.algebra();
    let n = spec.n;
    let elems = spec.elements();
    let gens: Vec<CrossedElem> = (1..=n).map(|i| alg.generator(i)).collect();
    let mut level: Echelon<ZMonomial> = Echelon::new();
    for t in 0..=spec.degree {
        let prev: Vec<CrossedElem> = level.rows().map(|(_, r)| CrossedElem::from_sparse(n, r)).collect();
        let products: Vec<SparseVec<ZMonomial>> = prev
            .par_iter()
            .flat_map_iter(|x| {
                gens.iter().flat_map(|g| [g.mul(x).to_sparse(), x.mul(g).to_sparse()]).collect::<Vec<_>>()
            })
            .collect();
        let mut next = level.clone();
        for p in &products {
            next.insert(p);
        }
        for (g, x) in spec.generators.iter().zip(&elems) {
            if g.degree() == t {
                next.insert(&x.to_sparse());
            }
        }
        level = next;
    }
    SpanBasis { n, degree: spec.degree, echelon: level }
}

/// The ideal of the even part generated by even elements, at degree `d`:
/// closure under multiplication by the `v_i v_j`.
pub fn even_ideal_span(n: usize, gens: &[NCPoly], d: usize) -> Result<SpanBasis> {
    let alg = Algebra::new(n)?;
    let mut elems = Vec::with_capacity(gens.len());
    for (index, g) in gens.iter().enumerate() {
        let x = alg.pi(g)?;
        if !x.f1().is_zero() {
            return Err(Error::OddGenerator { index });
        }
        elems.push(x);
    }
    let steps: Vec<Step> = (1..=n as u32)
        .flat_map(|i| (1..=n as u32).map(move |j| (i, j)))
        .map(|(i, j)| Step::Left(alg.pi_word_unchecked(&crate::algebra::NCWord(vec![i, j]))))
        .collect();
    let echelon = saturate(n, &elems, &steps, d);
    Ok(SpanBasis { n, degree: d, echelon })
}

/// Whether `pi(x)` lies in the span of the ideal at degree `d`.
pub fn membership(spec: &IdealSpec, x: &NCPoly) -> Result<bool> {
    if x.degree() > spec.degree {
        return Err(Error::DegreeOverflow { degree: x.degree(), bound: spec.degree });
    }
    let px = spec.algebra().pi(x)?;
    Ok(ideal_span(spec).contains(&px))
}

/// `I = I_0 + I_1`: the span is stable under the sign automorphism.
pub fn is_graded(spec: &IdealSpec) -> bool {
    ideal_span(spec).is_nu_stable()
}

/// `I -> I_0`.
pub fn graded_to_even(spec: &IdealSpec) -> Result<SpanBasis> {
    let span = ideal_span(spec);
    if !span.is_nu_stable() {
        return Err(Error::NotGraded { degree: spec.degree });
    }
    Ok(span.even_part())
}

/// `J -> J + A_1 J`, as the `IdealSpec` generated by `J` and all `v_i g`.
pub fn even_to_graded(n: usize, gens_even: &[NCPoly], d: usize) -> Result<IdealSpec> {
    let span = even_ideal_span(n, gens_even, d)?;
    if !span.is_gamma_stable() {
        return Err(Error::GammaUnstable { degree: d });
    }
    let mut gens = gens_even.to_vec();
    for i in 1..=n as u32 {
        gens.extend(gens_even.iter().map(|g| NCPoly::var(i).mul(g)));
    }
    IdealSpec::new(n, gens, d)
}

/// Sampled `(E, F)`: regular points whose `theta` kills every generator and
/// real points whose `phi` does. Torus-real points belong to neither and are
/// counted in `skipped`.
#[derive(Clone, Debug, PartialEq)]
pub struct PairEF<C> {
    pub e: Vec<SpherePoint<C>>,
    pub f: Vec<SpherePoint<C>>,
    pub skipped: usize,
}

impl<C> PairEF<C> {
    /// Some irreducible 2-dimensional representation survives.
    pub fn non_classical(&self) -> bool {
        !self.e.is_empty()
    }
}

fn check_points<C: Scalar>(n: usize, pts: &[SpherePoint<C>]) -> Result<()> {
    match pts.iter().find(|p| p.n() != n) {
        Some(p) => Err(Error::DimensionMismatch { expected: n, found: p.n() }),
        None => Ok(()),
    }
}

pub fn classify_pair<C: Scalar>(spec: &IdealSpec, sample: &[SpherePoint<C>], tol: Tolerance) -> Result<PairEF<C>> {
    check_points(spec.n, sample)?;
    let gens = spec.elements();
    let tags: Vec<(PointClass, bool)> = sample
        .par_iter()
        .map(|z| {
            let class = classify_point(z, tol);
            let kills = match class {
                PointClass::Regular => gens.iter().all(|g| theta(z, g).expect("checked dimension").is_zero(tol)),
                PointClass::Real => gens.iter().all(|g| phi_rep(z, g, tol).expect("real point").near_zero(tol)),
                PointClass::TorusReal { .. } => false,
            };
            (class, kills)
        })
        .collect();
    let mut out = PairEF { e: Vec::new(), f: Vec::new(), skipped: 0 };
    for (z, (class, kills)) in sample.iter().zip(tags) {
        match class {
            PointClass::Regular if kills => out.e.push(z.clone()),
            PointClass::Real if kills => out.f.push(z.clone()),
            PointClass::TorusReal { .. } => out.skipped += 1,
            _ => {}
        }
    }
    Ok(out)
}

/// `span_stable`: the truncated ideal is stable under the sign automorphism.
/// `f_symmetric`: every sampled `y` in `F` has `-y` in `F` as well.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SigmaReport {
    pub span_stable: bool,
    pub f_symmetric: bool,
}

pub fn sigma_stable<C: Scalar>(spec: &IdealSpec, sample: &[SpherePoint<C>], tol: Tolerance) -> Result<SigmaReport> {
    let pair = classify_pair(spec, sample, tol)?;
    let gens = spec.elements();
    let f_symmetric = pair.f.iter().all(|y| {
        let my = y.neg();
        gens.iter().all(|g| phi_rep(&my, g, tol).expect("real point").near_zero(tol))
    });
    Ok(SigmaReport { span_stable: ideal_span(spec).is_nu_stable(), f_symmetric })
}

/// Elements of `F_d` vanishing at the points: real points impose `phi_y = 0`,
/// the others all four entries of `theta_z`.
pub fn vanishing_ideal(n: usize, points: &[SpherePoint<ExactComplex>], d: usize) -> Result<SpanBasis> {
    check_points(n, points)?;
    let basis = truncation_basis(n, d);
    let tol = Tolerance::default();
    let rows: Vec<Vec<Vec<ExactComplex>>> = points
        .par_iter()
        .map(|z| {
            let zb: Vec<ExactComplex> = z.coords().iter().map(ExactComplex::conj).collect();
            let at_z: Vec<ExactComplex> = basis.iter().map(|m| m.eval(z.coords(), &zb)).collect();
            if classify_point(z, tol) == PointClass::Real {
                return vec![at_z];
            }
            let at_zb: Vec<ExactComplex> = basis.iter().map(|m| m.eval(&zb, z.coords())).collect();
            let mask = |v: &[ExactComplex], w: i64| -> Vec<ExactComplex> {
                basis
                    .iter()
                    .zip(v)
                    .map(|(m, x)| if m.weight() == w { x.clone() } else { ExactComplex::zero() })
                    .collect()
            };
            vec![mask(&at_z, 0), mask(&at_z, 1), mask(&at_zb, 1), mask(&at_zb, 0)]
        })
        .collect();
    let rows: Vec<Vec<ExactComplex>> = rows.into_iter().flatten().collect();
    let kernel = if rows.is_empty() {
        (0..basis.len())
            .map(|k| {
                (0..basis.len()).map(|j| if j == k { ExactComplex::one() } else { ExactComplex::zero() }).collect()
            })
            .collect()
    } else {
        linalg::kernel(&rows, basis.len())
    };
    let mut echelon = Echelon::new();
    for v in kernel {
        let sparse: BTreeMap<ZMonomial, ExactComplex> =
            basis.iter().cloned().zip(v).filter(|(_, c)| !c.is_zero()).collect();
        echelon.insert(&sparse);
    }
    Ok(SpanBasis { n, degree: d, echelon })
}
