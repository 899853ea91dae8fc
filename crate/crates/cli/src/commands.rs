use halflib::parse::{self, Expr, PointCoords};
use halflib::projective::{self, p_to_model};
use halflib::representations::{self, format_approx, RealPoint};
use halflib::sample::Sampler;
use halflib::subspaces::{self, ideal_span, word_span};
use halflib::verify::{self, VerifyConfig};
use halflib::{
    Algebra, ApproxComplex, CrossedElem, Error, ExactComplex, IdealSpec, Mat2, NCPoly, PointClass, Result, Scalar,
    SpherePoint, Tolerance,
};

use crate::report::{Report, Section};
use crate::{Cli, Cmd, Mode, EXIT_FALSE, EXIT_OK};

type Exec = Result<(i32, Report)>;

trait Show {
    fn show(&self) -> String;
}

impl Show for ExactComplex {
    fn show(&self) -> String {
        self.to_string()
    }
}

impl Show for ApproxComplex {
    fn show(&self) -> String {
        format_approx(*self)
    }
}

fn show_point<C: Scalar + Show>(z: &SpherePoint<C>) -> String {
    z.coords().iter().map(Show::show).collect::<Vec<_>>().join(",")
}

fn show_mat<C: Show>(m: &Mat2<C>) -> String {
    format!("[[{}, {}], [{}, {}]]", m.m[0][0].show(), m.m[0][1].show(), m.m[1][0].show(), m.m[1][1].show())
}

enum Point {
    Exact(SpherePoint<ExactComplex>),
    Approx(SpherePoint<ApproxComplex>),
}

struct Ctx<'a> {
    cli: &'a Cli,
    alg: Algebra,
    tol: Tolerance,
}

impl Ctx<'_> {
    /// A `v`/`p`-expression or a `[even] ... [odd] ...` form, as an element.
    fn element(&self, text: &str) -> Result<CrossedElem> {
        if text.trim_start().starts_with('[') {
            return parse::parse_crossed(self.alg.n(), text);
        }
        match parse::parse_expr(text)? {
            Expr::Scalar(c) => Ok(CrossedElem::one(self.alg.n()).scale(&c)),
            Expr::Nc(p) => self.alg.pi(&p),
            Expr::Proj(e) => self.alg.pi(&projective::phi(&e)),
        }
    }

    /// Generators of an ideal, as noncommutative polynomials.
    fn generator(&self, text: &str) -> Result<NCPoly> {
        if text.trim_start().starts_with('[') {
            return Ok(self.alg.nc_lift(&parse::parse_crossed(self.alg.n(), text)?));
        }
        let p = match parse::parse_expr(text)? {
            Expr::Scalar(c) => NCPoly::constant(c),
            Expr::Nc(p) => p,
            Expr::Proj(e) => projective::phi(&e),
        };
        self.alg.check(&p)?;
        Ok(p)
    }

    fn generators(&self, texts: &[String]) -> Result<Vec<NCPoly>> {
        texts.iter().map(|t| self.generator(t)).collect()
    }

    fn point(&self, text: &str) -> Result<Point> {
        let p = match (parse::parse_point(text)?, self.cli.mode) {
            (PointCoords::Exact(c), Mode::Exact) => Point::Exact(SpherePoint::new(c, self.tol)?),
            (PointCoords::Exact(c), Mode::Approx) => {
                Point::Approx(SpherePoint::new(c.iter().map(ExactComplex::to_approx).collect(), self.tol)?)
            }
            (PointCoords::Approx(c), _) => Point::Approx(SpherePoint::new(c, self.tol)?),
        };
        Ok(p)
    }

    /// The same session in the dimension of `p`.
    fn for_point(&self, p: &Point) -> Result<Ctx<'_>> {
        let n = match p {
            Point::Exact(z) => z.n(),
            Point::Approx(z) => z.n(),
        };
        Ok(Ctx { cli: self.cli, alg: Algebra::new(n)?, tol: self.tol })
    }

    fn input(&self) -> Section {
        Section::new("input").field("n", self.alg.n())
    }

    fn elem_section(&self, name: &str, x: &CrossedElem) -> Section {
        Section::new(name)
            .field("canonical", x.to_string())
            .field("even", x.f0().to_string())
            .field("odd", x.f1().to_string())
            .field("lift", self.alg.nc_lift(x).to_string())
    }
}

pub fn execute(cli: &Cli) -> Exec {
    let alg = Algebra::new(cli.n)?;
    let tol = Tolerance::new(cli.eps);
    let ctx = Ctx { cli, alg, tol };
    match &cli.cmd {
        Cmd::Nf { expr } => nf(&ctx, expr),
        Cmd::Eq { lhs, rhs } => eq(&ctx, lhs, rhs),
        Cmd::Grade { expr } => {
            let x = ctx.element(expr)?;
            let (even, odd) = x.grade();
            let r = Report::new(format!("even: {}\nodd: {}", even.f0(), odd.f1()))
                .section(ctx.input().field("expr", expr.as_str()))
                .section(ctx.elem_section("even-part", &even))
                .section(ctx.elem_section("odd-part", &odd));
            Ok((EXIT_OK, r))
        }
        Cmd::Nu { expr } => unary(&ctx, expr, "nu", CrossedElem::nu),
        Cmd::Gamma { expr } => unary(&ctx, expr, "gamma", CrossedElem::gamma),
        Cmd::Phi { expr } => phi(&ctx, expr),
        Cmd::PhiInv { expr } => phi_inv(&ctx, expr),
        Cmd::Theta { point, expr } => {
            let p = ctx.point(point)?;
            let ctx = ctx.for_point(&p)?;
            let x = ctx.element(expr)?;
            match p {
                Point::Exact(z) => theta(&ctx, &z, &x, expr),
                Point::Approx(z) => theta(&ctx, &z, &x, expr),
            }
        }
        Cmd::Phirep { point, expr } => {
            let p = ctx.point(point)?;
            let ctx = ctx.for_point(&p)?;
            let x = ctx.element(expr)?;
            match p {
                Point::Exact(z) => phirep(&ctx, &z, &x, expr),
                Point::Approx(z) => phirep(&ctx, &z, &x, expr),
            }
        }
        Cmd::Char { point, expr } => {
            let p = ctx.point(point)?;
            let ctx = ctx.for_point(&p)?;
            let x = ctx.element(expr)?;
            match p {
                Point::Exact(z) => character(&ctx, &z, &x, expr),
                Point::Approx(z) => character(&ctx, &z, &x, expr),
            }
        }
        Cmd::Classify { point } => {
            let p = ctx.point(point)?;
            let ctx = ctx.for_point(&p)?;
            match p {
                Point::Exact(z) => classify(&ctx, &z),
                Point::Approx(z) => classify(&ctx, &z),
            }
        }
        Cmd::Orbit { first, second } => {
            let (a, b) = (ctx.point(first)?, ctx.point(second)?);
            let ctx = ctx.for_point(&a)?;
            match (a, b) {
                (Point::Exact(a), Point::Exact(b)) => orbit(&ctx, &a, &b),
                (a, b) => orbit(&ctx, &approx(a), &approx(b)),
            }
        }
        Cmd::Span { gens, words } => span(&ctx, gens, *words),
        Cmd::Member { expr, gens } => member(&ctx, expr, gens),
        Cmd::Graded { gens, even } => graded(&ctx, gens, *even),
        Cmd::Pair { gens, points, samples } => pair(&ctx, gens, points, *samples),
        Cmd::Vanish { points } => vanish(&ctx, points),
        Cmd::Projcheck => projcheck(&ctx),
        Cmd::Verify { suite } => run_verify(&ctx, suite),
    }
}

fn approx(p: Point) -> SpherePoint<ApproxComplex> {
    match p {
        Point::Exact(z) => z.to_approx(),
        Point::Approx(z) => z,
    }
}

fn nf(ctx: &Ctx, expr: &str) -> Exec {
    let x = ctx.element(expr)?;
    let mut input = ctx.input().field("expr", expr);
    if let Expr::Proj(e) = parse::parse_expr(expr)? {
        input = input.field("model", p_to_model(ctx.alg.n(), &e)?.to_string());
    }
    let degree = x.degree().map_or(-1, i64::from);
    let mut out = ctx.elem_section("normal-form", &x);
    out.fields.push(("degree".into(), crate::Value::Int(degree)));
    let r = Report::new(format!("{}\nlift: {}", x, ctx.alg.nc_lift(&x))).section(input).section(out);
    Ok((EXIT_OK, r))
}

fn eq(ctx: &Ctx, lhs: &str, rhs: &str) -> Exec {
    let a = ctx.element(lhs)?;
    let b = ctx.element(rhs)?;
    let diff = a.sub(&b);
    let equal = diff.is_zero();
    let r = Report::new(if equal { "equal" } else { "not equal" })
        .section(ctx.input().field("lhs", lhs).field("rhs", rhs))
        .section(Section::new("result").field("equal", equal).field("difference", diff.to_string()));
    Ok((if equal { EXIT_OK } else { EXIT_FALSE }, r))
}

fn unary(ctx: &Ctx, expr: &str, name: &str, f: fn(&CrossedElem) -> CrossedElem) -> Exec {
    let x = ctx.element(expr)?;
    let y = f(&x);
    let r = Report::new(format!("{}\nlift: {}", y, ctx.alg.nc_lift(&y)))
        .section(ctx.input().field("expr", expr))
        .section(ctx.elem_section(name, &y));
    Ok((EXIT_OK, r))
}

fn phi(ctx: &Ctx, expr: &str) -> Exec {
    let e = parse::parse_p(expr)?;
    let image = projective::phi(&e);
    let x = ctx.alg.pi(&image)?;
    let r = Report::new(format!("{}\nnormal form: {}", image, x))
        .section(ctx.input().field("expr", expr).field("parsed", e.to_string()))
        .section(
            Section::new("phi")
                .field("image", image.to_string())
                .field("canonical", x.to_string())
                .field("model", p_to_model(ctx.alg.n(), &e)?.to_string()),
        );
    Ok((EXIT_OK, r))
}

fn phi_inv(ctx: &Ctx, expr: &str) -> Exec {
    let x = ctx.element(expr)?;
    let f = projective::phi_inv(&x)?;
    let e = projective::from_model(&f)?;
    let r = Report::new(e.to_string())
        .section(ctx.input().field("expr", expr).field("canonical", x.to_string()))
        .section(Section::new("phi-inv").field("model", f.to_string()).field("projective", e.to_string()));
    Ok((EXIT_OK, r))
}

fn point_section<C: Scalar + Show>(ctx: &Ctx, z: &SpherePoint<C>) -> Section {
    let class = representations::classify_point(z, ctx.tol);
    Section::new("point").field("coords", show_point(z)).field("exact", C::EXACT).field("class", class.name())
}

fn theta<C: Scalar + Show>(ctx: &Ctx, z: &SpherePoint<C>, x: &CrossedElem, expr: &str) -> Exec {
    let m = representations::theta(z, x)?;
    let r = Report::new(show_mat(&m)).section(ctx.input().field("expr", expr)).section(point_section(ctx, z)).section(
        Section::new("theta")
            .field("matrix", show_mat(&m))
            .field("trace", m.trace().show())
            .field("det", m.det().show()),
    );
    Ok((EXIT_OK, r))
}

fn phirep<C: Scalar + Show>(ctx: &Ctx, y: &SpherePoint<C>, x: &CrossedElem, expr: &str) -> Exec {
    let v = representations::phi_rep(y, x, ctx.tol)?;
    let r = Report::new(v.show())
        .section(ctx.input().field("expr", expr))
        .section(point_section(ctx, y))
        .section(Section::new("phi").field("value", v.show()));
    Ok((EXIT_OK, r))
}

fn character<C: Scalar + Show>(ctx: &Ctx, z: &SpherePoint<C>, x: &CrossedElem, expr: &str) -> Exec {
    let v = representations::character(z, x)?;
    let r = Report::new(v.show())
        .section(ctx.input().field("expr", expr))
        .section(point_section(ctx, z))
        .section(Section::new("character").field("value", v.show()));
    Ok((EXIT_OK, r))
}

fn classify<C: Scalar + Show + representations::Phase>(ctx: &Ctx, z: &SpherePoint<C>) -> Exec {
    let class = representations::classify_point(z, ctx.tol);
    let mut s = Section::new("classify")
        .field("class", class.name())
        .field("irreducible", representations::is_irreducible(z, ctx.tol))
        .field("commutant_dimension", representations::commutant_dimension(z, ctx.tol));
    if let PointClass::TorusReal { witness } = class {
        s = s.field("witness", format_approx(witness));
    }
    if !class.is_regular() {
        let (a, b) = representations::decompose_nonregular(z, ctx.tol)?;
        let show = |p: &RealPoint<C>| match p {
            RealPoint::Native(y) => show_point(y),
            RealPoint::Approx(y) => show_point(y),
        };
        s = s.field("summands", vec![show(&a), show(&b)]);
    }
    let r = Report::new(class.name()).section(point_section(ctx, z)).section(s);
    Ok((EXIT_OK, r))
}

fn orbit<C: Scalar + Show>(ctx: &Ctx, a: &SpherePoint<C>, b: &SpherePoint<C>) -> Exec {
    if a.n() != b.n() {
        return Err(Error::DimensionMismatch { expected: a.n(), found: b.n() });
    }
    let same = representations::orbit_equivalent(a, b, ctx.tol);
    let r = Report::new(if same { "equivalent" } else { "not equivalent" })
        .section(ctx.input().field("first", show_point(a)).field("second", show_point(b)))
        .section(Section::new("orbit").field("equivalent", same));
    Ok((if same { EXIT_OK } else { EXIT_FALSE }, r))
}

fn spec(ctx: &Ctx, gens: &[String]) -> Result<IdealSpec> {
    IdealSpec::new(ctx.alg.n(), ctx.generators(gens)?, ctx.cli.degree)
}

fn ideal_section(ctx: &Ctx, spec: &IdealSpec) -> Section {
    let gens: Vec<String> = spec.generators().iter().map(ToString::to_string).collect();
    ctx.input().field("degree", spec.degree()).field("generators", gens)
}

fn span(ctx: &Ctx, gens: &[String], words: bool) -> Exec {
    let spec = spec(ctx, gens)?;
    let v = if words { word_span(&spec) } else { ideal_span(&spec) };
    let basis: Vec<String> = v.basis().iter().map(ToString::to_string).collect();
    let r = Report::new(format!("dim {}", v.dim())).section(ideal_section(ctx, &spec)).section(
        Section::new("span")
            .field("semantics", if words { "words" } else { "saturated" })
            .field("dim", v.dim())
            .field("ambient_dim", subspaces::truncation_basis(ctx.alg.n(), spec.degree()).len())
            .field("nu_stable", v.is_nu_stable())
            .field("gamma_stable", v.is_gamma_stable())
            .field("basis", basis),
    );
    Ok((EXIT_OK, r))
}

fn member(ctx: &Ctx, expr: &str, gens: &[String]) -> Exec {
    let spec = spec(ctx, gens)?;
    let x = ctx.generator(expr)?;
    let inside = subspaces::membership(&spec, &x)?;
    let r = Report::new(if inside { "member" } else { "not a member" })
        .section(ideal_section(ctx, &spec).field("expr", expr))
        .section(Section::new("member").field("member", inside));
    Ok((if inside { EXIT_OK } else { EXIT_FALSE }, r))
}

fn graded(ctx: &Ctx, gens: &[String], even: bool) -> Exec {
    if even {
        let g = ctx.generators(gens)?;
        let spec = subspaces::even_to_graded(ctx.alg.n(), &g, ctx.cli.degree)?;
        let v = ideal_span(&spec);
        let lifted: Vec<String> = spec.generators().iter().map(ToString::to_string).collect();
        let r = Report::new(format!("dim {}", v.dim()))
            .section(ctx.input().field("degree", ctx.cli.degree).field("even_generators", gens.to_vec()))
            .section(
                Section::new("graded")
                    .field("generators", lifted)
                    .field("dim", v.dim())
                    .field("even_dim", v.even_part().dim())
                    .field("odd_dim", v.odd_part().dim()),
            );
        return Ok((EXIT_OK, r));
    }
    let spec = spec(ctx, gens)?;
    let is_graded = subspaces::is_graded(&spec);
    let mut s = Section::new("graded").field("graded", is_graded);
    if is_graded {
        let v = ideal_span(&spec);
        let j = subspaces::graded_to_even(&spec)?;
        s = s
            .field("dim", v.dim())
            .field("even_dim", j.dim())
            .field("even_basis", j.basis().iter().map(|x| ctx.alg.nc_lift(x).to_string()).collect::<Vec<_>>());
    }
    let r = Report::new(if is_graded { "graded" } else { "not graded" }).section(ideal_section(ctx, &spec)).section(s);
    Ok((if is_graded { EXIT_OK } else { EXIT_FALSE }, r))
}

/// Real points with their antipodes, torus-real points and regular points.
fn default_sample(n: usize, seed: u64, k: usize) -> Vec<SpherePoint<ExactComplex>> {
    let mut s = Sampler::new(seed);
    let mut out = Vec::new();
    for _ in 0..k {
        let y = s.real_point(n);
        out.push(y.neg());
        out.push(y);
    }
    for _ in 0..k {
        out.push(s.torus_real_point(n));
    }
    for _ in 0..k {
        if let Some(z) = s.regular_point(n) {
            out.push(z);
        }
    }
    out
}

fn pair(ctx: &Ctx, gens: &[String], points: &[String], k: usize) -> Exec {
    let spec = spec(ctx, gens)?;
    let mut exact = Vec::new();
    let mut approx_pts = Vec::new();
    if points.is_empty() {
        exact = default_sample(ctx.alg.n(), ctx.cli.seed, k);
    }
    for p in points {
        match ctx.point(p)? {
            Point::Exact(z) => exact.push(z),
            Point::Approx(z) => approx_pts.push(z),
        }
    }
    if !approx_pts.is_empty() || ctx.cli.mode == Mode::Approx {
        approx_pts.extend(exact.iter().map(SpherePoint::to_approx));
        pair_report(ctx, &spec, &approx_pts)
    } else {
        pair_report(ctx, &spec, &exact)
    }
}

fn pair_report<C: Scalar + Show>(ctx: &Ctx, spec: &IdealSpec, sample: &[SpherePoint<C>]) -> Exec {
    let v = ideal_span(spec);
    let pair = subspaces::classify_pair(spec, sample, ctx.tol)?;
    let sigma = subspaces::sigma_stable(spec, sample, ctx.tol)?;
    let pts = |xs: &[SpherePoint<C>]| xs.iter().map(show_point).collect::<Vec<_>>();
    let headline = format!(
        "E: {} points, F: {} points, {}",
        pair.e.len(),
        pair.f.len(),
        if pair.non_classical() { "non-classical" } else { "classical" }
    );
    let r = Report::new(headline)
        .section(ideal_section(ctx, spec).field("seed", ctx.cli.seed).field("sample_size", sample.len()))
        .section(
            Section::new("ideal")
                .field("dim", v.dim())
                .field("graded", subspaces::is_graded(spec))
                .field("sigma_stable", sigma.span_stable)
                .field("f_symmetric", sigma.f_symmetric),
        )
        .section(
            Section::new("pair")
                .field("e", pts(&pair.e))
                .field("f", pts(&pair.f))
                .field("skipped", pair.skipped)
                .field("non_classical", pair.non_classical()),
        );
    Ok((EXIT_OK, r))
}

fn vanish(ctx: &Ctx, points: &[String]) -> Exec {
    let pts = points
        .iter()
        .map(|p| match ctx.point(p)? {
            Point::Exact(z) => Ok(z),
            Point::Approx(_) => Err(Error::ExactRequired),
        })
        .collect::<Result<Vec<_>>>()?;
    let v = subspaces::vanishing_ideal(ctx.alg.n(), &pts, ctx.cli.degree)?;
    let basis: Vec<String> = v.basis().iter().map(|x| ctx.alg.nc_lift(x).to_string()).collect();
    let r = Report::new(format!("dim {}", v.dim()))
        .section(
            ctx.input().field("degree", ctx.cli.degree).field("points", pts.iter().map(show_point).collect::<Vec<_>>()),
        )
        .section(Section::new("vanishing").field("dim", v.dim()).field("basis", basis));
    Ok((EXIT_OK, r))
}

fn projcheck(ctx: &Ctx) -> Exec {
    let rep = projective::check_projector_relations(ctx.alg.n())?;
    let mut s = Section::new("projcheck");
    for c in &rep.checks {
        s = s.field(&c.name, c.pass);
    }
    s = s.field("all_pass", rep.all_pass());
    let lines: Vec<String> =
        rep.checks.iter().map(|c| format!("{}: {}", c.name, if c.pass { "ok" } else { "FAILED" })).collect();
    let r = Report::new(lines.join("\n")).section(ctx.input()).section(s);
    Ok((if rep.all_pass() { EXIT_OK } else { EXIT_FALSE }, r))
}

fn run_verify(ctx: &Ctx, suite: &str) -> Exec {
    let cfg = VerifyConfig { n: ctx.cli.n, degree: ctx.cli.degree, seed: ctx.cli.seed };
    let reports = verify::run_named(suite, &cfg)?;
    let all = reports.iter().all(|r| r.pass());
    let lines: Vec<String> = reports.iter().map(ToString::to_string).collect();
    let mut r = Report::new(lines.join("\n"));
    r.sections.push(
        Section::new("verify").field("n", cfg.n).field("degree", cfg.degree).field("seed", cfg.seed).field("pass", all),
    );
    for rep in &reports {
        r.sections.push(
            Section::new(&format!("suites.{}", rep.name))
                .field("index", rep.index)
                .field("pass", rep.pass())
                .field("checks", rep.checks)
                .field("failures", rep.failures.clone())
                .field("notes", rep.notes.clone()),
        );
    }
    Ok((if all { EXIT_OK } else { EXIT_FALSE }, r))
}
