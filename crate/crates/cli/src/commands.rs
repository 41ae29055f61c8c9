//! Subcommands. Each returns a [`Report`]; the binary maps errors and
//! inconsistent reports to exit codes.

use lgcone_core::cohomology::{Cohomology, Theory};
use lgcone_core::cones::{self, Certificate, ConeKind, Membership};
use lgcone_core::exactla::{gauss, qi, Gaussian, Rational};
use lgcone_core::exterior::{Form, HermitianMetric, LieAlgebra, Manifold};
use lgcone_core::models::{self, NamedModel, Source};
use num::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::parse::{self, ParseError, Presentation};
use crate::report::{Provenance, Report};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(#[from] ParseError),
    /// Structurally well-formed input that fails validation.
    #[error("line {line}: {message}")]
    Invalid { line: usize, message: String },
    #[error("{0}")]
    Usage(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Inconsistent(_) => 3,
            _ => 2,
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct Options {
    pub theory: Option<Theory>,
    pub bidegree: Option<(usize, usize)>,
    pub degree: Option<usize>,
    pub seed: u64,
}

pub fn parse_theory(s: &str) -> Result<Theory, CliError> {
    match s {
        "dr" => Ok(Theory::DeRham),
        "dolbeault" => Ok(Theory::Dolbeault),
        "bc" => Ok(Theory::BottChern),
        "ae" => Ok(Theory::Aeppli),
        _ => Err(CliError::Usage(format!(
            "unknown theory '{s}' (expected dr, dolbeault, bc or ae)"
        ))),
    }
}

pub fn parse_bidegree(s: &str) -> Result<(usize, usize), CliError> {
    let bad = || CliError::Usage(format!("bad bidegree '{s}' (expected p,q)"));
    let (p, q) = s.split_once(',').ok_or_else(bad)?;
    Ok((
        p.trim().parse().map_err(|_| bad())?,
        q.trim().parse().map_err(|_| bad())?,
    ))
}

/// A validated input file.
pub struct Loaded {
    pub presentation: Presentation,
    pub manifold: Manifold,
    pub metrics: Vec<(String, HermitianMetric)>,
    /// The bundled model with the same structure, if any.
    pub model: Option<NamedModel>,
}

impl Loaded {
    fn names(&self) -> &[String] {
        self.manifold.names()
    }
}

pub fn load(src: &str) -> Result<Loaded, CliError> {
    let p = parse::parse(src)?;
    let algebra =
        LieAlgebra::new(&p.name, p.names.clone(), p.de.clone()).map_err(|e| CliError::Invalid {
            line: 1,
            message: e.to_string(),
        })?;
    let report = algebra.validate();
    if let Some((k, f)) = report.jacobi_failures.first() {
        return Err(CliError::Invalid {
            line: p.de_lines[*k],
            message: format!("d^2 != 0: d(d {}) = {}", p.names[*k], f.display(&p.names)),
        });
    }
    if !report.modular_form.is_zero() {
        // Point at the first generator whose differential contributes.
        let line = p
            .de_lines
            .iter()
            .zip(&p.de)
            .find(|(_, f)| !f.is_zero())
            .map(|(l, _)| *l)
            .unwrap_or(1);
        return Err(CliError::Invalid {
            line,
            message: format!(
                "not unimodular: modular form {}",
                report.modular_form.display(&p.names)
            ),
        });
    }
    // Integrability failures name a frame covector z_a, so they too are
    // reported at the J line.
    let manifold = Manifold::new(algebra, p.j.clone()).map_err(|e| CliError::Invalid {
        line: p.j_line,
        message: e.to_string(),
    })?;
    let mut metrics = Vec::new();
    for ((label, omega), line) in p.metrics.iter().zip(&p.metric_lines) {
        let g = manifold.metric(omega).map_err(|e| CliError::Invalid {
            line: *line,
            message: format!("metric {label}: {e}"),
        })?;
        metrics.push((label.clone(), g));
    }
    if metrics.is_empty() {
        metrics.push(("standard".to_string(), manifold.standard_metric()));
    }
    let model = recognize(&manifold);
    Ok(Loaded {
        presentation: p,
        manifold,
        metrics,
        model,
    })
}

pub fn load_file(path: &str) -> Result<Loaded, CliError> {
    let src = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{path}: {e}")))?;
    load(&src)
}

/// Bundled model with identical generators, differentials and `J`.
fn recognize(m: &Manifold) -> Option<NamedModel> {
    models::bundled().into_iter().find(|b| {
        b.manifold.names() == m.names()
            && b.manifold.algebra().structure() == m.algebra().structure()
            && b.manifold.j() == m.j()
    })
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Provenance of invariant cohomology: for recognized models invariant de
/// Rham cohomology is the manifold's (Nomizu, Hattori, or compact groups).
fn cohomology_provenance(l: &Loaded, theory: Theory) -> Provenance {
    match (&l.model, theory) {
        (Some(_), Theory::DeRham) => Provenance::Theorem,
        (Some(m), _) if m.manifold.algebra().structure().iter().all(|f| f.is_zero()) => {
            Provenance::Theorem
        }
        _ => Provenance::InvariantLevel,
    }
}

fn source_provenance(s: Source) -> Provenance {
    match s {
        Source::Theorem => Provenance::Theorem,
        Source::Computed => Provenance::Computed,
        Source::Elementary => Provenance::Elementary,
    }
}

fn title(cmd: &str, l: &Loaded) -> String {
    let mut t = format!("{cmd}: {}", l.presentation.name);
    if let Some(m) = &l.model {
        if m.name != l.presentation.name {
            t.push_str(&format!(" (bundled model {})", m.name));
        }
    }
    t
}

fn err<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Invalid {
        line: 0,
        message: e.to_string(),
    }
}

pub fn cmd_validate(l: &Loaded) -> Report {
    let m = &l.manifold;
    let g = m.algebra();
    let mut r = Report::new(title("validate", l));
    r.push("real dimension", m.ngens(), Provenance::Elementary);
    r.push("complex dimension", m.n(), Provenance::Elementary);
    r.push("salamon", g.salamon(), Provenance::Elementary);
    r.push("d^2 = 0", "yes", Provenance::Computed);
    r.push("unimodular", yes(g.is_unimodular()), Provenance::Computed);
    r.push("J^2 = -Id", "yes", Provenance::Computed);
    r.push("integrable", "yes", Provenance::Computed);
    r.push(
        "holomorphic frame",
        m.frame_names().join(" "),
        Provenance::Elementary,
    );
    for (label, metric) in &l.metrics {
        r.push_cert(
            format!("metric {label}"),
            "positive definite",
            Provenance::Computed,
            metric.omega().display(l.names()),
        );
    }
    r.push(
        "bundled model",
        l.model.as_ref().map(|m| m.name.as_str()).unwrap_or("none"),
        Provenance::Elementary,
    );
    r
}

fn group_entry(
    r: &mut Report,
    coh: &Cohomology<'_>,
    l: &Loaded,
    theory: Theory,
    p: usize,
    q: usize,
    with_reps: bool,
) -> Result<(), CliError> {
    let g = coh.group(theory, p, q).map_err(err)?;
    let quantity = format!("h^{{{p},{q}}}_{}", theory.short());
    let prov = cohomology_provenance(l, theory);
    if with_reps {
        let names = l.manifold.frame_names();
        let reps: Vec<String> = g
            .representatives()
            .iter()
            .map(|f| f.display(&names))
            .collect();
        r.push_cert(quantity, g.dim(), prov, format!("[{}]", reps.join("; ")));
    } else {
        r.push(quantity, g.dim(), prov);
    }
    Ok(())
}

fn betti_entry(
    r: &mut Report,
    coh: &Cohomology<'_>,
    l: &Loaded,
    k: usize,
    with_reps: bool,
) -> Result<(), CliError> {
    let g = coh.de_rham(k).map_err(err)?;
    let prov = cohomology_provenance(l, Theory::DeRham);
    if with_reps {
        let reps: Vec<String> = g
            .representatives()
            .iter()
            .map(|f| f.display(l.names()))
            .collect();
        r.push_cert(
            format!("b{k}"),
            g.dim(),
            prov,
            format!("[{}]", reps.join("; ")),
        );
    } else {
        r.push(format!("b{k}"), g.dim(), prov);
    }
    Ok(())
}

pub fn cmd_cohomology(l: &Loaded, opts: &Options) -> Result<Report, CliError> {
    let m = &l.manifold;
    let n = m.n();
    let coh = Cohomology::new(m);
    let mut r = Report::new(title("cohomology", l));
    let check_bidegree = |p: usize, q: usize| {
        if p > n || q > n {
            Err(CliError::Usage(format!(
                "bidegree ({p},{q}) out of range for complex dimension {n}"
            )))
        } else {
            Ok(())
        }
    };
    match (opts.theory, opts.bidegree, opts.degree) {
        (_, Some(_), Some(_)) => {
            return Err(CliError::Usage(
                "give --bidegree or --degree, not both".into(),
            ))
        }
        (Some(Theory::DeRham), Some(_), _) => {
            return Err(CliError::Usage(
                "--bidegree does not apply to de Rham cohomology".into(),
            ))
        }
        (None | Some(Theory::DeRham), None, Some(k)) => {
            if k > 2 * n {
                return Err(CliError::Usage(format!("degree {k} exceeds {}", 2 * n)));
            }
            betti_entry(&mut r, &coh, l, k, true)?;
        }
        (Some(t), Some((p, q)), None) => {
            check_bidegree(p, q)?;
            group_entry(&mut r, &coh, l, t, p, q, true)?;
        }
        (None, Some((p, q)), None) => {
            check_bidegree(p, q)?;
            for t in [Theory::Dolbeault, Theory::BottChern, Theory::Aeppli] {
                group_entry(&mut r, &coh, l, t, p, q, true)?;
            }
        }
        (Some(t), None, Some(k)) => {
            if k > 2 * n {
                return Err(CliError::Usage(format!("degree {k} exceeds {}", 2 * n)));
            }
            for p in 0..=k.min(n) {
                if k - p <= n {
                    group_entry(&mut r, &coh, l, t, p, k - p, false)?;
                }
            }
        }
        (t, None, None) => {
            if matches!(t, None | Some(Theory::DeRham)) {
                for k in 0..=2 * n {
                    betti_entry(&mut r, &coh, l, k, false)?;
                }
            }
            let theories = match t {
                None => vec![Theory::Dolbeault, Theory::BottChern, Theory::Aeppli],
                Some(Theory::DeRham) => vec![],
                Some(t) => vec![t],
            };
            for t in theories {
                for p in 0..=n {
                    for q in 0..=n {
                        group_entry(&mut r, &coh, l, t, p, q, false)?;
                    }
                }
            }
        }
    }
    Ok(r)
}

fn space_provenance(l: &Loaded) -> Provenance {
    if l.model.is_some() {
        Provenance::Theorem
    } else {
        Provenance::InvariantLevel
    }
}

/// The cones of tori and OT manifolds (Inoue included) are known on the
/// manifold; elsewhere only the invariant computation is claimed.
fn cone_provenance(l: &Loaded) -> Provenance {
    match l.model.as_ref().map(|m| m.name.as_str()) {
        Some(name)
            if name.starts_with("torus") || name.starts_with("ot(") || name == "inoue_s0" =>
        {
            Provenance::Theorem
        }
        _ => Provenance::InvariantLevel,
    }
}

fn w_entries(r: &mut Report, l: &Loaded, lg: &cones::LgCone) {
    let names = l.names();
    let basis: Vec<String> = lg
        .space
        .basis_forms()
        .iter()
        .map(|f| f.display(names))
        .collect();
    r.push_cert(
        "W",
        format!("dim {}", lg.dim()),
        space_provenance(l),
        format!("[{}]", basis.join("; ")),
    );
    if !lg.space.agree {
        r.inconsistent = true;
    }
    r.push(
        "W annihilator = W image",
        yes(lg.space.agree),
        Provenance::Computed,
    );
}

fn class_form(lg: &cones::LgCone, x: &[Rational], names: &[String]) -> String {
    lg.pseff.h1.lift(x).display(names)
}

pub fn cmd_cones(l: &Loaded, opts: &Options) -> Result<Report, CliError> {
    let m = &l.manifold;
    let names = l.names();
    let coh = Cohomology::new(m);
    let lg = cones::lg_cone(&coh).map_err(err)?;
    let mut r = Report::new(title("cones", l));
    r.push(
        "H^1",
        format!("dim {}", lg.pseff.dim()),
        space_provenance(l),
    );
    w_entries(&mut r, l, &lg);

    let lineality: Vec<String> = lg
        .pseff
        .lineality
        .basis()
        .iter()
        .map(|x| class_form(&lg, x, names))
        .collect();
    let lin = if lineality.is_empty() {
        String::new()
    } else {
        format!(" + span({})", lineality.join(", "))
    };
    let c = match &lg.pseff.kind {
        ConeKind::Empty => "{0}".to_string(),
        ConeKind::Whole => "H^1".to_string(),
        ConeKind::Polyhedral(cone) => {
            let mut rays: Vec<String> = cone
                .rays()
                .iter()
                .map(|x| class_form(&lg, x, names))
                .collect();
            rays.sort();
            format!("cone({}){lin}", rays.join(", "))
        }
        ConeKind::Spectrahedral => format!(
            "spectrahedral: {{x : sum x_j H_j >= 0}}, {} Hermitian matrices of size {}{lin}",
            lg.pseff.matrices.len(),
            lg.pseff.matrices.first().map(|h| h.rows()).unwrap_or(0)
        ),
    };
    r.push("C", c, cone_provenance(l));

    let lg_text = match &lg.kind {
        ConeKind::Whole if lg.dim() == 0 => "W = {0}".to_string(),
        ConeKind::Whole => "W".to_string(),
        ConeKind::Empty => "empty".to_string(),
        ConeKind::Polyhedral(_) => {
            let rays = lg.pseff.rays().unwrap_or(&[]);
            let mut facets: Vec<String> = rays
                .iter()
                .map(|x| format!("<x,{}> > 0", class_form(&lg, x, names)))
                .collect();
            facets.sort();
            if lg.dim() == 1 && facets.len() == 1 {
                format!("half-line {}", facets[0])
            } else {
                format!("open polyhedral cone {}", facets.join(", "))
            }
        }
        ConeKind::Spectrahedral => "open dual of C (spectrahedral)".to_string(),
    };
    r.push("LG", lg_text, cone_provenance(l));
    if let ConeKind::Polyhedral(closed) = &lg.kind {
        let gens: Vec<String> = closed
            .rays()
            .iter()
            .map(|w| {
                format!(
                    "({})",
                    w.iter()
                        .map(|x| x.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                )
            })
            .collect();
        r.push(
            "LG closure rays (W coordinates)",
            gens.join(" "),
            Provenance::Computed,
        );
    }

    // Lee-Gauduchon classes of the distinguished metrics and a few seeded
    // random ones, made Gauduchon where the cone test applies.
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut sample: Vec<(String, HermitianMetric)> = l.metrics.clone();
    for i in 0..4 {
        sample.push((format!("random{}", i + 1), m.random_metric(&mut rng)));
    }
    let mut gauduchon = 0;
    for (label, g) in &sample {
        if !cones::is_gauduchon(m, g) {
            r.push(
                format!("LG class ({label})"),
                "not Gauduchon",
                Provenance::Computed,
            );
            continue;
        }
        gauduchon += 1;
        let res = cones::lg_samples(&coh, &lg, std::slice::from_ref(g)).map_err(err)?;
        let (class, verdict) = &res[0];
        let value = match &class.w_coords {
            Some(w) if w.iter().all(Zero::is_zero) => "0".to_string(),
            Some(w) => format!(
                "({})",
                w.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            ),
            None => "not in W".to_string(),
        };
        if class.w_coords.is_none() || *verdict == Membership::Outside {
            r.inconsistent = true;
        }
        r.push_cert(
            format!("LG class ({label})"),
            format!("{value}, {verdict}"),
            Provenance::Computed,
            class.form.display(names),
        );
    }
    r.push("seed", opts.seed, Provenance::Elementary);
    r.push("Gauduchon samples", gauduchon, Provenance::Computed);
    Ok(r)
}

fn random_complex(m: &Manifold, k: usize, rng: &mut ChaCha8Rng) -> Form<Gaussian> {
    let ngens = m.ngens();
    let re = m.complexify(&Form::random(ngens, k, 3, rng));
    let im = m.complexify(&Form::random(ngens, k, 3, rng));
    re.add(&im.scale(&gauss(qi(0), qi(1))))
}

/// Exact checks of `d^2 = del^2 = dbar^2 = 0`, `d = del + dbar` and
/// `dd^c = 2i del dbar` on `count` random forms.
pub fn operator_identities(m: &Manifold, count: usize, seed: u64) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let two_i = gauss(qi(0), qi(2));
    for i in 0..count {
        let k = rng.gen_range(0..=m.ngens());
        let z = random_complex(m, k, &mut rng);
        let f = Form::random(m.ngens(), k, 3, &mut rng);
        let checks = [
            ("d^2", m.d_complex(&m.d_complex(&z)).is_zero()),
            ("del^2", m.del(&m.del(&z)).is_zero()),
            ("dbar^2", m.delbar(&m.delbar(&z)).is_zero()),
            (
                "d = del + dbar",
                m.d_complex(&z) == m.del(&z).add(&m.delbar(&z)),
            ),
            (
                "dd^c = 2i del dbar",
                m.complexify(&m.ddc(&f)) == m.del(&m.delbar(&m.complexify(&f))).scale(&two_i),
            ),
        ];
        if let Some((name, _)) = checks.iter().find(|(_, ok)| !ok) {
            return Err(format!("{name} fails on sample {i} (degree {k})"));
        }
    }
    Ok(())
}

pub fn cmd_check(l: &Loaded, opts: &Options) -> Result<Report, CliError> {
    let m = &l.manifold;
    let n = m.n();
    let names = l.names();
    let coh = Cohomology::new(m);
    let mut r = Report::new(title("check", l));

    match operator_identities(m, 50, opts.seed) {
        Ok(()) => r.push(
            "operator identities (50 forms)",
            "hold",
            Provenance::Computed,
        ),
        Err(e) => {
            r.inconsistent = true;
            r.push("operator identities (50 forms)", e, Provenance::Computed);
        }
    }

    let es = coh.exact_sequence_check().map_err(err)?;
    if !es.is_exact() {
        r.inconsistent = true;
    }
    r.push_cert(
        "exact sequence 0 -> Re H^{1,0}_d -> H^1 -> H^{1,1}_BC",
        if es.is_exact() {
            "exact".to_string()
        } else {
            format!("fails at {}", es.failures().join(", "))
        },
        Provenance::Computed,
        format!(
            "dims {} -> {} -> {}, rank d^c {}",
            es.dim_real_parts, es.dim_h1, es.dim_bc11, es.rank_dc
        ),
    );

    let space = coh.lee_gauduchon_space().map_err(err)?;
    if !space.agree {
        r.inconsistent = true;
    }
    r.push(
        "W annihilator = W image",
        format!("{} (dim {})", yes(space.agree), space.dim()),
        Provenance::Computed,
    );

    let mut singular = Vec::new();
    for p in 0..=n {
        for q in 0..=n {
            let pm = coh.duality_matrix(p, q).map_err(err)?;
            if !pm.is_nonsingular() {
                singular.push(format!("({p},{q})"));
            }
        }
    }
    if !singular.is_empty() {
        r.inconsistent = true;
    }
    r.push(
        "Bott-Chern/Aeppli duality",
        if singular.is_empty() {
            "nondegenerate in all bidegrees".to_string()
        } else {
            format!("degenerate at {}", singular.join(" "))
        },
        Provenance::Computed,
    );

    let lg = cones::lg_cone(&coh).map_err(err)?;
    for (label, g) in &l.metrics {
        let gd = cones::is_gauduchon(m, g);
        let coclosed = cones::lee_form_coclosed(m, g);
        if gd != coclosed {
            r.inconsistent = true;
        }
        r.push(
            format!("gauduchon ({label})"),
            yes(gd),
            Provenance::Computed,
        );
        r.push(
            format!("balanced ({label})"),
            yes(cones::is_balanced(m, g)),
            Provenance::Computed,
        );
        r.push(
            format!("strongly Gauduchon ({label})"),
            yes(cones::is_strongly_gauduchon(m, g)),
            Provenance::Computed,
        );
        r.push_cert(
            format!("Lee form ({label})"),
            cones::lee_form(m, g).display(names),
            Provenance::Computed,
            format!("d* closed: {}", yes(coclosed)),
        );
        if n >= 2 {
            match cones::lck_lee_form(m, g) {
                Ok(lck) => r.push(
                    format!("LCK ({label})"),
                    format!(
                        "yes, theta = {}{}",
                        lck.theta.display(names),
                        if lck.kahler { ", Kahler" } else { "" }
                    ),
                    Provenance::Computed,
                ),
                Err(_) => r.push(format!("LCK ({label})"), "no", Provenance::Computed),
            }
        }
        if gd {
            let class = cones::lee_gauduchon_class(&coh, g).map_err(err)?;
            let value = match &class.w_coords {
                Some(w) if w.iter().all(Zero::is_zero) => "0".to_string(),
                Some(w) => format!(
                    "({})",
                    w.iter()
                        .map(|x| x.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                ),
                None => {
                    r.inconsistent = true;
                    "not in W".to_string()
                }
            };
            let verdict = match &class.w_coords {
                Some(w) => lg.membership(w).map_err(err)?.0,
                None => Membership::Outside,
            };
            if verdict == Membership::Outside {
                r.inconsistent = true;
            }
            r.push_cert(
                format!("LG class ({label})"),
                value,
                Provenance::Computed,
                format!("{} in LG", verdict),
            );
        }
        if n >= 2 {
            let phi = g.omega().power(n - 1).map_err(err)?;
            match m.hermitian_root(&phi) {
                Ok(root) => r.push(
                    format!("(n-1)-th root residual ({label})"),
                    format!("{:.3e}", root.relative_residual),
                    Provenance::Numeric,
                ),
                Err(e) => r.push(
                    format!("(n-1)-th root residual ({label})"),
                    e,
                    Provenance::Numeric,
                ),
            }
        }
    }

    // Gauduchon cone membership on seeded random Aeppli classes; a
    // contradiction between the two searches is an inconsistency.
    let ae = coh.aeppli_real(n - 1).map_err(err)?;
    if ae.dim() > 0 {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0x5eed);
        let mut counts = [0usize; 3];
        for _ in 0..4 {
            let class: Vec<Rational> = (0..ae.dim()).map(|_| qi(rng.gen_range(-3..=3))).collect();
            match cones::gauduchon_cone_membership(&coh, &class) {
                Ok(res) => {
                    if !matches!(res.certificate, Certificate::None)
                        && !cones::validate_certificate(&coh, &class, &res.certificate)
                            .map_err(err)?
                    {
                        r.inconsistent = true;
                    }
                    match res.verdict {
                        Membership::Interior => counts[0] += 1,
                        Membership::Outside | Membership::Boundary => counts[1] += 1,
                        Membership::Unknown => counts[2] += 1,
                    }
                }
                Err(cones::ConeError::Inconsistent(e)) => {
                    r.inconsistent = true;
                    r.push(
                        "Gauduchon cone search",
                        format!("contradiction: {e}"),
                        Provenance::Computed,
                    );
                }
                Err(e) => return Err(err(e)),
            }
        }
        r.push(
            "Gauduchon cone on 4 random classes",
            format!(
                "{} interior, {} outside or boundary, {} unknown",
                counts[0], counts[1], counts[2]
            ),
            Provenance::Computed,
        );
    }

    if let Some(model) = &l.model {
        let outcomes = model.check();
        for o in &outcomes {
            if !o.holds {
                r.inconsistent = true;
            }
            r.push_cert(
                format!("fact: {}", o.statement),
                if o.holds { "holds" } else { "FAILED" },
                source_provenance(o.source),
                o.detail.clone(),
            );
        }
    }
    r.push("seed", opts.seed, Provenance::Elementary);
    Ok(r)
}

/// Canonical file text of a bundled model.
pub fn cmd_model(name: &str) -> Result<String, CliError> {
    let model = models::by_name(name).ok_or_else(|| {
        CliError::Usage(format!(
            "unknown model '{name}' (available: {})",
            models::BUNDLED_NAMES.join(", ")
        ))
    })?;
    Ok(model_text(&model))
}

pub fn model_text(model: &NamedModel) -> String {
    let metrics: Vec<(String, Form<Rational>)> = model
        .metrics
        .iter()
        .map(|(l, g)| (l.clone(), g.omega().clone()))
        .collect();
    crate::export::manifold(&model.manifold, &metrics)
}
