use std::fmt;

use num::Zero;

use crate::cohomology::Cohomology;
use crate::cones::{self, ConeKind};
use crate::exactla::{Definiteness, Rational};
use crate::exterior::{Form, HermitianMetric};

/// Where an expected fact comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Source {
    /// A published theorem about the manifold.
    Theorem,
    /// Computed once from the presentation and recorded.
    Computed,
    /// Immediate from the structure equations.
    Elementary,
}

impl Source {
    pub fn label(self) -> &'static str {
        match self {
            Source::Theorem => "theorem",
            Source::Computed => "computed",
            Source::Elementary => "elementary",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Fact {
    Betti {
        degree: usize,
        dim: usize,
    },
    HolomorphicClosed1Forms(usize),
    LeeGauduchonSpaceDim(usize),
    /// The named metric is balanced.
    Balanced(String),
    VanishingLeeGauduchonClass(String),
    LckLeeForm {
        metric: String,
        theta: Form<Rational>,
    },
    /// The real form is a nonzero semipositive (1,1)-form.
    Positive11(Form<Rational>),
    ClosedPositiveNonzeroBottChern(Form<Rational>),
    /// The classes of these closed 1-forms form a basis of `H^1`.
    FirstCohomologySpannedBy(Vec<Form<Rational>>),
    /// The Lee-Gauduchon cone is an open half-space in a 1-dimensional `W`.
    LgConeHalfLine,
    /// The Lee-Gauduchon cone is all of `W`.
    LgConeIsW,
}

#[derive(Clone, Debug)]
pub struct ExpectedFact {
    pub statement: String,
    pub source: Source,
    pub fact: Fact,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactOutcome {
    pub statement: String,
    pub source: Source,
    pub holds: bool,
    pub detail: String,
}

impl fmt::Display for FactOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = if self.holds { "ok" } else { "FAILED" };
        write!(
            f,
            "[{}] {} ({}): {}",
            mark,
            self.statement,
            self.source.label(),
            self.detail
        )
    }
}

fn outcome(e: &ExpectedFact, holds: bool, detail: String) -> FactOutcome {
    FactOutcome {
        statement: e.statement.clone(),
        source: e.source,
        holds,
        detail,
    }
}

/// Evaluates each fact against a fresh computation.
pub(crate) fn evaluate(
    coh: &Cohomology<'_>,
    metrics: &[(String, HermitianMetric)],
    facts: &[ExpectedFact],
) -> Vec<FactOutcome> {
    let m = coh.manifold();
    let names = m.names();
    let metric = |label: &str| metrics.iter().find(|(l, _)| l == label).map(|(_, g)| g);
    facts
        .iter()
        .map(|e| {
            let res: Result<(bool, String), String> = (|| {
                Ok(match &e.fact {
                    Fact::Betti { degree, dim } => {
                        let got = coh.de_rham(*degree).map_err(|x| x.to_string())?.dim();
                        (got == *dim, format!("b{degree} = {got}"))
                    }
                    Fact::HolomorphicClosed1Forms(k) => {
                        let got = coh.holomorphic_closed_1forms().dim();
                        (got == *k, format!("dimension {got}"))
                    }
                    Fact::LeeGauduchonSpaceDim(k) => {
                        let w = coh.lee_gauduchon_space().map_err(|x| x.to_string())?;
                        (w.dim() == *k && w.agree, format!("dim W = {}", w.dim()))
                    }
                    Fact::Balanced(label) => {
                        let g = metric(label).ok_or("no such metric")?;
                        let b = cones::is_balanced(m, g);
                        (b, format!("d(omega^(n-1)) = 0: {b}"))
                    }
                    Fact::VanishingLeeGauduchonClass(label) => {
                        let g = metric(label).ok_or("no such metric")?;
                        let c = cones::lee_gauduchon_class(coh, g).map_err(|x| x.to_string())?;
                        (c.is_zero(), format!("class zero: {}", c.is_zero()))
                    }
                    Fact::LckLeeForm { metric: label, theta } => {
                        let g = metric(label).ok_or("no such metric")?;
                        let lck = cones::lck_lee_form(m, g).map_err(|x| x.to_string())?;
                        (&lck.theta == theta, format!("theta = {}", lck.theta.display(names)))
                    }
                    Fact::Positive11(f) => {
                        let def = m.is_positive_11(f).map_err(|x| x.to_string())?;
                        (def.is_positive() && !f.is_zero(), def.to_string())
                    }
                    Fact::ClosedPositiveNonzeroBottChern(f) => {
                        let closed = m.d(f).is_zero();
                        let def = m.is_positive_11(f).map_err(|x| x.to_string())?;
                        let bc = coh.bott_chern_real(1).map_err(|x| x.to_string())?;
                        let nonzero = closed && bc.project(f).map_err(|x| x.to_string())?.iter().any(|x| !x.is_zero());
                        (
                            closed && def != Definiteness::NotPositive && nonzero,
                            format!("closed: {closed}, {def}, nonzero class: {nonzero}"),
                        )
                    }
                    Fact::FirstCohomologySpannedBy(forms) => {
                        let h1 = coh.de_rham(1).map_err(|x| x.to_string())?;
                        let coords: Vec<Vec<Rational>> = forms
                            .iter()
                            .map(|f| h1.project(f))
                            .collect::<Result<_, _>>()
                            .map_err(|x| x.to_string())?;
                        let rank = if coords.is_empty() {
                            0
                        } else {
                            crate::exactla::Matrix::from_rows(coords).rank()
                        };
                        (rank == h1.dim() && forms.len() == h1.dim(), format!("rank {rank} of {}", h1.dim()))
                    }
                    Fact::LgConeHalfLine => {
                        let lg = cones::lg_cone(coh).map_err(|x| x.to_string())?;
                        let ok = lg.dim() == 1
                            && matches!(&lg.kind, ConeKind::Polyhedral(c) if c.rays().len() == 1 && c.lineality().is_zero());
                        (ok, format!("dim W = {}, {}", lg.dim(), lg.kind.name()))
                    }
                    Fact::LgConeIsW => {
                        let lg = cones::lg_cone(coh).map_err(|x| x.to_string())?;
                        (lg.kind == ConeKind::Whole, lg.kind.name().to_string())
                    }
                })
            })();
            match res {
                Ok((holds, detail)) => outcome(e, holds, detail),
                Err(err) => outcome(e, false, err),
            }
        })
        .collect()
}
