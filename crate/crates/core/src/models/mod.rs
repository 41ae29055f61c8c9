//! Bundled example manifolds: tori, Oeljeklaus-Toma type solvmanifolds and
//! the Inoue surface, nilmanifolds, and the Calabi-Eckmann and Hopf models.

mod facts;

use num::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::exactla::{q, qi, Matrix, Rational};
use crate::exterior::{ExteriorError, Form, HermitianMetric, LieAlgebra, Manifold};

pub use facts::{ExpectedFact, Fact, FactOutcome, Source};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error(transparent)]
    Exterior(#[from] ExteriorError),
    #[error("not unimodular: need {constraint}")]
    NotUnimodular {
        constraint: String,
        violated: Vec<usize>,
    },
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
}

/// A validated manifold with distinguished metrics and a table of facts
/// that should hold for it.
#[derive(Clone, Debug)]
pub struct NamedModel {
    pub name: String,
    pub manifold: Manifold,
    pub metrics: Vec<(String, HermitianMetric)>,
    pub facts: Vec<ExpectedFact>,
}

impl NamedModel {
    fn new(name: &str, manifold: Manifold) -> Self {
        let standard = manifold.standard_metric();
        NamedModel {
            name: name.to_string(),
            manifold,
            metrics: vec![("standard".to_string(), standard)],
            facts: Vec::new(),
        }
    }

    pub fn metric(&self, label: &str) -> Option<&HermitianMetric> {
        self.metrics
            .iter()
            .find(|(l, _)| l == label)
            .map(|(_, m)| m)
    }

    /// Recomputes every expected fact.
    pub fn check(&self) -> Vec<FactOutcome> {
        let coh = crate::cohomology::Cohomology::new(&self.manifold);
        facts::evaluate(&coh, &self.metrics, &self.facts)
    }

    fn fact(mut self, statement: &str, source: Source, fact: Fact) -> Self {
        self.facts.push(ExpectedFact {
            statement: statement.to_string(),
            source,
            fact,
        });
        self
    }
}

fn names(prefix: &str, count: usize) -> Vec<String> {
    (1..=count).map(|i| format!("{prefix}{i}")).collect()
}

fn term(c: Rational, i: usize, j: usize) -> (Rational, Vec<usize>) {
    (c, vec![i, j])
}

/// `J` from pairs `(k, l)` meaning `J e^k = e^l`, `J e^l = -e^k`.
pub fn j_from_pairs(ngens: usize, pairs: &[(usize, usize)]) -> Matrix<Rational> {
    let mut j = Matrix::zeros(ngens, ngens);
    for &(k, l) in pairs {
        j[(l, k)] = qi(1);
        j[(k, l)] = qi(-1);
    }
    j
}

/// The flat torus `C^n / Z^{2n}` with `J e^{2a-1} = e^{2a}`.
pub fn torus(n: usize) -> NamedModel {
    assert!(n >= 1);
    let ngens = 2 * n;
    let mut ns = Vec::new();
    for a in 1..=n {
        ns.push(format!("x{a}"));
        ns.push(format!("y{a}"));
    }
    let g =
        LieAlgebra::new(&format!("torus{n}"), ns, vec![Form::zero(ngens); ngens]).expect("abelian");
    let pairs: Vec<(usize, usize)> = (0..n).map(|a| (2 * a, 2 * a + 1)).collect();
    let m = Manifold::new(g, j_from_pairs(ngens, &pairs)).expect("standard structure");
    NamedModel::new(&format!("torus({n})"), m)
        .fact(
            "b1 = 2n",
            Source::Elementary,
            Fact::Betti {
                degree: 1,
                dim: ngens,
            },
        )
        .fact(
            "closed holomorphic 1-forms dz_a",
            Source::Elementary,
            Fact::HolomorphicClosed1Forms(n),
        )
        .fact("W = 0", Source::Theorem, Fact::LeeGauduchonSpaceDim(0))
        .fact(
            "standard metric is Kahler",
            Source::Elementary,
            Fact::Balanced("standard".into()),
        )
}

/// Exact unimodularity condition for [`ot_model`]: for each `k`, the
/// coefficients of `alpha_k` in `psi_1, ..., psi_t` sum to `1/2`. Returns
/// the indices `k` where it fails.
pub fn ot_unimodularity_violations(psi: &Matrix<Rational>) -> Vec<usize> {
    (0..psi.cols())
        .filter(|&k| {
            let s: Rational = (0..psi.rows()).map(|i| psi[(i, k)].clone()).sum();
            s != q(1, 2)
        })
        .collect()
}

/// Generators `a1..as, b1..bs, g1..g2t` with
///
/// ```text
/// d a_i = 0,  d b_i = -a_i ^ b_i,
/// d g_{2i-1} =  psi_i ^ g_{2i-1} + phi_i ^ g_{2i},
/// d g_{2i}   = -phi_i ^ g_{2i-1} + psi_i ^ g_{2i},
/// ```
///
/// where `psi_i = sum_k psi[i][k] a_k`, `phi_i = sum_k phi[i][k] a_k`, and
/// `J a_i = b_i`, `J g_{2i-1} = g_{2i}`. Unimodularity is not enforced.
pub fn ot_manifold(
    s: usize,
    t: usize,
    psi: &Matrix<Rational>,
    phi: &Matrix<Rational>,
) -> Result<Manifold, ModelError> {
    if s == 0 || t == 0 {
        return Err(ModelError::InvalidParameters(
            "need s >= 1 and t >= 1".into(),
        ));
    }
    if psi.rows() != t || psi.cols() != s || phi.rows() != t || phi.cols() != s {
        return Err(ModelError::InvalidParameters(format!(
            "psi and phi must be {t} x {s} coefficient matrices"
        )));
    }
    let ngens = 2 * s + 2 * t;
    let a = |i: usize| i;
    let b = |i: usize| s + i;
    let g = |j: usize| 2 * s + j;
    let mut de = vec![Form::zero(ngens); ngens];
    for i in 0..s {
        de[b(i)] = Form::from_terms(ngens, &[term(-Rational::one(), a(i), b(i))]);
    }
    for i in 0..t {
        let mut odd = Vec::new();
        let mut even = Vec::new();
        for k in 0..s {
            let (ps, ph) = (psi[(i, k)].clone(), phi[(i, k)].clone());
            if !ps.is_zero() {
                odd.push(term(ps.clone(), a(k), g(2 * i)));
                even.push(term(ps, a(k), g(2 * i + 1)));
            }
            if !ph.is_zero() {
                odd.push(term(ph.clone(), a(k), g(2 * i + 1)));
                even.push(term(-ph, a(k), g(2 * i)));
            }
        }
        de[g(2 * i)] = Form::from_terms(ngens, &odd);
        de[g(2 * i + 1)] = Form::from_terms(ngens, &even);
    }
    let mut ns = names("a", s);
    ns.extend(names("b", s));
    ns.extend(names("g", 2 * t));
    let alg = LieAlgebra::new(&format!("ot({s},{t})"), ns, de)?;
    let mut pairs: Vec<(usize, usize)> = (0..s).map(|i| (a(i), b(i))).collect();
    pairs.extend((0..t).map(|i| (g(2 * i), g(2 * i + 1))));
    Ok(Manifold::new(alg, j_from_pairs(ngens, &pairs))?)
}

/// [`ot_manifold`] with unimodularity enforced and the expected facts
/// attached.
pub fn ot_model(
    s: usize,
    t: usize,
    psi: &Matrix<Rational>,
    phi: &Matrix<Rational>,
) -> Result<NamedModel, ModelError> {
    let m = ot_manifold(s, t, psi, phi)?;
    let violated = ot_unimodularity_violations(psi);
    if !violated.is_empty() {
        return Err(ModelError::NotUnimodular {
            constraint: "sum_i psi[i][k] = 1/2 for every k".into(),
            violated,
        });
    }
    debug_assert!(m.is_unimodular());
    let ngens = m.ngens();
    let alphas: Vec<Form<Rational>> = (0..s).map(|i| Form::generator(ngens, i)).collect();
    let mut model = NamedModel::new(&format!("ot({s},{t})"), m)
        .fact(
            "b1 = s",
            Source::Computed,
            Fact::Betti { degree: 1, dim: s },
        )
        .fact(
            "H^1 is spanned by the classes of a_i",
            Source::Theorem,
            Fact::FirstCohomologySpannedBy(alphas),
        )
        .fact(
            "no closed holomorphic 1-forms",
            Source::Computed,
            Fact::HolomorphicClosed1Forms(0),
        );
    for i in 0..s {
        let minus_db = Form::from_terms(ngens, &[term(qi(1), i, s + i)]);
        model = model.fact(
            &format!("-d b{} = a{}^b{} is positive", i + 1, i + 1, i + 1),
            Source::Theorem,
            Fact::Positive11(minus_db),
        );
    }
    Ok(model)
}

/// A "generic" rational with a large denominator.
pub fn generic_rational<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    let den: i64 = rng.gen_range(100_003..1_000_003);
    let num: i64 = rng.gen_range(-3 * den..=3 * den);
    let num = if num == 0 { 1 } else { num };
    q(num, den)
}

/// Unimodular coefficients drawn with a fixed seed: `phi` generic, `psi`
/// generic except for the last row, which solves the unimodularity
/// constraint.
pub fn ot_generic_coefficients(
    s: usize,
    t: usize,
    seed: u64,
) -> (Matrix<Rational>, Matrix<Rational>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut psi = Matrix::zeros(t, s);
    let mut phi = Matrix::zeros(t, s);
    for k in 0..s {
        let mut acc = Rational::zero();
        for i in 0..t {
            phi[(i, k)] = generic_rational(&mut rng);
            if i + 1 < t {
                psi[(i, k)] = generic_rational(&mut rng);
                acc += psi[(i, k)].clone();
            }
        }
        psi[(t - 1, k)] = q(1, 2) - acc;
    }
    (psi, phi)
}

pub fn ot_generic(s: usize, t: usize, seed: u64) -> NamedModel {
    let (psi, phi) = ot_generic_coefficients(s, t, seed);
    ot_model(s, t, &psi, &phi).expect("generic coefficients satisfy the constraints")
}

/// The Inoue surface `S^0` with `psi = a/2`, `phi = phi * a`, and its LCK
/// metric `a^b + g1^g2` with Lee form `a`.
pub fn inoue_s0(phi: Rational) -> NamedModel {
    let psi = Matrix::from_rows(vec![vec![q(1, 2)]]);
    let phim = Matrix::from_rows(vec![vec![phi]]);
    let mut model = ot_model(1, 1, &psi, &phim).expect("a = 1/2 is unimodular");
    model.name = "inoue_s0".into();
    let lck = model.manifold.standard_metric();
    model.metrics.push(("lck".into(), lck));
    let ngens = 4;
    model
        .fact(
            "W has dimension 1",
            Source::Computed,
            Fact::LeeGauduchonSpaceDim(1),
        )
        .fact(
            "the LCK metric has Lee form a",
            Source::Computed,
            Fact::LckLeeForm {
                metric: "lck".into(),
                theta: Form::generator(ngens, 0),
            },
        )
        .fact(
            "the LG cone is a half-line",
            Source::Theorem,
            Fact::LgConeHalfLine,
        )
}

/// Inoue-type presentation with `psi = a * alpha`; unimodular only for
/// `a = 1/2`.
pub fn inoue_variant(a: Rational, phi: Rational) -> Result<Manifold, ModelError> {
    ot_manifold(
        1,
        1,
        &Matrix::from_rows(vec![vec![a]]),
        &Matrix::from_rows(vec![vec![phi]]),
    )
}

/// The Iwasawa manifold: `d e5 = -e13 + e24`, `d e6 = -e14 - e23`, so that
/// `d z3 = -z1 ^ z2` for `z1 = e1 + i e2`, `z2 = e3 + i e4`, `z3 = e5 + i e6`.
pub fn iwasawa() -> NamedModel {
    let ngens = 6;
    let mut de = vec![Form::zero(ngens); ngens];
    de[4] = Form::from_terms(ngens, &[term(qi(-1), 0, 2), term(qi(1), 1, 3)]);
    de[5] = Form::from_terms(ngens, &[term(qi(-1), 0, 3), term(qi(-1), 1, 2)]);
    let g = LieAlgebra::new("iwasawa", names("e", 6), de).expect("valid");
    let m = Manifold::new(g, j_from_pairs(ngens, &[(0, 1), (2, 3), (4, 5)])).expect("integrable");
    NamedModel::new("iwasawa", m)
        .fact(
            "standard metric is balanced",
            Source::Computed,
            Fact::Balanced("standard".into()),
        )
        .fact(
            "closed holomorphic 1-forms z1, z2",
            Source::Computed,
            Fact::HolomorphicClosed1Forms(2),
        )
        .fact(
            "Lee-Gauduchon class of the balanced metric vanishes",
            Source::Theorem,
            Fact::VanishingLeeGauduchonClass("standard".into()),
        )
        .fact("LG(M) = W", Source::Theorem, Fact::LgConeIsW)
}

/// Kodaira-Thurston: `d e4 = e12`.
pub fn kodaira_thurston() -> NamedModel {
    let ngens = 4;
    let mut de = vec![Form::zero(ngens); ngens];
    de[3] = Form::from_terms(ngens, &[term(qi(1), 0, 1)]);
    let g = LieAlgebra::new("kodaira_thurston", names("e", 4), de).expect("valid");
    let m = Manifold::new(g, j_from_pairs(ngens, &[(0, 1), (2, 3)])).expect("integrable");
    NamedModel::new("kodaira_thurston", m)
        .fact(
            "b1 = 3",
            Source::Computed,
            Fact::Betti { degree: 1, dim: 3 },
        )
        .fact(
            "closed holomorphic 1-forms",
            Source::Computed,
            Fact::HolomorphicClosed1Forms(1),
        )
}

/// `su(2) + su(2)` with `J e1 = e4`, `J e2 = e3`, `J e5 = e6`.
pub fn calabi_eckmann() -> NamedModel {
    calabi_eckmann_with(Rational::zero(), -Rational::one()).expect("default parameters")
}

/// Calabi-Eckmann structure with `J` acting on `span(e1, e4)` by the
/// matrix `[[a, b], [c, -a]]`, `c = -(1 + a^2) / b`; the default is
/// `a = 0`, `b = -1`.
pub fn calabi_eckmann_with(a: Rational, b: Rational) -> Result<NamedModel, ModelError> {
    if b.is_zero() {
        return Err(ModelError::InvalidParameters("b must be nonzero".into()));
    }
    let ngens = 6;
    let su2 = |x: usize, y: usize, z: usize| {
        vec![
            (x, Form::from_terms(ngens, &[term(qi(1), y, z)])),
            (y, Form::from_terms(ngens, &[term(qi(1), z, x)])),
            (z, Form::from_terms(ngens, &[term(qi(1), x, y)])),
        ]
    };
    let mut de = vec![Form::zero(ngens); ngens];
    for (k, f) in su2(0, 1, 2).into_iter().chain(su2(3, 4, 5)) {
        de[k] = f;
    }
    let g = LieAlgebra::new("calabi_eckmann", names("e", 6), de)?;
    let mut j = j_from_pairs(ngens, &[(1, 2), (4, 5)]);
    let c = -(Rational::one() + a.clone() * a.clone()) / b.clone();
    j[(0, 0)] = a.clone();
    j[(3, 0)] = c;
    j[(0, 3)] = b;
    j[(3, 3)] = -a;
    let m = Manifold::new(g, j)?;
    let e23 = Form::from_terms(ngens, &[term(qi(1), 1, 2)]);
    Ok(NamedModel::new("calabi_eckmann", m)
        .fact(
            "H^2 = 0",
            Source::Elementary,
            Fact::Betti { degree: 2, dim: 0 },
        )
        .fact(
            "H^5 = 0",
            Source::Theorem,
            Fact::Betti { degree: 5, dim: 0 },
        )
        .fact("W = 0", Source::Computed, Fact::LeeGauduchonSpaceDim(0))
        .fact(
            "e2^e3 = d e1 is closed, positive, with nonzero Bott-Chern class",
            Source::Theorem,
            Fact::ClosedPositiveNonzeroBottChern(e23),
        ))
}

/// `su(2) + R` with `J e4 = e1`, `J e2 = e3`.
pub fn hopf() -> NamedModel {
    let ngens = 4;
    let mut de = vec![Form::zero(ngens); ngens];
    de[0] = Form::from_terms(ngens, &[term(qi(1), 1, 2)]);
    de[1] = Form::from_terms(ngens, &[term(qi(1), 2, 0)]);
    de[2] = Form::from_terms(ngens, &[term(qi(1), 0, 1)]);
    let g = LieAlgebra::new("hopf", names("e", 4), de).expect("valid");
    let m = Manifold::new(g, j_from_pairs(ngens, &[(3, 0), (1, 2)])).expect("integrable");
    let mut model = NamedModel::new("hopf", m);
    let lck = model.manifold.standard_metric();
    model.metrics.push(("lck".into(), lck));
    model
        .fact(
            "b1 = 1",
            Source::Computed,
            Fact::Betti { degree: 1, dim: 1 },
        )
        .fact(
            "W has dimension 1",
            Source::Computed,
            Fact::LeeGauduchonSpaceDim(1),
        )
        .fact(
            "the standard metric is LCK with Lee form -e4",
            Source::Computed,
            Fact::LckLeeForm {
                metric: "lck".into(),
                theta: Form::generator(ngens, 3).neg(),
            },
        )
        .fact(
            "the LG cone is a half-line",
            Source::Computed,
            Fact::LgConeHalfLine,
        )
}

/// Every bundled model under its canonical name.
pub fn bundled() -> Vec<NamedModel> {
    vec![
        torus(2),
        torus(3),
        kodaira_thurston(),
        iwasawa(),
        inoue_s0(q(3, 7)),
        ot_generic(2, 1, 1),
        ot_generic(3, 1, 2),
        hopf(),
        calabi_eckmann(),
    ]
}

/// Bundled model by name: `torus2`, `torus3`, `kodaira_thurston`,
/// `iwasawa`, `inoue_s0`, `ot21`, `ot31`, `hopf`, `calabi_eckmann`.
pub fn by_name(name: &str) -> Option<NamedModel> {
    Some(match name {
        "torus1" => torus(1),
        "torus2" => torus(2),
        "torus3" => torus(3),
        "kodaira_thurston" => kodaira_thurston(),
        "iwasawa" => iwasawa(),
        "inoue_s0" => inoue_s0(q(3, 7)),
        "ot21" => ot_generic(2, 1, 1),
        "ot31" => ot_generic(3, 1, 2),
        "hopf" => hopf(),
        "calabi_eckmann" => calabi_eckmann(),
        _ => return None,
    })
}

pub const BUNDLED_NAMES: [&str; 9] = [
    "torus2",
    "torus3",
    "kodaira_thurston",
    "iwasawa",
    "inoue_s0",
    "ot21",
    "ot31",
    "hopf",
    "calabi_eckmann",
];
