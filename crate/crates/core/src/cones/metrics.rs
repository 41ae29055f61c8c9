//! Gauduchon, balanced, strongly Gauduchon and LCK tests, Lee forms and
//! Lee-Gauduchon classes.

use super::error::ConeError;
use crate::cohomology::Cohomology;
use crate::exactla::{q, qi, Matrix, Rational};
use crate::exterior::basis::basis;
use crate::exterior::{Form, HermitianMetric, Manifold};

fn omega_n1(m: &Manifold, metric: &HermitianMetric) -> Form<Rational> {
    metric
        .omega()
        .power(m.n() - 1)
        .expect("degree below the top")
}

/// `dd^c(omega^{n-1})`; zero iff the metric is Gauduchon.
pub fn gauduchon_defect(m: &Manifold, metric: &HermitianMetric) -> Form<Rational> {
    m.ddc(&omega_n1(m, metric))
}

pub fn is_gauduchon(m: &Manifold, metric: &HermitianMetric) -> bool {
    gauduchon_defect(m, metric).is_zero()
}

pub fn is_balanced(m: &Manifold, metric: &HermitianMetric) -> bool {
    m.d(&omega_n1(m, metric)).is_zero()
}

/// `del(omega^{n-1})` is `dbar`-exact, decided by an exact solve on
/// `Lambda^{n,n-2}`.
pub fn is_strongly_gauduchon(m: &Manifold, metric: &HermitianMetric) -> bool {
    let n = m.n();
    let del = m.del(&m.complexify(&omega_n1(m, metric)));
    if del.is_zero() {
        return true;
    }
    if n < 2 {
        return false;
    }
    let target = del.coordinates(&m.bidegree_basis(n, n - 1));
    let a = m.delbar_matrix(n, n - 2);
    if a.cols() == 0 {
        return false;
    }
    a.solve(&target).is_some()
}

/// `theta = *(d^c omega^{n-1}) / (n-1)`; zero in complex dimension 1.
pub fn lee_form(m: &Manifold, metric: &HermitianMetric) -> Form<Rational> {
    let n = m.n();
    if n == 1 {
        return Form::zero(m.ngens());
    }
    let dc = m.dc(&omega_n1(m, metric));
    m.hodge_star(&dc, metric).scale(&q(1, n as i64 - 1))
}

/// `d(*theta) = 0`, that is, the Lee form is co-closed.
pub fn lee_form_coclosed(m: &Manifold, metric: &HermitianMetric) -> bool {
    m.d(&m.hodge_star(&lee_form(m, metric), metric)).is_zero()
}

/// Solution of `d omega = theta ^ omega` with `d theta = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct LckStructure {
    pub theta: Form<Rational>,
    /// `theta = 0`: the metric is Kahler.
    pub kahler: bool,
}

pub fn lck_lee_form(m: &Manifold, metric: &HermitianMetric) -> Result<LckStructure, ConeError> {
    let ngens = m.ngens();
    if m.n() < 2 {
        return Err(ConeError::NotLCK("complex dimension 1".into()));
    }
    let omega = metric.omega();
    let three = basis(ngens).degree(3);
    let cols: Vec<Vec<Rational>> = (0..ngens)
        .map(|k| {
            Form::generator(ngens, k)
                .wedge_unchecked(omega)
                .coordinates(three)
        })
        .collect();
    let a = Matrix::from_columns(&cols, three.len());
    let rhs = m.d(omega).coordinates(three);
    let sol = a
        .solve(&rhs)
        .ok_or_else(|| ConeError::NotLCK("d omega = theta ^ omega has no solution".into()))?;
    let theta = Form::from_vector(ngens, 1, &sol);
    let dtheta = m.d(&theta);
    if !dtheta.is_zero() {
        return Err(ConeError::NotLCK(format!(
            "theta = {} is not closed",
            theta.display(m.names())
        )));
    }
    Ok(LckStructure {
        kahler: theta.is_zero(),
        theta,
    })
}

/// Lee-Gauduchon class `[d^c omega^{n-1}]` of a Gauduchon metric.
#[derive(Clone, Debug, PartialEq)]
pub struct LeeGauduchonClass {
    pub form: Form<Rational>,
    /// Coordinates in `H^{2n-1}(R)`.
    pub class: Vec<Rational>,
    /// Coordinates in the basis of `W`, when the class lies in `W`.
    pub w_coords: Option<Vec<Rational>>,
}

impl LeeGauduchonClass {
    pub fn in_w(&self) -> bool {
        self.w_coords.is_some()
    }

    pub fn is_zero(&self) -> bool {
        self.class.iter().all(|x| x == &qi(0))
    }
}

pub fn lee_gauduchon_class(
    coh: &Cohomology<'_>,
    metric: &HermitianMetric,
) -> Result<LeeGauduchonClass, ConeError> {
    let m = coh.manifold();
    let defect = gauduchon_defect(m, metric);
    if !defect.is_zero() {
        return Err(ConeError::NotGauduchon(defect.display(m.names())));
    }
    let n = m.n();
    let form = m.dc(&omega_n1(m, metric));
    let top = coh.de_rham(2 * n - 1)?;
    let class = top.project(&form)?;
    let w = coh.lee_gauduchon_space()?;
    let w_coords = w.w_coordinates(&class);
    Ok(LeeGauduchonClass {
        form,
        class,
        w_coords,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn torus_metrics_are_kahler() {
        let t = models::torus(3);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let g = t.manifold.random_metric(&mut rng);
        assert!(is_gauduchon(&t.manifold, &g));
        assert!(is_balanced(&t.manifold, &g));
        assert!(lee_form(&t.manifold, &g).is_zero());
        let lck = lck_lee_form(&t.manifold, &g).unwrap();
        assert!(lck.kahler);
        let coh = Cohomology::new(&t.manifold);
        assert!(lee_gauduchon_class(&coh, &g).unwrap().is_zero());
    }

    #[test]
    fn iwasawa_standard_is_balanced() {
        let m = models::iwasawa();
        let g = m.manifold.standard_metric();
        assert!(is_balanced(&m.manifold, &g));
        assert!(is_strongly_gauduchon(&m.manifold, &g));
        assert!(is_gauduchon(&m.manifold, &g));
        let coh = Cohomology::new(&m.manifold);
        assert!(lee_gauduchon_class(&coh, &g).unwrap().is_zero());
    }

    #[test]
    fn inoue_lck_metric() {
        let m = models::inoue_s0(q(2, 5));
        let g = m.metric("lck").unwrap();
        assert!(!is_balanced(&m.manifold, g));
        assert!(!is_strongly_gauduchon(&m.manifold, g));
        let lck = lck_lee_form(&m.manifold, g).unwrap();
        assert_eq!(lck.theta, Form::generator(4, 0));
        assert!(!lck.kahler);
        // The Hodge-star Lee form is minus the LCK one with these conventions.
        assert_eq!(lee_form(&m.manifold, g), lck.theta.neg());
        let coh = Cohomology::new(&m.manifold);
        let lg = lee_gauduchon_class(&coh, g).unwrap();
        assert!(lg.in_w() && !lg.is_zero());
    }

    #[test]
    fn non_unimodular_inoue_has_non_gauduchon_metrics() {
        let m = models::inoue_variant(q(1, 3), qi(1)).unwrap();
        let g = m.standard_metric();
        assert!(!is_gauduchon(&m, &g));
        assert!(!gauduchon_defect(&m, &g).is_zero());
        assert!(!lee_form_coclosed(&m, &g));
        let coh = Cohomology::new(&m);
        assert!(matches!(
            lee_gauduchon_class(&coh, &g),
            Err(ConeError::NotGauduchon(_))
        ));
    }

    #[test]
    fn coclosed_lee_form_iff_gauduchon() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let variant = models::inoue_variant(q(1, 4), q(1, 3)).unwrap();
        let bundled: Vec<_> = models::bundled().into_iter().map(|m| m.manifold).collect();
        for m in bundled.iter().chain(std::iter::once(&variant)) {
            for _ in 0..3 {
                let g = m.random_metric(&mut rng);
                assert_eq!(lee_form_coclosed(m, &g), is_gauduchon(m, &g));
            }
        }
    }

    #[test]
    fn strongly_gauduchon_classes_vanish() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for model in models::bundled() {
            let coh = Cohomology::new(&model.manifold);
            for _ in 0..3 {
                let g = model.manifold.random_metric(&mut rng);
                if is_balanced(&model.manifold, &g) {
                    assert!(is_strongly_gauduchon(&model.manifold, &g));
                }
                if is_strongly_gauduchon(&model.manifold, &g) {
                    assert!(
                        lee_gauduchon_class(&coh, &g).unwrap().is_zero(),
                        "{}",
                        model.name
                    );
                }
            }
        }
    }
}
