//! Pseudo-effective, Lee-Gauduchon and Gauduchon cones on the bundled models.

use lgcone_core::cohomology::Cohomology;
use lgcone_core::cones::{self, Certificate, ConeKind, Membership};
use lgcone_core::exactla::{q, qi, Definiteness, Rational};
use lgcone_core::exterior::Form;
use lgcone_core::models;
use num::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Same ray up to a positive factor.
fn same_ray(a: &[Rational], b: &[Rational]) -> bool {
    let k = (0..a.len()).find(|&i| !a[i].is_zero());
    match k {
        None => b.iter().all(Zero::is_zero),
        Some(k) => {
            if b[k].is_zero() || (a[k].is_positive() != b[k].is_positive()) {
                return false;
            }
            let r = b[k].clone() / a[k].clone();
            a.iter().zip(b).all(|(x, y)| x.clone() * r.clone() == *y)
        }
    }
}

#[test]
fn ot_pseudo_effective_cone_is_generated_by_alphas() {
    for (s, seed) in [(1, 4), (2, 1), (3, 2), (2, 7)] {
        let model = models::ot_generic(s, 1, seed);
        let m = &model.manifold;
        let coh = Cohomology::new(m);
        let c = cones::pseff_cone(&coh).unwrap();
        let ConeKind::Polyhedral(p) = &c.kind else {
            panic!("ot({s},1): {:?}", c.kind.name())
        };
        assert!(c.lineality.is_zero());
        let alphas: Vec<Vec<Rational>> = (0..s)
            .map(|i| c.h1.project(&Form::generator(m.ngens(), i)).unwrap())
            .collect();
        assert_eq!(p.rays().len(), s);
        for a in &alphas {
            assert!(p.rays().iter().any(|r| same_ray(r, a)), "ot({s},1)");
        }
    }
}

#[test]
fn ot_lee_gauduchon_cone_is_the_open_dual() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for (s, seed) in [(2, 1), (3, 2)] {
        let model = models::ot_generic(s, 1, seed);
        let m = &model.manifold;
        let coh = Cohomology::new(m);
        let lg = cones::lg_cone(&coh).unwrap();
        assert_eq!(lg.dim(), s);
        let basis = lg.space.basis_forms();
        for _ in 0..40 {
            let x: Vec<Rational> = (0..s).map(|_| qi(rng.gen_range(-4..=4))).collect();
            let form = basis
                .iter()
                .zip(&x)
                .fold(Form::zero(m.ngens()), |acc, (b, c)| acc.add(&b.scale(c)));
            // direct pairing with each alpha_i
            let values: Vec<Rational> = (0..s)
                .map(|i| m.integrate(&Form::generator(m.ngens(), i).wedge_unchecked(&form)))
                .collect();
            let expected = if values.iter().all(|v| v.is_positive()) {
                Membership::Interior
            } else if values.iter().any(|v| v.is_negative()) {
                Membership::Outside
            } else {
                Membership::Boundary
            };
            assert_eq!(lg.membership(&x).unwrap().0, expected, "ot({s},1) at {x:?}");
        }
    }
}

#[test]
fn inoue_half_line() {
    let model = models::by_name("inoue_s0").unwrap();
    let m = &model.manifold;
    let coh = Cohomology::new(m);
    let lg = cones::lg_cone(&coh).unwrap();
    assert_eq!(lg.dim(), 1);
    let w = &lg.space.basis_forms()[0];
    let sign = m.integrate(&Form::generator(4, 0).wedge_unchecked(w));
    assert!(!sign.is_zero());
    let positive = if sign.is_positive() { qi(1) } else { qi(-1) };
    assert_eq!(
        lg.membership(std::slice::from_ref(&positive)).unwrap().0,
        Membership::Interior
    );
    assert_eq!(lg.membership(&[-positive]).unwrap().0, Membership::Outside);
    assert_eq!(lg.membership(&[qi(0)]).unwrap().0, Membership::Boundary);
    let lck = cones::lck_lee_form(m, model.metric("lck").unwrap()).unwrap();
    assert_eq!(lck.theta, Form::generator(4, 0));
}

#[test]
fn gauduchon_metrics_land_in_the_lee_gauduchon_cone() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for model in models::bundled() {
        let m = &model.manifold;
        let coh = Cohomology::new(m);
        let lg = cones::lg_cone(&coh).unwrap();
        let metrics: Vec<_> = (0..6).map(|_| m.random_metric(&mut rng)).collect();
        if m.n() == 2 {
            // every invariant metric on a unimodular surface is Gauduchon
            assert!(
                metrics.iter().all(|g| cones::is_gauduchon(m, g)),
                "{}",
                model.name
            );
        }
        for (class, verdict) in cones::lg_samples(&coh, &lg, &metrics).unwrap() {
            assert!(class.in_w(), "{}", model.name);
            assert_ne!(verdict, Membership::Outside, "{}", model.name);
        }
    }
}

#[test]
fn lee_form_coclosed_iff_gauduchon() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut manifolds: Vec<_> = models::bundled().into_iter().map(|m| m.manifold).collect();
    manifolds.push(models::inoue_variant(q(1, 3), q(2, 5)).unwrap());
    let mut seen = [0usize; 2];
    for m in &manifolds {
        for _ in 0..10 {
            let g = m.random_metric(&mut rng);
            let gd = cones::is_gauduchon(m, &g);
            assert_eq!(cones::lee_form_coclosed(m, &g), gd);
            seen[gd as usize] += 1;
        }
    }
    assert!(seen[0] > 0 && seen[1] > 0);
}

#[test]
fn non_unimodular_input_is_rejected_where_integration_is_needed() {
    let m = models::inoue_variant(q(1, 3), q(2, 5)).unwrap();
    let coh = Cohomology::new(&m);
    assert!(coh.lee_gauduchon_space().is_err());
    assert!(cones::lg_cone(&coh).is_err());
    assert!(models::ot_model(
        1,
        1,
        &lgcone_core::exactla::Matrix::from_rows(vec![vec![q(1, 3)]]),
        &lgcone_core::exactla::Matrix::from_rows(vec![vec![q(2, 5)]])
    )
    .is_err());
}

#[test]
fn iwasawa_balanced_metric() {
    let model = models::iwasawa();
    let m = &model.manifold;
    let g = m.standard_metric();
    assert!(cones::is_balanced(m, &g));
    assert!(cones::is_strongly_gauduchon(m, &g));
    let coh = Cohomology::new(m);
    assert!(cones::lee_gauduchon_class(&coh, &g).unwrap().is_zero());
    assert_eq!(cones::lg_cone(&coh).unwrap().kind, ConeKind::Whole);
}

#[test]
fn minus_d_beta_is_positive_on_ot_models() {
    for (s, t, seed) in [(1, 1, 0), (2, 1, 1), (3, 1, 2), (2, 2, 3)] {
        let model = models::ot_generic(s, t, seed);
        let m = &model.manifold;
        for i in 0..s {
            let minus_db = m.d(&Form::generator(m.ngens(), s + i)).neg();
            assert!(!minus_db.is_zero());
            assert_ne!(
                m.is_positive_11(&minus_db).unwrap(),
                Definiteness::NotPositive
            );
        }
    }
}

#[test]
fn gauduchon_membership_certificates_revalidate() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for name in ["torus2", "iwasawa", "inoue_s0"] {
        let model = models::by_name(name).unwrap();
        let m = &model.manifold;
        let coh = Cohomology::new(m);
        let ae = coh.aeppli_real(m.n() - 1).unwrap();
        // classes of omega^{n-1} for Gauduchon metrics are inside
        for _ in 0..3 {
            let g = m.random_metric(&mut rng);
            if !cones::is_gauduchon(m, &g) {
                continue;
            }
            let class = ae.project(&g.omega().power(m.n() - 1).unwrap()).unwrap();
            let res = cones::gauduchon_cone_membership(&coh, &class).unwrap();
            assert_ne!(res.verdict, Membership::Outside, "{name}");
        }
        for _ in 0..6 {
            let class: Vec<Rational> = (0..ae.dim()).map(|_| qi(rng.gen_range(-3..=3))).collect();
            let res = cones::gauduchon_cone_membership(&coh, &class).unwrap();
            if !matches!(res.certificate, Certificate::None) {
                assert!(
                    cones::validate_certificate(&coh, &class, &res.certificate).unwrap(),
                    "{name}"
                );
            }
        }
    }
}

#[test]
fn calabi_eckmann_has_a_closed_positive_bott_chern_class() {
    let model = models::calabi_eckmann();
    let m = &model.manifold;
    let coh = Cohomology::new(m);
    let bc = coh.bott_chern_real(1).unwrap();
    let found = bc.numerator().basis().iter().any(|v| {
        let f = Form::from_vector(m.ngens(), 2, v);
        let def = m.is_positive_11(&f).unwrap();
        let def_neg = m.is_positive_11(&f.neg()).unwrap();
        let nonzero = bc.project(&f).unwrap().iter().any(|x| !x.is_zero());
        nonzero && (def != Definiteness::NotPositive || def_neg != Definiteness::NotPositive)
    });
    assert!(found);
    assert_eq!(coh.lee_gauduchon_space().unwrap().dim(), 0);
}
