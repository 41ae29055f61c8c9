//! Named models: presentations, expected facts and generic coefficients.

use lgcone_core::exactla::{q, qi, Matrix};
use lgcone_core::models::{self, ModelError};

#[test]
fn ot_differentials_print_as_displayed() {
    let psi = Matrix::from_rows(vec![vec![q(1, 4), q(1, 3)], vec![q(1, 4), q(1, 6)]]);
    let phi = Matrix::from_rows(vec![vec![qi(1), qi(2)], vec![q(-1, 5), qi(3)]]);
    let model = models::ot_model(2, 2, &psi, &phi).unwrap();
    let m = &model.manifold;
    let lines: Vec<String> = m
        .names()
        .iter()
        .zip(m.algebra().structure())
        .map(|(g, f)| format!("d {g} = {}", f.display(m.names())))
        .collect();
    assert_eq!(
        lines,
        [
            "d a1 = 0",
            "d a2 = 0",
            "d b1 = -a1^b1",
            "d b2 = -a2^b2",
            "d g1 = 1/4 a1^g1 + 1/3 a2^g1 + a1^g2 + 2 a2^g2",
            "d g2 = -a1^g1 - 2 a2^g1 + 1/4 a1^g2 + 1/3 a2^g2",
            "d g3 = 1/4 a1^g3 + 1/6 a2^g3 - 1/5 a1^g4 + 3 a2^g4",
            "d g4 = 1/5 a1^g3 - 3 a2^g3 + 1/4 a1^g4 + 1/6 a2^g4",
        ]
    );
}

#[test]
fn ot_unimodularity_constraint_is_reported() {
    let psi = Matrix::from_rows(vec![vec![q(1, 2), q(1, 3)]]);
    let phi = Matrix::from_rows(vec![vec![qi(1), qi(1)]]);
    match models::ot_model(2, 1, &psi, &phi) {
        Err(ModelError::NotUnimodular { violated, .. }) => assert_eq!(violated, vec![1]),
        other => panic!("{:?}", other.err()),
    }
    // (1,1): the psi coefficient is forced to 1/2
    for a in [q(1, 3), qi(1), q(-1, 2)] {
        assert!(models::ot_model(
            1,
            1,
            &Matrix::from_rows(vec![vec![a]]),
            &Matrix::from_rows(vec![vec![qi(1)]])
        )
        .is_err());
    }
}

#[test]
fn every_bundled_fact_holds() {
    for model in models::bundled() {
        for outcome in model.check() {
            assert!(outcome.holds, "{}: {outcome}", model.name);
        }
    }
}

#[test]
fn generic_coefficients_are_reproducible_and_unimodular() {
    for (s, t) in [(1, 1), (2, 1), (3, 1), (2, 2), (1, 3)] {
        let a = models::ot_generic_coefficients(s, t, 42);
        assert_eq!(a, models::ot_generic_coefficients(s, t, 42));
        assert_ne!(a, models::ot_generic_coefficients(s, t, 43));
        assert!(models::ot_unimodularity_violations(&a.0).is_empty());
        assert!(models::ot_generic(s, t, 42).manifold.is_unimodular());
    }
}

#[test]
fn small_tori() {
    let t = models::torus(1);
    assert_eq!(t.manifold.ngens(), 2);
    let t = models::torus(3);
    let omega = t.manifold.standard_form();
    // omega^3 = 3! vol
    assert_eq!(*omega.power(3).unwrap().top_coefficient(), qi(6));
}
