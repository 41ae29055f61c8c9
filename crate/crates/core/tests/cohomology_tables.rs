//! Cohomology dimensions against published values and general identities.

use lgcone_core::cohomology::{Cohomology, Theory};
use lgcone_core::models::{self, NamedModel};

fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn betti(m: &NamedModel) -> Vec<usize> {
    let coh = Cohomology::new(&m.manifold);
    (0..=m.manifold.ngens())
        .map(|k| coh.de_rham(k).unwrap().dim())
        .collect()
}

fn table(m: &NamedModel, t: Theory) -> Vec<Vec<usize>> {
    let coh = Cohomology::new(&m.manifold);
    let n = m.manifold.n();
    (0..=n)
        .map(|p| (0..=n).map(|q| coh.group(t, p, q).unwrap().dim()).collect())
        .collect()
}

#[test]
fn betti_numbers() {
    for n in 1..=3 {
        let t = models::torus(n);
        assert_eq!(
            betti(&t),
            (0..=2 * n).map(|k| binom(2 * n, k)).collect::<Vec<_>>()
        );
    }
    assert_eq!(betti(&models::kodaira_thurston()), [1, 3, 4, 3, 1]);
    assert_eq!(betti(&models::iwasawa()), [1, 4, 8, 10, 8, 4, 1]);
    // Inoue S^0 and S^1 x S^3 are rational homology S^1 x S^3
    assert_eq!(
        betti(&models::by_name("inoue_s0").unwrap()),
        [1, 1, 0, 1, 1]
    );
    assert_eq!(betti(&models::hopf()), [1, 1, 0, 1, 1]);
    assert_eq!(betti(&models::calabi_eckmann()), [1, 0, 0, 2, 0, 0, 1]);
}

#[test]
fn ot_low_degree_betti_numbers_are_binomial() {
    for (s, seed) in [(2, 1), (3, 2), (2, 9)] {
        let m = models::ot_generic(s, 1, seed);
        let b = betti(&m);
        for (k, bk) in b.iter().enumerate().take(s + 1) {
            assert_eq!(*bk, binom(s, k), "ot({s},1) b{k}");
        }
    }
}

#[test]
fn torus_hodge_numbers() {
    for n in 1..=3 {
        let t = models::torus(n);
        let expected: Vec<Vec<usize>> = (0..=n)
            .map(|p| (0..=n).map(|q| binom(n, p) * binom(n, q)).collect())
            .collect();
        for th in [Theory::Dolbeault, Theory::BottChern, Theory::Aeppli] {
            assert_eq!(table(&t, th), expected, "torus({n}) {th:?}");
        }
    }
}

#[test]
fn iwasawa_tables() {
    let m = models::iwasawa();
    assert_eq!(
        table(&m, Theory::Dolbeault),
        vec![
            vec![1, 2, 2, 1],
            vec![3, 6, 6, 3],
            vec![3, 6, 6, 3],
            vec![1, 2, 2, 1]
        ]
    );
    assert_eq!(
        table(&m, Theory::BottChern),
        vec![
            vec![1, 2, 3, 1],
            vec![2, 4, 6, 2],
            vec![3, 6, 8, 3],
            vec![1, 2, 3, 1]
        ]
    );
}

#[test]
fn calabi_eckmann_dolbeault_ring() {
    // C[x]/(x^2) (x) Lambda(y, z), |x| = (1,1), |y| = (0,1), |z| = (2,1)
    assert_eq!(
        table(&models::calabi_eckmann(), Theory::Dolbeault),
        vec![
            vec![1, 1, 0, 0],
            vec![0, 1, 1, 0],
            vec![0, 1, 1, 0],
            vec![0, 0, 1, 1]
        ]
    );
}

#[test]
fn non_kahler_surfaces_bott_chern_11() {
    // h^{1,1}_BC = b2 - 2 p_g + 1 when b1 is odd
    for name in ["kodaira_thurston", "inoue_s0", "hopf"] {
        let m = models::by_name(name).unwrap();
        let b = betti(&m);
        assert_eq!(b[1] % 2, 1);
        let dol = table(&m, Theory::Dolbeault);
        let bc = table(&m, Theory::BottChern);
        assert_eq!(bc[1][1], b[2] - 2 * dol[2][0] + 1, "{name}");
    }
}

#[test]
fn general_identities() {
    for m in models::bundled() {
        let n = m.manifold.n();
        let dol = table(&m, Theory::Dolbeault);
        let bc = table(&m, Theory::BottChern);
        let ae = table(&m, Theory::Aeppli);
        let b = betti(&m);
        for p in 0..=n {
            for q in 0..=n {
                assert_eq!(dol[p][q], dol[n - p][n - q], "{} Serre ({p},{q})", m.name);
                assert_eq!(bc[p][q], bc[q][p], "{} conjugation ({p},{q})", m.name);
                assert_eq!(ae[p][q], bc[n - p][n - q], "{} BC/AE ({p},{q})", m.name);
            }
        }
        for (k, bk) in b.iter().enumerate() {
            let sum = |t: &Vec<Vec<usize>>| -> usize {
                (0..=n)
                    .filter(|&p| k >= p && k - p <= n)
                    .map(|p| t[p][k - p])
                    .sum()
            };
            assert!(sum(&dol) >= *bk, "{} Frolicher k={k}", m.name);
            assert!(
                sum(&bc) + sum(&ae) >= 2 * bk,
                "{} Angella-Tomassini k={k}",
                m.name
            );
        }
    }
}
