//! The cone `C` of classes `rho` in `H^1` with `d^c rho` positive and
//! nonzero, and its dual, the Lee-Gauduchon cone in `W`.

use std::sync::Arc;

use num::{Signed, Zero};

use super::description::{Certificate, ConeKind, Membership};
use super::error::ConeError;
use super::metrics::{is_gauduchon, lee_gauduchon_class, LeeGauduchonClass};
use super::search::{combination, find_positive_on_slices};
use crate::cohomology::{Cohomology, CohomologyGroup, LeeGauduchonSpace};
use crate::exactla::{
    dot, dual_cone_polyhedral, is_psd_hermitian, kernel, Definiteness, Gaussian, Matrix,
    PolyhedralCone, Rational, Scalar, Subspace,
};
use crate::exterior::HermitianMetric;

/// Orthonormal-free basis (as columns) of the orthogonal complement of the
/// common kernel of `mats`.
fn common_range(n: usize, mats: &[Matrix<Gaussian>]) -> Matrix<Gaussian> {
    let mut rows: Vec<Vec<Gaussian>> = Vec::new();
    for m in mats {
        rows.extend(m.to_rows());
    }
    let ker = if rows.is_empty() {
        Subspace::full(n)
    } else {
        kernel(&Matrix::from_rows_with_cols(rows, n))
    };
    let conj_rows: Vec<Vec<Gaussian>> = ker
        .basis()
        .iter()
        .map(|v| v.iter().map(|z| z.conj()).collect())
        .collect();
    let comp: Vec<Vec<Gaussian>> = if conj_rows.is_empty() {
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| Gaussian::from_i64((i == j) as i64))
                    .collect()
            })
            .collect()
    } else {
        Matrix::from_rows_with_cols(conj_rows, n).kernel_basis()
    };
    if comp.is_empty() {
        Matrix::zeros(n, 0)
    } else {
        Matrix::from_columns(&comp, n)
    }
}

/// Compressions `B^* H B` of Hermitian matrices to the complement of their
/// common kernel. `H` is positive semidefinite iff its compression is, and
/// the compression is definite iff the kernel of `H` is exactly the common
/// one.
pub(crate) fn compress(n: usize, mats: &[Matrix<Gaussian>]) -> Vec<Matrix<Gaussian>> {
    let b = common_range(n, mats);
    let bs = b.conj_transpose();
    mats.iter().map(|h| bs.mul(h).mul(&b)).collect()
}

fn is_diagonal(m: &Matrix<Gaussian>) -> bool {
    (0..m.rows()).all(|i| (0..m.cols()).all(|j| i == j || m[(i, j)].is_zero()))
}

/// Real coordinates of the entries, one row per real entry coordinate.
fn real_entries(mats: &[Matrix<Gaussian>]) -> Matrix<Rational> {
    let r = mats.first().map_or(0, |m| m.rows());
    let mut rows = Vec::new();
    for a in 0..r {
        for b in 0..r {
            rows.push(mats.iter().map(|m| m[(a, b)].re.clone()).collect());
            rows.push(mats.iter().map(|m| m[(a, b)].im.clone()).collect());
        }
    }
    Matrix::from_rows_with_cols(rows, mats.len())
}

/// The cone `C` in `H^1(R)` coordinates.
#[derive(Clone, Debug)]
pub struct PseffCone {
    pub h1: Arc<CohomologyGroup<Rational>>,
    /// Classes with `d^c rho = 0`.
    pub lineality: Subspace<Rational>,
    /// Compressed Hermitian matrix of `d^c rho_j` for each basis class.
    pub matrices: Vec<Matrix<Gaussian>>,
    pub kind: ConeKind,
}

impl PseffCone {
    pub fn dim(&self) -> usize {
        self.h1.dim()
    }

    /// Compressed Hermitian matrix of `d^c rho` for the class `x`.
    pub fn matrix_of(&self, x: &[Rational]) -> Matrix<Gaussian> {
        combination(&self.matrices, x)
    }

    /// Extreme rays modulo the lineality, when polyhedral.
    pub fn rays(&self) -> Option<&[Vec<Rational>]> {
        match &self.kind {
            ConeKind::Polyhedral(c) => Some(c.rays()),
            ConeKind::Empty => Some(&[]),
            _ => None,
        }
    }

    /// Exact: interior when `d^c rho` is definite on the compressed space,
    /// boundary when it is only semidefinite (including zero).
    pub fn membership(&self, x: &[Rational]) -> Result<(Membership, Certificate), ConeError> {
        if x.len() != self.dim() {
            return Err(ConeError::WrongClassSize {
                expected: self.dim(),
                found: x.len(),
            });
        }
        if matches!(self.kind, ConeKind::Empty) {
            return Ok((Membership::Outside, Certificate::Trivial));
        }
        let def = is_psd_hermitian(&self.matrix_of(x))?;
        let verdict = match def {
            Definiteness::PositiveDefinite => Membership::Interior,
            Definiteness::PositiveSemidefinite => Membership::Boundary,
            Definiteness::NotPositive => Membership::Outside,
        };
        Ok((verdict, Certificate::Matrix(def)))
    }
}

pub fn pseff_cone(coh: &Cohomology<'_>) -> Result<PseffCone, ConeError> {
    let m = coh.manifold();
    let h1 = coh.de_rham(1)?;
    let full: Vec<Matrix<Gaussian>> = h1
        .representatives()
        .iter()
        .map(|rho| m.hermitian_matrix(&m.dc(rho)))
        .collect::<Result<_, _>>()?;
    let dim = h1.dim();
    let lineality = if dim == 0 {
        Subspace::zero(0)
    } else {
        kernel(&real_entries(&full))
    };
    let matrices = compress(m.n(), &full);
    let r = matrices.first().map_or(0, |h| h.rows());
    let kind = if r == 0 || dim == 0 {
        ConeKind::Empty
    } else if matrices.iter().all(is_diagonal) {
        let ineq: Vec<Vec<Rational>> = (0..r)
            .map(|a| matrices.iter().map(|h| h[(a, a)].re.clone()).collect())
            .collect();
        polyhedral_or_empty(PolyhedralCone::from_inequalities(dim, &ineq))
    } else if real_entries(&matrices).rank() == 1 {
        // Every d^c rho is a multiple c(rho) H of one matrix H.
        let j = (0..dim)
            .find(|&j| !matrices[j].is_zero())
            .expect("rank one");
        let h = &matrices[j];
        let (a, b) = first_nonzero(h);
        let scale: Vec<Rational> = matrices
            .iter()
            .map(|hk| (hk[(a, b)].clone() / h[(a, b)].clone()).re)
            .collect();
        let pos = is_psd_hermitian(h)?.is_positive();
        let neg = is_psd_hermitian(&h.scale(&Gaussian::from_i64(-1)))?.is_positive();
        match (pos, neg) {
            (true, _) => polyhedral_or_empty(PolyhedralCone::from_inequalities(dim, &[scale])),
            (false, true) => polyhedral_or_empty(PolyhedralCone::from_inequalities(
                dim,
                &[scale.iter().map(|x| -x.clone()).collect()],
            )),
            _ => ConeKind::Empty,
        }
    } else {
        ConeKind::Spectrahedral
    };
    Ok(PseffCone {
        h1,
        lineality,
        matrices,
        kind,
    })
}

fn first_nonzero(h: &Matrix<Gaussian>) -> (usize, usize) {
    for a in 0..h.rows() {
        for b in 0..h.cols() {
            if !h[(a, b)].is_zero() {
                return (a, b);
            }
        }
    }
    unreachable!("nonzero matrix")
}

fn polyhedral_or_empty(c: PolyhedralCone) -> ConeKind {
    if c.rays().is_empty() {
        ConeKind::Empty
    } else {
        ConeKind::Polyhedral(c)
    }
}

/// `LG(M)` in `W` coordinates, the open dual of [`PseffCone`] under
/// `<x, rho> = int rho ^ x`.
#[derive(Clone, Debug)]
pub struct LgCone {
    pub space: LeeGauduchonSpace,
    /// `pairing[(i, j)] = int rho_i ^ w_j` for the `H^1` basis `rho_i` and
    /// the `W` basis `w_j`.
    pub pairing: Matrix<Rational>,
    pub pseff: PseffCone,
    /// `Polyhedral` holds the closure of the cone.
    pub kind: ConeKind,
}

impl LgCone {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// Linear forms `x -> <x, r>` for the extreme rays `r` of `C`.
    pub fn ray_functionals(&self) -> Vec<Vec<Rational>> {
        let pt = self.pairing.transpose();
        self.pseff
            .rays()
            .unwrap_or(&[])
            .iter()
            .map(|r| pt.mul_vec(r))
            .collect()
    }

    pub fn membership(&self, x: &[Rational]) -> Result<(Membership, Certificate), ConeError> {
        if x.len() != self.dim() {
            return Err(ConeError::WrongClassSize {
                expected: self.dim(),
                found: x.len(),
            });
        }
        match &self.kind {
            ConeKind::Whole => Ok((Membership::Interior, Certificate::Trivial)),
            ConeKind::Empty => Ok((Membership::Outside, Certificate::Trivial)),
            ConeKind::Polyhedral(_) => {
                let rays = self.pseff.rays().unwrap_or(&[]);
                let values: Vec<Rational> =
                    self.ray_functionals().iter().map(|f| dot(f, x)).collect();
                if let Some(k) = values.iter().position(|v| v.is_negative()) {
                    return Ok((
                        Membership::Outside,
                        Certificate::Separator {
                            rho: rays[k].clone(),
                            pairing: values[k].clone(),
                        },
                    ));
                }
                let verdict = if values.iter().all(|v| v.is_positive()) {
                    Membership::Interior
                } else {
                    Membership::Boundary
                };
                Ok((verdict, Certificate::Facets(values)))
            }
            ConeKind::Spectrahedral => {
                let c = self.pairing.mul_vec(x);
                match find_positive_on_slices(&self.pseff.matrices, &c) {
                    Some(rho) => {
                        let pairing = dot(&c, &rho);
                        let verdict = if pairing.is_negative() {
                            Membership::Outside
                        } else {
                            Membership::Boundary
                        };
                        Ok((verdict, Certificate::Separator { rho, pairing }))
                    }
                    None => Ok((Membership::Unknown, Certificate::None)),
                }
            }
        }
    }
}

pub fn lg_cone(coh: &Cohomology<'_>) -> Result<LgCone, ConeError> {
    let m = coh.manifold();
    let space = coh.lee_gauduchon_space()?;
    let pseff = pseff_cone(coh)?;
    let w = space.basis_forms();
    let h1 = pseff.h1.representatives();
    let mut pairing = Matrix::zeros(h1.len(), w.len());
    for (i, rho) in h1.iter().enumerate() {
        for (j, x) in w.iter().enumerate() {
            pairing[(i, j)] = m.integrate(&rho.wedge_unchecked(x));
        }
    }
    let kind = if w.is_empty() {
        ConeKind::Whole
    } else {
        match &pseff.kind {
            ConeKind::Empty | ConeKind::Whole => ConeKind::Whole,
            ConeKind::Polyhedral(c) => {
                ConeKind::Polyhedral(dual_cone_polyhedral(c.rays(), &pairing)?.closed)
            }
            ConeKind::Spectrahedral => ConeKind::Spectrahedral,
        }
    };
    Ok(LgCone {
        space,
        pairing,
        pseff,
        kind,
    })
}

/// Lee-Gauduchon classes of the Gauduchon metrics among `metrics`, with
/// their membership in `lg`.
pub fn lg_samples(
    coh: &Cohomology<'_>,
    lg: &LgCone,
    metrics: &[HermitianMetric],
) -> Result<Vec<(LeeGauduchonClass, Membership)>, ConeError> {
    let m = coh.manifold();
    let mut out = Vec::new();
    for g in metrics {
        if !is_gauduchon(m, g) {
            continue;
        }
        let class = lee_gauduchon_class(coh, g)?;
        let verdict = match &class.w_coords {
            Some(w) => lg.membership(w)?.0,
            None => Membership::Outside,
        };
        out.push((class, verdict));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{q, qi};
    use crate::models;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn torus_cones_are_trivial() {
        let t = models::torus(2);
        let coh = Cohomology::new(&t.manifold);
        let c = pseff_cone(&coh).unwrap();
        assert_eq!(c.kind, ConeKind::Empty);
        let lg = lg_cone(&coh).unwrap();
        assert_eq!(lg.dim(), 0);
        assert_eq!(lg.kind, ConeKind::Whole);
        assert_eq!(lg.membership(&[]).unwrap().0, Membership::Interior);
    }

    #[test]
    fn inoue_half_line() {
        let m = models::inoue_s0(q(1, 7));
        let coh = Cohomology::new(&m.manifold);
        let c = pseff_cone(&coh).unwrap();
        assert_eq!(c.rays().unwrap(), &[vec![qi(1)]]);
        // H^1 is spanned by alpha.
        assert_eq!(
            c.h1.representatives()[0],
            crate::exterior::Form::generator(4, 0)
        );
        assert_eq!(c.membership(&[qi(2)]).unwrap().0, Membership::Interior);
        assert_eq!(c.membership(&[qi(0)]).unwrap().0, Membership::Boundary);
        assert_eq!(c.membership(&[qi(-1)]).unwrap().0, Membership::Outside);
        let lg = lg_cone(&coh).unwrap();
        assert_eq!(lg.membership(&[qi(3)]).unwrap().0, Membership::Interior);
        assert_eq!(lg.membership(&[qi(0)]).unwrap().0, Membership::Boundary);
        let (v, cert) = lg.membership(&[qi(-3)]).unwrap();
        assert_eq!(v, Membership::Outside);
        assert!(matches!(cert, Certificate::Separator { .. }));
    }

    #[test]
    fn ot_cone_is_generated_by_alphas() {
        let m = models::ot_generic(2, 1, 11);
        let coh = Cohomology::new(&m.manifold);
        let c = pseff_cone(&coh).unwrap();
        let rays = c.rays().unwrap();
        assert_eq!(rays.len(), 2);
        let lg = lg_cone(&coh).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let metrics: Vec<_> = (0..5).map(|_| m.manifold.random_metric(&mut rng)).collect();
        for (class, verdict) in lg_samples(&coh, &lg, &metrics).unwrap() {
            assert!(class.in_w());
            assert_eq!(verdict, Membership::Interior);
        }
    }

    #[test]
    fn compression_keeps_semidefiniteness() {
        let m = models::kodaira_thurston();
        let coh = Cohomology::new(&m.manifold);
        let c = pseff_cone(&coh).unwrap();
        assert_eq!(c.matrices[0].rows(), 1);
        assert_eq!(c.lineality.dim(), 2);
    }
}
