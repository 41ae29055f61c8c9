//! Polyhedral cones over the rationals via the double description method.

use num::bigint::BigInt;
use num::integer::Integer;
use num::{One, Signed, Zero};

use super::error::ExactLaError;
use super::matrix::{dot, Matrix};
use super::scalar::Rational;
use super::subspace::Subspace;

/// A closed polyhedral cone `{x : f . x >= 0 for all facets f}` together
/// with its generators `lineality + cone(rays)`.
///
/// Rays and facet normals are primitive integer vectors, sorted.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyhedralCone {
    dim: usize,
    rays: Vec<Vec<Rational>>,
    lineality: Subspace<Rational>,
    facets: Vec<Vec<Rational>>,
    equalities: Subspace<Rational>,
}

impl PolyhedralCone {
    /// The cone `{x : a . x >= 0 for every row a}`.
    pub fn from_inequalities(dim: usize, inequalities: &[Vec<Rational>]) -> Self {
        let (lineality, rays) = double_description(dim, inequalities);
        let lineality = Subspace::span(dim, &lineality);
        // Facets: the generators of the dual cone.
        let mut dual_ineq: Vec<Vec<Rational>> = rays.clone();
        for l in lineality.basis() {
            dual_ineq.push(l.clone());
            dual_ineq.push(l.iter().map(|x| -x.clone()).collect());
        }
        let (eq, facets) = double_description(dim, &dual_ineq);
        PolyhedralCone {
            dim,
            rays: canonical_rays(rays),
            lineality,
            facets: canonical_rays(facets),
            equalities: Subspace::span(dim, &eq),
        }
    }

    /// The cone `span(lineality) + cone(rays)`.
    pub fn from_generators(
        dim: usize,
        rays: &[Vec<Rational>],
        lineality: &[Vec<Rational>],
    ) -> Self {
        let mut ineq: Vec<Vec<Rational>> = rays.to_vec();
        for l in lineality {
            ineq.push(l.clone());
            ineq.push(l.iter().map(|x| -x.clone()).collect());
        }
        // The dual cone's generators are our facet normals; feeding those
        // back through from_inequalities gives a canonical description.
        let (eq, facets) = double_description(dim, &ineq);
        let mut all_ineq = facets.clone();
        for e in &eq {
            all_ineq.push(e.clone());
            all_ineq.push(e.iter().map(|x| -x.clone()).collect());
        }
        Self::from_inequalities(dim, &all_ineq)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rays(&self) -> &[Vec<Rational>] {
        &self.rays
    }

    pub fn lineality(&self) -> &Subspace<Rational> {
        &self.lineality
    }

    /// Irredundant inequalities `f . x >= 0` (modulo the equalities).
    pub fn facets(&self) -> &[Vec<Rational>] {
        &self.facets
    }

    /// Linear forms vanishing on the whole cone.
    pub fn equalities(&self) -> &Subspace<Rational> {
        &self.equalities
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        self.equalities.basis().iter().all(|e| dot(e, x).is_zero())
            && self.facets.iter().all(|f| !dot(f, x).is_negative())
    }

    /// Whether `x` is in the relative interior.
    pub fn contains_relative_interior(&self, x: &[Rational]) -> bool {
        self.equalities.basis().iter().all(|e| dot(e, x).is_zero())
            && self.facets.iter().all(|f| dot(f, x).is_positive())
    }

    pub fn is_pointed(&self) -> bool {
        self.lineality.is_zero()
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.equalities.is_zero()
    }
}

/// Result of [`dual_cone_polyhedral`]: the closed dual cone plus the open
/// variant flag.
#[derive(Clone, Debug, PartialEq)]
pub struct ConeDual {
    pub closed: PolyhedralCone,
    /// `{x : <x, r> > 0 for all nonzero r in the primal}`, which is the
    /// interior of `closed` when the primal cone is pointed.
    pub open_is_interior: bool,
}

/// The dual of `cone(rays)` under the bilinear pairing
/// `<r, x> = r^T pairing x`, with rays living in the left space.
pub fn dual_cone_polyhedral(
    rays: &[Vec<Rational>],
    pairing: &Matrix<Rational>,
) -> Result<ConeDual, ExactLaError> {
    let right = pairing.cols();
    let rank = pairing.rank();
    if rank < right {
        return Err(ExactLaError::DegeneratePairing {
            rank,
            needed: right,
        });
    }
    let left = pairing.rows();
    let pt = pairing.transpose();
    let ineq: Vec<Vec<Rational>> = rays
        .iter()
        .map(|r| {
            assert_eq!(r.len(), left);
            pt.mul_vec(r)
        })
        .collect();
    let closed = PolyhedralCone::from_inequalities(right, &ineq);
    let primal = PolyhedralCone::from_generators(left, rays, &[]);
    Ok(ConeDual {
        closed,
        open_is_interior: primal.is_pointed(),
    })
}

/// Double description: generators of `{x : A x >= 0}` as
/// (lineality basis, extreme rays).
fn double_description(
    dim: usize,
    inequalities: &[Vec<Rational>],
) -> (Vec<Vec<Rational>>, Vec<Vec<Rational>>) {
    let mut lineality: Vec<Vec<Rational>> = (0..dim)
        .map(|i| {
            let mut v = vec![Rational::zero(); dim];
            v[i] = Rational::one();
            v
        })
        .collect();
    let mut rays: Vec<Vec<Rational>> = Vec::new();
    let mut done: Vec<Vec<Rational>> = Vec::new();

    for a in inequalities {
        assert_eq!(a.len(), dim);
        if a.iter().all(Zero::is_zero) {
            continue;
        }
        if let Some(idx) = lineality.iter().position(|l| !dot(a, l).is_zero()) {
            let mut l0 = lineality.remove(idx);
            if dot(a, &l0).is_negative() {
                l0 = neg(&l0);
            }
            let a0 = dot(a, &l0);
            for v in lineality.iter_mut().chain(rays.iter_mut()) {
                let c = dot(a, v) / a0.clone();
                if !c.is_zero() {
                    for (x, y) in v.iter_mut().zip(&l0) {
                        *x -= c.clone() * y.clone();
                    }
                }
            }
            rays.push(l0);
        } else {
            let values: Vec<Rational> = rays.iter().map(|r| dot(a, r)).collect();
            let zero_sets: Vec<Vec<bool>> = rays
                .iter()
                .map(|r| done.iter().map(|c| dot(c, r).is_zero()).collect())
                .collect();
            let mut next: Vec<Vec<Rational>> = Vec::new();
            for (r, v) in rays.iter().zip(&values) {
                if !v.is_negative() {
                    next.push(r.clone());
                }
            }
            for (i, vp) in values.iter().enumerate().filter(|(_, v)| v.is_positive()) {
                for (j, vn) in values.iter().enumerate().filter(|(_, v)| v.is_negative()) {
                    if !adjacent(i, j, &zero_sets) {
                        continue;
                    }
                    let new: Vec<Rational> = rays[j]
                        .iter()
                        .zip(&rays[i])
                        .map(|(n, p)| vp.clone() * n.clone() - vn.clone() * p.clone())
                        .collect();
                    next.push(new);
                }
            }
            rays = next;
        }
        done.push(a.clone());
        rays = dedup(rays);
    }
    (lineality, rays)
}

/// Combinatorial adjacency test: no third ray is tight on every
/// constraint on which both are tight.
fn adjacent(i: usize, j: usize, zero_sets: &[Vec<bool>]) -> bool {
    let common: Vec<bool> = zero_sets[i]
        .iter()
        .zip(&zero_sets[j])
        .map(|(a, b)| *a && *b)
        .collect();
    !zero_sets
        .iter()
        .enumerate()
        .any(|(k, zk)| k != i && k != j && common.iter().zip(zk).all(|(c, z)| !*c || *z))
}

fn neg(v: &[Rational]) -> Vec<Rational> {
    v.iter().map(|x| -x.clone()).collect()
}

/// Scale to a primitive integer vector.
fn primitive(v: &[Rational]) -> Vec<Rational> {
    let mut lcm = BigInt::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v
        .iter()
        .map(|x| (x * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    if g.is_zero() {
        return v.to_vec();
    }
    ints.into_iter()
        .map(|x| Rational::from_integer(x / g.clone()))
        .collect()
}

fn dedup(rays: Vec<Vec<Rational>>) -> Vec<Vec<Rational>> {
    let mut out: Vec<Vec<Rational>> = Vec::new();
    for r in rays {
        if r.iter().all(Zero::is_zero) {
            continue;
        }
        let p = primitive(&r);
        if !out.contains(&p) {
            out.push(p);
        }
    }
    out
}

fn canonical_rays(rays: Vec<Vec<Rational>>) -> Vec<Vec<Rational>> {
    let mut r = dedup(rays);
    r.sort();
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::scalar::qi;

    fn v(x: &[i64]) -> Vec<Rational> {
        x.iter().map(|&a| qi(a)).collect()
    }

    #[test]
    fn orthant_is_self_dual() {
        let c =
            PolyhedralCone::from_inequalities(3, &[v(&[1, 0, 0]), v(&[0, 1, 0]), v(&[0, 0, 1])]);
        assert_eq!(c.rays(), &[v(&[0, 0, 1]), v(&[0, 1, 0]), v(&[1, 0, 0])]);
        assert!(c.is_pointed() && c.is_full_dimensional());
        let d = dual_cone_polyhedral(c.rays(), &Matrix::identity(3)).unwrap();
        assert_eq!(d.closed, c);
        assert!(d.open_is_interior);
    }

    #[test]
    fn single_ray_gives_half_plane() {
        let d = dual_cone_polyhedral(&[v(&[1, 0])], &Matrix::identity(2)).unwrap();
        assert_eq!(d.closed.lineality().dim(), 1);
        assert_eq!(d.closed.facets(), &[v(&[1, 0])]);
        assert!(d.closed.contains(&v(&[0, 5])));
        assert!(!d.closed.contains(&v(&[-1, 5])));
    }

    #[test]
    fn redundant_generators_are_pruned() {
        let c = PolyhedralCone::from_generators(
            2,
            &[v(&[1, 0]), v(&[1, 1]), v(&[0, 1]), v(&[2, 1])],
            &[],
        );
        assert_eq!(c.rays(), &[v(&[0, 1]), v(&[1, 0])]);
        assert_eq!(c.facets().len(), 2);
    }

    #[test]
    fn lower_dimensional_cone_has_equalities() {
        let c = PolyhedralCone::from_generators(3, &[v(&[1, 0, 0]), v(&[0, 1, 0])], &[]);
        assert_eq!(c.equalities().dim(), 1);
        assert!(c.contains(&v(&[1, 1, 0])));
        assert!(!c.contains(&v(&[1, 1, 1])));
    }

    #[test]
    fn double_dual_recovers_cone() {
        let rays = vec![v(&[1, 0, 1]), v(&[0, 1, 1]), v(&[-1, 0, 1]), v(&[0, -1, 1])];
        let c = PolyhedralCone::from_generators(3, &rays, &[]);
        let d = dual_cone_polyhedral(&rays, &Matrix::identity(3)).unwrap();
        let dd = dual_cone_polyhedral(d.closed.rays(), &Matrix::identity(3)).unwrap();
        assert_eq!(dd.closed, c);
        assert_eq!(c.rays().len(), 4);
    }

    #[test]
    fn degenerate_pairing_is_rejected() {
        let p = Matrix::from_rows(vec![v(&[1, 0]), v(&[0, 0])]);
        assert!(matches!(
            dual_cone_polyhedral(&[v(&[1, 0])], &p),
            Err(ExactLaError::DegeneratePairing { rank: 1, needed: 2 })
        ));
    }
}
