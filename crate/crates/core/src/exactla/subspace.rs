use num::Zero;

use super::error::ExactLaError;
use super::matrix::{dot, Matrix};
use super::scalar::Scalar;

/// A linear subspace of `F^ambient`, stored by its reduced row echelon
/// basis. Two subspaces are equal iff their stored bases are equal.
#[derive(Clone, Debug, PartialEq)]
pub struct Subspace<F> {
    ambient: usize,
    basis: Vec<Vec<F>>,
}

impl<F: Scalar> Subspace<F> {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self::from_rref(Matrix::identity(ambient), ambient)
    }

    /// Span of arbitrary (possibly dependent) vectors.
    pub fn span(ambient: usize, vectors: &[Vec<F>]) -> Self {
        if vectors.is_empty() {
            return Self::zero(ambient);
        }
        Self::from_rref(Matrix::from_rows(vectors.to_vec()), ambient)
    }

    fn from_rref(m: Matrix<F>, ambient: usize) -> Self {
        let e = m.echelon();
        let basis = (0..e.pivots.len()).map(|i| e.reduced.row_vec(i)).collect();
        Subspace { ambient, basis }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<F>] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn contains(&self, v: &[F]) -> bool {
        assert_eq!(v.len(), self.ambient);
        if v.iter().all(Zero::is_zero) {
            return true;
        }
        // The basis is in reduced echelon form: subtracting the pivot
        // multiples leaves zero iff v lies in the span.
        let mut rest = v.to_vec();
        for b in &self.basis {
            let p = b
                .iter()
                .position(|x| !x.is_zero())
                .expect("nonzero basis vector");
            let c = rest[p].clone();
            if c.is_zero() {
                continue;
            }
            for (r, x) in rest.iter_mut().zip(b) {
                if !x.is_zero() {
                    *r -= c.mul_ref(x);
                }
            }
        }
        rest.iter().all(Zero::is_zero)
    }

    pub fn contains_subspace(&self, other: &Self) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Self) -> Self {
        let mut all = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        Self::span(self.ambient, &all)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.ambient);
        }
        // Solve sum a_i u_i - sum b_j w_j = 0.
        let mut cols = self.basis.clone();
        cols.extend(
            other
                .basis
                .iter()
                .map(|w| w.iter().map(|x| -x.clone()).collect()),
        );
        let m = Matrix::from_columns(&cols, self.ambient);
        let vectors: Vec<Vec<F>> = m
            .kernel_basis()
            .into_iter()
            .map(|coef| combine(&self.basis, &coef[..self.basis.len()], self.ambient))
            .collect();
        Self::span(self.ambient, &vectors)
    }

    /// Orthogonal complement with respect to the bilinear (not sesquilinear)
    /// dot product.
    pub fn annihilator(&self) -> Self {
        if self.is_zero() {
            return Self::full(self.ambient);
        }
        let m = Matrix::from_rows(self.basis.clone());
        Self::span(self.ambient, &m.kernel_basis())
    }

    /// Coordinates of `v` with respect to the stored basis.
    pub fn coordinates(&self, v: &[F]) -> Option<Vec<F>> {
        if self.is_zero() {
            return v.iter().all(Zero::is_zero).then(Vec::new);
        }
        let coords: Vec<F> = self
            .basis
            .iter()
            .map(|b| {
                let p = b.iter().position(|x| !x.is_zero()).unwrap();
                v[p].clone()
            })
            .collect();
        (combine(&self.basis, &coords, self.ambient) == v).then_some(coords)
    }

    pub fn map_scalars<G: Scalar>(&self, f: impl Fn(&F) -> G) -> Subspace<G> {
        let vectors: Vec<Vec<G>> = self
            .basis
            .iter()
            .map(|b| b.iter().map(&f).collect())
            .collect();
        Subspace::span(self.ambient, &vectors)
    }
}

/// `sum_i coef_i * vectors_i`.
pub fn combine<F: Scalar>(vectors: &[Vec<F>], coef: &[F], ambient: usize) -> Vec<F> {
    let mut out = vec![F::zero(); ambient];
    for (v, c) in vectors.iter().zip(coef) {
        if c.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(v) {
            if !x.is_zero() {
                *o += c.mul_ref(x);
            }
        }
    }
    out
}

/// Null space of a matrix as a subspace of its column space.
pub fn kernel<F: Scalar>(m: &Matrix<F>) -> Subspace<F> {
    Subspace::span(m.cols(), &m.kernel_basis())
}

/// Column space of a matrix.
pub fn image<F: Scalar>(m: &Matrix<F>) -> Subspace<F> {
    let cols: Vec<Vec<F>> = (0..m.cols()).map(|j| m.column(j)).collect();
    Subspace::span(m.rows(), &cols)
}

/// The quotient `ambient / sub` with chosen representatives and a linear
/// projection onto class coordinates.
#[derive(Clone, Debug)]
pub struct Quotient<F> {
    ambient_dim: usize,
    sub_dim: usize,
    // Sub basis followed by the representatives.
    combined: Vec<Vec<F>>,
    // Left inverse of `combined`, read off at its pivot coordinates.
    pivots: Vec<usize>,
    coord_map: Matrix<F>,
}

impl<F: Scalar> Quotient<F> {
    pub fn new(ambient: &Subspace<F>, sub: &Subspace<F>) -> Result<Self, ExactLaError> {
        if ambient.ambient() != sub.ambient() {
            return Err(ExactLaError::DimensionMismatch {
                expected: ambient.ambient(),
                found: sub.ambient(),
            });
        }
        if !ambient.contains_subspace(sub) {
            return Err(ExactLaError::SubspaceNotContained);
        }
        let n = ambient.ambient();
        // Complete the sub basis greedily by ambient basis vectors, in
        // echelon order.
        let mut combined: Vec<Vec<F>> = sub.basis().to_vec();
        let mut span = sub.clone();
        for v in ambient.basis() {
            if !span.contains(v) {
                combined.push(v.clone());
                span = Subspace::span(n, &combined);
            }
        }
        let k = combined.len();
        let (pivots, coord_map) = if k == 0 {
            (Vec::new(), Matrix::zeros(0, 0))
        } else {
            let b = Matrix::from_rows(combined.clone());
            let e = b.hstack(&Matrix::identity(k)).echelon();
            debug_assert!(e.pivots.len() >= k && e.pivots[k - 1] < n);
            let pivots = e.pivots[..k].to_vec();
            let rows: Vec<usize> = (0..k).collect();
            let cols: Vec<usize> = (n..n + k).collect();
            // Row r of the reduced matrix is (E B)_r, so v = (v[pivots])^T E B.
            (pivots, e.reduced.select(&rows, &cols).transpose())
        };
        Ok(Quotient {
            ambient_dim: n,
            sub_dim: sub.dim(),
            combined,
            pivots,
            coord_map,
        })
    }

    pub fn dim(&self) -> usize {
        self.combined.len() - self.sub_dim
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn representatives(&self) -> &[Vec<F>] {
        &self.combined[self.sub_dim..]
    }

    /// Class coordinates of `v`, which must lie in the ambient subspace.
    pub fn project(&self, v: &[F]) -> Result<Vec<F>, ExactLaError> {
        let full = self.full_coordinates(v)?;
        Ok(full[self.sub_dim..].to_vec())
    }

    /// Whether `v` lies in the ambient subspace and projects to zero.
    pub fn is_trivial(&self, v: &[F]) -> Result<bool, ExactLaError> {
        Ok(self.project(v)?.iter().all(Zero::is_zero))
    }

    /// Representative with the given class coordinates.
    pub fn lift(&self, coords: &[F]) -> Vec<F> {
        combine(self.representatives(), coords, self.ambient_dim)
    }

    fn full_coordinates(&self, v: &[F]) -> Result<Vec<F>, ExactLaError> {
        if v.len() != self.ambient_dim {
            return Err(ExactLaError::DimensionMismatch {
                expected: self.ambient_dim,
                found: v.len(),
            });
        }
        let k = self.pivots.len();
        let coords: Vec<F> = if k == 0 {
            Vec::new()
        } else {
            let vp: Vec<F> = self.pivots.iter().map(|&p| v[p].clone()).collect();
            (0..k).map(|i| dot(self.coord_map.row(i), &vp)).collect()
        };
        if combine(&self.combined, &coords, self.ambient_dim) == v {
            Ok(coords)
        } else {
            Err(ExactLaError::NotInAmbient)
        }
    }
}

/// `ambient / sub`.
pub fn quotient<F: Scalar>(
    ambient: &Subspace<F>,
    sub: &Subspace<F>,
) -> Result<Quotient<F>, ExactLaError> {
    Quotient::new(ambient, sub)
}
