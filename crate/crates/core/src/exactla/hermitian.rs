use std::fmt;

use num::Signed;

use super::error::ExactLaError;
use super::matrix::Matrix;
use super::scalar::{Rational, Scalar};

/// Exact sign classification of a Hermitian form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Definiteness {
    PositiveDefinite,
    PositiveSemidefinite,
    /// Some vector has negative value (indefinite or negative).
    NotPositive,
}

impl Definiteness {
    pub fn is_positive(self) -> bool {
        !matches!(self, Definiteness::NotPositive)
    }
}

impl fmt::Display for Definiteness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Definiteness::PositiveDefinite => "positive definite",
            Definiteness::PositiveSemidefinite => "positive semidefinite",
            Definiteness::NotPositive => "not positive",
        })
    }
}

/// Coefficients `c_0, ..., c_n` of `det(x I - H) = sum c_k x^k`
/// (Faddeev-LeVerrier).
pub fn characteristic_polynomial<F: Scalar>(h: &Matrix<F>) -> Vec<F> {
    assert!(h.is_square());
    let n = h.rows();
    let mut coeffs = vec![F::zero(); n + 1];
    coeffs[n] = F::one();
    let mut m = Matrix::<F>::zeros(n, n);
    let id = Matrix::<F>::identity(n);
    for k in 1..=n {
        // M_k = H M_{k-1} + c_{n-k+1} I,  c_{n-k} = -tr(H M_k) / k
        m = h.mul(&m).add(&id.scale(&coeffs[n - k + 1]));
        let t = h.mul(&m).trace();
        coeffs[n - k] = -(t / F::from_i64(k as i64));
    }
    coeffs
}

/// Exact definiteness of a Hermitian matrix.
///
/// Positive definiteness is decided by leading principal minors.
/// Semidefiniteness uses the characteristic polynomial: all eigenvalues
/// are real, and they are nonnegative iff the coefficients alternate in
/// sign (zeros allowed).
pub fn is_psd_hermitian<F: Scalar>(h: &Matrix<F>) -> Result<Definiteness, ExactLaError> {
    if !h.is_square() || *h != h.conj_transpose() {
        return Err(ExactLaError::NotHermitian);
    }
    let n = h.rows();
    if n == 0 {
        return Ok(Definiteness::PositiveDefinite);
    }
    let real = |x: F| -> Rational { x.to_gaussian().re };
    let leading_positive = (1..=n).all(|k| {
        let idx: Vec<usize> = (0..k).collect();
        real(h.select(&idx, &idx).det()).is_positive()
    });
    if leading_positive {
        return Ok(Definiteness::PositiveDefinite);
    }
    let coeffs = characteristic_polynomial(h);
    let alternating = coeffs.into_iter().enumerate().all(|(k, c)| {
        let c = real(c);
        if (n - k).is_multiple_of(2) {
            !c.is_negative()
        } else {
            !c.is_positive()
        }
    });
    Ok(if alternating {
        Definiteness::PositiveSemidefinite
    } else {
        Definiteness::NotPositive
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::scalar::{gauss, q, qi, Gaussian};

    fn diag(v: &[i64]) -> Matrix<Rational> {
        let mut m = Matrix::zeros(v.len(), v.len());
        for (i, &x) in v.iter().enumerate() {
            m[(i, i)] = qi(x);
        }
        m
    }

    #[test]
    fn trichotomy_on_diagonals() {
        assert_eq!(
            is_psd_hermitian(&diag(&[1, 1, 1])).unwrap(),
            Definiteness::PositiveDefinite
        );
        assert_eq!(
            is_psd_hermitian(&diag(&[1, 0])).unwrap(),
            Definiteness::PositiveSemidefinite
        );
        assert_eq!(
            is_psd_hermitian(&diag(&[1, -1])).unwrap(),
            Definiteness::NotPositive
        );
        assert_eq!(
            is_psd_hermitian(&diag(&[0, 0])).unwrap(),
            Definiteness::PositiveSemidefinite
        );
        assert_eq!(
            is_psd_hermitian(&diag(&[0, -2])).unwrap(),
            Definiteness::NotPositive
        );
    }

    #[test]
    fn zero_leading_minor_but_psd() {
        // [[0,0],[0,1]] has a zero first minor yet is PSD.
        assert_eq!(
            is_psd_hermitian(&diag(&[0, 1])).unwrap(),
            Definiteness::PositiveSemidefinite
        );
    }

    #[test]
    fn complex_rank_one_is_psd() {
        // v v^* with v = (1, i)
        let v = [gauss(qi(1), qi(0)), gauss(qi(0), qi(1))];
        let mut h = Matrix::<Gaussian>::zeros(2, 2);
        for a in 0..2 {
            for b in 0..2 {
                h[(a, b)] = v[a].clone() * v[b].conj();
            }
        }
        assert_eq!(
            is_psd_hermitian(&h).unwrap(),
            Definiteness::PositiveSemidefinite
        );
        h[(0, 0)] += Gaussian::from_rational(q(1, 100));
        assert_eq!(
            is_psd_hermitian(&h).unwrap(),
            Definiteness::PositiveDefinite
        );
    }

    #[test]
    fn non_hermitian_rejected() {
        let mut h = Matrix::<Gaussian>::identity(2);
        h[(0, 1)] = gauss(qi(0), qi(1));
        assert_eq!(is_psd_hermitian(&h), Err(ExactLaError::NotHermitian));
    }

    #[test]
    fn charpoly_of_diagonal() {
        // (x-1)(x-2) = x^2 - 3x + 2
        assert_eq!(
            characteristic_polynomial(&diag(&[1, 2])),
            vec![qi(2), qi(-3), qi(1)]
        );
    }
}
