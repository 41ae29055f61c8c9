use nalgebra::{Complex, DMatrix};
use num::{Signed, Zero};
use rand::Rng;

use super::basis::{basis, degree, wedge_sign};
use super::complex::Manifold;
use super::error::ExteriorError;
use super::form::Form;
use crate::exactla::{
    approximate, gauss, is_psd_hermitian, q, qi, to_f64, Definiteness, Gaussian, Matrix, Rational,
    Scalar,
};

/// A left-invariant Hermitian metric, stored as its fundamental form.
#[derive(Clone, Debug, PartialEq)]
pub struct HermitianMetric {
    omega: Form<Rational>,
    h: Matrix<Gaussian>,
}

impl HermitianMetric {
    /// The real (1,1)-form `omega`.
    pub fn omega(&self) -> &Form<Rational> {
        &self.omega
    }

    /// `h` with `omega = (i/2) sum h_ab z_a ^ zb_b`.
    pub fn hermitian(&self) -> &Matrix<Gaussian> {
        &self.h
    }
}

/// Residual report of [`Manifold::hermitian_root`].
#[derive(Clone, Debug)]
pub struct RootReport {
    pub metric: HermitianMetric,
    /// `max |coef(omega^{n-1} - phi)| / max |coef(phi)|`, computed exactly
    /// and then rounded.
    pub relative_residual: f64,
    pub exact: bool,
}

impl Manifold {
    pub fn metric(&self, omega: &Form<Rational>) -> Result<HermitianMetric, ExteriorError> {
        let h = self.hermitian_matrix(omega)?;
        if is_psd_hermitian(&h)? != Definiteness::PositiveDefinite {
            return Err(ExteriorError::NotPositiveDefinite);
        }
        Ok(HermitianMetric {
            omega: omega.clone(),
            h,
        })
    }

    pub fn metric_from_hermitian(
        &self,
        h: &Matrix<Gaussian>,
    ) -> Result<HermitianMetric, ExteriorError> {
        let omega = self.form_from_hermitian(h)?;
        self.metric(&omega)
    }

    /// The metric with `h = Id` in the canonical frame.
    pub fn standard_metric(&self) -> HermitianMetric {
        self.metric(&self.standard_form())
            .expect("standard form is positive")
    }

    /// `h = A A^* + Id` with small random Gaussian-integer `A`.
    pub fn random_metric<R: Rng + ?Sized>(&self, rng: &mut R) -> HermitianMetric {
        let n = self.n();
        let mut a = Matrix::<Gaussian>::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                a[(i, j)] = gauss(qi(rng.gen_range(-3..=3)), qi(rng.gen_range(-3..=3)));
            }
        }
        let h = a.mul(&a.conj_transpose()).add(&Matrix::identity(n));
        self.metric_from_hermitian(&h)
            .expect("A A^* + Id is positive definite")
    }

    pub fn is_positive_11(&self, f: &Form<Rational>) -> Result<Definiteness, ExteriorError> {
        Ok(is_psd_hermitian(&self.hermitian_matrix(f)?)?)
    }

    /// Hermitian matrix `M_ab = int phi ^ (i/2) z_a ^ zb_b` of a real
    /// (n-1,n-1)-form, so that `int phi ^ (i/2) xi ^ conj(xi) = v^T M conj(v)`
    /// for `xi = sum v_a z_a`.
    pub fn n1n1_matrix(&self, phi: &Form<Rational>) -> Result<Matrix<Gaussian>, ExteriorError> {
        let n = self.n();
        let z = self.complexify(phi);
        if !self.has_bidegree(&z, n - 1, n - 1) {
            return Err(ExteriorError::WrongBidegree {
                expected: (n - 1, n - 1),
                found: self.describe_bidegrees(&z),
            });
        }
        let half_i = gauss(qi(0), q(1, 2));
        let mut m = Matrix::zeros(n, n);
        for a in 0..n {
            for b in 0..n {
                let t = Form::monomial(self.ngens(), (1 << a) | (1 << (n + b)), half_i.clone());
                m[(a, b)] = self.integrate_complex(&z.wedge_unchecked(&t));
            }
        }
        Ok(m)
    }

    pub fn is_positive_n1n1(&self, phi: &Form<Rational>) -> Result<Definiteness, ExteriorError> {
        Ok(is_psd_hermitian(&self.n1n1_matrix(phi)?)?)
    }

    /// Riemannian metric `g(X, Y) = omega(X, J Y)` on vectors, and the volume
    /// coefficient `v` with `omega^n / n! = v e^1 ^ ... ^ e^{2n}`.
    fn riemannian(&self, metric: &HermitianMetric) -> (Matrix<Rational>, Rational) {
        let ngens = self.ngens();
        let mut omega = Matrix::zeros(ngens, ngens);
        for &m in basis(ngens).degree(2) {
            let c = metric.omega.coeff(m).clone();
            let i = m.trailing_zeros() as usize;
            let j = 31 - m.leading_zeros() as usize;
            omega[(i, j)] = c.clone();
            omega[(j, i)] = -c;
        }
        // J on vectors is minus the transpose of J on covectors.
        let jv = self.j().transpose().scale(&qi(-1));
        let g = omega.mul(&jv);
        let mut fact = qi(1);
        for k in 2..=self.n() {
            fact *= qi(k as i64);
        }
        let v = metric
            .omega
            .power(self.n())
            .expect("top degree")
            .top_coefficient()
            .clone()
            / fact;
        (g, v)
    }

    /// Hodge star with respect to `metric`, oriented by `omega^n / n!`.
    pub fn hodge_star(&self, f: &Form<Rational>, metric: &HermitianMetric) -> Form<Rational> {
        let ngens = self.ngens();
        let (g, v) = self.riemannian(metric);
        let ginv = g.inverse().expect("metric is nondegenerate");
        let full = (1u32 << ngens) - 1;
        let mut out = Form::<Rational>::zero(ngens);
        for (mj, c) in f.terms() {
            let k = degree(mj);
            let jdx = super::basis::indices(mj);
            for &mi in basis(ngens).degree(k) {
                let idx = super::basis::indices(mi);
                let minor = ginv.select(&idx, &jdx).det();
                if minor.is_zero() {
                    continue;
                }
                let comp = full & !mi;
                let eps = wedge_sign(mi, comp);
                let coeff = minor * v.clone() * qi(eps as i64) * c.clone();
                let cur = out.coeff(comp).clone();
                out.set_coeff(comp, cur + coeff);
            }
        }
        out
    }

    /// Recovers a Hermitian metric `omega` with `omega^{n-1} = phi` for a
    /// strictly positive (n-1,n-1)-form `phi`.
    ///
    /// With `c0 = int prod_a (i/2) z_a ^ zb_a`, the matrix of `phi` is
    /// `M^T = (n-1)! c0 adj(h)`. The scalar root is taken in floating point
    /// and the entries rounded to nearby rationals; the residual is exact.
    pub fn hermitian_root(&self, phi: &Form<Rational>) -> Result<RootReport, ExteriorError> {
        let n = self.n();
        let m = self.n1n1_matrix(phi)?;
        if is_psd_hermitian(&m)? != Definiteness::PositiveDefinite {
            return Err(ExteriorError::NotStrictlyPositive);
        }
        if n == 1 {
            // phi is a constant; no metric has omega^0 = phi unless phi = 1.
            return Err(ExteriorError::NotStrictlyPositive);
        }
        if n == 2 {
            let metric = self.metric(phi)?;
            return Ok(RootReport {
                metric,
                relative_residual: 0.0,
                exact: true,
            });
        }
        let c0 = self.integrate_complex(&self.frame_volume()).re;
        let mut scale = c0;
        for k in 2..n {
            scale *= qi(k as i64);
        }
        let nmat = m
            .transpose()
            .map(|x| x.clone() / Gaussian::from_rational(scale.clone()));
        let nf = DMatrix::<Complex<f64>>::from_fn(n, n, |i, j| nmat[(i, j)].to_c64());
        // adj(h) = N, det(adj h) = det(h)^{n-1}.
        let det_n = nf.determinant().re;
        let mut d = det_n.powf(1.0 / (n as f64 - 1.0));
        for _ in 0..3 {
            // Newton on x^{n-1} = det_n
            let f = d.powi(n as i32 - 1) - det_n;
            let df = (n as f64 - 1.0) * d.powi(n as i32 - 2);
            d -= f / df;
        }
        let inv = nf.try_inverse().ok_or(ExteriorError::NotStrictlyPositive)?;
        let hf = inv * Complex::new(d, 0.0);
        let mut h = Matrix::<Gaussian>::zeros(n, n);
        for a in 0..n {
            h[(a, a)] = Gaussian::from_rational(round(hf[(a, a)].re));
            for b in a + 1..n {
                let z = gauss(round(hf[(a, b)].re), round(hf[(a, b)].im));
                h[(b, a)] = z.conj();
                h[(a, b)] = z;
            }
        }
        let metric = self
            .metric_from_hermitian(&h)
            .map_err(|_| ExteriorError::NotStrictlyPositive)?;
        let power = metric.omega.power(n - 1)?;
        let diff = power.sub(phi);
        let max_abs = |f: &Form<Rational>| {
            f.terms()
                .map(|(_, c)| c.abs())
                .max()
                .unwrap_or_else(Rational::zero)
        };
        let residual = max_abs(&diff) / max_abs(phi);
        Ok(RootReport {
            metric,
            exact: residual.is_zero(),
            relative_residual: to_f64(&residual),
        })
    }

    /// `prod_a (i/2) z_a ^ zb_a` in the frame.
    pub(crate) fn frame_volume(&self) -> Form<Gaussian> {
        let n = self.n();
        let mut f = Form::one(self.ngens());
        for a in 0..n {
            let t = Form::monomial(
                self.ngens(),
                (1 << a) | (1 << (n + a)),
                gauss(qi(0), q(1, 2)),
            );
            f = f.wedge_unchecked(&t);
        }
        f
    }
}

fn round(x: f64) -> Rational {
    approximate(x, 1_000_000_000_000)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exterior::LieAlgebra;

    fn standard_j(ngens: usize) -> Matrix<Rational> {
        let mut j = Matrix::zeros(ngens, ngens);
        for a in 0..ngens / 2 {
            j[(2 * a + 1, 2 * a)] = qi(1);
            j[(2 * a, 2 * a + 1)] = qi(-1);
        }
        j
    }

    fn torus(ngens: usize) -> Manifold {
        let ns: Vec<String> = (1..=ngens).map(|i| format!("e{i}")).collect();
        let g = LieAlgebra::new("torus", ns, vec![Form::zero(ngens); ngens]).unwrap();
        Manifold::new(g, standard_j(ngens)).unwrap()
    }

    #[test]
    fn star_of_one_and_volume() {
        let m = torus(4);
        let w = m.standard_metric();
        let vol = Form::monomial(4, 0b1111, qi(1));
        assert_eq!(m.hodge_star(&Form::one(4), &w), vol);
        assert_eq!(m.hodge_star(&vol, &w), Form::one(4));
        // *dx1 = dy1 ^ dx2 ^ dy2
        assert_eq!(
            m.hodge_star(&Form::generator(4, 0), &w),
            Form::monomial(4, 0b1110, qi(1))
        );
    }

    #[test]
    fn star_is_an_involution_up_to_sign() {
        let m = torus(4);
        let mut rng = rand::thread_rng();
        let w = m.random_metric(&mut rng);
        for k in 0..=4 {
            let f = Form::random(4, k, 3, &mut rng);
            let ss = m.hodge_star(&m.hodge_star(&f, &w), &w);
            let sign = if (k * (4 - k)) % 2 == 0 { 1 } else { -1 };
            assert_eq!(ss, f.scale(&qi(sign)));
        }
    }

    #[test]
    fn positivity_of_standard_powers() {
        let m = torus(6);
        let w = m.standard_form();
        assert_eq!(
            m.is_positive_11(&w).unwrap(),
            Definiteness::PositiveDefinite
        );
        assert_eq!(
            m.is_positive_n1n1(&w.power(2).unwrap()).unwrap(),
            Definiteness::PositiveDefinite
        );
        let bad = Form::from_terms(6, &[(qi(1), vec![0, 1]), (qi(-1), vec![2, 3])]);
        assert_eq!(m.is_positive_11(&bad).unwrap(), Definiteness::NotPositive);
        assert!(matches!(
            m.is_positive_n1n1(&w),
            Err(ExteriorError::WrongBidegree { .. })
        ));
    }

    #[test]
    fn root_recovers_diagonal_metric() {
        let m = torus(6);
        let mut h = Matrix::<Gaussian>::zeros(3, 3);
        for a in 0..3 {
            h[(a, a)] = Gaussian::from_i64(a as i64 + 1);
        }
        let w = m.metric_from_hermitian(&h).unwrap();
        let r = m.hermitian_root(&w.omega().power(2).unwrap()).unwrap();
        assert!(r.relative_residual <= 1e-10);
        assert_eq!(r.metric.hermitian(), &h);
        assert!(r.exact);
    }

    #[test]
    fn root_of_random_metrics() {
        let m = torus(6);
        let mut rng = rand::thread_rng();
        for _ in 0..5 {
            let w = m.random_metric(&mut rng);
            let r = m.hermitian_root(&w.omega().power(2).unwrap()).unwrap();
            assert!(r.relative_residual <= 1e-10, "{}", r.relative_residual);
        }
    }
}
