use std::collections::BTreeMap;

use num::{Signed, Zero};

use super::algebra::{derivation, LieAlgebra, SparseOp};
use super::basis::{basis, bidegree, indices};
use super::error::ExteriorError;
use super::form::Form;
use crate::exactla::{gauss, i_unit, q, qi, Gaussian, Matrix, Rational, Scalar, Subspace};

/// A Lie algebra with an integrable left-invariant complex structure.
///
/// Conventions:
/// * `J` acts on the dual: column `k` of [`Manifold::j`] is `J(e^k)`.
/// * (1,0)-forms are the `-i` eigenspace of `J`; the canonical frame is
///   `z_a = e^k + i J e^k` over greedily chosen `k`, followed by the
///   conjugates `zb_a`. Complex forms are stored in this frame.
/// * `d^c = i(dbar - del)`, so `dd^c = 2i del dbar`.
/// * A real (1,1)-form is `(i/2) sum h_ab z_a ^ zb_b`; positivity means `h >= 0`.
/// * Orientation: `((i/2) sum z_a ^ zb_a)^n` is positive; `int e^1...e^{2n} = +-1`.
#[derive(Clone, Debug)]
pub struct Manifold {
    algebra: LieAlgebra,
    j: Matrix<Rational>,
    n: usize,
    frame: Vec<usize>,
    to_frame: SparseOp<Gaussian>,
    from_frame: SparseOp<Gaussian>,
    d_c: SparseOp<Gaussian>,
    del: SparseOp<Gaussian>,
    delbar: SparseOp<Gaussian>,
    orientation: i32,
    integral_of_frame_top: Gaussian,
}

impl Manifold {
    /// Checks Jacobi, `J^2 = -Id` and integrability. Unimodularity is not
    /// required here; operations that integrate check it themselves.
    pub fn new(algebra: LieAlgebra, j: Matrix<Rational>) -> Result<Self, ExteriorError> {
        let ngens = algebra.dim();
        if ngens % 2 == 1 {
            return Err(ExteriorError::OddDimension(ngens));
        }
        if let Some((k, f)) = algebra.validate().jacobi_failures.into_iter().next() {
            return Err(ExteriorError::JacobiFailure {
                generator: algebra.names()[k].clone(),
                residual: f.display(algebra.names()),
            });
        }
        if j.rows() != ngens || j.cols() != ngens {
            return Err(ExteriorError::DimensionMismatch {
                expected: ngens,
                found: j.rows(),
            });
        }
        if j.mul(&j) != Matrix::identity(ngens).scale(&qi(-1)) {
            return Err(ExteriorError::NotComplexStructure);
        }
        let n = ngens / 2;
        let jg = j.map(|x| x.to_gaussian());

        // Greedy frame z = e^k + i J e^k.
        let mut frame = Vec::new();
        let mut zs: Vec<Vec<Gaussian>> = Vec::new();
        for k in 0..ngens {
            let mut z = jg
                .column(k)
                .into_iter()
                .map(|x| x * i_unit())
                .collect::<Vec<_>>();
            z[k] += Gaussian::from_i64(1);
            let mut trial = zs.clone();
            trial.push(z.clone());
            if Subspace::span(ngens, &trial).dim() == trial.len() {
                frame.push(k);
                zs.push(z);
            }
            if zs.len() == n {
                break;
            }
        }
        debug_assert_eq!(zs.len(), n);
        let conj: Vec<Vec<Gaussian>> = zs
            .iter()
            .map(|z| z.iter().map(Scalar::conj).collect())
            .collect();
        let mut columns = zs.clone();
        columns.extend(conj);
        // p[l][m] = coefficient of e^l in frame element m.
        let p = Matrix::from_columns(&columns, ngens);
        let pinv = p.inverse().expect("frame and its conjugate form a basis");

        let from_gens: Vec<Form<Gaussian>> = (0..ngens)
            .map(|m| Form::from_vector(ngens, 1, &p.column(m)))
            .collect();
        let to_gens: Vec<Form<Gaussian>> = (0..ngens)
            .map(|l| Form::from_vector(ngens, 1, &pinv.column(l)))
            .collect();
        let from_frame = multiplicative(ngens, &from_gens);
        let to_frame = multiplicative(ngens, &to_gens);

        // d z_m, rewritten in the frame.
        let dz: Vec<Form<Gaussian>> = (0..ngens)
            .map(|m| {
                let mut acc = Form::<Gaussian>::zero(ngens);
                for (l, c) in p.column(m).iter().enumerate() {
                    if !c.is_zero() {
                        let de = algebra.structure()[l].map(|x| x.to_gaussian());
                        acc = acc.add(&de.scale(c));
                    }
                }
                to_frame.apply(&acc)
            })
            .collect();
        for (a, f) in dz.iter().take(n).enumerate() {
            if f.terms().any(|(m, _)| bidegree(m, n) == (0, 2)) {
                return Err(ExteriorError::NotIntegrable {
                    generator: format!("z{}", a + 1),
                });
            }
        }
        let d_c = derivation(ngens, &dz);
        let del = d_c.filter(|s, t| {
            let (p0, q0) = bidegree(s, n);
            bidegree(t, n) == (p0 + 1, q0)
        });
        let delbar = d_c.filter(|s, t| {
            let (p0, q0) = bidegree(s, n);
            bidegree(t, n) == (p0, q0 + 1)
        });

        let mut m = Manifold {
            algebra,
            j,
            n,
            frame,
            to_frame,
            from_frame,
            d_c,
            del,
            delbar,
            orientation: 1,
            integral_of_frame_top: Gaussian::zero(),
        };
        let omega0 = m.standard_form();
        let top = omega0.power(n)?.top_coefficient().clone();
        m.orientation = if top.is_negative() { -1 } else { 1 };
        let ztop = Form::monomial(ngens, (1u32 << ngens) - 1, Gaussian::from_i64(1));
        m.integral_of_frame_top = m.from_frame.apply(&ztop).top_coefficient().clone()
            * Gaussian::from_i64(m.orientation as i64);
        Ok(m)
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn names(&self) -> &[String] {
        self.algebra.names()
    }

    /// Names of the complex frame: `z1..zn, zb1..zbn`.
    pub fn frame_names(&self) -> Vec<String> {
        let mut v: Vec<String> = (1..=self.n).map(|a| format!("z{a}")).collect();
        v.extend((1..=self.n).map(|a| format!("zb{a}")));
        v
    }

    /// Indices `k` with `z_a = e^k + i J e^k`.
    pub fn frame(&self) -> &[usize] {
        &self.frame
    }

    pub fn j(&self) -> &Matrix<Rational> {
        &self.j
    }

    /// Complex dimension.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ngens(&self) -> usize {
        2 * self.n
    }

    pub fn orientation(&self) -> i32 {
        self.orientation
    }

    pub fn is_unimodular(&self) -> bool {
        self.algebra.is_unimodular()
    }

    pub fn require_unimodular(&self) -> Result<(), ExteriorError> {
        if self.is_unimodular() {
            Ok(())
        } else {
            Err(ExteriorError::NotUnimodular {
                modular_form: self.algebra.modular_form().display(self.names()),
            })
        }
    }

    /// `sum_a e^{k_a} ^ J e^{k_a}`, equal to `(i/2) sum z_a ^ zb_a`.
    pub fn standard_form(&self) -> Form<Rational> {
        let ngens = self.ngens();
        let mut w = Form::zero(ngens);
        for &k in &self.frame {
            let jk = Form::from_vector(ngens, 1, &self.j.column(k));
            w = w.add(&Form::generator(ngens, k).wedge_unchecked(&jk));
        }
        w
    }

    pub fn d(&self, f: &Form<Rational>) -> Form<Rational> {
        self.algebra.d(f)
    }

    /// Real form to the complex frame.
    pub fn complexify(&self, f: &Form<Rational>) -> Form<Gaussian> {
        self.to_frame.apply(&f.map(|x| x.to_gaussian()))
    }

    /// Complex-frame form to coefficients on the real generators.
    pub fn to_real_basis(&self, f: &Form<Gaussian>) -> Form<Gaussian> {
        self.from_frame.apply(f)
    }

    /// Real-basis (complex coefficient) form to the complex frame.
    pub fn from_real_basis(&self, f: &Form<Gaussian>) -> Form<Gaussian> {
        self.to_frame.apply(f)
    }

    /// Complex-frame form to a real form, if it is real.
    pub fn realify(&self, f: &Form<Gaussian>) -> Result<Form<Rational>, ExteriorError> {
        let g = self.to_real_basis(f);
        if g.terms().any(|(_, c)| !c.im.is_zero()) {
            return Err(ExteriorError::NotReal);
        }
        Ok(g.real_part())
    }

    /// Real and imaginary parts (on the real generators) of a frame form.
    pub fn re_im(&self, f: &Form<Gaussian>) -> (Form<Rational>, Form<Rational>) {
        let g = self.to_real_basis(f);
        (g.real_part(), g.imag_part())
    }

    pub fn d_complex(&self, f: &Form<Gaussian>) -> Form<Gaussian> {
        self.d_c.apply(f)
    }

    pub fn del(&self, f: &Form<Gaussian>) -> Form<Gaussian> {
        self.del.apply(f)
    }

    pub fn delbar(&self, f: &Form<Gaussian>) -> Form<Gaussian> {
        self.delbar.apply(f)
    }

    /// `i (dbar - del)` on frame forms.
    pub fn dc_complex(&self, f: &Form<Gaussian>) -> Form<Gaussian> {
        self.delbar(f).sub(&self.del(f)).scale(&i_unit())
    }

    /// `d^c` on real forms; the result is real.
    pub fn dc(&self, f: &Form<Rational>) -> Form<Rational> {
        self.realify(&self.dc_complex(&self.complexify(f)))
            .expect("d^c maps real forms to real forms")
    }

    /// `dd^c` on real forms.
    pub fn ddc(&self, f: &Form<Rational>) -> Form<Rational> {
        self.d(&self.dc(f))
    }

    /// Complex conjugation in the frame.
    pub fn conj(&self, f: &Form<Gaussian>) -> Form<Gaussian> {
        let n = self.n;
        let low = (1u32 << n) - 1;
        let mut out = Form::zero(self.ngens());
        for (m, c) in f.terms() {
            let hol = m & low;
            let anti = m >> n;
            let image = anti | (hol << n);
            let (p, qd) = bidegree(m, n);
            let c = c.conj();
            out.set_coeff(image, if (p * qd) % 2 == 0 { c } else { -c });
        }
        out
    }

    /// Components by bidegree.
    pub fn bigrade(&self, f: &Form<Gaussian>) -> BTreeMap<(usize, usize), Form<Gaussian>> {
        let mut out: BTreeMap<(usize, usize), Form<Gaussian>> = BTreeMap::new();
        for (m, c) in f.terms() {
            out.entry(bidegree(m, self.n))
                .or_insert_with(|| Form::zero(self.ngens()))
                .set_coeff(m, c.clone());
        }
        out
    }

    pub fn bidegree_component(&self, f: &Form<Gaussian>, p: usize, qd: usize) -> Form<Gaussian> {
        let mut out = Form::zero(self.ngens());
        for (m, c) in f.terms() {
            if bidegree(m, self.n) == (p, qd) {
                out.set_coeff(m, c.clone());
            }
        }
        out
    }

    /// Whether the frame form has pure bidegree `(p, q)` (zero counts).
    pub fn has_bidegree(&self, f: &Form<Gaussian>, p: usize, qd: usize) -> bool {
        f.terms().all(|(m, _)| bidegree(m, self.n) == (p, qd))
    }

    /// Frame monomials of bidegree `(p, q)` in canonical order.
    pub fn bidegree_basis(&self, p: usize, qd: usize) -> Vec<u32> {
        basis(self.ngens()).bidegree(self.n, p, qd)
    }

    /// Matrix of `del` from `(p, q)` to `(p+1, q)`.
    pub fn del_matrix(&self, p: usize, qd: usize) -> Matrix<Gaussian> {
        self.del
            .matrix(&self.bidegree_basis(p, qd), &self.bidegree_basis(p + 1, qd))
    }

    /// Matrix of `dbar` from `(p, q)` to `(p, q+1)`.
    pub fn delbar_matrix(&self, p: usize, qd: usize) -> Matrix<Gaussian> {
        self.delbar
            .matrix(&self.bidegree_basis(p, qd), &self.bidegree_basis(p, qd + 1))
    }

    /// Matrix of `del dbar` from `(p, q)` to `(p+1, q+1)`.
    pub fn deldelbar_matrix(&self, p: usize, qd: usize) -> Matrix<Gaussian> {
        self.del_matrix(p, qd + 1).mul(&self.delbar_matrix(p, qd))
    }

    /// `int f` for a real form: orientation times the top coefficient.
    pub fn integrate(&self, f: &Form<Rational>) -> Rational {
        f.top_coefficient().clone() * qi(self.orientation as i64)
    }

    /// `int f` for a frame form.
    pub fn integrate_complex(&self, f: &Form<Gaussian>) -> Gaussian {
        f.top_coefficient().clone() * self.integral_of_frame_top.clone()
    }

    /// The real (1,1)-form `(i/2) sum h_ab z_a ^ zb_b` for Hermitian `h`.
    pub fn form_from_hermitian(
        &self,
        h: &Matrix<Gaussian>,
    ) -> Result<Form<Rational>, ExteriorError> {
        let n = self.n;
        if h.rows() != n || h.cols() != n {
            return Err(ExteriorError::DimensionMismatch {
                expected: n,
                found: h.rows(),
            });
        }
        if *h != h.conj_transpose() {
            return Err(crate::exactla::ExactLaError::NotHermitian.into());
        }
        let half_i = gauss(qi(0), q(1, 2));
        let mut f = Form::zero(self.ngens());
        for a in 0..n {
            for b in 0..n {
                f.set_coeff(
                    (1 << a) | (1 << (n + b)),
                    h[(a, b)].clone() * half_i.clone(),
                );
            }
        }
        self.realify(&f)
    }

    /// Hermitian matrix `h` of a real (1,1)-form `(i/2) sum h_ab z_a ^ zb_b`.
    pub fn hermitian_matrix(&self, f: &Form<Rational>) -> Result<Matrix<Gaussian>, ExteriorError> {
        let n = self.n;
        let z = self.complexify(f);
        if !self.has_bidegree(&z, 1, 1) {
            return Err(ExteriorError::WrongBidegree {
                expected: (1, 1),
                found: self.describe_bidegrees(&z),
            });
        }
        let minus_2i = gauss(qi(0), qi(-2));
        let mut h = Matrix::zeros(n, n);
        for a in 0..n {
            for b in 0..n {
                h[(a, b)] = z.coeff((1 << a) | (1 << (n + b))).clone() * minus_2i.clone();
            }
        }
        Ok(h)
    }

    pub(crate) fn describe_bidegrees(&self, f: &Form<Gaussian>) -> String {
        let parts: Vec<String> = self
            .bigrade(f)
            .keys()
            .map(|(p, qd)| format!("({p},{qd})"))
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join("+")
        }
    }

    /// The (1,0)-form `sum v_a z_a`.
    pub fn holomorphic_covector(&self, v: &[Gaussian]) -> Form<Gaussian> {
        let mut f = Form::zero(self.ngens());
        for (a, c) in v.iter().enumerate() {
            f.set_coeff(1 << a, c.clone());
        }
        f
    }

    /// Indices `a` of the frame set in `mask`, split into (hol, antihol).
    pub fn split_mask(&self, mask: u32) -> (Vec<usize>, Vec<usize>) {
        let n = self.n;
        let idx = indices(mask);
        let hol = idx.iter().copied().filter(|&i| i < n).collect();
        let anti = idx
            .iter()
            .copied()
            .filter(|&i| i >= n)
            .map(|i| i - n)
            .collect();
        (hol, anti)
    }
}

/// Algebra homomorphism determined by images of the generators.
fn multiplicative(ngens: usize, gens: &[Form<Gaussian>]) -> SparseOp<Gaussian> {
    let mut images: Vec<Form<Gaussian>> = Vec::with_capacity(1 << ngens);
    images.push(Form::one(ngens));
    for mask in 1..(1u32 << ngens) {
        let top = 31 - mask.leading_zeros();
        let rest = mask & !(1 << top);
        let img = images[rest as usize].wedge_unchecked(&gens[top as usize]);
        images.push(img);
    }
    SparseOp::from_images(
        ngens,
        images
            .into_iter()
            .map(|f| f.terms().map(|(m, c)| (m, c.clone())).collect())
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    /// J with J(e^{2a}) = e^{2a+1}.
    fn standard_j(ngens: usize) -> Matrix<Rational> {
        let mut j = Matrix::zeros(ngens, ngens);
        for a in 0..ngens / 2 {
            j[(2 * a + 1, 2 * a)] = qi(1);
            j[(2 * a, 2 * a + 1)] = qi(-1);
        }
        j
    }

    fn inoue() -> Manifold {
        let n = 4;
        let phi = q(2, 5);
        let de = vec![
            Form::zero(n),
            Form::from_terms(n, &[(qi(-1), vec![0, 1])]),
            Form::from_terms(n, &[(q(1, 2), vec![0, 2]), (phi.clone(), vec![0, 3])]),
            Form::from_terms(n, &[(-phi, vec![0, 2]), (q(1, 2), vec![0, 3])]),
        ];
        let g = LieAlgebra::new("inoue", names(&["a", "b", "g1", "g2"]), de).unwrap();
        Manifold::new(g, standard_j(4)).unwrap()
    }

    fn torus(ngens: usize) -> Manifold {
        let ns: Vec<String> = (1..=ngens).map(|i| format!("e{i}")).collect();
        let g = LieAlgebra::new("torus", ns, vec![Form::zero(ngens); ngens]).unwrap();
        Manifold::new(g, standard_j(ngens)).unwrap()
    }

    #[test]
    fn dc_alpha_is_alpha_beta_and_minus_d_beta() {
        let m = inoue();
        let alpha = Form::generator(4, 0);
        let ab = Form::from_terms(4, &[(qi(1), vec![0, 1])]);
        assert_eq!(m.dc(&alpha), ab);
        assert_eq!(m.dc(&alpha), m.d(&Form::generator(4, 1)).neg());
        assert_eq!(m.orientation(), 1);
    }

    #[test]
    fn ddc_is_two_i_del_delbar() {
        let m = inoue();
        let mut rng = rand::thread_rng();
        for k in 0..=4 {
            for _ in 0..10 {
                let f = Form::random(4, k, 4, &mut rng);
                let z = m.complexify(&f);
                let lhs = m.complexify(&m.ddc(&f));
                let rhs = m.del(&m.delbar(&z)).scale(&gauss(qi(0), qi(2)));
                assert_eq!(lhs, rhs);
                assert_eq!(m.d_complex(&z), m.del(&z).add(&m.delbar(&z)));
                assert!(m.del(&m.del(&z)).is_zero());
                assert!(m.delbar(&m.delbar(&z)).is_zero());
                assert_eq!(m.realify(&z).unwrap(), f);
                assert_eq!(m.conj(&m.del(&z)), m.delbar(&m.conj(&z)));
                assert_eq!(m.conj(&z), z);
            }
        }
    }

    #[test]
    fn positivity_calibration_of_alpha_beta() {
        let m = inoue();
        let h = m
            .hermitian_matrix(&Form::from_terms(4, &[(qi(1), vec![0, 1])]))
            .unwrap();
        assert_eq!(h[(0, 0)], Gaussian::from_i64(1));
        assert!(h[(1, 1)].is_zero());
        let w = m.standard_form();
        assert_eq!(m.hermitian_matrix(&w).unwrap(), Matrix::identity(2));
        assert_eq!(m.form_from_hermitian(&Matrix::identity(2)).unwrap(), w);
    }

    #[test]
    fn non_integrable_structure_rejected() {
        // d e4 = e1^e3 with J e1 = e2, J e3 = e4 gives a (0,2) part.
        let mut de = vec![Form::zero(4); 4];
        de[3] = Form::from_terms(4, &[(qi(1), vec![0, 2])]);
        let g = LieAlgebra::new("x", names(&["e1", "e2", "e3", "e4"]), de).unwrap();
        assert!(matches!(
            Manifold::new(g, standard_j(4)),
            Err(ExteriorError::NotIntegrable { .. })
        ));
        let g = LieAlgebra::new(
            "x",
            names(&["e1", "e2", "e3", "e4"]),
            vec![Form::zero(4); 4],
        )
        .unwrap();
        assert!(matches!(
            Manifold::new(g, Matrix::identity(4)),
            Err(ExteriorError::NotComplexStructure)
        ));
    }

    #[test]
    fn torus_volume_and_integration() {
        let m = torus(6);
        let w = m.standard_form();
        // w^3 = 3! vol
        assert_eq!(m.integrate(&w.power(3).unwrap()), qi(6));
        let z = m.complexify(&w.power(3).unwrap());
        assert_eq!(m.integrate_complex(&z), Gaussian::from_i64(6));
    }

    #[test]
    fn dc_of_constants_vanishes() {
        let m = torus(4);
        assert!(m.dc(&Form::one(4)).is_zero());
    }
}
