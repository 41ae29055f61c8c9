use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use super::error::CohomologyError;
use super::group::{CohomologyGroup, Degree, Frame, Theory};
use crate::exactla::{image, kernel, Gaussian, Matrix, Rational, Scalar, Subspace};
use crate::exterior::basis::basis;
use crate::exterior::{Form, Manifold};

type RealGroup = Arc<CohomologyGroup<Rational>>;
type ComplexGroup = Arc<CohomologyGroup<Gaussian>>;

/// Invariant cohomology of a [`Manifold`], with groups cached per
/// (theory, degree).
#[derive(Debug)]
pub struct Cohomology<'a> {
    m: &'a Manifold,
    real: Mutex<HashMap<(Theory, Degree), RealGroup>>,
    complex: Mutex<HashMap<(Theory, Degree), ComplexGroup>>,
}

/// Matrix of the top-degree pairing between two groups' representatives.
#[derive(Clone, Debug)]
pub struct PairingMatrix {
    pub left: String,
    pub right: String,
    pub matrix: Matrix<Gaussian>,
}

impl PairingMatrix {
    pub fn is_nonsingular(&self) -> bool {
        self.matrix.rows() == self.matrix.cols() && self.matrix.rank() == self.matrix.rows()
    }
}

impl<'a> Cohomology<'a> {
    pub fn new(m: &'a Manifold) -> Self {
        Cohomology {
            m,
            real: Mutex::new(HashMap::new()),
            complex: Mutex::new(HashMap::new()),
        }
    }

    pub fn manifold(&self) -> &'a Manifold {
        self.m
    }

    fn cached_real(
        &self,
        key: (Theory, Degree),
        build: impl FnOnce() -> Result<CohomologyGroup<Rational>, CohomologyError>,
    ) -> Result<RealGroup, CohomologyError> {
        if let Some(g) = self.real.lock().unwrap().get(&key) {
            return Ok(g.clone());
        }
        let g = Arc::new(build()?);
        self.real.lock().unwrap().insert(key, g.clone());
        Ok(g)
    }

    fn cached_complex(
        &self,
        key: (Theory, Degree),
        build: impl FnOnce() -> Result<CohomologyGroup<Gaussian>, CohomologyError>,
    ) -> Result<ComplexGroup, CohomologyError> {
        if let Some(g) = self.complex.lock().unwrap().get(&key) {
            return Ok(g.clone());
        }
        let g = Arc::new(build()?);
        self.complex.lock().unwrap().insert(key, g.clone());
        Ok(g)
    }

    /// `H^k(g, R)`: closed `k`-forms modulo exact ones.
    pub fn de_rham(&self, k: usize) -> Result<RealGroup, CohomologyError> {
        let ngens = self.m.ngens();
        self.cached_real((Theory::DeRham, Degree::Total(k)), || {
            let alg = self.m.algebra();
            let kers = if k <= ngens {
                vec![alg.d_matrix(k)]
            } else {
                vec![]
            };
            let ims = if k >= 1 {
                vec![alg.d_matrix(k - 1)]
            } else {
                vec![]
            };
            CohomologyGroup::from_operators(
                Theory::DeRham,
                Degree::Total(k),
                true,
                Frame::Real,
                ngens,
                basis(ngens).degree(k).to_vec(),
                &kers,
                &ims,
            )
        })
    }

    pub fn dolbeault(&self, p: usize, q: usize) -> Result<ComplexGroup, CohomologyError> {
        self.cached_complex((Theory::Dolbeault, Degree::Bi(p, q)), || {
            let m = self.m;
            let ims = if q >= 1 {
                vec![m.delbar_matrix(p, q - 1)]
            } else {
                vec![]
            };
            CohomologyGroup::from_operators(
                Theory::Dolbeault,
                Degree::Bi(p, q),
                false,
                Frame::Complex,
                m.ngens(),
                m.bidegree_basis(p, q),
                &[m.delbar_matrix(p, q)],
                &ims,
            )
        })
    }

    /// `(ker del ∩ ker dbar) / im del dbar`.
    pub fn bott_chern(&self, p: usize, q: usize) -> Result<ComplexGroup, CohomologyError> {
        self.cached_complex((Theory::BottChern, Degree::Bi(p, q)), || {
            let m = self.m;
            let ims = if p >= 1 && q >= 1 {
                vec![m.deldelbar_matrix(p - 1, q - 1)]
            } else {
                vec![]
            };
            CohomologyGroup::from_operators(
                Theory::BottChern,
                Degree::Bi(p, q),
                false,
                Frame::Complex,
                m.ngens(),
                m.bidegree_basis(p, q),
                &[m.del_matrix(p, q), m.delbar_matrix(p, q)],
                &ims,
            )
        })
    }

    /// `ker del dbar / (im del + im dbar)`.
    pub fn aeppli(&self, p: usize, q: usize) -> Result<ComplexGroup, CohomologyError> {
        self.cached_complex((Theory::Aeppli, Degree::Bi(p, q)), || {
            let m = self.m;
            let mut ims = Vec::new();
            if p >= 1 {
                ims.push(m.del_matrix(p - 1, q));
            }
            if q >= 1 {
                ims.push(m.delbar_matrix(p, q - 1));
            }
            CohomologyGroup::from_operators(
                Theory::Aeppli,
                Degree::Bi(p, q),
                false,
                Frame::Complex,
                m.ngens(),
                m.bidegree_basis(p, q),
                &[m.deldelbar_matrix(p, q)],
                &ims,
            )
        })
    }

    pub fn group(
        &self,
        theory: Theory,
        p: usize,
        q: usize,
    ) -> Result<ComplexGroup, CohomologyError> {
        match theory {
            Theory::Dolbeault => self.dolbeault(p, q),
            Theory::BottChern => self.bott_chern(p, q),
            Theory::Aeppli => self.aeppli(p, q),
            Theory::DeRham => Err(CohomologyError::NotDiagonalBidegree(
                "de Rham has no bidegree".into(),
            )),
        }
    }

    /// Fixed subspace of conjugation, as a quotient of spaces of real forms
    /// on the real generators. Numerator and denominator of a Bott-Chern or
    /// Aeppli group of bidegree (p,p) are conjugation invariant, so their
    /// real forms are spanned by real and imaginary parts of basis vectors.
    pub fn real_subspace(
        &self,
        g: &CohomologyGroup<Gaussian>,
    ) -> Result<RealGroup, CohomologyError> {
        let p = match (g.theory(), g.degree()) {
            (Theory::BottChern | Theory::Aeppli, Degree::Bi(p, q)) if p == q => p,
            _ => return Err(CohomologyError::NotDiagonalBidegree(g.to_string())),
        };
        let key = (g.theory(), Degree::Bi(p, p));
        self.cached_real(key, || {
            let ngens = self.m.ngens();
            let masks = basis(ngens).degree(2 * p).to_vec();
            let realify = |s: &Subspace<Gaussian>| -> Subspace<Rational> {
                let mut vs = Vec::new();
                for v in s.basis() {
                    let (re, im) = self.m.re_im(&g.form_of(v));
                    vs.push(re.coordinates(&masks));
                    vs.push(im.coordinates(&masks));
                }
                Subspace::span(masks.len(), &vs)
            };
            let num = realify(g.numerator());
            let den = realify(g.denominator());
            debug_assert_eq!(num.dim(), g.numerator().dim());
            debug_assert_eq!(den.dim(), g.denominator().dim());
            CohomologyGroup::new(
                g.theory(),
                Degree::Bi(p, p),
                true,
                Frame::Real,
                ngens,
                masks,
                num,
                den,
            )
        })
    }

    pub fn bott_chern_real(&self, p: usize) -> Result<RealGroup, CohomologyError> {
        self.real_subspace(&*self.bott_chern(p, p)?)
    }

    pub fn aeppli_real(&self, p: usize) -> Result<RealGroup, CohomologyError> {
        self.real_subspace(&*self.aeppli(p, p)?)
    }

    /// `int x ^ y` for a Bott-Chern class `x` of bidegree (p,q) and an
    /// Aeppli class `y` of bidegree (n-p,n-q), in class coordinates.
    pub fn pairing(
        &self,
        bc: &CohomologyGroup<Gaussian>,
        x: &[Gaussian],
        ae: &CohomologyGroup<Gaussian>,
        y: &[Gaussian],
    ) -> Result<Gaussian, CohomologyError> {
        self.m.require_unimodular()?;
        let n = self.m.n();
        let ok = match (bc.theory(), bc.degree(), ae.theory(), ae.degree()) {
            (Theory::BottChern, Degree::Bi(p, q), Theory::Aeppli, Degree::Bi(r, s)) => {
                p + r == n && q + s == n
            }
            _ => false,
        };
        if !ok {
            return Err(CohomologyError::IncompatiblePairing(
                bc.to_string(),
                ae.to_string(),
            ));
        }
        let f = bc.lift(x).wedge_unchecked(&ae.lift(y));
        Ok(self.m.integrate_complex(&f))
    }

    /// Pairing matrix between the representatives of `H^{p,q}_BC` and
    /// `H^{n-p,n-q}_AE`.
    pub fn duality_matrix(&self, p: usize, q: usize) -> Result<PairingMatrix, CohomologyError> {
        self.m.require_unimodular()?;
        let n = self.m.n();
        let bc = self.bott_chern(p, q)?;
        let ae = self.aeppli(n - p, n - q)?;
        let left = bc.representatives();
        let right = ae.representatives();
        let mut matrix = Matrix::zeros(left.len(), right.len());
        for (i, x) in left.iter().enumerate() {
            for (j, y) in right.iter().enumerate() {
                matrix[(i, j)] = self.m.integrate_complex(&x.wedge_unchecked(y));
            }
        }
        Ok(PairingMatrix {
            left: bc.to_string(),
            right: ae.to_string(),
            matrix,
        })
    }

    /// Closed holomorphic 1-forms, in coordinates on `z_1, ..., z_n`.
    pub fn holomorphic_closed_1forms(&self) -> Subspace<Gaussian> {
        let m = self.m;
        let src = m.bidegree_basis(1, 0);
        let ngens = m.ngens();
        let mut rows: Vec<Vec<Gaussian>> = Vec::new();
        let two = basis(ngens).degree(2);
        let images: Vec<Vec<Gaussian>> = src
            .iter()
            .map(|&s| {
                m.d_complex(&Form::monomial(ngens, s, Gaussian::from_i64(1)))
                    .coordinates(two)
            })
            .collect();
        for i in 0..two.len() {
            rows.push(images.iter().map(|v| v[i].clone()).collect());
        }
        kernel(&Matrix::from_rows_with_cols(rows, src.len()))
    }

    /// Real and imaginary parts of closed holomorphic 1-forms, as a subspace
    /// of real 1-forms in coordinates on the generators.
    pub fn holomorphic_real_parts(&self) -> Subspace<Rational> {
        let ngens = self.m.ngens();
        let src = self.m.bidegree_basis(1, 0);
        let mut vs = Vec::new();
        for v in self.holomorphic_closed_1forms().basis() {
            let (re, im) = self.m.re_im(&Form::from_coordinates(ngens, &src, v));
            vs.push(re.vector(1));
            vs.push(im.vector(1));
        }
        Subspace::span(ngens, &vs)
    }

    /// Closed real 1-forms `rho` with `d^c rho = 0`, computed directly.
    pub fn dc_kernel_on_closed_1forms(&self) -> Subspace<Rational> {
        let ngens = self.m.ngens();
        let z1 = kernel(&self.m.algebra().d_matrix(1));
        let two = basis(ngens).degree(2);
        let cols: Vec<Vec<Rational>> = z1
            .basis()
            .iter()
            .map(|v| self.m.dc(&Form::from_vector(ngens, 1, v)).coordinates(two))
            .collect();
        if cols.is_empty() {
            return Subspace::zero(ngens);
        }
        let dcm = Matrix::from_columns(&cols, two.len());
        let vs: Vec<Vec<Rational>> = dcm
            .kernel_basis()
            .into_iter()
            .map(|c| crate::exactla::combine(z1.basis(), &c, ngens))
            .collect();
        Subspace::span(ngens, &vs)
    }

    /// Image of the class map `H^1 -> H^{1,1}_BC(R)`, `rho -> [d^c rho]`,
    /// as a matrix from `H^1` coordinates to class coordinates.
    pub fn dc_on_h1(&self) -> Result<Matrix<Rational>, CohomologyError> {
        let h1 = self.de_rham(1)?;
        let bc = self.bott_chern_real(1)?;
        let cols: Vec<Vec<Rational>> = h1
            .representatives()
            .iter()
            .map(|rho| bc.project(&self.m.dc(rho)))
            .collect::<Result<_, _>>()?;
        Ok(if cols.is_empty() {
            Matrix::zeros(bc.dim(), 0)
        } else {
            Matrix::from_columns(&cols, bc.dim())
        })
    }
}

/// Outcome of [`Cohomology::exact_sequence_check`] for
/// `0 -> Re H^{1,0}_d -> H^1(R) -> H^{1,1}_BC(R)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactSequenceReport {
    pub dim_holomorphic: usize,
    pub dim_real_parts: usize,
    pub dim_h1: usize,
    pub dim_bc11: usize,
    pub rank_dc: usize,
    /// `Re H^{1,0}_d -> H^1` is injective.
    pub exact_at_real_parts: bool,
    /// `ker(d^c) = Re H^{1,0}_d` inside `H^1`.
    pub exact_at_h1: bool,
}

impl ExactSequenceReport {
    pub fn is_exact(&self) -> bool {
        self.exact_at_real_parts && self.exact_at_h1
    }

    /// Names of the failing spots.
    pub fn failures(&self) -> Vec<&'static str> {
        let mut v = Vec::new();
        if !self.exact_at_real_parts {
            v.push("Re H^{1,0}_d");
        }
        if !self.exact_at_h1 {
            v.push("H^1");
        }
        v
    }
}

impl Cohomology<'_> {
    pub fn exact_sequence_check(&self) -> Result<ExactSequenceReport, CohomologyError> {
        let h1 = self.de_rham(1)?;
        let l = self.holomorphic_real_parts();
        let hol = self.holomorphic_closed_1forms();
        // Injectivity: closed, and meets the exact 1-forms only in 0.
        let closed = l.basis().iter().all(|v| h1.numerator().contains(v));
        let exact_at_real_parts = closed && l.intersection(h1.denominator()).is_zero();
        let dc = self.dc_on_h1()?;
        let ker_coords = kernel(&dc);
        let ker_forms: Vec<Vec<Rational>> = ker_coords
            .basis()
            .iter()
            .map(|c| h1.quotient().lift(c))
            .collect();
        // Compare modulo exact forms.
        let ker_total = Subspace::span(self.m.ngens(), &ker_forms).sum(h1.denominator());
        let l_total = l.sum(h1.denominator());
        let exact_at_h1 = closed && ker_total == l_total;
        Ok(ExactSequenceReport {
            dim_holomorphic: hol.dim(),
            dim_real_parts: l.dim(),
            dim_h1: h1.dim(),
            dim_bc11: self.bott_chern_real(1)?.dim(),
            rank_dc: if dc.cols() == 0 { 0 } else { image(&dc).dim() },
            exact_at_real_parts,
            exact_at_h1,
        })
    }
}

/// `W`, computed as the annihilator of `Re H^{1,0}_d` and as the image of
/// `d^c` on real Aeppli (n-1,n-1) classes.
#[derive(Clone, Debug)]
pub struct LeeGauduchonSpace {
    /// `H^{2n-1}(R)`; the two subspaces below are in its class coordinates.
    pub top: Arc<CohomologyGroup<Rational>>,
    pub w_ann: Subspace<Rational>,
    pub w_img: Subspace<Rational>,
    pub agree: bool,
}

impl LeeGauduchonSpace {
    pub fn dim(&self) -> usize {
        self.w_ann.dim()
    }

    /// Representatives of a basis of `W`.
    pub fn basis_forms(&self) -> Vec<Form<Rational>> {
        self.w_ann
            .basis()
            .iter()
            .map(|c| self.top.lift(c))
            .collect()
    }

    /// Coordinates of a class of `H^{2n-1}` in the basis of `W`, if it lies
    /// in `W`.
    pub fn w_coordinates(&self, class: &[Rational]) -> Option<Vec<Rational>> {
        self.w_ann.coordinates(class)
    }
}

impl Cohomology<'_> {
    pub fn lee_gauduchon_space(&self) -> Result<LeeGauduchonSpace, CohomologyError> {
        let m = self.m;
        m.require_unimodular()?;
        let n = m.n();
        let ngens = m.ngens();
        let top = self.de_rham(2 * n - 1)?;
        let l = self.holomorphic_real_parts();
        // int rho ^ x for rho in L and x running over the class basis.
        let reps = top.representatives();
        let rows: Vec<Vec<Rational>> = l
            .basis()
            .iter()
            .map(|v| {
                let rho = Form::from_vector(ngens, 1, v);
                reps.iter()
                    .map(|x| m.integrate(&rho.wedge_unchecked(x)))
                    .collect()
            })
            .collect();
        let w_ann = if rows.is_empty() {
            Subspace::full(top.dim())
        } else {
            kernel(&Matrix::from_rows_with_cols(rows, top.dim()))
        };
        let w_img = if n == 1 {
            // H^{0,0}_AE(R) = R and d^c of constants vanishes.
            Subspace::zero(top.dim())
        } else {
            let ae = self.aeppli_real(n - 1)?;
            let images: Vec<Vec<Rational>> = ae
                .representatives()
                .iter()
                .map(|phi| top.project(&m.dc(phi)))
                .collect::<Result<_, _>>()?;
            Subspace::span(top.dim(), &images)
        };
        let agree = w_ann == w_img;
        Ok(LeeGauduchonSpace {
            top,
            w_ann,
            w_img,
            agree,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{q, qi};
    use crate::models;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn torus_dimensions() {
        let t = models::torus(2);
        let c = Cohomology::new(&t.manifold);
        for k in 0..=4 {
            let binom = [1, 4, 6, 4, 1][k];
            assert_eq!(c.de_rham(k).unwrap().dim(), binom);
        }
        assert_eq!(c.aeppli(1, 1).unwrap().dim(), 4);
        assert_eq!(c.bott_chern(1, 1).unwrap().dim(), 4);
        assert_eq!(c.dolbeault(0, 1).unwrap().dim(), 2);
        assert_eq!(c.lee_gauduchon_space().unwrap().dim(), 0);
    }

    #[test]
    fn inoue_first_cohomology() {
        let m = models::inoue_s0(q(1, 3));
        let c = Cohomology::new(&m.manifold);
        assert_eq!(c.de_rham(1).unwrap().dim(), 1);
        assert_eq!(c.holomorphic_closed_1forms().dim(), 0);
        let w = c.lee_gauduchon_space().unwrap();
        assert!(w.agree);
        assert_eq!(w.dim(), 1);
        assert!(c.exact_sequence_check().unwrap().is_exact());
    }

    #[test]
    fn iwasawa_holomorphic_forms() {
        let m = models::iwasawa();
        let c = Cohomology::new(&m.manifold);
        assert_eq!(c.holomorphic_closed_1forms().dim(), 2);
        assert_eq!(c.de_rham(1).unwrap().dim(), 4);
        for p in 0..=3 {
            for qq in 0..=3 {
                let dm = c.duality_matrix(p, qq).unwrap();
                assert!(dm.is_nonsingular(), "({p},{qq})");
            }
        }
    }

    #[test]
    fn calabi_eckmann_odd_cohomology() {
        let m = models::calabi_eckmann();
        let c = Cohomology::new(&m.manifold);
        assert_eq!(c.de_rham(2).unwrap().dim(), 0);
        assert_eq!(c.de_rham(3).unwrap().dim(), 2);
        assert_eq!(c.de_rham(5).unwrap().dim(), 0);
        assert_eq!(c.lee_gauduchon_space().unwrap().dim(), 0);
    }

    #[test]
    fn real_subspaces_have_complex_dimension() {
        for m in [
            models::kodaira_thurston(),
            models::hopf(),
            models::iwasawa(),
        ] {
            let c = Cohomology::new(&m.manifold);
            for p in 0..=m.manifold.n() {
                assert_eq!(
                    c.bott_chern_real(p).unwrap().dim(),
                    c.bott_chern(p, p).unwrap().dim()
                );
                assert_eq!(
                    c.aeppli_real(p).unwrap().dim(),
                    c.aeppli(p, p).unwrap().dim()
                );
            }
        }
    }

    #[test]
    fn l_matches_direct_kernel() {
        for m in models::bundled() {
            let c = Cohomology::new(&m.manifold);
            assert_eq!(
                c.holomorphic_real_parts(),
                c.dc_kernel_on_closed_1forms(),
                "{}",
                m.name
            );
        }
    }

    #[test]
    fn pairing_ignores_representative() {
        let m = models::kodaira_thurston();
        let c = Cohomology::new(&m.manifold);
        let bc = c.bott_chern(1, 1).unwrap();
        let ae = c.aeppli(1, 1).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let x: Vec<Gaussian> = (0..bc.dim())
            .map(|i| Gaussian::new(qi(i as i64 + 1), qi(0)))
            .collect();
        let y: Vec<Gaussian> = (0..ae.dim())
            .map(|i| Gaussian::new(qi(1), qi(i as i64)))
            .collect();
        let base = c.pairing(&bc, &x, &ae, &y).unwrap();
        // Shift the Aeppli representative by a random element of the
        // denominator.
        for v in ae.denominator().basis() {
            let shift = ae.form_of(v);
            let c0 = Gaussian::new(qi(rng.gen_range(-5..5)), qi(2));
            let shifted = ae.lift(&y).add(&shift.scale(&c0));
            let val = m
                .manifold
                .integrate_complex(&bc.lift(&x).wedge_unchecked(&shifted));
            assert_eq!(val, base);
        }
    }

    #[test]
    fn denominators_vanish_in_top_degree() {
        let m = models::ot_generic(2, 1, 1);
        let c = Cohomology::new(&m.manifold);
        let top = c.de_rham(5).unwrap();
        let ae = c.aeppli_real(2).unwrap();
        for v in ae.denominator().basis() {
            let cls = top.project(&m.manifold.dc(&ae.form_of(v))).unwrap();
            assert!(cls.iter().all(|x| x == &qi(0)));
        }
    }
}
