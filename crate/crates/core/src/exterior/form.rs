use std::fmt::Write as _;

use num::{One, Signed, Zero};
use rand::Rng;

use super::basis::{basis, degree, indices, wedge_sign};
use super::error::ExteriorError;
use crate::exactla::{Gaussian, Rational, Scalar, ShowGaussian};

/// An element of the exterior algebra on `ngens` generators, stored densely
/// by monomial bitmask. Forms need not be homogeneous.
#[derive(Clone, Debug, PartialEq)]
pub struct Form<F> {
    ngens: usize,
    coeffs: Vec<F>,
}

impl<F: Scalar> Form<F> {
    pub fn zero(ngens: usize) -> Self {
        Form {
            ngens,
            coeffs: vec![F::zero(); 1 << ngens],
        }
    }

    pub fn one(ngens: usize) -> Self {
        Self::monomial(ngens, 0, F::one())
    }

    pub fn monomial(ngens: usize, mask: u32, c: F) -> Self {
        let mut f = Self::zero(ngens);
        f.coeffs[mask as usize] = c;
        f
    }

    /// The generator `e^k`.
    pub fn generator(ngens: usize, k: usize) -> Self {
        Self::monomial(ngens, 1 << k, F::one())
    }

    /// `sum c * e^{i_1} ^ ... ^ e^{i_r}` from index lists in any order.
    pub fn from_terms(ngens: usize, terms: &[(F, Vec<usize>)]) -> Self {
        let mut f = Self::zero(ngens);
        for (c, idx) in terms {
            let mut g = Form::one(ngens).scale(c);
            for &i in idx {
                g = g.wedge_unchecked(&Form::generator(ngens, i));
            }
            f = f.add(&g);
        }
        f
    }

    /// Degree-`k` form from coordinates in the lexicographic basis.
    pub fn from_vector(ngens: usize, k: usize, v: &[F]) -> Self {
        Self::from_coordinates(ngens, basis(ngens).degree(k), v)
    }

    /// Form with coordinates `v` on the listed monomials.
    pub fn from_coordinates(ngens: usize, masks: &[u32], v: &[F]) -> Self {
        assert_eq!(masks.len(), v.len());
        let mut f = Self::zero(ngens);
        for (&m, c) in masks.iter().zip(v) {
            f.coeffs[m as usize] = c.clone();
        }
        f
    }

    pub fn ngens(&self) -> usize {
        self.ngens
    }

    pub fn coeff(&self, mask: u32) -> &F {
        &self.coeffs[mask as usize]
    }

    pub fn set_coeff(&mut self, mask: u32, c: F) {
        self.coeffs[mask as usize] = c;
    }

    /// Nonzero terms in mask order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &F)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| (m as u32, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Degrees carrying a nonzero component, ascending.
    pub fn degrees(&self) -> Vec<usize> {
        let mut ds: Vec<usize> = self.terms().map(|(m, _)| degree(m)).collect();
        ds.sort_unstable();
        ds.dedup();
        ds
    }

    /// The degree if the form is nonzero and homogeneous.
    pub fn degree(&self) -> Option<usize> {
        match self.degrees().as_slice() {
            [k] => Some(*k),
            _ => None,
        }
    }

    pub fn component(&self, k: usize) -> Self {
        let mut f = Self::zero(self.ngens);
        for (m, c) in self.terms() {
            if degree(m) == k {
                f.coeffs[m as usize] = c.clone();
            }
        }
        f
    }

    /// Coordinates of the degree-`k` component in the lexicographic basis.
    pub fn vector(&self, k: usize) -> Vec<F> {
        self.coordinates(basis(self.ngens).degree(k))
    }

    pub fn coordinates(&self, masks: &[u32]) -> Vec<F> {
        masks
            .iter()
            .map(|&m| self.coeffs[m as usize].clone())
            .collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.ngens, other.ngens);
        Form {
            ngens: self.ngens,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.ngens, other.ngens);
        Form {
            ngens: self.ngens,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.map(|c| -c.clone())
    }

    pub fn scale(&self, s: &F) -> Self {
        if s.is_zero() {
            return Self::zero(self.ngens);
        }
        self.map(|c| c.mul_ref(s))
    }

    pub fn map<G: Scalar>(&self, f: impl Fn(&F) -> G) -> Form<G> {
        Form {
            ngens: self.ngens,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    /// Wedge product; errors if the top degrees add beyond the number of
    /// generators.
    pub fn wedge(&self, other: &Self) -> Result<Self, ExteriorError> {
        if let (Some(a), Some(b)) = (self.degrees().last(), other.degrees().last()) {
            if a + b > self.ngens {
                return Err(ExteriorError::DegreeOverflow {
                    degree: a + b,
                    max: self.ngens,
                });
            }
        }
        Ok(self.wedge_unchecked(other))
    }

    /// Wedge product, silently dropping anything beyond the top degree.
    pub fn wedge_unchecked(&self, other: &Self) -> Self {
        assert_eq!(self.ngens, other.ngens);
        let mut out = Self::zero(self.ngens);
        let rhs: Vec<(u32, &F)> = other.terms().collect();
        for (a, ca) in self.terms() {
            for &(b, cb) in &rhs {
                match wedge_sign(a, b) {
                    0 => {}
                    1 => out.coeffs[(a | b) as usize] += ca.mul_ref(cb),
                    _ => out.coeffs[(a | b) as usize] -= ca.mul_ref(cb),
                }
            }
        }
        out
    }

    /// `self^k`; `self^0 = 1`.
    pub fn power(&self, k: usize) -> Result<Self, ExteriorError> {
        let mut out = Self::one(self.ngens);
        for _ in 0..k {
            out = out.wedge(self)?;
        }
        Ok(out)
    }

    /// Coefficient of the top monomial `e^1 ^ ... ^ e^N`.
    pub fn top_coefficient(&self) -> &F {
        &self.coeffs[(1usize << self.ngens) - 1]
    }
}

impl Form<Rational> {
    /// Random degree-`k` form with integer coefficients in `-range..=range`,
    /// roughly half of them zero.
    pub fn random<R: Rng + ?Sized>(ngens: usize, k: usize, range: i64, rng: &mut R) -> Self {
        let masks = basis(ngens).degree(k);
        let v: Vec<Rational> = masks
            .iter()
            .map(|_| {
                if rng.gen_bool(0.5) {
                    Rational::zero()
                } else {
                    Rational::from_integer(rng.gen_range(-range..=range).into())
                }
            })
            .collect();
        Self::from_vector(ngens, k, &v)
    }

    /// Human-readable form like `-a^b + 1/2 c^d`.
    pub fn display(&self, names: &[String]) -> String {
        display_terms(self.terms().map(|(m, c)| (m, rational_coeff(c))), names)
    }
}

impl Form<Gaussian> {
    pub fn display(&self, names: &[String]) -> String {
        display_terms(
            self.terms().map(|(m, c)| {
                if c.im.is_zero() {
                    (m, rational_coeff(&c.re))
                } else {
                    (m, (false, format!("{} ", ShowGaussian(c))))
                }
            }),
            names,
        )
    }

    pub fn real_part(&self) -> Form<Rational> {
        self.map(|c| c.re.clone())
    }

    pub fn imag_part(&self) -> Form<Rational> {
        self.map(|c| c.im.clone())
    }
}

// (negative, magnitude prefix) where the prefix is empty for unit coefficients.
fn rational_coeff(c: &Rational) -> (bool, String) {
    let a = c.abs();
    (
        c.is_negative(),
        if a.is_one() {
            String::new()
        } else {
            format!("{a} ")
        },
    )
}

fn display_terms(terms: impl Iterator<Item = (u32, (bool, String))>, names: &[String]) -> String {
    let mut out = String::new();
    for (i, (m, (neg, c))) in terms.enumerate() {
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&c);
        if m == 0 {
            if c.is_empty() {
                out.push('1');
            } else {
                out.pop();
            }
        } else {
            let parts: Vec<&str> = indices(m).into_iter().map(|i| names[i].as_str()).collect();
            let _ = write!(out, "{}", parts.join("^"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::qi;

    fn names(n: usize) -> Vec<String> {
        (1..=n).map(|i| format!("e{i}")).collect()
    }

    #[test]
    fn wedge_of_disjoint_monomials() {
        let a = Form::<Rational>::from_terms(4, &[(qi(1), vec![0, 1])]);
        let b = Form::<Rational>::from_terms(4, &[(qi(1), vec![2, 3])]);
        assert_eq!(a.wedge(&b).unwrap(), Form::monomial(4, 0b1111, qi(1)));
        let c = Form::<Rational>::from_terms(4, &[(qi(1), vec![1, 0])]);
        assert_eq!(c, a.neg());
    }

    #[test]
    fn graded_commutativity() {
        let mut rng = rand::thread_rng();
        for _ in 0..20 {
            let a = Form::random(5, 2, 3, &mut rng);
            let b = Form::random(5, 1, 3, &mut rng);
            let c = Form::random(5, 3, 3, &mut rng);
            assert_eq!(a.wedge_unchecked(&b), b.wedge_unchecked(&a));
            assert_eq!(b.wedge_unchecked(&c), c.wedge_unchecked(&b).neg());
            let bb = Form::random(5, 1, 3, &mut rng);
            assert_eq!(b.wedge_unchecked(&bb), bb.wedge_unchecked(&b).neg());
            assert_eq!(
                a.wedge_unchecked(&b).wedge_unchecked(&bb),
                a.wedge_unchecked(&b.wedge_unchecked(&bb))
            );
        }
    }

    #[test]
    fn standard_kahler_square_is_twice_volume() {
        let w = Form::<Rational>::from_terms(4, &[(qi(1), vec![0, 1]), (qi(1), vec![2, 3])]);
        assert_eq!(w.power(2).unwrap(), Form::monomial(4, 0b1111, qi(2)));
        assert!(matches!(
            w.power(3),
            Err(ExteriorError::DegreeOverflow { degree: 6, max: 4 })
        ));
    }

    #[test]
    fn display_and_vectors() {
        let f = Form::<Rational>::from_terms(
            4,
            &[(qi(-1), vec![0, 1]), (crate::exactla::q(1, 2), vec![2, 3])],
        );
        assert_eq!(f.display(&names(4)), "-e1^e2 + 1/2 e3^e4");
        assert_eq!(Form::<Rational>::zero(2).display(&names(2)), "0");
        assert_eq!(f.degree(), Some(2));
        assert_eq!(Form::from_vector(4, 2, &f.vector(2)), f);
    }
}
