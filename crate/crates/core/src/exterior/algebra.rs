use std::fmt;

use num::Zero;

use super::basis::{basis, indices, wedge_sign};
use super::error::ExteriorError;
use super::form::Form;
use crate::exactla::{Matrix, Rational, Scalar};

/// A linear operator on the exterior algebra given by the image of every
/// monomial.
#[derive(Clone, Debug)]
pub(crate) struct SparseOp<F> {
    ngens: usize,
    images: Vec<Vec<(u32, F)>>,
}

impl<F: Scalar> SparseOp<F> {
    pub(crate) fn from_images(ngens: usize, images: Vec<Vec<(u32, F)>>) -> Self {
        assert_eq!(images.len(), 1 << ngens);
        SparseOp { ngens, images }
    }

    pub(crate) fn apply(&self, f: &Form<F>) -> Form<F> {
        let mut out = Form::zero(self.ngens);
        let mut acc = vec![F::zero(); 1 << self.ngens];
        for (m, c) in f.terms() {
            for (t, x) in &self.images[m as usize] {
                acc[*t as usize] += c.mul_ref(x);
            }
        }
        for (t, x) in acc.into_iter().enumerate() {
            if !x.is_zero() {
                out.set_coeff(t as u32, x);
            }
        }
        out
    }

    /// Matrix from the span of `source` monomials to the span of `target`
    /// monomials; components outside `target` are dropped.
    pub(crate) fn matrix(&self, source: &[u32], target: &[u32]) -> Matrix<F> {
        let mut pos = vec![usize::MAX; 1 << self.ngens];
        for (i, &t) in target.iter().enumerate() {
            pos[t as usize] = i;
        }
        let mut m = Matrix::zeros(target.len(), source.len());
        for (j, &s) in source.iter().enumerate() {
            for (t, x) in &self.images[s as usize] {
                let i = pos[*t as usize];
                if i != usize::MAX {
                    m[(i, j)] += x.clone();
                }
            }
        }
        m
    }

    /// Keep only image terms satisfying `keep(source, target)`.
    pub(crate) fn filter(&self, keep: impl Fn(u32, u32) -> bool) -> Self {
        let images = self
            .images
            .iter()
            .enumerate()
            .map(|(s, img)| {
                img.iter()
                    .filter(|(t, _)| keep(s as u32, *t))
                    .cloned()
                    .collect()
            })
            .collect();
        SparseOp {
            ngens: self.ngens,
            images,
        }
    }
}

/// The antiderivation extending `generator_images` (degree 1 to degree 2).
pub(crate) fn derivation<F: Scalar>(ngens: usize, generator_images: &[Form<F>]) -> SparseOp<F> {
    let gens: Vec<Vec<(u32, F)>> = generator_images
        .iter()
        .map(|f| f.terms().map(|(m, c)| (m, c.clone())).collect())
        .collect();
    let mut images = Vec::with_capacity(1 << ngens);
    for mask in 0..(1u32 << ngens) {
        let mut acc: Vec<F> = Vec::new();
        let mut touched: Vec<u32> = Vec::new();
        for (j, g) in indices(mask).into_iter().enumerate() {
            // (-1)^j prefix ^ d(e^g) ^ suffix
            let rest = mask & !(1 << g);
            let prefix = rest & ((1u32 << g) - 1);
            let suffix = rest & !((1u32 << g) - 1);
            for (pm, c) in &gens[g] {
                let s1 = wedge_sign(prefix, *pm);
                if s1 == 0 {
                    continue;
                }
                let s2 = wedge_sign(prefix | pm, suffix);
                if s2 == 0 {
                    continue;
                }
                let sign = s1 * s2 * if j % 2 == 0 { 1 } else { -1 };
                let t = prefix | pm | suffix;
                if acc.is_empty() {
                    acc = vec![F::zero(); 1 << ngens];
                }
                if acc[t as usize].is_zero() {
                    touched.push(t);
                }
                if sign > 0 {
                    acc[t as usize] += c.clone();
                } else {
                    acc[t as usize] -= c.clone();
                }
            }
        }
        touched.sort_unstable();
        touched.dedup();
        images.push(
            touched
                .into_iter()
                .filter(|t| !acc[*t as usize].is_zero())
                .map(|t| (t, acc[t as usize].clone()))
                .collect(),
        );
    }
    SparseOp::from_images(ngens, images)
}

/// A real Lie algebra given by the differentials of a basis of its dual,
/// `d e^k = sum c e^i ^ e^j`. Its Chevalley-Eilenberg complex computes the
/// invariant de Rham cohomology of `G / Gamma`.
#[derive(Clone, Debug)]
pub struct LieAlgebra {
    name: String,
    names: Vec<String>,
    de: Vec<Form<Rational>>,
    d: SparseOp<Rational>,
}

/// Outcome of [`LieAlgebra::validate`].
#[derive(Clone, Debug, PartialEq)]
pub struct ValidationReport {
    /// Generators `k` with `d(d e^k) != 0`, and the offending 3-form.
    pub jacobi_failures: Vec<(usize, Form<Rational>)>,
    /// `sum_k i_{E_k} d e^k`.
    pub modular_form: Form<Rational>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.jacobi_failures.is_empty() && self.modular_form.is_zero()
    }
}

impl LieAlgebra {
    /// Differentials must be 2-forms on `names.len()` generators.
    pub fn new(
        name: &str,
        names: Vec<String>,
        de: Vec<Form<Rational>>,
    ) -> Result<Self, ExteriorError> {
        let ngens = names.len();
        if de.len() != ngens {
            return Err(ExteriorError::DimensionMismatch {
                expected: ngens,
                found: de.len(),
            });
        }
        for f in &de {
            if f.ngens() != ngens {
                return Err(ExteriorError::DimensionMismatch {
                    expected: ngens,
                    found: f.ngens(),
                });
            }
            if let Some(k) = f.degrees().into_iter().find(|&k| k != 2) {
                return Err(ExteriorError::DegreeOverflow { degree: k, max: 2 });
            }
        }
        let d = derivation(ngens, &de);
        Ok(LieAlgebra {
            name: name.to_string(),
            names,
            de,
            d,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn structure(&self) -> &[Form<Rational>] {
        &self.de
    }

    /// The Chevalley-Eilenberg differential.
    pub fn d(&self, f: &Form<Rational>) -> Form<Rational> {
        self.d.apply(f)
    }

    /// Matrix of `d: Lambda^k -> Lambda^{k+1}` in lexicographic bases.
    pub fn d_matrix(&self, k: usize) -> Matrix<Rational> {
        let b = basis(self.dim());
        let target: &[u32] = if k < self.dim() { b.degree(k + 1) } else { &[] };
        self.d.matrix(b.degree(k), target)
    }

    pub fn modular_form(&self) -> Form<Rational> {
        let n = self.dim();
        let mut out = Form::zero(n);
        for (k, f) in self.de.iter().enumerate() {
            for (m, c) in f.terms() {
                // i_{E_k}(e^i ^ e^j) = delta_ki e^j - delta_kj e^i
                if m & (1 << k) == 0 {
                    continue;
                }
                let other = m & !(1 << k);
                let sign = wedge_sign(1 << k, other);
                let t = Form::monomial(n, other, c.clone());
                out = if sign > 0 { out.add(&t) } else { out.sub(&t) };
            }
        }
        out
    }

    pub fn is_unimodular(&self) -> bool {
        self.modular_form().is_zero()
    }

    pub fn validate(&self) -> ValidationReport {
        let jacobi_failures = self
            .de
            .iter()
            .enumerate()
            .filter_map(|(k, f)| {
                let dd = self.d(f);
                (!dd.is_zero()).then_some((k, dd))
            })
            .collect();
        ValidationReport {
            jacobi_failures,
            modular_form: self.modular_form(),
        }
    }

    /// The validation report as a result, first failure wins.
    pub fn check(&self) -> Result<(), ExteriorError> {
        let r = self.validate();
        if let Some((k, f)) = r.jacobi_failures.first() {
            return Err(ExteriorError::JacobiFailure {
                generator: self.names[*k].clone(),
                residual: f.display(&self.names),
            });
        }
        if !r.modular_form.is_zero() {
            return Err(ExteriorError::NotUnimodular {
                modular_form: r.modular_form.display(&self.names),
            });
        }
        Ok(())
    }

    /// Salamon notation, e.g. `(0,0,0,12)`; coefficients other than 1 and
    /// indices beyond 9 are written out in full.
    pub fn salamon(&self) -> String {
        let parts: Vec<String> = self
            .de
            .iter()
            .map(|f| {
                if f.is_zero() {
                    return "0".to_string();
                }
                let mut s = String::new();
                for (i, (m, c)) in f.terms().enumerate() {
                    let idx = indices(m);
                    let digits = if self.dim() <= 9 {
                        idx.iter().map(|i| (i + 1).to_string()).collect::<String>()
                    } else {
                        idx.iter()
                            .map(|i| (i + 1).to_string())
                            .collect::<Vec<_>>()
                            .join(".")
                    };
                    let neg = c < &Rational::zero();
                    let a = if neg { -c.clone() } else { c.clone() };
                    if neg {
                        s.push('-');
                    } else if i > 0 {
                        s.push('+');
                    }
                    if a != Rational::from_integer(1.into()) {
                        s.push_str(&format!("{a}*"));
                    }
                    s.push_str(&digits);
                }
                s
            })
            .collect();
        format!("({})", parts.join(","))
    }
}

impl fmt::Display for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (name, de) in self.names.iter().zip(&self.de) {
            writeln!(f, "d {name} = {}", de.display(&self.names))?;
        }
        Ok(())
    }
}
