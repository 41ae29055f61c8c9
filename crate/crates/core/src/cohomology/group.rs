use std::fmt;

use super::error::CohomologyError;
use crate::exactla::{Matrix, Quotient, Scalar, Subspace};
use crate::exterior::Form;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Theory {
    DeRham,
    Dolbeault,
    BottChern,
    Aeppli,
}

impl Theory {
    pub fn short(self) -> &'static str {
        match self {
            Theory::DeRham => "dR",
            Theory::Dolbeault => "dbar",
            Theory::BottChern => "BC",
            Theory::Aeppli => "AE",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Degree {
    Total(usize),
    Bi(usize, usize),
}

/// Which basis the coordinate vectors refer to: real generators `e^k`, or
/// the complex frame `z_a, zb_a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Frame {
    Real,
    Complex,
}

/// A quotient `numerator / denominator` of spaces of invariant forms,
/// both given in coordinates on a fixed list of monomials.
#[derive(Clone, Debug)]
pub struct CohomologyGroup<F> {
    theory: Theory,
    degree: Degree,
    real: bool,
    frame: Frame,
    ngens: usize,
    masks: Vec<u32>,
    numerator: Subspace<F>,
    denominator: Subspace<F>,
    quotient: Quotient<F>,
}

impl<F: Scalar> CohomologyGroup<F> {
    #[allow(clippy::too_many_arguments)]
    pub(crate) fn new(
        theory: Theory,
        degree: Degree,
        real: bool,
        frame: Frame,
        ngens: usize,
        masks: Vec<u32>,
        numerator: Subspace<F>,
        denominator: Subspace<F>,
    ) -> Result<Self, CohomologyError> {
        let quotient = Quotient::new(&numerator, &denominator)?;
        Ok(CohomologyGroup {
            theory,
            degree,
            real,
            frame,
            ngens,
            masks,
            numerator,
            denominator,
            quotient,
        })
    }

    /// Numerator and denominator as column spans of operator matrices.
    #[allow(clippy::too_many_arguments)]
    pub(crate) fn from_operators(
        theory: Theory,
        degree: Degree,
        real: bool,
        frame: Frame,
        ngens: usize,
        masks: Vec<u32>,
        kernels_of: &[Matrix<F>],
        images_of: &[Matrix<F>],
    ) -> Result<Self, CohomologyError> {
        let dim = masks.len();
        let mut num = Subspace::full(dim);
        for m in kernels_of {
            if m.rows() > 0 {
                num = num.intersection(&crate::exactla::kernel(m));
            }
        }
        let mut den = Subspace::zero(dim);
        for m in images_of {
            if m.cols() > 0 {
                den = den.sum(&crate::exactla::image(m));
            }
        }
        Self::new(theory, degree, real, frame, ngens, masks, num, den)
    }

    pub fn theory(&self) -> Theory {
        self.theory
    }

    pub fn degree(&self) -> Degree {
        self.degree
    }

    /// Whether this is the real form of the group.
    pub fn is_real(&self) -> bool {
        self.real
    }

    pub fn frame(&self) -> Frame {
        self.frame
    }

    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    /// Monomials carrying the coordinates.
    pub fn masks(&self) -> &[u32] {
        &self.masks
    }

    pub fn numerator(&self) -> &Subspace<F> {
        &self.numerator
    }

    pub fn denominator(&self) -> &Subspace<F> {
        &self.denominator
    }

    pub fn quotient(&self) -> &Quotient<F> {
        &self.quotient
    }

    pub fn coordinates_of(&self, f: &Form<F>) -> Vec<F> {
        f.coordinates(&self.masks)
    }

    pub fn form_of(&self, v: &[F]) -> Form<F> {
        Form::from_coordinates(self.ngens, &self.masks, v)
    }

    /// Representative forms, one per class basis vector.
    pub fn representatives(&self) -> Vec<Form<F>> {
        self.quotient
            .representatives()
            .iter()
            .map(|v| self.form_of(v))
            .collect()
    }

    /// Whether `f` lies in the numerator (is a cocycle for this theory).
    pub fn is_cocycle(&self, f: &Form<F>) -> bool {
        self.numerator.contains(&self.coordinates_of(f)) && self.supported(f)
    }

    fn supported(&self, f: &Form<F>) -> bool {
        let v = self.coordinates_of(f);
        Form::from_coordinates(self.ngens, &self.masks, &v) == *f
    }

    /// Class coordinates of a cocycle.
    pub fn project(&self, f: &Form<F>) -> Result<Vec<F>, CohomologyError> {
        if !self.supported(f) {
            return Err(CohomologyError::NotAClass(self.to_string()));
        }
        self.quotient
            .project(&self.coordinates_of(f))
            .map_err(|_| CohomologyError::NotAClass(self.to_string()))
    }

    /// Representative with the given class coordinates.
    pub fn lift(&self, coords: &[F]) -> Form<F> {
        self.form_of(&self.quotient.lift(coords))
    }
}

impl<F> fmt::Display for CohomologyGroup<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = if self.real { ",R" } else { "" };
        match self.degree {
            Degree::Total(k) => write!(f, "H^{k}_{}{r}", self.theory.short()),
            Degree::Bi(p, q) => write!(f, "H^{{{p},{q}}}_{}{r}", self.theory.short()),
        }
    }
}
