use std::fmt;

use crate::exactla::{Definiteness, PolyhedralCone, Rational};
use crate::exterior::Form;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Membership {
    Interior,
    /// In the closure but not in the interior.
    Boundary,
    Outside,
    Unknown,
}

impl fmt::Display for Membership {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Membership::Interior => "interior",
            Membership::Boundary => "boundary",
            Membership::Outside => "outside",
            Membership::Unknown => "unknown",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum ConeKind {
    /// No nonzero point.
    Empty,
    /// The whole ambient space.
    Whole,
    /// Closed polyhedral cone; the cone itself may be its interior.
    Polyhedral(PolyhedralCone),
    /// `{x : sum x_j H_j >= 0}` for the listed Hermitian matrices, or the
    /// dual of that set.
    Spectrahedral,
}

impl ConeKind {
    pub fn name(&self) -> &'static str {
        match self {
            ConeKind::Empty => "empty",
            ConeKind::Whole => "whole",
            ConeKind::Polyhedral(_) => "polyhedral",
            ConeKind::Spectrahedral => "spectrahedral",
        }
    }
}

/// Evidence for a membership verdict; every variant can be re-checked by
/// exact evaluation.
#[derive(Clone, Debug, PartialEq)]
pub enum Certificate {
    /// Exact definiteness of the Hermitian matrix at the point.
    Matrix(Definiteness),
    /// Values of the facet inequalities at the point.
    Facets(Vec<Rational>),
    /// The point is in the whole space, or the cone is empty.
    Trivial,
    /// A strictly positive `dd^c`-closed representative of the class.
    Primal {
        phi: Form<Rational>,
    },
    /// A closed positive nonzero (1,1)-form pairing non-positively with the
    /// class.
    Dual {
        xi: Form<Rational>,
        pairing: Rational,
    },
    /// A class `rho` of the pseudo-effective cone with `<x, rho> <= 0`.
    Separator {
        rho: Vec<Rational>,
        pairing: Rational,
    },
    None,
}
