//! Hermitian metric classification and the pseudo-effective, Lee-Gauduchon
//! and Gauduchon cones.

mod description;
mod error;
mod gauduchon;
mod metrics;
mod pseff;
mod search;

pub use description::{Certificate, ConeKind, Membership};
pub use error::ConeError;
pub use gauduchon::{gauduchon_cone_membership, validate_certificate, GauduchonMembership};
pub use metrics::{
    gauduchon_defect, is_balanced, is_gauduchon, is_strongly_gauduchon, lck_lee_form, lee_form,
    lee_form_coclosed, lee_gauduchon_class, LckStructure, LeeGauduchonClass,
};
pub use pseff::{lg_cone, lg_samples, pseff_cone, LgCone, PseffCone};
