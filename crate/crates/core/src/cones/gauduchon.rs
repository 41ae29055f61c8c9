//! Membership of Aeppli classes in the Gauduchon cone, by a primal search
//! for a strictly positive representative and a dual search for a closed
//! positive (1,1)-form pairing non-positively with the class.

use num::{Signed, Zero};

use super::description::{Certificate, Membership};
use super::error::ConeError;
use super::pseff::compress;
use super::search::{find_positive_on_slices, maximize_min_eigenvalue, rationalize, to_cmat};
use crate::cohomology::Cohomology;
use crate::exactla::{is_psd_hermitian, Definiteness, Gaussian, Matrix, Rational};
use crate::exterior::Form;

#[derive(Clone, Debug)]
pub struct GauduchonMembership {
    pub verdict: Membership,
    pub certificate: Certificate,
}

fn check_len(expected: usize, class: &[Rational]) -> Result<(), ConeError> {
    if class.len() != expected {
        return Err(ConeError::WrongClassSize {
            expected,
            found: class.len(),
        });
    }
    Ok(())
}

/// Primal search: `Phi = rep + sum t_k V_k` over the Aeppli denominator.
fn primal(coh: &Cohomology<'_>, class: &[Rational]) -> Result<Option<Form<Rational>>, ConeError> {
    let m = coh.manifold();
    let n = m.n();
    let ae = coh.aeppli_real(n - 1)?;
    let rep = ae.lift(class);
    let dirs: Vec<Form<Rational>> = ae
        .denominator()
        .basis()
        .iter()
        .map(|v| ae.form_of(v))
        .collect();
    let m0 = m.n1n1_matrix(&rep)?;
    if is_psd_hermitian(&m0)? == Definiteness::PositiveDefinite {
        return Ok(Some(rep));
    }
    let mk: Vec<Matrix<Gaussian>> = dirs
        .iter()
        .map(|v| m.n1n1_matrix(v))
        .collect::<Result<_, _>>()?;
    let found = maximize_min_eigenvalue(
        &to_cmat(&m0),
        &mk.iter().map(to_cmat).collect::<Vec<_>>(),
        0.05,
        3000,
    );
    if found.value <= 0.0 {
        return Ok(None);
    }
    let phi_of = |t: &[Rational]| {
        let mut phi = rep.clone();
        for (v, tk) in dirs.iter().zip(t) {
            if !tk.is_zero() {
                phi = phi.add(&v.scale(tk));
            }
        }
        phi
    };
    Ok(rationalize(&found.t, |t| {
        let phi = phi_of(t);
        (m.n1n1_matrix(&phi).expect("(n-1,n-1)-form"), phi)
    })
    .map(|(_, phi)| phi))
}

/// Dual search over closed real (1,1)-forms.
fn dual(
    coh: &Cohomology<'_>,
    class: &[Rational],
) -> Result<Option<(Form<Rational>, Rational)>, ConeError> {
    let m = coh.manifold();
    let n = m.n();
    let ae = coh.aeppli_real(n - 1)?;
    let rep = ae.lift(class);
    let closed = coh.bott_chern_real(1)?;
    let xis: Vec<Form<Rational>> = closed
        .numerator()
        .basis()
        .iter()
        .map(|v| closed.form_of(v))
        .collect();
    if xis.is_empty() {
        return Ok(None);
    }
    let hs: Vec<Matrix<Gaussian>> = xis
        .iter()
        .map(|x| m.hermitian_matrix(x))
        .collect::<Result<_, _>>()?;
    let compressed = compress(n, &hs);
    let c: Vec<Rational> = xis
        .iter()
        .map(|x| m.integrate(&x.wedge_unchecked(&rep)))
        .collect();
    Ok(find_positive_on_slices(&compressed, &c).map(|y| {
        let mut xi = Form::zero(m.ngens());
        for (x, yj) in xis.iter().zip(&y) {
            xi = xi.add(&x.scale(yj));
        }
        let pairing = m.integrate(&xi.wedge_unchecked(&rep));
        (xi, pairing)
    }))
}

/// Decides whether the real Aeppli class `class` of bidegree (n-1,n-1)
/// contains a Gauduchon metric's `omega^{n-1}`.
///
/// Interior comes with a strictly positive representative, Outside with a
/// closed positive nonzero (1,1)-form whose pairing with the class is not
/// positive. If both searches succeed the inputs are inconsistent and an
/// error is returned.
pub fn gauduchon_cone_membership(
    coh: &Cohomology<'_>,
    class: &[Rational],
) -> Result<GauduchonMembership, ConeError> {
    let m = coh.manifold();
    m.require_unimodular()?;
    let ae = coh.aeppli_real(m.n() - 1)?;
    check_len(ae.dim(), class)?;
    let p = primal(coh, class)?;
    let d = dual(coh, class)?;
    match (p, d) {
        (Some(phi), Some((xi, pairing))) => Err(ConeError::Inconsistent(format!(
            "representative {} is positive but {} pairs to {}",
            phi.display(m.names()),
            xi.display(m.names()),
            pairing
        ))),
        (Some(phi), None) => Ok(GauduchonMembership {
            verdict: Membership::Interior,
            certificate: Certificate::Primal { phi },
        }),
        (None, Some((xi, pairing))) => Ok(GauduchonMembership {
            verdict: Membership::Outside,
            certificate: Certificate::Dual { xi, pairing },
        }),
        (None, None) => Ok(GauduchonMembership {
            verdict: Membership::Unknown,
            certificate: Certificate::None,
        }),
    }
}

/// Re-checks a membership certificate from scratch.
pub fn validate_certificate(
    coh: &Cohomology<'_>,
    class: &[Rational],
    cert: &Certificate,
) -> Result<bool, ConeError> {
    let m = coh.manifold();
    let n = m.n();
    let ae = coh.aeppli_real(n - 1)?;
    check_len(ae.dim(), class)?;
    Ok(match cert {
        Certificate::Primal { phi } => {
            let z = m.complexify(phi);
            m.has_bidegree(&z, n - 1, n - 1)
                && m.ddc(phi).is_zero()
                && m.is_positive_n1n1(phi)? == Definiteness::PositiveDefinite
                && ae.project(phi)? == class
        }
        Certificate::Dual { xi, pairing } => {
            let z = m.complexify(xi);
            m.has_bidegree(&z, 1, 1)
                && m.d(xi).is_zero()
                && !xi.is_zero()
                && m.is_positive_11(xi)?.is_positive()
                && {
                    let value = m.integrate(&xi.wedge_unchecked(&ae.lift(class)));
                    value == *pairing && !value.is_positive()
                }
        }
        _ => false,
    })
}
