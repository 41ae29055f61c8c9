//! Floating-point search for a point of an affine family of Hermitian
//! matrices with positive smallest eigenvalue. Results are only hints:
//! callers round them to rationals and re-check exactly.

use nalgebra::{Complex, DMatrix, SymmetricEigen};

use num::{One, Signed, Zero};

use crate::exactla::{
    approximate, is_psd_hermitian, to_f64, Definiteness, Gaussian, Matrix, Rational, Scalar,
};

pub(crate) type CMat = DMatrix<Complex<f64>>;

pub(crate) fn to_cmat(m: &Matrix<Gaussian>) -> CMat {
    CMat::from_fn(m.rows(), m.cols(), |i, j| m[(i, j)].to_c64())
}

fn frobenius(m: &CMat) -> f64 {
    m.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Smallest eigenvalue and a softmin-weighted supergradient along `dirs`.
fn min_eig_grad(m: &CMat, dirs: &[CMat], tau: f64) -> (f64, Vec<f64>) {
    let eig = SymmetricEigen::new(m.clone());
    let lmin = eig
        .eigenvalues
        .iter()
        .copied()
        .fold(f64::INFINITY, f64::min);
    let weights: Vec<f64> = eig
        .eigenvalues
        .iter()
        .map(|&l| (-(l - lmin) / tau).exp())
        .collect();
    let total: f64 = weights.iter().sum();
    let grad = dirs
        .iter()
        .map(|d| {
            let mut g = 0.0;
            for (i, w) in weights.iter().enumerate() {
                if *w < 1e-12 {
                    continue;
                }
                let v = eig.eigenvectors.column(i);
                g += w * (v.adjoint() * d * v)[(0, 0)].re;
            }
            g / total
        })
        .collect();
    (lmin, grad)
}

pub(crate) struct SearchResult {
    pub t: Vec<f64>,
    /// Smallest eigenvalue at `t`, relative to the scale of the family.
    pub value: f64,
}

/// Approximately maximizes `lambda_min(base + sum t_k dirs[k])`, stopping
/// early once the relative value exceeds `target`.
pub(crate) fn maximize_min_eigenvalue(
    base: &CMat,
    dirs: &[CMat],
    target: f64,
    iters: usize,
) -> SearchResult {
    let scale = std::iter::once(base)
        .chain(dirs)
        .map(frobenius)
        .fold(0.0, f64::max)
        .max(f64::MIN_POSITIVE);
    let base = base / Complex::new(scale, 0.0);
    let norms: Vec<f64> = dirs.iter().map(|d| frobenius(d) / scale).collect();
    let unit: Vec<CMat> = dirs
        .iter()
        .zip(&norms)
        .map(|(d, &nrm)| d / Complex::new(scale * nrm.max(f64::MIN_POSITIVE), 0.0))
        .collect();
    let eval = |u: &[f64]| {
        let mut m = base.clone();
        for (d, x) in unit.iter().zip(u) {
            m += d * Complex::new(*x, 0.0);
        }
        m
    };
    let mut u = vec![0.0; dirs.len()];
    let (mut value, _) = min_eig_grad(&eval(&u), &unit, 1e-3);
    let mut best = (u.clone(), value);
    for it in 0..iters {
        if best.1 > target || unit.is_empty() {
            break;
        }
        let (v, g) = min_eig_grad(&eval(&u), &unit, 1e-3 + 0.05 / (1.0 + it as f64));
        value = v;
        if value > best.1 {
            best = (u.clone(), value);
        }
        let gn = g.iter().map(|x| x * x).sum::<f64>().sqrt();
        if gn < 1e-14 {
            break;
        }
        let step = 0.5 / (1.0 + it as f64).sqrt();
        for (x, gi) in u.iter_mut().zip(&g) {
            *x += step * gi / gn;
        }
    }
    let (u, value) = best;
    let t = u
        .iter()
        .zip(&norms)
        .map(|(x, &nrm)| x / nrm.max(f64::MIN_POSITIVE))
        .collect();
    SearchResult { t, value }
}

/// Rounds `t` at increasing precision until `build(t)` is exactly
/// positive definite.
pub(crate) fn rationalize<T>(
    t: &[f64],
    mut build: impl FnMut(&[Rational]) -> (Matrix<Gaussian>, T),
) -> Option<(Vec<Rational>, T)> {
    for den in [1_000i64, 1_000_000, 1_000_000_000, 1_000_000_000_000] {
        let r: Vec<Rational> = t.iter().map(|&x| approximate(x, den)).collect();
        let (m, extra) = build(&r);
        if matches!(is_psd_hermitian(&m), Ok(Definiteness::PositiveDefinite)) {
            return Some((r, extra));
        }
    }
    None
}

/// Exact `sum y_j mats[j]`.
pub(crate) fn combination(mats: &[Matrix<Gaussian>], y: &[Rational]) -> Matrix<Gaussian> {
    let (r, c) = (mats[0].rows(), mats[0].cols());
    let mut out = Matrix::zeros(r, c);
    for (m, x) in mats.iter().zip(y) {
        if !x.is_zero() {
            out = out.add(&m.scale(&Gaussian::from_rational(x.clone())));
        }
    }
    out
}

/// Looks for `y` with `sum y_j mats[j]` positive definite and
/// `c . y <= 0`: first on the slice `c . y = -1`, then on
/// `c . y = 0, trace = 1`. The returned point is exactly verified.
pub(crate) fn find_positive_on_slices(
    mats: &[Matrix<Gaussian>],
    c: &[Rational],
) -> Option<Vec<Rational>> {
    if mats.is_empty() || mats[0].rows() == 0 {
        return None;
    }
    let dim = mats.len();
    let trace: Vec<Rational> = mats.iter().map(|m| m.trace().re).collect();
    // the condition is homogeneous; rescale so the slice sits at unit size
    let cmax = c
        .iter()
        .map(|x| x.abs())
        .max()
        .unwrap_or_else(Rational::zero);
    let c: Vec<Rational> = if cmax.is_zero() {
        c.to_vec()
    } else {
        c.iter().map(|x| x / &cmax).collect()
    };
    let c = c.as_slice();
    let mut slices: Vec<(Matrix<Rational>, Vec<Rational>)> = Vec::new();
    if c.iter().any(|x| !x.is_zero()) {
        slices.push((Matrix::from_rows(vec![c.to_vec()]), vec![-Rational::one()]));
    }
    slices.push((
        Matrix::from_rows(vec![c.to_vec(), trace]),
        vec![Rational::zero(), Rational::one()],
    ));
    let cm: Vec<CMat> = mats.iter().map(to_cmat).collect();
    let float_comb = |y: &[f64]| {
        let mut m = CMat::zeros(mats[0].rows(), mats[0].cols());
        for (a, x) in cm.iter().zip(y) {
            m += a * Complex::new(*x, 0.0);
        }
        m
    };
    for (a, b) in slices {
        let Some(y0) = a.solve(&b) else { continue };
        let null = a.kernel_basis();
        let y0f: Vec<f64> = y0.iter().map(to_f64).collect();
        let base = float_comb(&y0f);
        let dirs: Vec<CMat> = null
            .iter()
            .map(|v| float_comb(&v.iter().map(to_f64).collect::<Vec<_>>()))
            .collect();
        let found = maximize_min_eigenvalue(&base, &dirs, 0.05, 3000);
        if found.value <= 0.0 {
            continue;
        }
        let point = |s: &[Rational]| {
            let mut y = y0.clone();
            for (v, sk) in null.iter().zip(s) {
                for (yj, vj) in y.iter_mut().zip(v) {
                    *yj += vj.clone() * sk.clone();
                }
            }
            y
        };
        if let Some((_, y)) = rationalize(&found.t, |s| {
            let y = point(s);
            (combination(mats, &y), y)
        }) {
            debug_assert_eq!(y.len(), dim);
            return Some(y);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{gauss, qi};

    fn diag(v: &[i64]) -> Matrix<Gaussian> {
        let mut m = Matrix::zeros(v.len(), v.len());
        for (i, x) in v.iter().enumerate() {
            m[(i, i)] = gauss(qi(*x), qi(0));
        }
        m
    }

    #[test]
    fn finds_positive_point() {
        // diag(-1, 2) + t diag(1, -1): positive for 1 < t < 2
        let base = to_cmat(&diag(&[-1, 2]));
        let dirs = vec![to_cmat(&diag(&[1, -1]))];
        let r = maximize_min_eigenvalue(&base, &dirs, 1.0, 500);
        assert!(r.value > 0.0);
        assert!(r.t[0] > 1.0 && r.t[0] < 2.0, "{:?}", r.t);
        let exact = rationalize(&r.t, |t| {
            let m = diag(&[-1, 2])
                .add(&diag(&[1, -1]).map(|x| x.clone() * Gaussian::from_rational(t[0].clone())));
            (m, ())
        });
        assert!(exact.is_some());
    }

    #[test]
    fn infeasible_family_stays_negative() {
        let base = to_cmat(&diag(&[-1, -1]));
        let dirs = vec![to_cmat(&diag(&[1, -1]))];
        let r = maximize_min_eigenvalue(&base, &dirs, 1.0, 300);
        assert!(r.value < 0.0);
    }
}
