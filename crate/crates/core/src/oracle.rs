//! Brute-force checks: Frobenius recurrences, series coefficients,
//! termination conditions and pointwise residuals.
//!
//! Nothing here knows about the NU construction. Claims made by the solvers
//! are re-derived from the ODE itself.

use crate::nu::{NuEquation, PhiFactor};
use crate::poly::{Poly, PolyError, Scalar, C64};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum OracleError {
    #[error("the second-order coefficient vanishes identically")]
    ZeroLeading,
    #[error("expansion point is an irregular singular point")]
    Irregular,
    #[error("{0} is not an indicial exponent at the expansion point")]
    NotIndicial(String),
    #[error("recurrence leading factor vanishes at j = {0} with a nonzero right side (logarithmic case)")]
    Resonance(usize),
    #[error("{needed} seed coefficients are required, {given} given")]
    Seeds { needed: usize, given: usize },
    #[error("the unknown enters the recurrence leading factor")]
    NotAffine,
    #[error("termination polynomial vanishes identically; every value terminates")]
    Degenerate,
    #[error("root {root} fails series validation (|c_n+1| = {c1:.3e}, |c_n+2| = {c2:.3e})")]
    Validation { root: String, c1: f64, c2: f64 },
    #[error("need at least 10 residual samples, got {0}")]
    TooFewSamples(usize),
    #[error("every sample point is within 0.1 of a singularity")]
    NoSamples,
    #[error("the zero function is not a valid state")]
    ZeroState,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// `P2 w'' + P1 w' + P0 w = 0`
#[derive(Debug, Clone, PartialEq)]
pub struct OdeForm<S: Scalar> {
    pub p2: Poly<S>,
    pub p1: Poly<S>,
    pub p0: Poly<S>,
}

impl<S: Scalar> OdeForm<S> {
    pub fn new(p2: Poly<S>, p1: Poly<S>, p0: Poly<S>) -> Result<Self, OracleError> {
        if p2.is_zero() {
            return Err(OracleError::ZeroLeading);
        }
        Ok(Self { p2, p1, p0 })
    }

    /// `sigma w'' + tau~ w' + (sigma~/sigma) w = 0` when `sigma` divides
    /// `sigma~`, otherwise the form multiplied through by `sigma`.
    pub fn from_nu(eq: &NuEquation<S>) -> Result<Self, OracleError> {
        let (quot, rem) = eq.sigma_tilde().divrem(eq.sigma())?;
        if rem.is_negligible(eq.sigma_tilde().max_abs().max(1.0), 1e-12) {
            return Self::new(eq.sigma().clone(), eq.tau_tilde().clone(), quot);
        }
        Self::new(
            eq.sigma() * eq.sigma(),
            eq.sigma() * eq.tau_tilde(),
            eq.sigma_tilde().clone(),
        )
    }

    pub fn scale(&self, c: &S) -> Self {
        Self {
            p2: self.p2.scale(c),
            p1: self.p1.scale(c),
            p0: self.p0.scale(c),
        }
    }

    pub fn to_c64(&self) -> OdeForm<C64> {
        OdeForm {
            p2: self.p2.to_c64(),
            p1: self.p1.to_c64(),
            p0: self.p0.to_c64(),
        }
    }
}

/// `sum_k f_k(j - k) c_{j-k} = 0` for every `j`, each band `f_k` a
/// polynomial in the index.
#[derive(Debug, Clone, PartialEq)]
pub struct Recurrence<S: Scalar> {
    pub point: S,
    pub exponent: S,
    pub bands: Vec<Poly<S>>,
}

impl<S: Scalar> Recurrence<S> {
    pub fn bandwidth(&self) -> usize {
        self.bands.len() - 1
    }

    pub fn band(&self, k: usize, j: usize) -> S {
        self.bands[k].eval(&S::from_usize(j))
    }

    /// Number of leading coefficients left free: the count of `j` (from 0)
    /// where the leading factor vanishes, stopping at the first nonzero.
    pub fn free_seeds(&self) -> usize {
        (0..)
            .take_while(|&j| self.band(0, j).vanishes() || negligible_band(self, j))
            .count()
    }
}

fn negligible_band<S: Scalar>(rec: &Recurrence<S>, j: usize) -> bool {
    let scale = rec.bands[0].max_abs().max(1.0) * (1.0 + j as f64).powi(2);
    rec.band(0, j).negligible(scale) && S::BACKEND == crate::poly::Backend::Float
}

/// Order of vanishing at `t = 0`.
fn order(p: &Poly<impl Scalar>) -> usize {
    p.coeffs().iter().take_while(|c| c.vanishes()).count()
}

fn idx<S: Scalar>(p: &Poly<S>, i: isize) -> S {
    if i < 0 {
        S::zero()
    } else {
        p.coeff(i as usize)
    }
}

/// Shifted coefficient polynomials and the order of the zero of `P2`.
struct Local<S: Scalar> {
    a: Poly<S>,
    b: Poly<S>,
    c: Poly<S>,
    lead_order: usize,
    bandwidth: usize,
}

fn localize<S: Scalar>(ode: &OdeForm<S>, point: &S) -> Result<Local<S>, OracleError> {
    let a = ode.p2.shift(point);
    let b = ode.p1.shift(point);
    let c = ode.p0.shift(point);
    let l = order(&a);
    let regular = |p: &Poly<S>, need: isize| p.is_zero() || order(p) as isize >= need;
    if !regular(&b, l as isize - 1) || !regular(&c, l as isize - 2) {
        return Err(OracleError::Irregular);
    }
    let li = l as isize;
    let spread = |p: &Poly<S>, lift: isize| {
        p.degree().map_or(0, |d| (d as isize - li + lift).max(0) as usize)
    };
    let bandwidth = spread(&a, 0).max(spread(&b, 1)).max(spread(&c, 2));
    Ok(Local {
        a,
        b,
        c,
        lead_order: l,
        bandwidth,
    })
}

fn band_poly<S: Scalar>(local: &Local<S>, k: usize, exponent: &S) -> Poly<S> {
    let l = local.lead_order as isize;
    let k = k as isize;
    // j + rho as a polynomial in j
    let shifted = |offset: isize| Poly::new(vec![exponent.clone() - S::from_i64(offset as i64), S::one()]);
    let jr = shifted(0);
    let jr1 = shifted(1);
    let quad = (&jr * &jr1).scale(&idx(&local.a, l + k));
    let lin = jr.scale(&idx(&local.b, l - 1 + k));
    &(&quad + &lin) + &Poly::constant(idx(&local.c, l - 2 + k))
}

/// Recurrence for `w = (z - point)^exponent sum c_j (z - point)^j`.
pub fn frobenius_recurrence<S: Scalar>(
    ode: &OdeForm<S>,
    point: &S,
    exponent: &S,
) -> Result<Recurrence<S>, OracleError> {
    let local = localize(ode, point)?;
    let bands: Vec<Poly<S>> = (0..=local.bandwidth)
        .map(|k| band_poly(&local, k, exponent))
        .collect();
    let indicial = bands[0].eval(&S::zero());
    let scale = bands[0].max_abs().max(1.0);
    if !indicial.negligible(scale) {
        return Err(OracleError::NotIndicial(exponent.render()));
    }
    Ok(Recurrence {
        point: point.clone(),
        exponent: exponent.clone(),
        bands,
    })
}

/// Coefficients `c_0 .. c_{count-1}` from a single seed. Free coefficients
/// beyond the first (a vanishing leading factor with a vanishing right side)
/// are set to zero.
pub fn series_coeffs<S: Scalar>(
    rec: &Recurrence<S>,
    seed: S,
    count: usize,
) -> Result<Vec<S>, OracleError> {
    run_series(rec, &[seed], count, true)
}

/// As [`series_coeffs`] but with explicit values for the leading
/// coefficients, e.g. both `c_0` and `c_1` at an ordinary point.
pub fn series_coeffs_seeded<S: Scalar>(
    rec: &Recurrence<S>,
    seeds: &[S],
    count: usize,
) -> Result<Vec<S>, OracleError> {
    let needed = rec.free_seeds().max(1);
    if seeds.len() < needed {
        return Err(OracleError::Seeds {
            needed,
            given: seeds.len(),
        });
    }
    run_series(rec, seeds, count, false)
}

fn run_series<S: Scalar>(
    rec: &Recurrence<S>,
    seeds: &[S],
    count: usize,
    zero_free: bool,
) -> Result<Vec<S>, OracleError> {
    let mut c: Vec<S> = Vec::with_capacity(count);
    for j in 0..count {
        if j < seeds.len() {
            c.push(seeds[j].clone());
            continue;
        }
        let mut rhs = S::zero();
        let mut scale: f64 = 0.0;
        for k in 1..=rec.bandwidth().min(j) {
            let band = rec.band(k, j - k);
            scale = scale.max(band.magnitude());
            rhs = rhs - band * c[j - k].clone();
        }
        scale *= c.iter().map(Scalar::magnitude).fold(0.0, f64::max);
        let lead = rec.band(0, j);
        if lead.vanishes() || negligible_band(rec, j) {
            if zero_free && (rhs.vanishes() || rhs.negligible(scale.max(f64::MIN_POSITIVE))) {
                c.push(S::zero());
                continue;
            }
            return Err(OracleError::Resonance(j));
        }
        c.push(rhs / lead);
    }
    Ok(c)
}

/// An ODE whose zeroth-order coefficient is `base.p0 + x * unknown`.
#[derive(Debug, Clone, PartialEq)]
pub struct OdeFamily<S: Scalar> {
    pub base: OdeForm<S>,
    pub unknown: Poly<S>,
}

impl<S: Scalar> OdeFamily<S> {
    pub fn at(&self, x: &S) -> OdeForm<S> {
        OdeForm {
            p2: self.base.p2.clone(),
            p1: self.base.p1.clone(),
            p0: &self.base.p0 + &self.unknown.scale(x),
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        Self {
            base: self.base.scale(c),
            unknown: self.unknown.scale(c),
        }
    }

    pub fn to_c64(&self) -> OdeFamily<C64> {
        OdeFamily {
            base: self.base.to_c64(),
            unknown: self.unknown.to_c64(),
        }
    }
}

/// Termination condition at degree `n` as a polynomial in the unknown.
///
/// This is the determinant of the linear system the exponent-0 series at
/// `z = 0` must satisfy for `c_0 .. c_n`, built by the division-free form
/// of the recurrence: `P_j = c_j * f_0(1) ... f_0(j)` with `c_0 = 1`. Away
/// from resonances its roots are those of `c_{n+1}`; at a resonance (a
/// vanishing leading factor) the determinant stays meaningful where
/// `c_{n+1}` does not.
pub fn termination_polynomial<S: Scalar>(
    family: &OdeFamily<S>,
    n: usize,
) -> Result<Poly<S>, OracleError> {
    let base = localize(&family.base, &S::zero())?;
    let extra = family.unknown.clone();
    let l = base.lead_order as isize;
    // the unknown appears in band k through the coefficient of t^(l-2+k)
    if !idx(&extra, l - 2).vanishes() {
        return Err(OracleError::NotAffine);
    }
    let width = base
        .bandwidth
        .max(extra.degree().map_or(0, |d| (d as isize - l + 2).max(0) as usize));
    let zero = S::zero();
    let bands: Vec<Poly<S>> = (0..=width).map(|k| band_poly(&base, k, &zero)).collect();
    if !bands[0].eval(&zero).negligible(bands[0].max_abs().max(1.0)) {
        return Err(OracleError::NotIndicial(zero.render()));
    }
    let lead: Vec<S> = (0..=n + 1).map(|j| bands[0].eval(&S::from_usize(j))).collect();
    let mut p: Vec<Poly<S>> = vec![Poly::one()];
    for j in 1..=n + 1 {
        let mut acc = Poly::zero();
        for k in 1..=width.min(j) {
            let f = Poly::new(vec![
                bands[k].eval(&S::from_usize(j - k)),
                idx(&extra, l - 2 + k as isize),
            ]);
            // carry the leading factors between j-k+1 and j-1
            let carry = ((j - k + 1)..j).fold(S::one(), |c, i| c * lead[i].clone());
            acc = &acc - &(&f * &p[j - k]).scale(&carry);
        }
        p.push(acc);
    }
    Ok(p.pop().expect("n + 2 entries built"))
}

/// Relative termination tolerance.
pub const TERMINATION_TOL: f64 = 1e-8;

/// Values of the unknown for which the equation has a polynomial solution
/// of exact degree `n` analytic at `z = 0`. Each root of
/// [`termination_polynomial`] is checked twice: the degree-`n` kernel of
/// the operator must be nontrivial with a solution of full degree, and the
/// regenerated series must have `c_{n+1}` and `c_{n+2}` below `1e-8`
/// relative to the largest of `c_0 .. c_n`. Roots whose only polynomial
/// solutions have lower degree are dropped.
pub fn termination_solve<S: Scalar>(
    family: &OdeFamily<S>,
    n: usize,
) -> Result<Vec<C64>, OracleError> {
    let poly = termination_polynomial(family, n)?.to_c64();
    let roots = match poly.degree() {
        None => return Err(OracleError::Degenerate),
        Some(0) => Vec::new(),
        Some(_) => poly.roots()?,
    };
    let numeric = family.to_c64();
    let mut out = Vec::new();
    for root in roots {
        let ode = numeric.at(&root);
        let kernel = polynomial_kernel(&ode, n);
        if kernel.is_empty() {
            return Err(OracleError::Validation {
                root: root.render(),
                c1: f64::NAN,
                c2: f64::NAN,
            });
        }
        let full = kernel.iter().any(|p| {
            p.coeff(n).norm() > TERMINATION_TOL * p.max_abs()
        });
        if !full {
            continue;
        }
        match termination_defect(&ode, n) {
            Ok((c1, c2)) if c1 > TERMINATION_TOL || c2 > TERMINATION_TOL => {
                // a solution vanishing at the origin, z^r (...), is not the
                // c_0 = 1 series; the kernel check already covers it
                if kernel.iter().all(|p| p.coeff(0).norm() > TERMINATION_TOL * p.max_abs()) {
                    return Err(OracleError::Validation {
                        root: root.render(),
                        c1,
                        c2,
                    });
                }
            }
            Ok(_) | Err(OracleError::Resonance(_)) => {}
            Err(e) => return Err(e),
        }
        if !out.iter().any(|r: &C64| (r - root).norm() <= 1e-10 * (1.0 + root.norm())) {
            out.push(root);
        }
    }
    Ok(out)
}

/// Relative threshold on singular values for the kernel dimension.
pub const KERNEL_TOL: f64 = 1e-8;

/// Basis of the polynomials of degree `<= n` annihilated by the operator,
/// from the small singular values of its coefficient matrix.
pub fn polynomial_kernel(ode: &OdeForm<C64>, n: usize) -> Vec<Poly<C64>> {
    let columns: Vec<Poly<C64>> = (0..=n)
        .map(|j| {
            let y = Poly::monomial(C64::new(1.0, 0.0), j);
            &(&(&ode.p2 * &y.nth_derivative(2)) + &(&ode.p1 * &y.derivative())) + &(&ode.p0 * &y)
        })
        .collect();
    let rows = columns
        .iter()
        .map(|c| c.coeffs().len())
        .max()
        .unwrap_or(0)
        .max(n + 1);
    let m = nalgebra::DMatrix::from_fn(rows, n + 1, |i, j| columns[j].coeff(i));
    let svd = m.svd(false, true);
    let Some(v_t) = svd.v_t else {
        return Vec::new();
    };
    let smax = svd
        .singular_values
        .max()
        .max(ode.p2.max_abs())
        .max(ode.p1.max_abs())
        .max(f64::MIN_POSITIVE);
    svd.singular_values
        .iter()
        .enumerate()
        .filter(|(_, &s)| s <= KERNEL_TOL * smax)
        .map(|(i, _)| Poly::new(v_t.row(i).iter().map(|c| c.conj()).collect()))
        .collect()
}

/// `(|c_{n+1}|, |c_{n+2}|) / max_{j<=n} |c_j|` for the exponent-0 series at
/// `z = 0` with `c_0 = 1`. At a resonant index the right side must vanish;
/// the coefficient there is then free and is chosen to cancel `c_{n+1}`.
/// If the exponent-0 series is logarithmic at some `j <= n`, a polynomial
/// solution has to start at `z^j` instead, and the series with exponent `j`
/// is measured at its own index `n - j + 1`.
pub fn termination_defect(ode: &OdeForm<C64>, n: usize) -> Result<(f64, f64), OracleError> {
    let zero = C64::new(0.0, 0.0);
    match defect_at(ode, zero, n) {
        Err(OracleError::Resonance(j)) if (1..=n).contains(&j) => {
            defect_at(ode, C64::new(j as f64, 0.0), n - j)
        }
        other => other,
    }
}

fn defect_at(ode: &OdeForm<C64>, exponent: C64, n: usize) -> Result<(f64, f64), OracleError> {
    let rec = frobenius_recurrence(ode, &C64::new(0.0, 0.0), &exponent)?;
    let zero = C64::new(0.0, 0.0);
    let one = C64::new(1.0, 0.0);
    let base = series_with_free(&rec, zero, n + 3)?;
    let unit = series_with_free(&rec, one, n + 3)?;
    let dir: Vec<C64> = unit.iter().zip(&base).map(|(u, b)| u - b).collect();
    let t = if dir[n + 1].norm() > 0.0 {
        -base[n + 1] / dir[n + 1]
    } else {
        zero
    };
    let c: Vec<C64> = base.iter().zip(&dir).map(|(b, d)| b + d * t).collect();
    let head = c[..=n].iter().map(|x| x.norm()).fold(0.0, f64::max);
    Ok((c[n + 1].norm() / head, c[n + 2].norm() / head))
}

fn series_with_free(rec: &Recurrence<C64>, free: C64, count: usize) -> Result<Vec<C64>, OracleError> {
    let mut c = vec![C64::new(1.0, 0.0)];
    for j in 1..count {
        let mut rhs = C64::new(0.0, 0.0);
        let mut scale: f64 = 0.0;
        for k in 1..=rec.bandwidth().min(j) {
            let band = rec.band(k, j - k);
            scale = scale.max(band.norm());
            rhs -= band * c[j - k];
        }
        // the right side counts as zero next to a typical term
        scale *= c.iter().map(|x| x.norm()).fold(0.0, f64::max);
        let lead = rec.band(0, j);
        let lead_scale = rec.bands[0].max_abs().max(1.0) * (1.0 + j as f64).powi(2);
        if lead.norm() <= 1e-13 * lead_scale {
            if rhs.norm() <= 1e-9 * scale.max(f64::MIN_POSITIVE) {
                c.push(free);
                continue;
            }
            return Err(OracleError::Resonance(j));
        }
        c.push(rhs / lead);
    }
    Ok(c)
}

/// Deterministic sample contour: a circle of radius 0.45 about 0.5, each
/// point pulled toward the centre until it is at least 0.1 from every
/// singular point.
pub fn sample_points(singular: &[C64], samples: usize) -> Vec<C64> {
    let centre = C64::new(0.5, 0.0);
    (0..samples)
        .filter_map(|i| {
            let theta = std::f64::consts::TAU * (i as f64 + 0.5) / samples as f64;
            let dir = C64::from_polar(1.0, theta);
            [0.45, 0.38, 0.3, 0.22, 0.15]
                .iter()
                .map(|&r| centre + dir * r)
                .find(|z| singular.iter().all(|s| (z - s).norm() >= 0.1))
        })
        .collect()
}

/// Largest pointwise value of `|P2 psi'' + P1 psi' + P0 psi|` divided by the
/// largest of the three terms, for `psi = phi * p`.
pub fn ode_residual(
    phi: &PhiFactor,
    p: &Poly<C64>,
    ode: &OdeForm<C64>,
    samples: usize,
) -> Result<f64, OracleError> {
    if samples < 10 {
        return Err(OracleError::TooFewSamples(samples));
    }
    if p.is_zero() {
        return Err(OracleError::ZeroState);
    }
    let mut singular = ode.p2.roots()?;
    singular.extend(phi.power_factors.iter().map(|(z, _)| *z));
    let points = sample_points(&singular, samples);
    if points.is_empty() {
        return Err(OracleError::NoSamples);
    }
    let (dp, ddp) = (p.derivative(), p.nth_derivative(2));
    let mut worst: f64 = 0.0;
    for z in points {
        let l = phi.log_derivative(z);
        let lp = phi.log_derivative_prime(z);
        let (pv, dv, ddv) = (p.eval(&z), dp.eval(&z), ddp.eval(&z));
        // psi'/phi and psi''/phi
        let d1 = l * pv + dv;
        let d2 = (lp + l * l) * pv + 2.0 * l * dv + ddv;
        let terms = [ode.p2.eval(&z) * d2, ode.p1.eval(&z) * d1, ode.p0.eval(&z) * pv];
        let size = terms.iter().map(|t| t.norm()).fold(0.0, f64::max);
        if size == 0.0 {
            continue;
        }
        worst = worst.max((terms[0] + terms[1] + terms[2]).norm() / size);
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{c64, ratio, ExactComplex};

    fn fp(c: &[f64]) -> Poly<C64> {
        Poly::new(c.iter().map(|&x| c64(x, 0.0)).collect())
    }

    #[test]
    fn exponential_series_at_an_ordinary_point() {
        // w'' - w = 0 with w(0) = w'(0) = 1
        let ode = OdeForm::new(fp(&[1.0]), Poly::zero(), fp(&[-1.0])).unwrap();
        let rec = frobenius_recurrence(&ode, &c64(0.0, 0.0), &c64(0.0, 0.0)).unwrap();
        assert_eq!(rec.bandwidth(), 2);
        assert_eq!(rec.free_seeds(), 2);
        // c_{j+2} (j+2)(j+1) = c_j
        assert_eq!(rec.band(0, 5), c64(20.0, 0.0));
        assert_eq!(rec.band(2, 3), c64(-1.0, 0.0));
        let c = series_coeffs_seeded(&rec, &[c64(1.0, 0.0), c64(1.0, 0.0)], 12).unwrap();
        let mut fact = 1.0;
        for (j, cj) in c.iter().enumerate() {
            if j > 0 {
                fact *= j as f64;
            }
            assert!((cj.re - 1.0 / fact).abs() < 1e-15);
        }
        assert!(series_coeffs_seeded(&rec, &[c64(1.0, 0.0)], 4).is_err());
        // single seed: c_1 left at zero, giving cosh
        let c = series_coeffs(&rec, c64(1.0, 0.0), 5).unwrap();
        assert_eq!(c[1], c64(0.0, 0.0));
        assert!((c[4].re - 1.0 / 24.0).abs() < 1e-15);
    }

    #[test]
    fn kummer_series_is_exponential() {
        // z w'' + (1 - z) w' - w = 0 has w = e^z
        let ode = OdeForm::new(
            Poly::<ExactComplex>::z(),
            Poly::new(vec![ratio(1, 1), ratio(-1, 1)]),
            Poly::constant(ratio(-1, 1)),
        )
        .unwrap();
        let rec = frobenius_recurrence(&ode, &ratio(0, 1), &ratio(0, 1)).unwrap();
        assert_eq!(rec.bandwidth(), 1);
        let c = series_coeffs(&rec, ratio(1, 1), 8).unwrap();
        assert_eq!(c[7], ratio(1, 5040));
        assert!(frobenius_recurrence(&ode, &ratio(0, 1), &ratio(1, 2)).is_err());
    }

    #[test]
    fn irregular_points_are_rejected() {
        // z^2 w'' + w' = 0 at 0
        let ode = OdeForm::new(fp(&[0.0, 0.0, 1.0]), fp(&[1.0]), Poly::zero()).unwrap();
        assert_eq!(
            frobenius_recurrence(&ode, &c64(0.0, 0.0), &c64(0.0, 0.0)),
            Err(OracleError::Irregular)
        );
        assert_eq!(
            OdeForm::new(Poly::<C64>::zero(), fp(&[1.0]), Poly::zero()),
            Err(OracleError::ZeroLeading)
        );
    }

    #[test]
    fn laguerre_termination() {
        // z w'' + (1 - z) w' + x w = 0 terminates at degree n iff x = n
        let family = OdeFamily {
            base: OdeForm::new(
                Poly::<ExactComplex>::z(),
                Poly::new(vec![ratio(1, 1), ratio(-1, 1)]),
                Poly::zero(),
            )
            .unwrap(),
            unknown: Poly::one(),
        };
        for n in 0..5 {
            let roots = termination_solve(&family, n).unwrap();
            assert_eq!(roots.len(), 1);
            assert!((roots[0] - c64(n as f64, 0.0)).norm() < 1e-10);
        }
        let scaled = termination_solve(&family.scale(&ratio(-7, 3)), 3).unwrap();
        assert!((scaled[0] - c64(3.0, 0.0)).norm() < 1e-10);
    }

    #[test]
    fn residual_of_a_known_solution_and_rejections() {
        // Laguerre L_2 up to scale: z^2 - 4z + 2 solves z w'' + (1-z) w' + 2w = 0
        let ode = OdeForm::new(fp(&[0.0, 1.0]), fp(&[1.0, -1.0]), fp(&[2.0])).unwrap();
        let p = fp(&[2.0, -4.0, 1.0]);
        let r = ode_residual(&PhiFactor::trivial(), &p, &ode, 50).unwrap();
        assert!(r < 1e-14, "{r}");
        let bad = OdeForm::new(fp(&[0.0, 1.0]), fp(&[1.0, -1.0]), fp(&[2.001])).unwrap();
        assert!(ode_residual(&PhiFactor::trivial(), &p, &bad, 50).unwrap() > 1e-4);
        assert_eq!(
            ode_residual(&PhiFactor::trivial(), &Poly::zero(), &ode, 50),
            Err(OracleError::ZeroState)
        );
        assert_eq!(
            ode_residual(&PhiFactor::trivial(), &p, &ode, 5),
            Err(OracleError::TooFewSamples(5))
        );
    }

    #[test]
    fn samples_keep_their_distance() {
        let sing = [c64(0.0, 0.0), c64(1.0, 0.0)];
        let pts = sample_points(&sing, 50);
        assert_eq!(pts.len(), 50);
        for z in pts {
            assert!(sing.iter().all(|s| (z - s).norm() >= 0.1));
        }
    }
}
