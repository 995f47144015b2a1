//! Two electrons on a sphere repelling through the Coulomb potential.
//!
//! In `z = u / 2R` the relative wave function obeys a Heun equation with
//! `(gamma, delta, epsilon, ab, q, a) = (1/g, (d - 1/g)/2, (d - 1/g)/2,
//! -4 R^2 E, -2R, -1)` for the problem parameters `g`, `d`. Polynomial
//! states of degree `n` are class I: `ab = -n(n + d - 1)` fixes `R^2 E`
//! and the termination condition fixes `R`.

use super::AppError;
use crate::heun::{heun_accessory, heun_eigenstate, HeunClass, HeunParams};
use crate::poly::C64;
use crate::state::Eigenstate;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ElectronsSphereInput {
    pub n: usize,
    pub gamma_param: f64,
    pub delta_param: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ElectronsState {
    pub radius: f64,
    pub energy: f64,
    pub q: C64,
    /// Zeros `z_i` of the polynomial.
    pub roots: Vec<C64>,
    pub bethe: f64,
    pub state: Eigenstate,
}

fn check(input: &ElectronsSphereInput) -> Result<(), AppError> {
    if input.n == 0 {
        return Err(AppError::Input("n must be positive".into()));
    }
    if input.gamma_param == 0.0 || !input.gamma_param.is_finite() || !input.delta_param.is_finite() {
        return Err(AppError::Input("gamma must be finite and nonzero".into()));
    }
    Ok(())
}

/// Heun parameters of the degree-`n` class I problem, `q` left at zero.
pub fn electrons_heun_params(input: &ElectronsSphereInput) -> Result<HeunParams<C64>, AppError> {
    check(input)?;
    let inv = 1.0 / input.gamma_param;
    let side = C64::new(0.5 * (input.delta_param - inv), 0.0);
    Ok(HeunParams::polynomial_case(
        HeunClass::I,
        input.n,
        C64::new(inv, 0.0),
        side,
        side,
        C64::new(-1.0, 0.0),
    )?)
}

/// Every state with a real positive radius, ordered by radius.
pub fn electrons_sphere_states(input: &ElectronsSphereInput) -> Result<Vec<ElectronsState>, AppError> {
    let p = electrons_heun_params(input)?;
    let n = input.n as f64;
    let mut out = Vec::new();
    for q in heun_accessory(&p, HeunClass::I, input.n)? {
        // q = -2R with R real and positive
        if q.im.abs() > 1e-9 * (1.0 + q.norm()) || q.re >= -1e-12 {
            continue;
        }
        let radius = -q.re / 2.0;
        let q = C64::new(q.re, 0.0);
        let state = heun_eigenstate(&p, HeunClass::I, input.n, q)?;
        let roots = state.roots();
        let bethe = bethe_residual(&roots, input.gamma_param, input.delta_param)?;
        out.push(ElectronsState {
            radius,
            energy: n * (n + input.delta_param - 1.0) / (4.0 * radius * radius),
            q,
            roots,
            bethe,
            state,
        });
    }
    out.sort_by(|a, b| a.radius.total_cmp(&b.radius));
    Ok(out)
}

/// The state with the largest positive radius (the unique one for `n <= 2`).
pub fn electrons_sphere_state(input: &ElectronsSphereInput) -> Result<ElectronsState, AppError> {
    electrons_sphere_states(input)?
        .pop()
        .ok_or_else(|| AppError::NoState(format!("n = {} has no positive radius", input.n)))
}

/// Closed forms `(R, E)` known for the two lowest degrees.
pub fn electrons_closed_form(n: usize, gamma: f64, delta: f64) -> Option<(f64, f64)> {
    match n {
        1 => Some((0.5 * (delta / gamma).sqrt(), gamma)),
        2 => Some((
            0.5 * (2.0 * (delta + 2.0) + (4.0 * delta + 6.0) / gamma).sqrt(),
            gamma * (delta + 1.0) / (gamma * (delta + 2.0) + 2.0 * delta + 3.0),
        )),
        _ => None,
    }
}

/// `max_i |sum_{j != i} 2/(z_i - z_j) + (1/g)/z_i + s/(z_i + 1) + s/(z_i - 1)|`
/// with `s = (d - 1/g)/2`. A root sitting on one of `0, 1, -1` (possible
/// when the exponent there is zero) makes that form meaningless, so for
/// such a root the equation multiplied through by `z(z-1)(z+1)` is used.
pub fn bethe_residual(roots: &[C64], gamma: f64, delta: f64) -> Result<f64, AppError> {
    for (i, a) in roots.iter().enumerate() {
        for (j, b) in roots.iter().enumerate().skip(i + 1) {
            if (a - b).norm() <= 1e-12 * (1.0 + a.norm()) {
                return Err(AppError::Coincident(i, j));
            }
        }
    }
    let inv = 1.0 / gamma;
    let side = 0.5 * (delta - inv);
    let worst = roots
        .iter()
        .enumerate()
        .map(|(i, &z)| {
            let pair: C64 = roots
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &zj)| 2.0 / (z - zj))
                .sum();
            let sigma = z * (z * z - 1.0);
            if sigma.norm() > 1e-6 {
                (pair + inv / z + side / (z + 1.0) + side / (z - 1.0)).norm()
            } else {
                let tau = inv * (z * z - 1.0) + side * z * (z - 1.0) + side * z * (z + 1.0);
                (sigma * pair + tau).norm()
            }
        })
        .fold(0.0, f64::max);
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_two_degrees_match_the_closed_forms() {
        let s = electrons_sphere_state(&ElectronsSphereInput { n: 1, gamma_param: 1.0, delta_param: 2.0 }).unwrap();
        assert!((s.radius - 0.5f64.sqrt()).abs() < 1e-12);
        assert!((s.energy - 1.0).abs() < 1e-12);
        assert!(s.bethe < 1e-10);
        let s = electrons_sphere_state(&ElectronsSphereInput { n: 2, gamma_param: 1.0, delta_param: 1.0 }).unwrap();
        assert!((s.radius - 2.0).abs() < 1e-12, "{}", s.radius);
        assert!((s.energy - 0.25).abs() < 1e-12);
        assert!(s.bethe < 1e-10, "{:?} {}", s.roots, s.bethe);
        // one root lands on z = -1 here
        assert_eq!(s.roots.len(), 2);
    }

    #[test]
    fn symmetric_pair_balances() {
        // with 1/g removed, +-t give equal and opposite side terms
        let t = C64::new(0.3, 0.0);
        let side = |z: C64| 1.0 / (z + 1.0) + 1.0 / (z - 1.0);
        assert!((side(t) + side(-t)).norm() < 1e-15);
        assert!(bethe_residual(&[t, t], 1.0, 1.0).is_err());
    }

    #[test]
    fn bad_inputs() {
        assert!(electrons_sphere_state(&ElectronsSphereInput { n: 0, gamma_param: 1.0, delta_param: 1.0 }).is_err());
        assert!(electrons_sphere_state(&ElectronsSphereInput { n: 1, gamma_param: 0.0, delta_param: 1.0 }).is_err());
    }
}
