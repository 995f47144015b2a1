//! Numeric search for the `g` polynomials that make the radicand a perfect
//! square.
//!
//! Extended mode writes `g = g1 z + g0` and asks the square-root remainder of
//! `D = K + g sigma` (with `K = ((sigma' - tau~)/2)^2 - sigma~`) to vanish.
//! The remainder is a rational function of `(g1, g0)`; scaling the root by
//! `sqrt(d_top)` keeps it free of square roots, so no branch bookkeeping is
//! needed while Newton runs. Classic mode has a single constant `k` and the
//! condition is the discriminant of a quadratic, solved directly.

use super::dual::Dual;
use super::{reduce, Mode, NuError, NuEquation, PiBranch, Sign};
use crate::poly::{Poly, Scalar, C64};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchOptions {
    /// Number of Newton starting points (at least 8).
    pub grid: usize,
    pub max_iter: usize,
    /// Solutions closer than `dedup_tol * (1 + |g|)` are merged.
    pub dedup_tol: f64,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self {
            grid: 32,
            max_iter: 100,
            dedup_tol: 1e-8,
        }
    }
}

/// Every `g` whose radicand is a perfect square, sorted by coefficients.
pub fn admissible_g<S: Scalar>(
    eq: &NuEquation<S>,
    opts: &SearchOptions,
) -> Result<Vec<Poly<C64>>, NuError> {
    let eq = eq.to_c64();
    let a = eq.half_gap();
    let k = &(&a * &a) - eq.sigma_tilde();
    let mut candidates = match eq.mode() {
        Mode::Classic => classic_candidates(&k, eq.sigma())?,
        Mode::Extended => {
            let mut c = interpolation_candidates(&k, eq.sigma(), opts)?;
            c.extend(newton_candidates(&k, eq.sigma(), opts)?);
            c
        }
    };
    // D vanishing identically sits where the Newton system is singular, so
    // look for it directly: K = -g sigma.
    let (quot, rem) = k.divrem(eq.sigma())?;
    if rem.is_negligible(k.max_abs().max(1.0), super::BRANCH_TOL)
        && quot.degree_or_zero() <= eq.mode().g_degree()
    {
        candidates.push(-quot);
    }
    let mut found: Vec<Poly<C64>> = Vec::new();
    for g in candidates {
        if PiBranch::from_g(&eq, &g, Sign::Plus).is_err() {
            continue;
        }
        if !found.iter().any(|h| same_g(h, &g, opts.dedup_tol)) {
            found.push(g);
        }
    }
    found.sort_by(|x, y| {
        let key = |p: &Poly<C64>| [p.coeff(1).re, p.coeff(1).im, p.coeff(0).re, p.coeff(0).im];
        key(x)
            .iter()
            .zip(key(y).iter())
            .map(|(u, v)| u.total_cmp(v))
            .find(|o| o.is_ne())
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    Ok(found)
}

/// All admissible branches: two per `g` (one when the radicand vanishes
/// identically). Branches whose `sigma-bar` fails the divisibility check are
/// dropped. An empty result means no admissible `g` exists.
pub fn enumerate_branches<S: Scalar>(
    eq: &NuEquation<S>,
    opts: &SearchOptions,
) -> Result<Vec<PiBranch<C64>>, NuError> {
    let gs = admissible_g(eq, opts)?;
    let eq = eq.to_c64();
    let mut out = Vec::new();
    for g in gs {
        for sign in [Sign::Plus, Sign::Minus] {
            let b = PiBranch::from_g(&eq, &g, sign)?;
            if b.s.is_zero() && sign == Sign::Minus {
                continue;
            }
            if reduce(&eq, &b).is_ok() {
                out.push(b);
            }
        }
    }
    Ok(out)
}

fn same_g(a: &Poly<C64>, b: &Poly<C64>, tol: f64) -> bool {
    (0..2).all(|i| {
        let (x, y) = (a.coeff(i), b.coeff(i));
        (x - y).norm() <= tol * (1.0 + x.norm().max(y.norm()))
    })
}

fn classic_candidates(k: &Poly<C64>, sigma: &Poly<C64>) -> Result<Vec<Poly<C64>>, NuError> {
    let top = k.degree_or_zero().max(sigma.degree_or_zero());
    // d_i(k) as linear polynomials in the unknown constant
    let d = |i: usize| Poly::new(vec![k.coeff(i), sigma.coeff(i)]);
    let condition = match top {
        2 => &(&d(1) * &d(1)) - &(&d(2) * &d(0)).scale(&C64::new(4.0, 0.0)),
        1 => d(1),
        _ => return Err(NuError::Underdetermined),
    };
    match condition.degree() {
        None => Err(NuError::Underdetermined),
        Some(0) => Ok(Vec::new()),
        Some(_) => Ok(condition
            .roots()?
            .into_iter()
            .map(Poly::constant)
            .collect()),
    }
}

/// Seeds from the roots of `sigma`: if `D = s^2` then `s(z_i)^2 = K(z_i)`
/// at every root `z_i`. The top coefficients of `s` that `g sigma` cannot
/// reach come from the square root of the top of `K`; the rest interpolate
/// `+-sqrt(K(z_i))`. Each sign pattern gives `g = (s^2 - K) / sigma`, which
/// Newton then polishes. Repeated roots of `sigma` give no seeds.
fn interpolation_candidates(
    k: &Poly<C64>,
    sigma: &Poly<C64>,
    opts: &SearchOptions,
) -> Result<Vec<Poly<C64>>, NuError> {
    let ds = sigma.degree_or_zero();
    let top = k.degree_or_zero().max(ds + 1);
    if ds == 0 || top % 2 == 1 {
        return Ok(Vec::new());
    }
    let m = top / 2;
    let zs = sigma.roots()?;
    let spread = zs.iter().map(|z| z.norm()).fold(1.0, f64::max);
    for (i, a) in zs.iter().enumerate() {
        if zs[i + 1..].iter().any(|b| (a - b).norm() <= 1e-8 * spread) {
            return Ok(Vec::new());
        }
    }
    let free = ds.min(m + 1);
    // s_m .. s_free from the coefficients of K above degree ds + 1
    let mut s = vec![C64::new(0.0, 0.0); m + 1];
    if free <= m {
        s[m] = k.coeff(2 * m).sqrt();
        if s[m].norm() == 0.0 {
            return Ok(Vec::new());
        }
        for j in (free..m).rev() {
            let mut acc = k.coeff(m + j);
            for i in (j + 1)..m {
                let l = m + j - i;
                if l > j && l <= m {
                    acc -= s[i] * s[l];
                }
            }
            s[j] = acc / (s[m] * 2.0);
        }
    }
    let known = Poly::new(s);
    let points: Vec<C64> = zs.iter().take(free).copied().collect();
    let targets: Vec<C64> = points.iter().map(|z| k.eval(z).sqrt()).collect();
    let vander = nalgebra::DMatrix::from_fn(free, free, |i, j| points[i].powu(j as u32));
    let lu = vander.lu();
    // with no fixed top, s and -s give the same g: pin the first sign
    let patterns: Vec<u32> = if free > m {
        (0..1u32 << free).filter(|b| b & 1 == 0).collect()
    } else {
        (0..1u32 << free).collect()
    };
    let sys = SquareSystem::new(k, sigma).ok();
    let mut out = Vec::new();
    for bits in patterns {
        let rhs = nalgebra::DVector::from_fn(free, |i, _| {
            let t = if bits >> i & 1 == 1 { -targets[i] } else { targets[i] };
            t - known.eval(&points[i])
        });
        let Some(low) = lu.solve(&rhs) else {
            continue;
        };
        let mut coeffs = known.coeffs().to_vec();
        coeffs.resize(m + 1, C64::new(0.0, 0.0));
        for (j, c) in low.iter().enumerate() {
            coeffs[j] += c;
        }
        let s = Poly::new(coeffs);
        let (g, _) = (&(&s * &s) - k).divrem(sigma)?;
        if g.degree_or_zero() > 1 {
            continue;
        }
        let polished = sys
            .as_ref()
            .and_then(|sys| match newton(sys, [g.coeff(1), g.coeff(0)], opts.max_iter) {
                Outcome::Converged(h) => Some(Poly::new(vec![h[1], h[0]])),
                _ => None,
            })
            // polishing must not jump to a neighbouring solution
            .filter(|h| same_g(h, &g, 1e-6));
        out.push(polished.unwrap_or(g));
    }
    Ok(out)
}

/// Equations in `(g1, g0)` whose common zeros are the admissible `g`.
struct SquareSystem {
    k: Vec<C64>,
    sigma: Vec<C64>,
    top: usize,
}

impl SquareSystem {
    fn new(k: &Poly<C64>, sigma: &Poly<C64>) -> Result<Self, NuError> {
        let top = k.degree_or_zero().max(sigma.degree_or_zero() + 1);
        if top != 3 && top != 4 {
            return Err(NuError::Underdetermined);
        }
        Ok(Self {
            k: (0..=top).map(|i| k.coeff(i)).collect(),
            sigma: (0..=top).map(|i| sigma.coeff(i)).collect(),
            top,
        })
    }

    fn coeffs(&self, g: [C64; 2]) -> Vec<Dual> {
        let g1 = Dual::variable(g[0], 0);
        let g0 = Dual::variable(g[1], 1);
        (0..=self.top)
            .map(|i| {
                let shifted = if i == 0 { C64::new(0.0, 0.0) } else { self.sigma[i - 1] };
                Dual::constant(self.k[i]) + g1 * Dual::constant(shifted)
                    + g0 * Dual::constant(self.sigma[i])
            })
            .collect()
    }

    fn eval(&self, g: [C64; 2]) -> ([Dual; 2], f64) {
        let d = self.coeffs(g);
        let scale = d.iter().map(|x| x.v.norm()).fold(0.0, f64::max);
        let eqs = if self.top == 4 {
            // u_j = s_j * s_2 with s^2 matching the top three coefficients
            let lead = d[4];
            let u1 = d[3].half();
            let u0 = (d[2] - u1 * u1 / lead).half();
            let r1 = d[1] - (u1 * u0 + u0 * u1) / lead;
            let r0 = d[0] - u0 * u0 / lead;
            [r1, r0]
        } else {
            let disc = d[1] * d[1] - Dual::constant(C64::new(4.0, 0.0)) * d[2] * d[0];
            [d[3], disc]
        };
        (eqs, scale)
    }
}

enum Outcome {
    Converged([C64; 2]),
    Singular,
    Failed,
}

fn norm2(f: &[Dual; 2]) -> f64 {
    (f[0].v.norm_sqr() + f[1].v.norm_sqr()).sqrt()
}

fn newton(sys: &SquareSystem, start: [C64; 2], max_iter: usize) -> Outcome {
    let mut g = start;
    let (mut f, _) = sys.eval(g);
    let mut fnorm = norm2(&f);
    for _ in 0..max_iter {
        if !fnorm.is_finite() {
            return Outcome::Failed;
        }
        let (j00, j01, j10, j11) = (f[0].d[0], f[0].d[1], f[1].d[0], f[1].d[1]);
        let det = j00 * j11 - j01 * j10;
        let jscale = (j00.norm() + j01.norm()) * (j10.norm() + j11.norm());
        if !(det.norm() > 1e-14 * jscale) || !det.is_finite() {
            return Outcome::Singular;
        }
        let step = [
            (j11 * f[0].v - j01 * f[1].v) / det,
            (j00 * f[1].v - j10 * f[0].v) / det,
        ];
        let mut t = 1.0;
        let mut accepted = false;
        for _ in 0..30 {
            let trial = [g[0] - step[0] * t, g[1] - step[1] * t];
            let (ft, _) = sys.eval(trial);
            let n = norm2(&ft);
            if n.is_finite() && n < fnorm {
                g = trial;
                f = ft;
                fnorm = n;
                accepted = true;
                break;
            }
            t *= 0.5;
        }
        let step_size = (step[0].norm() + step[1].norm()) * t;
        let gsize = 1.0 + g[0].norm() + g[1].norm();
        if !accepted || step_size <= 1e-15 * gsize {
            break;
        }
    }
    let (_, scale) = sys.eval(g);
    if fnorm <= 1e-9 * scale.max(1e-300) {
        Outcome::Converged(g)
    } else {
        Outcome::Failed
    }
}

/// Rank-1 lattice in four real dimensions (Korobov generator), one point per
/// start, shifted off the origin so no start sits on a symmetric saddle.
fn lattice(count: usize) -> impl Iterator<Item = [f64; 4]> {
    const GENERATOR: u64 = 17;
    let n = count as u64;
    let gen = [1, GENERATOR, GENERATOR.pow(2) % n.max(1), GENERATOR.pow(3) % n.max(1)];
    (0..n).map(move |i| {
        let mut p = [0.0; 4];
        for (k, g) in gen.iter().enumerate() {
            let frac = ((i * g) % n) as f64 / n as f64 + 0.5 / n as f64;
            p[k] = 2.0 * frac - 1.0;
        }
        p
    })
}

fn newton_candidates(
    k: &Poly<C64>,
    sigma: &Poly<C64>,
    opts: &SearchOptions,
) -> Result<Vec<Poly<C64>>, NuError> {
    let sys = SquareSystem::new(k, sigma)?;
    let radius = 2.0 * (k.max_abs() / sigma.max_abs()).max(1.0);
    let offset = [C64::new(0.13, 0.07), C64::new(-0.05, 0.11)];
    let mut out = Vec::new();
    let mut singular = 0;
    let grid = opts.grid.max(8);
    for p in lattice(grid) {
        let start = [
            C64::new(p[0], p[1]) * radius + offset[0],
            C64::new(p[2], p[3]) * radius + offset[1],
        ];
        match newton(&sys, start, opts.max_iter) {
            Outcome::Converged(g) => out.push(Poly::new(vec![g[1], g[0]])),
            Outcome::Singular => singular += 1,
            Outcome::Failed => {}
        }
    }
    if singular == grid {
        return Err(NuError::SingularJacobian);
    }
    Ok(out)
}
