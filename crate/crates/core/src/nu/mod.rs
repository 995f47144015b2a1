//! Nikiforov–Uvarov reduction, classic and extended.
//!
//! An equation `psi'' + (tau~/sigma) psi' + (sigma~/sigma^2) psi = 0` is
//! reduced through `psi = phi * y` with `phi'/phi = pi/sigma` to
//!
//! ```text
//! sigma y'' + tau y'  + h y = 0,      tau = tau~ + 2 pi,   h = g + pi'
//! ```
//!
//! where `pi = (sigma' - tau~)/2 ± sqrt(((sigma' - tau~)/2)^2 - sigma~ + g sigma)`
//! and `g` is chosen so the radicand is a perfect square. Classic mode bounds
//! the degrees of `(tau~, sigma, sigma~)` by `(1, 2, 2)` and takes `g` constant
//! (the usual `k`); extended mode raises the bounds to `(2, 3, 4)` with `g`
//! linear, which covers equations with four singular points.

mod dual;
mod search;

use nalgebra::DMatrix;

use crate::poly::{Backend, Poly, PolyError, Scalar, C64};

pub use search::{admissible_g, enumerate_branches, SearchOptions};

/// Relative tolerance for floating perfect-square and divisibility checks.
pub const BRANCH_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Classic,
    Extended,
}

impl Mode {
    /// Degree bounds for `(tau~, sigma, sigma~)`.
    pub fn bounds(self) -> (usize, usize, usize) {
        match self {
            Mode::Classic => (1, 2, 2),
            Mode::Extended => (2, 3, 4),
        }
    }

    pub fn g_degree(self) -> usize {
        match self {
            Mode::Classic => 0,
            Mode::Extended => 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum NuError {
    #[error("{what} has degree {got}; {mode:?} mode allows at most {max}")]
    DegreeBound {
        what: &'static str,
        got: usize,
        max: usize,
        mode: Mode,
    },
    #[error("sigma must not vanish identically")]
    ZeroSigma,
    #[error("the Newton Jacobian was singular from every starting point")]
    SingularJacobian,
    #[error("the perfect-square problem is underdetermined for this equation")]
    Underdetermined,
    #[error("radicand is not a perfect square (relative remainder {0:.3e})")]
    NotSquare(f64),
    #[error("sigma-bar is not divisible by sigma (relative remainder {0:.3e})")]
    NotDivisible(f64),
    #[error("pi/sigma partial fractions need simple roots of sigma")]
    RepeatedRoots,
    #[error("coefficient null space has dimension {0}, expected 1")]
    NullSpace(usize),
    #[error("singular value decomposition failed")]
    Svd,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// The triple `(tau~, sigma, sigma~)` with its degree regime.
#[derive(Debug, Clone, PartialEq)]
pub struct NuEquation<S: Scalar> {
    tau_tilde: Poly<S>,
    sigma: Poly<S>,
    sigma_tilde: Poly<S>,
    mode: Mode,
}

impl<S: Scalar> NuEquation<S> {
    pub fn new(
        tau_tilde: Poly<S>,
        sigma: Poly<S>,
        sigma_tilde: Poly<S>,
        mode: Mode,
    ) -> Result<Self, NuError> {
        if sigma.is_zero() {
            return Err(NuError::ZeroSigma);
        }
        let (tb, sb, stb) = mode.bounds();
        for (what, p, max) in [
            ("tau~", &tau_tilde, tb),
            ("sigma", &sigma, sb),
            ("sigma~", &sigma_tilde, stb),
        ] {
            let got = p.degree_or_zero();
            if got > max {
                return Err(NuError::DegreeBound {
                    what,
                    got,
                    max,
                    mode,
                });
            }
        }
        Ok(Self {
            tau_tilde,
            sigma,
            sigma_tilde,
            mode,
        })
    }

    pub fn tau_tilde(&self) -> &Poly<S> {
        &self.tau_tilde
    }
    pub fn sigma(&self) -> &Poly<S> {
        &self.sigma
    }
    pub fn sigma_tilde(&self) -> &Poly<S> {
        &self.sigma_tilde
    }
    pub fn mode(&self) -> Mode {
        self.mode
    }

    /// `(sigma' - tau~) / 2`
    pub fn half_gap(&self) -> Poly<S> {
        (&self.sigma.derivative() - &self.tau_tilde).scale(&S::from_ratio(1, 2))
    }

    /// `pi^2 + pi (tau~ - sigma') + sigma~ + pi' sigma`, which must equal
    /// `h * sigma` on an admissible branch.
    pub fn sigma_bar(&self, pi: &Poly<S>) -> Poly<S> {
        let gap = &self.tau_tilde - &self.sigma.derivative();
        &(&(&(pi * pi) + &(pi * &gap)) + &self.sigma_tilde) + &(&pi.derivative() * &self.sigma)
    }

    pub fn to_c64(&self) -> NuEquation<C64> {
        NuEquation {
            tau_tilde: self.tau_tilde.to_c64(),
            sigma: self.sigma.to_c64(),
            sigma_tilde: self.sigma_tilde.to_c64(),
            mode: self.mode,
        }
    }

    fn scale(&self) -> f64 {
        [&self.tau_tilde, &self.sigma, &self.sigma_tilde]
            .iter()
            .map(|p| p.max_abs())
            .fold(1.0, f64::max)
    }
}

/// `((sigma' - tau~)/2)^2 - sigma~ + g sigma`
pub fn radicand<S: Scalar>(eq: &NuEquation<S>, g: &Poly<S>) -> Result<Poly<S>, NuError> {
    let max = eq.mode.g_degree();
    if g.degree_or_zero() > max {
        return Err(NuError::DegreeBound {
            what: "g",
            got: g.degree_or_zero(),
            max,
            mode: eq.mode,
        });
    }
    let a = eq.half_gap();
    Ok(&(&(&a * &a) - &eq.sigma_tilde) + &(g * &eq.sigma))
}

/// `(s, d - s^2)` with the leading coefficient of `s` the principal root.
/// In floating mode both extraction directions are tried and the smaller
/// remainder wins.
fn square_split<S: Scalar>(d: &Poly<S>) -> Result<(Poly<S>, Poly<S>), NuError> {
    let (s, r) = d.sqrt_head()?;
    if S::BACKEND == Backend::Exact || r.is_zero() {
        return Ok((s, r));
    }
    let Some(t) = d.sqrt_tail() else {
        return Ok((s, r));
    };
    let rt = d - &(&t * &t);
    if rt.max_abs() >= r.max_abs() {
        return Ok((s, r));
    }
    let m = s.degree_or_zero();
    let head = s.coeff(m);
    let t = if (t.coeff(m) - head.clone()).magnitude() <= (t.coeff(m) + head).magnitude() {
        t
    } else {
        -t
    };
    Ok((t, rt))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// One admissible solution of the perfect-square condition.
#[derive(Debug, Clone, PartialEq)]
pub struct PiBranch<S: Scalar> {
    pub g: Poly<S>,
    pub sign: Sign,
    /// Square root of the radicand (principal leading coefficient).
    pub s: Poly<S>,
    pub pi: Poly<S>,
    pub tau: Poly<S>,
    /// `g + pi'`; in classic mode this constant is the eigenvalue `lambda`.
    pub h: Poly<S>,
}

impl<S: Scalar> PiBranch<S> {
    /// Build the branch `pi = (sigma' - tau~)/2 ± s` for a `g` whose radicand
    /// is a perfect square. An identically vanishing radicand yields the
    /// single branch `pi = (sigma' - tau~)/2`, reported with [`Sign::Plus`].
    pub fn from_g(eq: &NuEquation<S>, g: &Poly<S>, sign: Sign) -> Result<Self, NuError> {
        let d = radicand(eq, g)?;
        let (s, r) = square_split(&d)?;
        let scale = d.max_abs().max(eq.scale());
        if !r.is_negligible(scale, BRANCH_TOL) {
            return Err(NuError::NotSquare(r.max_abs() / scale));
        }
        let s = if d.is_zero() { Poly::zero() } else { s };
        let sign = if s.is_zero() { Sign::Plus } else { sign };
        let a = eq.half_gap();
        let pi = match sign {
            Sign::Plus => &a + &s,
            Sign::Minus => &a - &s,
        };
        Ok(Self::assemble(eq, g.clone(), sign, s, pi))
    }

    /// Recover the branch that produces a given `pi`, recovering `g` by exact
    /// division of `sigma~ + pi^2 + pi (tau~ - sigma')` by `sigma`.
    pub fn from_pi(eq: &NuEquation<S>, pi: &Poly<S>) -> Result<Self, NuError> {
        let gap = &eq.tau_tilde - &eq.sigma.derivative();
        let numer = &(&eq.sigma_tilde + &(pi * pi)) + &(pi * &gap);
        let (g, rem) = numer.divrem(&eq.sigma)?;
        let scale = numer.max_abs().max(eq.scale());
        if !rem.is_negligible(scale, BRANCH_TOL) {
            return Err(NuError::NotSquare(rem.max_abs() / scale));
        }
        let d = radicand(eq, &g)?;
        let s = pi - &eq.half_gap();
        let sign = if d.is_zero() || s.is_zero() {
            Sign::Plus
        } else {
            let (principal, _) = square_split(&d)?;
            let tol_scale = principal.max_abs().max(1.0);
            if (&s - &principal).is_negligible(tol_scale, 1e-8) {
                Sign::Plus
            } else if (&s + &principal).is_negligible(tol_scale, 1e-8) {
                Sign::Minus
            } else {
                return Err(NuError::NotSquare((&s - &principal).max_abs() / tol_scale));
            }
        };
        let s = match sign {
            Sign::Plus => s,
            Sign::Minus => -s,
        };
        Ok(Self::assemble(eq, g, sign, s, pi.clone()))
    }

    fn assemble(eq: &NuEquation<S>, g: Poly<S>, sign: Sign, s: Poly<S>, pi: Poly<S>) -> Self {
        let tau = &eq.tau_tilde + &pi.scale(&S::from_i64(2));
        let h = &g + &pi.derivative();
        Self {
            g,
            sign,
            s,
            pi,
            tau,
            h,
        }
    }

    pub fn to_c64(&self) -> PiBranch<C64> {
        PiBranch {
            g: self.g.to_c64(),
            sign: self.sign,
            s: self.s.to_c64(),
            pi: self.pi.to_c64(),
            tau: self.tau.to_c64(),
            h: self.h.to_c64(),
        }
    }
}

/// The reduced equation `sigma y'' + tau y' + h y = 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct Reduced<S: Scalar> {
    pub sigma: Poly<S>,
    pub tau: Poly<S>,
    pub h: Poly<S>,
}

/// Divide `sigma-bar` by `sigma`; a nonzero remainder means the branch is
/// not admissible (typically a spurious numerical root).
pub fn reduce<S: Scalar>(eq: &NuEquation<S>, branch: &PiBranch<S>) -> Result<Reduced<S>, NuError> {
    let bar = eq.sigma_bar(&branch.pi);
    let (h, rem) = bar.divrem(&eq.sigma)?;
    let scale = bar.max_abs().max(eq.scale());
    if !rem.is_negligible(scale, BRANCH_TOL) {
        return Err(NuError::NotDivisible(rem.max_abs() / scale));
    }
    let max = eq.mode.g_degree();
    if h.degree_or_zero() > max {
        return Err(NuError::DegreeBound {
            what: "h",
            got: h.degree_or_zero(),
            max,
            mode: eq.mode,
        });
    }
    Ok(Reduced {
        sigma: eq.sigma.clone(),
        tau: branch.tau.clone(),
        h,
    })
}

/// Degree-`n` quantization data for one branch.
#[derive(Debug, Clone, PartialEq)]
pub struct QuantizationRelation<S> {
    pub n: usize,
    /// Extended mode: coefficient of `z` in `h - h_n`; its vanishing is the
    /// eigenvalue relation. Classic mode: `lambda - lambda_n`.
    pub slope_constraint: S,
    /// Constant term of `h` minus the `n`-dependent constant of `h_n`, i.e.
    /// the integration constant `C_n` that would make `h = h_n`.
    pub constant_offset: S,
    /// Classic mode eigenvalue `-n tau' - n(n-1)/2 sigma''`.
    pub lambda_n: Option<S>,
}

pub fn quantization<S: Scalar>(
    eq: &NuEquation<S>,
    branch: &PiBranch<S>,
    n: usize,
) -> QuantizationRelation<S> {
    let tau_d = branch.tau.derivative();
    let sigma_dd = eq.sigma.nth_derivative(2);
    let nn = S::from_usize(n);
    match eq.mode {
        Mode::Classic => {
            // tau' and sigma'' are constants here
            let lambda_n = -(nn.clone() * tau_d.coeff(0))
                - S::from_usize(n * n.saturating_sub(1)) / S::from_i64(2) * sigma_dd.coeff(0);
            QuantizationRelation {
                n,
                slope_constraint: branch.h.coeff(0) - lambda_n.clone(),
                constant_offset: S::zero(),
                lambda_n: Some(lambda_n),
            }
        }
        Mode::Extended => {
            let mut h_n = tau_d.scale(&(-(nn / S::from_i64(2))));
            if eq.sigma.degree_or_zero() >= 3 {
                let c = S::from_usize(n * n.saturating_sub(1)) / S::from_i64(6);
                h_n = &h_n - &sigma_dd.scale(&c);
            }
            QuantizationRelation {
                n,
                slope_constraint: branch.h.coeff(1) - h_n.coeff(1),
                constant_offset: branch.h.coeff(0) - h_n.coeff(0),
                lambda_n: None,
            }
        }
    }
}

/// `phi = exp(E(z)) * prod (z - z_i)^{e_i}`.
#[derive(Debug, Clone, PartialEq)]
pub struct PhiFactor {
    pub exponential_part: Poly<C64>,
    /// `(z_i, e_i)` pairs.
    pub power_factors: Vec<(C64, C64)>,
}

impl PhiFactor {
    pub fn trivial() -> Self {
        Self {
            exponential_part: Poly::zero(),
            power_factors: Vec::new(),
        }
    }

    /// Prefactor built from explicit exponents, e.g. a catalog row.
    pub fn from_parts(exponential_part: Poly<C64>, power_factors: Vec<(C64, C64)>) -> Self {
        Self {
            exponential_part,
            power_factors,
        }
    }

    /// `phi'/phi`
    pub fn log_derivative(&self, z: C64) -> C64 {
        self.power_factors
            .iter()
            .fold(self.exponential_part.derivative().eval(&z), |acc, (zi, e)| {
                acc + e / (z - zi)
            })
    }

    /// `d/dz (phi'/phi)`
    pub fn log_derivative_prime(&self, z: C64) -> C64 {
        self.power_factors
            .iter()
            .fold(self.exponential_part.nth_derivative(2).eval(&z), |acc, (zi, e)| {
                acc - e / ((z - zi) * (z - zi))
            })
    }

    /// Exponent attached to the singular point nearest to `point`, when one
    /// lies within `tol`. Points absent from the factor carry exponent 0.
    pub fn exponent_at(&self, point: C64, tol: f64) -> C64 {
        self.power_factors
            .iter()
            .find(|(zi, _)| (zi - point).norm() <= tol)
            .map_or(C64::new(0.0, 0.0), |&(_, e)| e)
    }

    /// Principal-branch value of `phi(z)`.
    pub fn eval(&self, z: C64) -> C64 {
        self.power_factors
            .iter()
            .fold(self.exponential_part.eval(&z).exp(), |acc, (zi, e)| {
                acc * (z - zi).powc(*e)
            })
    }

    pub fn is_trivial(&self) -> bool {
        self.exponential_part.is_zero()
            && self.power_factors.iter().all(|(_, e)| e.norm() == 0.0)
    }
}

/// Partial fractions of `pi/sigma`: the polynomial part integrates to the
/// exponential part, each simple root `z_i` of `sigma` contributes the power
/// `pi(z_i)/sigma'(z_i)`.
pub fn phi_factor<S: Scalar>(eq: &NuEquation<S>, branch: &PiBranch<S>) -> Result<PhiFactor, NuError> {
    let sigma = eq.sigma.to_c64();
    let pi = branch.pi.to_c64();
    let (quot, _) = pi.divrem(&sigma)?;
    let ds = sigma.derivative();
    let scale = sigma.max_abs();
    let mut power_factors = Vec::new();
    for root in sigma.roots()? {
        let slope = ds.eval(&root);
        if slope.norm() <= 1e-8 * scale {
            return Err(NuError::RepeatedRoots);
        }
        let e = clean(pi.eval(&root) / slope);
        power_factors.push((clean(root), e));
    }
    power_factors.sort_by(|a, b| a.0.re.total_cmp(&b.0.re).then(a.0.im.total_cmp(&b.0.im)));
    Ok(PhiFactor {
        exponential_part: quot.antiderivative(),
        power_factors,
    })
}

fn clean(z: C64) -> C64 {
    let tidy = |x: f64| if x.abs() < 1e-14 { 0.0 } else { x };
    C64::new(tidy(z.re), tidy(z.im))
}

/// Relative singular-value threshold for the null-space dimension count.
pub const NULL_SPACE_TOL: f64 = 1e-8;

/// Monic degree-`n` polynomial solution of the reduced equation, found as
/// the one-dimensional null space of the linear map `y -> sigma y'' + tau y'
/// + h y` restricted to polynomials of degree `<= n`.
pub fn polynomial_solution<S: Scalar>(
    eq: &NuEquation<S>,
    branch: &PiBranch<S>,
    n: usize,
) -> Result<Poly<C64>, NuError> {
    let reduced = reduce(eq, branch)?;
    solve_reduced(
        &reduced.sigma.to_c64(),
        &reduced.tau.to_c64(),
        &reduced.h.to_c64(),
        n,
    )
}

/// Null-space solve of `p2 y'' + p1 y' + p0 y = 0` over degree-`n`
/// polynomials.
pub fn solve_reduced(
    p2: &Poly<C64>,
    p1: &Poly<C64>,
    p0: &Poly<C64>,
    n: usize,
) -> Result<Poly<C64>, NuError> {
    let columns: Vec<Poly<C64>> = (0..=n)
        .map(|j| {
            let y = Poly::monomial(C64::new(1.0, 0.0), j);
            &(&(p2 * &y.nth_derivative(2)) + &(p1 * &y.derivative())) + &(p0 * &y)
        })
        .collect();
    let rows = columns
        .iter()
        .map(|c| c.coeffs().len())
        .max()
        .unwrap_or(0)
        .max(n + 1);
    let m = DMatrix::from_fn(rows, n + 1, |i, j| columns[j].coeff(i));
    let svd = m.clone().svd(false, false);
    // a single column has nothing to compare against, so sigma and tau set
    // the scale as well
    let smax = svd.singular_values.max().max(p2.max_abs()).max(p1.max_abs());
    let tiny = svd
        .singular_values
        .iter()
        .filter(|&&s| s <= NULL_SPACE_TOL * smax.max(f64::MIN_POSITIVE))
        .count();
    let nullity = tiny + (n + 1).saturating_sub(rows.min(n + 1));
    if nullity != 1 {
        return Err(NuError::NullSpace(nullity));
    }
    if n == 0 {
        return Ok(Poly::one());
    }
    // fix the leading coefficient to 1 and solve the rest in least squares
    let a = m.columns(0, n).into_owned();
    let b = -m.column(n).into_owned();
    let lsq = a.svd(true, true);
    let x = lsq.solve(&b, f64::EPSILON).map_err(|_| NuError::Svd)?;
    let mut coeffs: Vec<C64> = x.iter().copied().collect();
    coeffs.push(C64::new(1.0, 0.0));
    Ok(Poly::new(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{ratio, ExactComplex};

    fn q(coeffs: &[(i64, i64)]) -> Poly<ExactComplex> {
        Poly::new(coeffs.iter().map(|&(a, b)| ratio(a, b)).collect())
    }

    /// Hermite: y'' - 2z y' + 2n y = 0 written in classic form with
    /// sigma = 1, tau~ = -2z, sigma~ = 0.
    fn hermite() -> NuEquation<ExactComplex> {
        NuEquation::new(q(&[(0, 1), (-2, 1)]), q(&[(1, 1)]), Poly::zero(), Mode::Classic).unwrap()
    }

    #[test]
    fn degree_bounds_are_enforced() {
        let five = Poly::<ExactComplex>::monomial(ratio(1, 1), 5);
        let err = NuEquation::new(Poly::zero(), five, Poly::zero(), Mode::Extended).unwrap_err();
        assert!(matches!(err, NuError::DegreeBound { what: "sigma", got: 5, .. }));
        assert_eq!(
            NuEquation::new(Poly::<ExactComplex>::zero(), Poly::zero(), Poly::zero(), Mode::Classic),
            Err(NuError::ZeroSigma)
        );
        let quad = Poly::<ExactComplex>::monomial(ratio(1, 1), 2);
        assert!(NuEquation::new(quad, q(&[(1, 1)]), Poly::zero(), Mode::Classic).is_err());
    }

    #[test]
    fn radicand_of_a_square_free_equation() {
        // g = 0, sigma~ = 0 -> ((sigma' - tau~)/2)^2
        let eq = hermite();
        let r = radicand(&eq, &Poly::zero()).unwrap();
        let a = eq.half_gap();
        assert_eq!(r, &a * &a);
        let too_high = Poly::<ExactComplex>::z();
        assert!(radicand(&eq, &too_high).is_err());
    }

    #[test]
    fn branches_for_a_square_radicand() {
        // sigma~ = a^2 makes g = 0 admissible with s = a
        let base = hermite();
        let a = base.half_gap();
        let eq = NuEquation::new(
            base.tau_tilde().clone(),
            base.sigma().clone(),
            Poly::zero(),
            Mode::Classic,
        )
        .unwrap();
        let plus = PiBranch::from_g(&eq, &Poly::zero(), Sign::Plus).unwrap();
        let minus = PiBranch::from_g(&eq, &Poly::zero(), Sign::Minus).unwrap();
        assert_eq!(&plus.s * &plus.s, &a * &a);
        assert_eq!(minus.pi, &a - &plus.s);
        assert!(plus.pi == Poly::zero() || minus.pi == Poly::zero());
    }

    #[test]
    fn hermite_eigenvalues_and_polynomials() {
        let eq = hermite();
        // pi = 0 branch: tau = -2z, lambda_n = 2n
        let b = PiBranch::from_pi(&eq, &Poly::zero()).unwrap();
        assert!(b.g.is_zero());
        for n in 0..6 {
            let qn = quantization(&eq, &b, n);
            assert_eq!(qn.lambda_n.unwrap(), ratio(2 * n as i64, 1));
        }
        // degree 0 residual: lambda_0 = 0 = h, so n = 0 holds
        assert_eq!(quantization(&eq, &b, 0).slope_constraint, ratio(0, 1));
    }

    #[test]
    fn pi_zero_branch_keeps_h_equal_to_g() {
        let eq = hermite();
        let b = PiBranch::from_pi(&eq, &Poly::zero()).unwrap();
        assert_eq!(b.h, b.g);
        let red = reduce(&eq, &b).unwrap();
        assert_eq!(red.h, b.g);
    }

    #[test]
    fn trivial_prefactor_for_zero_pi() {
        let eq = hermite();
        let b = PiBranch::from_pi(&eq, &Poly::zero()).unwrap();
        let phi = phi_factor(&eq, &b).unwrap();
        assert!(phi.is_trivial());
    }

    #[test]
    fn legendre_polynomial_from_null_space() {
        // (1 - z^2) y'' - 2z y' + n(n+1) y = 0, n = 3 -> P3 monic = z^3 - 3/5 z
        let p2 = Poly::new(vec![C64::new(1.0, 0.0), C64::new(0.0, 0.0), C64::new(-1.0, 0.0)]);
        let p1 = Poly::new(vec![C64::new(0.0, 0.0), C64::new(-2.0, 0.0)]);
        let p0 = Poly::constant(C64::new(12.0, 0.0));
        let y = solve_reduced(&p2, &p1, &p0, 3).unwrap();
        let want = Poly::new(vec![
            C64::new(0.0, 0.0),
            C64::new(-0.6, 0.0),
            C64::new(0.0, 0.0),
            C64::new(1.0, 0.0),
        ]);
        assert!(y.approx_eq(&want, 1e-12), "{y}");
        // wrong eigenvalue -> empty null space
        let bad = Poly::constant(C64::new(11.0, 0.0));
        assert_eq!(solve_reduced(&p2, &p1, &bad, 3), Err(NuError::NullSpace(0)));
    }
}
