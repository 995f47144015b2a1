//! The Heun equation
//!
//! ```text
//! w'' + (gamma/z + delta/(z-1) + epsilon/(z-a)) w' + (ab z - q)/(z(z-1)(z-a)) w = 0
//! ```
//!
//! and its eight polynomial classes.

use std::fmt;
use std::str::FromStr;

use crate::nu::{phi_factor, polynomial_solution, quantization, Mode, NuEquation, NuError, PiBranch};
use crate::oracle::{termination_polynomial, termination_solve, OdeFamily, OdeForm, OracleError};
use crate::poly::{Backend, Poly, Scalar, C64};
use crate::state::{Eigenstate, RESIDUAL_SAMPLES};

/// Relative tolerance for the Fuchsian condition in floating mode.
pub const FUCHS_TOL: f64 = 1e-10;
/// Relative tolerance a class relation must meet before `q` is resolved.
pub const RELATION_TOL: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum HeunError {
    #[error("Fuchsian condition violated: epsilon - (alpha + beta - gamma - delta + 1) = {0}")]
    Fuchsian(String),
    #[error("a = {0} coincides with another singular point")]
    Singularities(String),
    #[error("class {class} needs alpha*beta = {required} at n = {n}, got {actual}")]
    Relation {
        class: HeunClass,
        n: usize,
        required: String,
        actual: String,
    },
    #[error("unknown Heun class `{0}`")]
    UnknownClass(String),
    #[error(transparent)]
    Nu(#[from] NuError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

#[derive(Debug, Clone, PartialEq)]
pub struct HeunParams<S: Scalar> {
    pub gamma: S,
    pub delta: S,
    pub epsilon: S,
    pub alpha: S,
    pub beta: S,
    pub q: S,
    pub a: S,
}

fn close<S: Scalar>(x: &S, y: &S, tol: f64) -> bool {
    let d = x.clone() - y.clone();
    match S::BACKEND {
        Backend::Exact => d.vanishes(),
        Backend::Float => d.magnitude() <= tol * (1.0 + x.magnitude().max(y.magnitude())),
    }
}

impl<S: Scalar> HeunParams<S> {
    pub fn new(gamma: S, delta: S, epsilon: S, alpha: S, beta: S, q: S, a: S) -> Result<Self, HeunError> {
        let p = Self {
            gamma,
            delta,
            epsilon,
            alpha,
            beta,
            q,
            a,
        };
        p.validate()?;
        Ok(p)
    }

    /// Parameters of a degree-`n` polynomial of the given class: `alpha` and
    /// `beta` from the class row, `q` left at zero for the caller to resolve.
    pub fn polynomial_case(class: HeunClass, n: usize, gamma: S, delta: S, epsilon: S, a: S) -> Result<Self, HeunError> {
        let mut p = Self {
            gamma,
            delta,
            epsilon,
            alpha: S::zero(),
            beta: S::zero(),
            q: S::zero(),
            a,
        };
        p.alpha = class.alpha(n, &p);
        p.beta = class.beta(n, &p);
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<(), HeunError> {
        let fuchs = self.alpha.clone() + self.beta.clone() - self.gamma.clone() - self.delta.clone() + S::one();
        if !close(&self.epsilon, &fuchs, FUCHS_TOL) {
            return Err(HeunError::Fuchsian((self.epsilon.clone() - fuchs).render()));
        }
        for s in [S::zero(), S::one()] {
            if close(&self.a, &s, 1e-12) {
                return Err(HeunError::Singularities(self.a.render()));
            }
        }
        Ok(())
    }

    pub fn alpha_beta(&self) -> S {
        self.alpha.clone() * self.beta.clone()
    }

    pub fn with_q(&self, q: S) -> Self {
        Self { q, ..self.clone() }
    }

    pub fn to_c64(&self) -> HeunParams<C64> {
        HeunParams {
            gamma: self.gamma.to_c64(),
            delta: self.delta.to_c64(),
            epsilon: self.epsilon.to_c64(),
            alpha: self.alpha.to_c64(),
            beta: self.beta.to_c64(),
            q: self.q.to_c64(),
            a: self.a.to_c64(),
        }
    }

    fn sigma(&self) -> Poly<S> {
        Poly::from_roots(&[S::zero(), S::one(), self.a.clone()])
    }

    fn z_minus(&self, c: S) -> Poly<S> {
        Poly::linear_factor(c)
    }

    /// The original equation multiplied through by `z(z-1)(z-a)`.
    pub fn ode(&self) -> OdeForm<S> {
        let eq = heun_to_nu(self);
        OdeForm {
            p2: eq.sigma().clone(),
            p1: eq.tau_tilde().clone(),
            p0: Poly::new(vec![-self.q.clone(), self.alpha_beta()]),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HeunClass {
    I,
    II,
    III,
    IV,
    V,
    VI,
    VII,
    VIII,
}

impl HeunClass {
    pub const ALL: [HeunClass; 8] = [
        HeunClass::I,
        HeunClass::II,
        HeunClass::III,
        HeunClass::IV,
        HeunClass::V,
        HeunClass::VI,
        HeunClass::VII,
        HeunClass::VIII,
    ];

    pub fn roman(self) -> &'static str {
        match self {
            HeunClass::I => "I",
            HeunClass::II => "II",
            HeunClass::III => "III",
            HeunClass::IV => "IV",
            HeunClass::V => "V",
            HeunClass::VI => "VI",
            HeunClass::VII => "VII",
            HeunClass::VIII => "VIII",
        }
    }

    /// Which of the exponents `1-gamma`, `1-delta`, `1-epsilon` the
    /// prefactor carries at `0`, `1`, `a`.
    pub fn flips(self) -> [bool; 3] {
        match self {
            HeunClass::I => [false, false, false],
            HeunClass::II => [true, false, false],
            HeunClass::III => [false, true, false],
            HeunClass::IV => [true, true, false],
            HeunClass::V => [false, false, true],
            HeunClass::VI => [true, false, true],
            HeunClass::VII => [false, true, true],
            HeunClass::VIII => [true, true, true],
        }
    }

    /// Prefactor exponents `(sigma1, sigma2, sigma3)` at `0`, `1`, `a`.
    pub fn exponents<S: Scalar>(self, p: &HeunParams<S>) -> [S; 3] {
        let f = self.flips();
        let pick = |on: bool, x: &S| if on { S::one() - x.clone() } else { S::zero() };
        [pick(f[0], &p.gamma), pick(f[1], &p.delta), pick(f[2], &p.epsilon)]
    }

    pub fn alpha<S: Scalar>(self, n: usize, p: &HeunParams<S>) -> S {
        let n = S::from_usize(n);
        let (g, d, e) = (p.gamma.clone(), p.delta.clone(), p.epsilon.clone());
        let one = S::one();
        let two = S::from_i64(2);
        match self {
            HeunClass::I => -n,
            HeunClass::II => g - n - one,
            HeunClass::III => d - n - one,
            HeunClass::IV => d + g - n - two,
            HeunClass::V => e - n - one,
            HeunClass::VI => e + g - n - two,
            HeunClass::VII => d + e - n - two,
            HeunClass::VIII => e + g + d - n - S::from_i64(3),
        }
    }

    pub fn beta<S: Scalar>(self, n: usize, p: &HeunParams<S>) -> S {
        let n = S::from_usize(n);
        let (g, d, e) = (p.gamma.clone(), p.delta.clone(), p.epsilon.clone());
        let one = S::one();
        match self {
            HeunClass::I => e + g + d + n - one,
            HeunClass::II => n + d + e,
            HeunClass::III => e + g + n,
            HeunClass::IV => e + n + one,
            HeunClass::V => d + g + n,
            HeunClass::VI => d + n + one,
            HeunClass::VII => g + n + one,
            HeunClass::VIII => n + S::from_i64(2),
        }
    }

    /// The product `alpha * beta` a degree-`n` polynomial of this class needs.
    pub fn required_alpha_beta<S: Scalar>(self, n: usize, p: &HeunParams<S>) -> S {
        self.alpha(n, p) * self.beta(n, p)
    }

    /// 1-based index of the matching entry in [`heun_pi_catalog`].
    pub fn branch_index(self) -> usize {
        match self {
            HeunClass::VIII => 1,
            HeunClass::I => 2,
            HeunClass::II => 3,
            HeunClass::VII => 4,
            HeunClass::IV => 5,
            HeunClass::V => 6,
            HeunClass::VI => 7,
            HeunClass::III => 8,
        }
    }

    pub fn from_branch_index(k: usize) -> Option<Self> {
        Self::ALL.into_iter().find(|c| c.branch_index() == k)
    }
}

impl fmt::Display for HeunClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.roman())
    }
}

impl FromStr for HeunClass {
    type Err = HeunError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim().to_ascii_uppercase();
        Self::ALL
            .into_iter()
            .find(|c| c.roman() == t || c.branch_index().to_string() == t.trim_start_matches("PI"))
            .ok_or_else(|| HeunError::UnknownClass(s.to_string()))
    }
}

/// `tau~ = gamma(z-1)(z-a) + delta z(z-a) + epsilon z(z-1)`,
/// `sigma = z(z-1)(z-a)`, `sigma~ = (ab z - q) sigma`.
pub fn heun_to_nu<S: Scalar>(p: &HeunParams<S>) -> NuEquation<S> {
    let z0 = p.z_minus(S::zero());
    let z1 = p.z_minus(S::one());
    let za = p.z_minus(p.a.clone());
    let tau = &(&(&z1 * &za).scale(&p.gamma) + &(&z0 * &za).scale(&p.delta)) + &(&z0 * &z1).scale(&p.epsilon);
    let sigma = p.sigma();
    let sigma_tilde = &Poly::new(vec![-p.q.clone(), p.alpha_beta()]) * &sigma;
    NuEquation::new(tau, sigma, sigma_tilde, Mode::Extended).expect("Heun data fits the extended bounds")
}

/// The four admissible `g` polynomials, in catalog order.
pub fn heun_g_catalog<S: Scalar>(p: &HeunParams<S>) -> [Poly<S>; 4] {
    let one = S::one();
    let (g, d, e) = (one.clone() - p.gamma.clone(), one.clone() - p.delta.clone(), one - p.epsilon.clone());
    let z0 = p.z_minus(S::zero());
    let z1 = p.z_minus(S::one());
    let za = p.z_minus(p.a.clone());
    let base = Poly::new(vec![-p.q.clone(), p.alpha_beta()]);
    [
        base.clone(),
        &base - &(&za.scale(&d) + &z1.scale(&e)).scale(&g),
        &base - &(&z1.scale(&g) + &z0.scale(&d)).scale(&e),
        &base - &(&za.scale(&g) + &z0.scale(&e)).scale(&d),
    ]
}

/// `pi_e1 .. pi_e8`; entries `2k-1` and `2k` share `g_k`.
pub fn heun_pi_catalog<S: Scalar>(p: &HeunParams<S>) -> [Poly<S>; 8] {
    let one = S::one();
    let (g, d, e) = (one.clone() - p.gamma.clone(), one.clone() - p.delta.clone(), one - p.epsilon.clone());
    let z0 = p.z_minus(S::zero());
    let z1 = p.z_minus(S::one());
    let za = p.z_minus(p.a.clone());
    let tg = (&z1 * &za).scale(&g);
    let td = (&z0 * &za).scale(&d);
    let te = (&z0 * &z1).scale(&e);
    [
        &(&tg + &td) + &te,
        Poly::zero(),
        tg.clone(),
        &td + &te,
        &tg + &td,
        te.clone(),
        &tg + &te,
        td,
    ]
}

/// The branch belonging to a class.
pub fn heun_branch<S: Scalar>(p: &HeunParams<S>, class: HeunClass) -> Result<PiBranch<S>, HeunError> {
    let eq = heun_to_nu(p);
    let pi = &heun_pi_catalog(p)[class.branch_index() - 1];
    Ok(PiBranch::from_pi(&eq, pi)?)
}

/// `alpha*beta` minus the value the class needs at degree `n`.
pub fn heun_class_relation<S: Scalar>(class: HeunClass, n: usize, p: &HeunParams<S>) -> S {
    p.alpha_beta() - class.required_alpha_beta(n, p)
}

/// The same relation read off the NU quantization of the class branch: the
/// `z` coefficient of `h - h_n`. Independent of the class table.
pub fn heun_slope_constraint<S: Scalar>(class: HeunClass, n: usize, p: &HeunParams<S>) -> Result<S, HeunError> {
    let eq = heun_to_nu(p);
    let b = heun_branch(p, class)?;
    Ok(quantization(&eq, &b, n).slope_constraint)
}

fn check_relation<S: Scalar>(class: HeunClass, n: usize, p: &HeunParams<S>) -> Result<(), HeunError> {
    let required = class.required_alpha_beta(n, p);
    let actual = p.alpha_beta();
    if !close(&actual, &required, RELATION_TOL) {
        return Err(HeunError::Relation {
            class,
            n,
            required: required.render(),
            actual: actual.render(),
        });
    }
    Ok(())
}

/// Reduced equation of the class branch with `q` as the free parameter:
/// `sigma y'' + tau y' + (h0 - q) y = 0`.
pub fn heun_family<S: Scalar>(p: &HeunParams<S>, class: HeunClass) -> Result<OdeFamily<S>, HeunError> {
    let p0 = p.with_q(S::zero());
    let eq = heun_to_nu(&p0);
    let b = heun_branch(&p0, class)?;
    let red = crate::nu::reduce(&eq, &b)?;
    Ok(OdeFamily {
        base: OdeForm::new(red.sigma, red.tau, red.h)?,
        unknown: Poly::constant(-S::one()),
    })
}

/// `c_{n+1}(q)` of the class-reduced series.
pub fn heun_termination_polynomial<S: Scalar>(p: &HeunParams<S>, class: HeunClass, n: usize) -> Result<Poly<S>, HeunError> {
    Ok(termination_polynomial(&heun_family(p, class)?, n)?)
}

/// Accessory values admitting a degree-`n` polynomial of the class.
pub fn heun_accessory<S: Scalar>(p: &HeunParams<S>, class: HeunClass, n: usize) -> Result<Vec<C64>, HeunError> {
    check_relation(class, n, p)?;
    Ok(termination_solve(&heun_family(p, class)?, n)?)
}

/// Class I determinants for `n = 1` and `n = 2` as polynomials in `q`,
/// expanded from the leading minors of the three-term recurrence matrix.
pub fn heun_determinant<S: Scalar>(p: &HeunParams<S>, n: usize) -> Option<Poly<S>> {
    let (g, d, e, a) = (p.gamma.clone(), p.delta.clone(), p.epsilon.clone(), p.a.clone());
    let ab = p.alpha_beta();
    let q = Poly::<S>::z();
    let c = Poly::constant;
    let m11 = q.clone();
    let m12 = c(-(a.clone() * g.clone()));
    let m21 = c(-ab.clone());
    let m22 = &q + &c(a.clone() * (d.clone() + g.clone()) + e.clone() + g.clone());
    match n {
        1 => Some(&(&m11 * &m22) - &(&m12 * &m21)),
        2 => {
            let two = S::from_i64(2);
            let m23 = c(-(two.clone() * a.clone() * (S::one() + g.clone())));
            let m32 = c(-ab - (g.clone() + e.clone() + d.clone()));
            let m33 = &q
                + &c(two.clone() * (a.clone() + S::one()) + two * (a * (d + g.clone()) + e + g));
            // expand along the first row
            let minor1 = &(&m22 * &m33) - &(&m23 * &m32);
            let minor2 = &m21 * &m33;
            Some(&(&m11 * &minor1) - &(&m12 * &minor2))
        }
        _ => None,
    }
}

/// Assemble `psi = z^s1 (z-1)^s2 (z-a)^s3 p(z)` for an accessory value from
/// [`heun_accessory`].
pub fn heun_eigenstate<S: Scalar>(p: &HeunParams<S>, class: HeunClass, n: usize, q: C64) -> Result<Eigenstate, HeunError> {
    let pf = p.to_c64().with_q(q);
    check_relation(class, n, &pf)?;
    let eq = heun_to_nu(&pf);
    let b = heun_branch(&pf, class)?;
    let phi = phi_factor(&eq, &b)?;
    let polynomial = polynomial_solution(&eq, &b, n)?;
    let residual = crate::oracle::ode_residual(&phi, &polynomial, &pf.ode(), RESIDUAL_SAMPLES)?;
    Ok(Eigenstate {
        n,
        label: format!("heun/{class}"),
        quantization: vec![
            ("alpha".into(), pf.alpha),
            ("beta".into(), pf.beta),
            ("alpha*beta".into(), pf.alpha_beta()),
        ],
        accessory: q,
        phi,
        polynomial,
        residual,
    })
}
