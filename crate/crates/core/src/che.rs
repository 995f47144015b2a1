//! The confluent Heun equation
//!
//! ```text
//! y'' + (alpha + (beta+1)/z + (gamma+1)/(z-1)) y' + (mu/z + nu/(z-1)) y = 0
//! ```
//!
//! Its eight polynomial classes are labelled by the branch `pi_e1 .. pi_e8`.

use std::fmt;

use crate::nu::{phi_factor, polynomial_solution, quantization, reduce, Mode, NuEquation, NuError, PiBranch};
use crate::oracle::{termination_polynomial, termination_solve, OdeFamily, OdeForm, OracleError};
use crate::poly::{Backend, Poly, Scalar, C64};
use crate::state::{Eigenstate, RESIDUAL_SAMPLES};

pub const RELATION_TOL: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CheError {
    #[error("confluent class index must be 1..=8, got {0}")]
    UnknownClass(usize),
    #[error("class {class} at n = {n} leaves relation residual {residual}")]
    Relation {
        class: CheClass,
        n: usize,
        residual: String,
    },
    #[error(transparent)]
    Nu(#[from] NuError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheParams<S: Scalar> {
    pub alpha: S,
    pub beta: S,
    pub gamma: S,
    pub mu: S,
    pub nu: S,
}

impl<S: Scalar> CheParams<S> {
    pub fn new(alpha: S, beta: S, gamma: S, mu: S, nu: S) -> Self {
        Self {
            alpha,
            beta,
            gamma,
            mu,
            nu,
        }
    }

    pub fn mu_plus_nu(&self) -> S {
        self.mu.clone() + self.nu.clone()
    }

    /// Same `mu + nu`, new `mu`.
    pub fn with_mu(&self, mu: S) -> Self {
        let s = self.mu_plus_nu();
        Self {
            nu: s - mu.clone(),
            mu,
            ..self.clone()
        }
    }

    pub fn to_c64(&self) -> CheParams<C64> {
        CheParams {
            alpha: self.alpha.to_c64(),
            beta: self.beta.to_c64(),
            gamma: self.gamma.to_c64(),
            mu: self.mu.to_c64(),
            nu: self.nu.to_c64(),
        }
    }

    /// The equation multiplied through by `z(z-1)`.
    pub fn ode(&self) -> OdeForm<S> {
        let eq = che_to_nu(self);
        OdeForm {
            p2: eq.sigma().clone(),
            p1: eq.tau_tilde().clone(),
            p0: Poly::new(vec![-self.mu.clone(), self.mu_plus_nu()]),
        }
    }
}

/// Branch label `pi_e1 .. pi_e8`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CheClass(u8);

impl CheClass {
    pub fn new(k: usize) -> Result<Self, CheError> {
        if (1..=8).contains(&k) {
            Ok(Self(k as u8))
        } else {
            Err(CheError::UnknownClass(k))
        }
    }

    pub fn all() -> impl Iterator<Item = CheClass> {
        (1..=8).map(CheClass)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for CheClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "pi{}", self.0)
    }
}

fn quad_terms<S: Scalar>(p: &CheParams<S>) -> (Poly<S>, Poly<S>, Poly<S>) {
    let z = Poly::<S>::z();
    let zm1 = Poly::linear_factor(S::one());
    ((&z * &zm1).scale(&p.alpha), zm1.scale(&p.beta), z.scale(&p.gamma))
}

/// `tau~ = alpha z(z-1) + (beta+1)(z-1) + (gamma+1) z`, `sigma = z(z-1)`,
/// `sigma~ = ((mu+nu) z - mu) sigma`.
pub fn che_to_nu<S: Scalar>(p: &CheParams<S>) -> NuEquation<S> {
    let z = Poly::<S>::z();
    let zm1 = Poly::linear_factor(S::one());
    let sigma = &z * &zm1;
    let tau = &(&sigma.scale(&p.alpha) + &zm1.scale(&(p.beta.clone() + S::one())))
        + &z.scale(&(p.gamma.clone() + S::one()));
    let sigma_tilde = &Poly::new(vec![-p.mu.clone(), p.mu_plus_nu()]) * &sigma;
    NuEquation::new(tau, sigma, sigma_tilde, Mode::Extended).expect("confluent data fits the extended bounds")
}

/// `(delta, eta)` of the confluent Heun function.
pub fn che_auxiliary<S: Scalar>(p: &CheParams<S>) -> (S, S) {
    let half = S::from_ratio(1, 2);
    let delta = p.mu_plus_nu() - half.clone() * p.alpha.clone() * (p.beta.clone() + p.gamma.clone() + S::from_i64(2));
    let eta = half.clone() * p.alpha.clone() * (p.beta.clone() + S::one())
        - p.mu.clone()
        - half * (p.beta.clone() + p.gamma.clone() + p.beta.clone() * p.gamma.clone());
    (delta, eta)
}

/// The four admissible `g` polynomials.
pub fn che_g_catalog<S: Scalar>(p: &CheParams<S>) -> [Poly<S>; 4] {
    let s = p.mu_plus_nu();
    let (a, b, g, mu) = (&p.alpha, &p.beta, &p.gamma, &p.mu);
    let ab = a.clone() * b.clone();
    let ag = a.clone() * g.clone();
    let bg = b.clone() * g.clone();
    let lin = |slope: S, c: S| Poly::new(vec![c, slope]);
    [
        lin(s.clone(), -mu.clone()),
        lin(s.clone() - ag.clone(), -mu.clone() - bg.clone()),
        lin(s.clone() - ab.clone() - ag, -mu.clone() + ab.clone()),
        lin(s - ab.clone(), -mu.clone() + ab - bg),
    ]
}

/// `pi_e1 .. pi_e8`; entries `2k-1` and `2k` share `g_k`.
pub fn che_pi_catalog<S: Scalar>(p: &CheParams<S>) -> [Poly<S>; 8] {
    let (ta, tb, tg) = quad_terms(p);
    let (ta, tb, tg) = (-ta, -tb, -tg);
    [
        &(&ta + &tb) + &tg,
        Poly::zero(),
        tg.clone(),
        &ta + &tb,
        &tb + &tg,
        ta.clone(),
        tb,
        &ta + &tg,
    ]
}

pub fn che_branch<S: Scalar>(p: &CheParams<S>, class: CheClass) -> Result<PiBranch<S>, CheError> {
    let eq = che_to_nu(p);
    Ok(PiBranch::from_pi(&eq, &che_pi_catalog(p)[class.index() - 1])?)
}

/// The `mu + nu` each class needs at degree `n`.
pub fn che_required_sum<S: Scalar>(class: CheClass, n: usize, p: &CheParams<S>) -> S {
    let n = S::from_usize(n);
    let (a, b, g) = (p.alpha.clone(), p.beta.clone(), p.gamma.clone());
    let na = n * a.clone();
    let two_a = S::from_i64(2) * a.clone();
    match class.index() {
        1 => two_a + na,
        2 => -na,
        3 => g * a - na,
        4 => g * a + two_a + na,
        5 => a.clone() * b + a * g - na,
        6 => a.clone() * b + a * g + two_a + na,
        7 => a * b - na,
        _ => a * b + two_a + na,
    }
}

/// Residual of the class relation: `mu + nu` minus [`che_required_sum`].
pub fn che_class_relation<S: Scalar>(class: CheClass, n: usize, p: &CheParams<S>) -> S {
    p.mu_plus_nu() - che_required_sum(class, n, p)
}

/// The relations in the sign convention they are often quoted in, where the
/// seventh class reads `mu + nu - alpha beta = n alpha`. That form only agrees
/// with the quantization at `n = 0`; kept for comparison.
pub fn che_class_relation_quoted<S: Scalar>(class: CheClass, n: usize, p: &CheParams<S>) -> S {
    if class.index() == 7 {
        let n = S::from_usize(n);
        return p.mu_plus_nu() - p.alpha.clone() * p.beta.clone() - n * p.alpha.clone();
    }
    che_class_relation(class, n, p)
}

/// The relation read off the NU quantization of the class branch.
pub fn che_slope_constraint<S: Scalar>(class: CheClass, n: usize, p: &CheParams<S>) -> Result<S, CheError> {
    let eq = che_to_nu(p);
    let b = che_branch(p, class)?;
    Ok(quantization(&eq, &b, n).slope_constraint)
}

fn check_relation<S: Scalar>(class: CheClass, n: usize, p: &CheParams<S>) -> Result<(), CheError> {
    let r = che_class_relation(class, n, p);
    let ok = match S::BACKEND {
        Backend::Exact => r.vanishes(),
        Backend::Float => r.magnitude() <= RELATION_TOL * (1.0 + p.mu_plus_nu().magnitude() + p.alpha.magnitude()),
    };
    if ok {
        Ok(())
    } else {
        Err(CheError::Relation {
            class,
            n,
            residual: r.render(),
        })
    }
}

/// Class-reduced equation with `mu` free and `mu + nu` held fixed.
pub fn che_family<S: Scalar>(p: &CheParams<S>, class: CheClass) -> Result<OdeFamily<S>, CheError> {
    let p0 = p.with_mu(S::zero());
    let eq = che_to_nu(&p0);
    let b = che_branch(&p0, class)?;
    let red = reduce(&eq, &b)?;
    Ok(OdeFamily {
        base: OdeForm::new(red.sigma, red.tau, red.h)?,
        unknown: Poly::constant(-S::one()),
    })
}

pub fn che_termination_polynomial<S: Scalar>(p: &CheParams<S>, class: CheClass, n: usize) -> Result<Poly<S>, CheError> {
    Ok(termination_polynomial(&che_family(p, class)?, n)?)
}

/// `mu` values (with `mu + nu` fixed) admitting a degree-`n` polynomial.
pub fn che_mu_values<S: Scalar>(p: &CheParams<S>, class: CheClass, n: usize) -> Result<Vec<C64>, CheError> {
    check_relation(class, n, p)?;
    Ok(termination_solve(&che_family(p, class)?, n)?)
}

pub fn che_eigenstate<S: Scalar>(p: &CheParams<S>, class: CheClass, n: usize, mu: C64) -> Result<Eigenstate, CheError> {
    let pf = p.to_c64().with_mu(mu);
    check_relation(class, n, &pf)?;
    let eq = che_to_nu(&pf);
    let b = che_branch(&pf, class)?;
    let phi = phi_factor(&eq, &b)?;
    let polynomial = polynomial_solution(&eq, &b, n)?;
    let residual = crate::oracle::ode_residual(&phi, &polynomial, &pf.ode(), RESIDUAL_SAMPLES)?;
    Ok(Eigenstate {
        n,
        label: format!("che/{class}"),
        quantization: vec![("mu+nu".into(), pf.mu_plus_nu())],
        accessory: mu,
        phi,
        polynomial,
        residual,
    })
}
