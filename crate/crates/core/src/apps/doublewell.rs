//! Hyperbolic double-well potential. In the variable where it becomes a
//! confluent Heun equation the parameters are `alpha = -d sqrt(U0)`,
//! `beta = -i d sqrt(eps)`, `gamma = -1/2` with
//! `mu = (alpha(alpha+2) + 2 alpha beta - beta(beta-1)) / 4` and
//! `nu = (alpha + beta(beta-1)) / 4`.

use super::AppError;
use crate::che::{che_class_relation, che_family, che_mu_values, CheClass, CheParams};
use crate::oracle::termination_defect;
use crate::poly::C64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Symmetric,
    Antisymmetric,
}

impl Parity {
    /// `3` or `5`.
    pub fn offset(self) -> f64 {
        match self {
            Parity::Symmetric => 3.0,
            Parity::Antisymmetric => 5.0,
        }
    }

    /// The two classes whose relation can hold, depending on the sign of
    /// `offset + 4N - d sqrt(U0)`.
    pub fn classes(self) -> [CheClass; 2] {
        let k = match self {
            Parity::Symmetric => [2, 7],
            Parity::Antisymmetric => [3, 5],
        };
        k.map(|i| CheClass::new(i).expect("class index in range"))
    }
}

impl std::str::FromStr for Parity {
    type Err = AppError;
    fn from_str(s: &str) -> Result<Self, AppError> {
        match s.to_ascii_lowercase().as_str() {
            "s" | "sym" | "symmetric" => Ok(Parity::Symmetric),
            "a" | "anti" | "antisymmetric" => Ok(Parity::Antisymmetric),
            _ => Err(AppError::Input(format!("unknown parity {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DoubleWellInput {
    pub n: usize,
    pub d: f64,
    pub u0: f64,
    pub parity: Parity,
}

fn check(input: &DoubleWellInput) -> Result<(), AppError> {
    if !(input.d > 0.0 && input.d.is_finite() && input.u0 > 0.0 && input.u0.is_finite()) {
        return Err(AppError::Input("d and U0 must be positive".into()));
    }
    Ok(())
}

/// `-(offset + 4N - d sqrt(U0))^2 / (4 d^2)`
pub fn doublewell_spectrum(input: &DoubleWellInput) -> f64 {
    let k = input.parity.offset() + 4.0 * input.n as f64 - input.d * input.u0.sqrt();
    -k * k / (4.0 * input.d * input.d)
}

/// Confluent Heun parameters at energy `eps` (principal square root).
pub fn doublewell_params(d: f64, u0: f64, eps: f64) -> CheParams<C64> {
    let alpha = C64::new(-d * u0.sqrt(), 0.0);
    let beta = C64::new(0.0, -d) * C64::new(eps, 0.0).sqrt();
    let one = C64::new(1.0, 0.0);
    let mu = (alpha * (alpha + 2.0) + 2.0 * alpha * beta - beta * (beta - one)) / 4.0;
    let nu = (alpha + beta * (beta - one)) / 4.0;
    CheParams::new(alpha, beta, C64::new(-0.5, 0.0), mu, nu)
}

#[derive(Debug, Clone, PartialEq)]
pub struct DoubleWellReport {
    /// Closed-form energy.
    pub epsilon: f64,
    /// Energy recovered from the class relation alone.
    pub epsilon_solved: f64,
    /// Smallest class relation residual at the closed-form energy.
    pub relation: f64,
    /// The class that gave it.
    pub class: CheClass,
    /// `mu` values (with `mu + nu` fixed) giving a degree-`N` polynomial.
    pub mu: Vec<C64>,
    /// Worst relative `|c_{N+1}|` over those `mu`.
    pub termination: f64,
}

/// Substitute the closed-form energy, check the class relations, then
/// resolve `mu` by termination and confirm the series stops at degree `N`.
pub fn doublewell_verify(input: &DoubleWellInput) -> Result<DoubleWellReport, AppError> {
    check(input)?;
    let epsilon = doublewell_spectrum(input);
    let p = doublewell_params(input.d, input.u0, epsilon);
    let (class, relation) = input
        .parity
        .classes()
        .into_iter()
        .map(|c| (c, che_class_relation(c, input.n, &p).norm()))
        .min_by(|a, b| a.1.total_cmp(&b.1))
        .expect("two classes");
    let scale = 1.0 + p.alpha.norm() * (1.0 + p.beta.norm());
    if relation > 1e-9 * scale {
        return Err(AppError::Relation(relation));
    }
    let epsilon_solved = doublewell_solve_energy(input, class);
    let mu = che_mu_values(&p, class, input.n)?;
    if mu.is_empty() {
        return Err(AppError::NoState(format!("no mu for {class} at N = {}", input.n)));
    }
    let family = che_family(&p, class)?.to_c64();
    let mut termination: f64 = 0.0;
    for m in &mu {
        let (c1, _) = termination_defect(&family.at(m), input.n)?;
        termination = termination.max(c1);
    }
    Ok(DoubleWellReport {
        epsilon,
        epsilon_solved,
        relation,
        class,
        mu,
        termination,
    })
}

/// Solve the class relation (linear in `beta` once `mu + nu` is expanded)
/// for `beta`, then `eps = -beta^2 / d^2`.
pub fn doublewell_solve_energy(input: &DoubleWellInput, class: CheClass) -> f64 {
    let alpha = -input.d * input.u0.sqrt();
    // mu + nu = alpha (alpha + 3 + 2 beta) / 4
    let k = alpha + input.parity.offset() + 4.0 * input.n as f64;
    let beta = match class.index() {
        2 | 3 => -k / 2.0,
        _ => k / 2.0,
    };
    -beta * beta / (input.d * input.d)
}
