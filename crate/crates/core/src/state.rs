//! A solved polynomial state: `psi = phi * p` with the data that produced it.

use crate::nu::PhiFactor;
use crate::oracle::{ode_residual, OdeForm, OracleError};
use crate::poly::{Poly, C64};

/// Sample count used for the residual attached to every state.
pub const RESIDUAL_SAMPLES: usize = 50;

#[derive(Debug, Clone, PartialEq)]
pub struct Eigenstate {
    pub n: usize,
    /// Which family and class produced the state, e.g. `heun/VIII`.
    pub label: String,
    /// Named parameter values the quantization fixed (for instance the
    /// required `alpha*beta` or `mu+nu`).
    pub quantization: Vec<(String, C64)>,
    /// `q` for Heun, `mu` for the confluent equation.
    pub accessory: C64,
    pub phi: PhiFactor,
    /// Monic polynomial factor.
    pub polynomial: Poly<C64>,
    /// Relative residual of `psi` in the original equation.
    pub residual: f64,
}

impl Eigenstate {
    pub fn eval(&self, z: C64) -> C64 {
        self.phi.eval(z) * self.polynomial.eval(&z)
    }

    /// Zeros of the polynomial factor.
    pub fn roots(&self) -> Vec<C64> {
        if self.polynomial.degree_or_zero() == 0 {
            return Vec::new();
        }
        self.polynomial.roots().unwrap_or_default()
    }

    /// Residual against some other equation, e.g. one with a perturbed
    /// accessory parameter.
    pub fn residual_against(&self, ode: &OdeForm<C64>, samples: usize) -> Result<f64, OracleError> {
        ode_residual(&self.phi, &self.polynomial, ode, samples)
    }
}
