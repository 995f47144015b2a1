//! Complex roots through companion-matrix eigenvalues, polished by Newton
//! steps on the original coefficients.

use nalgebra::linalg::Schur;
use nalgebra::DMatrix;

use super::{Poly, PolyError, C64};

const POLISH_STEPS: usize = 8;

pub(super) fn roots(p: &Poly<C64>) -> Result<Vec<C64>, PolyError> {
    let deg = p.degree().ok_or(PolyError::ZeroPolynomial)?;
    if deg == 0 {
        return Ok(Vec::new());
    }
    let monic = p.monic();
    let c = monic.coeffs();
    if deg == 1 {
        return Ok(vec![-c[0]]);
    }
    let mut companion = DMatrix::<C64>::zeros(deg, deg);
    for i in 1..deg {
        companion[(i, i - 1)] = C64::new(1.0, 0.0);
    }
    for i in 0..deg {
        companion[(i, deg - 1)] = -c[i];
    }
    let schur = Schur::try_new(companion, f64::EPSILON, 10_000)
        .ok_or(PolyError::RootsDidNotConverge(deg))?;
    let eig = schur
        .eigenvalues()
        .ok_or(PolyError::RootsDidNotConverge(deg))?;
    let dp = monic.derivative();
    Ok(eig.iter().map(|&z| polish(&monic, &dp, z)).collect())
}

fn polish(p: &Poly<C64>, dp: &Poly<C64>, mut z: C64) -> C64 {
    let mut best = p.eval(&z).norm();
    for _ in 0..POLISH_STEPS {
        let d = dp.eval(&z);
        if d.norm() == 0.0 || best == 0.0 {
            break;
        }
        let candidate = z - p.eval(&z) / d;
        let value = p.eval(&candidate).norm();
        if !(value < best) {
            break;
        }
        z = candidate;
        best = value;
    }
    z
}
