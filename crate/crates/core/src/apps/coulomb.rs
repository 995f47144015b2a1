//! Coulomb problem on the 3-sphere in parabolic-type coordinates.
//!
//! Separation gives a Heun equation with singular points `0, 1, -1`,
//! `Gamma = 1 - sqrt(1+E+i g)`, `Delta = epsilon = |m| + 1` and
//! `a, b = 1 + |m| + (±sqrt(1+E-i g) - sqrt(1+E+i g))/2`, where `g` is the
//! charge coupling.

use crate::poly::{Scalar, ExactComplex, C64};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Coulomb3SphereInput {
    pub n: usize,
    pub m: i64,
    pub gamma_charge: f64,
}

/// `E_n = (n+|m|)(n+|m|+2) - g^2 / (4 (n+|m|+1)^2)`
pub fn coulomb3s_energy(input: &Coulomb3SphereInput) -> f64 {
    let k = (input.n as i64 + input.m.abs()) as f64;
    k * (k + 2.0) - input.gamma_charge.powi(2) / (4.0 * (k + 1.0).powi(2))
}

/// Which sign of `sqrt(1+E+i g)` a residual was evaluated with.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootSign {
    Principal,
    Flipped,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoulombReport {
    pub energy: f64,
    /// `|ab + n(epsilon + Gamma + Delta + n - 1)|`
    pub class_one: f64,
    pub class_one_sign: RootSign,
    /// `|ab - (n + Delta + epsilon)(Gamma - n - 1)|`
    pub class_two: f64,
    pub class_two_sign: RootSign,
}

impl CoulombReport {
    pub fn worst(&self) -> f64 {
        self.class_one.max(self.class_two)
    }
}

struct Pieces {
    ab: C64,
    big_gamma: C64,
    delta: f64,
}

fn pieces(input: &Coulomb3SphereInput, energy: f64, sign: RootSign) -> Pieces {
    let g = input.gamma_charge;
    let mut sp = C64::new(1.0 + energy, g).sqrt();
    if sign == RootSign::Flipped {
        sp = -sp;
    }
    let sm = C64::new(1.0 + energy, -g).sqrt();
    let mm = 1.0 + input.m.abs() as f64;
    let a = mm + (sm - sp) / 2.0;
    let b = mm - (sm + sp) / 2.0;
    Pieces {
        ab: a * b,
        big_gamma: 1.0 - sp,
        delta: mm,
    }
}

/// Substitute `E_n` into both class relations. The square roots are
/// principal; each relation is also tried with `sqrt(1+E+i g)` negated and
/// the smaller residual is reported together with the sign that gave it.
pub fn coulomb3s_verify(input: &Coulomb3SphereInput) -> CoulombReport {
    let energy = coulomb3s_energy(input);
    let n = input.n as f64;
    let one = |sign| {
        let p = pieces(input, energy, sign);
        (p.ab + n * (p.delta + p.big_gamma + p.delta + n - 1.0)).norm()
    };
    let two = |sign| {
        let p = pieces(input, energy, sign);
        (p.ab - (n + 2.0 * p.delta) * (p.big_gamma - n - 1.0)).norm()
    };
    let best = |f: &dyn Fn(RootSign) -> f64| {
        let (x, y) = (f(RootSign::Principal), f(RootSign::Flipped));
        if x <= y {
            (x, RootSign::Principal)
        } else {
            (y, RootSign::Flipped)
        }
    };
    let (class_one, class_one_sign) = best(&one);
    let (class_two, class_two_sign) = best(&two);
    CoulombReport {
        energy,
        class_one,
        class_one_sign,
        class_two,
        class_two_sign,
    }
}

/// With no charge every square root is an integer, so the class relations
/// can be checked in exact arithmetic. Returns the pair of exact residuals
/// (class one on the principal root, class two on the flipped one).
pub fn coulomb3s_verify_exact(n: usize, m: i64) -> (ExactComplex, ExactComplex) {
    let k = n as i64 + m.abs();
    let energy = ExactComplex::from_i64(k * (k + 2));
    let root = Scalar::sqrt(&(energy + ExactComplex::one()))
        .expect("1 + E is a perfect square when the charge vanishes");
    let mm = ExactComplex::from_i64(1 + m.abs());
    let nn = ExactComplex::from_usize(n);
    let two = ExactComplex::from_i64(2);
    let one = ExactComplex::one();
    // a = mm, b = mm - root when the two roots coincide
    let ab_for = |sp: &ExactComplex| {
        let a = mm.clone() + (root.clone() - sp.clone()) / two.clone();
        let b = mm.clone() - (root.clone() + sp.clone()) / two.clone();
        a * b
    };
    let principal = root.clone();
    let flipped = -root.clone();
    let r1 = ab_for(&principal)
        + nn.clone()
            * (mm.clone() + (one.clone() - principal) + mm.clone() + nn.clone() - one.clone());
    let r2 = ab_for(&flipped)
        - (nn.clone() + two * mm.clone()) * ((one.clone() - flipped) - nn - one);
    (r1, r2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn energies() {
        let e = |n, m, g| coulomb3s_energy(&Coulomb3SphereInput { n, m, gamma_charge: g });
        assert_eq!(e(0, 0, 0.0), 0.0);
        assert_eq!(e(1, 0, 0.0), 3.0);
        assert_eq!(e(0, 0, 2.0), -1.0);
        assert_eq!(e(2, -1, 0.0), 15.0);
    }

    #[test]
    fn relations_hold_on_a_grid() {
        for g in [0.0, 0.5, 2.0] {
            for n in 0..=5 {
                for m in 0..=3 {
                    let r = coulomb3s_verify(&Coulomb3SphereInput { n, m, gamma_charge: g });
                    assert!(r.worst() < 1e-9, "n={n} m={m} g={g}: {r:?}");
                    assert_eq!(r.class_one_sign, RootSign::Principal);
                }
            }
        }
    }

    #[test]
    fn exact_without_charge() {
        for n in 0..5 {
            for m in -2..3 {
                let (a, b) = coulomb3s_verify_exact(n, m);
                assert!(Scalar::vanishes(&a) && Scalar::vanishes(&b), "n={n} m={m}");
            }
        }
    }
}
