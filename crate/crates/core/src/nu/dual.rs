//! Forward-mode dual numbers over C with two derivative directions, enough
//! to get the Jacobian of the perfect-square remainder in `(g1, g0)`.

use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::poly::C64;

#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Dual {
    pub v: C64,
    pub d: [C64; 2],
}

const ZERO: C64 = C64::new(0.0, 0.0);

impl Dual {
    pub fn constant(v: C64) -> Self {
        Self { v, d: [ZERO; 2] }
    }

    pub fn variable(v: C64, slot: usize) -> Self {
        let mut d = [ZERO; 2];
        d[slot] = C64::new(1.0, 0.0);
        Self { v, d }
    }

    pub fn half(self) -> Self {
        self * Dual::constant(C64::new(0.5, 0.0))
    }
}

impl Add for Dual {
    type Output = Dual;
    fn add(self, o: Dual) -> Dual {
        Dual {
            v: self.v + o.v,
            d: [self.d[0] + o.d[0], self.d[1] + o.d[1]],
        }
    }
}

impl Sub for Dual {
    type Output = Dual;
    fn sub(self, o: Dual) -> Dual {
        Dual {
            v: self.v - o.v,
            d: [self.d[0] - o.d[0], self.d[1] - o.d[1]],
        }
    }
}

impl Mul for Dual {
    type Output = Dual;
    fn mul(self, o: Dual) -> Dual {
        Dual {
            v: self.v * o.v,
            d: [
                self.d[0] * o.v + self.v * o.d[0],
                self.d[1] * o.v + self.v * o.d[1],
            ],
        }
    }
}

impl Div for Dual {
    type Output = Dual;
    fn div(self, o: Dual) -> Dual {
        let inv = C64::new(1.0, 0.0) / o.v;
        let v = self.v * inv;
        Dual {
            v,
            d: [(self.d[0] - v * o.d[0]) * inv, (self.d[1] - v * o.d[1]) * inv],
        }
    }
}

impl Neg for Dual {
    type Output = Dual;
    fn neg(self) -> Dual {
        Dual {
            v: -self.v,
            d: [-self.d[0], -self.d[1]],
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quotient_rule() {
        // f(x, y) = x*y / (x + y) at (1, 2): df/dx = y^2/(x+y)^2 = 4/9
        let x = Dual::variable(C64::new(1.0, 0.0), 0);
        let y = Dual::variable(C64::new(2.0, 0.0), 1);
        let f = x * y / (x + y);
        assert!((f.v - C64::new(2.0 / 3.0, 0.0)).norm() < 1e-15);
        assert!((f.d[0] - C64::new(4.0 / 9.0, 0.0)).norm() < 1e-15);
        assert!((f.d[1] - C64::new(1.0 / 9.0, 0.0)).norm() < 1e-15);
    }
}
