//! Shared generators and property checks for the polynomial kernel.

#![allow(dead_code)]

use heunforge::poly::{exact, Poly, ExactComplex, C64};
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

pub const CASES: u32 = 1000;

fn gaussian() -> impl Strategy<Value = ExactComplex> {
    (-20i64..=20, 1i64..=6, -20i64..=20, 1i64..=6).prop_map(|(a, b, c, d)| exact(a, b, c, d))
}

pub fn exact_poly(max_len: usize) -> impl Strategy<Value = Poly<ExactComplex>> {
    proptest::collection::vec(gaussian(), 1..=max_len).prop_map(Poly::new)
}

pub fn nonzero_exact_poly(max_len: usize) -> impl Strategy<Value = Poly<ExactComplex>> {
    exact_poly(max_len).prop_filter("nonzero", |p| !p.is_zero())
}

/// `(s, r)` with `s` of degree >= 1 and `deg r < deg s`.
pub fn square_pair() -> impl Strategy<Value = (Poly<ExactComplex>, Poly<ExactComplex>)> {
    (1usize..=4)
        .prop_flat_map(|m| {
            (
                proptest::collection::vec(gaussian(), m + 1),
                proptest::collection::vec(gaussian(), m),
            )
        })
        .prop_filter("leading coefficient", |(s, _)| !s.last().is_some_and(|c| *c == exact(0, 1, 0, 1)))
        .prop_map(|(s, r)| (Poly::new(s), Poly::new(r)))
}

pub fn float_poly() -> impl Strategy<Value = Poly<C64>> {
    proptest::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 2..=11)
        .prop_filter("leading coefficient", |c| {
            let (re, im) = c[c.len() - 1];
            re.hypot(im) > 1e-3
        })
        .prop_map(|c| Poly::new(c.into_iter().map(|(re, im)| C64::new(re, im)).collect()))
}

pub fn division_identity(a: &Poly<ExactComplex>, b: &Poly<ExactComplex>) -> Result<(), TestCaseError> {
    let (q, r) = a.divrem(b).map_err(|e| TestCaseError::fail(e.to_string()))?;
    prop_assert_eq!(&(&(&q * b) + &r), a);
    if let Some(dr) = r.degree() {
        prop_assert!(dr < b.degree().unwrap_or(0));
    }
    Ok(())
}

pub fn product_rule(f: &Poly<ExactComplex>, g: &Poly<ExactComplex>) -> Result<(), TestCaseError> {
    let lhs = (f * g).derivative();
    let rhs = &(&f.derivative() * g) + &(f * &g.derivative());
    prop_assert_eq!(lhs, rhs);
    Ok(())
}

pub fn sqrt_head_roundtrip(s: &Poly<ExactComplex>, r: &Poly<ExactComplex>) -> Result<(), TestCaseError> {
    let p = &(s * s) + r;
    let (s2, r2) = p.sqrt_head().map_err(|e| TestCaseError::fail(e.to_string()))?;
    prop_assert_eq!(&r2, r);
    prop_assert!(&s2 == s || s2 == -s.clone());
    prop_assert_eq!(&(&(&s2 * &s2) + &r2), &p);
    Ok(())
}

pub fn root_residuals(p: &Poly<C64>) -> Result<(), TestCaseError> {
    let roots = p.roots().map_err(|e| TestCaseError::fail(e.to_string()))?;
    prop_assert_eq!(roots.len(), p.degree_or_zero());
    for z in roots {
        let scale: f64 = p
            .coeffs()
            .iter()
            .enumerate()
            .map(|(i, c)| c.norm() * z.norm().powi(i as i32))
            .sum();
        let value = p.eval(&z).norm();
        prop_assert!(value <= 1e-8 * scale, "p({z}) = {value:e}, scale {scale:e}");
    }
    Ok(())
}
