//! Dense univariate polynomials over complex coefficients.
//!
//! Coefficients are stored constant term first. Every constructor returns the
//! canonical form: trailing (highest-degree) zeros are removed, using an exact
//! zero test for [`ExactComplex`] and a relative threshold of
//! [`FLOAT_TRIM`]` * max|coeff|` for [`C64`].

mod parse;
mod roots;
mod scalar;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

pub use parse::{parse_scalar, ParseError};
pub use scalar::{
    c64, exact, parse_rational, ratio, Backend, ExactComplex, Scalar, C64, FLOAT_TRIM,
};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("square-root extraction needs an even degree, got {0}")]
    OddDegree(usize),
    #[error("leading coefficient {0} has no square root in the exact backend")]
    NonSquareLeading(String),
    #[error("the zero polynomial has no roots")]
    ZeroPolynomial,
    #[error("root finding failed to converge for degree {0}")]
    RootsDidNotConverge(usize),
    #[error("cannot mix {0} and {1} backends in one operation")]
    BackendMismatch(&'static str, &'static str),
}

#[derive(Clone, PartialEq)]
pub struct Poly<S> {
    coeffs: Vec<S>,
}

impl<S: Scalar> Poly<S> {
    pub fn new(coeffs: Vec<S>) -> Self {
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        let scale = self.max_abs();
        while let Some(last) = self.coeffs.last() {
            if last.negligible(scale) {
                self.coeffs.pop();
            } else {
                break;
            }
        }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(S::one())
    }

    pub fn constant(c: S) -> Self {
        Self::new(vec![c])
    }

    /// The identity polynomial `z`.
    pub fn z() -> Self {
        Self::new(vec![S::zero(), S::one()])
    }

    /// `c * z^k`
    pub fn monomial(c: S, k: usize) -> Self {
        let mut coeffs = vec![S::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// `z - root`
    pub fn linear_factor(root: S) -> Self {
        Self::new(vec![-root, S::one()])
    }

    /// Monic polynomial with the given roots.
    pub fn from_roots(roots: &[S]) -> Self {
        roots
            .iter()
            .fold(Self::one(), |acc, r| &acc * &Self::linear_factor(r.clone()))
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<S> {
        self.coeffs
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial counted as degree 0; handy for bounds.
    pub fn degree_or_zero(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, k: usize) -> S {
        self.coeffs.get(k).cloned().unwrap_or_else(S::zero)
    }

    pub fn leading(&self) -> Option<&S> {
        self.coeffs.last()
    }

    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().map(Scalar::magnitude).fold(0.0, f64::max)
    }

    /// Horner evaluation.
    pub fn eval(&self, z: &S) -> S {
        self.coeffs
            .iter()
            .rev()
            .fold(S::zero(), |acc, c| acc * z.clone() + c.clone())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.clone() * S::from_usize(k))
                .collect(),
        )
    }

    pub fn nth_derivative(&self, order: usize) -> Self {
        (0..order).fold(self.clone(), |p, _| p.derivative())
    }

    /// Antiderivative with zero constant term.
    pub fn antiderivative(&self) -> Self {
        let mut coeffs = vec![S::zero()];
        coeffs.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| c.clone() / S::from_usize(k + 1)),
        );
        Self::new(coeffs)
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Divide through by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lead) => {
                let inv = S::one() / lead.clone();
                self.scale(&inv)
            }
            None => Self::zero(),
        }
    }

    /// Taylor shift: the polynomial `t -> p(center + t)`.
    pub fn shift(&self, center: &S) -> Self {
        let mut out = Self::zero();
        let t_plus_c = Self::new(vec![center.clone(), S::one()]);
        for c in self.coeffs.iter().rev() {
            out = &(&out * &t_plus_c) + &Self::constant(c.clone());
        }
        out
    }

    /// Long division: `self = divisor * quotient + remainder` with
    /// `deg remainder < deg divisor`.
    pub fn divrem(&self, divisor: &Self) -> Result<(Self, Self), PolyError> {
        let d = divisor.degree().ok_or(PolyError::DivisionByZero)?;
        let lead = divisor.coeffs[d].clone();
        let Some(n) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if n < d {
            return Ok((Self::zero(), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![S::zero(); n - d + 1];
        for k in (0..=n - d).rev() {
            let factor = rem[k + d].clone() / lead.clone();
            for (j, c) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].clone() - factor.clone() * c.clone();
            }
            // cancelled by construction; keep it exact in float mode too
            rem[k + d] = S::zero();
            quot[k] = factor;
        }
        rem.truncate(d);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Square-root extraction from the top: returns `(s, r)` with
    /// `deg s = deg self / 2`, `r = self - s^2` and `deg r < deg s`.
    /// The polynomial is a perfect square iff `r` vanishes. The principal
    /// square root of the leading coefficient is used.
    pub fn sqrt_head(&self) -> Result<(Self, Self), PolyError> {
        let Some(deg) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if deg % 2 == 1 {
            return Err(PolyError::OddDegree(deg));
        }
        let m = deg / 2;
        let lead = self.coeffs[deg].clone();
        let top = lead
            .sqrt()
            .ok_or_else(|| PolyError::NonSquareLeading(lead.render()))?;
        let two_top = top.clone() + top.clone();
        let mut s = vec![S::zero(); m + 1];
        s[m] = top;
        for k in (0..m).rev() {
            let target = m + k;
            let mut acc = self.coeffs[target].clone();
            for i in (k + 1)..m {
                let j = target - i;
                if j > k && j < m {
                    acc = acc - s[i].clone() * s[j].clone();
                }
            }
            s[k] = acc / two_top.clone();
        }
        // orders >= m cancel by construction; only the low part survives
        let r = (0..m)
            .map(|k| {
                (0..=k).fold(self.coeffs[k].clone(), |acc, i| {
                    acc - s[i].clone() * s[k - i].clone()
                })
            })
            .collect();
        Ok((Self::new(s), Self::new(r)))
    }

    /// Square-root extraction from the constant term upward: `s` of degree
    /// `deg self / 2` whose square matches `self` through that degree. Better
    /// conditioned than [`Poly::sqrt_head`] when the leading coefficient is
    /// tiny. `None` for odd degree or a constant term without a square root
    /// (including zero).
    pub fn sqrt_tail(&self) -> Option<Self> {
        let deg = self.degree()?;
        if deg % 2 == 1 || self.coeffs[0].vanishes() {
            return None;
        }
        let m = deg / 2;
        let s0 = self.coeffs[0].sqrt()?;
        let two_s0 = s0.clone() + s0.clone();
        let mut s = vec![s0];
        for k in 1..=m {
            let acc = (1..k).fold(self.coeffs[k].clone(), |acc, i| {
                acc - s[i].clone() * s[k - i].clone()
            });
            s.push(acc / two_s0.clone());
        }
        Some(Self::new(s))
    }

    pub fn to_c64(&self) -> Poly<C64> {
        Poly::new(self.coeffs.iter().map(Scalar::to_c64).collect())
    }

    /// Zero test for derived quantities: exact backend demands the zero
    /// polynomial, the floating backend accepts `max|coeff| <= tol * scale`.
    pub fn is_negligible(&self, scale: f64, tol: f64) -> bool {
        match S::BACKEND {
            Backend::Exact => self.is_zero(),
            Backend::Float => self.max_abs() <= tol * scale,
        }
    }

    /// Maximum coefficient distance to `other`.
    pub fn distance(&self, other: &Self) -> f64 {
        (self - other).max_abs()
    }
}

impl Poly<C64> {
    /// `true` when every coefficient is within `tol * (1 + |c|)` of `other`.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        let n = self.coeffs.len().max(other.coeffs.len());
        (0..n).all(|k| {
            let a = self.coeff(k);
            let b = other.coeff(k);
            (a - b).norm() <= tol * (1.0 + a.norm().max(b.norm()))
        })
    }

    /// All complex roots with multiplicity. See [`roots::roots`].
    pub fn roots(&self) -> Result<Vec<C64>, PolyError> {
        roots::roots(self)
    }
}

impl<S: Scalar> fmt::Debug for Poly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl<S: Scalar> fmt::Display for Poly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.vanishes() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{}", c.render())?,
                1 => write!(f, "{}*z", c.render())?,
                _ => write!(f, "{}*z^{k}", c.render())?,
            }
        }
        Ok(())
    }
}

impl<S: Scalar> Add for &Poly<S> {
    type Output = Poly<S>;
    fn add(self, rhs: &Poly<S>) -> Poly<S> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<S: Scalar> Sub for &Poly<S> {
    type Output = Poly<S>;
    fn sub(self, rhs: &Poly<S>) -> Poly<S> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<S: Scalar> Mul for &Poly<S> {
    type Output = Poly<S>;
    fn mul(self, rhs: &Poly<S>) -> Poly<S> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![S::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

impl<S: Scalar> Neg for &Poly<S> {
    type Output = Poly<S>;
    fn neg(self) -> Poly<S> {
        Poly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl<S: Scalar> $tr for Poly<S> {
            type Output = Poly<S>;
            fn $method(self, rhs: Poly<S>) -> Poly<S> {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<S: Scalar> Neg for Poly<S> {
    type Output = Poly<S>;
    fn neg(self) -> Poly<S> {
        -&self
    }
}

/// A polynomial whose backend is chosen at run time.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyPoly {
    Exact(Poly<ExactComplex>),
    Float(Poly<C64>),
}

impl AnyPoly {
    pub fn backend(&self) -> Backend {
        match self {
            AnyPoly::Exact(_) => Backend::Exact,
            AnyPoly::Float(_) => Backend::Float,
        }
    }

    pub fn parse(text: &str, backend: Backend) -> Result<Self, ParseError> {
        Ok(match backend {
            Backend::Exact => AnyPoly::Exact(Poly::parse(text)?),
            Backend::Float => AnyPoly::Float(Poly::parse(text)?),
        })
    }

    pub fn to_c64(&self) -> Poly<C64> {
        match self {
            AnyPoly::Exact(p) => p.to_c64(),
            AnyPoly::Float(p) => p.clone(),
        }
    }

    fn mismatch(&self, other: &Self) -> PolyError {
        PolyError::BackendMismatch(self.backend().name(), other.backend().name())
    }

    pub fn mul(&self, other: &Self) -> Result<Self, PolyError> {
        match (self, other) {
            (AnyPoly::Exact(a), AnyPoly::Exact(b)) => Ok(AnyPoly::Exact(a * b)),
            (AnyPoly::Float(a), AnyPoly::Float(b)) => Ok(AnyPoly::Float(a * b)),
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn divrem(&self, other: &Self) -> Result<(Self, Self), PolyError> {
        match (self, other) {
            (AnyPoly::Exact(a), AnyPoly::Exact(b)) => {
                let (q, r) = a.divrem(b)?;
                Ok((AnyPoly::Exact(q), AnyPoly::Exact(r)))
            }
            (AnyPoly::Float(a), AnyPoly::Float(b)) => {
                let (q, r) = a.divrem(b)?;
                Ok((AnyPoly::Float(q), AnyPoly::Float(r)))
            }
            _ => Err(self.mismatch(other)),
        }
    }
}

impl fmt::Display for AnyPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnyPoly::Exact(p) => p.fmt(f),
            AnyPoly::Float(p) => p.fmt(f),
        }
    }
}
