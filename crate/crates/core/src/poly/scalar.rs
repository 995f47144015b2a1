//! Coefficient backends: binary floating point complex numbers and exact
//! Gaussian rationals.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Double-precision complex number, the floating backend.
pub type C64 = Complex<f64>;

/// Complex number with arbitrary-precision rational parts, the exact backend.
pub type ExactComplex = Complex<BigRational>;

/// Relative threshold below which floating coefficients are treated as zero
/// when putting a polynomial in canonical form.
pub const FLOAT_TRIM: f64 = 1e-13;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Backend {
    Exact,
    Float,
}

impl Backend {
    pub fn name(self) -> &'static str {
        match self {
            Backend::Exact => "exact",
            Backend::Float => "float",
        }
    }
}

impl std::str::FromStr for Backend {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "exact" => Ok(Backend::Exact),
            "float" => Ok(Backend::Float),
            other => Err(format!("unknown backend `{other}` (expected exact|float)")),
        }
    }
}

/// Field operations shared by both coefficient backends.
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    const BACKEND: Backend;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn from_ratio(num: i64, den: i64) -> Self;
    fn imag_unit() -> Self;

    /// Exact zero test.
    fn vanishes(&self) -> bool;

    /// Zero test used when trimming a polynomial whose largest coefficient
    /// has magnitude `scale`.
    fn negligible(&self, scale: f64) -> bool;

    fn magnitude(&self) -> f64;
    fn to_c64(&self) -> C64;

    /// Principal square root, or `None` when it does not exist in the
    /// backend (non-square Gaussian rationals).
    fn sqrt(&self) -> Option<Self>;

    /// Parse a real literal: integer, `p/q`, or decimal.
    fn parse_real(text: &str) -> Option<Self>;

    /// Human readable literal accepted back by the polynomial parser.
    fn render(&self) -> String;

    fn from_usize(v: usize) -> Self {
        Self::from_i64(v as i64)
    }
}

impl Scalar for C64 {
    const BACKEND: Backend = Backend::Float;

    fn zero() -> Self {
        Complex::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex::new(1.0, 0.0)
    }
    fn from_i64(v: i64) -> Self {
        Complex::new(v as f64, 0.0)
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        Complex::new(num as f64 / den as f64, 0.0)
    }
    fn imag_unit() -> Self {
        Complex::new(0.0, 1.0)
    }
    fn vanishes(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn negligible(&self, scale: f64) -> bool {
        self.vanishes() || self.norm() <= FLOAT_TRIM * scale
    }
    fn magnitude(&self) -> f64 {
        self.norm()
    }
    fn to_c64(&self) -> C64 {
        *self
    }
    fn sqrt(&self) -> Option<Self> {
        Some(Complex::sqrt(*self))
    }
    fn parse_real(text: &str) -> Option<Self> {
        if let Some((p, q)) = text.split_once('/') {
            let p: f64 = p.parse().ok()?;
            let q: f64 = q.parse().ok()?;
            return Some(Complex::new(p / q, 0.0));
        }
        text.parse::<f64>().ok().map(|v| Complex::new(v, 0.0))
    }
    fn render(&self) -> String {
        if self.im == 0.0 {
            format!("{}", self.re)
        } else if self.re == 0.0 {
            format!("{}i", self.im)
        } else {
            format!("({}{:+}i)", self.re, self.im)
        }
    }
}

fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(BigRational::new(n, d))
    } else {
        None
    }
}

/// Parse `123`, `-7/3` or `0.125` (optionally with an `e` exponent) exactly.
pub fn parse_rational(text: &str) -> Option<BigRational> {
    let text = text.trim();
    if let Some((p, q)) = text.split_once('/') {
        let p: BigInt = p.trim().parse().ok()?;
        let q: BigInt = q.trim().parse().ok()?;
        if q.is_zero() {
            return None;
        }
        return Some(BigRational::new(p, q));
    }
    let (mantissa, exponent) = match text.find(['e', 'E']) {
        Some(pos) => (&text[..pos], text[pos + 1..].parse::<i32>().ok()?),
        None => (text, 0),
    };
    let (negative, mantissa) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits = format!("{int_part}{frac_part}");
    let mut value = BigRational::from_integer(digits.parse::<BigInt>().ok()?);
    let ten = BigRational::from_integer(BigInt::from(10));
    let scale = exponent - frac_part.len() as i32;
    for _ in 0..scale.unsigned_abs() {
        if scale > 0 {
            value = value * ten.clone();
        } else {
            value = value / ten.clone();
        }
    }
    Some(if negative { -value } else { value })
}

fn render_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl Scalar for ExactComplex {
    const BACKEND: Backend = Backend::Exact;

    fn zero() -> Self {
        Complex::new(BigRational::zero(), BigRational::zero())
    }
    fn one() -> Self {
        Complex::new(BigRational::one(), BigRational::zero())
    }
    fn from_i64(v: i64) -> Self {
        Complex::new(BigRational::from_integer(v.into()), BigRational::zero())
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        Complex::new(
            BigRational::new(num.into(), den.into()),
            BigRational::zero(),
        )
    }
    fn imag_unit() -> Self {
        Complex::new(BigRational::zero(), BigRational::one())
    }
    fn vanishes(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn negligible(&self, _scale: f64) -> bool {
        self.vanishes()
    }
    fn magnitude(&self) -> f64 {
        self.to_c64().norm()
    }
    fn to_c64(&self) -> C64 {
        Complex::new(
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im.to_f64().unwrap_or(f64::NAN),
        )
    }
    fn sqrt(&self) -> Option<Self> {
        let (a, b) = (&self.re, &self.im);
        let modulus = rational_sqrt(&(a * a + b * b))?;
        let two = BigRational::from_integer(2.into());
        let x = rational_sqrt(&((a + &modulus) / &two))?;
        if !x.is_zero() {
            let y = b / (&two * &x);
            return Some(Complex::new(x, y));
        }
        // purely imaginary root of a non-positive real
        let y = rational_sqrt(&-a.clone())?;
        Some(Complex::new(BigRational::zero(), y))
    }
    fn parse_real(text: &str) -> Option<Self> {
        parse_rational(text).map(|r| Complex::new(r, BigRational::zero()))
    }
    fn render(&self) -> String {
        if self.im.is_zero() {
            render_rational(&self.re)
        } else if self.re.is_zero() {
            format!("{}i", render_rational(&self.im))
        } else {
            let im = render_rational(&self.im);
            let sign = if self.im.is_negative() { "" } else { "+" };
            format!("({}{sign}{im}i)", render_rational(&self.re))
        }
    }
}

/// Exact complex from a pair of integer ratios.
pub fn exact(re_num: i64, re_den: i64, im_num: i64, im_den: i64) -> ExactComplex {
    Complex::new(
        BigRational::new(re_num.into(), re_den.into()),
        BigRational::new(im_num.into(), im_den.into()),
    )
}

/// Exact real rational.
pub fn ratio(num: i64, den: i64) -> ExactComplex {
    ExactComplex::from_ratio(num, den)
}

pub fn c64(re: f64, im: f64) -> C64 {
    Complex::new(re, im)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_rational_square_roots() {
        // (3+4i) = (2+i)^2
        let r = Scalar::sqrt(&exact(3, 1, 4, 1)).unwrap();
        assert_eq!(r, exact(2, 1, 1, 1));
        // -9/4 -> 3/2 i
        assert_eq!(Scalar::sqrt(&ratio(-9, 4)).unwrap(), exact(0, 1, 3, 2));
        assert!(Scalar::sqrt(&ratio(2, 1)).is_none());
        assert_eq!(Scalar::sqrt(&ratio(0, 1)).unwrap(), ratio(0, 1));
        // -2i = (1-i)^2
        assert_eq!(Scalar::sqrt(&exact(0, 1, -2, 1)).unwrap(), exact(1, 1, -1, 1));
    }

    #[test]
    fn decimal_literals_are_exact() {
        assert_eq!(parse_rational("0.125").unwrap(), BigRational::new(1.into(), 8.into()));
        assert_eq!(parse_rational("-2.5e2").unwrap(), BigRational::from_integer((-250).into()));
        assert_eq!(parse_rational("7/-14").unwrap(), BigRational::new((-1).into(), 2.into()));
        assert!(parse_rational("1/0").is_none());
        assert!(parse_rational("abc").is_none());
    }

    #[test]
    fn float_sqrt_is_principal() {
        let r = Scalar::sqrt(&c64(-4.0, 0.0)).unwrap();
        assert!((r - c64(0.0, 2.0)).norm() < 1e-15);
    }
}
