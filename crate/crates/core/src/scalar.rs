//! Scalar backends.
//!
//! Everything in the kernel is generic over [`Scalar`]. Two backends are
//! provided: [`Rational`] (arbitrary precision, exact, the ground truth) and
//! `f64` (best effort, with predicates decided up to a relative
//! [`Tolerance`]).

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational scalar. Always kept in lowest terms with a positive
/// denominator by `num_rational`.
pub type Rational = BigRational;

/// Relative tolerance used by the float backend. Ignored by exact scalars.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub eps: f64,
}

impl Tolerance {
    pub const DEFAULT_EPS: f64 = 1e-9;

    pub fn new(eps: f64) -> Self {
        Tolerance { eps }
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            eps: Self::DEFAULT_EPS,
        }
    }
}

/// An ordered field value.
pub trait Scalar:
    Clone
    + fmt::Debug
    + PartialEq
    + PartialOrd
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    /// True when arithmetic is exact and predicates ignore tolerances.
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    /// `num / den`; `den` must be nonzero.
    fn from_ratio(num: i64, den: i64) -> Self;
    /// Exact comparison with zero.
    fn is_zero(&self) -> bool;
    fn abs(&self) -> Self;
    fn to_f64(&self) -> f64;
    /// Parses a decimal (`-1.25`, `3e-2`) or a `p/q` rational.
    fn parse_scalar(text: &str) -> Option<Self>;
    /// Text form used by the file formats: `p/q` for exact values, ten
    /// significant digits for floats.
    fn to_text(&self) -> String;

    /// Zero test for a quantity whose natural magnitude is `scale`.
    /// Exact backends test `== 0`; floats test `|x| <= eps * scale`.
    fn is_negligible(&self, scale: f64, tol: Tolerance) -> bool {
        if Self::EXACT {
            self.is_zero()
        } else {
            self.to_f64().abs() <= tol.eps * scale.abs()
        }
    }

    /// `|x - y| <= eps * max(1, |x|, |y|)` for floats, `x == y` for exact.
    fn approx_eq(&self, other: &Self, tol: Tolerance) -> bool {
        if Self::EXACT {
            self == other
        } else {
            let (x, y) = (self.to_f64(), other.to_f64());
            (x - y).abs() <= tol.eps * 1f64.max(x.abs()).max(y.abs())
        }
    }
}

impl Scalar for Rational {
    const EXACT: bool = true;

    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn abs(&self) -> Self {
        Signed::abs(self)
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn parse_scalar(text: &str) -> Option<Self> {
        parse_rational(text)
    }

    fn to_text(&self) -> String {
        self.to_string()
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn zero() -> Self {
        0.0
    }

    fn one() -> Self {
        1.0
    }

    fn from_i64(v: i64) -> Self {
        v as f64
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }

    fn is_zero(&self) -> bool {
        *self == 0.0
    }

    fn abs(&self) -> Self {
        f64::abs(*self)
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn parse_scalar(text: &str) -> Option<Self> {
        if let Some((p, q)) = text.split_once('/') {
            let p: f64 = p.trim().parse().ok()?;
            let q: f64 = q.trim().parse().ok()?;
            if q == 0.0 {
                return None;
            }
            return Some(p / q);
        }
        let v: f64 = text.trim().parse().ok()?;
        v.is_finite().then_some(v)
    }

    fn to_text(&self) -> String {
        format_significant(*self, 10)
    }
}

/// Parses `p/q`, an integer, or a decimal with optional exponent into an
/// exact rational. Decimals are converted digit by digit, never through f64.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    if let Some((p, q)) = text.split_once('/') {
        let p = parse_rational(p)?;
        let q = parse_rational(q)?;
        if Zero::is_zero(&q) {
            return None;
        }
        return Some(p / q);
    }

    let (mantissa, exponent) = match text.find(['e', 'E']) {
        Some(i) => (&text[..i], text[i + 1..].parse::<i32>().ok()?),
        None => (text, 0),
    };
    let (negative, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part
        .bytes()
        .chain(frac_part.bytes())
        .all(|b| b.is_ascii_digit())
    {
        return None;
    }

    let all_digits = format!("{int_part}{frac_part}");
    let mut numer: BigInt = all_digits.parse().ok()?;
    if negative {
        numer = -numer;
    }
    let shift = exponent - frac_part.len() as i32;
    let ten = BigInt::from(10);
    let value = if shift >= 0 {
        BigRational::from_integer(numer * num_traits::pow(ten, shift as usize))
    } else {
        BigRational::new(numer, num_traits::pow(ten, (-shift) as usize))
    };
    Some(value)
}

/// Formats `x` with at most `digits` significant digits, trailing zeros
/// removed. Positional notation is used for moderate exponents.
pub fn format_significant(x: f64, digits: usize) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let digits = digits.max(1);
    let sci = format!("{:.*e}", digits - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent marker");
    let exp: i32 = exp.parse().expect("integer exponent");
    let (sign, mantissa) = match mantissa.strip_prefix('-') {
        Some(m) => ("-", m),
        None => ("", mantissa),
    };
    let mantissa_digits: String = mantissa.chars().filter(|c| *c != '.').collect();

    if exp < -6 || exp >= digits as i32 {
        let mut m = mantissa.to_string();
        if m.contains('.') {
            m = m.trim_end_matches('0').trim_end_matches('.').to_string();
        }
        return format!("{sign}{m}e{exp}");
    }

    let body = if exp >= 0 {
        let split = exp as usize + 1;
        let (int_part, frac_part) = mantissa_digits.split_at(split.min(mantissa_digits.len()));
        let frac = frac_part.trim_end_matches('0');
        if frac.is_empty() {
            int_part.to_string()
        } else {
            format!("{int_part}.{frac}")
        }
    } else {
        let zeros = "0".repeat((-exp - 1) as usize);
        let frac = format!("{zeros}{mantissa_digits}");
        format!("0.{}", frac.trim_end_matches('0'))
    };
    format!("{sign}{body}")
}

/// Euclidean norm in f64, used to scale float tolerances.
pub(crate) fn norm_f64<S: Scalar>(v: &[S]) -> f64 {
    v.iter().map(|x| x.to_f64().powi(2)).sum::<f64>().sqrt()
}
