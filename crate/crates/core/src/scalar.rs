//! Exact rational and binary64 scalars behind one trait.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::kernels;
use crate::matrix::Matrix;

/// Which arithmetic a computation runs in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Float,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Exact => "exact",
            Mode::Float => "float",
        })
    }
}

/// Field element every kernel in this crate is generic over.
///
/// Each mode supplies its own determinant and rank algorithm; everything
/// else (products, minors, compounds) is shared code.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    const MODE: Mode;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_i64(v: i64) -> Self;
    fn to_f64(&self) -> f64;
    fn abs(&self) -> Self;
    fn is_negative(&self) -> bool;

    /// Parses one matrix-entry literal (`3`, `-7/4`, `0.25`, `1e-3`).
    fn parse_literal(token: &str) -> Result<Self>;

    /// Canonical text: `p/q` (or `p`) for exact values, 17 significant
    /// digits for floats.
    fn render(&self) -> String;

    fn determinant(m: &Matrix<Self>) -> Self;
    fn rank(m: &Matrix<Self>) -> usize;
}

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Exact(BigRational);

impl Exact {
    pub fn new(numer: i64, denom: i64) -> Result<Self> {
        if denom == 0 {
            return Err(Error::ZeroDenominator(format!("{numer}/{denom}")));
        }
        Ok(Exact(BigRational::new(numer.into(), denom.into())))
    }

    pub fn from_ratio(r: BigRational) -> Self {
        Exact(r)
    }

    pub fn from_integer(i: BigInt) -> Self {
        Exact(BigRational::from_integer(i))
    }

    pub fn as_ratio(&self) -> &BigRational {
        &self.0
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }
}

impl fmt::Display for Exact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

/// Finite IEEE binary64 value.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Float(f64);

impl Float {
    pub fn new(v: f64) -> Result<Self> {
        if v.is_finite() {
            Ok(Float(v))
        } else {
            Err(Error::NonFinite(v))
        }
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

impl fmt::Display for Float {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_f64(self.0))
    }
}

macro_rules! forward_binop {
    ($ty:ident, $trait:ident, $method:ident) => {
        impl $trait for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                $ty($trait::$method(self.0, rhs.0))
            }
        }
        impl<'a> $trait<&'a $ty> for &'a $ty {
            type Output = $ty;
            fn $method(self, rhs: &'a $ty) -> $ty {
                $ty($trait::$method(&self.0, &rhs.0))
            }
        }
    };
}

forward_binop!(Exact, Add, add);
forward_binop!(Exact, Sub, sub);
forward_binop!(Exact, Mul, mul);
forward_binop!(Exact, Div, div);
forward_binop!(Float, Add, add);
forward_binop!(Float, Sub, sub);
forward_binop!(Float, Mul, mul);
forward_binop!(Float, Div, div);

impl Neg for Exact {
    type Output = Exact;
    fn neg(self) -> Exact {
        Exact(-self.0)
    }
}

impl Neg for Float {
    type Output = Float;
    fn neg(self) -> Float {
        Float(-self.0)
    }
}

impl Scalar for Exact {
    const MODE: Mode = Mode::Exact;

    fn zero() -> Self {
        Exact(BigRational::zero())
    }
    fn one() -> Self {
        Exact(BigRational::one())
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn from_i64(v: i64) -> Self {
        Exact(BigRational::from_integer(v.into()))
    }
    fn to_f64(&self) -> f64 {
        ratio_to_f64(&self.0)
    }
    fn abs(&self) -> Self {
        Exact(self.0.abs())
    }
    fn is_negative(&self) -> bool {
        self.0.is_negative()
    }
    fn parse_literal(token: &str) -> Result<Self> {
        parse_exact(token).map(Exact)
    }
    fn render(&self) -> String {
        self.0.to_string()
    }
    fn determinant(m: &Matrix<Self>) -> Self {
        kernels::bareiss_determinant(m)
    }
    fn rank(m: &Matrix<Self>) -> usize {
        kernels::exact_rank(m)
    }
}

impl Scalar for Float {
    const MODE: Mode = Mode::Float;

    fn zero() -> Self {
        Float(0.0)
    }
    fn one() -> Self {
        Float(1.0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0.0
    }
    fn from_i64(v: i64) -> Self {
        Float(v as f64)
    }
    fn to_f64(&self) -> f64 {
        self.0
    }
    fn abs(&self) -> Self {
        Float(self.0.abs())
    }
    fn is_negative(&self) -> bool {
        self.0 < 0.0
    }
    fn parse_literal(token: &str) -> Result<Self> {
        match classify(token) {
            Some(LiteralKind::Scientific) => token
                .parse::<f64>()
                .map_err(|e| Error::InvalidArgument(format!("`{token}`: {e}")))
                .and_then(Float::new),
            Some(_) => parse_exact(token).map(|r| Float(ratio_to_f64(&r))),
            None => match token.parse::<f64>() {
                Ok(v) if !v.is_finite() => Err(Error::NonFinite(v)),
                _ => Err(Error::InvalidArgument(format!("`{token}` is not a number"))),
            },
        }
    }
    fn render(&self) -> String {
        format_f64(self.0)
    }
    fn determinant(m: &Matrix<Self>) -> Self {
        kernels::lu_determinant(m)
    }
    fn rank(m: &Matrix<Self>) -> usize {
        kernels::float_rank(m)
    }
}

/// Mode-tagged scalar for callers that only learn the mode at run time.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyScalar {
    Exact(Exact),
    Float(Float),
}

impl AnyScalar {
    pub fn mode(&self) -> Mode {
        match self {
            AnyScalar::Exact(_) => Mode::Exact,
            AnyScalar::Float(_) => Mode::Float,
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            AnyScalar::Exact(x) => x.to_f64(),
            AnyScalar::Float(x) => x.to_f64(),
        }
    }

    pub fn try_add(&self, rhs: &AnyScalar) -> Result<AnyScalar> {
        match (self, rhs) {
            (AnyScalar::Exact(a), AnyScalar::Exact(b)) => Ok(AnyScalar::Exact(a + b)),
            (AnyScalar::Float(a), AnyScalar::Float(b)) => Ok(AnyScalar::Float(*a + *b)),
            _ => Err(Error::ModeMismatch),
        }
    }

    pub fn try_mul(&self, rhs: &AnyScalar) -> Result<AnyScalar> {
        match (self, rhs) {
            (AnyScalar::Exact(a), AnyScalar::Exact(b)) => Ok(AnyScalar::Exact(a * b)),
            (AnyScalar::Float(a), AnyScalar::Float(b)) => Ok(AnyScalar::Float(*a * *b)),
            _ => Err(Error::ModeMismatch),
        }
    }
}

impl fmt::Display for AnyScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnyScalar::Exact(x) => x.fmt(f),
            AnyScalar::Float(x) => x.fmt(f),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum LiteralKind {
    Integer,
    Ratio,
    Decimal,
    Scientific,
}

/// Recognizes the numeric literal grammar without evaluating it.
pub(crate) fn classify(token: &str) -> Option<LiteralKind> {
    fn digits(s: &str) -> bool {
        !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit())
    }
    let unsigned = token.strip_prefix(['+', '-']).unwrap_or(token);
    if digits(unsigned) {
        return Some(LiteralKind::Integer);
    }
    if let Some((p, q)) = unsigned.split_once('/') {
        return (digits(p) && digits(q)).then_some(LiteralKind::Ratio);
    }
    let (mantissa, exponent) = match unsigned.find(['e', 'E']) {
        Some(pos) => (&unsigned[..pos], Some(&unsigned[pos + 1..])),
        None => (unsigned, None),
    };
    let mantissa_ok = match mantissa.split_once('.') {
        Some((int, frac)) => {
            (int.is_empty() || digits(int))
                && (frac.is_empty() || digits(frac))
                && !(int.is_empty() && frac.is_empty())
        }
        None => digits(mantissa),
    };
    if !mantissa_ok {
        return None;
    }
    match exponent {
        None => Some(LiteralKind::Decimal),
        Some(e) => {
            digits(e.strip_prefix(['+', '-']).unwrap_or(e)).then_some(LiteralKind::Scientific)
        }
    }
}

/// Parses integer, `p/q`, decimal and scientific literals exactly.
pub(crate) fn parse_exact(token: &str) -> Result<BigRational> {
    let kind = classify(token)
        .ok_or_else(|| Error::InvalidArgument(format!("`{token}` is not a number")))?;
    let (negative, unsigned) = match token.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, token.strip_prefix('+').unwrap_or(token)),
    };
    let big = |s: &str| -> BigInt { s.parse().expect("digits checked by classify") };
    let value = match kind {
        LiteralKind::Integer => BigRational::from_integer(big(unsigned)),
        LiteralKind::Ratio => {
            let (p, q) = unsigned.split_once('/').expect("ratio has a slash");
            let q = big(q);
            if q.is_zero() {
                return Err(Error::ZeroDenominator(token.to_string()));
            }
            BigRational::new(big(p), q)
        }
        LiteralKind::Decimal | LiteralKind::Scientific => {
            let (mantissa, exp) = match unsigned.find(['e', 'E']) {
                Some(pos) => (
                    &unsigned[..pos],
                    unsigned[pos + 1..]
                        .parse::<i64>()
                        .map_err(|_| Error::InvalidArgument(format!("exponent in `{token}`")))?,
                ),
                None => (unsigned, 0),
            };
            let (int, frac) = mantissa.split_once('.').unwrap_or((mantissa, ""));
            let digits = format!("{int}{frac}");
            let scale = exp - frac.len() as i64;
            if scale.unsigned_abs() > 10_000 {
                return Err(Error::InvalidArgument(format!(
                    "exponent too large in `{token}`"
                )));
            }
            let ten = BigInt::from(10);
            let pow = num_traits::pow(ten, scale.unsigned_abs() as usize);
            let n = big(if digits.is_empty() { "0" } else { &digits });
            if scale >= 0 {
                BigRational::from_integer(n * pow)
            } else {
                BigRational::new(n, pow)
            }
        }
    };
    Ok(if negative { -value } else { value })
}

fn ratio_to_f64(r: &BigRational) -> f64 {
    // Ratio::to_f64 rounds correctly even when numerator and denominator
    // individually overflow f64.
    r.to_f64().unwrap_or_else(|| {
        if r.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

/// Formats like C's `%.17g`: 17 significant digits, trailing zeros dropped,
/// exponent form outside `[1e-4, 1e17)`.
pub fn format_f64(x: f64) -> String {
    if x == 0.0 {
        return if x.is_sign_negative() {
            "-0".into()
        } else {
            "0".into()
        };
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{x:.16e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-4..17).contains(&exp) {
        let decimals = (16 - exp) as usize;
        let fixed = format!("{x:.decimals$}");
        trim_fraction(&fixed).to_string()
    } else {
        let m = trim_fraction(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{m}e{sign}{:02}", exp.abs())
    }
}

fn trim_fraction(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}
