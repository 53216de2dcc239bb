//! Exact scalars: arbitrary-precision rationals and Gaussian rationals.
//!
//! Rationals are always kept in lowest terms with a positive denominator
//! (this is what `num_rational::BigRational` guarantees). Both types share the
//! [`Field`] trait so matrices, polynomials and elimination can be written once.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::Error;

/// Exact rational number.
pub type Rational = num_rational::BigRational;

/// Builds `num / den` in lowest terms. Panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Integer-valued rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"p"`, `"-p"` or `"p/q"`.
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let t = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    match t.split_once('/') {
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
            let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(BigInt::from_str(t).map_err(|_| bad())?)),
    }
}

/// Renders a rational as `"p/q"`, dropping `q` when it is 1.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Serde adapter for a single [`Rational`] stored as a string.
pub mod rational_str {
    use super::*;

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let raw = RationalRepr::deserialize(d)?;
        raw.into_rational().map_err(de::Error::custom)
    }
}

/// Serde adapter for `Vec<Rational>`.
pub mod rational_vec {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        let strs: Vec<String> = v.iter().map(format_rational).collect();
        strs.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        let raw = Vec::<RationalRepr>::deserialize(d)?;
        raw.into_iter()
            .map(|r| r.into_rational().map_err(de::Error::custom))
            .collect()
    }
}

/// Accepts either `"p/q"` or a bare JSON integer.
#[derive(Deserialize)]
#[serde(untagged)]
pub(crate) enum RationalRepr {
    Str(String),
    Int(i64),
}

impl RationalRepr {
    pub(crate) fn into_rational(self) -> Result<Rational, Error> {
        match self {
            RationalRepr::Str(s) => parse_rational(&s),
            RationalRepr::Int(i) => Ok(int(i)),
        }
    }
}

/// Operations shared by the two exact scalar fields.
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
    fn from_rational(r: Rational) -> Self;

    /// Complex conjugate; identity on the reals.
    fn conj(&self) -> Self;

    fn inv(&self) -> Self {
        Self::one() / self.clone()
    }
}

impl Field for Rational {
    fn from_rational(r: Rational) -> Self {
        r
    }

    fn conj(&self) -> Self {
        self.clone()
    }
}

/// Complex number with rational real and imaginary parts.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn real(re: Rational) -> Self {
        GaussianRational { re, im: Rational::zero() }
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussianRational { re: Rational::zero(), im: Rational::one() }
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        GaussianRational { re: int(re), im: int(im) }
    }

    /// `|z|^2 = re^2 + im^2`.
    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn scale(&self, r: &Rational) -> Self {
        GaussianRational { re: &self.re * r, im: &self.im * r }
    }

    /// Multiplication by `i`.
    pub fn mul_i(&self) -> Self {
        GaussianRational { re: -self.im.clone(), im: self.re.clone() }
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let re = format_rational(&self.re);
        if self.im.is_zero() {
            return write!(f, "{re}");
        }
        let im_abs = format_rational(&self.im.abs());
        let im_part = if self.im.abs().is_one() { "i".to_string() } else { format!("{im_abs}i") };
        if self.re.is_zero() {
            if self.im.is_negative() {
                write!(f, "-{im_part}")
            } else {
                write!(f, "{im_part}")
            }
        } else {
            let sign = if self.im.is_negative() { '-' } else { '+' };
            write!(f, "({re}{sign}{im_part})")
        }
    }
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        GaussianRational { re: Rational::zero(), im: Rational::zero() }
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        GaussianRational { re: Rational::one(), im: Rational::zero() }
    }
}

impl Neg for GaussianRational {
    type Output = Self;
    fn neg(self) -> Self {
        GaussianRational { re: -self.re, im: -self.im }
    }
}

impl Add for GaussianRational {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        GaussianRational { re: self.re + o.re, im: self.im + o.im }
    }
}

impl Sub for GaussianRational {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        GaussianRational { re: self.re - o.re, im: self.im - o.im }
    }
}

impl Mul for GaussianRational {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        GaussianRational {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
}

impl Div for GaussianRational {
    type Output = Self;
    fn div(self, o: Self) -> Self {
        let d = o.norm_sqr();
        assert!(!d.is_zero(), "division by zero Gaussian rational");
        let num = self * o.conj();
        GaussianRational { re: num.re / &d, im: num.im / d }
    }
}

impl Field for GaussianRational {
    fn from_rational(r: Rational) -> Self {
        GaussianRational::real(r)
    }

    fn conj(&self) -> Self {
        GaussianRational { re: self.re.clone(), im: -self.im.clone() }
    }
}

impl From<Rational> for GaussianRational {
    fn from(r: Rational) -> Self {
        GaussianRational::real(r)
    }
}

#[derive(Serialize, Deserialize)]
struct GaussianRepr {
    #[serde(with = "rational_str")]
    re: Rational,
    #[serde(with = "rational_str", default = "Rational::zero")]
    im: Rational,
}

/// Accepted on input: `{"re": "p/q", "im": "r/s"}` or a bare real `"p/q"`.
#[derive(Deserialize)]
#[serde(untagged)]
enum GaussianInput {
    Complex(GaussianRepr),
    Real(RationalRepr),
}

impl Serialize for GaussianRational {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        GaussianRepr { re: self.re.clone(), im: self.im.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for GaussianRational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        match GaussianInput::deserialize(d)? {
            GaussianInput::Complex(g) => Ok(GaussianRational { re: g.re, im: g.im }),
            GaussianInput::Real(r) => Ok(GaussianRational::real(r.into_rational().map_err(de::Error::custom)?)),
        }
    }
}
