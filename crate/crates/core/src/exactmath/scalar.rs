//! Gaussian rationals: `p/q + (r/s)i` with arbitrary-precision parts.
//!
//! Every construction in this crate is polynomial in its parameters, so
//! computing over the rational-complex subfield is exact and loses nothing.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always stored reduced with a positive denominator.
pub type ExactRational = BigRational;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExactComplex {
    pub re: ExactRational,
    pub im: ExactRational,
}

impl ExactComplex {
    pub fn new(re: ExactRational, im: ExactRational) -> Self {
        Self { re, im }
    }

    pub fn real(re: ExactRational) -> Self {
        Self { re, im: ExactRational::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::real(ExactRational::from_integer(BigInt::from(n)))
    }

    /// `num/den` as a real scalar.
    pub fn ratio(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::real(ExactRational::new(BigInt::from(num), BigInt::from(den))))
    }

    pub fn i() -> Self {
        Self { re: ExactRational::zero(), im: ExactRational::one() }
    }

    pub fn zero() -> Self {
        Self { re: ExactRational::zero(), im: ExactRational::zero() }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self { re: self.re.clone(), im: -&self.im }
    }

    /// `|z|²`, always a nonnegative rational.
    pub fn norm_sqr(&self) -> ExactRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm_sqr();
        Ok(Self { re: &self.re / &n, im: -&self.im / &n })
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inverse()?)
    }

    pub fn pow(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Floating approximation `(re, im)`, for display only.
    pub fn to_f64_parts(&self) -> (f64, f64) {
        (
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im.to_f64().unwrap_or(f64::NAN),
        )
    }
}

impl From<i64> for ExactComplex {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<ExactRational> for ExactComplex {
    fn from(r: ExactRational) -> Self {
        Self::real(r)
    }
}

impl Add<&ExactComplex> for &ExactComplex {
    type Output = ExactComplex;
    fn add(self, rhs: &ExactComplex) -> ExactComplex {
        ExactComplex { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl Sub<&ExactComplex> for &ExactComplex {
    type Output = ExactComplex;
    fn sub(self, rhs: &ExactComplex) -> ExactComplex {
        ExactComplex { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl Mul<&ExactComplex> for &ExactComplex {
    type Output = ExactComplex;
    fn mul(self, rhs: &ExactComplex) -> ExactComplex {
        if self.im.is_zero() && rhs.im.is_zero() {
            return ExactComplex::real(&self.re * &rhs.re);
        }
        ExactComplex {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Neg for &ExactComplex {
    type Output = ExactComplex;
    fn neg(self) -> ExactComplex {
        ExactComplex { re: -&self.re, im: -&self.im }
    }
}

impl Neg for ExactComplex {
    type Output = ExactComplex;
    fn neg(self) -> ExactComplex {
        ExactComplex { re: -self.re, im: -self.im }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<ExactComplex> for ExactComplex {
            type Output = ExactComplex;
            fn $method(self, rhs: ExactComplex) -> ExactComplex {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&ExactComplex> for ExactComplex {
            type Output = ExactComplex;
            fn $method(self, rhs: &ExactComplex) -> ExactComplex {
                (&self).$method(rhs)
            }
        }
        impl $tr<ExactComplex> for &ExactComplex {
            type Output = ExactComplex;
            fn $method(self, rhs: ExactComplex) -> ExactComplex {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&ExactComplex> for ExactComplex {
    fn add_assign(&mut self, rhs: &ExactComplex) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&ExactComplex> for ExactComplex {
    fn sub_assign(&mut self, rhs: &ExactComplex) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl std::iter::Sum for ExactComplex {
    fn sum<I: Iterator<Item = ExactComplex>>(iter: I) -> Self {
        iter.fold(ExactComplex::zero(), |mut acc, x| {
            acc += &x;
            acc
        })
    }
}

fn fmt_rational(r: &ExactRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if r.is_integer() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

/// Formats as `p/q`, `r/si`, or `p/q+r/si` (integers without a denominator).
impl fmt::Display for ExactComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return fmt_rational(&self.re, f);
        }
        if !self.re.is_zero() {
            fmt_rational(&self.re, f)?;
            if self.im.is_positive() {
                f.write_str("+")?;
            }
        }
        fmt_rational(&self.im, f)?;
        f.write_str("i")
    }
}

fn parse_rational(s: &str) -> Result<ExactRational> {
    let bad = || Error::Parse(format!("malformed rational {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let num = num.strip_prefix('+').unwrap_or(num);
    if num.is_empty() || num.starts_with('+') {
        return Err(bad());
    }
    let num: BigInt = num.parse().map_err(|_| bad())?;
    match den {
        None => Ok(ExactRational::from_integer(num)),
        Some(d) => {
            if d.starts_with(['+', '-']) {
                return Err(bad());
            }
            let den: BigInt = d.parse().map_err(|_| bad())?;
            if den.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(ExactRational::new(num, den))
        }
    }
}

/// Parses the textual scalar format: `p/q`, `p`, `p/q+r/si`, `-3/2-i`, `i`.
/// Whitespace anywhere is ignored.
impl FromStr for ExactComplex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty scalar".into()));
        }
        let Some(body) = compact.strip_suffix('i') else {
            return Ok(Self::real(parse_rational(&compact)?));
        };
        // Split at the last sign that is not the leading character.
        let split = body
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(i, _)| i)
            .last();
        let (re_part, im_part) = match split {
            Some(i) => (&body[..i], &body[i..]),
            None => ("", body),
        };
        let im = match im_part {
            "" | "+" => ExactRational::one(),
            "-" => -ExactRational::one(),
            other => parse_rational(other)?,
        };
        let re = if re_part.is_empty() {
            ExactRational::zero()
        } else {
            parse_rational(re_part)?
        };
        Ok(Self { re, im })
    }
}
