//! Scalar arithmetic in two modes.
//!
//! Exact values are `BigRational`s (reduced, positive denominator, enforced by
//! `num-rational` after every operation); floating values are `f64`. Code that
//! is generic over [`Scalar`] is instantiated with one or the other, so a
//! single expression can never mix the two modes.

use std::fmt::Debug;
use std::ops::Neg;

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{Num, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Absolute tolerance used by floating-mode zero tests.
pub const FLOAT_ZERO_TOL: f64 = 1e-12;

/// Exact rational scalar.
pub type ExactScalar = BigRational;

/// Complex scalar; real and imaginary parts share one arithmetic mode.
pub type ComplexScalar<S> = Complex<S>;

/// A real field element usable by every generic routine in the crate.
pub trait Scalar:
    Clone + Debug + PartialEq + PartialOrd + Num + Neg<Output = Self> + Send + Sync + 'static
{
    /// `true` for rational arithmetic, `false` for `f64`.
    const EXACT: bool;

    fn from_i64(n: i64) -> Self;

    /// `num / den`; `den` must be nonzero.
    fn from_ratio(num: i64, den: i64) -> Self;

    fn from_rational(r: &BigRational) -> Self;

    fn to_f64(&self) -> f64;

    /// Exact zero in exact mode, `|x| <= FLOAT_ZERO_TOL` in floating mode.
    fn is_negligible(&self) -> bool;

    fn magnitude(&self) -> Self {
        if *self < Self::zero() {
            -self.clone()
        } else {
            self.clone()
        }
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn from_i64(n: i64) -> Self {
        n as f64
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }

    fn from_rational(r: &BigRational) -> Self {
        ToPrimitive::to_f64(r).unwrap_or(f64::NAN)
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn is_negligible(&self) -> bool {
        f64::abs(*self) <= FLOAT_ZERO_TOL
    }
}

impl Scalar for BigRational {
    const EXACT: bool = true;

    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    fn from_rational(r: &BigRational) -> Self {
        r.clone()
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn is_negligible(&self) -> bool {
        self.is_zero()
    }

    fn magnitude(&self) -> Self {
        self.abs()
    }
}

/// Shorthand for `num/den` as an exact scalar.
pub fn rat(num: i64, den: i64) -> ExactScalar {
    ExactScalar::from_ratio(num, den)
}

/// Real value lifted to a complex scalar.
pub fn real<S: Scalar>(x: S) -> ComplexScalar<S> {
    Complex::new(x, S::zero())
}

pub fn complex_is_negligible<S: Scalar>(z: &ComplexScalar<S>) -> bool {
    z.re.is_negligible() && z.im.is_negligible()
}

/// Converts an exact complex value to floating mode.
pub fn complex_to_f64<S: Scalar>(z: &ComplexScalar<S>) -> Complex<f64> {
    Complex::new(z.re.to_f64(), z.im.to_f64())
}

/// Scalars with a lossless text form.
///
/// Exact values print as `p/q` (denominator always written); floats use the
/// shortest round-tripping decimal form.
pub trait CoeffText: Sized {
    fn to_text(&self) -> String;
    fn parse_text(s: &str) -> Result<Self>;
}

impl CoeffText for BigRational {
    fn to_text(&self) -> String {
        format!("{}/{}", self.numer(), self.denom())
    }

    fn parse_text(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("invalid rational `{s}`"));
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n, d),
            None => (s, "1"),
        };
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        Ok(BigRational::new(n, d))
    }
}

impl CoeffText for f64 {
    fn to_text(&self) -> String {
        format!("{self:?}")
    }

    fn parse_text(s: &str) -> Result<Self> {
        s.trim()
            .parse()
            .map_err(|_| Error::Parse(format!("invalid float `{s}`")))
    }
}

/// Complex values print as `re` when the imaginary part is zero and
/// `re,im` otherwise.
impl<S: Scalar + CoeffText> CoeffText for Complex<S> {
    fn to_text(&self) -> String {
        if self.im.is_zero() {
            self.re.to_text()
        } else {
            format!("{},{}", self.re.to_text(), self.im.to_text())
        }
    }

    fn parse_text(s: &str) -> Result<Self> {
        match s.split_once(',') {
            Some((re, im)) => Ok(Complex::new(S::parse_text(re)?, S::parse_text(im)?)),
            None => Ok(real(S::parse_text(s)?)),
        }
    }
}

/// `true` when `x` is an integer multiple of one (exact mode helper).
pub fn is_integral(x: &BigRational) -> bool {
    x.denom().is_one()
}
