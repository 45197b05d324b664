//! Truncated formal power series `c₀ + c₁z + … + c_N z^N`.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{real, CoeffText, ComplexScalar, Scalar};

/// Default truncation order: enough for a₂..a₅ and t₂..t₅.
pub const DEFAULT_ORDER: usize = 5;

/// Power series truncated after `z^order`.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries<S: Scalar> {
    constant: ComplexScalar<S>,
    /// `coeffs[k - 1]` is the coefficient of `z^k`.
    coeffs: Vec<ComplexScalar<S>>,
}

impl<S: Scalar> TruncatedSeries<S> {
    /// Builds a series from its constant term and the coefficients of `z¹..z^N`.
    pub fn new(constant: ComplexScalar<S>, coeffs: Vec<ComplexScalar<S>>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidConfig("series order must be positive".into()));
        }
        Ok(Self { constant, coeffs })
    }

    /// Normalized series `z + a₂z² + …` from real coefficients `a₂..a_N`.
    pub fn normalized_real(tail: &[S]) -> Self {
        let mut coeffs = Vec::with_capacity(tail.len() + 1);
        coeffs.push(ComplexScalar::one());
        coeffs.extend(tail.iter().cloned().map(real));
        Self {
            constant: ComplexScalar::zero(),
            coeffs,
        }
    }

    /// Normalized series `z + a₂z² + …` from complex coefficients `a₂..a_N`.
    pub fn normalized(tail: &[ComplexScalar<S>]) -> Self {
        let mut coeffs = Vec::with_capacity(tail.len() + 1);
        coeffs.push(ComplexScalar::one());
        coeffs.extend_from_slice(tail);
        Self {
            constant: ComplexScalar::zero(),
            coeffs,
        }
    }

    pub fn zero(order: usize) -> Self {
        assert!(order > 0, "series order must be positive");
        Self {
            constant: ComplexScalar::zero(),
            coeffs: vec![ComplexScalar::zero(); order],
        }
    }

    pub fn constant(order: usize, c: ComplexScalar<S>) -> Self {
        let mut s = Self::zero(order);
        s.constant = c;
        s
    }

    /// The identity map `z`.
    pub fn identity(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = ComplexScalar::one();
        s
    }

    /// Truncation of `z/(1 - z) = z + z² + …`.
    pub fn geometric(order: usize) -> Self {
        Self {
            constant: ComplexScalar::zero(),
            coeffs: vec![ComplexScalar::one(); order],
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficient of `z^k`; zero beyond the truncation order.
    pub fn coeff(&self, k: usize) -> ComplexScalar<S> {
        match k {
            0 => self.constant.clone(),
            k if k <= self.order() => self.coeffs[k - 1].clone(),
            _ => ComplexScalar::zero(),
        }
    }

    pub fn constant_term(&self) -> &ComplexScalar<S> {
        &self.constant
    }

    /// Coefficients of `z¹..z^N`.
    pub fn coefficients(&self) -> &[ComplexScalar<S>] {
        &self.coeffs
    }

    pub fn is_normalized(&self) -> bool {
        self.constant.is_zero() && self.coeffs[0].is_one()
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    fn dense(&self) -> Vec<ComplexScalar<S>> {
        (0..=self.order()).map(|k| self.coeff(k)).collect()
    }

    fn from_dense(mut dense: Vec<ComplexScalar<S>>) -> Self {
        let constant = dense.remove(0);
        Self {
            constant,
            coeffs: dense,
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Self {
            constant: &self.constant + &other.constant,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Self {
            constant: &self.constant - &other.constant,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn scale(&self, k: &ComplexScalar<S>) -> Self {
        Self {
            constant: &self.constant * k,
            coeffs: self.coeffs.iter().map(|a| a * k).collect(),
        }
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let n = self.order();
        let a = self.dense();
        let b = other.dense();
        let mut out = vec![ComplexScalar::<S>::zero(); n + 1];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate().take(n + 1 - i) {
                out[i + j] = &out[i + j] + ai * bj;
            }
        }
        Self::from_dense(out)
    }

    /// `outer ∘ inner`, truncated. `inner` must have zero constant term.
    pub fn compose(outer: &Self, inner: &Self) -> Result<Self> {
        outer.check_order(inner)?;
        if !inner.constant.is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let n = outer.order();
        // Horner in the ring of truncated series.
        let mut acc = Self::constant(n, outer.coeff(n));
        for k in (0..n).rev() {
            acc = acc.mul_unchecked(inner);
            acc.constant = &acc.constant + outer.coeff(k);
        }
        Ok(acc)
    }

    /// Compositional inverse of a normalized series.
    ///
    /// Keeps `P[j][m] = [wᵐ] gʲ` for the partial inverse `g`. Column `m` of
    /// `P` for `j ≥ 2` only involves `t₁..t_{m−1}`, and `[wᵐ] f(g) = 0` then
    /// gives `t_m = −Σ_{j≥2} a_j P[j][m]`.
    pub fn revert(&self) -> Result<Self> {
        if !self.is_normalized() {
            return Err(Error::NotNormalized);
        }
        let n = self.order();
        let zero = ComplexScalar::<S>::zero();
        let mut t = vec![zero.clone(); n + 1];
        // pow[j][m], with row 0 unused.
        let mut pow = vec![vec![zero.clone(); n + 1]; n + 1];
        if n >= 1 {
            t[1] = ComplexScalar::one();
            pow[1][1] = ComplexScalar::one();
        }
        for m in 2..=n {
            let mut acc = zero.clone();
            for j in (2..=m).rev() {
                let mut c = zero.clone();
                for i in 1..=m - j + 1 {
                    c = c + &t[i] * &pow[j - 1][m - i];
                }
                acc = acc + self.coeff(j) * &c;
                pow[j][m] = c;
            }
            t[m] = -acc;
            pow[1][m] = t[m].clone();
        }
        Self::new(zero, t.split_off(1))
    }

    /// Converts an exact series to floating mode.
    pub fn to_f64(&self) -> TruncatedSeries<f64> {
        TruncatedSeries {
            constant: crate::scalar::complex_to_f64(&self.constant),
            coeffs: self
                .coeffs
                .iter()
                .map(crate::scalar::complex_to_f64)
                .collect(),
        }
    }
}

impl<S: Scalar + CoeffText> TruncatedSeries<S> {
    /// Text form `series[N] c0 c1 … cN`.
    pub fn to_text(&self) -> String {
        let mut out = format!("series[{}]", self.order());
        for c in self.dense() {
            out.push(' ');
            out.push_str(&c.to_text());
        }
        out
    }

    pub fn parse_text(s: &str) -> Result<Self> {
        let mut tokens = s.split_whitespace();
        let head = tokens
            .next()
            .ok_or_else(|| Error::Parse("empty series text".into()))?;
        let order: usize = head
            .strip_prefix("series[")
            .and_then(|h| h.strip_suffix(']'))
            .and_then(|n| n.parse().ok())
            .ok_or_else(|| Error::Parse(format!("bad series header `{head}`")))?;
        let dense = tokens
            .map(ComplexScalar::<S>::parse_text)
            .collect::<Result<Vec<_>>>()?;
        if order == 0 || dense.len() != order + 1 {
            return Err(Error::Parse(format!(
                "series[{order}] needs {} coefficients, found {}",
                order + 1,
                dense.len()
            )));
        }
        Ok(Self::from_dense(dense))
    }
}

impl<S: Scalar + CoeffText> fmt::Display for TruncatedSeries<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}
