//! Coefficient maps: Carathéodory coefficients `c_t` → convex-map
//! coefficients `a_n` → inverse-map coefficients `t_n` → Hankel determinants.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::determinant;
use crate::scalar::{real, ComplexScalar, Scalar};
use crate::series::TruncatedSeries;

/// Coefficients `c₁..c_T` of `p(z) = 1 + Σ c_t zᵗ`.
#[derive(Clone, Debug, PartialEq)]
pub struct CaratheodoryCoeffs<S: Scalar>(Vec<ComplexScalar<S>>);

impl<S: Scalar> CaratheodoryCoeffs<S> {
    pub fn new(c: Vec<ComplexScalar<S>>) -> Self {
        Self(c)
    }

    pub fn from_real(c: &[S]) -> Self {
        Self(c.iter().cloned().map(real).collect())
    }

    /// `c_t` for `t ≥ 1`.
    pub fn get(&self, t: usize) -> Option<&ComplexScalar<S>> {
        t.checked_sub(1).and_then(|i| self.0.get(i))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[ComplexScalar<S>] {
        &self.0
    }

    fn require(&self, needed: usize) -> Result<()> {
        if self.0.len() < needed {
            return Err(Error::InsufficientCoefficients {
                needed,
                available: self.0.len(),
            });
        }
        Ok(())
    }

    fn first4(&self) -> Result<[ComplexScalar<S>; 4]> {
        self.require(4)?;
        Ok([
            self.0[0].clone(),
            self.0[1].clone(),
            self.0[2].clone(),
            self.0[3].clone(),
        ])
    }
}

/// Coefficients `a₂..a_N` of a normalized map `f(z) = z + Σ a_n zⁿ` (`a₁ = 1`).
#[derive(Clone, Debug, PartialEq)]
pub struct SchlichtCoeffs<S: Scalar>(Vec<ComplexScalar<S>>);

impl<S: Scalar> SchlichtCoeffs<S> {
    pub fn new(a: Vec<ComplexScalar<S>>) -> Self {
        Self(a)
    }

    pub fn from_real(a: &[S]) -> Self {
        Self(a.iter().cloned().map(real).collect())
    }

    /// `a_n`, with `a₁ = 1`.
    pub fn get(&self, n: usize) -> Option<ComplexScalar<S>> {
        match n {
            0 => None,
            1 => Some(ComplexScalar::one()),
            n => self.0.get(n - 2).cloned(),
        }
    }

    /// Highest index `N` present.
    pub fn order(&self) -> usize {
        self.0.len() + 1
    }

    pub fn tail(&self) -> &[ComplexScalar<S>] {
        &self.0
    }

    pub fn to_series(&self) -> TruncatedSeries<S> {
        TruncatedSeries::normalized(&self.0)
    }

    fn first4(&self) -> Result<[ComplexScalar<S>; 4]> {
        if self.0.len() < 4 {
            return Err(Error::InsufficientCoefficients {
                needed: 4,
                available: self.0.len(),
            });
        }
        Ok([
            self.0[0].clone(),
            self.0[1].clone(),
            self.0[2].clone(),
            self.0[3].clone(),
        ])
    }
}

/// Coefficients `t₂..t_N` of the inverse map `f⁻¹(w) = w + Σ t_n wⁿ` (`t₁ = 1`).
#[derive(Clone, Debug, PartialEq)]
pub struct InverseCoeffs<S: Scalar>(Vec<ComplexScalar<S>>);

impl<S: Scalar> InverseCoeffs<S> {
    pub fn new(t: Vec<ComplexScalar<S>>) -> Self {
        Self(t)
    }

    pub fn from_real(t: &[S]) -> Self {
        Self(t.iter().cloned().map(real).collect())
    }

    /// Reads `t₂..t_N` off a normalized series.
    pub fn from_series(g: &TruncatedSeries<S>) -> Self {
        Self((2..=g.order()).map(|k| g.coeff(k)).collect())
    }

    /// `t_n`, with `t₁ = 1`.
    pub fn get(&self, n: usize) -> Option<ComplexScalar<S>> {
        match n {
            0 => None,
            1 => Some(ComplexScalar::one()),
            n => self.0.get(n - 2).cloned(),
        }
    }

    pub fn tail(&self) -> &[ComplexScalar<S>] {
        &self.0
    }

    /// `(t₁, t₂, …, t_N)` with the leading one, ready for [`hankel_det`].
    pub fn sequence(&self) -> Vec<ComplexScalar<S>> {
        std::iter::once(ComplexScalar::one())
            .chain(self.0.iter().cloned())
            .collect()
    }
}

/// Convex-map coefficients from `1 + z f''/f' = p`.
///
/// Matching `zⁿ⁻¹` in `(z f')' = p f'` gives
/// `(n² − n) a_n = Σ_{m=1}^{n−1} m a_m c_{n−m}`, valid for any `n`.
pub fn convex_from_caratheodory<S: Scalar>(
    c: &CaratheodoryCoeffs<S>,
    n: usize,
) -> Result<SchlichtCoeffs<S>> {
    if n < 2 {
        return Err(Error::InvalidConfig(format!("order {n} < 2")));
    }
    c.require(n - 1)?;
    let mut a: Vec<ComplexScalar<S>> = Vec::with_capacity(n);
    a.push(ComplexScalar::one());
    for k in 2..=n {
        let mut acc = ComplexScalar::<S>::zero();
        for m in 1..k {
            let weight = real(S::from_i64(m as i64));
            acc = acc + weight * &a[m - 1] * &c.0[k - m - 1];
        }
        let denom = S::from_i64((k * k - k) as i64);
        a.push(acc.unscale(denom));
    }
    a.remove(0);
    Ok(SchlichtCoeffs(a))
}

/// Closed-form `t₂..t₅` from `a₂..a₅`.
pub fn inverse_from_schlicht<S: Scalar>(a: &SchlichtCoeffs<S>) -> Result<InverseCoeffs<S>> {
    let [a2, a3, a4, a5] = a.first4()?;
    let k = |n: i64| real(S::from_i64(n));
    let a2sq = &a2 * &a2;
    let t2 = -a2.clone();
    let t3 = k(2) * &a2sq - &a3;
    let t4 = -a4.clone() + k(5) * &a2 * &a3 - k(5) * &a2sq * &a2;
    let t5 = -a5 + k(6) * &a2 * &a4 - k(21) * &a2sq * &a3 + k(3) * &a3 * &a3 + k(14) * &a2sq * &a2sq;
    Ok(InverseCoeffs(vec![t2, t3, t4, t5]))
}

/// Inverse coefficients through generic series reversion, any order.
pub fn inverse_by_reversion<S: Scalar>(a: &SchlichtCoeffs<S>) -> Result<InverseCoeffs<S>> {
    Ok(InverseCoeffs::from_series(&a.to_series().revert()?))
}

/// Closed-form `t₂..t₅` directly from `c₁..c₄`.
pub fn inverse_from_caratheodory<S: Scalar>(c: &CaratheodoryCoeffs<S>) -> Result<InverseCoeffs<S>> {
    let [c1, c2, c3, c4] = c.first4()?;
    let k = |n: i64| real(S::from_i64(n));
    let c1sq = &c1 * &c1;
    let t2 = (-c1.clone()).unscale(S::from_i64(2));
    let t3 = (k(2) * &c1sq - &c2).unscale(S::from_i64(6));
    let t4 = (k(-6) * &c1sq * &c1 + k(7) * &c1 * &c2 - k(2) * &c3).unscale(S::from_i64(24));
    let t5 = (k(-6) * &c4 + k(22) * &c1 * &c3 - k(46) * &c1sq * &c2
        + k(7) * &c2 * &c2
        + k(24) * &c1sq * &c1sq)
        .unscale(S::from_i64(120));
    Ok(InverseCoeffs(vec![t2, t3, t4, t5]))
}

/// `H_{r,n}`: determinant of the `r×r` Hankel matrix `[x_{n+i+j}]`, where
/// `seq[0]` holds `x₁`.
pub fn hankel_det<S: Scalar>(
    r: usize,
    n: usize,
    seq: &[ComplexScalar<S>],
) -> Result<ComplexScalar<S>> {
    if r == 0 || n == 0 {
        return Err(Error::InvalidConfig("Hankel indices start at 1".into()));
    }
    let last = n + 2 * r - 2;
    if seq.len() < last {
        return Err(Error::InsufficientCoefficients {
            needed: last,
            available: seq.len(),
        });
    }
    let m = (0..r)
        .map(|i| (0..r).map(|j| seq[n - 1 + i + j].clone()).collect())
        .collect();
    Ok(determinant(m))
}

/// `H₃,₁ = 2t₂t₃t₄ − t₃³ − t₄² + t₃t₅ − t₂²t₅` for `t₁ = 1`.
pub fn h31_from_t<S: Scalar>(t: &InverseCoeffs<S>) -> Result<ComplexScalar<S>> {
    if t.0.len() < 4 {
        return Err(Error::InsufficientCoefficients {
            needed: 4,
            available: t.0.len(),
        });
    }
    let [t2, t3, t4, t5] = [&t.0[0], &t.0[1], &t.0[2], &t.0[3]];
    let two = real(S::from_i64(2));
    Ok(two * t2 * t3 * t4 - t3 * t3 * t3 - t4 * t4 + t3 * t5 - t2 * t2 * t5)
}

/// `H₃,₁(f⁻¹)` as a polynomial in `c₁..c₄`, divided by 8640.
pub fn h31_from_c<S: Scalar>(c: &CaratheodoryCoeffs<S>) -> Result<ComplexScalar<S>> {
    let [c1, c2, c3, c4] = c.first4()?;
    let k = |n: i64| real(S::from_i64(n));
    let c1sq = &c1 * &c1;
    let bracket = k(4) * &c1sq * &c1sq * &c1sq - k(24) * &c1sq * &c1sq * &c2
        + k(12) * &c1sq * &c1 * &c3
        + k(39) * &c1sq * &c2 * &c2
        - k(44) * &c2 * &c2 * &c2
        + k(36) * &c1 * &c2 * &c3
        - k(36) * &c1sq * &c4
        - k(60) * &c3 * &c3
        + k(72) * &c2 * &c4;
    Ok(bracket.unscale(S::from_i64(8640)))
}

/// Full pipeline `c → a → t → H₃,₁(f⁻¹)`.
pub fn h31_pipeline<S: Scalar>(c: &CaratheodoryCoeffs<S>) -> Result<ComplexScalar<S>> {
    let a = convex_from_caratheodory(c, 5)?;
    let t = inverse_from_schlicht(&a)?;
    h31_from_t(&t)
}
