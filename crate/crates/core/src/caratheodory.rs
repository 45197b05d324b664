//! Generating Carathéodory coefficients.
//!
//! Two models are provided: the four-parameter `(c₁, μ, ρ, ψ)` description of
//! `c₁..c₄` with `c₁ ∈ [0, 2]` and `μ, ρ, ψ` in the closed unit disk, and
//! atomic Herglotz measures `p(z) = Σ λ_k (1 + x_k z)/(1 − x_k z)`.

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::coefficients::CaratheodoryCoeffs;
use crate::error::{Error, Result};
use crate::scalar::{real, ComplexScalar, ExactScalar, Scalar, FLOAT_ZERO_TOL};

/// Eigenvalue floor accepted as positive semidefinite.
pub const PSD_TOL: f64 = -1e-10;

/// Parameters `(c₁, μ, ρ, ψ)`; `ν = 4 − c₁²` is derived on demand.
#[derive(Clone, Debug, PartialEq)]
pub struct LzParams<S: Scalar> {
    c1: S,
    mu: ComplexScalar<S>,
    rho: ComplexScalar<S>,
    psi: ComplexScalar<S>,
}

fn within_unit_disk<S: Scalar>(z: &ComplexScalar<S>) -> bool {
    let r2 = z.norm_sqr();
    if S::EXACT {
        r2 <= S::one()
    } else {
        r2.to_f64().sqrt() <= 1.0 + FLOAT_ZERO_TOL
    }
}

impl<S: Scalar> LzParams<S> {
    pub fn new(
        c1: S,
        mu: ComplexScalar<S>,
        rho: ComplexScalar<S>,
        psi: ComplexScalar<S>,
    ) -> Result<Self> {
        if !(c1 >= S::zero() && c1 <= S::from_i64(2)) {
            return Err(Error::ConstraintViolation(format!(
                "c1 = {} not in [0, 2]",
                c1.to_f64()
            )));
        }
        for (name, z) in [("mu", &mu), ("rho", &rho), ("psi", &psi)] {
            if !within_unit_disk(z) {
                return Err(Error::ConstraintViolation(format!(
                    "|{name}| = {} exceeds 1",
                    z.norm_sqr().to_f64().sqrt()
                )));
            }
        }
        Ok(Self { c1, mu, rho, psi })
    }

    /// Real `μ`, `ρ`, `ψ`.
    pub fn real(c1: S, mu: S, rho: S, psi: S) -> Result<Self> {
        Self::new(c1, real(mu), real(rho), real(psi))
    }

    pub fn c1(&self) -> &S {
        &self.c1
    }

    pub fn mu(&self) -> &ComplexScalar<S> {
        &self.mu
    }

    pub fn rho(&self) -> &ComplexScalar<S> {
        &self.rho
    }

    pub fn psi(&self) -> &ComplexScalar<S> {
        &self.psi
    }

    pub fn nu(&self) -> S {
        S::from_i64(4) - self.c1.clone() * self.c1.clone()
    }
}

/// `c₁..c₄` from the four parameters.
///
/// ```text
/// 2c₂ = c₁² + νμ
/// 4c₃ = c₁³ + 2c₁νμ − c₁νμ² + 2ν(1−|μ|²)ρ
/// 8c₄ = c₁⁴ + 3c₁²νμ + (4−3c₁²)νμ² + c₁²νμ³ + 4ν(1−|μ|²)(1−|ρ|²)ψ
///       + 4ν(1−|μ|²)(c₁ρ − c₁μρ − μ̄ρ²)
/// ```
pub fn lz_expand<S: Scalar>(p: &LzParams<S>) -> CaratheodoryCoeffs<S> {
    let k = |n: i64| real(S::from_i64(n));
    let c1 = real(p.c1.clone());
    let nu = real(p.nu());
    let (mu, rho, psi) = (&p.mu, &p.rho, &p.psi);
    let one = ComplexScalar::<S>::one();
    let one_m_mu2 = &one - real(mu.norm_sqr());
    let one_m_rho2 = &one - real(rho.norm_sqr());
    let c1sq = &c1 * &c1;
    let mu2 = mu * mu;

    let c2 = (&c1sq + &nu * mu).unscale(S::from_i64(2));
    let c3 = (&c1sq * &c1 + k(2) * &c1 * &nu * mu - &c1 * &nu * &mu2
        + k(2) * &nu * &one_m_mu2 * rho)
        .unscale(S::from_i64(4));
    let c4 = (&c1sq * &c1sq
        + k(3) * &c1sq * &nu * mu
        + (k(4) - k(3) * &c1sq) * &nu * &mu2
        + &c1sq * &nu * &mu2 * mu
        + k(4) * &nu * &one_m_mu2 * &one_m_rho2 * psi
        + k(4) * &nu * &one_m_mu2 * (&c1 * rho - &c1 * mu * rho - mu.conj() * rho * rho))
        .unscale(S::from_i64(8));
    CaratheodoryCoeffs::new(vec![c1, c2, c3, c4])
}

/// `H₃,₁(f⁻¹)` written directly in the parameters, `u = c₁`:
///
/// ```text
/// (4−u²)²/8640 · [ ¾u²μ² + 3⁄2u²μ³ + ¾u²μ⁴ − (4−u²)μ³
///                  − 3uμ(1+μ)(1−|μ|²)ρ − 3(5+|μ|²)(1−|μ|²)ρ²
///                  + 18μ(1−|μ|²)(1−|ρ|²)ψ ]
/// ```
pub fn h31_lz<S: Scalar>(p: &LzParams<S>) -> ComplexScalar<S> {
    let q = |a: i64, b: i64| real(S::from_ratio(a, b));
    let u = real(p.c1.clone());
    let (mu, rho, psi) = (&p.mu, &p.rho, &p.psi);
    let one = ComplexScalar::<S>::one();
    let mu_abs2 = real(mu.norm_sqr());
    let one_m_mu2 = &one - &mu_abs2;
    let one_m_rho2 = &one - real(rho.norm_sqr());
    let u2 = &u * &u;
    let mu2 = mu * mu;
    let mu3 = &mu2 * mu;
    let bracket = q(3, 4) * &u2 * &mu2 + q(3, 2) * &u2 * &mu3 + q(3, 4) * &u2 * &mu2 * &mu2
        - (q(4, 1) - &u2) * &mu3
        - q(3, 1) * &u * mu * (&one + mu) * &one_m_mu2 * rho
        - q(3, 1) * (q(5, 1) + &mu_abs2) * &one_m_mu2 * rho * rho
        + q(18, 1) * mu * &one_m_mu2 * &one_m_rho2 * psi;
    let pre = p.nu() * p.nu();
    (bracket * real(pre)).unscale(S::from_i64(8640))
}

/// Probability measure with finitely many atoms on the unit circle.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HerglotzMeasure {
    atoms: Vec<(f64, Complex<f64>)>,
}

impl HerglotzMeasure {
    /// Weights must be nonnegative and sum to one, positions unimodular
    /// (both to within `1e-12`).
    pub fn new(atoms: Vec<(f64, Complex<f64>)>) -> Result<Self> {
        if atoms.is_empty() {
            return Err(Error::EmptyMeasure);
        }
        let total: f64 = atoms.iter().map(|a| a.0).sum();
        if atoms.iter().any(|a| a.0.is_nan() || a.0 < 0.0) || (total - 1.0).abs() > FLOAT_ZERO_TOL {
            return Err(Error::ConstraintViolation(format!(
                "weights must be nonnegative with unit sum (sum = {total})"
            )));
        }
        if let Some(bad) = atoms
            .iter()
            .find(|a| (a.1.norm() - 1.0).abs() > FLOAT_ZERO_TOL)
        {
            return Err(Error::ConstraintViolation(format!(
                "atom at modulus {} is off the unit circle",
                bad.1.norm()
            )));
        }
        Ok(Self { atoms })
    }

    /// `k` equal atoms at the `k`-th roots of unity: `p(z) = (1+zᵏ)/(1−zᵏ)`.
    pub fn roots_of_unity(k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::EmptyMeasure);
        }
        let atoms = (0..k)
            .map(|j| {
                let theta = std::f64::consts::TAU * j as f64 / k as f64;
                (1.0 / k as f64, Complex::from_polar(1.0, theta))
            })
            .collect();
        Self::new(atoms)
    }

    pub fn atoms(&self) -> &[(f64, Complex<f64>)] {
        &self.atoms
    }
}

/// `c_t = 2 Σ_k λ_k x_kᵗ` for `t = 1..T`.
pub fn herglotz_coeffs(m: &HerglotzMeasure, count: usize) -> CaratheodoryCoeffs<f64> {
    let mut powers: Vec<Complex<f64>> = m.atoms.iter().map(|a| a.1).collect();
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let s: Complex<f64> = m
            .atoms
            .iter()
            .zip(&powers)
            .map(|(a, x)| x * a.0)
            .sum();
        out.push(s * 2.0);
        for (p, a) in powers.iter_mut().zip(&m.atoms) {
            *p *= a.1;
        }
    }
    CaratheodoryCoeffs::new(out)
}

/// Exact coefficients of `(1+zᵏ)/(1−zᵏ)`: `c_t = 2` when `k | t`, else 0.
pub fn roots_of_unity_coeffs_exact(k: usize, count: usize) -> Result<CaratheodoryCoeffs<ExactScalar>> {
    if k == 0 {
        return Err(Error::EmptyMeasure);
    }
    Ok(CaratheodoryCoeffs::new(
        (1..=count)
            .map(|t| {
                real(if t % k == 0 {
                    ExactScalar::from_i64(2)
                } else {
                    ExactScalar::zero()
                })
            })
            .collect(),
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct PsdCheck {
    pub is_psd: bool,
    pub min_eigenvalue: f64,
}

/// Carathéodory–Toeplitz test: the Hermitian Toeplitz matrix with first row
/// `(2, c₁, …, c_T)` must be positive semidefinite.
///
/// The `n×n` Hermitian matrix `A + iB` is embedded as the real symmetric
/// `[[A, −B], [B, A]]`, whose spectrum is that of `A + iB` with each
/// eigenvalue doubled.
pub fn toeplitz_psd_check<S: Scalar>(c: &CaratheodoryCoeffs<S>) -> PsdCheck {
    let n = c.len() + 1;
    let entry = |i: usize, j: usize| -> Complex<f64> {
        if i == j {
            Complex::new(2.0, 0.0)
        } else if j > i {
            crate::scalar::complex_to_f64(&c.as_slice()[j - i - 1])
        } else {
            crate::scalar::complex_to_f64(&c.as_slice()[i - j - 1]).conj()
        }
    };
    let mut m = DMatrix::<f64>::zeros(2 * n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            let z = entry(i, j);
            m[(i, j)] = z.re;
            m[(i + n, j + n)] = z.re;
            m[(i, j + n)] = -z.im;
            m[(i + n, j)] = z.im;
        }
    }
    let min_eigenvalue = SymmetricEigen::new(m).eigenvalues.min();
    PsdCheck {
        is_psd: min_eigenvalue >= PSD_TOL,
        min_eigenvalue,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficients::h31_from_c;
    use crate::scalar::rat;

    fn ex_real(c1: i64, mu: i64, rho: i64) -> LzParams<ExactScalar> {
        LzParams::real(rat(c1, 1), rat(mu, 1), rat(rho, 1), rat(0, 1)).unwrap()
    }

    fn reals(v: &[i64]) -> Vec<ComplexScalar<ExactScalar>> {
        v.iter().map(|&x| real(rat(x, 1))).collect()
    }

    #[test]
    fn expand_examples() {
        let p = LzParams::new(
            rat(2, 1),
            Complex::new(rat(1, 2), rat(1, 3)),
            Complex::new(rat(-3, 5), rat(4, 5)),
            real(rat(1, 1)),
        )
        .unwrap();
        assert_eq!(lz_expand(&p).as_slice(), reals(&[2, 2, 2, 2]).as_slice());
        assert_eq!(lz_expand(&ex_real(0, 1, 0)).as_slice(), reals(&[0, 2, 0, 2]).as_slice());
        assert_eq!(lz_expand(&ex_real(0, 0, 1)).as_slice(), reals(&[0, 0, 2, 0]).as_slice());
    }

    #[test]
    fn construction_checks_constraints() {
        assert!(LzParams::real(rat(5, 2), rat(0, 1), rat(0, 1), rat(0, 1)).is_err());
        assert!(LzParams::real(rat(-1, 2), rat(0, 1), rat(0, 1), rat(0, 1)).is_err());
        // exact mode has zero tolerance
        let just_out = Complex::new(rat(3, 5), rat(4, 5) + rat(1, 1_000_000_000));
        assert!(LzParams::new(rat(1, 1), just_out, real(rat(0, 1)), real(rat(0, 1))).is_err());
        let on = Complex::new(rat(3, 5), rat(4, 5));
        assert!(LzParams::new(rat(1, 1), on, real(rat(0, 1)), real(rat(0, 1))).is_ok());
        // floating mode tolerates 1e-12
        assert!(LzParams::real(1.0, 1.0 + 1e-13, 0.0, 0.0).is_ok());
        assert!(LzParams::real(1.0, 1.0 + 1e-9, 0.0, 0.0).is_err());
    }

    #[test]
    fn h31_lz_examples() {
        assert_eq!(h31_lz(&ex_real(0, 0, 1)), real(rat(-1, 36)));
        let p = LzParams::real(rat(2, 1), rat(1, 3), rat(-1, 2), rat(1, 1)).unwrap();
        assert!(h31_lz(&p).is_zero());
        assert_eq!(h31_lz(&ex_real(0, 1, 0)), real(rat(-1, 135)));
        assert_eq!(
            h31_from_c(&lz_expand(&ex_real(0, 1, 0))).unwrap(),
            real(rat(-1, 135))
        );
    }

    #[test]
    fn h31_lz_agrees_exactly_at_complex_rational_parameters() {
        let p = LzParams::new(
            rat(3, 4),
            Complex::new(rat(1, 3), rat(-1, 2)),
            Complex::new(rat(-2, 5), rat(1, 7)),
            Complex::new(rat(0, 1), rat(5, 6)),
        )
        .unwrap();
        assert_eq!(h31_lz(&p), h31_from_c(&lz_expand(&p)).unwrap());
    }

    #[test]
    fn herglotz_examples() {
        let one = herglotz_coeffs(&HerglotzMeasure::roots_of_unity(1).unwrap(), 4);
        let two = herglotz_coeffs(&HerglotzMeasure::roots_of_unity(2).unwrap(), 4);
        let three = herglotz_coeffs(&HerglotzMeasure::roots_of_unity(3).unwrap(), 6);
        let close = |c: &CaratheodoryCoeffs<f64>, want: &[f64]| {
            c.as_slice()
                .iter()
                .zip(want)
                .all(|(z, w)| (z.re - w).abs() < 1e-14 && z.im.abs() < 1e-14)
        };
        assert!(close(&one, &[2.0, 2.0, 2.0, 2.0]));
        assert!(close(&two, &[0.0, 2.0, 0.0, 2.0]));
        assert!(close(&three, &[0.0, 0.0, 2.0, 0.0, 0.0, 2.0]));
        assert_eq!(
            roots_of_unity_coeffs_exact(3, 6).unwrap().as_slice(),
            reals(&[0, 0, 2, 0, 0, 2]).as_slice()
        );
    }

    #[test]
    fn measure_validation() {
        assert!(matches!(HerglotzMeasure::new(vec![]), Err(Error::EmptyMeasure)));
        assert!(HerglotzMeasure::new(vec![(0.5, Complex::new(1.0, 0.0))]).is_err());
        assert!(HerglotzMeasure::new(vec![(1.0, Complex::new(0.9, 0.0))]).is_err());
        assert!(HerglotzMeasure::new(vec![(-0.5, Complex::new(1.0, 0.0)), (1.5, Complex::new(-1.0, 0.0))]).is_err());
    }

    #[test]
    fn toeplitz_examples() {
        let rank1 = toeplitz_psd_check(&CaratheodoryCoeffs::from_real(&[2.0, 2.0, 2.0, 2.0]));
        assert!(rank1.is_psd);
        assert!(rank1.min_eigenvalue.abs() < 1e-12);
        let id = toeplitz_psd_check(&CaratheodoryCoeffs::from_real(&[0.0; 4]));
        assert!(id.is_psd && (id.min_eigenvalue - 2.0).abs() < 1e-12);
        assert!(!toeplitz_psd_check(&CaratheodoryCoeffs::from_real(&[3.0, 0.0, 0.0, 0.0])).is_psd);
        // complex entries: p(z) = (1 + iz)/(1 − iz)
        let rot = herglotz_coeffs(&HerglotzMeasure::new(vec![(1.0, Complex::new(0.0, 1.0))]).unwrap(), 4);
        assert!(toeplitz_psd_check(&rot).is_psd);
        // exact input is converted for the eigen-solve
        assert!(toeplitz_psd_check(&lz_expand(&ex_real(1, 1, 0))).is_psd);
    }
}
