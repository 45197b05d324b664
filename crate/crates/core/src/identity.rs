//! Symbolic check that the 3×3 Hankel determinant of the inverse
//! coefficients, written in `c₁..c₄`, equals the degree-six closed form.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::linalg::det3_cofactor;
use crate::poly::MultiPoly;
use crate::scalar::{rat, ExactScalar};

/// Indeterminates, in canonical order.
pub const C_VARS: [&str; 4] = ["c1", "c2", "c3", "c4"];

/// Common denominator of the closed form.
pub const H31_DENOMINATOR: i64 = 8640;

/// Integer coefficients of `8640·H₃,₁(f⁻¹)` with exponents of `(c₁, c₂, c₃, c₄)`.
pub const H31_BRACKET_TERMS: [(i64, [u32; 4]); 9] = [
    (4, [6, 0, 0, 0]),
    (-24, [4, 1, 0, 0]),
    (12, [3, 0, 1, 0]),
    (39, [2, 2, 0, 0]),
    (-44, [0, 3, 0, 0]),
    (36, [1, 1, 1, 0]),
    (-36, [2, 0, 0, 1]),
    (-60, [0, 0, 2, 0]),
    (72, [0, 1, 0, 1]),
];

fn c(i: usize) -> MultiPoly {
    MultiPoly::var(&C_VARS, C_VARS[i - 1]).expect("known indeterminate")
}

fn k(n: i64) -> MultiPoly {
    MultiPoly::constant(&C_VARS, rat(n, 1))
}

/// `t₂..t₅` as polynomials in `c₁..c₄`.
pub fn inverse_coeff_polys() -> [MultiPoly; 4] {
    let (c1, c2, c3, c4) = (c(1), c(2), c(3), c(4));
    let t2 = c1.scale(&rat(-1, 2));
    let t3 = (&(&k(2) * &c1.pow(2)) - &c2).scale(&rat(1, 6));
    let t4 = (&(&(&k(-6) * &c1.pow(3)) + &(&k(7) * &(&c1 * &c2))) - &(&k(2) * &c3))
        .scale(&rat(1, 24));
    let t5 = [
        &k(-6) * &c4,
        &k(22) * &(&c1 * &c3),
        &k(-46) * &(&c1.pow(2) * &c2),
        &k(7) * &c2.pow(2),
        &k(24) * &c1.pow(4),
    ]
    .iter()
    .fold(MultiPoly::zero(&C_VARS), |acc, t| &acc + t)
    .scale(&rat(1, 120));
    [t2, t3, t4, t5]
}

/// `a₂..a₅` as polynomials in `c₁..c₄`.
pub fn convex_coeff_polys() -> [MultiPoly; 4] {
    let (c1, c2, c3, c4) = (c(1), c(2), c(3), c(4));
    let a2 = c1.scale(&rat(1, 2));
    let a3 = (&c1.pow(2) + &c2).scale(&rat(1, 6));
    let a4 = [
        c1.pow(3).scale(&rat(1, 2)),
        (&c1 * &c2).scale(&rat(3, 2)),
        c3.clone(),
    ]
    .iter()
    .fold(MultiPoly::zero(&C_VARS), |acc, t| &acc + t)
    .scale(&rat(1, 12));
    let a5 = [
        c1.pow(4).scale(&rat(1, 6)),
        &c1.pow(2) * &c2,
        c2.pow(2).scale(&rat(1, 2)),
        (&c1 * &c3).scale(&rat(4, 3)),
        c4,
    ]
    .iter()
    .fold(MultiPoly::zero(&C_VARS), |acc, t| &acc + t)
    .scale(&rat(1, 20));
    [a2, a3, a4, a5]
}

/// `t₂..t₅` from `a₂..a₅` via the inversion formulas, as polynomials.
pub fn inverse_from_convex_polys(a: &[MultiPoly; 4]) -> [MultiPoly; 4] {
    let [a2, a3, a4, a5] = a;
    let sum = |parts: Vec<MultiPoly>| {
        parts
            .iter()
            .fold(MultiPoly::zero(a2.vars()), |acc, t| &acc + t)
    };
    let t2 = -a2;
    let t3 = &(&k(2) * &a2.pow(2)) - a3;
    let t4 = sum(vec![-a4, &k(5) * &(a2 * a3), &k(-5) * &a2.pow(3)]);
    let t5 = sum(vec![
        -a5,
        &k(6) * &(a2 * a4),
        &k(-21) * &(&a2.pow(2) * a3),
        &k(3) * &a3.pow(2),
        &k(14) * &a2.pow(4),
    ]);
    [t2, t3, t4, t5]
}

/// `8640·H₃,₁(f⁻¹)` from a term table.
pub fn h31_bracket_from(terms: &[(i64, [u32; 4])]) -> MultiPoly {
    terms.iter().fold(MultiPoly::zero(&C_VARS), |acc, (coef, e)| {
        &acc + &MultiPoly::term(&C_VARS, rat(*coef, 1), e)
    })
}

pub fn h31_bracket() -> MultiPoly {
    h31_bracket_from(&H31_BRACKET_TERMS)
}

/// Symbolic `H₃,₁(f⁻¹)`: the Hankel matrix of `(1, t₂, …, t₅)` expanded by
/// cofactors along the first row.
pub fn h31_symbolic() -> MultiPoly {
    let [t2, t3, t4, t5] = inverse_coeff_polys();
    let one = k(1);
    let m = [
        [one, t2.clone(), t3.clone()],
        [t2, t3.clone(), t4.clone()],
        [t3, t4, t5],
    ];
    det3_cofactor(&m)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IdentityStatus {
    ZeroPolynomial,
    NonzeroResidual,
}

impl fmt::Display for IdentityStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::ZeroPolynomial => "zero-polynomial",
            Self::NonzeroResidual => "nonzero-residual",
        })
    }
}

/// Outcome of an identity check. `residual_terms` uses the polynomial text form.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub struct IdentityReport {
    pub status: IdentityStatus,
    pub residual_term_count: usize,
    pub residual_terms: Vec<String>,
}

impl IdentityReport {
    fn from_residual(residual: &MultiPoly) -> Self {
        let residual_terms: Vec<String> = residual
            .terms()
            .map(|(m, coef)| {
                MultiPoly::term(residual.vars(), coef.clone(), m.exponents())
                    .to_text()
                    .split_once("] ")
                    .map(|(_, t)| t.to_owned())
                    .unwrap_or_default()
            })
            .collect();
        Self {
            status: if residual.is_zero() {
                IdentityStatus::ZeroPolynomial
            } else {
                IdentityStatus::NonzeroResidual
            },
            residual_term_count: residual_terms.len(),
            residual_terms,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.status == IdentityStatus::ZeroPolynomial
    }

    /// `{status: …, residual-term-count: …, residual-terms: [...]}`.
    pub fn to_record(&self) -> String {
        format!(
            "{{status: {}, residual-term-count: {}, residual-terms: [{}]}}",
            self.status,
            self.residual_term_count,
            self.residual_terms.join(", ")
        )
    }
}

/// Residual `H₃,₁(f⁻¹) − bracket/8640` for a caller-supplied bracket.
pub fn identity_residual(bracket: &MultiPoly) -> MultiPoly {
    &h31_symbolic() - &bracket.scale(&rat(1, H31_DENOMINATOR))
}

pub fn verify_h31_identity_against(bracket: &MultiPoly) -> IdentityReport {
    IdentityReport::from_residual(&identity_residual(bracket))
}

pub fn verify_h31_identity() -> IdentityReport {
    verify_h31_identity_against(&h31_bracket())
}

/// Bracket with the `c₂³` coefficient changed from −44 to −45.
pub fn perturbed_bracket() -> MultiPoly {
    let mut terms = H31_BRACKET_TERMS;
    for t in terms.iter_mut() {
        if t.1 == [0, 3, 0, 0] {
            t.0 = -45;
        }
    }
    h31_bracket_from(&terms)
}

/// Exact value `1/8640`.
pub fn h31_scale() -> ExactScalar {
    rat(1, H31_DENOMINATOR)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::real;

    #[test]
    fn identity_holds() {
        let report = verify_h31_identity();
        assert!(report.is_zero(), "{}", report.to_record());
        assert_eq!(
            report.to_record(),
            "{status: zero-polynomial, residual-term-count: 0, residual-terms: []}"
        );
    }

    #[test]
    fn perturbed_coefficient_is_detected() {
        let report = verify_h31_identity_against(&perturbed_bracket());
        assert_eq!(report.status, IdentityStatus::NonzeroResidual);
        assert_eq!(report.residual_term_count, 1);
        // residual = (−44 − (−45))/8640 · c₂³
        assert_eq!(report.residual_terms, vec!["1/8640*c2^3".to_owned()]);
    }

    #[test]
    fn closed_forms_compose() {
        let via_a = inverse_from_convex_polys(&convex_coeff_polys());
        for (lhs, rhs) in via_a.iter().zip(inverse_coeff_polys().iter()) {
            assert!((lhs - rhs).is_zero(), "{lhs} vs {rhs}");
        }
    }

    #[test]
    fn bracket_is_weighted_homogeneous() {
        assert_eq!(h31_bracket().weighted_degree(&[1, 2, 3, 4]), Some(6));
        assert_eq!(h31_symbolic().weighted_degree(&[1, 2, 3, 4]), Some(6));
    }

    #[test]
    fn both_sides_at_all_ones() {
        let one = [real(rat(1, 1)), real(rat(1, 1)), real(rat(1, 1)), real(rat(1, 1))];
        let lhs = h31_symbolic().evaluate(&one).unwrap();
        let rhs = h31_bracket().evaluate(&one).unwrap();
        assert_eq!(rhs, real(rat(-1, 1)));
        assert_eq!(lhs, real(rat(-1, 8640)));
    }
}
