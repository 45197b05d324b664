//! The majorant `ϑ(u, v, w)` on `Ω = [0,2]×[0,1]×[0,1]` and its derivatives.
//!
//! `u = c₁`, `v = |μ|`, `w = |ρ|`; `8640·|H₃,₁(f⁻¹)| ≤ ϑ(u, v, w)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::MultiPoly;
use crate::scalar::{rat, Scalar};

/// Upper corner of the box; the lower corner is the origin.
pub const BOX_UPPER: [f64; 3] = [2.0, 1.0, 1.0];

/// A point of `Ω`. Construction rejects, never clamps.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoxPoint<S: Scalar = f64> {
    u: S,
    v: S,
    w: S,
}

impl<S: Scalar> BoxPoint<S> {
    pub fn new(u: S, v: S, w: S) -> Result<Self> {
        let zero = S::zero();
        let inside = |x: &S, hi: i64| *x >= zero && *x <= S::from_i64(hi);
        if inside(&u, 2) && inside(&v, 1) && inside(&w, 1) {
            Ok(Self { u, v, w })
        } else {
            Err(Error::OutOfBox {
                u: u.to_f64(),
                v: v.to_f64(),
                w: w.to_f64(),
            })
        }
    }

    pub fn u(&self) -> &S {
        &self.u
    }

    pub fn v(&self) -> &S {
        &self.v
    }

    pub fn w(&self) -> &S {
        &self.w
    }

    pub fn to_f64(&self) -> BoxPoint<f64> {
        BoxPoint {
            u: self.u.to_f64(),
            v: self.v.to_f64(),
            w: self.w.to_f64(),
        }
    }
}

impl BoxPoint<f64> {
    pub fn coords(&self) -> [f64; 3] {
        [self.u, self.v, self.w]
    }

    /// Lexicographic comparison on `(u, v, w)`.
    pub fn lex_cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.u
            .total_cmp(&other.u)
            .then(self.v.total_cmp(&other.v))
            .then(self.w.total_cmp(&other.w))
    }
}

/// Bracketed factor of `ϑ`, i.e. `ϑ / (4 − u²)²`.
pub fn theta_bracket<S: Scalar>(u: &S, v: &S, w: &S) -> S {
    let k = |p: i64, q: i64| S::from_ratio(p, q);
    let one = S::one();
    let u2 = u.clone() * u.clone();
    let v2 = v.clone() * v.clone();
    let v3 = v2.clone() * v.clone();
    let v4 = v2.clone() * v2.clone();
    let w2 = w.clone() * w.clone();
    let one_m_v2 = one.clone() - v2.clone();
    k(3, 4) * u2.clone() * v2.clone()
        + k(3, 2) * u2.clone() * v3.clone()
        + k(3, 4) * u2.clone() * v4
        + (k(4, 1) - u2) * v3
        + k(3, 1) * u.clone() * v.clone() * (one.clone() + v.clone()) * one_m_v2.clone() * w.clone()
        + k(3, 1) * (k(5, 1) + v2) * one_m_v2.clone() * w2.clone()
        + k(18, 1) * v.clone() * one_m_v2 * (one - w2)
}

/// `ϑ` without the box check; the polynomial is defined on all of ℝ³.
pub fn theta_raw<S: Scalar>(u: &S, v: &S, w: &S) -> S {
    let p = S::from_i64(4) - u.clone() * u.clone();
    p.clone() * p * theta_bracket(u, v, w)
}

pub fn theta<S: Scalar>(p: &BoxPoint<S>) -> S {
    theta_raw(&p.u, &p.v, &p.w)
}

/// `∂ϑ/∂w = (4−u²)²(1−v²)[3uv(1+v) + 6w(1−v)(5−v)]`.
pub fn dtheta_dw<S: Scalar>(p: &BoxPoint<S>) -> S {
    dtheta_dw_raw(&p.u, &p.v, &p.w)
}

pub fn dtheta_dw_raw<S: Scalar>(u: &S, v: &S, w: &S) -> S {
    let one = S::one();
    let k = S::from_i64;
    let pre = k(4) - u.clone() * u.clone();
    let lin = k(3) * u.clone() * v.clone() * (one.clone() + v.clone())
        + k(6) * w.clone() * (one.clone() - v.clone()) * (k(5) - v.clone());
    pre.clone() * pre * (one - v.clone() * v.clone()) * lin
}

/// The unique root in `w` of `∂ϑ/∂w`, `−uv(1+v) / (2(5−v)(1−v))`.
pub fn w_root<S: Scalar>(u: &S, v: &S) -> Result<S> {
    let one = S::one();
    let denom = S::from_i64(2) * (S::from_i64(5) - v.clone()) * (one.clone() - v.clone());
    if denom.is_zero() {
        return Err(Error::DivisionByZero("w_root is undefined at v = 1 and v = 5"));
    }
    Ok(-(u.clone() * v.clone() * (one + v.clone())) / denom)
}

/// Analytic gradient `(∂ϑ/∂u, ∂ϑ/∂v, ∂ϑ/∂w)` in floating point.
pub fn theta_gradient(u: f64, v: f64, w: f64) -> [f64; 3] {
    let pre = 4.0 - u * u;
    let bracket = theta_bracket(&u, &v, &w);
    let s = v * (1.0 + v) * (1.0 - v * v);
    let db_du = 1.5 * u * v * v + 3.0 * u * v.powi(3) + 1.5 * u * v.powi(4) - 2.0 * u * v.powi(3)
        + 3.0 * s * w;
    let db_dv = 1.5 * u * u * v
        + 4.5 * u * u * v * v
        + 3.0 * u * u * v.powi(3)
        + 3.0 * (4.0 - u * u) * v * v
        + 3.0 * u * w * (1.0 + 2.0 * v - 3.0 * v * v - 4.0 * v.powi(3))
        + 3.0 * w * w * (-8.0 * v - 4.0 * v.powi(3))
        + 18.0 * (1.0 - w * w) * (1.0 - 3.0 * v * v);
    [
        -4.0 * u * pre * bracket + pre * pre * db_du,
        pre * pre * db_dv,
        dtheta_dw_raw(&u, &v, &w),
    ]
}

/// Indeterminate names of [`theta_poly`].
pub const UVW: [&str; 3] = ["u", "v", "w"];

/// `ϑ` as an exact polynomial in `(u, v, w)`.
pub fn theta_poly() -> MultiPoly {
    let var = |n: &str| MultiPoly::var(&UVW, n).expect("own indeterminate");
    let k = |p: i64, q: i64| MultiPoly::constant(&UVW, rat(p, q));
    let (u, v, w) = (var("u"), var("v"), var("w"));
    let one = k(1, 1);
    let one_m_v2 = &one - &v.pow(2);
    let terms = [
        &k(3, 4) * &(&u.pow(2) * &v.pow(2)),
        &k(3, 2) * &(&u.pow(2) * &v.pow(3)),
        &k(3, 4) * &(&u.pow(2) * &v.pow(4)),
        &(&k(4, 1) - &u.pow(2)) * &v.pow(3),
        &(&(&k(3, 1) * &(&u * &v)) * &(&(&one + &v) * &one_m_v2)) * &w,
        &(&k(3, 1) * &(&(&k(5, 1) + &v.pow(2)) * &one_m_v2)) * &w.pow(2),
        &(&k(18, 1) * &(&v * &one_m_v2)) * &(&one - &w.pow(2)),
    ];
    let bracket = terms
        .iter()
        .fold(MultiPoly::zero(&UVW), |acc, t| &acc + t);
    &(&k(4, 1) - &u.pow(2)).pow(2) * &bracket
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{real, ExactScalar};

    #[test]
    fn landmark_values() {
        let ex = |u: i64, v: i64, w: i64| {
            theta(&BoxPoint::new(rat(u, 1), rat(v, 1), rat(w, 1)).unwrap())
        };
        assert_eq!(ex(0, 0, 1), rat(240, 1));
        assert_eq!(ex(0, 1, 0), rat(64, 1));
        assert_eq!(ex(1, 1, 0), rat(54, 1));
        assert_eq!(ex(2, 0, 1), rat(0, 1));
        let p = BoxPoint::new(rat(0, 1), rat(1, 1), rat(3, 7)).unwrap();
        assert_eq!(theta(&p), rat(64, 1));
    }

    #[test]
    fn box_rejects_outside_points() {
        assert!(BoxPoint::new(2.0 + 1e-15, 0.0, 0.0).is_err());
        assert!(BoxPoint::new(0.0, -0.0001, 0.0).is_err());
        assert!(BoxPoint::new(0.0, 0.0, f64::NAN).is_err());
        assert!(BoxPoint::new(2.0, 1.0, 1.0).is_ok());
    }

    #[test]
    fn w_root_examples() {
        assert_eq!(w_root(&rat(0, 1), &rat(1, 3)).unwrap(), rat(0, 1));
        assert_eq!(w_root(&rat(1, 1), &rat(1, 2)).unwrap(), rat(-1, 6));
        assert!(matches!(w_root(&1.0, &1.0), Err(Error::DivisionByZero(_))));
        assert!(w_root(&1.0, &5.0).is_err());
    }

    #[test]
    fn dtheta_dw_vanishes_at_root() {
        let (u, v) = (rat(3, 2), rat(2, 7));
        let w = w_root(&u, &v).unwrap();
        assert_eq!(dtheta_dw_raw(&u, &v, &w), rat(0, 1));
    }

    #[test]
    fn closed_form_matches_polynomial() {
        let poly = theta_poly();
        for (u, v, w) in [(1, 3, 5), (7, 2, 1), (3, 3, 3), (0, 1, 4)] {
            let (u, v, w) = (rat(u, 4), rat(v, 4), rat(w, 4));
            let via_poly = poly
                .evaluate(&[real(u.clone()), real(v.clone()), real(w.clone())])
                .unwrap();
            assert_eq!(via_poly, real(theta_raw::<ExactScalar>(&u, &v, &w)));
        }
    }

    #[test]
    fn gradient_matches_polynomial_derivatives() {
        let poly = theta_poly();
        let d: Vec<_> = UVW
            .iter()
            .map(|n| poly.derivative(n).unwrap().compile())
            .collect();
        for &(u, v, w) in &[(0.3, 0.7, 0.1), (1.9, 0.2, 0.8), (-1.0, 1.5, 2.0)] {
            let g = theta_gradient(u, v, w);
            for i in 0..3 {
                let want = d[i].eval(&[u, v, w]);
                assert!((g[i] - want).abs() < 1e-10 * (1.0 + want.abs()), "{i}: {} {}", g[i], want);
            }
        }
    }
}
