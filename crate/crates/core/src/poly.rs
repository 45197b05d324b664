//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Terms are kept in a `BTreeMap` keyed by exponent vectors under graded
//! lexicographic order on the indeterminate list, and zero coefficients are
//! never stored, so two polynomials over the same indeterminates are equal
//! exactly when their term maps are equal.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{CoeffText, ComplexScalar, ExactScalar, Scalar};

/// Exponent vector aligned with the owning polynomial's indeterminates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Self(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Self(vec![0; nvars])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    /// Graded lex: total degree first, then the first differing exponent.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Multivariate polynomial over named indeterminates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: BTreeMap<Monomial, ExactScalar>,
}

impl MultiPoly {
    pub fn zero<V: AsRef<str>>(vars: &[V]) -> Self {
        Self {
            vars: vars.iter().map(|v| v.as_ref().to_owned()).collect(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant<V: AsRef<str>>(vars: &[V], c: ExactScalar) -> Self {
        let mut p = Self::zero(vars);
        let one = Monomial::one(p.vars.len());
        p.insert(one, c);
        p
    }

    /// The indeterminate `name` as a polynomial.
    pub fn var<V: AsRef<str>>(vars: &[V], name: &str) -> Result<Self> {
        let mut p = Self::zero(vars);
        let idx = p.index_of(name)?;
        let mut e = vec![0; p.vars.len()];
        e[idx] = 1;
        p.insert(Monomial(e), ExactScalar::one());
        Ok(p)
    }

    /// One term `coeff · Π varsᵢ^expᵢ`.
    pub fn term<V: AsRef<str>>(vars: &[V], coeff: ExactScalar, exponents: &[u32]) -> Self {
        assert_eq!(vars.len(), exponents.len(), "exponent vector length");
        let mut p = Self::zero(vars);
        p.insert(Monomial(exponents.to_vec()), coeff);
        p
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &ExactScalar)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, exponents: &[u32]) -> ExactScalar {
        self.terms
            .get(&Monomial(exponents.to_vec()))
            .cloned()
            .unwrap_or_else(ExactScalar::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    fn index_of(&self, name: &str) -> Result<usize> {
        self.vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownIndeterminate(name.to_owned()))
    }

    fn insert(&mut self, m: Monomial, c: ExactScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    /// Re-expresses `self` over `vars`, which must contain every indeterminate of `self`.
    fn aligned_to(&self, vars: &[String]) -> Self {
        if self.vars == vars {
            return self.clone();
        }
        let map: Vec<usize> = self
            .vars
            .iter()
            .map(|v| vars.iter().position(|w| w == v).expect("superset"))
            .collect();
        let mut out = Self::zero(vars);
        for (m, c) in &self.terms {
            let mut e = vec![0; vars.len()];
            for (i, &k) in m.0.iter().enumerate() {
                e[map[i]] = k;
            }
            out.insert(Monomial(e), c.clone());
        }
        out
    }

    fn union_vars(&self, other: &Self) -> Vec<String> {
        let mut vars = self.vars.clone();
        for v in &other.vars {
            if !vars.contains(v) {
                vars.push(v.clone());
            }
        }
        vars
    }

    fn unify(&self, other: &Self) -> (Self, Self) {
        if self.vars == other.vars {
            return (self.clone(), other.clone());
        }
        let vars = self.union_vars(other);
        (self.aligned_to(&vars), other.aligned_to(&vars))
    }

    pub fn scale(&self, k: &ExactScalar) -> Self {
        let mut out = Self::zero(&self.vars);
        if k.is_zero() {
            return out;
        }
        for (m, c) in &self.terms {
            out.terms.insert(m.clone(), c * k);
        }
        out
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::constant(&self.vars, ExactScalar::one());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Replaces each named indeterminate by a polynomial.
    ///
    /// The result lives over the indeterminates of `self` that were not
    /// replaced, followed by those of the replacements. Naming an
    /// indeterminate `self` does not have is an error.
    pub fn substitute(&self, replacements: &[(&str, &MultiPoly)]) -> Result<Self> {
        let mut slot: Vec<Option<&MultiPoly>> = vec![None; self.vars.len()];
        for (name, poly) in replacements {
            slot[self.index_of(name)?] = Some(*poly);
        }
        let mentioned = |v: &String| replacements.iter().any(|(_, p)| p.vars.contains(v));
        let mut vars: Vec<String> = self
            .vars
            .iter()
            .zip(&slot)
            .filter(|(v, s)| s.is_none() || mentioned(v))
            .map(|(v, _)| v.clone())
            .collect();
        for (_, poly) in replacements {
            for v in &poly.vars {
                if !vars.contains(v) {
                    vars.push(v.clone());
                }
            }
        }
        let images: Vec<MultiPoly> = self
            .vars
            .iter()
            .zip(&slot)
            .map(|(name, s)| match s {
                Some(p) => p.aligned_to(&vars),
                None => MultiPoly::var(&vars, name).expect("own indeterminate"),
            })
            .collect();
        let mut out = Self::zero(&vars);
        for (m, c) in &self.terms {
            let mut t = Self::constant(&vars, c.clone());
            for (img, &k) in images.iter().zip(&m.0) {
                if k > 0 {
                    t = &t * &img.pow(k);
                }
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// Evaluates at a point given in indeterminate order.
    pub fn evaluate<S: Scalar>(&self, point: &[ComplexScalar<S>]) -> Result<ComplexScalar<S>> {
        if point.len() != self.vars.len() {
            return Err(Error::InsufficientCoefficients {
                needed: self.vars.len(),
                available: point.len(),
            });
        }
        let mut acc = ComplexScalar::<S>::zero();
        for (m, c) in &self.terms {
            let mut t = Complex::new(S::from_rational(c), S::zero());
            for (z, &k) in point.iter().zip(&m.0) {
                for _ in 0..k {
                    t = t * z;
                }
            }
            acc = acc + t;
        }
        Ok(acc)
    }

    /// Formal partial derivative.
    pub fn derivative(&self, name: &str) -> Result<Self> {
        let idx = self.index_of(name)?;
        let mut out = Self::zero(&self.vars);
        for (m, c) in &self.terms {
            let k = m.0[idx];
            if k == 0 {
                continue;
            }
            let mut e = m.0.clone();
            e[idx] -= 1;
            out.insert(Monomial(e), c * ExactScalar::from_i64(k as i64));
        }
        Ok(out)
    }

    /// Common weighted degree of every term, if there is one.
    pub fn weighted_degree(&self, weights: &[u32]) -> Option<u32> {
        let mut degrees = self
            .terms
            .keys()
            .map(|m| m.0.iter().zip(weights).map(|(e, w)| e * w).sum::<u32>());
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// Floating evaluator for real points, for inner loops.
    pub fn compile(&self) -> CompiledPoly {
        CompiledPoly {
            nvars: self.vars.len(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (c.to_f64(), m.0.clone()))
                .collect(),
        }
    }

    /// Text form `poly[x,y] 3/1*x^2*y + -1/2*y + 7/1`; the zero polynomial is `poly[x,y] 0`.
    pub fn to_text(&self) -> String {
        let mut out = format!("poly[{}] ", self.vars.join(","));
        if self.is_zero() {
            out.push('0');
            return out;
        }
        let parts: Vec<String> = self
            .terms()
            .map(|(m, c)| {
                let mut s = c.to_text();
                for (v, &k) in self.vars.iter().zip(&m.0) {
                    match k {
                        0 => {}
                        1 => s.push_str(&format!("*{v}")),
                        k => s.push_str(&format!("*{v}^{k}")),
                    }
                }
                s
            })
            .collect();
        out.push_str(&parts.join(" + "));
        out
    }

    pub fn parse_text(s: &str) -> Result<Self> {
        let s = s.trim();
        let rest = s
            .strip_prefix("poly[")
            .ok_or_else(|| Error::Parse(format!("bad polynomial header in `{s}`")))?;
        let (names, body) = rest
            .split_once(']')
            .ok_or_else(|| Error::Parse("unterminated indeterminate list".into()))?;
        let vars: Vec<&str> = if names.is_empty() {
            Vec::new()
        } else {
            names.split(',').collect()
        };
        let mut p = Self::zero(&vars);
        let body = body.trim();
        if body == "0" {
            return Ok(p);
        }
        for term in body.split(" + ") {
            let mut factors = term.trim().split('*');
            let c = ExactScalar::parse_text(factors.next().unwrap_or_default())?;
            let mut e = vec![0u32; vars.len()];
            for f in factors {
                let (name, k) = match f.split_once('^') {
                    Some((n, k)) => (
                        n,
                        k.parse::<u32>()
                            .map_err(|_| Error::Parse(format!("bad exponent in `{f}`")))?,
                    ),
                    None => (f, 1),
                };
                e[p.index_of(name)?] += k;
            }
            p.insert(Monomial(e), c);
        }
        Ok(p)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;

    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let (mut a, b) = self.unify(rhs);
        for (m, c) in b.terms {
            a.insert(m, c);
        }
        a
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;

    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let (mut a, b) = self.unify(rhs);
        for (m, c) in b.terms {
            a.insert(m, -c);
        }
        a
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;

    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let (a, b) = self.unify(rhs);
        let mut out = MultiPoly::zero(&a.vars);
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                out.insert(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;

    fn neg(self) -> MultiPoly {
        self.scale(&-ExactScalar::one())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for MultiPoly {
            type Output = MultiPoly;
            fn $f(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $f(self, rhs: &MultiPoly) -> MultiPoly {
                (&self).$f(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

/// Flattened `f64` form of a [`MultiPoly`].
#[derive(Clone, Debug)]
pub struct CompiledPoly {
    nvars: usize,
    terms: Vec<(f64, Vec<u32>)>,
}

impl CompiledPoly {
    pub fn eval(&self, x: &[f64]) -> f64 {
        debug_assert_eq!(x.len(), self.nvars);
        self.terms
            .iter()
            .map(|(c, e)| {
                e.iter()
                    .zip(x)
                    .fold(*c, |acc, (&k, &xi)| acc * xi.powi(k as i32))
            })
            .sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, real};

    const C: [&str; 4] = ["c1", "c2", "c3", "c4"];

    fn c(i: usize) -> MultiPoly {
        MultiPoly::var(&C, C[i - 1]).unwrap()
    }

    #[test]
    fn self_subtraction_is_zero() {
        let p = &c(1).pow(2) - &c(2);
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn difference_of_squares() {
        let lhs = &(&c(1) + &c(2)) * &(&c(1) - &c(2));
        let rhs = &c(1).pow(2) - &c(2).pow(2);
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.term_count(), 2);
    }

    #[test]
    fn substitution_into_coefficient_relation() {
        // c₂ := (c₁² + 4μ - c₁²μ)/2 turns 2c₂ into c₁² + (4 - c₁²)μ
        let vars = ["c1", "c2", "c3", "c4", "mu"];
        let c1 = MultiPoly::var(&vars, "c1").unwrap();
        let mu = MultiPoly::var(&vars, "mu").unwrap();
        let four = MultiPoly::constant(&vars, rat(4, 1));
        let c2_image = (&(&c1.pow(2) + &mu.scale(&rat(4, 1))) - &(&c1.pow(2) * &mu)).scale(&rat(1, 2));
        let two_c2 = c(2).scale(&rat(2, 1));
        let got = two_c2.substitute(&[("c2", &c2_image)]).unwrap();
        let want = &c1.pow(2) + &(&(&four - &c1.pow(2)) * &mu);
        assert!((&got - &want).is_zero());
    }

    #[test]
    fn substitution_of_unknown_name_fails() {
        let err = c(1).substitute(&[("zeta", &c(2))]).unwrap_err();
        assert!(matches!(err, Error::UnknownIndeterminate(n) if n == "zeta"));
    }

    #[test]
    fn evaluate_and_derivative() {
        // p = 3c1²c2 - c4
        let p = &MultiPoly::term(&C, rat(3, 1), &[2, 1, 0, 0]) - &c(4);
        let at = [real(rat(2, 1)), real(rat(-1, 1)), real(rat(0, 1)), real(rat(5, 1))];
        assert_eq!(p.evaluate(&at).unwrap(), real(rat(-17, 1)));
        let dp = p.derivative("c1").unwrap();
        assert_eq!(dp, MultiPoly::term(&C, rat(6, 1), &[1, 1, 0, 0]));
        assert!((p.compile().eval(&[2.0, -1.0, 0.0, 5.0]) + 17.0).abs() < 1e-15);
        assert!(p.evaluate::<ExactScalar>(&at[..2]).is_err());
    }

    #[test]
    fn graded_lex_printing() {
        let p = &(&c(2) + &c(1).pow(3)) + &MultiPoly::constant(&C, rat(-1, 2));
        assert_eq!(p.to_text(), "poly[c1,c2,c3,c4] 1/1*c1^3 + 1/1*c2 + -1/2");
        assert_eq!(MultiPoly::parse_text(&p.to_text()).unwrap(), p);
        assert_eq!(MultiPoly::zero(&C).to_text(), "poly[c1,c2,c3,c4] 0");
        assert!(MultiPoly::parse_text("poly[c1] 1/1*c9").is_err());
    }

    #[test]
    fn weighted_degree() {
        let p = &(&c(1).pow(2) * &c(2)) + &c(4);
        assert_eq!(p.weighted_degree(&[1, 2, 3, 4]), Some(4));
        assert_eq!((&p + &c(1)).weighted_degree(&[1, 2, 3, 4]), None);
    }
}
