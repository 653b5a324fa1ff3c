//! Sparse multivariate polynomials over the rationals in `X_0..X_{k-1}`.
//!
//! Terms live in an unordered-by-meaning map; any monomial order is imposed by
//! [`MonomialOrder`](crate::groebner::MonomialOrder) at the use site. The
//! weighted grading `deg X_i = m_i` and the substitution `X_i -> t^{m_i}` are
//! relative to an [`ArithmeticSequence`].

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::groebner::MonomialOrder;
use crate::semigroup::ArithmeticSequence;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("expected {expected} variables, found {found}")]
    VariableCount { expected: usize, found: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Self(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Self(vec![0; nvars])
    }

    /// `X_i^e` in `nvars` variables.
    pub fn var(nvars: usize, i: usize, e: u32) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = e;
        Self(exps)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(&a, &b)| a.max(b)).collect())
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other`, if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        other.divides(self).then(|| {
            Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
        })
    }

    /// Appends `extra` variables with exponent zero.
    pub fn extend(&self, extra: usize) -> Monomial {
        let mut exps = self.0.clone();
        exps.resize(self.0.len() + extra, 0);
        Monomial(exps)
    }
}

impl fmt::Display for Monomial {
    /// Variables with larger exponents first, ties by index: `X4^2*X3`, `X0^4*X1`, `X0*X2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut factors: Vec<(usize, u32)> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| (i, e))
            .collect();
        if factors.is_empty() {
            return f.write_str("1");
        }
        factors.sort_by(|x, y| y.1.cmp(&x.1).then(x.0.cmp(&y.0)));
        let parts: Vec<String> = factors
            .into_iter()
            .map(|(i, e)| match e {
                1 => format!("X{i}"),
                _ => format!("X{i}^{e}"),
            })
            .collect();
        f.write_str(&parts.join("*"))
    }
}

/// `Σ e_i * m_i`.
pub fn weighted_degree(mono: &Monomial, seq: &ArithmeticSequence) -> Result<u64, PolyError> {
    if mono.nvars() != seq.n() + 1 {
        return Err(PolyError::VariableCount {
            expected: seq.n() + 1,
            found: mono.nvars(),
        });
    }
    Ok(mono
        .0
        .iter()
        .enumerate()
        .map(|(i, &e)| e as u64 * seq.term(i))
        .sum())
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, BigRational>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::term(Monomial::one(nvars), BigRational::one())
    }

    pub fn term(mono: Monomial, coeff: BigRational) -> Self {
        let mut p = Self::zero(mono.nvars());
        p.add_term(mono, coeff);
        p
    }

    pub fn monomial(mono: Monomial) -> Self {
        Self::term(mono, BigRational::one())
    }

    pub fn variable(nvars: usize, i: usize) -> Self {
        Self::monomial(Monomial::var(nvars, i, 1))
    }

    /// `plus - minus`.
    pub fn binomial(plus: Monomial, minus: Monomial) -> Self {
        let mut p = Self::monomial(plus);
        p.add_term(minus, -BigRational::one());
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, BigRational)>) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, mono: &Monomial) -> Option<&BigRational> {
        self.terms.get(mono)
    }

    pub fn add_term(&mut self, mono: Monomial, coeff: BigRational) {
        assert_eq!(mono.nvars(), self.nvars, "monomial arity mismatch");
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, mono: &Monomial) -> Polynomial {
        Self {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.mul(mono), c.clone()))
                .collect(),
        }
    }

    /// Leading monomial and coefficient under `order`.
    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().max_by(|x, y| order.compare(x.0, y.0))
    }

    /// Terms in ascending `order`.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(&Monomial, &BigRational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|x, y| order.compare(x.0, y.0));
        v
    }

    /// Appends `extra` variables that do not occur.
    pub fn extend_vars(&self, extra: usize) -> Polynomial {
        Self {
            nvars: self.nvars + extra,
            terms: self.terms.iter().map(|(m, c)| (m.extend(extra), c.clone())).collect(),
        }
    }

    /// Drops trailing variables; `None` if any of them occurs.
    pub fn truncate_vars(&self, nvars: usize) -> Option<Polynomial> {
        let mut p = Self::zero(nvars);
        for (m, c) in &self.terms {
            if m.0[nvars..].iter().any(|&e| e > 0) {
                return None;
            }
            p.add_term(Monomial(m.0[..nvars].to_vec()), c.clone());
        }
        Some(p)
    }

    /// Common weighted degree of all terms, or `None` if not weighted-homogeneous (or zero).
    pub fn weighted_homogeneous_degree(
        &self,
        seq: &ArithmeticSequence,
    ) -> Result<Option<u64>, PolyError> {
        let mut degree = None;
        for m in self.terms.keys() {
            let w = weighted_degree(m, seq)?;
            match degree {
                None => degree = Some(w),
                Some(prev) if prev != w => return Ok(None),
                _ => {}
            }
        }
        Ok(degree)
    }

    /// True iff the polynomial has two terms with coefficients `+1` and `-1`.
    pub fn is_pure_binomial(&self) -> bool {
        let mut coeffs: Vec<&BigRational> = self.terms.values().collect();
        coeffs.sort();
        coeffs.len() == 2 && *coeffs[0] == -BigRational::one() && coeffs[1].is_one()
    }

    /// Exact quotient `self / divisor` under `order`, or `None` if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Polynomial, order: &MonomialOrder) -> Option<Polynomial> {
        let (lm, lc) = divisor.leading_term(order)?;
        let mut rest = self.clone();
        let mut quotient = Self::zero(self.nvars);
        while let Some((m, c)) = rest.leading_term(order) {
            let factor = m.div(lm)?;
            let coeff = c / lc;
            rest = &rest - &divisor.mul_monomial(&factor).scale(&coeff);
            quotient.add_term(factor, coeff);
        }
        Some(quotient)
    }
}

impl fmt::Display for Polynomial {
    /// Terms ascending in the default order, so the binomial `X4^2*X3 - X0^5` keeps its positive term first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let order = MonomialOrder::default();
        for (k, (m, c)) in self.sorted_terms(&order).into_iter().enumerate() {
            let negative = c.is_negative();
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "ambient ring mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "ambient ring mismatch");
        let mut out = Polynomial::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for Polynomial {
            type Output = Polynomial;

            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        -&self
    }
}

/// Sparse polynomial in a single variable `t`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct UnivariatePolynomial {
    coefficients: BTreeMap<u64, BigRational>,
}

impl UnivariatePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, exponent: u64, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.coefficients.entry(exponent).or_insert_with(BigRational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.coefficients.remove(&exponent);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn coefficient(&self, exponent: u64) -> BigRational {
        self.coefficients.get(&exponent).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, &BigRational)> {
        self.coefficients.iter().map(|(&e, c)| (e, c))
    }
}

impl Mul for &UnivariatePolynomial {
    type Output = UnivariatePolynomial;

    fn mul(self, rhs: &UnivariatePolynomial) -> UnivariatePolynomial {
        let mut out = UnivariatePolynomial::zero();
        for (e1, c1) in &self.coefficients {
            for (e2, c2) in &rhs.coefficients {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for UnivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .coefficients
            .iter()
            .rev()
            .map(|(e, c)| match (e, c.is_one()) {
                (0, _) => format!("{c}"),
                (_, true) => format!("t^{e}"),
                _ => format!("{c}*t^{e}"),
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Substitutes `X_i -> t^{m_i}`.
pub fn phi_evaluate(
    p: &Polynomial,
    seq: &ArithmeticSequence,
) -> Result<UnivariatePolynomial, PolyError> {
    let mut out = UnivariatePolynomial::zero();
    if p.nvars() != seq.n() + 1 {
        return Err(PolyError::VariableCount {
            expected: seq.n() + 1,
            found: p.nvars(),
        });
    }
    for (m, c) in p.terms() {
        out.add_term(weighted_degree(m, seq)?, c.clone());
    }
    Ok(out)
}

#[cfg(test)]
pub(crate) fn rational(n: i64) -> BigRational {
    BigRational::from_integer(num_bigint::BigInt::from(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::validate;

    fn mono(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn weighted_degrees() {
        let s = validate(11, 2, 4).unwrap();
        assert_eq!(weighted_degree(&mono(&[0, 0, 0, 1, 2]), &s), Ok(55));
        assert_eq!(weighted_degree(&mono(&[0, 0, 0, 0, 0]), &s), Ok(0));
        assert_eq!(weighted_degree(&mono(&[1, 0, 0, 0, 0]), &s), Ok(11));
        assert_eq!(
            weighted_degree(&mono(&[1, 0]), &s),
            Err(PolyError::VariableCount { expected: 5, found: 2 })
        );
    }

    #[test]
    fn ring_arithmetic() {
        let x = |i| Polynomial::variable(3, i);
        let p = &(&x(0) * &x(2)) - &(&x(1) * &x(1));
        assert_eq!(p, Polynomial::binomial(mono(&[1, 0, 1]), mono(&[0, 2, 0])));
        assert!((&p + &(-&p)).is_zero());
        assert_eq!(&Polynomial::one(3) * &p, p);
        assert_eq!(p.to_string(), "X0*X2 - X1^2");
    }

    #[test]
    fn rendering() {
        let d3 = Polynomial::binomial(mono(&[0, 0, 0, 1, 2]), mono(&[5, 0, 0, 0, 0]));
        assert_eq!(d3.to_string(), "X4^2*X3 - X0^5");
        let d4 = Polynomial::binomial(mono(&[0, 0, 0, 0, 3]), mono(&[4, 1, 0, 0, 0]));
        assert_eq!(d4.to_string(), "X4^3 - X0^4*X1");
        assert_eq!(Polynomial::zero(2).to_string(), "0");
        let mut p = Polynomial::one(2);
        p.add_term(mono(&[1, 0]), BigRational::new(3.into(), 2.into()));
        assert_eq!(p.to_string(), "1 + 3/2*X0");
    }

    #[test]
    fn phi_of_generators() {
        let s = validate(11, 2, 4).unwrap();
        let d3 = Polynomial::binomial(mono(&[0, 0, 0, 1, 2]), mono(&[5, 0, 0, 0, 0]));
        assert!(phi_evaluate(&d3, &s).unwrap().is_zero());
        let minor = Polynomial::binomial(mono(&[1, 0, 1, 0, 0]), mono(&[0, 2, 0, 0, 0]));
        assert!(phi_evaluate(&minor, &s).unwrap().is_zero());
        let x0 = phi_evaluate(&Polynomial::variable(5, 0), &s).unwrap();
        assert_eq!(x0.to_string(), "t^11");
    }

    #[test]
    fn exact_division() {
        let order = MonomialOrder::default();
        let x = |i| Polynomial::variable(3, i);
        let f = &x(0) - &x(1);
        let g = &(&x(2) + &x(0)) * &f;
        assert_eq!(g.div_exact(&f, &order), Some(&x(2) + &x(0)));
        assert_eq!((&g + &x(2)).div_exact(&f, &order), None);
    }

    #[test]
    fn binomial_detection() {
        let b = Polynomial::binomial(mono(&[1, 0]), mono(&[0, 1]));
        assert!(b.is_pure_binomial());
        assert!(!b.scale(&rational(2)).is_pure_binomial());
        assert!(!Polynomial::variable(2, 0).is_pure_binomial());
    }
}
