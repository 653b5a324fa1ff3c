//! Hilbert series comparison.
//!
//! A graded Betti table determines the Hilbert series of `R/I` as
//! `Σ_j (-1)^j Σ_δ t^δ / Π_i (1 - t^{m_i})`. For the defining ideal of the
//! curve this must equal the indicator series of the semigroup, so expanding
//! both sides and comparing coefficients checks every shift of the table.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::resolution::{minimal_table, GradedBettiTable};
use crate::semigroup::{semigroup_series, ArithmeticSequence};

/// Integer coefficients of a power series in degrees `0..=N`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SeriesCoefficients(Vec<BigInt>);

impl SeriesCoefficients {
    pub fn new(coefficients: Vec<BigInt>) -> Self {
        Self(coefficients)
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// First degree where the two series differ, comparing up to the shorter length.
    pub fn first_mismatch(&self, other: &SeriesCoefficients) -> Option<usize> {
        self.0.iter().zip(&other.0).position(|(x, y)| x != y)
    }

    pub fn is_indicator(&self) -> bool {
        self.0.iter().all(|c| c.is_zero() || c.is_one())
    }
}

impl fmt::Display for SeriesCoefficients {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(BigInt::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Alternating shift polynomial `Σ_j (-1)^j Σ_{δ in column j} t^δ`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct NumeratorPolynomial(BTreeMap<u64, BigInt>);

impl NumeratorPolynomial {
    pub fn from_terms(terms: impl IntoIterator<Item = (u64, BigInt)>) -> Self {
        let mut p = Self::default();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exponent: u64, coeff: BigInt) {
        let entry = self.0.entry(exponent).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.0.remove(&exponent);
        }
    }

    pub fn coefficient(&self, exponent: u64) -> BigInt {
        self.0.get(&exponent).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn value_at_one(&self) -> BigInt {
        self.0.values().sum()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, &BigInt)> {
        self.0.iter().map(|(&e, c)| (e, c))
    }
}

pub fn numerator(table: &GradedBettiTable) -> NumeratorPolynomial {
    let mut p = NumeratorPolynomial::default();
    for (j, column) in table.columns().iter().enumerate() {
        let sign = if j % 2 == 0 { 1 } else { -1 };
        for (shift, mult) in column.iter() {
            p.add_term(shift, BigInt::from(sign * mult as i64));
        }
    }
    p
}

/// Coefficients of `numer / Π_i (1 - t^{m_i})` in degrees `0..=bound`.
pub fn expand(numer: &NumeratorPolynomial, seq: &ArithmeticSequence, bound: u64) -> SeriesCoefficients {
    let len = bound as usize + 1;
    let mut c = vec![BigInt::zero(); len];
    for (e, coeff) in numer.terms() {
        if (e as usize) < len {
            c[e as usize] += coeff;
        }
    }
    // Multiplying by 1/(1 - t^m) is a running sum with stride m.
    for m in seq.terms() {
        let m = m as usize;
        for s in m..len {
            let prev = c[s - m].clone();
            c[s] += prev;
        }
    }
    SeriesCoefficients(c)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertReport {
    pub sequence: Vec<u64>,
    pub bound: u64,
    pub status: Status,
    pub first_mismatch: Option<u64>,
}

impl HilbertReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Default comparison bound: largest shift in the table plus `m_n`.
pub fn default_bound(table: &GradedBettiTable) -> u64 {
    table.max_shift() + table.seq().last()
}

/// Compares the series of an arbitrary table against the semigroup series.
pub fn verify_table(table: &GradedBettiTable, bound: Option<u64>) -> HilbertReport {
    let seq = table.seq();
    let bound = bound.unwrap_or_else(|| default_bound(table));
    let lhs = expand(&numerator(table), seq, bound);
    let rhs = semigroup_series(seq, bound);
    let first_mismatch = lhs.first_mismatch(&rhs).map(|k| k as u64);
    HilbertReport {
        sequence: seq.terms(),
        bound,
        status: if first_mismatch.is_none() { Status::Pass } else { Status::Fail },
        first_mismatch,
    }
}

/// Checks the closed-form resolution of `R/I_n` against the semigroup.
pub fn verify_hilbert(seq: &ArithmeticSequence, bound: Option<u64>) -> HilbertReport {
    let table = minimal_table(seq, seq.n()).expect("n is always in [b, n]");
    verify_table(&table, bound)
}
