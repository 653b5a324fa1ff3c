//! Arithmetic sequences and brute-force numerical semigroup computations.
//!
//! Everything downstream reads `(m0, d, n)` and the derived pair `(a, b)` with
//! `m0 = a*n + b`, `b` in `[1, n]`, from an [`ArithmeticSequence`]. The dynamic
//! programming routines here know nothing about the closed-form formulas and
//! are used as ground truth for them.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::hilbert::SeriesCoefficients;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SequenceError {
    #[error("all of m0, d, n must be positive (got m0 = {m0}, d = {d}, n = {n})")]
    NonPositive { m0: i64, d: i64, n: i64 },
    #[error("m0 = {m0} and d = {d} are not coprime (gcd = {gcd})")]
    NotCoprime { m0: u64, d: u64, gcd: u64 },
    #[error("a = 0: m0 = {m0} must exceed n = {n}")]
    DegenerateA { m0: u64, n: usize },
    #[error("sequence needs at least two terms (got {len})")]
    TooShort { len: usize },
    #[error("sequence must be positive and strictly increasing: {0:?}")]
    NotIncreasing(Vec<u64>),
    #[error("sequence {0:?} is not arithmetic")]
    NotArithmetic(Vec<u64>),
}

/// A strictly increasing list of positive integers, not necessarily arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct RawSequence(Vec<u64>);

impl RawSequence {
    pub fn new(values: Vec<u64>) -> Result<Self, SequenceError> {
        if values.len() < 2 {
            return Err(SequenceError::TooShort { len: values.len() });
        }
        if values[0] == 0 || values.windows(2).any(|w| w[0] >= w[1]) {
            return Err(SequenceError::NotIncreasing(values));
        }
        Ok(Self(values))
    }

    pub fn values(&self) -> &[u64] {
        &self.0
    }

    /// Adds `j` to every entry.
    pub fn translate(&self, j: u64) -> Self {
        Self(self.0.iter().map(|&m| m + j).collect())
    }

    /// Common difference, if the sequence is arithmetic.
    pub fn common_difference(&self) -> Option<u64> {
        let d = self.0[1] - self.0[0];
        self.0.windows(2).all(|w| w[1] - w[0] == d).then_some(d)
    }
}

impl TryFrom<Vec<u64>> for RawSequence {
    type Error = SequenceError;

    fn try_from(values: Vec<u64>) -> Result<Self, Self::Error> {
        Self::new(values)
    }
}

impl From<RawSequence> for Vec<u64> {
    fn from(raw: RawSequence) -> Self {
        raw.0
    }
}

impl fmt::Display for RawSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Divides every entry by the gcd of all entries. Returns the reduced sequence and the gcd.
pub fn reduce_raw(raw: &RawSequence) -> (RawSequence, u64) {
    let g = raw.0.iter().fold(0u64, |acc, &m| acc.gcd(&m));
    (RawSequence(raw.0.iter().map(|&m| m / g).collect()), g)
}

/// A validated arithmetic sequence `m_i = m0 + i*d`, `i` in `[0, n]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ArithmeticSequence {
    m0: u64,
    d: u64,
    n: usize,
    a: u64,
    b: usize,
}

impl ArithmeticSequence {
    pub fn new(m0: i64, d: i64, n: i64) -> Result<Self, SequenceError> {
        validate(m0, d, n)
    }

    /// Validates a raw list; it must already be arithmetic.
    pub fn from_raw(raw: &RawSequence) -> Result<Self, SequenceError> {
        let d = raw
            .common_difference()
            .ok_or_else(|| SequenceError::NotArithmetic(raw.0.clone()))?;
        validate(raw.0[0] as i64, d as i64, (raw.0.len() - 1) as i64)
    }

    pub fn m0(&self) -> u64 {
        self.m0
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> usize {
        self.b
    }

    /// `m_i`. Panics if `i > n`.
    pub fn term(&self, i: usize) -> u64 {
        assert!(i <= self.n, "index {i} out of range [0, {}]", self.n);
        self.m0 + i as u64 * self.d
    }

    pub fn last(&self) -> u64 {
        self.term(self.n)
    }

    pub fn terms(&self) -> Vec<u64> {
        (0..=self.n).map(|i| self.term(i)).collect()
    }

    pub fn to_raw(&self) -> RawSequence {
        RawSequence(self.terms())
    }
}

impl fmt::Display for ArithmeticSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_raw().fmt(f)
    }
}

pub fn validate(m0: i64, d: i64, n: i64) -> Result<ArithmeticSequence, SequenceError> {
    if m0 < 1 || d < 1 || n < 1 {
        return Err(SequenceError::NonPositive { m0, d, n });
    }
    let (m0, d, n) = (m0 as u64, d as u64, n as usize);
    let g = m0.gcd(&d);
    if g != 1 {
        return Err(SequenceError::NotCoprime { m0, d, gcd: g });
    }
    if m0 <= n as u64 {
        return Err(SequenceError::DegenerateA { m0, n });
    }
    let b = ((m0 - 1) % n as u64 + 1) as usize;
    let a = (m0 - b as u64) / n as u64;
    Ok(ArithmeticSequence { m0, d, n, a, b })
}

/// `table[s]` is true iff `s` is a nonnegative integer combination of `gens`, for `s` in `[0, limit]`.
pub(crate) fn representable(gens: &[u64], limit: u64) -> Vec<bool> {
    let mut table = vec![false; limit as usize + 1];
    table[0] = true;
    for s in 1..=limit as usize {
        table[s] = gens
            .iter()
            .any(|&g| g as usize <= s && table[s - g as usize]);
    }
    table
}

pub fn is_member(seq: &ArithmeticSequence, s: u64) -> bool {
    representable(&seq.terms(), s)[s as usize]
}

fn dp_to_ceiling(seq: &ArithmeticSequence) -> Vec<bool> {
    // Sylvester: m0*m_n bounds the Frobenius number of {m0, m_n} and hence of the full set.
    representable(&seq.terms(), seq.m0() * seq.last())
}

/// Largest integer outside the semigroup, by dynamic programming.
pub fn frobenius_bruteforce(seq: &ArithmeticSequence) -> u64 {
    let table = dp_to_ceiling(seq);
    table
        .iter()
        .rposition(|&member| !member)
        .expect("m0 >= 2, so 1 is always a gap") as u64
}

/// All positive integers outside the semigroup, ascending.
pub fn gap_list(seq: &ArithmeticSequence) -> Vec<u64> {
    dp_to_ceiling(seq)
        .iter()
        .enumerate()
        .filter(|(_, &member)| !member)
        .map(|(s, _)| s as u64)
        .collect()
}

/// Indicator series of the semigroup: coefficient 1 at `s` iff `s` is a member, for `s` in `[0, bound]`.
pub fn semigroup_series(seq: &ArithmeticSequence, bound: u64) -> SeriesCoefficients {
    let table = representable(&seq.terms(), bound);
    SeriesCoefficients::new(
        table
            .into_iter()
            .map(|member| BigInt::from(member as u8))
            .collect(),
    )
}

/// Brute-force check that no generator is a combination of the others.
pub fn is_minimally_generated(seq: &ArithmeticSequence) -> bool {
    let terms = seq.terms();
    (0..terms.len()).all(|k| {
        let others: Vec<u64> = terms
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != k)
            .map(|(_, &m)| m)
            .collect();
        !representable(&others, terms[k])[terms[k] as usize]
    })
}
