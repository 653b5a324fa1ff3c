//! Graded Betti tables of `R/I_i` from the closed-form shift formulas, and the
//! scalar invariants read off them.
//!
//! Shifts are stored as the positive `δ` of a summand `R(-δ)`. Column `j` of a
//! table is the homological degree `j` free module, column 0 being `R` itself.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::idealgen::{check_index, delta_degree, IdealError};
use crate::semigroup::{reduce_raw, validate, ArithmeticSequence, RawSequence, SequenceError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ResolutionError {
    #[error("parameters out of range: {0}")]
    IndexOutOfRange(String),
    #[error("not Gorenstein: last column has rank {rank}")]
    NotGorenstein { rank: usize },
    #[error(transparent)]
    Ideal(#[from] IdealError),
}

fn out_of_range(msg: String) -> ResolutionError {
    ResolutionError::IndexOutOfRange(msg)
}

/// Multiset of graded shifts, shift -> multiplicity.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ShiftMultiset(BTreeMap<u64, usize>);

impl ShiftMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, shift: u64, multiplicity: usize) {
        if multiplicity > 0 {
            *self.0.entry(shift).or_default() += multiplicity;
        }
    }

    pub fn union_with(&mut self, other: &ShiftMultiset) {
        for (&s, &k) in &other.0 {
            self.insert(s, k);
        }
    }

    /// Adds `offset` to every shift.
    pub fn translate(&self, offset: u64) -> ShiftMultiset {
        Self(self.0.iter().map(|(&s, &k)| (s + offset, k)).collect())
    }

    /// Total count, with multiplicity.
    pub fn len(&self) -> usize {
        self.0.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn min(&self) -> Option<u64> {
        self.0.keys().next().copied()
    }

    pub fn max(&self) -> Option<u64> {
        self.0.keys().next_back().copied()
    }

    pub fn multiplicity(&self, shift: u64) -> usize {
        self.0.get(&shift).copied().unwrap_or(0)
    }

    /// `(shift, multiplicity)` pairs, ascending.
    pub fn iter(&self) -> impl Iterator<Item = (u64, usize)> + '_ {
        self.0.iter().map(|(&s, &k)| (s, k))
    }

    /// Every shift repeated by its multiplicity, ascending.
    pub fn to_vec(&self) -> Vec<u64> {
        self.iter()
            .flat_map(|(s, k)| std::iter::repeat_n(s, k))
            .collect()
    }
}

impl FromIterator<u64> for ShiftMultiset {
    fn from_iter<I: IntoIterator<Item = u64>>(iter: I) -> Self {
        let mut m = Self::new();
        for s in iter {
            m.insert(s, 1);
        }
        m
    }
}

impl fmt::Display for ShiftMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .iter()
            .map(|(s, k)| match k {
                1 => s.to_string(),
                _ => format!("{s}^{k}"),
            })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

/// Sums of `t` distinct integers from `[0, m-1]`, with repetition; `C(m, t)` entries.
pub fn sigma(m: usize, t: usize) -> Result<ShiftMultiset, ResolutionError> {
    if t < 1 || t > m {
        return Err(out_of_range(format!("sigma({m}, {t}) needs 1 <= t <= m")));
    }
    // ways[k][s]: number of k-subsets of the values seen so far with sum s.
    let max_sum = m * (m - 1) / 2;
    let mut ways = vec![vec![0usize; max_sum + 1]; t + 1];
    ways[0][0] = 1;
    for v in 0..m {
        for k in (1..=t.min(v + 1)).rev() {
            for s in (v..=max_sum).rev() {
                ways[k][s] += ways[k - 1][s - v];
            }
        }
    }
    let mut out = ShiftMultiset::new();
    for (s, &count) in ways[t].iter().enumerate() {
        out.insert(s as u64, count);
    }
    Ok(out)
}

/// Shifts of the Eagon–Northcott module `E_{s-1}`: `s*m0 + k*d + r*d`, `k` in `[1, s-1]`, `r` in `σ(n, s)`.
pub fn en_shifts(seq: &ArithmeticSequence, s: usize) -> Result<ShiftMultiset, ResolutionError> {
    let n = seq.n();
    if s < 2 || s > n {
        return Err(out_of_range(format!("E_(s-1) needs s in [2, {n}], got {s}")));
    }
    let sums = sigma(n, s)?;
    let d = seq.d();
    let mut out = ShiftMultiset::new();
    for k in 1..s as u64 {
        for (r, mult) in sums.iter() {
            out.insert(s as u64 * seq.m0() + k * d + r * d, mult);
        }
    }
    Ok(out)
}

/// Shifts of `L(s, k)`: `m0(a+d+s+1) + k*d + r*d` for `r` in `σ(n, s)`.
pub fn l_shifts(seq: &ArithmeticSequence, s: usize, k: u64) -> Result<ShiftMultiset, ResolutionError> {
    let n = seq.n();
    if s < 1 || s > n {
        return Err(out_of_range(format!("L(s, k) needs s in [1, {n}], got {s}")));
    }
    let base = seq.m0() * (seq.a() + seq.d() + s as u64 + 1) + k * seq.d();
    let mut out = ShiftMultiset::new();
    for (r, mult) in sigma(n, s)?.iter() {
        out.insert(base + r * seq.d(), mult);
    }
    Ok(out)
}

/// Koszul shifts of `(X_0, ..., X_{n-1})` in homological degree `s`, twisted by `δ_i`,
/// coincide with `L(s, i-b)`.
pub fn koszul_twist_identity(seq: &ArithmeticSequence, s: usize, i: usize) -> bool {
    if i < seq.b() || i > seq.n() {
        return false;
    }
    let (Ok(delta), Ok(l)) = (delta_degree(seq, i), l_shifts(seq, s, (i - seq.b()) as u64)) else {
        return false;
    };
    // Koszul module K_s: one summand per s-subset of {X_0..X_{n-1}}, twisted by the weight sum.
    let weights: Vec<u64> = (0..seq.n()).map(|j| seq.term(j)).collect();
    let koszul: ShiftMultiset = (0u32..1 << weights.len())
        .filter(|mask| mask.count_ones() as usize == s)
        .map(|mask| {
            weights
                .iter()
                .enumerate()
                .filter(|(j, _)| mask >> j & 1 == 1)
                .map(|(_, w)| w)
                .sum::<u64>()
        })
        .collect();
    koszul.translate(delta) == l
}

/// Graded Betti table of `R/I_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedBettiTable {
    seq: ArithmeticSequence,
    i: usize,
    columns: Vec<ShiftMultiset>,
}

impl GradedBettiTable {
    /// Wraps arbitrary columns. No minimality or consistency is checked.
    pub fn from_columns(seq: ArithmeticSequence, i: usize, columns: Vec<ShiftMultiset>) -> Self {
        Self { seq, i, columns }
    }

    pub fn seq(&self) -> &ArithmeticSequence {
        &self.seq
    }

    pub fn i(&self) -> usize {
        self.i
    }

    pub fn columns(&self) -> &[ShiftMultiset] {
        &self.columns
    }

    pub fn column(&self, j: usize) -> &ShiftMultiset {
        &self.columns[j]
    }

    pub fn length(&self) -> usize {
        self.columns.len() - 1
    }

    pub fn ranks(&self) -> Vec<u64> {
        self.columns.iter().map(|c| c.len() as u64).collect()
    }

    pub fn max_shift(&self) -> u64 {
        self.columns.iter().filter_map(ShiftMultiset::max).max().unwrap_or(0)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.columns
            .iter()
            .enumerate()
            .map(|(j, c)| if j % 2 == 0 { c.len() as i64 } else { -(c.len() as i64) })
            .sum()
    }

    /// The smallest shift strictly increases from each column to the next.
    pub fn has_increasing_minima(&self) -> bool {
        self.columns
            .windows(2)
            .all(|w| matches!((w[0].min(), w[1].min()), (Some(x), Some(y)) if y > x))
    }

    /// Column 0 is `{0}` and every later shift is positive.
    pub fn has_valid_shape(&self) -> bool {
        self.columns.first().is_some_and(|c| c.to_vec() == vec![0])
            && self.columns[1..].iter().all(|c| c.min().is_some_and(|m| m > 0))
    }
}

impl fmt::Display for GradedBettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (j, c) in self.columns.iter().enumerate() {
            writeln!(f, "j={j}: {c}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct ColumnJson {
    j: usize,
    shifts: ShiftMultiset,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct TableJson {
    m0: u64,
    d: u64,
    n: usize,
    a: u64,
    b: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    i: Option<usize>,
    columns: Vec<ColumnJson>,
    total: Vec<u64>,
}

impl Serialize for GradedBettiTable {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let s = &self.seq;
        TableJson {
            m0: s.m0(),
            d: s.d(),
            n: s.n(),
            a: s.a(),
            b: s.b(),
            i: (self.i != s.n()).then_some(self.i),
            columns: self
                .columns
                .iter()
                .enumerate()
                .map(|(j, c)| ColumnJson { j, shifts: c.clone() })
                .collect(),
            total: self.ranks(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for GradedBettiTable {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let raw = TableJson::deserialize(deserializer)?;
        let seq = validate(raw.m0 as i64, raw.d as i64, raw.n as i64).map_err(D::Error::custom)?;
        if (seq.a(), seq.b()) != (raw.a, raw.b) {
            return Err(D::Error::custom("a, b inconsistent with m0, d, n"));
        }
        if raw.columns.iter().enumerate().any(|(j, c)| c.j != j) {
            return Err(D::Error::custom("columns out of order"));
        }
        let table = GradedBettiTable {
            seq,
            i: raw.i.unwrap_or(seq.n()),
            columns: raw.columns.into_iter().map(|c| c.shifts).collect(),
        };
        if table.ranks() != raw.total {
            return Err(D::Error::custom("total does not match column sizes"));
        }
        Ok(table)
    }
}

/// The minimal graded free resolution of `R/I_i`, `i` in `[b, n]`.
pub fn minimal_table(seq: &ArithmeticSequence, i: usize) -> Result<GradedBettiTable, ResolutionError> {
    check_index(seq, i)?;
    let n = seq.n();
    let span = (i - seq.b()) as u64;
    // E_{s-1}; empty past the end of the Eagon–Northcott complex.
    let en = |s: usize| -> ShiftMultiset {
        if s >= 2 && s <= n {
            en_shifts(seq, s).expect("s in range")
        } else {
            ShiftMultiset::new()
        }
    };
    let l = |s: usize, k: u64| l_shifts(seq, s, k).expect("s in range");

    let mut columns = vec![ShiftMultiset::from_iter([0])];

    let mut first = en(2);
    let delta_b = delta_degree(seq, seq.b())?;
    for k in 0..=span {
        first.insert(delta_b + k * seq.d(), 1);
    }
    columns.push(first);

    for s in 2..=n {
        let mut col = en(s + 1);
        if s as u64 <= span + 1 {
            for k in s as u64 - 1..=span {
                col.union_with(&l(s - 1, k));
            }
        } else {
            for k in span + 1..s as u64 {
                col.union_with(&l(s, k));
            }
        }
        columns.push(col);
    }
    Ok(GradedBettiTable {
        seq: *seq,
        i,
        columns,
    })
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, t| acc * (n - t) / (t + 1))
}

/// `(β_0, ..., β_n)` of `R/I_n` from the two-branch closed formula.
pub fn total_betti(seq: &ArithmeticSequence) -> Vec<u64> {
    let (n, b) = (seq.n() as u64, seq.b() as u64);
    let mut betti = vec![1];
    for j in 1..=n {
        let tail = if j <= n - b + 1 {
            (n - b + 2 - j) * binomial(n, j - 1)
        } else {
            (j + b - n - 1) * binomial(n, j)
        };
        betti.push(j * binomial(n, j + 1) + tail);
    }
    betti
}

/// Cohen–Macaulay type of `R/I_n`: the `c` in `[1, n]` with `c ≡ m0 - 1 (mod n)`.
pub fn cm_type(seq: &ArithmeticSequence) -> u64 {
    let n = seq.n() as u64;
    match (seq.m0() - 1) % n {
        0 => n,
        c => c,
    }
}

pub fn is_gorenstein(seq: &ArithmeticSequence) -> bool {
    seq.n() == 1 || seq.b() == 2
}

/// Cohen–Macaulay type of `R/I_i`.
pub fn cm_type_of_ii(seq: &ArithmeticSequence, i: usize) -> Result<u64, ResolutionError> {
    check_index(seq, i)?;
    let (n, b) = (seq.n(), seq.b());
    Ok(if i == n && b == 1 { n as u64 } else { (n - 1 + b - i) as u64 })
}

/// Weighted Castelnuovo–Mumford regularity of `R/I_n`.
pub fn regularity_formula(seq: &ArithmeticSequence) -> u64 {
    let (m0, d, a) = (seq.m0(), seq.d(), seq.a());
    let (n, b) = (seq.n() as u64, seq.b() as u64);
    let pairs = binomial(n, 2);
    if b == 1 {
        pairs * d + m0 * (a + d) + n * (m0 - 1)
    } else {
        (pairs + b - 1) * d + m0 * (a + d + 1) + n * (m0 - 1)
    }
}

pub fn frobenius_formula(seq: &ArithmeticSequence) -> u64 {
    let (m0, d, a) = (seq.m0(), seq.d(), seq.a());
    if seq.b() == 1 {
        (a - 1) * m0 + d * (m0 - 1)
    } else {
        a * m0 + d * (m0 - 1)
    }
}

/// `reg - g = Σ m_i - (n-b)d - n`.
pub fn reg_frobenius_identity(seq: &ArithmeticSequence) -> bool {
    let sum: u64 = seq.terms().iter().sum();
    let rhs = sum as i128 - ((seq.n() - seq.b()) as u64 * seq.d()) as i128 - seq.n() as i128;
    regularity_formula(seq) as i128 - frobenius_formula(seq) as i128 == rhs
}

/// Checks `β_{j,δ} = β_{n-j, D-δ}` where `D` is the single shift of the last column.
pub fn gorenstein_duality_check(table: &GradedBettiTable) -> Result<bool, ResolutionError> {
    let n = table.length();
    let last = table.column(n);
    if last.len() != 1 {
        return Err(ResolutionError::NotGorenstein { rank: last.len() });
    }
    let top = last.min().unwrap();
    Ok((0..=n).all(|j| {
        let mut mirrored = ShiftMultiset::new();
        for (shift, k) in table.column(n - j).iter() {
            match top.checked_sub(shift) {
                Some(t) => mirrored.insert(t, k),
                None => return false,
            }
        }
        &mirrored == table.column(j)
    }))
}

/// Result of evaluating one translate `m + (j)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TranslateOutcome {
    Betti(Vec<u64>),
    Degenerate(String),
}

impl TranslateOutcome {
    pub fn betti(&self) -> Option<&[u64]> {
        match self {
            TranslateOutcome::Betti(b) => Some(b),
            TranslateOutcome::Degenerate(_) => None,
        }
    }
}

/// Total Betti numbers of the gcd-reduced translate `m + (j)`.
pub fn betti_of_translate(raw: &RawSequence, j: u64) -> Result<TranslateOutcome, SequenceError> {
    if raw.common_difference().is_none() {
        return Err(SequenceError::NotArithmetic(raw.values().to_vec()));
    }
    let (reduced, _) = reduce_raw(&raw.translate(j));
    Ok(match ArithmeticSequence::from_raw(&reduced) {
        Ok(seq) => TranslateOutcome::Betti(total_betti(&seq)),
        Err(e) => TranslateOutcome::Degenerate(format!("{reduced}: {e}")),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Equal,
    Differ,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TranslateComparison {
    pub j: u64,
    pub at_j: TranslateOutcome,
    pub at_j_plus_period: TranslateOutcome,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeriodicityReport {
    pub sequence: Vec<u64>,
    pub period: u64,
    /// `max(0, nd - m0)`; periodicity is claimed from here on.
    pub threshold: u64,
    pub comparisons: Vec<TranslateComparison>,
}

impl PeriodicityReport {
    /// Comparisons at or past the threshold that disagree.
    pub fn violations(&self) -> Vec<u64> {
        self.comparisons
            .iter()
            .filter(|c| c.j >= self.threshold && c.verdict == Verdict::Differ)
            .map(|c| c.j)
            .collect()
    }

    pub fn count(&self, verdict: Verdict) -> usize {
        self.comparisons.iter().filter(|c| c.verdict == verdict).count()
    }

    pub fn holds(&self) -> bool {
        self.violations().is_empty()
    }
}

/// Compares the translates at `j` and `j + nd` for `j` in `[jmin, jmax - nd]`.
pub fn periodicity_scan(raw: &RawSequence, jmin: u64, jmax: u64) -> Result<PeriodicityReport, SequenceError> {
    let d = raw
        .common_difference()
        .ok_or_else(|| SequenceError::NotArithmetic(raw.values().to_vec()))?;
    let n = (raw.values().len() - 1) as u64;
    let period = n * d;
    let threshold = period.saturating_sub(raw.values()[0]);
    let mut comparisons = Vec::new();
    let mut j = jmin;
    while j + period <= jmax {
        let at_j = betti_of_translate(raw, j)?;
        let at_j_plus_period = betti_of_translate(raw, j + period)?;
        let verdict = match (at_j.betti(), at_j_plus_period.betti()) {
            (Some(x), Some(y)) if x == y => Verdict::Equal,
            (Some(_), Some(_)) => Verdict::Differ,
            _ => Verdict::Skipped,
        };
        comparisons.push(TranslateComparison {
            j,
            at_j,
            at_j_plus_period,
            verdict,
        });
        j += 1;
    }
    Ok(PeriodicityReport {
        sequence: raw.values().to_vec(),
        period,
        threshold,
        comparisons,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(m0: i64, d: i64, n: i64) -> ArithmeticSequence {
        validate(m0, d, n).unwrap()
    }

    fn ms(v: &[u64]) -> ShiftMultiset {
        v.iter().copied().collect()
    }

    /// Subset-enumeration oracle for σ.
    fn sigma_bruteforce(m: usize, t: usize) -> ShiftMultiset {
        (0u32..1 << m)
            .filter(|mask| mask.count_ones() as usize == t)
            .map(|mask| (0..m as u64).filter(|r| mask >> r & 1 == 1).sum())
            .collect()
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma(4, 2).unwrap(), ms(&[1, 2, 3, 3, 4, 5]));
        assert_eq!(sigma(5, 1).unwrap(), ms(&[0, 1, 2, 3, 4]));
        assert_eq!(sigma(3, 3).unwrap(), ms(&[3]));
        assert!(sigma(3, 0).is_err());
        assert!(sigma(3, 4).is_err());
        for m in 1..=9 {
            for t in 1..=m {
                let s = sigma(m, t).unwrap();
                assert_eq!(s, sigma_bruteforce(m, t), "sigma({m},{t})");
                assert_eq!(s.len() as u64, binomial(m as u64, t as u64));
            }
        }
    }

    #[test]
    fn en_examples() {
        let s = seq(11, 2, 4);
        assert_eq!(en_shifts(&s, 2).unwrap(), ms(&[26, 28, 30, 30, 32, 34]));
        assert_eq!(en_shifts(&s, 4).unwrap(), ms(&[58, 60, 62]));
        assert_eq!(en_shifts(&seq(6, 1, 4), 2).unwrap(), ms(&[14, 15, 16, 16, 17, 18]));
        assert!(en_shifts(&s, 1).is_err());
        assert!(en_shifts(&s, 5).is_err());
    }

    #[test]
    fn l_examples() {
        let s = seq(11, 2, 4);
        assert_eq!(l_shifts(&s, 4, 3).unwrap(), ms(&[117]));
        assert_eq!(l_shifts(&s, 3, 2).unwrap(), ms(&[98, 100, 102, 104]));
        assert_eq!(l_shifts(&seq(7, 5, 4), 4, 2).unwrap(), ms(&[117]));
        assert!(l_shifts(&s, 0, 0).is_err());
    }

    #[test]
    fn koszul_twists() {
        assert!(koszul_twist_identity(&seq(11, 2, 4), 2, 4));
        assert!(koszul_twist_identity(&seq(6, 1, 4), 4, 2));
        assert!(koszul_twist_identity(&seq(7, 5, 4), 3, 3));
        assert!(!koszul_twist_identity(&seq(11, 2, 4), 2, 2));
    }

    #[test]
    fn golden_p1() {
        let t = minimal_table(&seq(11, 2, 4), 4).unwrap();
        let expected = [
            ms(&[0]),
            ms(&[26, 28, 30, 30, 32, 34, 55, 57]),
            ms(&[41, 43, 43, 45, 45, 47, 47, 49, 68, 70, 72, 74]),
            ms(&[58, 60, 62, 98, 100, 102, 104]),
            ms(&[115, 117]),
        ];
        assert_eq!(t.columns(), &expected);
        assert_eq!(t.to_string().lines().nth(3), Some("j=3: 58 60 62 98 100 102 104"));
    }

    #[test]
    fn principal_case() {
        let t = minimal_table(&seq(2, 1, 1), 1).unwrap();
        assert_eq!(t.columns(), &[ms(&[0]), ms(&[6])]);
        assert_eq!(total_betti(&seq(2, 1, 1)), vec![1, 1]);
    }

    #[test]
    fn betti_patterns() {
        assert_eq!(total_betti(&seq(5, 1, 4)), vec![1, 10, 20, 15, 4]);
        assert_eq!(total_betti(&seq(6, 1, 4)), vec![1, 9, 16, 9, 1]);
        assert_eq!(total_betti(&seq(11, 2, 4)), vec![1, 8, 12, 7, 2]);
        assert_eq!(total_betti(&seq(8, 1, 4)), vec![1, 7, 14, 11, 3]);
        assert_eq!(total_betti(&seq(3, 1, 2)), vec![1, 3, 2]);
    }

    #[test]
    fn types_and_gorenstein() {
        assert_eq!(cm_type(&seq(11, 2, 4)), 2);
        assert_eq!(cm_type(&seq(6, 1, 4)), 1);
        assert_eq!(cm_type(&seq(9, 1, 4)), 4);
        assert!(is_gorenstein(&seq(6, 1, 4)));
        assert!(!is_gorenstein(&seq(11, 2, 4)));
        assert!(is_gorenstein(&seq(2, 1, 1)));
        assert_eq!(cm_type_of_ii(&seq(11, 2, 4), 4), Ok(2));
        assert_eq!(cm_type_of_ii(&seq(11, 2, 4), 3), Ok(3));
        assert_eq!(cm_type_of_ii(&seq(5, 1, 4), 4), Ok(4));
        assert_eq!(cm_type_of_ii(&seq(5, 1, 4), 3), Ok(1));
        assert!(cm_type_of_ii(&seq(11, 2, 4), 2).is_err());
        // Type of R/I_i is the rank of the last column of its table.
        for s in [seq(11, 2, 4), seq(5, 1, 4), seq(6, 1, 4), seq(8, 3, 4)] {
            for i in s.b()..=s.n() {
                let t = minimal_table(&s, i).unwrap();
                assert_eq!(t.column(s.n()).len() as u64, cm_type_of_ii(&s, i).unwrap());
            }
        }
    }

    #[test]
    fn regularity_and_frobenius() {
        let s = seq(11, 2, 4);
        assert_eq!((regularity_formula(&s), frobenius_formula(&s)), (111, 42));
        let s = seq(7, 5, 4);
        assert_eq!((regularity_formula(&s), frobenius_formula(&s)), (113, 37));
        assert_eq!(frobenius_formula(&seq(5, 1, 4)), 4);
        for s in [seq(11, 2, 4), seq(7, 5, 4), seq(5, 1, 4), seq(2, 1, 1)] {
            assert!(reg_frobenius_identity(&s));
        }
    }

    #[test]
    fn duality() {
        let t = minimal_table(&seq(6, 1, 4), 4).unwrap();
        assert_eq!(t.column(4).to_vec(), vec![51]);
        assert_eq!(t.column(1).to_vec(), vec![14, 15, 16, 16, 17, 18, 18, 19, 20]);
        assert_eq!(t.column(3).to_vec(), vec![31, 32, 33, 33, 34, 35, 35, 36, 37]);
        assert_eq!(gorenstein_duality_check(&t), Ok(true));
        let t = minimal_table(&seq(11, 2, 4), 4).unwrap();
        assert_eq!(
            gorenstein_duality_check(&t),
            Err(ResolutionError::NotGorenstein { rank: 2 })
        );
    }

    #[test]
    fn translates() {
        let raw = RawSequence::new(vec![11, 13, 15, 17, 19]).unwrap();
        assert_eq!(betti_of_translate(&raw, 0).unwrap(), betti_of_translate(&raw, 8).unwrap());
        let raw = RawSequence::new(vec![7, 12, 17, 22, 27]).unwrap();
        assert_eq!(
            betti_of_translate(&raw, 0).unwrap(),
            TranslateOutcome::Betti(vec![1, 8, 12, 7, 2])
        );
        // 7 + 13 = 20: the translate reduces by 5 to (4,5,6,7,8), where a = 0.
        assert!(matches!(
            betti_of_translate(&raw, 13).unwrap(),
            TranslateOutcome::Degenerate(_)
        ));
        // 7 + 3 = 10: reduces to (2,3,4,5,6) with d = 1; degenerate too.
        assert!(betti_of_translate(&raw, 3).unwrap().betti().is_none());
        let raw = RawSequence::new(vec![7, 10, 15]).unwrap();
        assert!(betti_of_translate(&raw, 0).is_err());
    }

    #[test]
    fn scans() {
        let raw = RawSequence::new(vec![11, 13, 15, 17, 19]).unwrap();
        let r = periodicity_scan(&raw, 0, 100).unwrap();
        assert_eq!((r.period, r.threshold), (8, 0));
        assert_eq!(r.comparisons.len(), 93);
        assert!(r.holds());
        let raw = RawSequence::new(vec![7, 12, 17, 22, 27]).unwrap();
        let r = periodicity_scan(&raw, 13, 200).unwrap();
        assert_eq!(r.threshold, 13);
        assert!(r.holds());
        assert_eq!(r.count(Verdict::Differ), 0);
    }

    #[test]
    fn table_json_round_trip() {
        let t = minimal_table(&seq(11, 2, 4), 4).unwrap();
        let json = serde_json::to_string(&t).unwrap();
        assert!(json.starts_with(r#"{"m0":11,"d":2,"n":4,"a":2,"b":3,"columns":[{"j":0,"shifts":{"0":1}},{"j":1,"shifts":{"26":1,"28":1,"30":2"#));
        assert!(json.ends_with(r#""total":[1,8,12,7,2]}"#));
        let back: GradedBettiTable = serde_json::from_str(&json).unwrap();
        assert_eq!(back, t);
        let partial = minimal_table(&seq(11, 2, 4), 3).unwrap();
        let back: GradedBettiTable =
            serde_json::from_str(&serde_json::to_string(&partial).unwrap()).unwrap();
        assert_eq!(back, partial);
    }
}
