//! The matrices `A` and `B`, the minors of `A`, the binomials `Δ_i`, and the
//! ideals `I_i = I_2(A) + (Δ_b, ..., Δ_i)` for `i` in `[b, n]`. `I_n` is the
//! defining ideal of the monomial curve.

use std::fmt;

use thiserror::Error;

use crate::groebner::{GroebnerEngine, GroebnerError};
use crate::polyring::{phi_evaluate, Monomial, Polynomial};
use crate::resolution::total_betti;
use crate::semigroup::ArithmeticSequence;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error("index {i} out of range [{lo}, {hi}]")]
    IndexOutOfRange { i: usize, lo: usize, hi: usize },
}

pub(crate) fn check_index(seq: &ArithmeticSequence, i: usize) -> Result<(), IdealError> {
    if i < seq.b() || i > seq.n() {
        return Err(IdealError::IndexOutOfRange {
            i,
            lo: seq.b(),
            hi: seq.n(),
        });
    }
    Ok(())
}

/// A 2-row matrix of polynomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicMatrix {
    pub rows: [Vec<Polynomial>; 2],
}

impl SymbolicMatrix {
    pub fn ncols(&self) -> usize {
        self.rows[0].len()
    }

    /// The 2x2 minor on columns `p < q`: `rows[0][p]*rows[1][q] - rows[0][q]*rows[1][p]`.
    pub fn minor(&self, p: usize, q: usize) -> Polynomial {
        &(&self.rows[0][p] * &self.rows[1][q]) - &(&self.rows[0][q] * &self.rows[1][p])
    }
}

impl fmt::Display for SymbolicMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(Polynomial::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

fn nvars(seq: &ArithmeticSequence) -> usize {
    seq.n() + 1
}

fn var(seq: &ArithmeticSequence, i: usize) -> Polynomial {
    Polynomial::variable(nvars(seq), i)
}

/// `A = [[X_0, ..., X_{n-1}], [X_1, ..., X_n]]`.
pub fn matrix_a(seq: &ArithmeticSequence) -> SymbolicMatrix {
    let n = seq.n();
    SymbolicMatrix {
        rows: [
            (0..n).map(|j| var(seq, j)).collect(),
            (1..=n).map(|j| var(seq, j)).collect(),
        ],
    }
}

/// `B`: first column `(X_n^a, X_0^{a+d})`, then `(X_j, X_{j+b})` for `j` in `[0, n-b]`.
pub fn matrix_b(seq: &ArithmeticSequence) -> SymbolicMatrix {
    let (n, b) = (seq.n(), seq.b());
    let k = nvars(seq);
    let mut top = vec![Polynomial::monomial(Monomial::var(k, n, seq.a() as u32))];
    let mut bottom = vec![Polynomial::monomial(Monomial::var(
        k,
        0,
        (seq.a() + seq.d()) as u32,
    ))];
    for j in 0..=n - b {
        top.push(var(seq, j));
        bottom.push(var(seq, j + b));
    }
    SymbolicMatrix {
        rows: [top, bottom],
    }
}

/// `X_i*X_{j+1} - X_{i+1}*X_j` for `0 <= i < j <= n-1`, in `(i, j)` order.
pub fn minors_a(seq: &ArithmeticSequence) -> Vec<Polynomial> {
    let n = seq.n();
    let k = nvars(seq);
    let mut out = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            let plus = Monomial::var(k, i, 1).mul(&Monomial::var(k, j + 1, 1));
            let minus = Monomial::var(k, i + 1, 1).mul(&Monomial::var(k, j, 1));
            out.push(Polynomial::binomial(plus, minus));
        }
    }
    out
}

/// Minors of `B` on two non-first columns; these already lie in `I_2(A)`.
pub fn minors_b_nonprincipal(seq: &ArithmeticSequence) -> Vec<Polynomial> {
    let b = matrix_b(seq);
    let mut out = Vec::new();
    for p in 1..b.ncols() {
        for q in p + 1..b.ncols() {
            out.push(b.minor(p, q));
        }
    }
    out
}

/// `Δ_i = X_n^a X_i - X_0^{a+d} X_{i-b}`.
pub fn delta(seq: &ArithmeticSequence, i: usize) -> Result<Polynomial, IdealError> {
    check_index(seq, i)?;
    let k = nvars(seq);
    let plus = Monomial::var(k, seq.n(), seq.a() as u32).mul(&Monomial::var(k, i, 1));
    let minus = Monomial::var(k, 0, (seq.a() + seq.d()) as u32).mul(&Monomial::var(k, i - seq.b(), 1));
    Ok(Polynomial::binomial(plus, minus))
}

/// Weighted degree of `Δ_i`: `m0(a+d+1) + (i-b)d`.
pub fn delta_degree(seq: &ArithmeticSequence, i: usize) -> Result<u64, IdealError> {
    check_index(seq, i)?;
    Ok(seq.m0() * (seq.a() + seq.d() + 1) + (i - seq.b()) as u64 * seq.d())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSet {
    pub seq: ArithmeticSequence,
    pub i: usize,
    pub minors: Vec<Polynomial>,
    /// `Δ_b, ..., Δ_i`.
    pub deltas: Vec<Polynomial>,
}

impl GeneratorSet {
    /// Minors first, then the deltas.
    pub fn generators(&self) -> Vec<Polynomial> {
        self.minors.iter().chain(&self.deltas).cloned().collect()
    }

    pub fn len(&self) -> usize {
        self.minors.len() + self.deltas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl fmt::Display for GeneratorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for g in self.minors.iter().chain(&self.deltas) {
            writeln!(f, "{g}")?;
        }
        Ok(())
    }
}

pub fn ideal_i(seq: &ArithmeticSequence, i: usize) -> Result<GeneratorSet, IdealError> {
    check_index(seq, i)?;
    Ok(GeneratorSet {
        seq: *seq,
        i,
        minors: minors_a(seq),
        deltas: (seq.b()..=i).map(|k| delta(seq, k)).collect::<Result<_, _>>()?,
    })
}

/// Every generator of `I_i` maps to zero under `X_j -> t^{m_j}`.
pub fn verify_phi_vanishing(seq: &ArithmeticSequence, i: usize) -> Result<bool, IdealError> {
    let set = ideal_i(seq, i)?;
    Ok(set.generators().iter().all(|g| {
        phi_evaluate(g, seq)
            .map(|image| image.is_zero())
            .unwrap_or(false)
    }))
}

/// The generators of `I_n` number `β_1` and none lies in the ideal of the others.
pub fn verify_minimal_generation(seq: &ArithmeticSequence) -> Result<bool, GroebnerError> {
    verify_minimal_generation_with(seq, &GroebnerEngine::default())
}

pub fn verify_minimal_generation_with(
    seq: &ArithmeticSequence,
    engine: &GroebnerEngine,
) -> Result<bool, GroebnerError> {
    let gens = ideal_i(seq, seq.n())
        .expect("n is always in [b, n]")
        .generators();
    if gens.len() as u64 != total_betti(seq)[1] {
        return Ok(false);
    }
    for k in 0..gens.len() {
        let others: Vec<Polynomial> = gens
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != k)
            .map(|(_, g)| g.clone())
            .collect();
        if engine.is_member(&gens[k], &others)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Outcome of one colon computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColonCheck {
    /// `None` for `I_2(A) : Δ_b`, otherwise `i` for `I_{i-1} : Δ_i`.
    pub i: Option<usize>,
    pub expected_ideal: bool,
    /// `X_n` is not in the colon ideal; always true for the first check.
    pub excludes_last_variable: bool,
}

impl ColonCheck {
    pub fn passed(&self) -> bool {
        self.expected_ideal && self.excludes_last_variable
    }
}

/// `I_2(A) : Δ_b = I_2(A)` and `I_{i-1} : Δ_i = (X_0, ..., X_{n-1})` for `i` in `[b+1, n]`.
pub fn verify_colon_lemmas(seq: &ArithmeticSequence) -> Result<Vec<ColonCheck>, GroebnerError> {
    verify_colon_lemmas_with(seq, &GroebnerEngine::default())
}

pub fn verify_colon_lemmas_with(
    seq: &ArithmeticSequence,
    engine: &GroebnerEngine,
) -> Result<Vec<ColonCheck>, GroebnerError> {
    let (n, b) = (seq.n(), seq.b());
    let minors = minors_a(seq);
    let delta_b = delta(seq, b).expect("b in range");
    let colon = engine.colon(&minors, &delta_b)?;
    let mut checks = vec![ColonCheck {
        i: None,
        expected_ideal: engine.ideals_equal(&colon, &minors)?,
        excludes_last_variable: true,
    }];

    let variables: Vec<Polynomial> = (0..n).map(|j| var(seq, j)).collect();
    let last = var(seq, n);
    for i in b + 1..=n {
        let previous = ideal_i(seq, i - 1).expect("i - 1 in range").generators();
        let colon = engine.colon(&previous, &delta(seq, i).expect("i in range"))?;
        checks.push(ColonCheck {
            i: Some(i),
            expected_ideal: engine.ideals_equal(&colon, &variables)?,
            excludes_last_variable: !engine.is_member(&last, &colon)?,
        });
    }
    Ok(checks)
}
