//! A small Buchberger engine: reduced Gröbner bases, normal forms, ideal
//! membership and equality, and colon ideals by tag-variable elimination.
//!
//! This is an oracle for desk-scale binomial ideals, not a general CAS. Pair
//! processing is capped so that runaway computations fail with
//! [`GroebnerError::PairLimit`] instead of hanging.

use std::cmp::Ordering;
use std::collections::HashSet;

use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::polyring::{Monomial, Polynomial};

pub const DEFAULT_MAX_PAIRS: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroebnerError {
    #[error("S-pair limit of {limit} exceeded")]
    PairLimit { limit: usize },
    #[error("intersection element is not divisible by the colon polynomial")]
    InexactQuotient,
}

/// Monomial orders on `X_0 > X_1 > ... > X_{k-1}`, all with standard degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic.
    #[default]
    DegRevLex,
    /// Variables with index `>= block` dominate everything else: compare their
    /// total degree first, then break ties by degrevlex on all variables.
    Elimination { block: usize },
}

impl MonomialOrder {
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::DegRevLex => degrevlex(a.exponents(), b.exponents()),
            MonomialOrder::Elimination { block } => {
                let tail = |m: &Monomial| -> u64 {
                    m.exponents()[block.min(m.nvars())..].iter().map(|&e| e as u64).sum()
                };
                tail(a)
                    .cmp(&tail(b))
                    .then_with(|| degrevlex(a.exponents(), b.exponents()))
            }
        }
    }
}

fn degrevlex(a: &[u32], b: &[u32]) -> Ordering {
    let deg = |e: &[u32]| e.iter().map(|&x| x as u64).sum::<u64>();
    deg(a).cmp(&deg(b)).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

type Term = (Monomial, BigRational);

/// Terms in ascending order; the leading term is last.
type Sorted = Vec<Term>;

fn to_sorted(p: &Polynomial, order: &MonomialOrder) -> Sorted {
    p.sorted_terms(order)
        .into_iter()
        .map(|(m, c)| (m.clone(), c.clone()))
        .collect()
}

fn from_sorted(nvars: usize, terms: Sorted) -> Polynomial {
    Polynomial::from_terms(nvars, terms)
}

fn leading(p: &Sorted) -> &Monomial {
    &p.last().expect("nonzero polynomial").0
}

fn make_monic(mut p: Sorted) -> Sorted {
    if let Some((_, lc)) = p.last() {
        if !lc.is_one() {
            let inv = lc.recip();
            for (_, c) in p.iter_mut() {
                *c *= &inv;
            }
        }
    }
    p
}

/// `a - coeff * factor * b`, all ascending.
fn sub_multiple(
    a: &[Term],
    b: &[Term],
    factor: &Monomial,
    coeff: &BigRational,
    order: &MonomialOrder,
) -> Sorted {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut scaled = b.iter().map(|(m, c)| (m.mul(factor), c * coeff)).peekable();
    let mut left = a.iter().peekable();
    loop {
        match (left.peek(), scaled.peek()) {
            (None, None) => break,
            (Some(_), None) => out.push(left.next().unwrap().clone()),
            (None, Some(_)) => {
                let (m, c) = scaled.next().unwrap();
                out.push((m, -c));
            }
            (Some((ma, _)), Some((mb, _))) => match order.compare(ma, mb) {
                Ordering::Less => out.push(left.next().unwrap().clone()),
                Ordering::Greater => {
                    let (m, c) = scaled.next().unwrap();
                    out.push((m, -c));
                }
                Ordering::Equal => {
                    let (m, ca) = left.next().unwrap();
                    let (_, cb) = scaled.next().unwrap();
                    let c = ca - cb;
                    if !c.is_zero() {
                        out.push((m.clone(), c));
                    }
                }
            },
        }
    }
    out
}

/// Full reduction of `p` by monic `basis`.
fn reduce(p: Sorted, basis: &[Sorted], order: &MonomialOrder) -> Sorted {
    let mut todo = p;
    let mut remainder: Vec<Term> = Vec::new();
    while let Some((m, c)) = todo.last() {
        match basis.iter().find(|g| leading(g).divides(m)) {
            Some(g) => {
                let factor = m.div(leading(g)).unwrap();
                let coeff = c / &g.last().unwrap().1;
                todo = sub_multiple(&todo, g, &factor, &coeff, order);
            }
            None => remainder.push(todo.pop().unwrap()),
        }
    }
    remainder.reverse();
    remainder
}

fn s_polynomial(f: &Sorted, g: &Sorted, order: &MonomialOrder) -> Sorted {
    let lcm = leading(f).lcm(leading(g));
    let ff = lcm.div(leading(f)).unwrap();
    let fg = lcm.div(leading(g)).unwrap();
    let scaled: Sorted = f.iter().map(|(m, c)| (m.mul(&ff), c.clone())).collect();
    sub_multiple(&scaled, g, &fg, &BigRational::one(), order)
}

/// A reduced Gröbner basis; generators are monic and sorted by ascending leading monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    nvars: usize,
    generators: Vec<Polynomial>,
    order: MonomialOrder,
    sorted: Vec<Sorted>,
}

impl GroebnerBasis {
    fn from_sorted(nvars: usize, sorted: Vec<Sorted>, order: MonomialOrder) -> Self {
        Self {
            nvars,
            generators: sorted.iter().map(|p| from_sorted(nvars, p.clone())).collect(),
            order,
            sorted,
        }
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// True iff the basis generates the zero ideal.
    pub fn is_zero_ideal(&self) -> bool {
        self.generators.is_empty()
    }

    /// True iff the basis generates the unit ideal.
    pub fn is_unit_ideal(&self) -> bool {
        self.sorted.iter().any(|g| leading(g).is_one())
    }

    /// Remainder of multivariate division by the basis.
    pub fn normal_form(&self, p: &Polynomial) -> Polynomial {
        let r = reduce(to_sorted(p, &self.order), &self.sorted, &self.order);
        from_sorted(p.nvars(), r)
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        self.normal_form(p).is_zero()
    }

    /// Every S-polynomial reduces to zero.
    pub fn s_pairs_reduce_to_zero(&self) -> bool {
        let k = self.sorted.len();
        (0..k).all(|i| {
            (i + 1..k).all(|j| {
                let s = s_polynomial(&self.sorted[i], &self.sorted[j], &self.order);
                reduce(s, &self.sorted, &self.order).is_empty()
            })
        })
    }

    /// No term of any generator is divisible by the leading monomial of another.
    pub fn is_reduced(&self) -> bool {
        self.sorted.iter().enumerate().all(|(i, g)| {
            g.last().is_some_and(|(_, c)| c.is_one())
                && self.sorted.iter().enumerate().all(|(j, h)| {
                    i == j || g.iter().all(|(m, _)| !leading(h).divides(m))
                })
        })
    }
}

/// Buchberger configuration. Only the pair cap is tunable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroebnerEngine {
    pub max_pairs: usize,
}

impl Default for GroebnerEngine {
    fn default() -> Self {
        Self {
            max_pairs: DEFAULT_MAX_PAIRS,
        }
    }
}

impl GroebnerEngine {
    pub fn with_max_pairs(max_pairs: usize) -> Self {
        Self { max_pairs }
    }

    /// Reduced Gröbner basis of the ideal generated by `gens`. Zero generators are ignored.
    pub fn buchberger(
        &self,
        gens: &[Polynomial],
        order: MonomialOrder,
    ) -> Result<GroebnerBasis, GroebnerError> {
        let nvars = gens.first().map_or(0, Polynomial::nvars);
        let mut basis: Vec<Sorted> = gens
            .iter()
            .filter(|g| !g.is_zero())
            .map(|g| make_monic(to_sorted(g, &order)))
            .collect();

        let mut pending: HashSet<(usize, usize)> = HashSet::new();
        for j in 0..basis.len() {
            for i in 0..j {
                pending.insert((i, j));
            }
        }
        let mut processed = 0usize;

        while !pending.is_empty() {
            // Normal strategy: smallest lcm first; ties broken by indices for determinism.
            let &(i, j) = pending
                .iter()
                .min_by(|&&(i1, j1), &&(i2, j2)| {
                    let l1 = leading(&basis[i1]).lcm(leading(&basis[j1]));
                    let l2 = leading(&basis[i2]).lcm(leading(&basis[j2]));
                    order.compare(&l1, &l2).then((i1, j1).cmp(&(i2, j2)))
                })
                .unwrap();
            pending.remove(&(i, j));
            processed += 1;
            if processed > self.max_pairs {
                return Err(GroebnerError::PairLimit {
                    limit: self.max_pairs,
                });
            }

            let (li, lj) = (leading(&basis[i]), leading(&basis[j]));
            if li.is_coprime(lj) {
                continue;
            }
            let lcm = li.lcm(lj);
            let key = |x: usize, y: usize| (x.min(y), x.max(y));
            let chain = (0..basis.len()).any(|k| {
                k != i
                    && k != j
                    && leading(&basis[k]).divides(&lcm)
                    && !pending.contains(&key(i, k))
                    && !pending.contains(&key(j, k))
            });
            if chain {
                continue;
            }

            let s = s_polynomial(&basis[i], &basis[j], &order);
            let r = reduce(s, &basis, &order);
            if !r.is_empty() {
                let new = basis.len();
                basis.push(make_monic(r));
                for k in 0..new {
                    pending.insert((k, new));
                }
            }
        }

        Ok(GroebnerBasis::from_sorted(
            nvars,
            interreduce(basis, &order),
            order,
        ))
    }

    pub fn is_member(&self, p: &Polynomial, gens: &[Polynomial]) -> Result<bool, GroebnerError> {
        if p.is_zero() {
            return Ok(true);
        }
        Ok(self.buchberger(gens, MonomialOrder::default())?.contains(p))
    }

    /// Generators of `(gens) : f`, as a reduced degrevlex basis.
    ///
    /// `(gens) ∩ (f)` is the `u`-free part of the basis of `u*gens + (1-u)*f`
    /// in an order eliminating the tag variable `u`; dividing by `f` gives the colon.
    pub fn colon(&self, gens: &[Polynomial], f: &Polynomial) -> Result<Vec<Polynomial>, GroebnerError> {
        assert!(!f.is_zero(), "colon by the zero polynomial");
        let nvars = f.nvars();
        if gens.iter().all(Polynomial::is_zero) {
            return Ok(Vec::new());
        }
        let u = Monomial::var(nvars + 1, nvars, 1);
        let f_ext = f.extend_vars(1);
        let mut tagged: Vec<Polynomial> = gens
            .iter()
            .map(|g| g.extend_vars(1).mul_monomial(&u))
            .collect();
        tagged.push(&f_ext - &f_ext.mul_monomial(&u));

        let gb = self.buchberger(&tagged, MonomialOrder::Elimination { block: nvars })?;
        let order = MonomialOrder::default();
        let quotients = gb
            .generators()
            .iter()
            .filter_map(|h| h.truncate_vars(nvars))
            .map(|h| h.div_exact(f, &order).ok_or(GroebnerError::InexactQuotient))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(self.buchberger(&quotients, order)?.generators().to_vec())
    }

    pub fn ideals_equal(&self, a: &[Polynomial], b: &[Polynomial]) -> Result<bool, GroebnerError> {
        let order = MonomialOrder::default();
        let ga = self.buchberger(a, order)?;
        let gb = self.buchberger(b, order)?;
        Ok(b.iter().all(|p| ga.contains(p)) && a.iter().all(|p| gb.contains(p)))
    }
}

/// Minimal then reduced basis, sorted by ascending leading monomial.
fn interreduce(basis: Vec<Sorted>, order: &MonomialOrder) -> Vec<Sorted> {
    let mut basis = basis;
    basis.sort_by(|a, b| order.compare(leading(a), leading(b)));
    let mut minimal: Vec<Sorted> = Vec::new();
    for g in basis {
        if !minimal.iter().any(|h| leading(h).divides(leading(&g))) {
            minimal.push(g);
        }
    }
    (0..minimal.len())
        .map(|i| {
            let others: Vec<Sorted> = minimal
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, h)| h.clone())
                .collect();
            make_monic(reduce(minimal[i].clone(), &others, order))
        })
        .collect()
}

pub fn buchberger(gens: &[Polynomial], order: MonomialOrder) -> Result<GroebnerBasis, GroebnerError> {
    GroebnerEngine::default().buchberger(gens, order)
}

pub fn normal_form(p: &Polynomial, gb: &GroebnerBasis) -> Polynomial {
    gb.normal_form(p)
}

pub fn is_member(p: &Polynomial, gens: &[Polynomial]) -> Result<bool, GroebnerError> {
    GroebnerEngine::default().is_member(p, gens)
}

pub fn colon(gens: &[Polynomial], f: &Polynomial) -> Result<Vec<Polynomial>, GroebnerError> {
    GroebnerEngine::default().colon(gens, f)
}

pub fn ideals_equal(a: &[Polynomial], b: &[Polynomial]) -> Result<bool, GroebnerError> {
    GroebnerEngine::default().ideals_equal(a, b)
}
