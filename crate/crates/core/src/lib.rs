//! Minimal graded free resolutions of monomial curves defined by arithmetic
//! sequences `m0 < m0 + d < ... < m0 + n*d`.
//!
//! The crate builds the defining ideal from its binomial generators, writes
//! down the graded Betti table of `R/I_i` in closed form, derives the usual
//! invariants from it, and checks the results against two independent
//! oracles: the semigroup's own Hilbert series and a small Gröbner engine.

pub mod groebner;
pub mod hilbert;
pub mod idealgen;
pub mod polyring;
pub mod resolution;
pub mod semigroup;

pub use groebner::{GroebnerBasis, GroebnerEngine, GroebnerError, MonomialOrder};
pub use hilbert::{HilbertReport, SeriesCoefficients};
pub use idealgen::GeneratorSet;
pub use polyring::{Monomial, Polynomial, UnivariatePolynomial};
pub use resolution::{GradedBettiTable, ShiftMultiset};
pub use semigroup::{ArithmeticSequence, RawSequence, SequenceError};
