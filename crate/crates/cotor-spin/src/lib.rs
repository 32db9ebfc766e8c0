//! Exact computation of the cotorsion product of `H*(Spin(n); F2)` — the
//! E2-term of the Rothenberg-Steenrod spectral sequence converging to
//! `H*(BSpin(n); F2)` — for any `n >= 9`, together with the machinery that
//! certifies the computation: sparse GF(2) polynomial arithmetic, term
//! orders, Groebner bases, Steenrod squares, and truncated Poincare series.
//!
//! The headline question is whether the spectral sequence collapses at E2.
//! It does exactly when the integer `h'` computed in [`spinarith`] equals
//! the Hurwitz-Radon number `h`, which happens precisely for `n <= 16`;
//! the crate decides this both by the integer comparison and by expanding
//! and comparing the two Poincare series, and it verifies every supporting
//! identity (vanishing patterns, leading-term formulas, regular-sequence
//! certificates) by direct computation.
//!
//! Start with the runnable examples (`cargo run --example analyze_spin`) or
//! the `cotor-spin` binary, which exposes the same functionality as a small
//! batch CLI.

pub mod cli;
pub mod f2poly;
pub mod groebner;
pub mod order;
pub mod series;
pub mod spinarith;
pub mod steenrod;

pub use f2poly::{Monomial, Polynomial};
pub use order::{build_order_for_n, leading_monomial, TermOrder};
pub use series::{collapse_verdict, poincare_cotor, poincare_quillen, TruncatedSeries, Verdict};
pub use spinarith::{spin_params, SpinParams};
pub use steenrod::{project_to_r, sq, sq_chain, v_generators};
