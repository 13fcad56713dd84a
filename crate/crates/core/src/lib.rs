//! Exact finite-set arithmetic and extremal-set search over ℤ and ℤ_q.
//!
//! The crate is organized around the quantities that compare k-fold sumsets
//! with difference sets:
//!
//! * [`set`] — bitset-backed cyclic sets and sorted integer sets with exact
//!   sumset, difference-set, dilation and CRT arithmetic.
//! * [`oracle`] — exhaustive branch-and-bound minimizers for the six
//!   extremal functions (min |kA| or |A−A| under cyclic / run / cardinality
//!   side conditions), plus greedy B_k witness generators.
//! * [`construction`] — the recursive modulus/φ construction that produces
//!   sets with full difference set but small k-fold sumset, together with
//!   exact-rational density certificates and seeded sampled verification.
//! * [`transform`] — constructive bridges between the integer and residue
//!   worlds: submultiplicativity witnesses, the doubling lift, the ⌊q{tn}⌋
//!   projection, Lorentz-style random covers, and the full pipeline that
//!   turns a large-difference integer set into a full-difference residue set.
//! * [`check`] — exact empirical checkers for the inequalities the theory
//!   guarantees (Plünnecke–Ruzsa, triangle lower bound, Freiman–Pigaev,
//!   power-mean monotonicity), run against structured random generators.
//!
//! All randomized procedures take explicit 64-bit seeds and derive
//! per-sample counter streams, so every result is reproducible for any
//! worker count. All accepted comparisons are exact: integer powers are
//! cross-multiplied, fractional exponents are root-bounded, and densities
//! are big-rational arithmetic. Floating point appears only in
//! human-readable report columns.

pub mod bits;
pub mod check;
pub mod config;
pub mod construction;
pub mod error;
pub mod oracle;
pub mod primes;
pub mod ratio;
pub mod rng;
pub mod set;
pub mod transform;

pub use error::{Error, Result};
