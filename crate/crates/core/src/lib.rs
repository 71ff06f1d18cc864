//! Split-merge chain on the simplex with exact symmetric-group character
//! verification.
//!
//! The crate has three layers:
//!
//! - [`simplex`] and [`pd`]: the split-merge Markov step on finite-support
//!   points of the simplex, the averaged half-step chain, and a
//!   stick-breaking reference sampler for the Poisson–Dirichlet law PD(1).
//! - [`perm`]: the finite symmetric-group realization — induced
//!   permutations, the labelled cycle-insertion sampler attached to a
//!   simplex point, Haar sampling, and the transposition-shift step whose
//!   cycle fractions reproduce the split-merge step.
//! - [`partition`] and [`character`]: exact-rational Young-diagram and
//!   character combinatorics — hook removal, horizontal-2-strip chains,
//!   canonical/shifted projections with a brute-force fiber-sum oracle, and
//!   the convergence coefficients a_q(l) of the averaged chain, computed by
//!   two independent routes.
//!
//! Binomial means of the chain started at (1, 0, …) have S₂ observable
//! E[Σxᵢ²] = 1/2 + 1/(q+2) after q half steps; the Monte Carlo and the
//! exact engines check each other on that family and on the chain's limit
//! against PD(1) samplers.

pub mod character;
pub mod error;
pub mod partition;
pub mod pd;
pub mod perm;
pub mod rng;
pub mod simplex;
pub mod stats;

pub use character::{ClassFunction, Rational};
pub use error::{CoreError, Result};
pub use partition::{Partition, SkewShape};
pub use perm::{CycleProfile, LabeledPermutation, Permutation};
pub use simplex::{ChainStatistics, MassPartition};
