//! Stick-breaking reference sampler for the Poisson–Dirichlet law PD(1).
//!
//! With U₁, U₂, … i.i.d. uniform on [0,1], the stick lengths
//! Vₙ = Uₙ·Π_{i<n}(1−Uᵢ) sum to one; PD(1) is the law of their decreasing
//! rearrangement. Generation stops once the residual Π(1−Uᵢ) falls below a
//! tolerance; the residual is discarded and the sample renormalized, which
//! perturbs moments by O(tol).

use rand::Rng;

use crate::error::{CoreError, Result};
use crate::simplex::MassPartition;

/// Hard cap on stick draws. The residual decays geometrically in
/// expectation, so the cap is unreachable except under RNG failure.
pub const STICK_ITERATION_CAP: usize = 10_000;

/// Stick lengths in generation order plus the undistributed residual.
#[derive(Debug, Clone)]
pub struct StickSequence {
    pub sticks: Vec<f64>,
    pub residual: f64,
}

impl StickSequence {
    pub fn total(&self) -> f64 {
        self.sticks.iter().sum::<f64>() + self.residual
    }
}

/// Draws sticks Vₙ = Uₙ·Π_{i<n}(1−Uᵢ) until the residual drops below
/// `residual_tol`.
pub fn gem1_sticks<R: Rng + ?Sized>(rng: &mut R, residual_tol: f64) -> Result<StickSequence> {
    if !(residual_tol > 0.0 && residual_tol < 1.0) {
        return Err(CoreError::InvalidInput(format!(
            "residual tolerance must lie in (0, 1), got {residual_tol}"
        )));
    }
    let mut sticks = Vec::new();
    let mut residual = 1.0f64;
    while residual >= residual_tol {
        if sticks.len() >= STICK_ITERATION_CAP {
            return Err(CoreError::IterationCap(format!(
                "residual {residual} still above {residual_tol} after {STICK_ITERATION_CAP} sticks"
            )));
        }
        let mut u: f64 = rng.gen();
        while u == 0.0 {
            u = rng.gen();
        }
        sticks.push(u * residual);
        residual *= 1.0 - u;
    }
    Ok(StickSequence { sticks, residual })
}

/// One PD(1) sample: decreasing rearrangement of the sticks, with the
/// residual discarded and the vector renormalized.
pub fn pd1_sample<R: Rng + ?Sized>(rng: &mut R, residual_tol: f64) -> Result<MassPartition> {
    let seq = gem1_sticks(rng, residual_tol)?;
    MassPartition::from_unnormalized(seq.sticks)
}
