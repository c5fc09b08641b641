//! SL(2,C) kinematics: four-vectors, the spinor-to-vector homomorphism,
//! canonical and helicity boosts, and Wigner rotations.
//!
//! Metric signature is `(+, -, -, -)` throughout. A spinor matrix `α` acts on
//! a four-vector through the Hermitian matrix `x̄ = x⁰ - x·σ` as
//! `x̄ ↦ α x̄ α†`; with that convention the canonical boost
//! `ℓ(p) = (m + σᵘpᵤ) / √(2m(m+E))` takes the rest momentum to `p`.

mod boosts;
mod spinor;
mod vectors;

pub use boosts::{
    canonical_boost, direction_rotation, helicity_boost, representative_boost, wigner_rotation,
    BoostConvention,
};
pub use spinor::{
    compose, spinor_to_lorentz, su2_from_quaternion, su2_y, su2_z, LorentzMatrix, Spinor,
    SpinorTransform,
};
pub use vectors::{FourMomentum, FourVector};
