use thiserror::Error;

/// Errors raised by the kinematics, representation and state routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("massless or tachyonic momentum (s = {0}) has no rest frame")]
    MasslessUnsupported(f64),

    #[error("momentum is off shell: p^2 = {actual}, expected s = {expected}")]
    OffShell { expected: f64, actual: f64 },

    #[error("spinor matrix is not unimodular (|det - 1| = {0:e})")]
    NotUnimodular(f64),

    #[error("matrix is not an SU(2) rotation (unitarity residual {0:e})")]
    NotARotation(f64),

    #[error("spin {0} exceeds the supported range j <= 10")]
    SpinTooLarge(crate::HalfInt),

    #[error("spherical harmonics need an integer orbital label, got l = {0}")]
    InvalidOrbitalLabel(crate::HalfInt),

    #[error("invalid channel: {0}")]
    InvalidChannel(String),

    #[error("invalid mass squared {0}; masses must be positive")]
    InvalidMass(f64),

    #[error("s = {s} is at or below the two-particle threshold {threshold}")]
    BelowThreshold { s: f64, threshold: f64 },

    #[error("quadrature grid {n_theta}x{n_phi} is too coarse (need n_theta >= 2, n_phi >= 4)")]
    GridTooCoarse { n_theta: usize, n_phi: usize },

    #[error("states live on different grids ({0:?} vs {1:?})")]
    GridMismatch((usize, usize), (usize, usize)),

    #[error("spin coefficients are not normalized (sum of squares {0})")]
    NotNormalized(f64),

    #[error("incompatible states: {0}")]
    IncompatibleStates(String),
}

pub type Result<T> = std::result::Result<T, Error>;
