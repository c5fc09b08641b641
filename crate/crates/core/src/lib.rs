//! Clebsch-Gordan coefficients of the Poincaré group for two massive particles.
//!
//! The product of two one-particle unitary irreducible representations is
//! decomposed into irreducible pieces labelled by the invariant mass squared,
//! the total spin `j`, a spin component and degeneracy labels. Both the
//! spin-orbit labels `(l, s)` and the helicity labels `(λ̃1, λ̃2)` are supported.
//!
//! ```
//! use poincare_cgc::cgc::{angular_spin_orbit_com, ChannelLabel, TwoParticleSpec};
//! use poincare_cgc::HalfInt;
//!
//! let spec = TwoParticleSpec::fermion_pair();
//! let singlet = ChannelLabel::spin_orbit(HalfInt::ZERO, HalfInt::ZERO, HalfInt::ZERO);
//! let (up, down) = (HalfInt::HALF, HalfInt::from_twice(-1));
//! let a = angular_spin_orbit_com(&spec, &singlet, HalfInt::ZERO, up, down, 0.3, 0.1).unwrap();
//! assert!((a.re - 1.0 / (8.0 * std::f64::consts::PI).sqrt()).abs() < 1e-15);
//! ```
//!
//! The guide in `book/` covers the conventions in detail; its chapters run as doctests.

pub mod error;
pub mod half;
pub mod lorentz;

pub use error::{Error, Result};
pub use half::HalfInt;
pub mod cgc;
pub mod reference;
pub mod sampling;
pub mod states;
pub mod su2;
pub mod verify;
pub mod ylm;

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/introduction.md")]
pub mod book_introduction {}
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/kinematics.md")]
pub mod book_kinematics {}
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/representations.md")]
pub mod book_representations {}
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/coupling.md")]
pub mod book_coupling {}
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/states.md")]
pub mod book_states {}
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/conventions.md")]
pub mod book_conventions {}
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/verification.md")]
pub mod book_verification {}
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/cli.md")]
pub mod book_cli {}
