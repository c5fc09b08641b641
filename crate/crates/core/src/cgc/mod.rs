//! Angular and kinematic factors of two-particle Clebsch-Gordan coefficients.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::HalfInt;

mod amplitude;
mod channels;
mod kinematics;

pub use amplitude::{
    angular_helicity_com, angular_helicity_general, angular_spin_orbit_com, angular_spin_orbit_general,
    component_phase, helicity_to_wigner, relative_direction,
};
pub use channels::{discrete_symmetry_labels, enumerate_channels, ChannelLabel, Degeneracy, DiscreteSymmetry};
pub use kinematics::{com_normalization, triangle, Kinematics};

/// Coupling scheme of the degeneracy labels.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Scheme {
    SpinOrbit,
    Helicity,
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Scheme::SpinOrbit => "spin-orbit",
            Scheme::Helicity => "helicity",
        })
    }
}

impl FromStr for Scheme {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "spin-orbit" => Ok(Scheme::SpinOrbit),
            "helicity" => Ok(Scheme::Helicity),
            other => Err(format!("unknown scheme `{other}` (expected spin-orbit or helicity)")),
        }
    }
}

/// Masses squared and spins of the two particles.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TwoParticleSpec {
    pub s1: f64,
    pub s2: f64,
    pub j1: HalfInt,
    pub j2: HalfInt,
}

impl TwoParticleSpec {
    pub fn new(s1: f64, s2: f64, j1: HalfInt, j2: HalfInt) -> Result<Self> {
        for s in [s1, s2] {
            if !(s > 0.0 && s.is_finite()) {
                return Err(Error::InvalidMass(s));
            }
        }
        for j in [j1, j2] {
            if j < HalfInt::ZERO {
                return Err(Error::InvalidChannel(format!("negative particle spin {j}")));
            }
        }
        Ok(TwoParticleSpec { s1, s2, j1, j2 })
    }

    /// Two spin-½ particles of unit mass.
    pub fn fermion_pair() -> Self {
        TwoParticleSpec { s1: 1.0, s2: 1.0, j1: HalfInt::HALF, j2: HalfInt::HALF }
    }

    /// Spin pairs `(χ1, χ2)` in the storage order used by states: `χ1` major, both descending.
    pub fn spin_pairs(&self) -> Vec<(HalfInt, HalfInt)> {
        self.j1.projections().flat_map(|a| self.j2.projections().map(move |b| (a, b))).collect()
    }
}
