use std::fmt;

use crate::error::{Error, Result};
use crate::HalfInt;

use super::{Scheme, TwoParticleSpec};

/// The degeneracy labels `η` distinguishing channels of equal `j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Degeneracy {
    /// Orbital angular momentum `l` and total intrinsic spin `s`.
    SpinOrbit { l: HalfInt, s: HalfInt },
    /// COM-frame helicities of the two particles.
    Helicity { lambda1: HalfInt, lambda2: HalfInt },
}

impl Degeneracy {
    pub fn scheme(&self) -> Scheme {
        match self {
            Degeneracy::SpinOrbit { .. } => Scheme::SpinOrbit,
            Degeneracy::Helicity { .. } => Scheme::Helicity,
        }
    }
}

impl fmt::Display for Degeneracy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degeneracy::SpinOrbit { l, s } => write!(f, "l={l};s={s}"),
            Degeneracy::Helicity { lambda1, lambda2 } => write!(f, "lambda1={lambda1};lambda2={lambda2}"),
        }
    }
}

/// One partial-wave channel `(j, η)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ChannelLabel {
    pub j: HalfInt,
    pub eta: Degeneracy,
}

impl ChannelLabel {
    pub fn spin_orbit(j: HalfInt, l: HalfInt, s: HalfInt) -> Self {
        ChannelLabel { j, eta: Degeneracy::SpinOrbit { l, s } }
    }

    pub fn helicity(j: HalfInt, lambda1: HalfInt, lambda2: HalfInt) -> Self {
        ChannelLabel { j, eta: Degeneracy::Helicity { lambda1, lambda2 } }
    }

    pub fn scheme(&self) -> Scheme {
        self.eta.scheme()
    }

    /// Checks the label constraints against the particle spins.
    pub fn validate(&self, spec: &TwoParticleSpec) -> Result<()> {
        let bad = |why: &str| Err(Error::InvalidChannel(format!("{self}: {why}")));
        if self.j < HalfInt::ZERO {
            return bad("negative j");
        }
        match self.eta {
            Degeneracy::SpinOrbit { l, s } => {
                if !l.is_integer() || l < HalfInt::ZERO {
                    return bad("l must be a non-negative integer");
                }
                if s < (spec.j1 - spec.j2).abs() || s > spec.j1 + spec.j2 || !(spec.j1 + spec.j2 - s).is_integer() {
                    return bad("s cannot be formed from the particle spins");
                }
                if self.j < (l - s).abs() || self.j > l + s || !(l + s - self.j).is_integer() {
                    return bad("j, l, s violate the triangle rule");
                }
            }
            Degeneracy::Helicity { lambda1, lambda2 } => {
                if !spec.j1.admits_projection(lambda1) || !spec.j2.admits_projection(lambda2) {
                    return bad("helicity outside the particle spin multiplet");
                }
                if !(self.j - (lambda1 - lambda2)).is_integer() {
                    return bad("j and lambda1 - lambda2 differ by a half-odd amount");
                }
            }
        }
        Ok(())
    }

    /// False for helicity channels with `|λ̃1 − λ̃2| > j`, which contain no states.
    pub fn is_realized(&self) -> bool {
        match self.eta {
            Degeneracy::SpinOrbit { .. } => true,
            Degeneracy::Helicity { lambda1, lambda2 } => (lambda1 - lambda2).abs() <= self.j,
        }
    }
}

impl fmt::Display for ChannelLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "j={} {}", self.j, self.eta)
    }
}

/// All channels of total spin `j`.
///
/// Spin-orbit channels are ordered by `s`, then `l`; helicity channels by
/// descending `λ̃1`, then descending `λ̃2`. The bounds `|l − s| ≤ j ≤ l + s` are inclusive.
pub fn enumerate_channels(spec: &TwoParticleSpec, j: HalfInt, scheme: Scheme) -> Vec<ChannelLabel> {
    match scheme {
        Scheme::SpinOrbit => {
            let mut out = Vec::new();
            for s in HalfInt::range_inclusive((spec.j1 - spec.j2).abs(), spec.j1 + spec.j2) {
                let lo = (j - s).abs();
                if !lo.is_integer() {
                    continue;
                }
                for l in HalfInt::range_inclusive(lo, j + s) {
                    out.push(ChannelLabel::spin_orbit(j, l, s));
                }
            }
            out
        }
        Scheme::Helicity => spec
            .j1
            .projections()
            .flat_map(|l1| spec.j2.projections().map(move |l2| ChannelLabel::helicity(j, l1, l2)))
            .filter(|c| (j - (c.helicity_difference())).is_integer())
            .collect(),
    }
}

impl ChannelLabel {
    fn helicity_difference(&self) -> HalfInt {
        match self.eta {
            Degeneracy::Helicity { lambda1, lambda2 } => lambda1 - lambda2,
            Degeneracy::SpinOrbit { .. } => HalfInt::ZERO,
        }
    }
}

/// Parity and charge-conjugation eigenvalues of a fermion-antifermion channel.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DiscreteSymmetry {
    /// `π_P = (−1)^{l+1}`.
    pub parity: i32,
    /// `ξ_C = (−1)^{l+s}`.
    pub charge_parity: i32,
}

pub fn discrete_symmetry_labels(l: HalfInt, s: HalfInt) -> DiscreteSymmetry {
    DiscreteSymmetry { parity: -l.parity_sign(), charge_parity: (l + s).parity_sign() }
}
