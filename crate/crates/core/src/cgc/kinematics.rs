use crate::error::{Error, Result};
use crate::lorentz::FourMomentum;

use super::TwoParticleSpec;

/// The triangle (Källén) function `Δ(s, s1, s2)`.
///
/// Arguments are sorted before evaluation so every permutation gives the
/// bit-identical result.
pub fn triangle(s: f64, s1: f64, s2: f64) -> f64 {
    let mut v = [s, s1, s2];
    v.sort_by(f64::total_cmp);
    let [a, b, c] = v;
    a * a + b * b + c * c - 2.0 * (a * b + a * c + b * c)
}

fn check_threshold(s: f64, s1: f64, s2: f64) -> Result<f64> {
    let threshold = (s1.sqrt() + s2.sqrt()).powi(2);
    if s.is_nan() || s <= threshold {
        return Err(Error::BelowThreshold { s, threshold });
    }
    Ok(triangle(s, s1, s2))
}

/// `(√2/2) Δ^{1/4}`, the prefactor of a COM-frame basis vector.
pub fn com_normalization(s: f64, s1: f64, s2: f64) -> Result<f64> {
    let delta = check_threshold(s, s1, s2)?;
    Ok(std::f64::consts::FRAC_1_SQRT_2 * delta.powf(0.25))
}

/// COM-frame kinematics of a pair at total energy squared `s`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Kinematics {
    pub s: f64,
    pub s1: f64,
    pub s2: f64,
    pub delta: f64,
    /// Momentum magnitude of either particle, `√(Δ/4s)`.
    pub k: f64,
}

impl Kinematics {
    pub fn new(spec: &TwoParticleSpec, s: f64) -> Result<Self> {
        let delta = check_threshold(s, spec.s1, spec.s2)?;
        Ok(Kinematics { s, s1: spec.s1, s2: spec.s2, delta, k: (delta / (4.0 * s)).sqrt() })
    }

    pub fn energies(&self) -> (f64, f64) {
        let m = self.s.sqrt();
        ((self.s + self.s1 - self.s2) / (2.0 * m), (self.s - self.s1 + self.s2) / (2.0 * m))
    }

    pub fn normalization(&self) -> f64 {
        std::f64::consts::FRAC_1_SQRT_2 * self.delta.powf(0.25)
    }

    /// The back-to-back momenta `(p̃1, p̃2)` with `p̃1` along `(θ, φ)`.
    pub fn com_momenta(&self, theta: f64, phi: f64) -> (FourMomentum, FourMomentum) {
        let (e1, e2) = self.energies();
        let n = [theta.sin() * phi.cos(), theta.sin() * phi.sin(), theta.cos()];
        let q = n.map(|x| self.k * x);
        (FourMomentum::new(e1, q), FourMomentum::new(e2, q.map(|x| -x)))
    }
}
