use std::ops::{Add, Index, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// A contravariant four-vector `(t, x, y, z)`.
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct FourVector(pub [f64; 4]);

impl FourVector {
    pub const ZERO: FourVector = FourVector([0.0; 4]);

    pub fn new(t: f64, x: f64, y: f64, z: f64) -> Self {
        FourVector([t, x, y, z])
    }

    pub fn time(&self) -> f64 {
        self.0[0]
    }

    pub fn spatial(&self) -> [f64; 3] {
        [self.0[1], self.0[2], self.0[3]]
    }

    /// Minkowski product with signature `(+,-,-,-)`.
    pub fn dot(&self, other: &FourVector) -> f64 {
        self.0[0] * other.0[0] - self.0[1] * other.0[1] - self.0[2] * other.0[2] - self.0[3] * other.0[3]
    }

    pub fn norm_sqr(&self) -> f64 {
        self.dot(self)
    }

    /// Largest absolute component.
    pub fn max_abs(&self) -> f64 {
        self.0.iter().fold(0.0_f64, |m, x| m.max(x.abs()))
    }
}

impl Index<usize> for FourVector {
    type Output = f64;
    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

impl Add for FourVector {
    type Output = FourVector;
    fn add(self, o: FourVector) -> FourVector {
        FourVector(std::array::from_fn(|i| self.0[i] + o.0[i]))
    }
}

impl Sub for FourVector {
    type Output = FourVector;
    fn sub(self, o: FourVector) -> FourVector {
        FourVector(std::array::from_fn(|i| self.0[i] - o.0[i]))
    }
}

impl Neg for FourVector {
    type Output = FourVector;
    fn neg(self) -> FourVector {
        FourVector(self.0.map(|x| -x))
    }
}

impl Mul<FourVector> for f64 {
    type Output = FourVector;
    fn mul(self, v: FourVector) -> FourVector {
        FourVector(v.0.map(|x| self * x))
    }
}

/// Energy-momentum four-vector in natural units.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FourMomentum {
    energy: f64,
    momentum: [f64; 3],
}

impl FourMomentum {
    /// Raw constructor; no mass-shell condition is imposed.
    pub fn new(energy: f64, momentum: [f64; 3]) -> Self {
        FourMomentum { energy, momentum }
    }

    /// On-shell momentum with mass squared `s` and three-momentum `momentum`.
    pub fn on_shell(s: f64, momentum: [f64; 3]) -> Result<Self> {
        if s.is_nan() || s <= 0.0 {
            return Err(Error::MasslessUnsupported(s));
        }
        let p2: f64 = momentum.iter().map(|x| x * x).sum();
        Ok(FourMomentum { energy: (s + p2).sqrt(), momentum })
    }

    /// Rest momentum `(√s, 0, 0, 0)`.
    pub fn at_rest(s: f64) -> Result<Self> {
        Self::on_shell(s, [0.0; 3])
    }

    /// On-shell momentum of magnitude `magnitude` pointing along the polar angles `(theta, phi)`.
    pub fn from_polar(s: f64, magnitude: f64, theta: f64, phi: f64) -> Result<Self> {
        let (st, ct) = theta.sin_cos();
        let (sp, cp) = phi.sin_cos();
        Self::on_shell(s, [magnitude * st * cp, magnitude * st * sp, magnitude * ct])
    }

    pub fn from_four_vector(v: FourVector) -> Self {
        FourMomentum { energy: v.0[0], momentum: v.spatial() }
    }

    pub fn energy(&self) -> f64 {
        self.energy
    }

    pub fn momentum(&self) -> [f64; 3] {
        self.momentum
    }

    pub fn magnitude(&self) -> f64 {
        let [x, y, z] = self.momentum;
        (x * x + y * y + z * z).sqrt()
    }

    pub fn mass_squared(&self) -> f64 {
        let [x, y, z] = self.momentum;
        self.energy * self.energy - x * x - y * y - z * z
    }

    pub fn as_four_vector(&self) -> FourVector {
        let [x, y, z] = self.momentum;
        FourVector([self.energy, x, y, z])
    }

    /// Polar angles of the three-momentum.
    ///
    /// Directions on the `z` axis take `phi = 0`; `+z` gives `theta = 0`,
    /// `-z` gives `theta = π`. A vanishing three-momentum returns `(0, 0)`.
    pub fn direction_angles(&self) -> (f64, f64) {
        let [x, y, z] = self.momentum;
        let rho = x.hypot(y);
        if rho == 0.0 {
            return if z < 0.0 { (std::f64::consts::PI, 0.0) } else { (0.0, 0.0) };
        }
        (rho.atan2(z), y.atan2(x))
    }

    /// Checks `p² = s` to relative tolerance `rel_tol` (relative to `E²`).
    pub fn check_on_shell(&self, s: f64, rel_tol: f64) -> Result<()> {
        let m2 = self.mass_squared();
        let scale = (self.energy * self.energy).max(s.abs()).max(f64::MIN_POSITIVE);
        if (m2 - s).abs() > rel_tol * scale {
            return Err(Error::OffShell { expected: s, actual: m2 });
        }
        Ok(())
    }
}

impl Add for FourMomentum {
    type Output = FourMomentum;
    fn add(self, o: FourMomentum) -> FourMomentum {
        FourMomentum::from_four_vector(self.as_four_vector() + o.as_four_vector())
    }
}
