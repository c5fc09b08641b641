use nalgebra::{Matrix2, Matrix4};
use num_complex::Complex64;

use super::vectors::{FourMomentum, FourVector};
use crate::error::{Error, Result};

/// A 2×2 complex matrix acting on Weyl spinors.
pub type Spinor = Matrix2<Complex64>;

const DET_TOL: f64 = 1e-12;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// `σ̄^μ = (1, -σ¹, -σ², -σ³)`.
fn sigma_bar(mu: usize) -> Spinor {
    let z = c(0.0, 0.0);
    let one = c(1.0, 0.0);
    match mu {
        0 => Spinor::new(one, z, z, one),
        1 => Spinor::new(z, -one, -one, z),
        2 => Spinor::new(z, c(0.0, 1.0), c(0.0, -1.0), z),
        3 => Spinor::new(-one, z, z, one),
        _ => unreachable!("four-vector index out of range"),
    }
}

/// `exp(-i angle σ³/2)`.
pub fn su2_z(angle: f64) -> Spinor {
    let (s, cs) = (angle / 2.0).sin_cos();
    let z = c(0.0, 0.0);
    Spinor::new(c(cs, -s), z, z, c(cs, s))
}

/// `exp(-i angle σ²/2)`.
pub fn su2_y(angle: f64) -> Spinor {
    let (s, cs) = (angle / 2.0).sin_cos();
    Spinor::new(c(cs, 0.0), c(-s, 0.0), c(s, 0.0), c(cs, 0.0))
}

/// SU(2) element `w - i(x σ¹ + y σ² + z σ³)` from a quaternion, normalized.
pub fn su2_from_quaternion(w: f64, x: f64, y: f64, z: f64) -> Spinor {
    let n = (w * w + x * x + y * y + z * z).sqrt();
    let (w, x, y, z) = (w / n, x / n, y / n, z / n);
    Spinor::new(c(w, -z), c(-y, -x), c(y, -x), c(w, z))
}

pub(crate) fn det(m: &Spinor) -> Complex64 {
    m[(0, 0)] * m[(1, 1)] - m[(0, 1)] * m[(1, 0)]
}

/// Inverse of a unit-determinant matrix.
pub(crate) fn sl2_inverse(m: &Spinor) -> Spinor {
    Spinor::new(m[(1, 1)], -m[(0, 1)], -m[(1, 0)], m[(0, 0)])
}

/// Largest entry of `|u†u - 1|`.
pub(crate) fn unitarity_residual(m: &Spinor) -> f64 {
    let r = m.adjoint() * m - Spinor::identity();
    r.iter().fold(0.0_f64, |acc, z| acc.max(z.norm()))
}

/// An element `(α, a)` of the covering Poincaré group.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpinorTransform {
    matrix: Spinor,
    translation: FourVector,
}

impl SpinorTransform {
    pub fn identity() -> Self {
        SpinorTransform { matrix: Spinor::identity(), translation: FourVector::ZERO }
    }

    /// Checks `|det α - 1| < 1e-12`.
    pub fn new(matrix: Spinor, translation: FourVector) -> Result<Self> {
        let d = det(&matrix);
        if (d - c(1.0, 0.0)).norm() >= DET_TOL {
            return Err(Error::NotUnimodular((d - c(1.0, 0.0)).norm()));
        }
        Ok(SpinorTransform { matrix, translation })
    }

    /// Homogeneous transformation (zero translation).
    pub fn homogeneous(matrix: Spinor) -> Result<Self> {
        Self::new(matrix, FourVector::ZERO)
    }

    /// Skips the determinant check; for matrices unit by construction.
    pub(crate) fn from_unit_matrix(matrix: Spinor) -> Self {
        SpinorTransform { matrix, translation: FourVector::ZERO }
    }

    pub fn translation_only(a: FourVector) -> Self {
        SpinorTransform { matrix: Spinor::identity(), translation: a }
    }

    pub fn matrix(&self) -> &Spinor {
        &self.matrix
    }

    pub fn translation(&self) -> FourVector {
        self.translation
    }

    pub fn determinant(&self) -> Complex64 {
        det(&self.matrix)
    }

    /// Group inverse `(α⁻¹, -Λ(α⁻¹) a)`.
    pub fn inverse(&self) -> Self {
        let inv = sl2_inverse(&self.matrix);
        let lam = spinor_to_lorentz(&SpinorTransform::from_unit_matrix(inv));
        SpinorTransform { matrix: inv, translation: -lam.apply(&self.translation) }
    }

    /// `-α`, which covers the same Lorentz transformation.
    pub fn negated(&self) -> Self {
        SpinorTransform { matrix: -self.matrix, translation: self.translation }
    }

    /// Largest entry of `|α†α - 1|`; zero for rotations.
    pub fn unitarity_residual(&self) -> f64 {
        unitarity_residual(&self.matrix)
    }

    /// Requires `α ∈ SU(2)` within `tol`.
    pub fn ensure_rotation(&self, tol: f64) -> Result<()> {
        let r = self.unitarity_residual().max((self.determinant() - 1.0).norm());
        if r > tol {
            return Err(Error::NotARotation(r));
        }
        Ok(())
    }

    /// Largest entry of `|α - β|` between the spinor matrices.
    pub fn distance(&self, other: &SpinorTransform) -> f64 {
        (self.matrix - other.matrix).iter().fold(0.0_f64, |m, z| m.max(z.norm()))
    }
}

/// Group law `(α', a')(α, a) = (α'α, a' + Λ(α')a)`.
pub fn compose(g1: &SpinorTransform, g2: &SpinorTransform) -> SpinorTransform {
    let lam = spinor_to_lorentz(g1);
    SpinorTransform {
        matrix: g1.matrix * g2.matrix,
        translation: g1.translation + lam.apply(&g2.translation),
    }
}

/// A proper orthochronous Lorentz matrix `Λ^μ_ν`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LorentzMatrix(pub Matrix4<f64>);

impl LorentzMatrix {
    pub fn identity() -> Self {
        LorentzMatrix(Matrix4::identity())
    }

    pub fn matrix(&self) -> &Matrix4<f64> {
        &self.0
    }

    pub fn apply(&self, v: &FourVector) -> FourVector {
        let m = &self.0;
        FourVector(std::array::from_fn(|mu| (0..4).map(|nu| m[(mu, nu)] * v.0[nu]).sum()))
    }

    pub fn apply_momentum(&self, p: &FourMomentum) -> FourMomentum {
        FourMomentum::from_four_vector(self.apply(&p.as_four_vector()))
    }

    pub fn compose(&self, other: &LorentzMatrix) -> LorentzMatrix {
        LorentzMatrix(self.0 * other.0)
    }

    /// Largest entry of `|ΛᵀgΛ - g|`.
    pub fn metric_residual(&self) -> f64 {
        let g = Matrix4::from_diagonal(&nalgebra::Vector4::new(1.0, -1.0, -1.0, -1.0));
        let r = self.0.transpose() * g * self.0 - g;
        r.iter().fold(0.0_f64, |m, x| m.max(x.abs()))
    }

    pub fn determinant(&self) -> f64 {
        self.0.determinant()
    }

    /// Largest entry of `|Λ - Λ'|`.
    pub fn distance(&self, other: &LorentzMatrix) -> f64 {
        (self.0 - other.0).iter().fold(0.0_f64, |m, x| m.max(x.abs()))
    }
}

/// The two-to-one homomorphism `Λ(α)^μ_ν = ½ tr(σ̄^μ α σ̄^ν α†)`.
///
/// Only the matrix part of `alpha` enters; `Λ(-α) = Λ(α)`.
pub fn spinor_to_lorentz(alpha: &SpinorTransform) -> LorentzMatrix {
    let a = alpha.matrix;
    let ad = a.adjoint();
    let bars: [Spinor; 4] = std::array::from_fn(sigma_bar);
    let mut out = Matrix4::zeros();
    for nu in 0..4 {
        let image = a * bars[nu] * ad;
        for mu in 0..4 {
            out[(mu, nu)] = 0.5 * (bars[mu] * image).trace().re;
        }
    }
    LorentzMatrix(out)
}
