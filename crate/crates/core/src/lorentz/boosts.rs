use num_complex::Complex64;

use super::spinor::{sl2_inverse, spinor_to_lorentz, su2_y, su2_z, Spinor, SpinorTransform};
use super::vectors::FourMomentum;
use crate::error::{Error, Result};

/// Relative tolerance (against `E²`) for the mass-shell check of boost inputs.
const SHELL_TOL: f64 = 1e-9;

/// Which coset representative `α(p)` defines the spin component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BoostConvention {
    /// Rotation-free boost `ℓ(p)`; Wigner (rest-frame) spin.
    Canonical,
    /// `h(p) = ρ(p) ℓ(p_z)`; helicity.
    Helicity,
}

fn checked_mass(p: &FourMomentum, s: f64) -> Result<f64> {
    if s.is_nan() || s <= 0.0 {
        return Err(Error::MasslessUnsupported(s));
    }
    p.check_on_shell(s, SHELL_TOL)?;
    Ok(s.sqrt())
}

/// `(m + E - σ·p) / √(2m(m+E))` with `m = √s`.
fn hermitian_boost(m: f64, energy: f64, momentum: [f64; 3]) -> Spinor {
    let [px, py, pz] = momentum;
    let norm = (2.0 * m * (m + energy)).sqrt();
    let a = (m + energy) / norm;
    Spinor::new(
        Complex64::new(a - pz / norm, 0.0),
        Complex64::new(-px / norm, py / norm),
        Complex64::new(-px / norm, -py / norm),
        Complex64::new(a + pz / norm, 0.0),
    )
}

/// The canonical (rotation-free) boost `ℓ(p)`, Hermitian and positive definite,
/// with `Λ(ℓ(p)) (√s, 0) = p`.
pub fn canonical_boost(p: &FourMomentum, s: f64) -> Result<SpinorTransform> {
    let m = checked_mass(p, s)?;
    Ok(SpinorTransform::from_unit_matrix(hermitian_boost(m, p.energy(), p.momentum())))
}

/// `ρ(p) = exp(-iφσ³/2) exp(-iθσ²/2)`, the rotation taking `ẑ` into `p̂`.
///
/// On the `z` axis `φ = 0`; at rest the identity is returned.
pub fn direction_rotation(p: &FourMomentum) -> SpinorTransform {
    let (theta, phi) = p.direction_angles();
    SpinorTransform::from_unit_matrix(su2_z(phi) * su2_y(theta))
}

/// The helicity boost `h(p) = ρ(p) ℓ(p_z)` with `p_z = (E, 0, 0, |p|)`.
pub fn helicity_boost(p: &FourMomentum, s: f64) -> Result<SpinorTransform> {
    let m = checked_mass(p, s)?;
    let along_z = hermitian_boost(m, p.energy(), [0.0, 0.0, p.magnitude()]);
    let rho = direction_rotation(p);
    Ok(SpinorTransform::from_unit_matrix(rho.matrix() * along_z))
}

/// `ℓ(p)` or `h(p)` depending on `convention`.
pub fn representative_boost(p: &FourMomentum, s: f64, convention: BoostConvention) -> Result<SpinorTransform> {
    match convention {
        BoostConvention::Canonical => canonical_boost(p, s),
        BoostConvention::Helicity => helicity_boost(p, s),
    }
}

/// Wigner rotation `W(α, p) = α(Λ(α)p)⁻¹ α α(p)`, an element of SU(2).
///
/// The mass is taken from `p` itself. Only the homogeneous part of `alpha` is used.
pub fn wigner_rotation(alpha: &SpinorTransform, p: &FourMomentum, convention: BoostConvention) -> Result<SpinorTransform> {
    let s = p.mass_squared();
    let image = spinor_to_lorentz(alpha).apply_momentum(p);
    let to = representative_boost(&image, s, convention)?;
    let from = representative_boost(p, s, convention)?;
    Ok(SpinorTransform::from_unit_matrix(sl2_inverse(to.matrix()) * alpha.matrix() * from.matrix()))
}
