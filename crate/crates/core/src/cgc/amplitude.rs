use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::lorentz::{
    direction_rotation, representative_boost, spinor_to_lorentz, wigner_rotation, BoostConvention, FourMomentum,
    FourVector,
};
use crate::su2::{rep_matrix, su2_cgc, wigner_d_small, RepMatrix};
use crate::ylm::spherical_harmonic;
use crate::HalfInt;

use super::{ChannelLabel, Degeneracy, Kinematics, TwoParticleSpec};

/// Relative tolerance of the mass-shell check on externally supplied momenta.
const SHELL_TOL: f64 = 1e-9;

/// The component phase `(−)^χ`, taken as `e^{iπχ}` so that half-odd `χ` stay unimodular.
pub fn component_phase(chi: HalfInt) -> Complex64 {
    match chi.twice().rem_euclid(4) {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    }
}

fn check_component(j: HalfInt, m: HalfInt, what: &str) -> Result<()> {
    if !j.admits_projection(m) {
        return Err(Error::InvalidChannel(format!("{what}={m} is not a projection of {j}")));
    }
    Ok(())
}

fn spin_orbit_labels(spec: &TwoParticleSpec, channel: &ChannelLabel) -> Result<(HalfInt, HalfInt)> {
    channel.validate(spec)?;
    match channel.eta {
        Degeneracy::SpinOrbit { l, s } => Ok((l, s)),
        Degeneracy::Helicity { .. } => Err(Error::InvalidChannel(format!("{channel} is not a spin-orbit channel"))),
    }
}

fn helicity_labels(spec: &TwoParticleSpec, channel: &ChannelLabel) -> Result<(HalfInt, HalfInt)> {
    channel.validate(spec)?;
    match channel.eta {
        Degeneracy::Helicity { lambda1, lambda2 } => Ok((lambda1, lambda2)),
        Degeneracy::SpinOrbit { .. } => Err(Error::InvalidChannel(format!("{channel} is not a helicity channel"))),
    }
}

/// COM-frame spin-orbit amplitude
/// `Σ C(s j1 j2; s3 χ1 χ2) C(j l s; χ l3 s3) (−)^χ Y_{l l3}(θ, φ)`.
pub fn angular_spin_orbit_com(
    spec: &TwoParticleSpec,
    channel: &ChannelLabel,
    chi: HalfInt,
    chi1: HalfInt,
    chi2: HalfInt,
    theta: f64,
    phi: f64,
) -> Result<Complex64> {
    let (l, s) = spin_orbit_labels(spec, channel)?;
    let j = channel.j;
    check_component(j, chi, "chi")?;
    check_component(spec.j1, chi1, "chi1")?;
    check_component(spec.j2, chi2, "chi2")?;
    let s3 = chi1 + chi2;
    let l3 = chi - s3;
    if !s.admits_projection(s3) || !l.admits_projection(l3) {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let c = su2_cgc(s, spec.j1, spec.j2, s3, chi1, chi2) * su2_cgc(j, l, s, chi, l3, s3);
    if c == 0.0 {
        return Ok(Complex64::new(0.0, 0.0));
    }
    Ok(c * component_phase(chi) * spherical_harmonic(l, l3, theta, phi)?)
}

/// COM-frame helicity amplitude
/// `√((2j+1)/4π) e^{−iλφ} d^j_{λ μ}(θ) e^{iμφ}` with `μ = λ̃1 − λ̃2`.
///
/// Channels with `|μ| > j` give zero.
pub fn angular_helicity_com(
    spec: &TwoParticleSpec,
    channel: &ChannelLabel,
    lambda: HalfInt,
    theta: f64,
    phi: f64,
) -> Result<Complex64> {
    let (l1, l2) = helicity_labels(spec, channel)?;
    let j = channel.j;
    check_component(j, lambda, "lambda")?;
    let mu = l1 - l2;
    if !channel.is_realized() {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let d = wigner_d_small(j, theta)?.get(lambda, mu).re;
    let norm = (j.multiplicity() as f64 / (4.0 * PI)).sqrt();
    Ok(Complex64::from_polar(norm * d, (mu.value() - lambda.value()) * phi))
}

/// Unit relative-momentum vector `√(s/Δ) L⁻¹(p){p1 − p2 − [(s1 − s2)/s] p}` with
/// `p = p1 + p2` and `L` the representative boost of `convention`.
pub fn relative_direction(
    spec: &TwoParticleSpec,
    p1: &FourMomentum,
    p2: &FourMomentum,
    convention: BoostConvention,
) -> Result<FourVector> {
    let (kin, p) = pair_kinematics(spec, p1, p2)?;
    let rep = representative_boost(&p, kin.s, convention)?;
    let total = p.as_four_vector();
    let diff = p1.as_four_vector() - p2.as_four_vector() - ((spec.s1 - spec.s2) / kin.s) * total;
    let back = spinor_to_lorentz(&rep.inverse()).apply(&diff);
    Ok((kin.s / kin.delta).sqrt() * back)
}

fn pair_kinematics(spec: &TwoParticleSpec, p1: &FourMomentum, p2: &FourMomentum) -> Result<(Kinematics, FourMomentum)> {
    p1.check_on_shell(spec.s1, SHELL_TOL)?;
    p2.check_on_shell(spec.s2, SHELL_TOL)?;
    let p = *p1 + *p2;
    let kin = Kinematics::new(spec, p.mass_squared())?;
    Ok((kin, p))
}

/// Spin rotations `D^{ji}(u(p, pi))`, `u(p, pi) = W(L⁻¹(p), pi)⁻¹`, and the COM direction angles.
fn general_frame(
    spec: &TwoParticleSpec,
    p1: &FourMomentum,
    p2: &FourMomentum,
    convention: BoostConvention,
) -> Result<(RepMatrix, RepMatrix, f64, f64)> {
    let (kin, p) = pair_kinematics(spec, p1, p2)?;
    let rep_inv = representative_boost(&p, kin.s, convention)?.inverse();
    let u1 = wigner_rotation(&rep_inv, p1, convention)?.inverse();
    let u2 = wigner_rotation(&rep_inv, p2, convention)?.inverse();
    let e = relative_direction(spec, p1, p2, convention)?;
    let (theta, phi) = FourMomentum::new(1.0, e.spatial()).direction_angles();
    Ok((rep_matrix(spec.j1, &u1)?, rep_matrix(spec.j2, &u2)?, theta, phi))
}

/// Spin-orbit amplitude for arbitrary on-shell momenta above threshold.
///
/// The particle spin indices are rotated by `D^{ji}(u(p, pi))` applied to the
/// COM amplitude at the relative direction.
pub fn angular_spin_orbit_general(
    spec: &TwoParticleSpec,
    channel: &ChannelLabel,
    chi: HalfInt,
    chi1: HalfInt,
    chi2: HalfInt,
    p1: &FourMomentum,
    p2: &FourMomentum,
) -> Result<Complex64> {
    spin_orbit_labels(spec, channel)?;
    check_component(spec.j1, chi1, "chi1")?;
    check_component(spec.j2, chi2, "chi2")?;
    let (d1, d2, theta, phi) = general_frame(spec, p1, p2, BoostConvention::Canonical)?;
    let mut total = Complex64::new(0.0, 0.0);
    for a in spec.j1.projections() {
        for b in spec.j2.projections() {
            let w = d1.get(chi1, a) * d2.get(chi2, b);
            if w.norm() > 0.0 {
                total += w * angular_spin_orbit_com(spec, channel, chi, a, b, theta, phi)?;
            }
        }
    }
    Ok(total)
}

/// Helicity amplitude for arbitrary on-shell momenta above threshold, with
/// helicity-boost Wigner rotations on the particle indices `λ1, λ2`.
pub fn angular_helicity_general(
    spec: &TwoParticleSpec,
    channel: &ChannelLabel,
    lambda: HalfInt,
    lambda1: HalfInt,
    lambda2: HalfInt,
    p1: &FourMomentum,
    p2: &FourMomentum,
) -> Result<Complex64> {
    let (l1, l2) = helicity_labels(spec, channel)?;
    check_component(spec.j1, lambda1, "lambda1")?;
    check_component(spec.j2, lambda2, "lambda2")?;
    let (d1, d2, theta, phi) = general_frame(spec, p1, p2, BoostConvention::Helicity)?;
    Ok(d1.get(lambda1, l1) * d2.get(lambda2, l2) * angular_helicity_com(spec, channel, lambda, theta, phi)?)
}

/// `D^j(ρ(p)⁻¹)`: its `(λ, χ)` entry expands a Wigner-spin ket in helicity kets.
pub fn helicity_to_wigner(j: HalfInt, p: &FourMomentum) -> Result<RepMatrix> {
    rep_matrix(j, &direction_rotation(p).inverse())
}
