use num_complex::Complex64;

use crate::cgc::{Kinematics, TwoParticleSpec};
use crate::error::Result;
use crate::lorentz::{direction_rotation, BoostConvention, FourMomentum};
use crate::su2::{rep_matrix, RepMatrix};

/// `(D1 ⊗ D2) v` for a `χ1`-major spin vector.
pub(crate) fn apply_pair(d1: &RepMatrix, d2: &RepMatrix, v: &[Complex64]) -> Vec<Complex64> {
    let (n1, n2) = (d1.dim(), d2.dim());
    let (e1, e2) = (d1.entries(), d2.entries());
    let mut out = vec![Complex64::new(0.0, 0.0); n1 * n2];
    for a in 0..n1 {
        for b in 0..n2 {
            let mut acc = Complex64::new(0.0, 0.0);
            for c in 0..n1 {
                let x = e1[(a, c)];
                if x.norm_sqr() == 0.0 {
                    continue;
                }
                for d in 0..n2 {
                    acc += x * e2[(b, d)] * v[c * n2 + d];
                }
            }
            out[a * n2 + b] = acc;
        }
    }
    out
}

/// `(D1(ρ(p̃1)) ⊗ D2(ρ(p̃2)))`, the map from helicity-ket to Wigner-ket amplitudes
/// at the COM configuration with `p̃1` along `(θ, φ)`.
fn helicity_frame(spec: &TwoParticleSpec, p1: &FourMomentum, p2: &FourMomentum) -> Result<(RepMatrix, RepMatrix)> {
    Ok((rep_matrix(spec.j1, &direction_rotation(p1))?, rep_matrix(spec.j2, &direction_rotation(p2))?))
}

/// Re-expresses amplitudes given in `from` kets in `to` kets at one COM configuration.
pub(crate) fn change_ket_basis(
    spec: &TwoParticleSpec,
    kin: &Kinematics,
    theta: f64,
    phi: f64,
    from: BoostConvention,
    to: BoostConvention,
    v: Vec<Complex64>,
) -> Result<Vec<Complex64>> {
    if from == to {
        return Ok(v);
    }
    let (p1, p2) = kin.com_momenta(theta, phi);
    let (d1, d2) = helicity_frame(spec, &p1, &p2)?;
    Ok(match to {
        BoostConvention::Helicity => apply_pair(&d1.adjoint(), &d2.adjoint(), &v),
        BoostConvention::Canonical => apply_pair(&d1, &d2, &v),
    })
}

/// Unit vector along `(θ, φ)`.
pub(crate) fn unit_vector(theta: f64, phi: f64) -> [f64; 3] {
    [theta.sin() * phi.cos(), theta.sin() * phi.sin(), theta.cos()]
}
