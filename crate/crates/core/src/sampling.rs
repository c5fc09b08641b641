//! Seeded random group elements and momenta for property checks.

use std::f64::consts::PI;

use nalgebra::Matrix2;
use num_complex::Complex64;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::lorentz::{su2_from_quaternion, FourMomentum, FourVector, SpinorTransform};

pub type SampleRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniformly distributed unit vector.
pub fn random_direction(r: &mut SampleRng) -> [f64; 3] {
    let v: [f64; 3] = std::array::from_fn(|_| r.sample(StandardNormal));
    let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    v.map(|x| x / n)
}

/// `(θ, φ)` uniformly distributed on the sphere.
pub fn random_angles(r: &mut SampleRng) -> (f64, f64) {
    let c: f64 = r.gen_range(-1.0..1.0);
    (c.acos(), r.gen_range(0.0..2.0 * PI))
}

/// Haar-distributed SU(2) element.
pub fn random_rotation(r: &mut SampleRng) -> SpinorTransform {
    let q: [f64; 4] = std::array::from_fn(|_| r.sample(StandardNormal));
    let n = q.iter().map(|x| x * x).sum::<f64>().sqrt();
    SpinorTransform::homogeneous(su2_from_quaternion(q[0] / n, q[1] / n, q[2] / n, q[3] / n))
        .expect("unit quaternion is unimodular")
}

/// A random rotation followed by a pure boost of rapidity below `max_rapidity`.
pub fn random_lorentz(r: &mut SampleRng, max_rapidity: f64) -> SpinorTransform {
    let u = random_rotation(r);
    let eta: f64 = r.gen_range(0.0..max_rapidity);
    let n = random_direction(r);
    let (c, s) = ((eta / 2.0).cosh(), (eta / 2.0).sinh());
    let b = Matrix2::new(
        Complex64::new(c + s * n[2], 0.0),
        Complex64::new(s * n[0], -s * n[1]),
        Complex64::new(s * n[0], s * n[1]),
        Complex64::new(c - s * n[2], 0.0),
    );
    SpinorTransform::homogeneous(u.matrix() * b).expect("product of unimodular matrices")
}

/// [`random_lorentz`] paired with a translation of components in `[-1, 1]`.
pub fn random_poincare(r: &mut SampleRng, max_rapidity: f64) -> SpinorTransform {
    let a = FourVector(std::array::from_fn(|_| r.gen_range(-1.0..1.0)));
    let m = *random_lorentz(r, max_rapidity).matrix();
    SpinorTransform::new(m, a).expect("unimodular")
}

/// On-shell momentum of mass² `s` with `|p|/m` uniform in `[0, max_ratio)`.
pub fn random_momentum(r: &mut SampleRng, s: f64, max_ratio: f64) -> FourMomentum {
    let ratio: f64 = r.gen_range(0.0..max_ratio);
    let n = random_direction(r);
    FourMomentum::on_shell(s, n.map(|x| x * ratio * s.sqrt())).expect("positive mass")
}
