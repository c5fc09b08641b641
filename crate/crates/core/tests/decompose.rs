mod common;

use std::f64::consts::PI;
use std::sync::Arc;

use num_complex::Complex64;
use poincare_cgc::cgc::{angular_spin_orbit_com, ChannelLabel, Scheme, TwoParticleSpec};
use poincare_cgc::lorentz::BoostConvention;
use poincare_cgc::states::*;
use poincare_cgc::verify::band_limited_state;
use poincare_cgc::{Error, HalfInt};

const S: f64 = 9.0;

fn int(n: i32) -> HalfInt {
    HalfInt::from_int(n)
}

fn coefficient(d: &Decomposition, channel: ChannelLabel, component: HalfInt) -> Complex64 {
    d.coefficients.iter().find(|c| c.channel == channel && c.component == component).expect("channel present").value
}

fn localized(state: BellState, theta: f64, phi: f64, j_max: i32, scheme: Scheme) -> Decomposition {
    decompose_product_state(&ProductState::bell(state, theta, phi), &TwoParticleSpec::fermion_pair(), S, int(j_max), scheme).unwrap()
}

#[test]
fn singlet_along_z() {
    let d = localized(BellState::Psi11, 0.0, 0.0, 1, Scheme::SpinOrbit);
    let z = int(0);
    assert!((coefficient(&d, ChannelLabel::spin_orbit(z, z, z), z) - 0.5 / PI.sqrt()).norm() < 1e-12);
    assert!(coefficient(&d, ChannelLabel::spin_orbit(z, int(1), int(1)), z).norm() < 1e-12);
    // Y10(ẑ) = √(3/4π) carried by the spin-singlet p wave.
    assert!((coefficient(&d, ChannelLabel::spin_orbit(int(1), int(1), z), z) - (0.75 / PI).sqrt()).norm() < 1e-12);
    for c in d.coefficients.iter().filter(|c| matches!(c.channel.eta, poincare_cgc::cgc::Degeneracy::SpinOrbit { s, .. } if s == int(1))) {
        assert!(c.value.norm() < 1e-12, "triplet channel {}", c.channel);
    }
    assert!(d.input_norm_sqr.is_none());
}

#[test]
fn triplet_along_z() {
    let d = localized(BellState::Psi00, 0.0, 0.0, 1, Scheme::SpinOrbit);
    let z = int(0);
    assert!(coefficient(&d, ChannelLabel::spin_orbit(z, z, z), z).norm() < 1e-12);
    // (−)^χ C C Y00 = −1/√(4π) on the aligned pairs, weighted by 1/√2.
    let s_wave = ChannelLabel::spin_orbit(int(1), z, int(1));
    for chi in [int(1), int(-1)] {
        assert!((coefficient(&d, s_wave, chi) + 1.0 / (8.0 * PI).sqrt()).norm() < 1e-12);
    }
    assert!(coefficient(&d, s_wave, z).norm() < 1e-12);
}

#[test]
fn localized_coefficients_match_direct_overlaps() {
    let spec = TwoParticleSpec::fermion_pair();
    let mut r = common::rng(1);
    for state in BellState::ALL {
        let (t, f) = common::random_angles(&mut r);
        let d = localized(state, t, f, 2, Scheme::SpinOrbit);
        let spins = state.spin_coefficients();
        for c in &d.coefficients {
            let direct: Complex64 = spec
                .spin_pairs()
                .into_iter()
                .zip(spins)
                .map(|((a, b), x)| angular_spin_orbit_com(&spec, &c.channel, c.component, a, b, t, f).unwrap().conj() * x)
                .sum();
            assert!((c.value - direct).norm() < 1e-13, "{state} {}", c.channel);
        }
    }
}

#[test]
fn per_j_weight_is_scheme_independent() {
    // Within each j the two schemes are related by a unitary recoupling.
    let mut r = common::rng(2);
    for state in BellState::ALL {
        let (t, f) = common::random_angles(&mut r);
        let so = localized(state, t, f, 3, Scheme::SpinOrbit);
        let hel = localized(state, t, f, 3, Scheme::Helicity);
        for j in 0..=3 {
            let w = |d: &Decomposition| d.coefficients.iter().filter(|c| c.channel.j == int(j)).map(|c| c.value.norm_sqr()).sum::<f64>();
            assert!((w(&so) - w(&hel)).abs() < 1e-12, "{state} j={j}");
        }
    }
}

#[test]
fn decomposition_is_deterministic() {
    let a = localized(BellState::Psi01, 1.0, 0.5, 2, Scheme::SpinOrbit);
    let b = localized(BellState::Psi01, 1.0, 0.5, 2, Scheme::SpinOrbit);
    assert_eq!(a, b);
    assert!(a.captured_norm_sqr.is_finite());
}

#[test]
fn band_limited_parseval_and_reconstruction() {
    let g = Arc::new(build_grid(16, 32).unwrap());
    let spec = TwoParticleSpec::fermion_pair();
    let mut r = common::rng(3);
    let psi = band_limited_state(&g, &spec, S, &mut r).unwrap();
    assert!((psi.norm_sqr() - 1.0).abs() < 1e-12);
    for kets in [BoostConvention::Canonical, BoostConvention::Helicity] {
        let input = psi.with_ket_basis(kets).unwrap();
        for scheme in [Scheme::SpinOrbit, Scheme::Helicity] {
            let d = decompose_product_state(&ProductState::Sampled(input.clone()), &spec, S, int(3), scheme).unwrap();
            assert!(d.truncation_residual().unwrap().abs() < 1e-6, "{scheme} {kets:?}");
            let back = reconstruct(&d, &g, &spec, S, kets).unwrap();
            assert!(back.distance(&input).unwrap() < 1e-6, "{scheme} {kets:?}");
        }
    }
    // Truncating below the content loses norm.
    let d = decompose_product_state(&ProductState::Sampled(psi), &spec, S, int(1), Scheme::SpinOrbit).unwrap();
    assert!(d.truncation_residual().unwrap() > 1e-3);
}

#[test]
fn invalid_inputs() {
    let spec = TwoParticleSpec::fermion_pair();
    let one = Complex64::new(1.0, 0.0);
    assert!(matches!(ProductState::localized(0.0, 0.0, BoostConvention::Canonical, vec![one, one]), Err(Error::NotNormalized(_))));
    let short = ProductState::localized(0.0, 0.0, BoostConvention::Canonical, vec![one]).unwrap();
    assert!(matches!(decompose_product_state(&short, &spec, S, int(1), Scheme::SpinOrbit), Err(Error::IncompatibleStates(_))));
    let bell = ProductState::bell(BellState::Psi00, 0.0, 0.0);
    assert!(matches!(decompose_product_state(&bell, &spec, 3.0, int(1), Scheme::SpinOrbit), Err(Error::BelowThreshold { .. })));
    assert_eq!("psi10".parse::<BellState>().unwrap(), BellState::Psi10);
    assert!("psi2".parse::<BellState>().is_err());
}
