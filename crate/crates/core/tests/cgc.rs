mod common;

use std::f64::consts::PI;

use num_complex::Complex64;
use poincare_cgc::cgc::*;
use poincare_cgc::lorentz::*;
use poincare_cgc::su2::rep_matrix;
use poincare_cgc::{Error, HalfInt};
use proptest::prelude::*;

fn h(twice: i32) -> HalfInt {
    HalfInt::from_twice(twice)
}

fn int(n: i32) -> HalfInt {
    HalfInt::from_int(n)
}

fn pair() -> TwoParticleSpec {
    TwoParticleSpec::fermion_pair()
}

fn unequal() -> TwoParticleSpec {
    TwoParticleSpec::new(1.0, 2.25, h(1), int(1)).unwrap()
}

proptest! {
    #[test]
    fn triangle_is_permutation_symmetric(a in 0.0f64..100.0, b in 0.0f64..100.0, c in 0.0f64..100.0) {
        let t = triangle(a, b, c);
        for x in [triangle(a, c, b), triangle(b, a, c), triangle(b, c, a), triangle(c, a, b), triangle(c, b, a)] {
            prop_assert_eq!(x, t);
        }
    }
}

#[test]
fn triangle_equal_mass_closed_form() {
    // Δ(s, m², m²) = s(s − 4m²)
    assert_eq!(triangle(4.0, 1.0, 1.0), 0.0);
    let mut r = common::rng(1);
    for _ in 0..100 {
        let m2: f64 = rand::Rng::gen_range(&mut r, 0.1..5.0);
        let s: f64 = rand::Rng::gen_range(&mut r, 0.0..100.0);
        assert!((triangle(s, m2, m2) - s * (s - 4.0 * m2)).abs() < 1e-10 * s.max(1.0).powi(2));
    }
}

#[test]
fn kinematics_example() {
    let k = Kinematics::new(&pair(), 9.0).unwrap();
    assert!((k.delta - 45.0).abs() < 1e-12);
    assert!((k.k - (45.0f64 / 36.0).sqrt()).abs() < 1e-15);
    let (e1, e2) = k.energies();
    assert!((e1 + e2 - 3.0).abs() < 1e-15);
    assert!((com_normalization(9.0, 1.0, 1.0).unwrap() - 0.5 * 2f64.sqrt() * 45f64.powf(0.25)).abs() < 1e-15);
    let (p1, p2) = k.com_momenta(0.4, 1.3);
    assert!((p1 + p2).momentum().iter().all(|x| x.abs() < 1e-15));
    assert!((p1.mass_squared() - 1.0).abs() < 1e-14 && (p2.mass_squared() - 1.0).abs() < 1e-14);
}

#[test]
fn normalization_threshold_and_monotonicity() {
    assert!(matches!(com_normalization(4.0, 1.0, 1.0), Err(Error::BelowThreshold { .. })));
    assert!(matches!(com_normalization(3.0, 1.0, 1.0), Err(Error::BelowThreshold { .. })));
    assert!(matches!(Kinematics::new(&pair(), 4.0), Err(Error::BelowThreshold { .. })));
    let mut last = 0.0;
    for i in 1..=50 {
        let s = 6.25 + 0.5 * i as f64;
        let n = com_normalization(s, 1.0, 2.25).unwrap();
        assert!(n > last);
        last = n;
    }
    assert!(matches!(TwoParticleSpec::new(0.0, 1.0, h(1), h(1)), Err(Error::InvalidMass(_))));
}

#[test]
fn channel_enumeration() {
    let so = |j| enumerate_channels(&pair(), int(j), Scheme::SpinOrbit);
    assert_eq!(so(0), vec![ChannelLabel::spin_orbit(int(0), int(0), int(0)), ChannelLabel::spin_orbit(int(0), int(1), int(1))]);
    let labels: Vec<(i32, i32)> = so(1)
        .iter()
        .map(|c| match c.eta {
            Degeneracy::SpinOrbit { l, s } => (l.as_int().unwrap(), s.as_int().unwrap()),
            _ => unreachable!(),
        })
        .collect();
    assert_eq!(labels, vec![(1, 0), (0, 1), (1, 1), (2, 1)]);
    for j in 0..=3 {
        let hel = enumerate_channels(&pair(), int(j), Scheme::Helicity);
        assert_eq!(hel.len(), 4);
        let realized = hel.iter().filter(|c| c.is_realized()).count();
        assert_eq!(realized, if j == 0 { 2 } else { 4 });
    }
    // Spin-½ ⊗ spin-1 pairs couple to half-integer j only.
    assert!(enumerate_channels(&unequal(), int(1), Scheme::SpinOrbit).is_empty());
    assert_eq!(enumerate_channels(&unequal(), h(3), Scheme::SpinOrbit).len(), 6);
    assert_eq!(enumerate_channels(&unequal(), h(3), Scheme::Helicity).len(), 6);
}

#[test]
fn discrete_symmetries() {
    let d = |l, s| discrete_symmetry_labels(int(l), int(s));
    assert_eq!(d(0, 0), DiscreteSymmetry { parity: -1, charge_parity: 1 });
    assert_eq!(d(1, 1), DiscreteSymmetry { parity: 1, charge_parity: 1 });
    assert_eq!(d(2, 1), DiscreteSymmetry { parity: -1, charge_parity: -1 });
    assert_eq!(d(1, 0), DiscreteSymmetry { parity: 1, charge_parity: -1 });
}

#[test]
fn invalid_channels() {
    let spec = pair();
    let bad = [
        ChannelLabel::spin_orbit(int(1), h(1), int(1)),
        ChannelLabel::spin_orbit(int(1), int(3), int(1)),
        ChannelLabel::spin_orbit(int(1), int(1), int(2)),
        ChannelLabel::helicity(int(1), h(3), h(1)),
        ChannelLabel::spin_orbit(int(-1), int(0), int(0)),
    ];
    for c in bad {
        assert!(matches!(c.validate(&spec), Err(Error::InvalidChannel(_))), "{c}");
    }
    let so = ChannelLabel::spin_orbit(int(1), int(0), int(1));
    assert!(angular_spin_orbit_com(&spec, &so, int(2), h(1), h(1), 0.1, 0.2).is_err());
    assert!(angular_helicity_com(&spec, &so, int(0), 0.1, 0.2).is_err());
}

#[test]
fn spin_orbit_examples() {
    // Products of a spin CGC, an orbital CGC, (−)^χ and Y_{l l3}, evaluated by hand.
    let spec = pair();
    let (t, f) = (0.7, 0.3);
    let at = |j, l, s, chi, a, b| angular_spin_orbit_com(&spec, &ChannelLabel::spin_orbit(int(j), int(l), int(s)), int(chi), h(a), h(b), t, f).unwrap();
    // (+1)(+1)(−1)Y00
    assert!((at(1, 0, 1, 1, 1, 1) + (0.25 / PI).sqrt()).norm() < 1e-15);
    // (1/√2)(1)(+1)Y10
    assert!((at(1, 1, 0, 0, 1, -1) - (3.0 / (8.0 * PI)).sqrt() * t.cos()).norm() < 1e-15);
    // (1)(√(3/10))(+1)Y2,−1
    let expected = (9.0 / (16.0 * PI)).sqrt() * t.sin() * t.cos() * Complex64::from_polar(1.0, -f);
    assert!((at(1, 2, 1, 0, 1, 1) - expected).norm() < 1e-15);
    assert_eq!(at(1, 0, 1, 1, 1, -1), Complex64::new(0.0, 0.0));
}

#[test]
fn helicity_examples() {
    let spec = pair();
    let (t, f) = (1.1, -0.4);
    let at = |j, l1, l2, lam| angular_helicity_com(&spec, &ChannelLabel::helicity(int(j), h(l1), h(l2)), int(lam), t, f).unwrap();
    let q = (3.0 / (16.0 * PI)).sqrt();
    assert!((at(0, 1, 1, 0) - (0.25 / PI).sqrt()).norm() < 1e-15);
    assert!((at(0, -1, -1, 0) - (0.25 / PI).sqrt()).norm() < 1e-15);
    assert!((at(1, 1, -1, 1) - q * (1.0 + t.cos())).norm() < 1e-15);
    assert!((at(1, 1, -1, -1) - q * (1.0 - t.cos()) * Complex64::from_polar(1.0, 2.0 * f)).norm() < 1e-15);
    assert!((at(1, 1, 1, 0) - (0.75 / PI).sqrt() * t.cos()).norm() < 1e-15);
    assert_eq!(at(0, 1, -1, 0), Complex64::new(0.0, 0.0), "|λ̃1 − λ̃2| > j");
}

#[test]
fn spin_orbit_amplitudes_are_real_at_zero_azimuth() {
    let spec = pair();
    let mut r = common::rng(2);
    for j in 0..=3 {
        for c in enumerate_channels(&spec, int(j), Scheme::SpinOrbit) {
            for chi in int(j).projections() {
                for (a, b) in spec.spin_pairs() {
                    let t = common::random_angles(&mut r).0;
                    assert_eq!(angular_spin_orbit_com(&spec, &c, chi, a, b, t, 0.0).unwrap().im, 0.0);
                }
            }
        }
    }
}

fn general(spec: &TwoParticleSpec, c: &ChannelLabel, chi: HalfInt, a: HalfInt, b: HalfInt, p1: &FourMomentum, p2: &FourMomentum) -> Complex64 {
    match c.scheme() {
        Scheme::SpinOrbit => angular_spin_orbit_general(spec, c, chi, a, b, p1, p2).unwrap(),
        Scheme::Helicity => angular_helicity_general(spec, c, chi, a, b, p1, p2).unwrap(),
    }
}

fn com(spec: &TwoParticleSpec, c: &ChannelLabel, chi: HalfInt, a: HalfInt, b: HalfInt, t: f64, f: f64) -> Complex64 {
    match c.eta {
        Degeneracy::SpinOrbit { .. } => angular_spin_orbit_com(spec, c, chi, a, b, t, f).unwrap(),
        Degeneracy::Helicity { lambda1, lambda2 } => {
            if (a, b) == (lambda1, lambda2) {
                angular_helicity_com(spec, c, chi, t, f).unwrap()
            } else {
                Complex64::new(0.0, 0.0)
            }
        }
    }
}

fn half_integer_js() -> [HalfInt; 2] {
    [h(1), h(3)]
}

#[test]
fn general_frame_reduces_to_com() {
    let spec = unequal();
    let kin = Kinematics::new(&spec, 12.0).unwrap();
    let mut r = common::rng(3);
    for _ in 0..20 {
        let (t, f) = common::random_angles(&mut r);
        let (p1, p2) = kin.com_momenta(t, f);
        for scheme in [Scheme::SpinOrbit, Scheme::Helicity] {
            for j in half_integer_js() {
                for c in enumerate_channels(&spec, j, scheme) {
                    for chi in j.projections() {
                        for (a, b) in spec.spin_pairs() {
                            let d = general(&spec, &c, chi, a, b, &p1, &p2) - com(&spec, &c, chi, a, b, t, f);
                            assert!(d.norm() < 1e-12, "{c} {chi} ({a},{b})");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn boosted_pairs_carry_the_com_amplitudes() {
    // α = L(q) with L the scheme's own boost leaves the pair's rest frame
    // spin untouched (W(α, p_R) = 1), so only the particle indices mix.
    let spec = unequal();
    let s = 12.0;
    let kin = Kinematics::new(&spec, s).unwrap();
    let mut r = common::rng(4);
    for _ in 0..20 {
        let (t, f) = common::random_angles(&mut r);
        let (k1, k2) = kin.com_momenta(t, f);
        let q = common::random_momentum(&mut r, s, 5.0);
        for (scheme, conv) in [(Scheme::SpinOrbit, BoostConvention::Canonical), (Scheme::Helicity, BoostConvention::Helicity)] {
            let alpha = representative_boost(&q, s, conv).unwrap();
            let lam = spinor_to_lorentz(&alpha);
            let (p1, p2) = (lam.apply_momentum(&k1), lam.apply_momentum(&k2));
            let w1 = rep_matrix(spec.j1, &wigner_rotation(&alpha, &k1, conv).unwrap()).unwrap();
            let w2 = rep_matrix(spec.j2, &wigner_rotation(&alpha, &k2, conv).unwrap()).unwrap();
            for j in half_integer_js() {
                for c in enumerate_channels(&spec, j, scheme) {
                    for chi in j.projections() {
                        for (a, b) in spec.spin_pairs() {
                            let mut expected = Complex64::new(0.0, 0.0);
                            for (x, y) in spec.spin_pairs() {
                                expected += w1.get(a, x) * w2.get(b, y) * com(&spec, &c, chi, x, y, t, f);
                            }
                            let got = general(&spec, &c, chi, a, b, &p1, &p2);
                            assert!((got - expected).norm() < 1e-10, "{scheme} {c}: {got} vs {expected}");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn spin_orbit_amplitudes_are_lorentz_covariant() {
    // Σ D1(W1) D2(W2) A(p1, p2; χ) = Σ_χ' A(Λp1, Λp2; χ') M_χ'χ, M = P⁻¹ D^j(W(α, p)) P.
    let spec = unequal();
    let mut r = common::rng(5);
    let conv = BoostConvention::Canonical;
    for _ in 0..20 {
        let (p1, p2) = (common::random_momentum(&mut r, spec.s1, 2.0), common::random_momentum(&mut r, spec.s2, 2.0));
        let alpha = common::random_lorentz(&mut r, 1.5);
        let lam = spinor_to_lorentz(&alpha);
        let (q1, q2) = (lam.apply_momentum(&p1), lam.apply_momentum(&p2));
        let w1 = rep_matrix(spec.j1, &wigner_rotation(&alpha, &p1, conv).unwrap()).unwrap();
        let w2 = rep_matrix(spec.j2, &wigner_rotation(&alpha, &p2, conv).unwrap()).unwrap();
        let wp = wigner_rotation(&alpha, &(p1 + p2), conv).unwrap();
        for j in half_integer_js() {
            let dj = rep_matrix(j, &wp).unwrap();
            for c in enumerate_channels(&spec, j, Scheme::SpinOrbit) {
                for chi in j.projections() {
                    for (a, b) in spec.spin_pairs() {
                        let mut lhs = Complex64::new(0.0, 0.0);
                        for (x, y) in spec.spin_pairs() {
                            lhs += w1.get(a, x) * w2.get(b, y) * angular_spin_orbit_general(&spec, &c, chi, x, y, &p1, &p2).unwrap();
                        }
                        let mut rhs = Complex64::new(0.0, 0.0);
                        for chi2 in j.projections() {
                            let m = component_phase(chi2).conj() * dj.get(chi2, chi) * component_phase(chi);
                            rhs += angular_spin_orbit_general(&spec, &c, chi2, a, b, &q1, &q2).unwrap() * m;
                        }
                        assert!((lhs - rhs).norm() < 1e-10, "{c} {chi}");
                    }
                }
            }
        }
    }
}

#[test]
fn relative_direction_is_unit_and_spatial() {
    let spec = unequal();
    let mut r = common::rng(6);
    for _ in 0..200 {
        let (p1, p2) = (common::random_momentum(&mut r, spec.s1, 5.0), common::random_momentum(&mut r, spec.s2, 5.0));
        for conv in [BoostConvention::Canonical, BoostConvention::Helicity] {
            let e = relative_direction(&spec, &p1, &p2, conv).unwrap();
            assert!(e.time().abs() < 1e-10);
            assert!((e.spatial().iter().map(|x| x * x).sum::<f64>() - 1.0).abs() < 1e-10);
        }
    }
    // In the COM frame the direction is particle 1's.
    let kin = Kinematics::new(&spec, 12.0).unwrap();
    let (p1, p2) = kin.com_momenta(0.9, 2.0);
    let e = relative_direction(&spec, &p1, &p2, BoostConvention::Canonical).unwrap();
    let n = p1.momentum().map(|x| x / p1.magnitude());
    assert!((e - FourVector::new(0.0, n[0], n[1], n[2])).max_abs() < 1e-14);
}

#[test]
fn general_frame_errors() {
    let spec = pair();
    let c = ChannelLabel::spin_orbit(int(0), int(0), int(0));
    let p = FourMomentum::on_shell(1.0, [0.3, 0.0, 0.1]).unwrap();
    let z = int(0);
    assert!(matches!(angular_spin_orbit_general(&spec, &c, z, h(1), h(-1), &p, &p), Err(Error::BelowThreshold { .. })));
    let off = FourMomentum::new(2.0, [0.0, 0.0, 0.1]);
    assert!(matches!(angular_spin_orbit_general(&spec, &c, z, h(1), h(-1), &off, &p), Err(Error::OffShell { .. })));
}

#[test]
fn helicity_to_wigner_properties() {
    let up = FourMomentum::on_shell(1.0, [0.0, 0.0, 0.5]).unwrap();
    assert!(helicity_to_wigner(int(1), &up).unwrap().distance(&poincare_cgc::su2::RepMatrix::identity(int(1))) < 1e-15);
    let mut r = common::rng(7);
    for _ in 0..100 {
        let p = common::random_momentum(&mut r, 1.0, 10.0);
        let m = helicity_to_wigner(h(1), &p).unwrap();
        let rho = *direction_rotation(&p).matrix();
        for (i, k) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
            assert!((m.entries()[(i, k)] - rho[(k, i)].conj()).norm() < 1e-14);
        }
        for t in 1..=4 {
            let d = helicity_to_wigner(h(t), &p).unwrap();
            assert!((&d * &d.adjoint()).distance(&poincare_cgc::su2::RepMatrix::identity(h(t))) < 1e-12);
        }
    }
}
