//! Acceptance criteria, each run at its stated tolerance.
//!
//! Prints one `PASS`/`FAIL` line per criterion, with indented detail lines
//! underneath, and fails if any criterion fails.

mod common;

use std::f64::consts::PI;
use std::sync::Arc;
use std::time::{Duration, Instant};

use num_complex::Complex64;
use poincare_cgc::cgc::{
    angular_helicity_com, angular_spin_orbit_com, component_phase, discrete_symmetry_labels, enumerate_channels,
    helicity_to_wigner, ChannelLabel, Degeneracy, Scheme, TwoParticleSpec,
};
use poincare_cgc::lorentz::{
    canonical_boost, compose, helicity_boost, spinor_to_lorentz, wigner_rotation, BoostConvention, FourMomentum,
    SpinorTransform,
};
use poincare_cgc::reference::{helicity_table, spin_orbit_j1_table, symmetry_table};
use poincare_cgc::states::*;
use poincare_cgc::su2::{rep_matrix, su2_cgc, RepMatrix};
use poincare_cgc::verify::band_limited_state;
use poincare_cgc::HalfInt;
use rand::Rng;

const S: f64 = 9.0;

struct Outcome {
    title: &'static str,
    tolerance: f64,
    residual: f64,
    /// Runtime bound, if the criterion states one.
    budget: Option<Duration>,
    elapsed: Duration,
    details: Vec<String>,
}

impl Outcome {
    fn passed(&self) -> bool {
        self.residual.is_finite() && self.residual < self.tolerance && self.budget.is_none_or(|b| self.elapsed < b)
    }
}

fn timed(title: &'static str, tolerance: f64, budget: Option<Duration>, f: impl FnOnce(&mut Vec<String>) -> f64) -> Outcome {
    let start = Instant::now();
    let mut details = Vec::new();
    let residual = f(&mut details);
    Outcome { title, tolerance, residual, budget, elapsed: start.elapsed(), details }
}

fn points(seed: u64) -> Vec<(f64, f64)> {
    let mut r = common::rng(seed);
    (0..20).map(|_| (r.gen_range(0.0..PI), r.gen_range(0.0..2.0 * PI))).collect()
}

fn max_of(it: impl IntoIterator<Item = f64>) -> f64 {
    it.into_iter().fold(0.0, |m, x| if x.is_nan() { f64::INFINITY } else { m.max(x) })
}

fn grid_32x64() -> Arc<QuadratureGrid> {
    Arc::new(build_grid(32, 64).unwrap())
}

fn basis(grid: &Arc<QuadratureGrid>, scheme: Scheme, j_max: i32) -> Vec<ComBasisState> {
    let spec = TwoParticleSpec::fermion_pair();
    (0..=j_max)
        .flat_map(|j| enumerate_channels(&spec, HalfInt::from_int(j), scheme))
        .filter(ChannelLabel::is_realized)
        .flat_map(|c| c.j.projections().map(move |m| (c, m)))
        .map(|(c, m)| build_com_basis_state(grid, &spec, S, c, m).unwrap())
        .collect()
}

fn angular(a: &ComBasisState, b: &ComBasisState) -> Complex64 {
    inner_product(a, b).unwrap() / (a.norm_prefactor() * b.norm_prefactor())
}

fn criterion_1() -> Outcome {
    timed("spin-orbit j=1 table: 48 printed cells at 20 points, abs err < 1e-12", 1e-12, Some(Duration::from_secs(1)), |out| {
        let spec = TwoParticleSpec::fermion_pair();
        let pts = points(101);
        let mut worst: f64 = 0.0;
        for c in spin_orbit_j1_table() {
            let err = max_of(pts.iter().map(|&(t, f)| {
                let v = angular_spin_orbit_com(&spec, &c.channel, c.component, c.spins.0, c.spins.1, t, f).unwrap();
                (v - (c.printed)(t, f)).norm()
            }));
            if err >= 1e-12 {
                let fix = c.amended.map(|a| format!("; formula gives `{}` ({})", a.expression, a.reason)).unwrap_or_default();
                out.push(format!("cell {} printed `{}`: max err {err:.3e}{fix}", c.id, c.expression));
            }
            worst = worst.max(err);
        }
        worst
    })
}

fn criterion_2() -> Outcome {
    timed("helicity j<=1 table: 14 cells, radical typos vs formula, err < 1e-12", 1e-12, Some(Duration::from_secs(1)), |out| {
        let spec = TwoParticleSpec::fermion_pair();
        let pts = points(102);
        let mut worst: f64 = 0.0;
        for c in helicity_table() {
            let err = max_of(pts.iter().map(|&(t, f)| {
                (angular_helicity_com(&spec, &c.channel, c.component, t, f).unwrap() - c.expected(t, f)).norm()
            }));
            worst = worst.max(err);
            if let Some(a) = c.amended {
                let undefined = pts.iter().filter(|&&(t, f)| (c.printed)(t, f).re.is_nan()).count();
                let gap = max_of(pts.iter().map(|&(t, f)| (c.printed)(t, f)).zip(pts.iter().map(|&(t, f)| (a.value)(t, f))).filter(|(p, _)| !p.re.is_nan()).map(|(p, v)| (p - v).norm()));
                out.push(format!(
                    "discrepancy {}: printed `{}` vs formula `{}`: max |diff| {gap:.3e} where real, not real at {undefined}/20 points; formula matches to {err:.1e}",
                    c.id, c.expression, a.expression
                ));
            }
        }
        worst
    })
}

fn criterion_3() -> Outcome {
    timed("channel table: all six (j, s, l, parity, charge parity) rows exactly", 0.5, None, |out| {
        let spec = TwoParticleSpec::fermion_pair();
        let mut mismatches = 0usize;
        for row in symmetry_table() {
            let listed = enumerate_channels(&spec, row.j, Scheme::SpinOrbit).contains(&ChannelLabel::spin_orbit(row.j, row.l, row.s));
            let d = discrete_symmetry_labels(row.l, row.s);
            if !listed || d.parity != row.parity || d.charge_parity != row.charge_parity {
                mismatches += 1;
                out.push(format!(
                    "row (j={}, s={}, l={}): printed ({:+}, {:+}), computed ({:+}, {:+}){}",
                    row.j, row.s, row.l, row.parity, row.charge_parity, d.parity, d.charge_parity,
                    if listed { "" } else { ", channel not enumerated" }
                ));
            }
        }
        let total: usize = (0..=1).map(|j| enumerate_channels(&spec, HalfInt::from_int(j), Scheme::SpinOrbit).len()).sum();
        if total != 6 {
            out.push(format!("{total} channels enumerated for j <= 1, table has 6"));
            mismatches += 1;
        }
        mismatches as f64
    })
}

fn criterion_4() -> Outcome {
    timed("boost property for 1000 momenta, |p|/m up to 1e3, rel err < 1e-10", 1e-10, Some(Duration::from_secs(1)), |_| {
        let s = 2.0;
        let mut r = common::rng(104);
        let rest = FourMomentum::at_rest(s).unwrap();
        max_of((0..1000).map(|_| {
            let p = common::random_momentum(&mut r, s, 1e3);
            let err = |b: SpinorTransform| (spinor_to_lorentz(&b).apply_momentum(&rest).as_four_vector() - p.as_four_vector()).max_abs() / p.energy();
            err(canonical_boost(&p, s).unwrap()).max(err(helicity_boost(&p, s).unwrap()))
        }))
    })
}

fn criterion_5() -> Outcome {
    timed("homomorphism and metric preservation over 100 pairs, err < 1e-10", 1e-10, None, |_| {
        let mut r = common::rng(105);
        max_of((0..100).map(|_| {
            let (a, b) = (common::random_lorentz(&mut r, 2.0), common::random_lorentz(&mut r, 2.0));
            let (la, lb) = (spinor_to_lorentz(&a), spinor_to_lorentz(&b));
            let hom = spinor_to_lorentz(&compose(&a, &b)).distance(&la.compose(&lb));
            hom.max(la.metric_residual()).max(lb.metric_residual())
        }))
    })
}

fn criterion_6() -> Outcome {
    timed("Wigner rotations in SU(2) (1000) and W(u, p) = u (100), err < 1e-10", 1e-10, None, |out| {
        let mut r = common::rng(106);
        let mut worst: f64 = 0.0;
        for _ in 0..1000 {
            let a = common::random_lorentz(&mut r, 3.0);
            let p = common::random_momentum(&mut r, 2.0, 1e2);
            for conv in [BoostConvention::Canonical, BoostConvention::Helicity] {
                let w = wigner_rotation(&a, &p, conv).unwrap();
                worst = worst.max(w.unitarity_residual()).max((w.determinant() - 1.0).norm());
            }
        }
        let mut to_one = f64::INFINITY;
        for _ in 0..100 {
            let u = common::random_rotation(&mut r);
            let p = common::random_momentum(&mut r, 2.0, 1e2);
            let w = wigner_rotation(&u, &p, BoostConvention::Canonical).unwrap();
            worst = worst.max(w.distance(&u));
            to_one = to_one.min(w.distance(&SpinorTransform::identity()).min(w.distance(&SpinorTransform::identity().negated())));
        }
        out.push(format!("W(u, p) = u holds; the reading W(u, p) = 1 fails with min |W - (+-1)| = {to_one:.3e}"));
        worst
    })
}

fn criterion_7() -> Outcome {
    timed("Gram matrix identity, j <= 2, both schemes, 32x64 grid, err < 1e-8", 1e-8, Some(Duration::from_secs(60)), |out| {
        let g = grid_32x64();
        let mut worst: f64 = 0.0;
        for scheme in [Scheme::SpinOrbit, Scheme::Helicity] {
            let states = basis(&g, scheme, 2);
            let mut local: f64 = 0.0;
            for (i, a) in states.iter().enumerate() {
                for (k, b) in states.iter().enumerate() {
                    let expected = if i == k { ANGULAR_GRAM_DIAGONAL } else { 0.0 };
                    local = local.max((angular(a, b) - expected).norm());
                }
            }
            out.push(format!("{scheme}: {} states, max |G - 1| = {local:.3e}", states.len()));
            worst = worst.max(local);
        }
        worst
    })
}

/// `D^j(u)` for helicity blocks, `P⁻¹ D^j(u) P` with `P = diag((−)^χ)` for spin-orbit blocks.
fn expected_block(channel: &ChannelLabel, u: &SpinorTransform, row: HalfInt, col: HalfInt) -> Complex64 {
    let d = rep_matrix(channel.j, u).unwrap().get(row, col);
    match channel.eta {
        Degeneracy::SpinOrbit { .. } => component_phase(row).conj() * d * component_phase(col),
        Degeneracy::Helicity { .. } => d,
    }
}

fn criterion_8() -> Outcome {
    timed("20 random rotations: cross-block < 1e-8, within-block = D^j(u) to 1e-8", 1e-8, None, |out| {
        let g = grid_32x64();
        let mut r = common::rng(108);
        let rotations: Vec<SpinorTransform> = (0..20).map(|_| common::random_rotation(&mut r)).collect();
        let mut worst: f64 = 0.0;
        for scheme in [Scheme::SpinOrbit, Scheme::Helicity] {
            let states = basis(&g, scheme, 2);
            let (mut cross, mut within): (f64, f64) = (0.0, 0.0);
            for u in &rotations {
                for b in &states {
                    let rotated = apply_rotation(b, u).unwrap();
                    for a in &states {
                        let v = angular(a, &rotated);
                        if a.channel() == b.channel() {
                            within = within.max((v - expected_block(a.channel(), u, a.component(), b.component())).norm());
                        } else {
                            cross = cross.max(v.norm());
                        }
                    }
                }
            }
            out.push(format!("{scheme}: max cross-block {cross:.3e}, max within-block deviation {within:.3e}"));
            worst = worst.max(cross).max(within);
        }
        worst
    })
}

fn criterion_9() -> Outcome {
    timed("singlet at z: 1/(2 sqrt pi) to 1e-12; band-limited Parseval L2 < 1e-6", 1e-6, None, |out| {
        let spec = TwoParticleSpec::fermion_pair();
        let z = HalfInt::ZERO;
        let d = decompose_product_state(&ProductState::bell(BellState::Psi11, 0.0, 0.0), &spec, S, HalfInt::ONE, Scheme::SpinOrbit).unwrap();
        let c = d.coefficients.iter().find(|c| c.channel == ChannelLabel::spin_orbit(z, z, z)).unwrap().value;
        let coeff_err = (c - 0.5 / PI.sqrt()).norm();
        out.push(format!("(j=0, l=0, s=0) coefficient {:.16e}, err {coeff_err:.3e}", c.re));
        let g = grid_32x64();
        let mut r = common::rng(109);
        let psi = band_limited_state(&g, &spec, S, &mut r).unwrap();
        let mut l2: f64 = 0.0;
        for scheme in [Scheme::SpinOrbit, Scheme::Helicity] {
            let d = decompose_product_state(&ProductState::Sampled(psi.clone()), &spec, S, HalfInt::from_int(3), scheme).unwrap();
            let back = reconstruct(&d, &g, &spec, S, psi.ket_basis()).unwrap();
            let (res, dist) = (d.truncation_residual().unwrap().abs(), back.distance(&psi).unwrap());
            out.push(format!("{scheme}: |norm - captured| {res:.3e}, reconstruction L2 {dist:.3e}"));
            l2 = l2.max(res).max(dist);
        }
        // The coefficient carries its own, tighter bound.
        if coeff_err < 1e-12 { l2 } else { f64::INFINITY }
    })
}

fn criterion_10() -> Outcome {
    timed("helicity/Wigner round trip < 1e-12; helicity in spin-orbit blocks (j <= 1) < 1e-8", 1e-8, None, |out| {
        let spec = TwoParticleSpec::fermion_pair();
        let mut r = common::rng(110);
        let mut round: f64 = 0.0;
        for _ in 0..200 {
            let p = common::random_momentum(&mut r, 1.0, 10.0);
            for t in 1..=4 {
                let j = HalfInt::from_twice(t);
                let m = helicity_to_wigner(j, &p).unwrap();
                round = round.max((&m * &m.adjoint()).distance(&RepMatrix::identity(j)));
            }
        }
        let g = grid_32x64();
        let so = basis(&g, Scheme::SpinOrbit, 1);
        let hel = basis(&g, Scheme::Helicity, 1);
        for h in &hel {
            let there = GridState::from_basis_state(h).with_ket_basis(BoostConvention::Canonical).unwrap();
            let back = there.with_ket_basis(BoostConvention::Helicity).unwrap();
            round = round.max(back.distance(&GridState::from_basis_state(h)).unwrap());
        }
        out.push(format!("round trip max err {round:.3e}"));
        let mut block: f64 = 0.0;
        for h in &hel {
            let conv = h.to_scheme(Scheme::SpinOrbit).unwrap();
            let Degeneracy::Helicity { lambda1, lambda2 } = h.channel().eta else { unreachable!() };
            let mu = lambda1 - lambda2;
            let j = h.channel().j;
            for b in &so {
                let v = angular(b, &conv);
                let Degeneracy::SpinOrbit { l, s } = b.channel().eta else { unreachable!() };
                let expected = if b.channel().j == j && b.component() == h.component() {
                    ((2.0 * l.value() + 1.0) / (2.0 * j.value() + 1.0)).sqrt()
                        * (su2_cgc(j, l, s, mu, HalfInt::ZERO, mu) * su2_cgc(s, spec.j1, spec.j2, mu, lambda1, -lambda2)).abs()
                } else {
                    0.0
                };
                block = block.max((v.norm() - expected).abs());
            }
        }
        out.push(format!("helicity states vs spin-orbit recoupling magnitudes: max err {block:.3e}"));
        if round < 1e-12 { block } else { f64::INFINITY }
    })
}

#[test]
fn acceptance() {
    let criteria: [fn() -> Outcome; 10] = [
        criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7, criterion_8, criterion_9,
        criterion_10,
    ];
    let mut failed = Vec::new();
    for (i, run) in criteria.iter().enumerate() {
        let o = run();
        let status = if o.passed() { "PASS" } else { "FAIL" };
        let budget = o.budget.map(|b| format!(" (limit {:.0?})", b)).unwrap_or_default();
        println!(
            "{status} criterion {:>2}: {} | residual {:.3e}, tol {:.0e}, {:.2?}{budget}",
            i + 1, o.title, o.residual, o.tolerance, o.elapsed
        );
        for d in &o.details {
            println!("       {d}");
        }
        if !o.passed() {
            failed.push(i + 1);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
