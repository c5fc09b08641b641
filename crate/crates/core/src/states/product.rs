use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_complex::Complex64;

use crate::cgc::{enumerate_channels, ChannelLabel, Kinematics, Scheme, TwoParticleSpec};
use crate::error::{Error, Result};
use crate::lorentz::BoostConvention;
use crate::HalfInt;

use super::basis::{build_com_basis_state, wigner_ket_amplitudes, ComBasisState};
use super::grid::QuadratureGrid;
use super::sampled::GridState;
use super::spin::change_ket_basis;

/// The four maximally correlated spin-½ pair states with fixed back-to-back momenta.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BellState {
    /// `(|↑↑⟩ + |↓↓⟩)/√2`
    Psi00,
    /// `(|↑↓⟩ + |↓↑⟩)/√2`
    Psi01,
    /// `(|↑↑⟩ − |↓↓⟩)/√2`
    Psi10,
    /// `(|↑↓⟩ − |↓↑⟩)/√2`
    Psi11,
}

impl BellState {
    pub const ALL: [BellState; 4] = [BellState::Psi00, BellState::Psi01, BellState::Psi10, BellState::Psi11];

    /// Coefficients on `(↑↑, ↑↓, ↓↑, ↓↓)`.
    pub fn spin_coefficients(self) -> [Complex64; 4] {
        let r = std::f64::consts::FRAC_1_SQRT_2;
        let v = match self {
            BellState::Psi00 => [r, 0.0, 0.0, r],
            BellState::Psi01 => [0.0, r, r, 0.0],
            BellState::Psi10 => [r, 0.0, 0.0, -r],
            BellState::Psi11 => [0.0, r, -r, 0.0],
        };
        v.map(|x| Complex64::new(x, 0.0))
    }
}

impl fmt::Display for BellState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BellState::Psi00 => "psi00",
            BellState::Psi01 => "psi01",
            BellState::Psi10 => "psi10",
            BellState::Psi11 => "psi11",
        })
    }
}

impl FromStr for BellState {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        BellState::ALL
            .into_iter()
            .find(|b| b.to_string() == s)
            .ok_or_else(|| format!("unknown state `{s}` (expected psi00, psi01, psi10 or psi11)"))
    }
}

/// A two-particle state to be reduced to partial waves.
#[derive(Clone, Debug)]
pub enum ProductState {
    /// Particle 1 along `(θ, φ)`, particle 2 opposite, with normalized spin coefficients (`χ1`-major).
    Localized { theta: f64, phi: f64, ket_basis: BoostConvention, coefficients: Vec<Complex64> },
    Sampled(GridState),
}

impl ProductState {
    pub fn localized(theta: f64, phi: f64, ket_basis: BoostConvention, coefficients: Vec<Complex64>) -> Result<Self> {
        let norm: f64 = coefficients.iter().map(|z| z.norm_sqr()).sum();
        if (norm - 1.0).abs() > 1e-12 {
            return Err(Error::NotNormalized(norm));
        }
        Ok(ProductState::Localized { theta, phi, ket_basis, coefficients })
    }

    /// A Bell state in Wigner-spin kets with particle 1 along `(θ, φ)`.
    pub fn bell(state: BellState, theta: f64, phi: f64) -> Self {
        ProductState::Localized { theta, phi, ket_basis: BoostConvention::Canonical, coefficients: state.spin_coefficients().to_vec() }
    }
}

/// One partial-wave coefficient `⟨j η component | ψ⟩`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Coefficient {
    pub channel: ChannelLabel,
    pub component: HalfInt,
    pub value: Complex64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Decomposition {
    pub coefficients: Vec<Coefficient>,
    /// Angular norm of the input; `None` for direction-localized input, whose series does not converge in norm.
    pub input_norm_sqr: Option<f64>,
    /// `Σ |coefficient|²`.
    pub captured_norm_sqr: f64,
}

impl Decomposition {
    /// Norm not captured by the retained channels, when defined.
    pub fn truncation_residual(&self) -> Option<f64> {
        self.input_norm_sqr.map(|n| n - self.captured_norm_sqr)
    }
}

/// `(channel, component)` rows for all realized channels with `j ≤ j_max`,
/// ordered by `j`, then channel, then descending component.
fn partial_waves(spec: &TwoParticleSpec, j_max: HalfInt, scheme: Scheme) -> Vec<(ChannelLabel, HalfInt)> {
    let j_min = if (spec.j1 + spec.j2).is_integer() { HalfInt::ZERO } else { HalfInt::HALF };
    HalfInt::range_inclusive(j_min, j_max)
        .flat_map(|j| enumerate_channels(spec, j, scheme))
        .filter(ChannelLabel::is_realized)
        .flat_map(|c| c.j.projections().map(move |m| (c, m)))
        .collect()
}

fn spin_count(spec: &TwoParticleSpec) -> usize {
    spec.j1.multiplicity() * spec.j2.multiplicity()
}

/// Partial-wave coefficients of `psi` for all channels with `j ≤ j_max`.
///
/// For localized input the coefficient is `Σ c_χ conj(A_χ(Ω̂))`; for sampled input
/// it is the angular overlap with each basis vector. Norm prefactors are not included.
pub fn decompose_product_state(
    psi: &ProductState,
    spec: &TwoParticleSpec,
    s: f64,
    j_max: HalfInt,
    scheme: Scheme,
) -> Result<Decomposition> {
    let kin = Kinematics::new(spec, s)?;
    let waves = partial_waves(spec, j_max, scheme);
    let mut coefficients = Vec::with_capacity(waves.len());
    let input_norm_sqr = match psi {
        ProductState::Localized { theta, phi, ket_basis, coefficients: c } => {
            if c.len() != spin_count(spec) {
                return Err(Error::IncompatibleStates(format!("{} spin coefficients for {} spin pairs", c.len(), spin_count(spec))));
            }
            for (channel, component) in waves {
                let w = wigner_ket_amplitudes(spec, &channel, component, *theta, *phi)?;
                let a = change_ket_basis(spec, &kin, *theta, *phi, BoostConvention::Canonical, *ket_basis, w)?;
                let value = a.iter().zip(c).map(|(x, y)| x.conj() * y).sum();
                coefficients.push(Coefficient { channel, component, value });
            }
            None
        }
        ProductState::Sampled(g) => {
            if g.spec() != spec || g.s() != s {
                return Err(Error::IncompatibleStates("sampled state has different particles or s".into()));
            }
            for (channel, component) in waves {
                let basis = build_com_basis_state(g.grid(), spec, s, channel, component)?.with_ket_basis(g.ket_basis())?;
                let value = GridState::from_basis_state(&basis).overlap(g)?;
                coefficients.push(Coefficient { channel, component, value });
            }
            Some(g.norm_sqr())
        }
    };
    let captured_norm_sqr = coefficients.iter().map(|c| c.value.norm_sqr()).sum();
    Ok(Decomposition { coefficients, input_norm_sqr, captured_norm_sqr })
}

/// `Σ coefficient × A` sampled on `grid` in the given kets.
pub fn reconstruct(
    decomposition: &Decomposition,
    grid: &Arc<QuadratureGrid>,
    spec: &TwoParticleSpec,
    s: f64,
    ket_basis: BoostConvention,
) -> Result<GridState> {
    let mut amplitudes = vec![Complex64::new(0.0, 0.0); grid.len() * spin_count(spec)];
    for c in &decomposition.coefficients {
        let basis: ComBasisState = build_com_basis_state(grid, spec, s, c.channel, c.component)?.with_ket_basis(ket_basis)?;
        for (acc, a) in amplitudes.iter_mut().zip(basis.amplitudes()) {
            *acc += c.value * a;
        }
    }
    GridState::new(grid, spec, s, ket_basis, amplitudes)
}
