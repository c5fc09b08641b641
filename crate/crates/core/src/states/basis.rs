use std::sync::Arc;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::cgc::{
    angular_helicity_com, angular_spin_orbit_com, ChannelLabel, Degeneracy, Kinematics, Scheme, TwoParticleSpec,
};
use crate::error::{Error, Result};
use crate::lorentz::{compose, spinor_to_lorentz, su2_y, su2_z, BoostConvention, FourMomentum, FourVector, SpinorTransform};
use crate::su2::{rep_matrix, ROTATION_TOL};
use crate::HalfInt;

use super::grid::QuadratureGrid;
use super::spin::{apply_pair, change_ket_basis, unit_vector};

/// Measured value of `Σ_node w Σ_χ |A|²` for every basis state, in both schemes.
///
/// The full diagonal of [`inner_product`] is this times `norm_prefactor² = Δ^{1/2}/2`.
pub const ANGULAR_GRAM_DIAGONAL: f64 = 1.0;

/// Ket convention in which a scheme's amplitudes are natural.
pub(crate) fn natural_kets(scheme: Scheme) -> BoostConvention {
    match scheme {
        Scheme::SpinOrbit => BoostConvention::Canonical,
        Scheme::Helicity => BoostConvention::Helicity,
    }
}

/// COM basis amplitudes of `(channel, component)` on Wigner-spin kets at `(θ, φ)`, `χ1`-major.
///
/// Helicity channels use the rotation-covariant expansion: the conjugated
/// helicity amplitude multiplies the pair ket obtained by rotating
/// `|ẑ λ̃1; −ẑ λ̃2⟩` with `R = e^{−iφσ³/2} e^{−iθσ²/2} e^{iφσ³/2}`.
pub(crate) fn wigner_ket_amplitudes(
    spec: &TwoParticleSpec,
    channel: &ChannelLabel,
    component: HalfInt,
    theta: f64,
    phi: f64,
) -> Result<Vec<Complex64>> {
    match channel.eta {
        Degeneracy::SpinOrbit { .. } => spec
            .spin_pairs()
            .into_iter()
            .map(|(a, b)| angular_spin_orbit_com(spec, channel, component, a, b, theta, phi))
            .collect(),
        Degeneracy::Helicity { lambda1, lambda2 } => {
            let a = angular_helicity_com(spec, channel, component, theta, phi)?.conj();
            let r = su2_z(phi) * su2_y(theta) * su2_z(-phi);
            let d1 = rep_matrix(spec.j1, &SpinorTransform::homogeneous(r)?)?;
            let d2 = rep_matrix(spec.j2, &SpinorTransform::homogeneous(r * su2_y(std::f64::consts::PI))?)?;
            Ok(spec.spin_pairs().into_iter().map(|(c1, c2)| a * d1.get(c1, lambda1) * d2.get(c2, lambda2)).collect())
        }
    }
}

/// A COM-frame partial-wave basis vector sampled on a quadrature grid.
///
/// Amplitudes are always evaluated from the closed forms: a rotated state is
/// evaluated at the preimage direction of each node, so no interpolation enters.
#[derive(Clone, Debug)]
pub struct ComBasisState {
    spec: TwoParticleSpec,
    kin: Kinematics,
    channel: ChannelLabel,
    component: HalfInt,
    grid: Arc<QuadratureGrid>,
    ket_basis: BoostConvention,
    rotation: SpinorTransform,
    norm_prefactor: f64,
    amplitudes: Vec<Complex64>,
}

impl ComBasisState {
    pub fn spec(&self) -> &TwoParticleSpec {
        &self.spec
    }

    pub fn s(&self) -> f64 {
        self.kin.s
    }

    pub fn kinematics(&self) -> &Kinematics {
        &self.kin
    }

    pub fn channel(&self) -> &ChannelLabel {
        &self.channel
    }

    pub fn component(&self) -> HalfInt {
        self.component
    }

    pub fn grid(&self) -> &Arc<QuadratureGrid> {
        &self.grid
    }

    /// Single-particle kets the amplitudes refer to.
    pub fn ket_basis(&self) -> BoostConvention {
        self.ket_basis
    }

    /// Rotation applied since construction.
    pub fn rotation(&self) -> &SpinorTransform {
        &self.rotation
    }

    /// `(√2/2) Δ^{1/4}`.
    pub fn norm_prefactor(&self) -> f64 {
        self.norm_prefactor
    }

    /// Angular amplitudes, node-major, `χ1` then `χ2`.
    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn spin_count(&self) -> usize {
        self.spec.j1.multiplicity() * self.spec.j2.multiplicity()
    }

    pub fn amplitude(&self, node: usize, chi1: HalfInt, chi2: HalfInt) -> Complex64 {
        let k = self.spec.j1.index_of(chi1) * self.spec.j2.multiplicity() + self.spec.j2.index_of(chi2);
        self.amplitudes[node * self.spin_count() + k]
    }

    /// Amplitudes at an arbitrary direction, in this state's ket basis.
    pub fn amplitudes_at(&self, theta: f64, phi: f64) -> Result<Vec<Complex64>> {
        let identity = self.rotation == SpinorTransform::identity();
        let w = if identity {
            wigner_ket_amplitudes(&self.spec, &self.channel, self.component, theta, phi)?
        } else {
            let n = unit_vector(theta, phi);
            let back = spinor_to_lorentz(&self.rotation.inverse()).apply(&FourVector::new(0.0, n[0], n[1], n[2]));
            let (t0, p0) = FourMomentum::new(1.0, back.spatial()).direction_angles();
            let w0 = wigner_ket_amplitudes(&self.spec, &self.channel, self.component, t0, p0)?;
            let d1 = rep_matrix(self.spec.j1, &self.rotation)?;
            let d2 = rep_matrix(self.spec.j2, &self.rotation)?;
            apply_pair(&d1, &d2, &w0)
        };
        change_ket_basis(&self.spec, &self.kin, theta, phi, BoostConvention::Canonical, self.ket_basis, w)
    }

    fn evaluate(&mut self) -> Result<()> {
        let rows: Vec<Vec<Complex64>> =
            self.grid.nodes().par_iter().map(|n| self.amplitudes_at(n.theta, n.phi)).collect::<Result<_>>()?;
        self.amplitudes = rows.into_iter().flatten().collect();
        Ok(())
    }

    /// The same vector expressed in the kets natural to `scheme`.
    pub fn to_scheme(&self, scheme: Scheme) -> Result<ComBasisState> {
        self.with_ket_basis(natural_kets(scheme))
    }

    pub fn with_ket_basis(&self, kets: BoostConvention) -> Result<ComBasisState> {
        if kets == self.ket_basis {
            return Ok(self.clone());
        }
        let mut out = self.clone();
        out.ket_basis = kets;
        out.evaluate()?;
        Ok(out)
    }

    /// `Σ_node w Σ_χ |A|²`, without the prefactor.
    pub fn angular_norm_sqr(&self) -> f64 {
        let k = self.spin_count();
        self.grid
            .nodes()
            .iter()
            .enumerate()
            .map(|(i, n)| n.weight * self.amplitudes[i * k..(i + 1) * k].iter().map(|z| z.norm_sqr()).sum::<f64>())
            .sum()
    }

    /// JSON export with fields `scheme, s, j, eta, component, ket_basis, grid, amplitudes`.
    pub fn to_json(&self) -> String {
        let amps: Vec<[f64; 2]> = self.amplitudes.iter().map(|z| [z.re, z.im]).collect();
        serde_json::json!({
            "scheme": self.channel.scheme().to_string(),
            "s": self.kin.s,
            "j": self.channel.j.to_string(),
            "eta": self.channel.eta.to_string(),
            "component": self.component.to_string(),
            "ket_basis": match self.ket_basis {
                BoostConvention::Canonical => "wigner",
                BoostConvention::Helicity => "helicity",
            },
            "grid": { "n_theta": self.grid.n_theta(), "n_phi": self.grid.n_phi() },
            "amplitudes": amps,
        })
        .to_string()
    }
}

/// Samples the basis vector `|p_R component [s j η]⟩` on `grid`, in the kets of the channel's scheme.
pub fn build_com_basis_state(
    grid: &Arc<QuadratureGrid>,
    spec: &TwoParticleSpec,
    s: f64,
    channel: ChannelLabel,
    component: HalfInt,
) -> Result<ComBasisState> {
    let kin = Kinematics::new(spec, s)?;
    channel.validate(spec)?;
    if !channel.is_realized() {
        return Err(Error::InvalidChannel(format!("{channel} contains no states (|lambda1 - lambda2| > j)")));
    }
    if !channel.j.admits_projection(component) {
        return Err(Error::InvalidChannel(format!("component {component} is not a projection of j={}", channel.j)));
    }
    let mut state = ComBasisState {
        spec: *spec,
        kin,
        channel,
        component,
        grid: Arc::clone(grid),
        ket_basis: natural_kets(channel.scheme()),
        rotation: SpinorTransform::identity(),
        norm_prefactor: kin.normalization(),
        amplitudes: Vec::new(),
    };
    state.evaluate()?;
    Ok(state)
}

pub(crate) fn check_same_grid(a: &QuadratureGrid, b: &QuadratureGrid) -> Result<()> {
    if a.dims() != b.dims() {
        return Err(Error::GridMismatch(a.dims(), b.dims()));
    }
    Ok(())
}

/// `⟨a|b⟩` by quadrature, including both norm prefactors.
pub fn inner_product(a: &ComBasisState, b: &ComBasisState) -> Result<Complex64> {
    check_same_grid(&a.grid, &b.grid)?;
    if a.spec != b.spec || a.kin.s != b.kin.s {
        return Err(Error::IncompatibleStates("states differ in particle content or s".into()));
    }
    if a.ket_basis != b.ket_basis {
        return Err(Error::IncompatibleStates("states are expressed in different ket bases".into()));
    }
    let k = a.spin_count();
    let sum: Complex64 = a
        .grid
        .nodes()
        .iter()
        .enumerate()
        .map(|(i, n)| {
            let r = i * k..(i + 1) * k;
            n.weight * a.amplitudes[r.clone()].iter().zip(&b.amplitudes[r]).map(|(x, y)| x.conj() * y).sum::<Complex64>()
        })
        .sum();
    Ok(sum * a.norm_prefactor * b.norm_prefactor)
}

/// `U(u)` applied to a basis state, `u ∈ SU(2)`.
///
/// Node directions rotate by `Λ(u)` and the spin indices of each particle mix
/// by `D^{ji}(W(u, p̃i))` in the state's ket basis.
pub fn apply_rotation(state: &ComBasisState, u: &SpinorTransform) -> Result<ComBasisState> {
    u.ensure_rotation(ROTATION_TOL)?;
    let mut out = state.clone();
    out.rotation = compose(u, &state.rotation);
    out.evaluate()?;
    Ok(out)
}
