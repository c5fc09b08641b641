use std::sync::Arc;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::cgc::{Kinematics, TwoParticleSpec};
use crate::error::{Error, Result};
use crate::lorentz::{spinor_to_lorentz, BoostConvention, FourMomentum, FourVector, SpinorTransform};
use crate::su2::{rep_matrix, ROTATION_TOL};

use super::basis::{check_same_grid, ComBasisState};
use super::grid::QuadratureGrid;
use super::sht::{analyze, synthesize};
use super::spin::{apply_pair, change_ket_basis, unit_vector};

/// A general COM-frame state given by its angular amplitudes on a grid.
#[derive(Clone, Debug)]
pub struct GridState {
    spec: TwoParticleSpec,
    kin: Kinematics,
    grid: Arc<QuadratureGrid>,
    ket_basis: BoostConvention,
    amplitudes: Vec<Complex64>,
}

impl GridState {
    pub fn new(
        grid: &Arc<QuadratureGrid>,
        spec: &TwoParticleSpec,
        s: f64,
        ket_basis: BoostConvention,
        amplitudes: Vec<Complex64>,
    ) -> Result<Self> {
        let spins = spec.j1.multiplicity() * spec.j2.multiplicity();
        if amplitudes.len() != grid.len() * spins {
            return Err(Error::IncompatibleStates(format!(
                "amplitude table has {} entries, grid needs {}",
                amplitudes.len(),
                grid.len() * spins
            )));
        }
        Ok(GridState { spec: *spec, kin: Kinematics::new(spec, s)?, grid: Arc::clone(grid), ket_basis, amplitudes })
    }

    /// Samples `f(θ, φ)`, which returns the `χ1`-major spin vector at a direction.
    pub fn from_fn<F>(grid: &Arc<QuadratureGrid>, spec: &TwoParticleSpec, s: f64, ket_basis: BoostConvention, f: F) -> Result<Self>
    where
        F: Fn(f64, f64) -> Vec<Complex64> + Sync,
    {
        let amplitudes: Vec<Complex64> = grid.nodes().par_iter().flat_map_iter(|n| f(n.theta, n.phi)).collect();
        GridState::new(grid, spec, s, ket_basis, amplitudes)
    }

    /// Angular amplitudes of a basis state (prefactor dropped).
    pub fn from_basis_state(state: &ComBasisState) -> Self {
        GridState {
            spec: *state.spec(),
            kin: *state.kinematics(),
            grid: Arc::clone(state.grid()),
            ket_basis: state.ket_basis(),
            amplitudes: state.amplitudes().to_vec(),
        }
    }

    pub fn spec(&self) -> &TwoParticleSpec {
        &self.spec
    }

    pub fn s(&self) -> f64 {
        self.kin.s
    }

    pub fn grid(&self) -> &Arc<QuadratureGrid> {
        &self.grid
    }

    pub fn ket_basis(&self) -> BoostConvention {
        self.ket_basis
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    fn spin_count(&self) -> usize {
        self.spec.j1.multiplicity() * self.spec.j2.multiplicity()
    }

    fn check_compatible(&self, other: &GridState) -> Result<()> {
        check_same_grid(&self.grid, &other.grid)?;
        if self.spec != other.spec || self.kin.s != other.kin.s || self.ket_basis != other.ket_basis {
            return Err(Error::IncompatibleStates("states differ in particles, s, or ket basis".into()));
        }
        Ok(())
    }

    /// Angular overlap `Σ_node w Σ_χ conj(self) other`.
    pub fn overlap(&self, other: &GridState) -> Result<Complex64> {
        self.check_compatible(other)?;
        let k = self.spin_count();
        Ok(self
            .grid
            .nodes()
            .iter()
            .enumerate()
            .map(|(i, n)| {
                let r = i * k..(i + 1) * k;
                n.weight * self.amplitudes[r.clone()].iter().zip(&other.amplitudes[r]).map(|(a, b)| a.conj() * b).sum::<Complex64>()
            })
            .sum())
    }

    pub fn norm_sqr(&self) -> f64 {
        self.overlap(self).map(|z| z.re).unwrap_or(f64::NAN)
    }

    /// Quadrature L2 norm of the difference.
    pub fn distance(&self, other: &GridState) -> Result<f64> {
        self.check_compatible(other)?;
        let diff: Vec<Complex64> = self.amplitudes.iter().zip(&other.amplitudes).map(|(a, b)| a - b).collect();
        let d = GridState { amplitudes: diff, ..self.clone() };
        Ok(d.norm_sqr().sqrt())
    }

    fn convert(&self, to: BoostConvention) -> Result<Vec<Complex64>> {
        let k = self.spin_count();
        let rows: Vec<Vec<Complex64>> = self
            .grid
            .nodes()
            .par_iter()
            .enumerate()
            .map(|(i, n)| {
                let v = self.amplitudes[i * k..(i + 1) * k].to_vec();
                change_ket_basis(&self.spec, &self.kin, n.theta, n.phi, self.ket_basis, to, v)
            })
            .collect::<Result<_>>()?;
        Ok(rows.into_iter().flatten().collect())
    }

    pub fn with_ket_basis(&self, to: BoostConvention) -> Result<GridState> {
        Ok(GridState { amplitudes: self.convert(to)?, ket_basis: to, ..self.clone() })
    }

    /// `U(u)` by spherical-harmonic expansion up to the grid band limit.
    ///
    /// Exact for states whose Wigner-ket amplitudes have no content above
    /// `l = n_theta − 1`.
    pub fn rotate(&self, u: &SpinorTransform) -> Result<GridState> {
        u.ensure_rotation(ROTATION_TOL)?;
        let k = self.spin_count();
        let wigner = self.convert(BoostConvention::Canonical)?;
        let coeffs = analyze(&self.grid, &wigner, k, self.grid.band_limit());
        let d1 = rep_matrix(self.spec.j1, u)?;
        let d2 = rep_matrix(self.spec.j2, u)?;
        let back = spinor_to_lorentz(&u.inverse());
        let rows: Vec<Vec<Complex64>> = self
            .grid
            .nodes()
            .par_iter()
            .map(|n| {
                let v = unit_vector(n.theta, n.phi);
                let pre = back.apply(&FourVector::new(0.0, v[0], v[1], v[2]));
                let (t0, p0) = FourMomentum::new(1.0, pre.spatial()).direction_angles();
                let w = apply_pair(&d1, &d2, &synthesize(&coeffs, t0, p0));
                change_ket_basis(&self.spec, &self.kin, n.theta, n.phi, BoostConvention::Canonical, self.ket_basis, w)
            })
            .collect::<Result<_>>()?;
        Ok(GridState { amplitudes: rows.into_iter().flatten().collect(), ..self.clone() })
    }
}
