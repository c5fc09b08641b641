use num_complex::Complex64;
use rayon::prelude::*;

use crate::ylm::spherical_harmonics_upto;

use super::grid::QuadratureGrid;

/// Expansion coefficients `c[l][l − m]` of a scalar function on the sphere.
#[derive(Clone, Debug, PartialEq)]
pub struct HarmonicCoefficients {
    pub l_max: usize,
    pub coeffs: Vec<Vec<Complex64>>,
}

impl HarmonicCoefficients {
    fn zeros(l_max: usize) -> Self {
        HarmonicCoefficients { l_max, coeffs: (0..=l_max).map(|l| vec![Complex64::new(0.0, 0.0); 2 * l + 1]).collect() }
    }

    fn add(mut self, other: &HarmonicCoefficients) -> Self {
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            for (x, y) in a.iter_mut().zip(b) {
                *x += y;
            }
        }
        self
    }

    /// `Σ |c_lm|²`.
    pub fn power(&self) -> f64 {
        self.coeffs.iter().flatten().map(|z| z.norm_sqr()).sum()
    }
}

/// Projects `components` interleaved scalar fields (node-major) onto `Y_lm`, `l ≤ l_max`.
pub fn analyze(grid: &QuadratureGrid, values: &[Complex64], components: usize, l_max: usize) -> Vec<HarmonicCoefficients> {
    assert_eq!(values.len(), grid.len() * components);
    grid.nodes()
        .par_iter()
        .enumerate()
        .fold(
            || vec![HarmonicCoefficients::zeros(l_max); components],
            |mut acc, (i, n)| {
                let y = spherical_harmonics_upto(l_max, n.theta, n.phi);
                for (c, out) in acc.iter_mut().enumerate() {
                    let f = values[i * components + c] * n.weight;
                    if f.norm_sqr() == 0.0 {
                        continue;
                    }
                    for (row, yrow) in out.coeffs.iter_mut().zip(&y) {
                        for (x, yy) in row.iter_mut().zip(yrow) {
                            *x += yy.conj() * f;
                        }
                    }
                }
                acc
            },
        )
        .reduce(
            || vec![HarmonicCoefficients::zeros(l_max); components],
            |a, b| a.into_iter().zip(&b).map(|(x, y)| x.add(y)).collect(),
        )
}

/// `Σ c_lm Y_lm(θ, φ)` for each coefficient set.
pub fn synthesize(coeffs: &[HarmonicCoefficients], theta: f64, phi: f64) -> Vec<Complex64> {
    let l_max = coeffs.iter().map(|c| c.l_max).max().unwrap_or(0);
    let y = spherical_harmonics_upto(l_max, theta, phi);
    coeffs
        .iter()
        .map(|c| c.coeffs.iter().zip(&y).flat_map(|(a, b)| a.iter().zip(b)).map(|(a, b)| a * b).sum())
        .collect()
}
