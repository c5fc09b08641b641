use std::f64::consts::PI;

use crate::error::{Error, Result};

/// One quadrature node on the unit sphere.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Node {
    pub theta: f64,
    pub phi: f64,
    pub weight: f64,
}

/// Gauss-Legendre in `cos θ` times the uniform trapezoid rule in `φ`.
///
/// Nodes are stored `θ`-major: index `i_theta * n_phi + i_phi`, with `θ`
/// increasing and `φ = 2πk / n_phi`.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadratureGrid {
    n_theta: usize,
    n_phi: usize,
    nodes: Vec<Node>,
}

/// Default resolution `(n_theta, n_phi)`.
pub const DEFAULT_GRID: (usize, usize) = (32, 64);

/// Gauss-Legendre nodes (descending) and weights on `[-1, 1]`.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    if n == 0 {
        return (Vec::new(), Vec::new());
    }
    let mut xs = Vec::with_capacity(n);
    let mut ws = Vec::with_capacity(n);
    for i in 0..n {
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let step = p1 / dp;
            x -= step;
            if step.abs() < 1e-16 {
                break;
            }
        }
        xs.push(x);
        ws.push(2.0 / ((1.0 - x * x) * dp * dp));
    }
    (xs, ws)
}

impl QuadratureGrid {
    pub fn new(n_theta: usize, n_phi: usize) -> Result<Self> {
        if n_theta < 2 || n_phi < 4 {
            return Err(Error::GridTooCoarse { n_theta, n_phi });
        }
        let (xs, ws) = gauss_legendre(n_theta);
        let dphi = 2.0 * PI / n_phi as f64;
        let mut nodes = Vec::with_capacity(n_theta * n_phi);
        for (x, w) in xs.iter().zip(&ws) {
            let theta = x.acos();
            for k in 0..n_phi {
                nodes.push(Node { theta, phi: k as f64 * dphi, weight: w * dphi });
            }
        }
        Ok(QuadratureGrid { n_theta, n_phi, nodes })
    }

    pub fn n_theta(&self) -> usize {
        self.n_theta
    }

    pub fn n_phi(&self) -> usize {
        self.n_phi
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.n_theta, self.n_phi)
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    /// Largest orbital degree whose products are integrated exactly.
    pub fn band_limit(&self) -> usize {
        self.n_theta - 1
    }

    /// `∫ f dΩ` by quadrature.
    pub fn integrate<F: Fn(f64, f64) -> f64>(&self, f: F) -> f64 {
        self.nodes.iter().map(|n| n.weight * f(n.theta, n.phi)).sum()
    }
}

/// Builds a grid, rejecting sizes below 2 x 4.
pub fn build_grid(n_theta: usize, n_phi: usize) -> Result<QuadratureGrid> {
    QuadratureGrid::new(n_theta, n_phi)
}
