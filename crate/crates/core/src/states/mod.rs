//! Discretized two-particle states on the COM sphere at fixed `s`.
//!
//! Amplitude tables are node-major with spin pairs `(χ1, χ2)` in minor order,
//! `χ1` slower, both descending.

mod basis;
mod grid;
mod product;
mod sampled;
mod sht;
mod spin;

pub use basis::{apply_rotation, build_com_basis_state, inner_product, ComBasisState, ANGULAR_GRAM_DIAGONAL};
pub use grid::{build_grid, gauss_legendre, Node, QuadratureGrid, DEFAULT_GRID};
pub use product::{decompose_product_state, reconstruct, BellState, Coefficient, Decomposition, ProductState};
pub use sampled::GridState;
pub use sht::{analyze, synthesize, HarmonicCoefficients};
