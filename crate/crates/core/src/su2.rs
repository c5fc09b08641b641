//! SU(2) representation matrices and Clebsch-Gordan coefficients.
//!
//! Components are indexed in descending order, row/column 0 is `m = +j`.
//! Phases follow Condon and Shortley throughout.

use std::f64::consts::PI;
use std::ops::Mul;
use std::sync::OnceLock;

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::lorentz::{su2_y, su2_z, Spinor, SpinorTransform};
use crate::HalfInt;

/// Largest spin for which representation matrices are evaluated.
pub const MAX_SPIN: HalfInt = HalfInt::from_int(10);

/// Tolerance used when deciding whether an input is an SU(2) matrix.
pub const ROTATION_TOL: f64 = 1e-10;

/// A `(2j+1)`-dimensional representation matrix `D^j`.
#[derive(Clone, Debug, PartialEq)]
pub struct RepMatrix {
    j: HalfInt,
    entries: DMatrix<Complex64>,
}

impl RepMatrix {
    pub fn identity(j: HalfInt) -> Self {
        let n = j.multiplicity();
        RepMatrix { j, entries: DMatrix::identity(n, n) }
    }

    /// Wraps a square matrix; panics if the dimension is not `2j+1`.
    pub fn from_entries(j: HalfInt, entries: DMatrix<Complex64>) -> Self {
        assert_eq!(entries.nrows(), j.multiplicity());
        assert_eq!(entries.ncols(), j.multiplicity());
        RepMatrix { j, entries }
    }

    pub fn j(&self) -> HalfInt {
        self.j
    }

    pub fn dim(&self) -> usize {
        self.entries.nrows()
    }

    pub fn entries(&self) -> &DMatrix<Complex64> {
        &self.entries
    }

    /// The element `D^j_{m' m}` addressed by component labels.
    pub fn get(&self, m_row: HalfInt, m_col: HalfInt) -> Complex64 {
        self.entries[(self.j.index_of(m_row), self.j.index_of(m_col))]
    }

    pub fn adjoint(&self) -> Self {
        RepMatrix { j: self.j, entries: self.entries.adjoint() }
    }

    pub fn conjugate(&self) -> Self {
        RepMatrix { j: self.j, entries: self.entries.conjugate() }
    }

    /// `‖D†D − 1‖_max`.
    pub fn unitarity_residual(&self) -> f64 {
        let n = self.dim();
        let g = self.entries.adjoint() * &self.entries - DMatrix::<Complex64>::identity(n, n);
        g.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Largest entrywise modulus of the difference.
    pub fn distance(&self, other: &RepMatrix) -> f64 {
        assert_eq!(self.j, other.j);
        (&self.entries - &other.entries).iter().map(|z| z.norm()).fold(0.0, f64::max)
    }
}

impl Mul for &RepMatrix {
    type Output = RepMatrix;

    fn mul(self, rhs: &RepMatrix) -> RepMatrix {
        assert_eq!(self.j, rhs.j);
        RepMatrix { j: self.j, entries: &self.entries * &rhs.entries }
    }
}

fn factorials() -> &'static [f64] {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = vec![1.0; 171];
        for n in 1..t.len() {
            t[n] = t[n - 1] * n as f64;
        }
        t
    })
}

/// `n!` for an integer-valued half-integer combination.
fn fact(n: HalfInt) -> f64 {
    let n = n.as_int().expect("factorial of a half-odd label");
    factorials()[usize::try_from(n).expect("negative factorial")]
}

fn check_spin(j: HalfInt) -> Result<()> {
    if j > MAX_SPIN {
        return Err(Error::SpinTooLarge(j));
    }
    Ok(())
}

/// One element `d^j_{m' m}(θ)` from Wigner's explicit sum.
fn d_element(j: HalfInt, mp: HalfInt, m: HalfInt, c: f64, s: f64) -> f64 {
    let pre = (fact(j + mp) * fact(j - mp) * fact(j + m) * fact(j - m)).sqrt();
    let k_min = 0.max((m - mp).as_int().unwrap());
    let k_max = (j + m).as_int().unwrap().min((j - mp).as_int().unwrap());
    let mut sum = 0.0;
    for k in k_min..=k_max {
        let kh = HalfInt::from_int(k);
        let sign = if (kh - m + mp).as_int().unwrap() % 2 == 0 { 1.0 } else { -1.0 };
        let pc = (j + j - kh - kh + m - mp).as_int().unwrap();
        let ps = (kh + kh - m + mp).as_int().unwrap();
        let den = fact(j + m - kh) * fact(kh) * fact(j - kh - mp) * fact(kh - m + mp);
        sum += sign * c.powi(pc) * s.powi(ps) / den;
    }
    pre * sum
}

/// The real rotation matrix `d^j(θ) = D^j(exp(−iθσ²/2))`.
pub fn wigner_d_small(j: HalfInt, theta: f64) -> Result<RepMatrix> {
    check_spin(j)?;
    let (c, s) = ((theta / 2.0).cos(), (theta / 2.0).sin());
    let n = j.multiplicity();
    let mut entries = DMatrix::zeros(n, n);
    for (r, mp) in j.projections().enumerate() {
        for (k, m) in j.projections().enumerate() {
            entries[(r, k)] = Complex64::new(d_element(j, mp, m, c, s), 0.0);
        }
    }
    Ok(RepMatrix { j, entries })
}

/// Euler angles of `u = ±exp(−iασ³/2) exp(−iβσ²/2) exp(−iγσ³/2)`.
///
/// `α, γ ∈ [0, 2π)`, `β ∈ [0, π]`; when `β` is 0 or π the whole azimuth goes
/// into `α`. The flag is true when the angles reproduce `−u` rather than `u`.
pub fn euler_zyz(u: &Spinor) -> (f64, f64, f64, bool) {
    let (a00, a10, a11) = (u[(0, 0)].norm(), u[(1, 0)].norm(), u[(1, 1)]);
    let beta = 2.0 * a10.atan2(a00);
    let (alpha, gamma) = if a10 < 1e-14 {
        (2.0 * a11.arg(), 0.0)
    } else if a00 < 1e-14 {
        (2.0 * u[(1, 0)].arg(), 0.0)
    } else {
        (a11.arg() + u[(1, 0)].arg(), a11.arg() - u[(1, 0)].arg())
    };
    let wrap = |x: f64| {
        let r = x.rem_euclid(2.0 * PI);
        if r >= 2.0 * PI { 0.0 } else { r }
    };
    let (alpha, gamma) = (wrap(alpha), wrap(gamma));
    let rebuilt = su2_z(alpha) * su2_y(beta) * su2_z(gamma);
    let plus = (rebuilt - u).iter().map(|z| z.norm()).fold(0.0, f64::max);
    let minus = (rebuilt + u).iter().map(|z| z.norm()).fold(0.0, f64::max);
    (alpha, beta, gamma, minus < plus)
}

/// `D^j(u)` for `u ∈ SU(2)`, with `D^{1/2}(u) = u`.
pub fn rep_matrix(j: HalfInt, u: &SpinorTransform) -> Result<RepMatrix> {
    check_spin(j)?;
    u.ensure_rotation(ROTATION_TOL)?;
    let (alpha, beta, gamma, negated) = euler_zyz(u.matrix());
    let mut d = wigner_d_small(j, beta)?;
    let flip = if negated && !j.is_integer() { -1.0 } else { 1.0 };
    for (r, mp) in j.projections().enumerate() {
        for (k, m) in j.projections().enumerate() {
            let phase = Complex64::from_polar(flip, -alpha * mp.value() - gamma * m.value());
            d.entries[(r, k)] *= phase;
        }
    }
    Ok(d)
}

/// The Clebsch-Gordan coefficient `⟨j1 χ1 j2 χ2 | j χ⟩` (Racah's formula).
///
/// Returns 0 for any coupling forbidden by the selection or triangle rules.
pub fn su2_cgc(j: HalfInt, j1: HalfInt, j2: HalfInt, chi: HalfInt, chi1: HalfInt, chi2: HalfInt) -> f64 {
    if chi != chi1 + chi2
        || !j.admits_projection(chi)
        || !j1.admits_projection(chi1)
        || !j2.admits_projection(chi2)
        || j < (j1 - j2).abs()
        || j > j1 + j2
        || !(j1 + j2 + j).is_integer()
    {
        return 0.0;
    }
    let tri = (j.multiplicity() as f64
        * fact(j + j1 - j2)
        * fact(j - j1 + j2)
        * fact(j1 + j2 - j)
        / fact(j1 + j2 + j + HalfInt::ONE))
    .sqrt();
    let proj = (fact(j + chi) * fact(j - chi) * fact(j1 - chi1) * fact(j1 + chi1) * fact(j2 - chi2) * fact(j2 + chi2)).sqrt();
    let k_min = 0.max((j2 - j - chi1).as_int().unwrap()).max((j1 + chi2 - j).as_int().unwrap());
    let k_max = (j1 + j2 - j).as_int().unwrap().min((j1 - chi1).as_int().unwrap()).min((j2 + chi2).as_int().unwrap());
    let mut sum = 0.0;
    for k in k_min..=k_max {
        let kh = HalfInt::from_int(k);
        let den = fact(kh)
            * fact(j1 + j2 - j - kh)
            * fact(j1 - chi1 - kh)
            * fact(j2 + chi2 - kh)
            * fact(j - j2 + chi1 + kh)
            * fact(j - j1 - chi2 + kh);
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        sum += sign / den;
    }
    tri * proj * sum
}
