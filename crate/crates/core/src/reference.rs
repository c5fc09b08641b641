//! Published closed forms of the spin-½ pair coefficients, transcribed verbatim.
//!
//! Each cell carries the printed expression, an evaluator for it, and, where the
//! printed form disagrees with the coupling formula, an amendment naming the
//! value the formula gives. Consumers decide which one to compare against.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::cgc::ChannelLabel;
use crate::HalfInt;

pub type CellFn = fn(f64, f64) -> Complex64;

/// A corrected reading of a printed cell.
#[derive(Clone, Copy, Debug)]
pub struct Amendment {
    pub expression: &'static str,
    pub value: CellFn,
    pub reason: &'static str,
}

/// One printed coefficient cell.
#[derive(Clone, Copy, Debug)]
pub struct ReferenceCell {
    /// Stable identifier, e.g. `so/j=1/s=1/l=2/chi=0/(+1/2,-1/2)`.
    pub id: &'static str,
    pub channel: ChannelLabel,
    pub component: HalfInt,
    /// Particle spin (or helicity) pair the cell multiplies.
    pub spins: (HalfInt, HalfInt),
    pub expression: &'static str,
    pub printed: CellFn,
    pub amended: Option<Amendment>,
}

impl ReferenceCell {
    /// The amended value when one exists, otherwise the printed value.
    pub fn expected(&self, theta: f64, phi: f64) -> Complex64 {
        match &self.amended {
            Some(a) => (a.value)(theta, phi),
            None => (self.printed)(theta, phi),
        }
    }
}

/// One printed row of channel quantum numbers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SymmetryRow {
    pub j: HalfInt,
    pub s: HalfInt,
    pub l: HalfInt,
    pub parity: i32,
    pub charge_parity: i32,
}

const P: HalfInt = HalfInt::HALF;
const M: HalfInt = HalfInt::from_twice(-1);

fn e(n: f64, phi: f64) -> Complex64 {
    Complex64::from_polar(1.0, n * phi)
}

fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn p2(t: f64) -> f64 {
    1.5 * t.cos().powi(2) - 0.5
}

fn r(x: f64) -> f64 {
    (x / PI).sqrt()
}

/// Fermion-antifermion channels with `j ≤ 1` and their `(π_P, ξ_C)` as printed.
pub fn symmetry_table() -> [SymmetryRow; 6] {
    let h = HalfInt::from_int;
    let row = |j, s, l, parity, charge_parity| SymmetryRow { j: h(j), s: h(s), l: h(l), parity, charge_parity };
    [row(0, 0, 0, -1, 1), row(0, 1, 1, 1, 1), row(1, 0, 1, 1, -1), row(1, 1, 0, -1, -1), row(1, 1, 1, 1, -1), row(1, 1, 2, -1, 1)]
}

macro_rules! cell {
    ($id:expr, $s:expr, $l:expr, $chi:expr, ($a:expr, $b:expr), $expr:expr, $f:expr) => {
        cell!($id, $s, $l, $chi, ($a, $b), $expr, $f, None)
    };
    ($id:expr, $s:expr, $l:expr, $chi:expr, ($a:expr, $b:expr), $expr:expr, $f:expr, $amend:expr) => {
        ReferenceCell {
            id: $id,
            channel: ChannelLabel::spin_orbit(HalfInt::ONE, HalfInt::from_int($l), HalfInt::from_int($s)),
            component: HalfInt::from_int($chi),
            spins: ($a, $b),
            expression: $expr,
            printed: $f,
            amended: $amend,
        }
    };
}

const ROW_NORM: &str = "printed row has squared norm 3/2 while every other row has norm 1";

/// The 48 spin-orbit cells for a spin-½ pair with `j = 1`, in row order
/// `(s, l, χ)` and spin pairs `(+,+), (+,−), (−,+), (−,−)`.
pub fn spin_orbit_j1_table() -> Vec<ReferenceCell> {
    vec![
        cell!("so/j=1/s=0/l=1/chi=1/(+1/2,+1/2)", 0, 1, 1, (P, P), "0", |_, _| re(0.0)),
        cell!("so/j=1/s=0/l=1/chi=1/(+1/2,-1/2)", 0, 1, 1, (P, M), "sqrt(3/16pi) sin(theta) e^{i phi}", |t, f| r(3.0 / 16.0) * t.sin() * e(1.0, f)),
        cell!("so/j=1/s=0/l=1/chi=1/(-1/2,+1/2)", 0, 1, 1, (M, P), "-sqrt(3/16pi) sin(theta) e^{i phi}", |t, f| -r(3.0 / 16.0) * t.sin() * e(1.0, f)),
        cell!("so/j=1/s=0/l=1/chi=1/(-1/2,-1/2)", 0, 1, 1, (M, M), "0", |_, _| re(0.0)),
        cell!("so/j=1/s=0/l=1/chi=0/(+1/2,+1/2)", 0, 1, 0, (P, P), "0", |_, _| re(0.0)),
        cell!("so/j=1/s=0/l=1/chi=0/(+1/2,-1/2)", 0, 1, 0, (P, M), "sqrt(3/8pi) cos(theta)", |t, _| re(r(3.0 / 8.0) * t.cos())),
        cell!("so/j=1/s=0/l=1/chi=0/(-1/2,+1/2)", 0, 1, 0, (M, P), "-sqrt(3/8pi) cos(theta)", |t, _| re(-r(3.0 / 8.0) * t.cos())),
        cell!("so/j=1/s=0/l=1/chi=0/(-1/2,-1/2)", 0, 1, 0, (M, M), "0", |_, _| re(0.0)),
        cell!("so/j=1/s=0/l=1/chi=-1/(+1/2,+1/2)", 0, 1, -1, (P, P), "0", |_, _| re(0.0)),
        cell!("so/j=1/s=0/l=1/chi=-1/(+1/2,-1/2)", 0, 1, -1, (P, M), "-sqrt(3/16pi) sin(theta) e^{-i phi}", |t, f| -r(3.0 / 16.0) * t.sin() * e(-1.0, f)),
        cell!("so/j=1/s=0/l=1/chi=-1/(-1/2,+1/2)", 0, 1, -1, (M, P), "sqrt(3/16pi) sin(theta) e^{-i phi}", |t, f| r(3.0 / 16.0) * t.sin() * e(-1.0, f)),
        cell!("so/j=1/s=0/l=1/chi=-1/(-1/2,-1/2)", 0, 1, -1, (M, M), "0", |_, _| re(0.0)),
        cell!(
            "so/j=1/s=1/l=0/chi=1/(+1/2,+1/2)", 1, 0, 1, (P, P), "sqrt(1/4pi)", |_, _| re(r(0.25)),
            Some(Amendment {
                expression: "-sqrt(1/4pi)",
                value: |_, _| re(-r(0.25)),
                reason: "sign: the chi=-1 partner is printed as -sqrt(1/4pi), and the (-)^chi phase makes both chi=+1 and chi=-1 stretched cells negative",
            })
        ),
        cell!("so/j=1/s=1/l=0/chi=1/(+1/2,-1/2)", 1, 0, 1, (P, M), "0", |_, _| re(0.0)),
        cell!("so/j=1/s=1/l=0/chi=1/(-1/2,+1/2)", 1, 0, 1, (M, P), "0", |_, _| re(0.0)),
        cell!("so/j=1/s=1/l=0/chi=1/(-1/2,-1/2)", 1, 0, 1, (M, M), "0", |_, _| re(0.0)),
        cell!("so/j=1/s=1/l=0/chi=0/(+1/2,+1/2)", 1, 0, 0, (P, P), "0", |_, _| re(0.0)),
        cell!("so/j=1/s=1/l=0/chi=0/(+1/2,-1/2)", 1, 0, 0, (P, M), "sqrt(1/8pi)", |_, _| re(r(1.0 / 8.0))),
        cell!("so/j=1/s=1/l=0/chi=0/(-1/2,+1/2)", 1, 0, 0, (M, P), "sqrt(1/8pi)", |_, _| re(r(1.0 / 8.0))),
        cell!("so/j=1/s=1/l=0/chi=0/(-1/2,-1/2)", 1, 0, 0, (M, M), "0", |_, _| re(0.0)),
        cell!("so/j=1/s=1/l=0/chi=-1/(+1/2,+1/2)", 1, 0, -1, (P, P), "0", |_, _| re(0.0)),
        cell!("so/j=1/s=1/l=0/chi=-1/(+1/2,-1/2)", 1, 0, -1, (P, M), "0", |_, _| re(0.0)),
        cell!("so/j=1/s=1/l=0/chi=-1/(-1/2,+1/2)", 1, 0, -1, (M, P), "0", |_, _| re(0.0)),
        cell!("so/j=1/s=1/l=0/chi=-1/(-1/2,-1/2)", 1, 0, -1, (M, M), "-sqrt(1/4pi)", |_, _| re(-r(0.25))),
        cell!("so/j=1/s=1/l=1/chi=1/(+1/2,+1/2)", 1, 1, 1, (P, P), "sqrt(3/8pi) cos(theta)", |t, _| re(r(3.0 / 8.0) * t.cos())),
        cell!(
            "so/j=1/s=1/l=1/chi=1/(+1/2,-1/2)", 1, 1, 1, (P, M), "sqrt(3/16pi) sin(theta) e^{i phi}", |t, f| r(3.0 / 16.0) * t.sin() * e(1.0, f),
            Some(Amendment { expression: "sqrt(3/32pi) sin(theta) e^{i phi}", value: |t, f| r(3.0 / 32.0) * t.sin() * e(1.0, f), reason: ROW_NORM })
        ),
        cell!(
            "so/j=1/s=1/l=1/chi=1/(-1/2,+1/2)", 1, 1, 1, (M, P), "sqrt(3/16pi) sin(theta) e^{i phi}", |t, f| r(3.0 / 16.0) * t.sin() * e(1.0, f),
            Some(Amendment { expression: "sqrt(3/32pi) sin(theta) e^{i phi}", value: |t, f| r(3.0 / 32.0) * t.sin() * e(1.0, f), reason: ROW_NORM })
        ),
        cell!("so/j=1/s=1/l=1/chi=1/(-1/2,-1/2)", 1, 1, 1, (M, M), "0", |_, _| re(0.0)),
        cell!("so/j=1/s=1/l=1/chi=0/(+1/2,+1/2)", 1, 1, 0, (P, P), "-sqrt(3/16pi) sin(theta) e^{-i phi}", |t, f| -r(3.0 / 16.0) * t.sin() * e(-1.0, f)),
        cell!("so/j=1/s=1/l=1/chi=0/(+1/2,-1/2)", 1, 1, 0, (P, M), "0", |_, _| re(0.0)),
        cell!("so/j=1/s=1/l=1/chi=0/(-1/2,+1/2)", 1, 1, 0, (M, P), "0", |_, _| re(0.0)),
        cell!("so/j=1/s=1/l=1/chi=0/(-1/2,-1/2)", 1, 1, 0, (M, M), "-sqrt(3/16pi) sin(theta) e^{i phi}", |t, f| -r(3.0 / 16.0) * t.sin() * e(1.0, f)),
        cell!("so/j=1/s=1/l=1/chi=-1/(+1/2,+1/2)", 1, 1, -1, (P, P), "0", |_, _| re(0.0)),
        cell!(
            "so/j=1/s=1/l=1/chi=-1/(+1/2,-1/2)", 1, 1, -1, (P, M), "sqrt(3/16pi) sin(theta) e^{-i phi}", |t, f| r(3.0 / 16.0) * t.sin() * e(-1.0, f),
            Some(Amendment { expression: "sqrt(3/32pi) sin(theta) e^{-i phi}", value: |t, f| r(3.0 / 32.0) * t.sin() * e(-1.0, f), reason: ROW_NORM })
        ),
        cell!(
            "so/j=1/s=1/l=1/chi=-1/(-1/2,+1/2)", 1, 1, -1, (M, P), "sqrt(3/16pi) sin(theta) e^{-i phi}", |t, f| r(3.0 / 16.0) * t.sin() * e(-1.0, f),
            Some(Amendment { expression: "sqrt(3/32pi) sin(theta) e^{-i phi}", value: |t, f| r(3.0 / 32.0) * t.sin() * e(-1.0, f), reason: ROW_NORM })
        ),
        cell!("so/j=1/s=1/l=1/chi=-1/(-1/2,-1/2)", 1, 1, -1, (M, M), "-sqrt(3/8pi) cos(theta)", |t, _| re(-r(3.0 / 8.0) * t.cos())),
        cell!("so/j=1/s=1/l=2/chi=1/(+1/2,+1/2)", 1, 2, 1, (P, P), "-sqrt(1/8pi) (3/2 cos^2(theta) - 1/2)", |t, _| re(-r(1.0 / 8.0) * p2(t))),
        cell!("so/j=1/s=1/l=2/chi=1/(+1/2,-1/2)", 1, 2, 1, (P, M), "-sqrt(9/32pi) sin(theta) cos(theta) e^{i phi}", |t, f| -r(9.0 / 32.0) * t.sin() * t.cos() * e(1.0, f)),
        cell!("so/j=1/s=1/l=2/chi=1/(-1/2,+1/2)", 1, 2, 1, (M, P), "-sqrt(9/32pi) sin(theta) cos(theta) e^{i phi}", |t, f| -r(9.0 / 32.0) * t.sin() * t.cos() * e(1.0, f)),
        cell!("so/j=1/s=1/l=2/chi=1/(-1/2,-1/2)", 1, 2, 1, (M, M), "-sqrt(9/32pi) sin^2(theta) e^{2i phi}", |t, f| -r(9.0 / 32.0) * t.sin().powi(2) * e(2.0, f)),
        cell!("so/j=1/s=1/l=2/chi=0/(+1/2,+1/2)", 1, 2, 0, (P, P), "sqrt(9/16pi) sin(theta) cos(theta) e^{-i phi}", |t, f| r(9.0 / 16.0) * t.sin() * t.cos() * e(-1.0, f)),
        cell!("so/j=1/s=1/l=2/chi=0/(+1/2,-1/2)", 1, 2, 0, (P, M), "-sqrt(1/4pi) (3/2 cos^2(theta) - 1/2)", |t, _| re(-r(0.25) * p2(t))),
        cell!("so/j=1/s=1/l=2/chi=0/(-1/2,+1/2)", 1, 2, 0, (M, P), "-sqrt(1/4pi) (3/2 cos^2(theta) - 1/2)", |t, _| re(-r(0.25) * p2(t))),
        cell!("so/j=1/s=1/l=2/chi=0/(-1/2,-1/2)", 1, 2, 0, (M, M), "-sqrt(9/16pi) sin(theta) cos(theta) e^{i phi}", |t, f| -r(9.0 / 16.0) * t.sin() * t.cos() * e(1.0, f)),
        cell!("so/j=1/s=1/l=2/chi=-1/(+1/2,+1/2)", 1, 2, -1, (P, P), "-sqrt(9/32pi) sin^2(theta) e^{-2i phi}", |t, f| -r(9.0 / 32.0) * t.sin().powi(2) * e(-2.0, f)),
        cell!("so/j=1/s=1/l=2/chi=-1/(+1/2,-1/2)", 1, 2, -1, (P, M), "sqrt(9/32pi) sin(theta) cos(theta) e^{-i phi}", |t, f| r(9.0 / 32.0) * t.sin() * t.cos() * e(-1.0, f)),
        cell!("so/j=1/s=1/l=2/chi=-1/(-1/2,+1/2)", 1, 2, -1, (M, P), "sqrt(9/32pi) sin(theta) cos(theta) e^{-i phi}", |t, f| r(9.0 / 32.0) * t.sin() * t.cos() * e(-1.0, f)),
        cell!("so/j=1/s=1/l=2/chi=-1/(-1/2,-1/2)", 1, 2, -1, (M, M), "-sqrt(1/8pi) (3/2 cos^2(theta) - 1/2)", |t, _| re(-r(1.0 / 8.0) * p2(t))),
    ]
}

macro_rules! hcell {
    ($id:expr, ($a:expr, $b:expr), $j:expr, $lambda:expr, $expr:expr, $f:expr) => {
        hcell!($id, ($a, $b), $j, $lambda, $expr, $f, None)
    };
    ($id:expr, ($a:expr, $b:expr), $j:expr, $lambda:expr, $expr:expr, $f:expr, $amend:expr) => {
        ReferenceCell {
            id: $id,
            channel: ChannelLabel::helicity(HalfInt::from_int($j), $a, $b),
            component: HalfInt::from_int($lambda),
            spins: ($a, $b),
            expression: $expr,
            printed: $f,
            amended: $amend,
        }
    };
}

const RADICAL: Amendment = Amendment {
    expression: "sqrt(3/4pi) cos(theta)",
    value: |t, _| re(r(0.75) * t.cos()),
    reason: "cos(theta) printed under the radical; the d^1_00 = cos(theta) factor belongs outside it",
};

/// The 14 helicity cells with `j ∈ {0, 1}` for a spin-½ pair, keyed by `(λ̃1, λ̃2, j, λ)`.
pub fn helicity_table() -> Vec<ReferenceCell> {
    vec![
        hcell!("hel/j=0/(+1/2,+1/2)/lambda=0", (P, P), 0, 0, "sqrt(1/4pi)", |_, _| re(r(0.25))),
        hcell!("hel/j=0/(-1/2,-1/2)/lambda=0", (M, M), 0, 0, "sqrt(1/4pi)", |_, _| re(r(0.25))),
        hcell!("hel/j=1/(+1/2,+1/2)/lambda=1", (P, P), 1, 1, "-sqrt(3/8pi) e^{-i phi} sin(theta)", |t, f| -r(3.0 / 8.0) * t.sin() * e(-1.0, f)),
        hcell!("hel/j=1/(+1/2,+1/2)/lambda=0", (P, P), 1, 0, "sqrt(3/4pi cos(theta))", |t, _| re((0.75 * t.cos() / PI).sqrt()), Some(RADICAL)),
        hcell!("hel/j=1/(+1/2,+1/2)/lambda=-1", (P, P), 1, -1, "sqrt(3/8pi) e^{i phi} sin(theta)", |t, f| r(3.0 / 8.0) * t.sin() * e(1.0, f)),
        hcell!("hel/j=1/(+1/2,-1/2)/lambda=1", (P, M), 1, 1, "sqrt(3/16pi) (1 + cos(theta))", |t, _| re(r(3.0 / 16.0) * (1.0 + t.cos()))),
        hcell!("hel/j=1/(+1/2,-1/2)/lambda=0", (P, M), 1, 0, "sqrt(3/8pi) e^{i phi} sin(theta)", |t, f| r(3.0 / 8.0) * t.sin() * e(1.0, f)),
        hcell!("hel/j=1/(+1/2,-1/2)/lambda=-1", (P, M), 1, -1, "sqrt(3/16pi) e^{2i phi} (1 - cos(theta))", |t, f| r(3.0 / 16.0) * (1.0 - t.cos()) * e(2.0, f)),
        hcell!("hel/j=1/(-1/2,+1/2)/lambda=1", (M, P), 1, 1, "sqrt(3/16pi) e^{-2i phi} (1 - cos(theta))", |t, f| r(3.0 / 16.0) * (1.0 - t.cos()) * e(-2.0, f)),
        hcell!("hel/j=1/(-1/2,+1/2)/lambda=0", (M, P), 1, 0, "-sqrt(3/8pi) e^{-i phi} sin(theta)", |t, f| -r(3.0 / 8.0) * t.sin() * e(-1.0, f)),
        hcell!("hel/j=1/(-1/2,+1/2)/lambda=-1", (M, P), 1, -1, "sqrt(3/16pi) (1 + cos(theta))", |t, _| re(r(3.0 / 16.0) * (1.0 + t.cos()))),
        hcell!("hel/j=1/(-1/2,-1/2)/lambda=1", (M, M), 1, 1, "-sqrt(3/8pi) e^{-i phi} sin(theta)", |t, f| -r(3.0 / 8.0) * t.sin() * e(-1.0, f)),
        hcell!("hel/j=1/(-1/2,-1/2)/lambda=0", (M, M), 1, 0, "sqrt(3/4pi cos(theta))", |t, _| re((0.75 * t.cos() / PI).sqrt()), Some(RADICAL)),
        hcell!("hel/j=1/(-1/2,-1/2)/lambda=-1", (M, M), 1, -1, "sqrt(3/8pi) e^{i phi} sin(theta)", |t, f| r(3.0 / 8.0) * t.sin() * e(1.0, f)),
    ]
}
