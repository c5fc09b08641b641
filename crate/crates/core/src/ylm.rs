//! Spherical harmonics with the Condon-Shortley phase.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::HalfInt;

/// Normalized associated Legendre values `N_lm P_l^m(cos θ)` for fixed `m ≥ 0`
/// and `l = m ..= l_max`, including the `(−1)^m` phase.
fn normalized_legendre_column(m: usize, l_max: usize, x: f64, sin_t: f64) -> Vec<f64> {
    let mut out = Vec::with_capacity(l_max + 1 - m);
    let mut pmm = (1.0 / (4.0 * PI)).sqrt();
    for k in 1..=m {
        pmm *= -((2 * k + 1) as f64 / (2 * k) as f64).sqrt() * sin_t;
    }
    out.push(pmm);
    if l_max == m {
        return out;
    }
    let mut prev = pmm;
    let mut cur = x * ((2 * m + 3) as f64).sqrt() * pmm;
    out.push(cur);
    for l in (m + 2)..=l_max {
        let (lf, mf) = (l as f64, m as f64);
        let a = ((4.0 * lf * lf - 1.0) / (lf * lf - mf * mf)).sqrt();
        let b = (((lf - 1.0) * (lf - 1.0) - mf * mf) / (4.0 * (lf - 1.0) * (lf - 1.0) - 1.0)).sqrt();
        let next = a * (x * cur - b * prev);
        prev = cur;
        cur = next;
        out.push(cur);
    }
    out
}

fn orbital(l: HalfInt) -> Result<usize> {
    match l.as_int() {
        Some(n) if n >= 0 => Ok(n as usize),
        _ => Err(Error::InvalidOrbitalLabel(l)),
    }
}

/// `Y_{l l3}(θ, φ)`; zero when `|l3| > l`.
pub fn spherical_harmonic(l: HalfInt, l3: HalfInt, theta: f64, phi: f64) -> Result<Complex64> {
    let lv = orbital(l)?;
    let m = l3.as_int().ok_or(Error::InvalidOrbitalLabel(l3))?;
    if m.unsigned_abs() as usize > lv {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let ma = m.unsigned_abs() as usize;
    let p = normalized_legendre_column(ma, lv, theta.cos(), theta.sin())[lv - ma];
    let y = Complex64::from_polar(p, ma as f64 * phi);
    Ok(if m >= 0 {
        y
    } else if ma.is_multiple_of(2) {
        y.conj()
    } else {
        -y.conj()
    })
}

/// All `Y_{l m}(θ, φ)` for `l ≤ l_max`, stored as `out[l][l - m]` (descending `m`).
pub fn spherical_harmonics_upto(l_max: usize, theta: f64, phi: f64) -> Vec<Vec<Complex64>> {
    let (x, st) = (theta.cos(), theta.sin());
    let mut out: Vec<Vec<Complex64>> = (0..=l_max).map(|l| vec![Complex64::new(0.0, 0.0); 2 * l + 1]).collect();
    for m in 0..=l_max {
        let col = normalized_legendre_column(m, l_max, x, st);
        let e = Complex64::from_polar(1.0, m as f64 * phi);
        let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
        for (k, p) in col.into_iter().enumerate() {
            let l = m + k;
            let y = e * p;
            out[l][l - m] = y;
            out[l][l + m] = sign * y.conj();
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(n: i32) -> HalfInt {
        HalfInt::from_int(n)
    }

    #[test]
    fn low_order_closed_forms() {
        let (t, p) = (0.7_f64, 1.9_f64);
        let y00 = spherical_harmonic(l(0), l(0), t, p).unwrap();
        assert!((y00.re - (1.0 / (4.0 * PI)).sqrt()).abs() < 1e-15 && y00.im == 0.0);
        let y10 = spherical_harmonic(l(1), l(0), t, p).unwrap();
        assert!((y10.re - (3.0 / (4.0 * PI)).sqrt() * t.cos()).abs() < 1e-15);
        let y11 = spherical_harmonic(l(1), l(1), t, p).unwrap();
        let expected = -(3.0 / (8.0 * PI)).sqrt() * t.sin() * Complex64::from_polar(1.0, p);
        assert!((y11 - expected).norm() < 1e-15);
        let y2m1 = spherical_harmonic(l(2), l(-1), t, p).unwrap();
        let expected = (15.0 / (8.0 * PI)).sqrt() * t.sin() * t.cos() * Complex64::from_polar(1.0, -p);
        assert!((y2m1 - expected).norm() < 1e-15);
    }

    #[test]
    fn rejects_half_odd() {
        assert!(matches!(spherical_harmonic(HalfInt::HALF, HalfInt::HALF, 0.1, 0.1), Err(Error::InvalidOrbitalLabel(_))));
        assert_eq!(spherical_harmonic(l(1), l(2), 0.1, 0.1).unwrap(), Complex64::new(0.0, 0.0));
    }

    #[test]
    fn table_matches_single_evaluation() {
        let all = spherical_harmonics_upto(6, 2.2, -0.4);
        for (lv, row) in all.iter().enumerate() {
            for (k, y) in row.iter().enumerate() {
                let m = lv as i32 - k as i32;
                let single = spherical_harmonic(l(lv as i32), l(m), 2.2, -0.4).unwrap();
                assert!((single - y).norm() < 1e-14);
            }
        }
    }
}
