//! Exact half-integer angular-momentum labels.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

/// An angular-momentum quantum number stored as twice its value.
///
/// `HalfInt::from_twice(3)` is `3/2`; `HalfInt::from_int(1)` is `1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct HalfInt(i32);

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt(0);
    pub const HALF: HalfInt = HalfInt(1);
    pub const ONE: HalfInt = HalfInt(2);

    #[inline]
    pub const fn from_twice(twice: i32) -> Self {
        HalfInt(twice)
    }

    #[inline]
    pub const fn from_int(n: i32) -> Self {
        HalfInt(2 * n)
    }

    /// Twice the logical value.
    #[inline]
    pub const fn twice(self) -> i32 {
        self.0
    }

    #[inline]
    pub fn value(self) -> f64 {
        f64::from(self.0) / 2.0
    }

    #[inline]
    pub const fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    /// The integer value, if this is a whole number.
    pub const fn as_int(self) -> Option<i32> {
        if self.is_integer() {
            Some(self.0 / 2)
        } else {
            None
        }
    }

    pub const fn abs(self) -> Self {
        HalfInt(self.0.abs())
    }

    /// Number of components `2j + 1` of a multiplet with this spin.
    pub fn multiplicity(self) -> usize {
        debug_assert!(self.0 >= 0);
        (self.0 + 1) as usize
    }

    /// Whether `m` is a valid projection of the spin `self`: `|m| <= j` and `j - m` integral.
    pub fn admits_projection(self, m: HalfInt) -> bool {
        self.0 >= 0 && m.0.abs() <= self.0 && (self.0 - m.0) % 2 == 0
    }

    /// Projections `j, j-1, ..., -j`, in the row order used by [`crate::RepMatrix`].
    pub fn projections(self) -> impl DoubleEndedIterator<Item = HalfInt> + Clone {
        let j = self.0;
        (0..=j).map(move |k| HalfInt(j - 2 * k))
    }

    /// Row index of projection `m` in a descending `(+j .. -j)` basis.
    pub fn index_of(self, m: HalfInt) -> usize {
        debug_assert!(self.admits_projection(m));
        ((self.0 - m.0) / 2) as usize
    }

    /// Values `lo, lo + 1, ..., hi` (inclusive).
    pub fn range_inclusive(lo: HalfInt, hi: HalfInt) -> impl Iterator<Item = HalfInt> {
        let (a, b) = (lo.0, hi.0);
        (0..)
            .map(move |k| HalfInt(a + 2 * k))
            .take_while(move |x| x.0 <= b)
    }

    /// `(-1)^self` for integer values.
    pub fn parity_sign(self) -> i32 {
        debug_assert!(self.is_integer());
        if (self.0 / 2).rem_euclid(2) == 0 {
            1
        } else {
            -1
        }
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: Self) -> Self {
        HalfInt(self.0 + rhs.0)
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: Self) -> Self {
        HalfInt(self.0 - rhs.0)
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> Self {
        HalfInt(-self.0)
    }
}

impl From<i32> for HalfInt {
    fn from(n: i32) -> Self {
        HalfInt::from_int(n)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("not a half-integer: {0:?}")]
pub struct ParseHalfIntError(String);

impl FromStr for HalfInt {
    type Err = ParseHalfIntError;

    /// Accepts `"3"`, `"-1/2"`, `"1.5"` and `"+0.5"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseHalfIntError(s.to_string());
        let t = s.trim();
        if let Some((num, den)) = t.split_once('/') {
            let n: i32 = num.trim().parse().map_err(|_| err())?;
            return match den.trim() {
                "1" => Ok(HalfInt(2 * n)),
                "2" => Ok(HalfInt(n)),
                _ => Err(err()),
            };
        }
        if let Ok(n) = t.parse::<i32>() {
            return Ok(HalfInt(2 * n));
        }
        let x: f64 = t.parse().map_err(|_| err())?;
        let twice = 2.0 * x;
        if !twice.is_finite() || (twice - twice.round()).abs() > 1e-12 || twice.abs() > 1e6 {
            return Err(err());
        }
        Ok(HalfInt(twice.round() as i32))
    }
}
