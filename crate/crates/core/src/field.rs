//! Arithmetic in the five-element field F₅.
//!
//! Elements are stored in the balanced residue set `{-2, -1, 0, 1, 2}` and are
//! normalized after every operation, so printed values always use that set.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// The field characteristic.
pub const MODULUS: i8 = 5;

/// An element of F₅ in balanced representation.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct F5(i8);

impl F5 {
    pub const ZERO: F5 = F5(0);
    pub const ONE: F5 = F5(1);
    pub const TWO: F5 = F5(2);
    pub const MINUS_ONE: F5 = F5(-1);
    pub const MINUS_TWO: F5 = F5(-2);

    /// Every element, ordered `-2 < -1 < 0 < 1 < 2`.
    pub const ALL: [F5; 5] = [F5(-2), F5(-1), F5(0), F5(1), F5(2)];

    /// The nonzero elements, i.e. the projective scalars.
    pub const UNITS: [F5; 4] = [F5(-2), F5(-1), F5(1), F5(2)];

    /// Reduces an arbitrary integer into the balanced residue set.
    pub const fn new(value: i64) -> F5 {
        let r = value.rem_euclid(MODULUS as i64) as i8;
        F5(if r > 2 { r - MODULUS } else { r })
    }

    /// The balanced integer value in `-2..=2`.
    pub const fn value(self) -> i8 {
        self.0
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Multiplicative inverse.
    pub fn inv(self) -> Result<F5> {
        // 1⁻¹ = 1, 2⁻¹ = -2 (2·3 = 6 ≡ 1), and inversion commutes with negation.
        match self.0 {
            0 => Err(Error::ZeroInverse),
            1 => Ok(F5(1)),
            -1 => Ok(F5(-1)),
            2 => Ok(F5(-2)),
            -2 => Ok(F5(2)),
            _ => unreachable!("F5 holds a non-normalized value"),
        }
    }

    pub fn square(self) -> F5 {
        self * self
    }

    /// The absolute value used by the probability rule: `0` for zero, `1` otherwise.
    pub const fn abs_norm(self) -> u32 {
        if self.0 == 0 {
            0
        } else {
            1
        }
    }
}

/// The two square roots of `-1`, returned as `(2, -2)`.
pub const fn sqrt_minus_one() -> (F5, F5) {
    (F5::TWO, F5::MINUS_TWO)
}

impl From<i8> for F5 {
    fn from(v: i8) -> F5 {
        F5::new(v as i64)
    }
}

impl From<i32> for F5 {
    fn from(v: i32) -> F5 {
        F5::new(v as i64)
    }
}

impl Add for F5 {
    type Output = F5;
    fn add(self, rhs: F5) -> F5 {
        F5::new(self.0 as i64 + rhs.0 as i64)
    }
}

impl Sub for F5 {
    type Output = F5;
    fn sub(self, rhs: F5) -> F5 {
        F5::new(self.0 as i64 - rhs.0 as i64)
    }
}

impl Mul for F5 {
    type Output = F5;
    fn mul(self, rhs: F5) -> F5 {
        F5::new(self.0 as i64 * rhs.0 as i64)
    }
}

impl Neg for F5 {
    type Output = F5;
    fn neg(self) -> F5 {
        F5::new(-(self.0 as i64))
    }
}

impl AddAssign for F5 {
    fn add_assign(&mut self, rhs: F5) {
        *self = *self + rhs;
    }
}

impl SubAssign for F5 {
    fn sub_assign(&mut self, rhs: F5) {
        *self = *self - rhs;
    }
}

impl MulAssign for F5 {
    fn mul_assign(&mut self, rhs: F5) {
        *self = *self * rhs;
    }
}

impl Sum for F5 {
    fn sum<I: Iterator<Item = F5>>(iter: I) -> F5 {
        iter.fold(F5::ZERO, Add::add)
    }
}

impl fmt::Display for F5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for F5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Accepts any integer literal and reduces it, so `3` and `-2` parse to the same element.
impl FromStr for F5 {
    type Err = Error;
    fn from_str(s: &str) -> Result<F5> {
        s.trim()
            .parse::<i64>()
            .map(F5::new)
            .map_err(|_| Error::Parse(format!("not a field element: {s:?}")))
    }
}

impl Serialize for F5 {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_i8(self.0)
    }
}
