//! The two-element field GF(2) and its absolute value.

use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use thiserror::Error;

/// Addition table, indexed `[a][b]`.
pub const ADD_TABLE: [[u8; 2]; 2] = [[0, 1], [1, 0]];

/// Multiplication table, indexed `[a][b]`.
pub const MUL_TABLE: [[u8; 2]; 2] = [[0, 0], [0, 1]];

/// An element of GF(2), stored as a single bit.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gf2(bool);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid scalar literal `{0}` (expected `0` or `1`)")]
pub struct ScalarParseError(pub String);

impl Gf2 {
    pub const ZERO: Gf2 = Gf2(false);
    pub const ONE: Gf2 = Gf2(true);
    pub const ALL: [Gf2; 2] = [Gf2::ZERO, Gf2::ONE];

    pub const fn new(bit: bool) -> Self {
        Gf2(bit)
    }

    /// Returns `None` for anything other than 0 or 1.
    pub const fn from_u8(value: u8) -> Option<Self> {
        match value {
            0 => Some(Gf2::ZERO),
            1 => Some(Gf2::ONE),
            _ => None,
        }
    }

    pub const fn bit(self) -> bool {
        self.0
    }

    pub const fn to_u8(self) -> u8 {
        self.0 as u8
    }

    pub const fn is_zero(self) -> bool {
        !self.0
    }

    /// XOR.
    pub const fn add(self, rhs: Gf2) -> Gf2 {
        Gf2(self.0 ^ rhs.0)
    }

    /// AND.
    pub const fn mul(self, rhs: Gf2) -> Gf2 {
        Gf2(self.0 & rhs.0)
    }

    /// The absolute value `|0| = 0`, `|1| = 1`.
    ///
    /// Returned as an exact integer; lift with `f64::from` where a real is needed.
    pub const fn abs_val(self) -> u8 {
        self.0 as u8
    }
}

impl Add for Gf2 {
    type Output = Gf2;
    fn add(self, rhs: Gf2) -> Gf2 {
        Gf2::add(self, rhs)
    }
}

impl Mul for Gf2 {
    type Output = Gf2;
    fn mul(self, rhs: Gf2) -> Gf2 {
        Gf2::mul(self, rhs)
    }
}

impl From<bool> for Gf2 {
    fn from(bit: bool) -> Self {
        Gf2(bit)
    }
}

impl fmt::Display for Gf2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.0 { "1" } else { "0" })
    }
}

impl FromStr for Gf2 {
    type Err = ScalarParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "0" => Ok(Gf2::ZERO),
            "1" => Ok(Gf2::ONE),
            other => Err(ScalarParseError(other.to_string())),
        }
    }
}
