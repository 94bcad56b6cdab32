//! Exact integer vectors in the plane.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// A point of ℤ² with unbounded coordinates.
///
/// Weight vectors, characters and one-parameter subgroup exponents all live
/// here. Equality is coordinate equality.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntVec2 {
    pub x: BigInt,
    pub y: BigInt,
}

impl IntVec2 {
    pub fn new(x: impl Into<BigInt>, y: impl Into<BigInt>) -> Self {
        Self {
            x: x.into(),
            y: y.into(),
        }
    }

    pub fn zero() -> Self {
        Self::new(0, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn dot(&self, other: &IntVec2) -> BigInt {
        &self.x * &other.x + &self.y * &other.y
    }

    /// The z-component of the 3D cross product; positive when `other` is
    /// counterclockwise from `self`.
    pub fn cross(&self, other: &IntVec2) -> BigInt {
        &self.x * &other.y - &self.y * &other.x
    }

    /// Rotation by +90°.
    pub fn perp_ccw(&self) -> IntVec2 {
        IntVec2 {
            x: -&self.y,
            y: self.x.clone(),
        }
    }

    /// Rotation by −90°.
    pub fn perp_cw(&self) -> IntVec2 {
        IntVec2 {
            x: self.y.clone(),
            y: -&self.x,
        }
    }

    /// Divides out the gcd of the coordinates. The zero vector is returned
    /// unchanged.
    pub fn primitive(&self) -> IntVec2 {
        if self.is_zero() {
            return self.clone();
        }
        let g = self.x.gcd(&self.y);
        IntVec2 {
            x: &self.x / &g,
            y: &self.y / &g,
        }
    }

    /// Same direction and orientation (both nonzero).
    pub fn same_ray(&self, other: &IntVec2) -> bool {
        !self.is_zero()
            && !other.is_zero()
            && self.cross(other).is_zero()
            && self.dot(other).is_positive()
    }

    /// Largest absolute coordinate.
    pub fn max_abs(&self) -> BigInt {
        std::cmp::max(self.x.abs(), self.y.abs())
    }

    /// Lossy conversion for display and floating-point evaluation only.
    pub fn to_f64(&self) -> (f64, f64) {
        use num_traits::ToPrimitive;
        (
            self.x.to_f64().unwrap_or(f64::NAN),
            self.y.to_f64().unwrap_or(f64::NAN),
        )
    }
}

impl fmt::Debug for IntVec2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl fmt::Display for IntVec2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl From<(i64, i64)> for IntVec2 {
    fn from((x, y): (i64, i64)) -> Self {
        IntVec2::new(x, y)
    }
}

impl Add for &IntVec2 {
    type Output = IntVec2;
    fn add(self, rhs: &IntVec2) -> IntVec2 {
        IntVec2 {
            x: &self.x + &rhs.x,
            y: &self.y + &rhs.y,
        }
    }
}

impl Sub for &IntVec2 {
    type Output = IntVec2;
    fn sub(self, rhs: &IntVec2) -> IntVec2 {
        IntVec2 {
            x: &self.x - &rhs.x,
            y: &self.y - &rhs.y,
        }
    }
}

impl Neg for &IntVec2 {
    type Output = IntVec2;
    fn neg(self) -> IntVec2 {
        IntVec2 {
            x: -&self.x,
            y: -&self.y,
        }
    }
}

impl Mul<&IntVec2> for &BigInt {
    type Output = IntVec2;
    fn mul(self, rhs: &IntVec2) -> IntVec2 {
        IntVec2 {
            x: self * &rhs.x,
            y: self * &rhs.y,
        }
    }
}

/// Shorthand for building `IntVec2` from small literals.
pub fn v(x: i64, y: i64) -> IntVec2 {
    IntVec2::new(x, y)
}
