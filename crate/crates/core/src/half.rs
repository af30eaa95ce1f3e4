//! Exact half-integer quantities.
//!
//! Edge measures and volumes are integer edge counts with boundary-boundary
//! edges weighted ½, so they are stored as a count of halves.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Sub};

use num_rational::Ratio;

/// A value `k / 2` for integer `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Halves(i64);

impl Halves {
    pub const ZERO: Halves = Halves(0);

    pub const fn from_halves(k: i64) -> Self {
        Halves(k)
    }

    pub const fn from_int(n: i64) -> Self {
        Halves(2 * n)
    }

    /// The number of halves, i.e. twice the value.
    pub const fn halves(self) -> i64 {
        self.0
    }

    pub fn to_f64(self) -> f64 {
        self.0 as f64 / 2.0
    }

    pub fn to_ratio(self) -> Ratio<i64> {
        Ratio::new(self.0, 2)
    }

    pub fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    /// Exact quotient `self / other`. Panics if `other` is zero.
    pub fn ratio(self, other: Halves) -> Ratio<i64> {
        Ratio::new(self.0, other.0)
    }
}

impl Add for Halves {
    type Output = Halves;
    fn add(self, rhs: Halves) -> Halves {
        Halves(self.0 + rhs.0)
    }
}

impl AddAssign for Halves {
    fn add_assign(&mut self, rhs: Halves) {
        self.0 += rhs.0;
    }
}

impl Sub for Halves {
    type Output = Halves;
    fn sub(self, rhs: Halves) -> Halves {
        Halves(self.0 - rhs.0)
    }
}

impl Sum for Halves {
    fn sum<I: Iterator<Item = Halves>>(iter: I) -> Halves {
        Halves(iter.map(|h| h.0).sum())
    }
}

impl fmt::Display for Halves {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}
