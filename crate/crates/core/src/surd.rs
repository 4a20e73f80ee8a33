//! Exact values of the form `(A + √B) / 2` with nonnegative integers `A`, `B`.
//!
//! Squared spectral radii of garlic graphs and stars all have this shape.
//! Values are kept canonical: `B` is never a nonzero perfect square, so two
//! values are equal exactly when their fields are equal (`√B` is irrational
//! whenever `B` is not a perfect square).

use std::cmp::Ordering;
use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::ArithError;

/// Largest admissible canonical `A` (exclusive).
pub const A_LIMIT: u128 = 1 << 62;
/// Largest admissible canonical `B` (exclusive).
pub const B_LIMIT: u128 = 1 << 62;

/// A squared spectral radius `(A + √B) / 2` in canonical form.
///
/// Canonical values satisfy `A < 2^62`, `B < 2^62` and `B` is zero or not a
/// perfect square. Within that envelope every product formed by [`Ord`] fits in
/// a `u128`, so comparison never fails.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RhoSquared {
    a: u128,
    b: u128,
}

impl RhoSquared {
    pub const ZERO: RhoSquared = RhoSquared { a: 0, b: 0 };

    /// Builds and canonicalizes `(a + √b) / 2`.
    ///
    /// A perfect-square `b = s²` is folded into `a`, giving `(a + s, 0)`.
    pub fn new(a: u128, b: u128) -> Result<Self, ArithError> {
        let (a, b) = match exact_sqrt(b) {
            Some(s) => (a.checked_add(s).ok_or(ArithError::Overflow { a, b })?, 0),
            None => (a, b),
        };
        if a >= A_LIMIT || b >= B_LIMIT {
            return Err(ArithError::Overflow { a, b });
        }
        Ok(RhoSquared { a, b })
    }

    /// `n` as a squared radius, i.e. `(2n + √0) / 2`.
    pub fn from_integer(n: u64) -> Self {
        RhoSquared::new(2 * u128::from(n), 0).expect("2·u64 is inside the envelope")
    }

    pub fn a(&self) -> u128 {
        self.a
    }

    pub fn b(&self) -> u128 {
        self.b
    }

    /// True when the value is an integer or half-integer (no irrational part).
    pub fn is_rational(&self) -> bool {
        self.b == 0
    }

    /// `(A + √B) / 2` in double precision.
    pub fn to_f64(&self) -> f64 {
        (self.a as f64 + (self.b as f64).sqrt()) / 2.0
    }

    /// Spectral radius `√((A + √B) / 2)` in double precision.
    pub fn sqrt_f64(&self) -> f64 {
        self.to_f64().sqrt()
    }
}

/// `√n` when `n` is a perfect square.
pub fn exact_sqrt(n: u128) -> Option<u128> {
    let s = n.isqrt();
    (s * s == n).then_some(s)
}

impl Ord for RhoSquared {
    fn cmp(&self, other: &Self) -> Ordering {
        cmp_surd(self.a, self.b, other.a, other.b)
    }
}

impl PartialOrd for RhoSquared {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sign of `(a1 + √b1) − (a2 + √b2)` without floating point.
fn cmp_surd(a1: u128, b1: u128, a2: u128, b2: u128) -> Ordering {
    if b1 == b2 {
        return a1.cmp(&a2);
    }
    // Each side lies in [a + ⌊√b⌋, a + ⌊√b⌋ + 1); disjoint ranges decide at once.
    let (s1, s2) = (b1.isqrt(), b2.isqrt());
    let (lo1, lo2) = (a1 + s1, a2 + s2);
    if lo1 > lo2 + 1 {
        return Ordering::Greater;
    }
    if lo2 > lo1 + 1 {
        return Ordering::Less;
    }
    let root_sign = b1.cmp(&b2);
    let int_sign = a1.cmp(&a2);
    if int_sign == Ordering::Equal || int_sign == root_sign {
        return root_sign;
    }
    if int_sign == Ordering::Less {
        return cmp_surd(a2, b2, a1, b1).reverse();
    }
    // a1 > a2 and b1 < b2: compare u + √b1 against √b2 with u = a1 − a2 > 0.
    // Squaring: u² + b1 + 2u√b1 against b2, i.e. 2u√b1 against e = b2 − b1 − u².
    // Here |u| ≤ |s2 − s1| + 1 < 2^31 + 1, so 4u²b1 < 2^127.
    let u = a1 - a2;
    let u2 = u * u;
    let rhs = b2 - b1;
    if u2 >= rhs {
        // e ≤ 0 ≤ 2u√b1, with equality only when both vanish.
        return if u2 == rhs && b1 == 0 {
            Ordering::Equal
        } else {
            Ordering::Greater
        };
    }
    let e = rhs - u2;
    (4 * u2 * b1).cmp(&(e * e))
}

impl fmt::Display for RhoSquared {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b == 0 {
            if self.a.is_multiple_of(2) {
                write!(f, "{}", self.a / 2)
            } else {
                write!(f, "{}/2", self.a)
            }
        } else {
            write!(f, "({}+√{})/2", self.a, self.b)
        }
    }
}

impl Serialize for RhoSquared {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("RhoSquared", 3)?;
        s.serialize_field("A", &(self.a as u64))?;
        s.serialize_field("B", &(self.b as u64))?;
        s.serialize_field("value", &self.to_f64())?;
        s.end()
    }
}
