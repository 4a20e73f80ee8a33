//! Pythagorean triplets: Euclid generation, perimeter lookup, the prime/LCM
//! equal-perimeter family, and leg-bounded counting.

use std::fmt;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::GarlicError;
use crate::garlic::SubgraphId;

/// Integer right triangle `(a, b, c)` with `a² + b² = c²` and `a < b < c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PythTriplet {
    a: u64,
    b: u64,
    c: u64,
}

impl PythTriplet {
    /// Validates and puts the legs in ascending order.
    pub fn new(a: u64, b: u64, c: u64) -> Result<Self, GarlicError> {
        if !is_pt(a, b, c) {
            return Err(GarlicError::NotATriplet { a, b, c });
        }
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        debug_assert!((a + b + c).is_multiple_of(2));
        Ok(PythTriplet { a, b, c })
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    pub fn c(&self) -> u64 {
        self.c
    }

    pub fn perimeter(&self) -> u64 {
        self.a + self.b + self.c
    }

    pub fn legs(&self) -> (u64, u64) {
        (self.a, self.b)
    }

    pub fn scaled(&self, k: u64) -> PythTriplet {
        PythTriplet {
            a: self.a * k,
            b: self.b * k,
            c: self.c * k,
        }
    }

    pub fn is_primitive(&self) -> bool {
        gcd(gcd(self.a, self.b), self.c) == 1
    }

    pub fn as_array(&self) -> [u64; 3] {
        [self.a, self.b, self.c]
    }
}

impl fmt::Display for PythTriplet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

impl Serialize for PythTriplet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.as_array().serialize(serializer)
    }
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn is_pt(a: u64, b: u64, c: u64) -> bool {
    if a == 0 || b == 0 || c == 0 {
        return false;
    }
    let (a, b, c) = (u128::from(a), u128::from(b), u128::from(c));
    a * a + b * b == c * c
}

/// All primitive triplets with perimeter at most `max_perimeter`, sorted by
/// `(perimeter, a)`.
///
/// Euclid's parameters `m > n ≥ 1`, coprime and of opposite parity, give
/// `(m² − n², 2mn, m² + n²)` with perimeter `2m(m + n)`.
pub fn primitive_pts(max_perimeter: u64) -> Vec<PythTriplet> {
    let mut out = Vec::new();
    let mut m = 2u64;
    while 2 * m * (m + 1) <= max_perimeter {
        for n in 1..m {
            if (m - n).is_multiple_of(2) || gcd(m, n) != 1 {
                continue;
            }
            if 2 * m * (m + n) > max_perimeter {
                break;
            }
            let (x, y, z) = (m * m - n * n, 2 * m * n, m * m + n * n);
            out.push(PythTriplet {
                a: x.min(y),
                b: x.max(y),
                c: z,
            });
        }
        m += 1;
    }
    out.sort_by_key(|t| (t.perimeter(), t.a));
    out
}

/// Every triplet (primitive or not) with `a + b + c = perimeter`, by ascending `a`.
///
/// Eliminating `c = P − a − b` from `a² + b² = c²` gives
/// `b = P(P − 2a) / (2(P − a))`, so a scan over the short leg suffices.
pub fn pts_with_perimeter(perimeter: u64) -> Vec<PythTriplet> {
    let p = u128::from(perimeter);
    let mut out = Vec::new();
    let mut a = 1u128;
    while 3 * a < p {
        let num = p * (p - 2 * a);
        let den = 2 * (p - a);
        if num.is_multiple_of(den) {
            let b = num / den;
            if b > a && a + b < p {
                let c = p - a - b;
                out.push(PythTriplet {
                    a: a as u64,
                    b: b as u64,
                    c: c as u64,
                });
            }
        }
        a += 1;
    }
    out
}

/// The first `m` odd primes.
pub fn odd_primes(m: usize) -> Vec<u64> {
    let mut primes: Vec<u64> = Vec::with_capacity(m);
    let mut k = 3u64;
    while primes.len() < m {
        if primes
            .iter()
            .take_while(|&&p| p * p <= k)
            .all(|&p| !k.is_multiple_of(p))
        {
            primes.push(k);
        }
        k += 2;
    }
    primes
}

/// `m` distinct triplets sharing one perimeter.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PerimeterFamily {
    pub perimeter: u64,
    pub triplets: Vec<PythTriplet>,
}

/// Scales the base triplets `(p² − 4, 4p, p² + 4)` over the first `m` odd
/// primes `p` to the LCM of their perimeters `2p(p + 2)`.
pub fn equal_perimeter_family(m: usize) -> Result<PerimeterFamily, GarlicError> {
    if m == 0 {
        return Err(GarlicError::Limit(
            "family size m must be at least 1".into(),
        ));
    }
    let primes = odd_primes(m);
    let mut lcm: u64 = 1;
    for &p in &primes {
        let base = 2 * p * (p + 2);
        lcm = (lcm / gcd(lcm, base))
            .checked_mul(base)
            .ok_or(GarlicError::LcmOverflow { prime: p })?;
    }
    let triplets = primes
        .iter()
        .map(|&p| {
            let base = PythTriplet::new(p * p - 4, 4 * p, p * p + 4)
                .expect("(p²−4, 4p, p²+4) is Pythagorean");
            let k = lcm / base.perimeter();
            let scaled = [base.a, base.b, base.c].map(|x| x.checked_mul(k));
            match scaled {
                [Some(a), Some(b), Some(c)] => Ok(PythTriplet { a, b, c }),
                _ => Err(GarlicError::LcmOverflow { prime: p }),
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(PerimeterFamily {
        perimeter: lcm,
        triplets,
    })
}

/// Garlic graphs `G_{2b,a}`, `G_{2a,b}` for each family triplet, then
/// `G_{0,P/2}`: `2m + 1` graphs with squared radius `P`.
pub fn garlic_family_common_radius(m: usize) -> Result<Vec<SubgraphId>, GarlicError> {
    let family = equal_perimeter_family(m)?;
    let mut out = Vec::with_capacity(2 * m + 1);
    for t in &family.triplets {
        out.push(SubgraphId::garlic(2 * t.b, t.a));
        out.push(SubgraphId::garlic(2 * t.a, t.b));
    }
    out.push(SubgraphId::garlic(0, family.perimeter / 2));
    Ok(out)
}

/// Largest leg bound accepted by [`count_pts_legs_leq`].
pub const COUNT_LIMIT: u64 = 20_000;

/// Number of triplets with both legs at most `n`, legs unordered.
pub fn count_pts_legs_leq(n: u64) -> Result<u64, GarlicError> {
    if n > COUNT_LIMIT {
        return Err(GarlicError::Limit(format!(
            "leg bound {n} exceeds {COUNT_LIMIT}"
        )));
    }
    Ok((1..=n)
        .into_par_iter()
        .map(|a| {
            (a..=n)
                .filter(|&b| {
                    let s = a * a + b * b;
                    let r = s.isqrt();
                    r * r == s
                })
                .count() as u64
        })
        .sum())
}

/// `2 ln(1 + √2) / ln 2`, the leading constant of the leg-count asymptotic.
pub fn count_estimate_constant() -> f64 {
    2.0 * (1.0 + 2f64.sqrt()).ln() / 2f64.ln()
}

/// Leading term `C · n · ln n` of the leg-bounded triplet count. Informational.
pub fn count_estimate(n: u64) -> f64 {
    let n = n as f64;
    count_estimate_constant() * n * n.ln()
}
