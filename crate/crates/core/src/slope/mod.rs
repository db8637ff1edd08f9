//! Exact slopes on a torus, the determinant-one matrix action on them, and
//! negative continued fractions with the solid-torus tight count.
//!
//! A slope `p/q` is identified with the column vector `(q, p)ᵀ` in a fixed
//! basis of `H_1(T²)`; see [`Mat2::act`] for why this orientation of the
//! vector is forced.

mod cf;
mod matrix;

pub use cf::{cf_eval, honda_count, neg_cf, NegCF};
pub use matrix::Mat2;

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// An extended rational number `p/q`, with `∞ = 1/0`.
///
/// Always stored in canonical form: `gcd(|p|, |q|) = 1`, `q ≥ 0`, and the
/// only slope with `q = 0` is `1/0`. Two slopes are equal iff their raw
/// vectors are projectively equivalent, so the derived `Eq` is exact.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Slope {
    num: BigInt,
    den: BigInt,
}

/// Canonical representative of the raw pair `(raw_num, raw_den)`.
pub fn canonical(raw_num: impl Into<BigInt>, raw_den: impl Into<BigInt>) -> Result<Slope> {
    Slope::new(raw_num, raw_den)
}

/// Orientation reversal of the ambient torus: `s ↦ -s`, `∞ ↦ ∞`.
pub fn reverse_orientation(s: &Slope) -> Slope {
    -s
}

impl Slope {
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let (mut num, mut den) = (num.into(), den.into());
        if num.is_zero() && den.is_zero() {
            return Err(Error::InvalidSlope("0/0".into()));
        }
        if den.is_zero() {
            return Ok(Self::infinity());
        }
        let g = num.gcd(&den);
        num /= &g;
        den /= &g;
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        Ok(Slope { num, den })
    }

    pub fn infinity() -> Self {
        Slope {
            num: BigInt::one(),
            den: BigInt::zero(),
        }
    }

    pub fn zero() -> Self {
        Self::integer(0)
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        Slope {
            num: n.into(),
            den: BigInt::one(),
        }
    }

    /// Slope of the column vector `(q, p)ᵀ`.
    pub fn from_vector(q: impl Into<BigInt>, p: impl Into<BigInt>) -> Result<Self> {
        Self::new(p, q)
    }

    /// The canonical column vector `(q, p)ᵀ`.
    pub fn vector(&self) -> (BigInt, BigInt) {
        (self.den.clone(), self.num.clone())
    }

    pub fn numer(&self) -> &BigInt {
        &self.num
    }

    pub fn denom(&self) -> &BigInt {
        &self.den
    }

    pub fn is_infinite(&self) -> bool {
        self.den.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.den.is_one()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// `1/s`, with `1/0 = ∞` and `1/∞ = 0`.
    pub fn recip(&self) -> Slope {
        if self.num.is_negative() {
            Slope {
                num: -&self.den,
                den: -&self.num,
            }
        } else if self.num.is_zero() {
            Slope::infinity()
        } else {
            Slope {
                num: self.den.clone(),
                den: self.num.clone(),
            }
        }
    }

    /// `⌊s⌋` for finite slopes.
    pub fn floor(&self) -> Option<BigInt> {
        (!self.is_infinite()).then(|| self.num.div_floor(&self.den))
    }

    /// `s - ⌊s⌋ ∈ [0, 1)` for finite slopes.
    pub fn fract(&self) -> Option<Slope> {
        let f = self.floor()?;
        Some(Slope {
            num: &self.num - f * &self.den,
            den: self.den.clone(),
        })
    }

    pub fn checked_add(&self, other: &Slope) -> Option<Slope> {
        if self.is_infinite() || other.is_infinite() {
            return None;
        }
        Slope::new(
            &self.num * &other.den + &other.num * &self.den,
            &self.den * &other.den,
        )
        .ok()
    }

    pub fn checked_sub(&self, other: &Slope) -> Option<Slope> {
        self.checked_add(&-other)
    }

    pub fn add_integer(&self, n: &BigInt) -> Slope {
        if self.is_infinite() {
            return self.clone();
        }
        Slope {
            num: &self.num + n * &self.den,
            den: self.den.clone(),
        }
    }
}

impl std::ops::Neg for &Slope {
    type Output = Slope;

    fn neg(self) -> Slope {
        if self.is_infinite() {
            return self.clone();
        }
        Slope {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl std::ops::Neg for Slope {
    type Output = Slope;

    fn neg(self) -> Slope {
        -&self
    }
}

/// Finite slopes are totally ordered; `∞` is only comparable to itself.
impl PartialOrd for Slope {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match (self.is_infinite(), other.is_infinite()) {
            (true, true) => Some(Ordering::Equal),
            (false, false) => Some((&self.num * &other.den).cmp(&(&other.num * &self.den))),
            _ => None,
        }
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinite() {
            write!(f, "inf")
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl FromStr for Slope {
    type Err = Error;

    /// Accepts `p/q` (sign on the numerator only), a bare integer, or `inf`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("inf") || s == "∞" {
            return Ok(Slope::infinity());
        }
        let bad = || Error::Parse(format!("not a slope literal: {s:?}"));
        match s.split_once('/') {
            Some((p, q)) => {
                let p: BigInt = p.trim().parse().map_err(|_| bad())?;
                let q = q.trim();
                if q.starts_with('-') || q.starts_with('+') {
                    return Err(bad());
                }
                let q: BigInt = q.parse().map_err(|_| bad())?;
                Slope::new(p, q)
            }
            None => Ok(Slope::integer(s.parse::<BigInt>().map_err(|_| bad())?)),
        }
    }
}

impl Serialize for Slope {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
