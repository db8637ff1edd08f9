//! Slope bookkeeping for the convex-surface upper bound on the family
//! obtained by surgery on the first singular fiber.
//!
//! Fibers are ordered `(-1/3, -m/(6m+1), (3m+n-2)/(6m+2n-5))`, glued by
//! [`a1`], [`a2`] and [`a3`]. Slopes on `-∂(M∖Vᵢ)` are "outside", slopes on
//! `∂Vᵢ` "inside".

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::report::big;
use crate::slope::{canonical, reverse_orientation, Mat2, Slope};

pub fn a1() -> Mat2 {
    Mat2::new(3, -1, 1, 0).expect("det 1")
}

pub fn a2(m: u64) -> Mat2 {
    let m = BigInt::from(m);
    Mat2::new(6 * &m + 1, 6, m, 1).expect("det 1")
}

pub fn a3(m: u64, n: u64) -> Mat2 {
    let (m, n) = (BigInt::from(m), BigInt::from(n));
    Mat2::new(6 * &m + 2 * &n - 5, 2, -3 * &m - &n + 2, -1).expect("det 1")
}

pub fn outside_slope(a: &Mat2, inside: &Slope) -> Slope {
    a.act(inside)
}

pub fn inside_slope(a: &Mat2, outside: &Slope) -> Slope {
    a.invert().act(outside)
}

/// Twisting numbers at which the two outside slopes `n₁/(3n₁-1)` and
/// `(mn₂+1)/((6m+1)n₂+6)` share the denominator `t`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct CommonTwist {
    pub m: u64,
    pub k: u64,
    #[serde(serialize_with = "big")]
    pub n1: BigInt,
    #[serde(serialize_with = "big")]
    pub n2: BigInt,
    #[serde(serialize_with = "big")]
    pub t: BigInt,
}

pub fn solve_common_twist(m: u64, k: u64) -> Result<CommonTwist> {
    if m == 0 {
        return Err(Error::domain("solve_common_twist", "m must be >= 1"));
    }
    let (mb, kb) = (BigInt::from(m), BigInt::from(k));
    let six_m1: BigInt = 6 * &mb + 1;
    let n1: BigInt = -(&six_m1 * &kb) - (2 * &mb - 2);
    let n2: BigInt = -3 * &kb - 1;
    let t: BigInt = -3 * &six_m1 * &kb - (6 * &mb - 5);
    let lhs: BigInt = 3 * &n1 - 1;
    let rhs: BigInt = &six_m1 * &n2 + 6;
    if lhs != t || rhs != t {
        return Err(Error::Consistency(format!(
            "common twist at m={m}, k={k}: 3n1-1={lhs}, (6m+1)n2+6={rhs}, t={t}"
        )));
    }
    Ok(CommonTwist { m, k, n1, n2, t })
}

/// Edge rounding of two tori whose slopes `p1/t` and `p2/t` share the
/// twisting denominator `t`; the result lives on the rounded boundary.
pub fn edge_round(p1: &BigInt, p2: &BigInt, t: &BigInt) -> Result<Slope> {
    if t.is_zero() {
        return Err(Error::domain("edge_round", "t must be nonzero"));
    }
    canonical(p1 + p2 - 1, t.clone())
}

/// Carries a slope from the rounded boundary to `∂V₃`.
///
/// The rounded torus is oriented opposite to `-∂(M∖V₃)`, so the slope is
/// negated before `A₃⁻¹` is applied.
pub fn rounded_to_v3(m: u64, n: u64, s_round: &Slope) -> Slope {
    inside_slope(&a3(m, n), &reverse_orientation(s_round))
}
