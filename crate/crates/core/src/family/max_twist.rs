//! Exclusion of twisting numbers below `-6m+5` on the first-fiber family.
//!
//! For each `k` the common-twist configuration is pushed through edge
//! rounding and `A₃⁻¹`; a contradiction is recorded when the resulting torus
//! carries a Legendrian regular fiber with twisting larger than `t`.

use num_bigint::BigInt;
use num_traits::Signed;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::report::big;
use crate::slope::{reverse_orientation, Slope};
use crate::transport::{a3, edge_round, outside_slope, rounded_to_v3, solve_common_twist};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Admissible,
    Contradiction,
    Inconclusive,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct MaxTwistRow {
    pub k: u64,
    #[serde(serialize_with = "big")]
    pub t: BigInt,
    /// Slope on the rounded boundary.
    pub rounded: Slope,
    pub slope_v3: Slope,
    /// Slope on `-∂(M∖V₃)` that yields the twisting bound.
    pub witness: Option<Slope>,
    #[serde(serialize_with = "big_opt")]
    pub bound: Option<BigInt>,
    pub verdict: Verdict,
    pub note: String,
}

fn big_opt<S: serde::Serializer>(v: &Option<BigInt>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(x) => big(x, s),
        None => s.serialize_none(),
    }
}

/// A convex torus of outside slope `p/q` contains a Legendrian regular
/// fiber twisting `-|q|`.
fn twisting_bound(outside: &Slope) -> BigInt {
    -outside.denom().abs()
}

pub fn max_twist_report(m: u64, n: u64, k_max: u64) -> Result<Vec<MaxTwistRow>> {
    if m == 0 || n == 0 {
        return Err(Error::domain(
            "max_twist_report",
            format!("need m, n >= 1, got m={m} n={n}"),
        ));
    }
    let mb = BigInt::from(m);
    (0..=k_max)
        .map(|k| {
            let ct = solve_common_twist(m, k)?;
            let rounded = edge_round(&ct.n1, &(&mb * &ct.n2 + 1), &ct.t)?;
            let slope_v3 = rounded_to_v3(m, n, &rounded);
            let t = ct.t;
            let row = |witness: Option<Slope>, verdict, note: String| {
                let bound = witness.as_ref().map(twisting_bound);
                MaxTwistRow {
                    k,
                    t: t.clone(),
                    rounded: rounded.clone(),
                    slope_v3: slope_v3.clone(),
                    witness,
                    bound,
                    verdict,
                    note,
                }
            };
            if k == 0 {
                return Ok(row(None, Verdict::Admissible, format!("admissible, tw = {t}")));
            }
            if k == 1 {
                let outside = reverse_orientation(&rounded);
                let bound = twisting_bound(&outside);
                if slope_v3.is_infinite() && bound > t {
                    let note = format!(
                        "contradiction: slope inf on dV3, {outside} on -d(M-V3) implies twisting >= {bound} > {t}"
                    );
                    return Ok(row(Some(outside), Verdict::Contradiction, note));
                }
                let note = format!("inconclusive: slope {slope_v3} on dV3, bound {bound} vs t = {t}");
                return Ok(row(Some(outside), Verdict::Inconclusive, note));
            }
            if slope_v3.is_infinite() || slope_v3 >= Slope::integer(-1) {
                let note = format!("inconclusive: no slope -1 torus below {slope_v3}");
                return Ok(row(None, Verdict::Inconclusive, note));
            }
            let comparison = outside_slope(&a3(m, n), &Slope::integer(-1));
            let bound = twisting_bound(&comparison);
            let below_12 = slope_v3 < Slope::integer(-12);
            let rel = if below_12 { "<" } else { ">=" };
            if bound > t {
                let note = format!(
                    "contradiction: s_dV3 = {slope_v3} {rel} -12 and the -1-slope torus ({comparison} outside) gives twisting >= {bound} > {t}"
                );
                Ok(row(Some(comparison), Verdict::Contradiction, note))
            } else {
                let note = format!(
                    "inconclusive: s_dV3 = {slope_v3}; -1-slope torus ({comparison} outside) gives only twisting >= {bound} <= {t}"
                );
                Ok(row(Some(comparison), Verdict::Inconclusive, note))
            }
        })
        .collect()
}
