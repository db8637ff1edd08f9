//! End-to-end counts for the surgery families: the lower-bound triangle of
//! Legendrian surgeries, the convex-surface upper bound, the closed forms,
//! and the identification of the surgered manifold.
//!
//! Fiber families are strategies behind [`FiberFamily`], looked up by name
//! in a [`FamilyRegistry`].

mod fibers;
mod max_twist;
mod strategy;
mod table;

pub use fibers::{FirstFiber, SecondFiber};
pub use max_twist::{max_twist_report, MaxTwistRow, Verdict};
pub use strategy::{FamilyRegistry, FiberFamily};
pub use table::{render_count_text, render_triangle_text, render_upper_text};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::report::big;
use crate::seifert::{is_equivalent, slam_dunk, FiberedDecomposition, Framing, SeifertInvariants};
use crate::slope::{honda_count, Slope};
use crate::transport::{edge_round, inside_slope};

/// `M_m = -Σ(2,3,6m+1) = M(0; 1/2, -1/3, -m/(6m+1))`.
pub fn base_manifold(m: u64) -> SeifertInvariants {
    let mb = BigInt::from(m);
    SeifertInvariants::new(
        0,
        vec![
            Slope::new(1, 2).expect("1/2"),
            Slope::new(-1, 3).expect("-1/3"),
            Slope::new(-mb.clone(), 6 * mb + 1).expect("nonzero"),
        ],
    )
    .expect("finite ratios")
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct FamilyParams {
    pub m: u64,
    pub n: u64,
    pub fiber: String,
}

impl FamilyParams {
    pub fn new(family: &dyn FiberFamily, m: u64, n: u64) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::domain(
                "family",
                format!("need m >= 1 and n >= 1, got m={m} n={n}"),
            ));
        }
        Ok(FamilyParams {
            m,
            n,
            fiber: family.name().to_string(),
        })
    }
}

/// One row of the triangle of contact structures on `M_m`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct TriangleRow {
    pub a: u64,
    #[serde(serialize_with = "big")]
    pub structures: BigInt,
    #[serde(serialize_with = "big")]
    pub reg_twist: BigInt,
    #[serde(serialize_with = "big")]
    pub fiber_twist: BigInt,
    #[serde(serialize_with = "big")]
    pub contact_coeff: BigInt,
    #[serde(serialize_with = "big")]
    pub choices: BigInt,
}

impl TriangleRow {
    /// `ξ_a^1 … ξ_a^a`.
    pub fn labels(&self) -> Vec<String> {
        (1..=self.a)
            .map(|j| format!("ξ_{}^{}", self.a, j))
            .collect()
    }
}

/// One twisting level of the upper-bound argument.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct UpperRow {
    pub l: u64,
    #[serde(serialize_with = "big")]
    pub tw: BigInt,
    #[serde(serialize_with = "big")]
    pub n1: BigInt,
    pub slope_v3: Slope,
    pub slope_v2: Slope,
    #[serde(serialize_with = "big")]
    pub count: BigInt,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct UpperBound {
    pub rows: Vec<UpperRow>,
    #[serde(serialize_with = "big")]
    pub total: BigInt,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct CountReport {
    pub params: FamilyParams,
    /// `1 ≤ n < n_limit(m)`; counts outside the range are still computed.
    pub hypothesis_ok: bool,
    pub rows_lower: Vec<TriangleRow>,
    pub rows_upper: Vec<UpperRow>,
    #[serde(serialize_with = "big")]
    pub lower_total: BigInt,
    #[serde(serialize_with = "big")]
    pub upper_total: BigInt,
    #[serde(serialize_with = "big")]
    pub closed_form: BigInt,
    pub agrees: bool,
}

/// Flat summary line for CSV output.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct CountSummary {
    pub m: u64,
    pub n: u64,
    pub fiber: String,
    pub hypothesis_ok: bool,
    #[serde(serialize_with = "big")]
    pub lower: BigInt,
    #[serde(serialize_with = "big")]
    pub upper: BigInt,
    #[serde(serialize_with = "big")]
    pub closed: BigInt,
    pub agrees: bool,
}

impl CountReport {
    pub fn summary(&self) -> CountSummary {
        CountSummary {
            m: self.params.m,
            n: self.params.n,
            fiber: self.params.fiber.clone(),
            hypothesis_ok: self.hypothesis_ok,
            lower: self.lower_total.clone(),
            upper: self.upper_total.clone(),
            closed: self.closed_form.clone(),
            agrees: self.agrees,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct TargetManifold {
    /// Slam-dunk presentation before normalization.
    pub surgery: SeifertInvariants,
    pub theorem: SeifertInvariants,
    pub equivalent: bool,
}

pub fn hypothesis_ok(family: &dyn FiberFamily, m: u64, n: u64) -> bool {
    m >= 1 && n >= 1 && n < family.n_limit(m)
}

fn exact_div(num: &BigInt, den: &BigInt, what: &str) -> Result<BigInt> {
    let (q, r) = num.div_rem(den);
    if !r.is_zero() {
        return Err(Error::Consistency(format!(
            "{what}: {num} is not divisible by {den}"
        )));
    }
    Ok(q)
}

/// Twisting of the surgered fiber when the regular fiber twists `reg`,
/// read off the fiber's attaching matrix: `α·tw + x = reg`.
fn fiber_twist(family: &dyn FiberFamily, reg: &BigInt) -> Result<BigInt> {
    let frame = family.base_frame();
    let (alpha, _) = frame.first_column();
    let (x, _) = frame.second_column();
    exact_div(&(reg - x), &alpha, "fiber twisting number")
}

pub fn triangle(family: &dyn FiberFamily, m: u64, n: u64) -> Result<Vec<TriangleRow>> {
    FamilyParams::new(family, m, n)?;
    let framing = family.smooth_framing(m, n);
    let rows = (1..=m)
        .map(|a| {
            let reg_twist = -6 * BigInt::from(m - a) - 1;
            let fiber_twist = fiber_twist(family, &reg_twist)?;
            let contact_coeff = &framing - &fiber_twist;
            if &contact_coeff + &fiber_twist != framing || contact_coeff >= BigInt::from(0) {
                return Err(Error::Consistency(format!(
                    "row {a}: contact coefficient {contact_coeff} is not a Legendrian-realizable surgery"
                )));
            }
            Ok(TriangleRow {
                a,
                structures: BigInt::from(a),
                reg_twist,
                fiber_twist,
                choices: -&contact_coeff,
                contact_coeff,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(rows)
}

pub fn lower_bound(family: &dyn FiberFamily, m: u64, n: u64) -> Result<BigInt> {
    Ok(triangle(family, m, n)?
        .iter()
        .map(|r| &r.structures * &r.choices)
        .sum())
}

/// One twisting level `l` of the upper bound.
///
/// `V₂` starts as a standard neighbourhood of slope `-1` and each bypass
/// adds a longitude, so after `l` steps its inside slope is `-(l+1)`; the
/// outside vector `A₂·(-1, l+1)ᵀ = (t, p₂)ᵀ` fixes the regular-fiber
/// twisting `t`. `V₁` is the standard neighbourhood whose outside
/// denominator is the same `t`. Rounding the annulus between them gives
/// the slope that `V₃` sees.
fn upper_row(decomp: &FiberedDecomposition, l: u64) -> Result<UpperRow> {
    let [a1, a2, a3] = decomp.attaching();

    let (t, p2) = a2.apply(&BigInt::from(-1), &BigInt::from(l + 1));
    if !t.is_negative() {
        return Err(Error::Consistency(format!(
            "row {l}: twisting {t} is not negative"
        )));
    }

    let (alpha1, _) = a1.first_column();
    let (x1, _) = a1.second_column();
    let n1 = exact_div(&(&t - &x1), &alpha1, "V1 twisting number")?;
    let (t1, p1) = a1.apply(&n1, &BigInt::from(1));
    debug_assert_eq!(t1, t);

    let rounded = edge_round(&p1, &p2, &t)?;
    let slope_v3 = inside_slope(a3, &-&rounded);
    let s2 = Slope::from_vector(t.clone(), p2)?;
    let slope_v2 = inside_slope(a2, &s2);

    let count_of = |s: &Slope, v: &str| {
        honda_count(s).map_err(|_| {
            Error::Consistency(format!(
                "row {l}: slope {s} on {v} is outside the counted range"
            ))
        })
    };
    let count = count_of(&slope_v3, "V3")? * count_of(&slope_v2, "V2")?;
    Ok(UpperRow {
        l,
        tw: t,
        n1,
        slope_v3,
        slope_v2,
        count,
    })
}

pub fn upper_bound(family: &dyn FiberFamily, m: u64, n: u64) -> Result<UpperBound> {
    FamilyParams::new(family, m, n)?;
    let decomp = family.upper_decomposition(m, n)?;
    let rows = (0..m)
        .map(|l| upper_row(&decomp, l))
        .collect::<Result<Vec<_>>>()?;
    let total = rows.iter().map(|r| &r.count).sum();
    Ok(UpperBound { rows, total })
}

pub fn closed_form(family: &dyn FiberFamily, m: u64, n: u64) -> Result<BigInt> {
    FamilyParams::new(family, m, n)?;
    let (num, div) = family.closed_form_fraction(m, n);
    exact_div(&num, &BigInt::from(div), "closed form")
}

pub fn target_manifold(family: &dyn FiberFamily, m: u64, n: u64) -> Result<TargetManifold> {
    FamilyParams::new(family, m, n)?;
    let framing = Framing::Finite(family.smooth_framing(m, n));
    let surgery = slam_dunk(&base_manifold(m), family.surgered_leg(), &framing)?;
    let theorem = family.theorem_invariants(m, n);
    let equivalent = is_equivalent(&surgery, &theorem);
    Ok(TargetManifold {
        surgery,
        theorem,
        equivalent,
    })
}

pub fn count_report(family: &dyn FiberFamily, m: u64, n: u64) -> Result<CountReport> {
    let params = FamilyParams::new(family, m, n)?;
    let rows_lower = triangle(family, m, n)?;
    let lower_total = rows_lower.iter().map(|r| &r.structures * &r.choices).sum();
    let upper = upper_bound(family, m, n)?;
    let closed_form = closed_form(family, m, n)?;
    let agrees = lower_total == upper.total && upper.total == closed_form;
    Ok(CountReport {
        params,
        hypothesis_ok: hypothesis_ok(family, m, n),
        rows_lower,
        rows_upper: upper.rows,
        lower_total,
        upper_total: upper.total,
        closed_form,
        agrees,
    })
}

/// [`count_report`] over many `(m, n)` pairs in parallel; results keep the
/// input order.
pub fn sweep(family: &dyn FiberFamily, params: &[(u64, u64)]) -> Vec<Result<CountReport>> {
    params
        .par_iter()
        .map(|&(m, n)| count_report(family, m, n))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(x: i64) -> BigInt {
        BigInt::from(x)
    }

    fn sl(p: i64, q: i64) -> Slope {
        Slope::new(p, q).unwrap()
    }

    #[test]
    fn triangle_examples() {
        let rows = triangle(&FirstFiber, 2, 1).unwrap();
        let r = &rows[1];
        assert_eq!(r.a, 2);
        assert_eq!(
            (&r.reg_twist, &r.fiber_twist, &r.contact_coeff, &r.choices),
            (&b(-1), &b(-1), &b(-4), &b(4))
        );

        let r = &triangle(&FirstFiber, 1, 1).unwrap()[0];
        assert_eq!(
            (&r.reg_twist, &r.fiber_twist, &r.contact_coeff, &r.choices),
            (&b(-1), &b(-1), &b(-1), &b(1))
        );

        let r = &triangle(&SecondFiber, 1, 1).unwrap()[0];
        assert_eq!(
            (&r.reg_twist, &r.fiber_twist, &r.contact_coeff, &r.choices),
            (&b(-1), &b(0), &b(-1), &b(1))
        );
    }

    #[test]
    fn triangle_closed_patterns() {
        for m in 1..=8u64 {
            for n in [1u64, 2, 9] {
                for (a, r) in (1..=m).zip(triangle(&FirstFiber, m, n).unwrap()) {
                    let (mi, ni, ai) = (m as i64, n as i64, a as i64);
                    assert_eq!(r.fiber_twist, b(-3 * (mi - ai) - 1));
                    assert_eq!(r.contact_coeff, b(-3 * ai + 3 - ni));
                    assert_eq!(r.labels().len(), a as usize);
                }
                for (a, r) in (1..=m).zip(triangle(&SecondFiber, m, n).unwrap()) {
                    let (mi, ni, ai) = (m as i64, n as i64, a as i64);
                    assert_eq!(r.fiber_twist, b(-2 * (mi - ai)));
                    assert_eq!(r.contact_coeff, b(-ni - 2 * ai + 2));
                }
            }
        }
    }

    #[test]
    fn lower_bound_examples() {
        assert_eq!(lower_bound(&FirstFiber, 1, 1).unwrap(), b(1));
        assert_eq!(lower_bound(&FirstFiber, 2, 1).unwrap(), b(9));
        assert_eq!(lower_bound(&SecondFiber, 1, 1).unwrap(), b(1));
    }

    #[test]
    fn upper_bound_examples() {
        let u = upper_bound(&FirstFiber, 1, 1).unwrap();
        assert_eq!(u.rows.len(), 1);
        let r = &u.rows[0];
        assert_eq!(
            (&r.tw, &r.n1, &r.slope_v3, &r.slope_v2, &r.count),
            (&b(-1), &b(0), &sl(-1, 1), &sl(-1, 1), &b(1))
        );
        assert_eq!(u.total, b(1));

        let u = upper_bound(&FirstFiber, 2, 1).unwrap();
        let v3: Vec<_> = u.rows.iter().map(|r| r.slope_v3.clone()).collect();
        let v2: Vec<_> = u.rows.iter().map(|r| r.slope_v2.clone()).collect();
        let counts: Vec<_> = u.rows.iter().map(|r| r.count.clone()).collect();
        assert_eq!(v3, vec![sl(-1, 1), sl(-4, 1)]);
        assert_eq!(v2, vec![sl(-1, 1), sl(-2, 1)]);
        assert_eq!(counts, vec![b(1), b(8)]);
        assert_eq!(u.total, b(9));

        assert_eq!(upper_bound(&FirstFiber, 1, 5).unwrap().total, b(5));
    }

    #[test]
    fn second_fiber_rows() {
        for m in 1..=6u64 {
            for n in 1..=6u64 {
                let u = upper_bound(&SecondFiber, m, n).unwrap();
                for r in &u.rows {
                    let (li, ni, mi) = (r.l as i64, n as i64, m as i64);
                    assert_eq!(r.tw, b(-6 * (mi - li) + 5));
                    assert_eq!(r.n1, b(-3 * (mi - li) + 2));
                    assert_eq!(r.slope_v3, sl(-ni - 2 * li, 1));
                    assert_eq!(r.slope_v2, sl(-li - 1, 1));
                }
            }
        }
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(closed_form(&FirstFiber, 2, 1).unwrap(), b(9));
        assert_eq!(closed_form(&SecondFiber, 1, 1).unwrap(), b(1));
        assert_eq!(closed_form(&SecondFiber, 3, 2).unwrap(), b(28));
    }

    #[test]
    fn closed_form_is_monotone() {
        let reg = FamilyRegistry::default();
        for name in reg.names() {
            let f = reg.get(name).unwrap();
            for m in 1..=10 {
                for n in 1..=20 {
                    let c = closed_form(f, m, n).unwrap();
                    assert!(closed_form(f, m, n + 1).unwrap() > c);
                    assert!(closed_form(f, m + 1, n).unwrap() > c);
                }
            }
        }
    }

    #[test]
    fn target_examples() {
        let t = target_manifold(&FirstFiber, 1, 1).unwrap();
        assert_eq!(t.surgery.to_string(), "M(0; 2/3, -1/3, -1/7)");
        assert_eq!(t.theorem.to_string(), "M(-2; 2/3, 2/3, 6/7)");
        assert!(t.equivalent);

        let t = target_manifold(&SecondFiber, 1, 1).unwrap();
        assert_eq!(t.theorem.to_string(), "M(-2; 1/2, 3/4, 6/7)");
        assert!(t.equivalent);

        assert_eq!(
            slam_dunk(&base_manifold(3), 0, &Framing::Infinite)
                .unwrap()
                .to_string(),
            "M(0; 1/2, -1/3, -3/19)"
        );
    }

    #[test]
    fn reports_agree_and_flag_range() {
        let r = count_report(&FirstFiber, 3, 4).unwrap();
        assert!(r.agrees && r.hypothesis_ok);
        let r = count_report(&FirstFiber, 1, 22).unwrap();
        assert!(!r.hypothesis_ok);
        assert!(r.agrees);
        let r = count_report(&SecondFiber, 1, 15).unwrap();
        assert!(!r.hypothesis_ok);
        assert!(count_report(&FirstFiber, 0, 1).is_err());
        assert!(count_report(&FirstFiber, 1, 0).is_err());
    }

    #[test]
    fn sweep_keeps_order() {
        let ps: Vec<_> = (1..=6).flat_map(|m| (1..=4).map(move |n| (m, n))).collect();
        let out = sweep(&SecondFiber, &ps);
        for (&(m, n), r) in ps.iter().zip(&out) {
            let r = r.as_ref().unwrap();
            assert_eq!((r.params.m, r.params.n), (m, n));
            assert!(r.agrees);
        }
    }
}
