use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Slope;
use crate::error::{Error, Result};

/// Negative continued fraction `a₀ - 1/(a₁ - 1/(… - 1/a_k))`.
///
/// Every digit is `≤ -2`, except that the one-digit expansion `[-1]` is
/// allowed for the slope `-1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NegCF {
    digits: Vec<BigInt>,
}

impl NegCF {
    pub fn new(digits: Vec<BigInt>) -> Result<Self> {
        let minus_two = BigInt::from(-2);
        let ok = match digits.as_slice() {
            [] => false,
            [d] if *d == BigInt::from(-1) => true,
            ds => ds.iter().all(|d| *d <= minus_two),
        };
        if !ok {
            return Err(Error::domain(
                "NegCF",
                format!("digits must be <= -2 (or exactly [-1]): {digits:?}"),
            ));
        }
        Ok(NegCF { digits })
    }

    pub fn digits(&self) -> &[BigInt] {
        &self.digits
    }
}

/// Floor-recursion expansion of a rational `s ≤ -1`.
pub fn neg_cf(s: &Slope) -> Result<NegCF> {
    if s.is_infinite() || *s > Slope::integer(-1) {
        return Err(Error::domain(
            "neg_cf",
            format!("need finite s <= -1, got {s}"),
        ));
    }
    let (mut p, mut q) = (s.numer().clone(), s.denom().clone());
    let mut digits = Vec::new();
    loop {
        let (a, r) = p.div_mod_floor(&q);
        digits.push(a);
        if r.is_zero() {
            break;
        }
        // s - a = r/q ∈ (0,1), continue with -1/(s - a) = -q/r
        p = -q;
        q = r;
    }
    Ok(NegCF { digits })
}

pub fn cf_eval(d: &NegCF) -> Slope {
    let mut digits = d.digits.iter().rev();
    let last = digits.next().expect("NegCF is nonempty");
    let mut val = Slope::integer(last.clone());
    for a in digits {
        val = (-val.recip()).add_integer(a);
    }
    val
}

/// Number of tight contact structures on a solid torus with convex boundary
/// of slope `s ≤ -1` (meridian slope 0, two dividing curves):
/// `|(r₀+1)(r₁+1)⋯(r_{k-1}+1)·r_k|` over the negative continued fraction.
pub fn honda_count(s: &Slope) -> Result<BigInt> {
    let cf = neg_cf(s)
        .map_err(|_| Error::domain("honda_count", format!("need finite s <= -1, got {s}")))?;
    let (last, init) = cf.digits.split_last().expect("NegCF is nonempty");
    let prod = init.iter().fold(BigInt::one(), |acc, r| acc * (r + 1)) * last;
    Ok(prod.abs())
}
