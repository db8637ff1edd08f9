//! Seifert invariants `M(e₀; r₁, …, r_k)`, their normal form, the
//! meridian slam-dunk, and fibered decompositions into pants × S¹ plus
//! three solid tori.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::ser::{SerializeMap, SerializeSeq};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::report::BigNum;
use crate::slope::{Mat2, Slope};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SeifertInvariants {
    e0: BigInt,
    ratios: Vec<Slope>,
}

impl SeifertInvariants {
    /// Ratios must be finite; no normalization is applied.
    pub fn new(e0: impl Into<BigInt>, ratios: Vec<Slope>) -> Result<Self> {
        if let Some(bad) = ratios.iter().find(|r| r.is_infinite()) {
            return Err(Error::InvalidSlope(format!(
                "Seifert ratio must be finite, got {bad}"
            )));
        }
        Ok(SeifertInvariants {
            e0: e0.into(),
            ratios,
        })
    }

    pub fn e0(&self) -> &BigInt {
        &self.e0
    }

    pub fn ratios(&self) -> &[Slope] {
        &self.ratios
    }

    /// Same invariants with the legs permuted: leg `i` of the result is
    /// leg `order[i]` of `self`.
    pub fn reordered(&self, order: &[usize]) -> Result<Self> {
        let mut seen = vec![false; self.ratios.len()];
        let mut ratios = Vec::with_capacity(order.len());
        for &i in order {
            if i >= self.ratios.len() || std::mem::replace(&mut seen[i], true) {
                return Err(Error::Parse(format!(
                    "{order:?} is not a permutation of the legs"
                )));
            }
            ratios.push(self.ratios[i].clone());
        }
        if ratios.len() != self.ratios.len() {
            return Err(Error::Parse(format!(
                "{order:?} is not a permutation of the legs"
            )));
        }
        Ok(SeifertInvariants {
            e0: self.e0.clone(),
            ratios,
        })
    }
}

/// Moves every ratio into `[0, 1)`, absorbing floors into `e₀`, and drops
/// integer ratios. Leg order of the surviving ratios is kept.
pub fn normalize(inv: &SeifertInvariants) -> SeifertInvariants {
    let mut e0 = inv.e0.clone();
    let mut ratios = Vec::with_capacity(inv.ratios.len());
    for r in &inv.ratios {
        let f = r.floor().expect("ratios are finite");
        let frac = r.fract().expect("ratios are finite");
        e0 += f;
        if !frac.is_zero() {
            ratios.push(frac);
        }
    }
    SeifertInvariants { e0, ratios }
}

/// Equal normal forms up to reordering of the legs.
pub fn is_equivalent(x: &SeifertInvariants, y: &SeifertInvariants) -> bool {
    let (x, y) = (normalize(x), normalize(y));
    if x.e0 != y.e0 || x.ratios.len() != y.ratios.len() {
        return false;
    }
    let sorted = |v: &[Slope]| {
        let mut v = v.to_vec();
        v.sort_by(|a, b| a.partial_cmp(b).expect("finite ratios"));
        v
    };
    sorted(&x.ratios) == sorted(&y.ratios)
}

/// `e₀ + Σ rᵢ`.
pub fn euler_number(inv: &SeifertInvariants) -> Slope {
    inv.ratios
        .iter()
        .fold(Slope::integer(inv.e0.clone()), |acc, r| {
            acc.checked_add(r).expect("ratios are finite")
        })
}

/// Surgery coefficient of the unknot carrying a leg: `c = -1/r`.
pub fn leg_coefficient(r: &Slope) -> Result<Slope> {
    if r.is_zero() || r.is_infinite() {
        return Err(Error::domain(
            "leg_coefficient",
            format!("need finite r != 0, got {r}"),
        ));
    }
    Ok(-r.recip())
}

/// Inverse of [`leg_coefficient`]: `r = -1/c`.
pub fn coefficient_to_ratio(c: &Slope) -> Result<Slope> {
    if c.is_zero() || c.is_infinite() {
        return Err(Error::domain(
            "coefficient_to_ratio",
            format!("need finite c != 0, got {c}"),
        ));
    }
    Ok(-c.recip())
}

/// Framing of the meridian circle in a slam-dunk; `Infinite` means no surgery.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Framing {
    Finite(BigInt),
    Infinite,
}

impl Framing {
    pub fn integer(f: impl Into<BigInt>) -> Self {
        Framing::Finite(f.into())
    }
}

impl fmt::Display for Framing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Framing::Finite(n) => write!(f, "{n}"),
            Framing::Infinite => write!(f, "inf"),
        }
    }
}

impl FromStr for Framing {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("inf") || s == "∞" {
            return Ok(Framing::Infinite);
        }
        s.parse::<BigInt>()
            .map(Framing::Finite)
            .map_err(|_| Error::Parse(format!("framing must be an integer or inf: {s:?}")))
    }
}

/// Slam-dunk of an `f`-framed meridian into leg `leg` (0-based), without
/// normalizing: the leg coefficient `c = -1/r` becomes `c - 1/f`.
pub fn slam_dunk(inv: &SeifertInvariants, leg: usize, f: &Framing) -> Result<SeifertInvariants> {
    let r = inv.ratios.get(leg).ok_or_else(|| {
        Error::domain(
            "meridian_surgery",
            format!("leg {leg} out of range for {} legs", inv.ratios.len()),
        )
    })?;
    let f = match f {
        Framing::Infinite => return Ok(inv.clone()),
        Framing::Finite(f) if f.is_zero() => {
            return Err(Error::Unsupported("0-framed meridian surgery".into()))
        }
        Framing::Finite(f) => f,
    };
    let c = leg_coefficient(r)?;
    let c_new = c
        .checked_sub(&Slope::integer(f.clone()).recip())
        .expect("finite operands");
    if c_new.is_zero() {
        return Err(Error::Unsupported(format!(
            "framing {f} turns leg {leg} into an infinite ratio"
        )));
    }
    let mut ratios = inv.ratios.clone();
    ratios[leg] = coefficient_to_ratio(&c_new)?;
    Ok(SeifertInvariants {
        e0: inv.e0.clone(),
        ratios,
    })
}

/// [`slam_dunk`] followed by [`normalize`].
pub fn meridian_surgery(
    inv: &SeifertInvariants,
    leg: usize,
    f: &Framing,
) -> Result<SeifertInvariants> {
    if *f == Framing::Infinite {
        if leg >= inv.ratios.len() {
            return Err(Error::domain(
                "meridian_surgery",
                format!("leg {leg} out of range"),
            ));
        }
        return Ok(inv.clone());
    }
    slam_dunk(inv, leg, f).map(|x| normalize(&x))
}

/// `(Σ × S¹) ∪_{A₁ ∪ A₂ ∪ A₃} (V₁ ∪ V₂ ∪ V₃)`; `Aᵢ` maps `∂Vᵢ` to
/// `-∂(Σ × S¹)` with meridian `(1,0)ᵀ` inside and fiber `(0,1)ᵀ` outside.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FiberedDecomposition {
    attaching: [Mat2; 3],
}

impl FiberedDecomposition {
    pub fn new(attaching: [Mat2; 3]) -> Self {
        FiberedDecomposition { attaching }
    }

    pub fn attaching(&self) -> &[Mat2; 3] {
        &self.attaching
    }
}

/// Builds the decomposition of a three-legged presentation.
///
/// `e₀` is folded into the first leg. A leg `r = β/α` (`α > 0`) is glued by
/// `[[α, x], [-β, y]]`: the meridian goes to `(α, -β)ᵀ`, and the completion
/// takes the least `x ≥ 0` with `αy + βx = 1`. Any completion describes the
/// same manifold; this one reproduces `[[2,1],[-1,0]]` for `1/2`,
/// `[[6m+1,6],[m,1]]` for `-m/(6m+1)` (every `m ≥ 1`) and
/// `[[6m+2n-5,2],[-3m-n+2,-1]]` for `(3m+n-2)/(6m+2n-5)`.
pub fn seifert_to_decomposition(inv: &SeifertInvariants) -> Result<FiberedDecomposition> {
    if inv.ratios.len() != 3 {
        return Err(Error::Unsupported(format!(
            "fibered decomposition needs exactly 3 legs, got {}",
            inv.ratios.len()
        )));
    }
    let mut legs = inv.ratios.clone();
    legs[0] = legs[0].add_integer(&inv.e0);
    let mats: Vec<Mat2> = legs.iter().map(leg_matrix).collect::<Result<_>>()?;
    let [a1, a2, a3]: [Mat2; 3] = mats.try_into().expect("three legs");
    Ok(FiberedDecomposition::new([a1, a2, a3]))
}

fn leg_matrix(r: &Slope) -> Result<Mat2> {
    let (alpha, beta) = (r.denom().clone(), r.numer().clone());
    // beta * x ≡ 1 (mod alpha)
    let egcd = beta.extended_gcd(&alpha);
    if !egcd.gcd.abs().is_one() {
        return Err(Error::Consistency(format!(
            "leg {r} is not in lowest terms"
        )));
    }
    let x = (egcd.x * &egcd.gcd).mod_floor(&alpha);
    let y = (BigInt::one() - &beta * &x) / &alpha;
    Mat2::new(alpha, x, -beta, y)
}

impl fmt::Display for SeifertInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M({};", self.e0)?;
        for (i, r) in self.ratios.iter().enumerate() {
            let sep = if i == 0 { " " } else { ", " };
            write!(f, "{sep}{r}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for SeifertInvariants {
    type Err = Error;

    /// Parses `M(e0; p1/q1, p2/q2, …)`; the leading `M` is optional.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("expected M(e0; r1, r2, ...), got {s:?}"));
        let t = s.trim();
        let t = t.strip_prefix('M').unwrap_or(t).trim();
        let body = t
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(bad)?;
        let (e0, rest) = body.split_once(';').ok_or_else(bad)?;
        let e0: BigInt = e0.trim().parse().map_err(|_| bad())?;
        let ratios = rest
            .split(',')
            .map(str::trim)
            .filter(|r| !r.is_empty())
            .map(str::parse::<Slope>)
            .collect::<Result<Vec<_>>>()?;
        SeifertInvariants::new(e0, ratios)
    }
}

/// JSON shape `{"e0": .., "ratios": [{"p": .., "q": ..}, ..]}`.
impl Serialize for SeifertInvariants {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        struct Ratios<'a>(&'a [Slope]);
        struct Ratio<'a>(&'a Slope);

        impl Serialize for Ratio<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut map = s.serialize_map(Some(2))?;
                map.serialize_entry("p", &BigNum(self.0.numer()))?;
                map.serialize_entry("q", &BigNum(self.0.denom()))?;
                map.end()
            }
        }

        impl Serialize for Ratios<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut seq = s.serialize_seq(Some(self.0.len()))?;
                for r in self.0 {
                    seq.serialize_element(&Ratio(r))?;
                }
                seq.end()
            }
        }

        let mut map = serializer.serialize_map(Some(2))?;
        map.serialize_entry("e0", &BigNum(&self.e0))?;
        map.serialize_entry("ratios", &Ratios(&self.ratios))?;
        map.end()
    }
}
