use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Slope;
use crate::error::{Error, Result};

/// A 2×2 integer matrix of determinant `+1`, row-major `[[a, b], [c, d]]`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Mat2 {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
}

impl Mat2 {
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Result<Self> {
        let m = Mat2 {
            a: a.into(),
            b: b.into(),
            c: c.into(),
            d: d.into(),
        };
        let det = m.det();
        if !det.is_one() {
            return Err(Error::Determinant(m.entries_string(), det.to_string()));
        }
        Ok(m)
    }

    pub fn identity() -> Self {
        Mat2 {
            a: BigInt::one(),
            b: BigInt::zero(),
            c: BigInt::zero(),
            d: BigInt::one(),
        }
    }

    pub fn entries(&self) -> [&BigInt; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    /// First column, the image of `(1, 0)ᵀ`.
    pub fn first_column(&self) -> (BigInt, BigInt) {
        (self.a.clone(), self.c.clone())
    }

    /// Second column, the image of `(0, 1)ᵀ`.
    pub fn second_column(&self) -> (BigInt, BigInt) {
        (self.b.clone(), self.d.clone())
    }

    fn det(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    fn entries_string(&self) -> String {
        format!("{},{}],[{},{}", self.a, self.b, self.c, self.d)
    }

    pub fn invert(&self) -> Mat2 {
        Mat2 {
            a: self.d.clone(),
            b: -&self.b,
            c: -&self.c,
            d: self.a.clone(),
        }
    }

    pub fn mul(&self, rhs: &Mat2) -> Mat2 {
        Mat2 {
            a: &self.a * &rhs.a + &self.b * &rhs.c,
            b: &self.a * &rhs.b + &self.b * &rhs.d,
            c: &self.c * &rhs.a + &self.d * &rhs.c,
            d: &self.c * &rhs.b + &self.d * &rhs.d,
        }
    }

    /// `M·(x, y)ᵀ` on a raw integer vector, no canonicalization.
    pub fn apply(&self, x: &BigInt, y: &BigInt) -> (BigInt, BigInt) {
        (&self.a * x + &self.b * y, &self.c * x + &self.d * y)
    }

    /// Projective action on slopes.
    ///
    /// The slope `p/q` is the vector `(q, p)ᵀ`, and `M·(q, p)ᵀ = (q', p')ᵀ`
    /// is the slope `p'/q'`. With this orientation the boundary slope `1/n`
    /// of a standard neighbourhood, pushed through the attaching matrices
    /// `[[3,-1],[1,0]]`, `[[6m+1,6],[m,1]]` and
    /// `[[6m+2n-5,2],[-3m-n+2,-1]]`, gives exactly `n/(3n-1)`,
    /// `(mn+1)/((6m+1)n+6)` and `((-3m-n+2)n-1)/((6m+2n-5)n+2)`. The
    /// transposed convention `(p, q)ᵀ` fails already on the first matrix,
    /// which would give `(3-n)/1`.
    pub fn act(&self, s: &Slope) -> Slope {
        let (q, p) = s.vector();
        let (q2, p2) = self.apply(&q, &p);
        // det = 1 keeps (q2, p2) primitive and nonzero
        Slope::from_vector(q2, p2).expect("det-1 image of a primitive vector is nonzero")
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}]]", self.entries_string())
    }
}

impl FromStr for Mat2 {
    type Err = Error;

    /// Parses `a,b,c,d` (row-major).
    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<BigInt>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::Parse(format!("matrix entries must be integers: {s:?}")))?;
        let [a, b, c, d]: [BigInt; 4] = parts
            .try_into()
            .map_err(|_| Error::Parse(format!("matrix needs exactly 4 entries: {s:?}")))?;
        Mat2::new(a, b, c, d)
    }
}
