use num_bigint::BigInt;

use super::{FirstFiber, SecondFiber};
use crate::error::{Error, Result};
use crate::seifert::{FiberedDecomposition, SeifertInvariants};
use crate::slope::Mat2;

/// One surgery family: Legendrian surgery on a chosen singular fiber of
/// `M_m = M(0; 1/2, -1/3, -m/(6m+1))` with a diagram framing depending on
/// `(m, n)`.
///
/// The driver in [`super`] runs the same lower-bound triangle and the same
/// upper-bound slope pipeline for every family; a family only supplies the
/// data that differs between fibers.
pub trait FiberFamily: Send + Sync {
    /// Registry key, e.g. `"F1"`.
    fn name(&self) -> &'static str;

    /// Index of the surgered leg in the base presentation of `M_m`.
    fn surgered_leg(&self) -> usize;

    /// Attaching matrix of the surgered leg in the decomposition of `M_m`
    /// whose longitude is the diagram's 0-framing of the meridian circle.
    fn base_frame(&self) -> Mat2;

    /// Diagram framing of the meridian circle.
    fn smooth_framing(&self, m: u64, n: u64) -> BigInt;

    /// Exclusive upper bound on `n` under which the family's count holds.
    fn n_limit(&self, m: u64) -> u64;

    /// Decomposition of the surgered manifold with `V₁` the untouched
    /// order-2 or order-3 leg, `V₂` the `-m/(6m+1)` leg and `V₃` the
    /// surgered leg.
    fn upper_decomposition(&self, m: u64, n: u64) -> Result<FiberedDecomposition>;

    /// Normalized invariants as stated for the classified family.
    fn theorem_invariants(&self, m: u64, n: u64) -> SeifertInvariants;

    /// Closed-form count as `numerator / divisor`.
    fn closed_form_fraction(&self, m: u64, n: u64) -> (BigInt, u32);
}

/// Fiber families keyed by name, resolved at runtime.
pub struct FamilyRegistry {
    families: Vec<Box<dyn FiberFamily>>,
}

impl FamilyRegistry {
    pub fn empty() -> Self {
        FamilyRegistry {
            families: Vec::new(),
        }
    }

    pub fn register(&mut self, family: Box<dyn FiberFamily>) -> Result<()> {
        if self.lookup(family.name()).is_some() {
            return Err(Error::Unsupported(format!(
                "fiber family {} registered twice",
                family.name()
            )));
        }
        self.families.push(family);
        Ok(())
    }

    /// Case-insensitive lookup.
    pub fn get(&self, name: &str) -> Result<&dyn FiberFamily> {
        self.lookup(name).ok_or_else(|| {
            Error::Parse(format!(
                "unknown fiber {name:?}; known: {}",
                self.names().join(", ")
            ))
        })
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.families.iter().map(|f| f.name()).collect()
    }

    fn lookup(&self, name: &str) -> Option<&dyn FiberFamily> {
        self.families
            .iter()
            .find(|f| f.name().eq_ignore_ascii_case(name))
            .map(|f| f.as_ref())
    }
}

impl Default for FamilyRegistry {
    fn default() -> Self {
        let mut r = FamilyRegistry::empty();
        r.register(Box::new(FirstFiber)).expect("fresh registry");
        r.register(Box::new(SecondFiber)).expect("fresh registry");
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_registry() {
        let r = FamilyRegistry::default();
        assert_eq!(r.names(), vec!["F1", "F2"]);
        assert_eq!(r.get("f2").unwrap().name(), "F2");
        assert!(matches!(r.get("F3"), Err(Error::Parse(_))));
    }

    #[test]
    fn duplicate_registration_fails() {
        let mut r = FamilyRegistry::default();
        assert!(r.register(Box::new(FirstFiber)).is_err());
    }
}
