//! Exact slope calculus and tight contact structure counts for Seifert
//! fibered spaces obtained by surgery on a singular fiber of
//! `-Σ(2,3,6m+1)`.
//!
//! - [`slope`]: extended-rational slopes, the `SL(2,Z)` action, negative
//!   continued fractions and the solid-torus count.
//! - [`seifert`]: Seifert invariants, normalization, slam-dunks and fibered
//!   decompositions.
//! - [`transport`]: slope transport through attaching maps and edge rounding.
//! - [`family`]: lower/upper bounds, closed forms and twisting exclusion,
//!   with one [`family::FiberFamily`] strategy per surgered fiber.

pub mod error;
pub mod family;
pub mod report;
pub mod seifert;
pub mod slope;
pub mod transport;

pub use error::{Error, Result};
pub use slope::{Mat2, NegCF, Slope};
