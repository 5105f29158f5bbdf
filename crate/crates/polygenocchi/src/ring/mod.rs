//! Coefficient rings for the series engine.
//!
//! Two rings are provided: arbitrary-precision rationals ([`Rat`]) and sparse
//! polynomials in x, y, z over the rationals ([`TriPoly`]). Everything the
//! engine computes is exact; floating point never enters the compute path.

mod rational;
mod tripoly;

pub use rational::{binom_int, factorial, rat_binomial, Rat};
pub use tripoly::{TriPoly, Var};

use std::fmt::{Debug, Display};

/// Contract every coefficient ring must satisfy.
///
/// Equality is decidable and exact, constants embed via [`Coeff::from_rat`],
/// and inversion is partial: `invert` returns `None` exactly when the element
/// has no multiplicative inverse in the ring.
pub trait Coeff: Clone + PartialEq + Debug + Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Exact multiplicative inverse, `None` when the element is not a unit.
    fn invert(&self) -> Option<Self>;
    /// Embed a rational scalar into the ring.
    fn from_rat(r: &Rat) -> Self;
    fn is_zero(&self) -> bool;
}
