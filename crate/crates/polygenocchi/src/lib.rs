//! Exact-arithmetic engine for degenerate three-variable Hermite-based
//! Apostol-Frobenius-type poly-Genocchi polynomials and their supporting
//! special-number kernel.
//!
//! Everything is computed over exact rationals (or polynomials with exact
//! rational coefficients); there is no floating point anywhere. The core
//! object is the truncated power series engine in [`series`], generic over a
//! coefficient ring so the same code produces both rational values and
//! symbolic polynomials in x, y, z.

pub mod cli;
pub mod error;
pub mod families;
pub mod report;
pub mod ring;
pub mod series;
pub mod specnum;
pub mod theorems;

pub use error::{Error, Result};
