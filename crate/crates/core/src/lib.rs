//! Exact arithmetic for monogenity questions in a family of sextic fields
//! built as composites of simplest cubic fields with imaginary quadratic
//! fields.
//!
//! The layers, bottom up:
//! - [`bigpoly`]: sparse multivariate and dense univariate polynomials over
//!   big integers, resultants, discriminants, integer roots.
//! - [`quadring`]: integer rings of imaginary quadratic fields.
//! - [`sextic`]: the cubic, the relative Thue form and the index formulas.
//! - [`catalog`]: tabulated solutions and generators, with audits.
//! - [`search`]: bounded enumerations and the case analyses.

pub mod bigpoly;
pub mod catalog;
pub mod error;
pub mod quadring;
pub mod report;
pub mod ring;
pub mod search;
pub mod sextic;

pub use error::{Error, Result};
