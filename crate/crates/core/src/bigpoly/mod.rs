//! Exact polynomial arithmetic over unbounded integers.

mod mpoly;
mod resultant;
mod rewrite;
mod roots;
mod upoly;

pub use mpoly::{MPoly, MPolyRing, Monomial, Var, NVARS};
pub use resultant::{
    determinant, discriminant, discriminant_in, discriminant_with, resultant, resultant_in,
    resultant_with, sylvester, DetMethod,
};
pub use rewrite::{k_of_a, rewrite_in_k};
pub use roots::{integer_roots, isqrt_exact};
pub use upoly::{PolyRing, UPoly};
