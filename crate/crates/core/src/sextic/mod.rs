//! The formula layer for the sextic family: the simplest cubic, the relative
//! Thue form, relative index, J factor and absolute index.

mod family;
mod index;
mod records;
mod symbolic;
mod thue;

pub use family::{
    order_disc, simplest_cubic_and_disc, xy_inverse, xy_transform, FamilyParams, ThetaCoords,
};
pub use index::{abs_index, abs_index_detailed, char_poly_rel, j_factor, rel_index, IndexBreakdown};
pub use records::{AConstraint, GeneratorRecord, Provenance, SolutionPair};
pub use symbolic::{symbolic_j, symbolic_j_detailed, SymbolicCase, SymbolicJ};
pub use thue::{thue_form, thue_form_rational_symbolic, thue_form_symbolic};
