//! Bounded enumerations and exact case analyses that reproduce the
//! generator classification from first principles.

mod cases;
mod generators;
mod thue;

pub use cases::{
    case_d1_d3_analysis, case_i_analysis, negative_for_all, solve_poly_pm1, CaseI, CaseIPair, CaseIReport, CaseReport,
    FormulaAudit, KEquation, Mod4Row, Negativity, NumericCheck, PairAnalysis, PmOneRoots, Scope, SolvedPoint,
    Theorem2Comparison,
};
pub use generators::{generator_search, generators_from_solutions, GeneratorSearch, SolutionSource};
pub use thue::{thue_solutions, SearchBox, ThueSearch};
