use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::catalog::lemma1_entries;
use crate::error::Result;
use crate::quadring::QuadInt;
use crate::search::thue::thue_solutions;
use crate::sextic::{abs_index, j_factor, rel_index, xy_transform, FamilyParams, GeneratorRecord, ThetaCoords};

#[derive(Debug, Clone, Serialize)]
pub struct GeneratorSearch {
    pub records: Vec<GeneratorRecord>,
    /// Logical number of coordinate vectors covered, `(2B+1)^5`.
    pub iterations: u64,
    /// Coefficient pairs `(c1, c2)` whose relative index is 1.
    pub relative_generators: u64,
}

/// Exhaustive search over `theta = x1 alpha + x2 alpha^2 + y0 w + y1 w alpha
/// + y2 w alpha^2` with every coordinate in `[-B, B]`.
///
/// The relative index depends only on `(c1, c2)`, so the `y0` loop runs only
/// for pairs with relative index 1; skipped vectors are still counted.
pub fn generator_search(params: &FamilyParams, bound: u32) -> Result<GeneratorSearch> {
    let ring = params.ring();
    let b = bound as i64;
    let side = 2 * b + 1;
    let mut records = Vec::new();
    let mut iterations = 0u64;
    let mut relative_generators = 0u64;
    for x1 in -b..=b {
        for y1 in -b..=b {
            for x2 in -b..=b {
                for y2 in -b..=b {
                    let c1 = ring.elem(x1, y1);
                    let c2 = ring.elem(x2, y2);
                    if c1.is_zero() && c2.is_zero() || !rel_index(params, &c1, &c2)?.is_one() {
                        iterations += side as u64;
                        continue;
                    }
                    relative_generators += 1;
                    for y0 in -b..=b {
                        iterations += 1;
                        let coords = ThetaCoords::new([0, x1, x2, y0, y1, y2]);
                        if coords != coords.canonical() {
                            continue;
                        }
                        let index = abs_index(params, &coords)?;
                        if index.is_one() {
                            records.push(GeneratorRecord::new(
                                params,
                                BigInt::from(y0),
                                c1.clone(),
                                c2.clone(),
                                ring.int(1),
                                index,
                            )?);
                        }
                    }
                }
            }
        }
    }
    records.sort();
    Ok(GeneratorSearch { records, iterations, relative_generators })
}

/// Where the Thue pairs of [`generators_from_solutions`] come from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum SolutionSource {
    /// A brute-force box of the given bound.
    BruteForce { bound: u32 },
    /// Tabulated pairs; fixed-parameter triples printed at `a` are applied at
    /// `a + shift`.
    Catalog { shift: i64 },
}

/// `theta = y0 w + eps (X1 alpha + X2 alpha^2)` over Thue pairs, units and
/// `|y0| <= y0_bound`, keeping `J = 1`. One record per equivalence class.
pub fn generators_from_solutions(
    params: &FamilyParams,
    y0_bound: u32,
    source: SolutionSource,
) -> Result<Vec<GeneratorRecord>> {
    let ring = params.ring();
    let pairs: Vec<(QuadInt, QuadInt)> = match source {
        SolutionSource::BruteForce { bound } => thue_solutions(&params.a, ring.d(), bound)?
            .solutions
            .into_iter()
            .map(|p| (p.y1, p.y2))
            .collect(),
        SolutionSource::Catalog { shift } => lemma1_entries()
            .iter()
            .filter(|e| e.fixed_a().is_none_or(|a| a + shift == params.a))
            .filter_map(|e| e.pair_in(ring))
            .collect(),
    };
    let b = y0_bound as i64;
    let mut found: BTreeMap<ThetaCoords, GeneratorRecord> = BTreeMap::new();
    for (y1, y2) in &pairs {
        let (x1, x2) = xy_transform(&params.a, y1, y2)?;
        for eps in ring.units_mod_sign() {
            let c1 = eps.mul(&x1)?;
            let c2 = eps.mul(&x2)?;
            for y0 in -b..=b {
                let coords = ThetaCoords::from_relative(&ring.elem(0, y0), &c1, &c2);
                if !j_factor(params, &coords)?.is_one() {
                    continue;
                }
                let index = abs_index(params, &coords)?;
                if !index.is_one() {
                    continue;
                }
                let rec = GeneratorRecord::new(params, BigInt::from(y0), x1.clone(), x2.clone(), eps.clone(), index)?;
                found.entry(rec.coords.clone()).or_insert(rec);
            }
        }
    }
    Ok(found.into_values().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::theorem2_classes;
    use crate::search::SearchBox;

    fn classes(v: &[GeneratorRecord]) -> Vec<ThetaCoords> {
        v.iter().map(|r| r.coords.clone()).collect()
    }

    #[test]
    fn a0_d1_matches_tabulated_classes() {
        let p = FamilyParams::new(0, 1).unwrap();
        let s = generator_search(&p, 3).unwrap();
        assert_eq!(s.iterations, SearchBox::points(3, 5));
        assert_eq!(classes(&s.records), theorem2_classes(0));
        for r in &s.records {
            assert!(abs_index(&r.params(), &r.coords).unwrap().is_one());
        }
    }

    #[test]
    fn empty_slices() {
        for (a, d) in [(0, 2), (5, 1)] {
            let p = FamilyParams::new(a, d).unwrap();
            assert!(generator_search(&p, 3).unwrap().records.is_empty(), "a={a} d={d}");
        }
    }

    #[test]
    fn pipeline_agrees_with_exhaustive_search() {
        let p = FamilyParams::new(0, 1).unwrap();
        let from_pairs = generators_from_solutions(&p, 5, SolutionSource::BruteForce { bound: 10 }).unwrap();
        let exhaustive = generator_search(&p, 3).unwrap();
        let in_box: Vec<ThetaCoords> = classes(&from_pairs)
            .into_iter()
            .filter(|c| c.to_array().iter().all(|v| v.magnitude() <= &3u32.into()))
            .collect();
        assert_eq!(in_box, classes(&exhaustive.records));
    }

    #[test]
    fn pipeline_finds_negative_y_row() {
        let p = FamilyParams::new(-1, 1).unwrap();
        let recs = generators_from_solutions(&p, 5, SolutionSource::BruteForce { bound: 10 }).unwrap();
        // (-1,-1,-ia,i): theta = -w + i alpha + i alpha^2, canonically negated.
        assert!(classes(&recs).contains(&ThetaCoords::new([0, 0, 0, -1, 1, 1]).canonical()));
    }

    #[test]
    fn eisenstein_pipeline_is_empty() {
        let p = FamilyParams::new(0, 3).unwrap();
        assert!(generators_from_solutions(&p, 5, SolutionSource::BruteForce { bound: 10 }).unwrap().is_empty());
        let from_catalog = generators_from_solutions(&p, 5, SolutionSource::Catalog { shift: -2 }).unwrap();
        assert!(from_catalog.is_empty());
    }
}
