//! Browser bindings. Every export returns a JSON string; failures come back
//! as `{"error": "..."}` so the page never has to catch exceptions.

use num_bigint::BigInt;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use sextic_monogen::search::{generator_search, thue_solutions};
use sextic_monogen::sextic::{abs_index_detailed, FamilyParams, ThetaCoords};

/// Largest box the page may request; keeps each call well under a second.
const MAX_THUE_BOUND: u32 = 12;
const MAX_SCAN_BOUND: u32 = 2;

fn render(r: Result<Value, String>) -> String {
    r.unwrap_or_else(|e| json!({ "error": e })).to_string()
}

fn params(a: &str, d: u32) -> Result<FamilyParams, String> {
    let a: BigInt = a.trim().parse().map_err(|_| format!("a must be an integer, got {a:?}"))?;
    FamilyParams::new(a, d as u64).map_err(|e| e.to_string())
}

fn capped(bound: u32, max: u32) -> Result<u32, String> {
    if bound == 0 || bound > max {
        return Err(format!("bound must be between 1 and {max}"));
    }
    Ok(bound)
}

/// Index of theta with the relative index, J factor and discriminant check.
#[wasm_bindgen]
pub fn index_of(a: &str, d: u32, coords: &str) -> String {
    render((|| {
        let p = params(a, d)?;
        let c = ThetaCoords::parse(coords).map_err(|e| e.to_string())?;
        let b = abs_index_detailed(&p, &c).map_err(|e| e.to_string())?;
        Ok(json!({
            "coords": c.to_string(),
            "generator": b.index == BigInt::from(1),
            "breakdown": b,
        }))
    })())
}

/// Unit solutions of the relative Thue equation in a box.
#[wasm_bindgen]
pub fn thue_units(a: &str, d: u32, bound: u32) -> String {
    render((|| {
        let p = params(a, d)?;
        let bound = capped(bound, MAX_THUE_BOUND)?;
        let s = thue_solutions(&p.a, p.d(), bound).map_err(|e| e.to_string())?;
        Ok(json!({ "iterations": s.iterations, "solutions": s.solutions }))
    })())
}

/// Exhaustive generator scan over a small coordinate box.
#[wasm_bindgen]
pub fn scan_generators(a: &str, d: u32, bound: u32) -> String {
    render((|| {
        let p = params(a, d)?;
        let bound = capped(bound, MAX_SCAN_BOUND)?;
        let s = generator_search(&p, bound).map_err(|e| e.to_string())?;
        Ok(json!({
            "iterations": s.iterations,
            "relative_generators": s.relative_generators,
            "generators": s.records.iter().map(|r| r.coords.to_string()).collect::<Vec<_>>(),
        }))
    })())
}
