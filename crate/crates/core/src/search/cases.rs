//! The case analyses behind the non-monogenity argument: rational pairs over
//! every imaginary quadratic field (I.1, I.2), Gaussian and Eisenstein pairs
//! (II, III and their rational variants), and the fixed-parameter pairs (IV).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bigpoly::{integer_roots, rewrite_in_k, MPoly, Monomial, UPoly, Var};
use crate::catalog::{lemma1_entries, theorem2_entries, Applicability, Hypothesis};
use crate::error::{Error, Result};
use crate::quadring::{is_square_free, Branch, QuadInt, RingDesc};
use crate::report::{dec, Verdict};
use crate::sextic::{
    abs_index, j_factor, rel_index, symbolic_j, symbolic_j_detailed, xy_transform, FamilyParams, GeneratorRecord,
    Provenance, SymbolicCase, ThetaCoords,
};

/// Solutions of `p(n) = 1` and `p(n) = -1` over the integers.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct PmOneRoots {
    #[serde(serialize_with = "dec_set")]
    pub plus: BTreeSet<BigInt>,
    #[serde(serialize_with = "dec_set")]
    pub minus: BTreeSet<BigInt>,
}

impl PmOneRoots {
    pub fn all(&self) -> BTreeSet<BigInt> {
        self.plus.union(&self.minus).cloned().collect()
    }

    fn tagged(&self) -> Vec<(BigInt, i8)> {
        let mut v: Vec<(BigInt, i8)> = self.plus.iter().map(|n| (n.clone(), 1)).collect();
        v.extend(self.minus.iter().map(|n| (n.clone(), -1)));
        v.sort();
        v
    }
}

fn dec_set<S: serde::Serializer>(v: &BTreeSet<BigInt>, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(ToString::to_string))
}

/// `{n : p(n) = ±1}` via the integer roots of `p - 1` and `p + 1`.
pub fn solve_poly_pm1(p: &UPoly<BigInt>) -> Result<PmOneRoots> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let shifted = |c: i64| {
        let mut coeffs = p.coeffs().to_vec();
        coeffs[0] -= c;
        crate::bigpoly::PolyRing::new(crate::ring::Integers).from_coeffs(coeffs)
    };
    Ok(PmOneRoots { plus: integer_roots(&shifted(1))?, minus: integer_roots(&shifted(-1))? })
}

fn to_univariate(p: &MPoly, v: Var) -> Result<UPoly<BigInt>> {
    UPoly::from_mpoly(p, v)
        .to_integer()
        .ok_or_else(|| Error::InternalInconsistency(format!("{p} is not univariate in {v}")))
}

fn rational_pairs(ring: RingDesc) -> Vec<(String, QuadInt, QuadInt)> {
    [("(1,0)", 1, 0), ("(0,1)", 0, 1), ("(1,-1)", 1, -1)]
        .into_iter()
        .map(|(l, y1, y2)| (l.to_string(), ring.int(y1), ring.int(y2)))
        .collect()
}

fn catalog_pairs(ring: RingDesc, applicability: Applicability) -> Vec<(String, QuadInt, QuadInt)> {
    lemma1_entries()
        .into_iter()
        .filter(|e| e.is_independent() && e.applicability == applicability)
        .map(|e| {
            let (y1, y2) = e.pair_in(ring).expect("applicable");
            (e.text.to_string(), y1, y2)
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Cases I.1 and I.2

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CaseI {
    /// `-d = 2, 3 (mod 4)`.
    I1,
    /// `-d = 1 (mod 4)`, `d != 3`.
    I2,
}

impl CaseI {
    fn symbolic(self) -> SymbolicCase {
        match self {
            CaseI::I1 => SymbolicCase::BranchA,
            CaseI::I2 => SymbolicCase::BranchB,
        }
    }

    /// The free ring variable and the smallest admissible value it takes.
    fn variable(self) -> (Var, i64) {
        match self {
            CaseI::I1 => (Var::D, 1),
            // d = 4e - 1 >= 7
            CaseI::I2 => (Var::E, 2),
        }
    }

    /// `d` as a polynomial in the ring variable.
    fn d_poly(self) -> MPoly {
        match self {
            CaseI::I1 => MPoly::var(Var::D),
            CaseI::I2 => &(&MPoly::from(4) * &MPoly::var(Var::E)) - &MPoly::one(),
        }
    }

    fn d_of(self, v: i64) -> i64 {
        match self {
            CaseI::I1 => v,
            CaseI::I2 => 4 * v - 1,
        }
    }

    fn admissible(self, d: i64) -> bool {
        d >= 1
            && is_square_free(d as u64)
            && match self {
                CaseI::I1 => d % 4 == 1 || d % 4 == 2,
                CaseI::I2 => d % 4 == 3 && d != 3,
            }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CaseIPair {
    pub pair: String,
    pub epsilon: i8,
    pub j: String,
    pub y0_cubed_divides: bool,
    /// `deg_{y0}(J / y0^3)`.
    pub j1_degree_in_y0: u16,
    /// `J / y0^3` at `y0 = 1`.
    pub j2: String,
    /// `J / y0^3` at `y0 = -1`, up to sign, coincides with `j2`.
    pub y0_minus_one_same_form: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Mod4Row {
    pub a_mod_4: u8,
    pub ring_var_mod_4: u8,
    pub d_mod_4: u8,
    pub admissible: bool,
    pub j2_mod_4: u8,
}

#[derive(Debug, Clone, Serialize)]
pub struct Negativity {
    pub polynomial: String,
    pub variable: String,
    /// Beyond this value the sign equals the sign of the leading coefficient.
    #[serde(serialize_with = "dec")]
    pub cauchy_bound: BigInt,
    pub checked_from: i64,
    pub negative_everywhere: bool,
    pub counterexample: Option<String>,
}

/// Decides `p(v) < 0` for every integer `v >= from`.
pub fn negative_for_all(p: &MPoly, v: Var, from: i64) -> Result<Negativity> {
    let u = to_univariate(p, v)?;
    let lead = u.leading().ok_or(Error::ZeroPolynomial)?.clone();
    let max_ratio = u.coeffs()[..u.coeffs().len() - 1]
        .iter()
        .map(|c| c.abs().div_ceil(&lead.abs()))
        .max()
        .unwrap_or_default();
    let bound = max_ratio + 1;
    let mut counterexample = None;
    if !lead.is_negative() {
        counterexample = Some("leading coefficient is non-negative".to_string());
    }
    let mut x = BigInt::from(from);
    while counterexample.is_none() && x <= bound {
        if !u.eval(&x).is_negative() {
            counterexample = Some(format!("{}={x}", v.name()));
        }
        x += 1;
    }
    Ok(Negativity {
        polynomial: p.to_string(),
        variable: v.name().to_string(),
        cauchy_bound: bound,
        checked_from: from,
        negative_everywhere: counterexample.is_none(),
        counterexample,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct KEquation {
    /// `J2 - 1 = 0` or `J2 + 1 = 0`.
    pub equation: String,
    /// Coefficients of `K^2, K, 1`.
    pub quadratic_in_k: [String; 3],
    /// `b^2 - 4ac` of the quadratic in `K`.
    pub discriminant: String,
    pub printed_discriminant: String,
    /// Derived discriminant divided by the printed one, when that is an integer.
    pub derived_over_printed: Option<String>,
    pub negativity: Negativity,
}

/// Side-by-side comparison of a printed formula with the derived one.
#[derive(Debug, Clone, Serialize)]
pub struct FormulaAudit {
    pub label: String,
    pub printed: String,
    pub derived: String,
    pub status: String,
}

fn audit(label: &str, printed: &MPoly, derived: &MPoly) -> FormulaAudit {
    FormulaAudit {
        label: label.to_string(),
        printed: printed.to_string(),
        derived: derived.to_string(),
        status: if printed == derived { "MATCH" } else { "MISMATCH" }.to_string(),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct NumericCheck {
    #[serde(serialize_with = "crate::report::as_str")]
    pub seed: u64,
    pub points: usize,
    pub agreeing: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct CaseIReport {
    pub case: CaseI,
    pub branch: Branch,
    pub ring_variable: String,
    pub pairs: Vec<CaseIPair>,
    pub all_pairs_agree: bool,
    pub j2: String,
    pub j2_in_k: Option<String>,
    /// The `a^1` residual when `J2` is not a polynomial in `K`.
    pub not_expressible_residual: Option<String>,
    pub mod4_table: Vec<Mod4Row>,
    /// `J2 = 1 (mod 4)` on every admissible residue class.
    pub j2_is_1_mod_4: bool,
    pub printed_audit: Vec<FormulaAudit>,
    pub equations: Vec<KEquation>,
    pub numeric_agreement: NumericCheck,
    pub conclusion: String,
    pub verdict: Verdict,
}

fn k() -> MPoly {
    MPoly::var(Var::K)
}

fn c(n: i64) -> MPoly {
    MPoly::from(n)
}

/// `p` with its sign fixed so the leading coefficient is positive.
fn up_to_sign(p: &MPoly) -> MPoly {
    match p.leading_term() {
        Some((_, lc)) if lc.is_negative() => -p,
        _ => p.clone(),
    }
}

/// The symbolic analysis for rational pairs over a whole branch of fields.
pub fn case_i_analysis(case: CaseI, seed: u64) -> Result<CaseIReport> {
    let sym = case.symbolic();
    let (var, min_var) = case.variable();
    let ring = RingDesc::new(1)?;
    let y0_cubed = MPoly::monomial(1, Monomial::var(Var::Y0, 3));
    let mut pairs = Vec::new();
    let mut forms = BTreeSet::new();
    let mut j_polys = Vec::new();
    for (label, y1, y2) in rational_pairs(ring) {
        for eps in [1i8, -1] {
            let j = symbolic_j(sym, None, &y1, &y2, &ring.int(eps))?;
            let (divides, j1) = match j.exact_div(&y0_cubed) {
                Ok(q) => (true, q),
                Err(_) => (false, j.clone()),
            };
            let j2 = j1.eval_var(Var::Y0, &BigInt::one());
            let j2m = j1.eval_var(Var::Y0, &-BigInt::one());
            forms.insert(up_to_sign(&j2).to_string());
            forms.insert(up_to_sign(&j2m).to_string());
            pairs.push(CaseIPair {
                pair: label.clone(),
                epsilon: eps,
                j: j.to_string(),
                y0_cubed_divides: divides,
                j1_degree_in_y0: j1.degree_in(Var::Y0).unwrap_or(0),
                j2: j2.to_string(),
                y0_minus_one_same_form: up_to_sign(&j2) == up_to_sign(&j2m),
            });
            j_polys.push((y1.clone(), y2.clone(), eps, j));
        }
    }
    let all_pairs_agree = forms.len() == 1;
    let j2 = up_to_sign(
        &j_polys[0].3.exact_div(&y0_cubed).unwrap_or_else(|_| j_polys[0].3.clone()).eval_var(Var::Y0, &BigInt::one()),
    );

    let mut mod4_table = Vec::new();
    for ar in 0..4u8 {
        for vr in 0..4u8 {
            let val = j2.eval(&[(Var::A, BigInt::from(ar)), (var, BigInt::from(vr))])?;
            let d_mod = case.d_of(vr as i64).rem_euclid(4) as u8;
            let admissible = match case {
                CaseI::I1 => d_mod == 1 || d_mod == 2,
                CaseI::I2 => true,
            };
            mod4_table.push(Mod4Row {
                a_mod_4: ar,
                ring_var_mod_4: vr,
                d_mod_4: d_mod,
                admissible,
                j2_mod_4: val.mod_floor(&BigInt::from(4)).to_u8().expect("residue"),
            });
        }
    }
    let j2_is_1_mod_4 = mod4_table.iter().filter(|r| r.admissible).all(|r| r.j2_mod_4 == 1);

    let d = case.d_poly();
    let (j2_in_k, residual) = match rewrite_in_k(&j2) {
        Ok(p) => (Some(p), None),
        Err(Error::NotExpressible { residual }) => (None, Some(residual.to_string())),
        Err(e) => return Err(e),
    };

    let mut printed_audit = Vec::new();
    let mut equations = Vec::new();
    let all_negative;
    if let Some(jk) = &j2_in_k {
        let coeffs = jk.coefficients_in(Var::K);
        if coeffs.len() != 3 {
            return Err(Error::InternalInconsistency(format!("J2 is not quadratic in K: {jk}")));
        }
        let printed_disc: [MPoly; 2] = match case {
            CaseI::I1 => [
                &(&(&c(-64) * &d.pow(3)) + &(&c(4) * &d)) + &c(1),
                MPoly::zero(),
            ],
            CaseI::I2 => [
                &(&(-&d.pow(3)) + &d) + &c(1),
                &(&(-&d.pow(3)) - &d) - &c(1),
            ],
        };
        for (i, rhs) in [1i64, -1].into_iter().enumerate() {
            let c0 = &coeffs[0] - &c(rhs);
            let disc = &coeffs[1].pow(2) - &(&(&c(4) * &coeffs[2]) * &c0);
            let printed = &printed_disc[i];
            let ratio = if printed.is_zero() {
                None
            } else {
                disc.exact_div(printed).ok().filter(MPoly::is_constant).map(|q| q.to_string())
            };
            equations.push(KEquation {
                equation: if rhs == 1 { "J2 - 1 = 0" } else { "J2 + 1 = 0" }.to_string(),
                quadratic_in_k: [coeffs[2].to_string(), coeffs[1].to_string(), c0.to_string()],
                discriminant: disc.to_string(),
                printed_discriminant: if printed.is_zero() { "not printed".into() } else { printed.to_string() },
                derived_over_printed: ratio,
                negativity: negative_for_all(&disc, var, min_var.min(1))?,
            });
        }
        match case {
            CaseI::I1 => {
                // printed as the left side of "J2 - 1 = ..."
                let printed = &(&(&(&c(4) * &d) + &c(1)) * &k().pow(2)) + &(&(&c(23) * &d.pow(2)) * &k());
                let printed = &printed + &(&c(64) * &d.pow(3));
                printed_audit.push(audit("printed polynomial vs derived J2 - 1", &printed, &(jk - &c(1))));
                printed_audit.push(audit("printed polynomial vs derived J2", &printed, jk));
                let swapped = &printed + &(&(&c(9) * &d.pow(2)) * &k());
                printed_audit.push(audit("printed polynomial with 23 read as 32 vs derived J2", &swapped, jk));
                let pc = printed.coefficients_in(Var::K);
                let own = &pc[1].pow(2) - &(&(&c(4) * &pc[2]) * &pc[0]);
                printed_audit.push(audit(
                    "K-discriminant of the printed polynomial vs printed discriminant",
                    &own,
                    &printed_disc[0],
                ));
                printed_audit.push(audit(
                    "printed discriminant times 4 vs derived discriminant of J2 - 1",
                    &(&c(4) * &printed_disc[0]),
                    &equations[0].discriminant_poly(&coeffs)?,
                ));
            }
            CaseI::I2 => {
                let printed = &(&(&(&d + &c(1)) * &k().pow(2)) + &(&(&c(2) * &d.pow(2)) * &k())) + &d.pow(3);
                printed_audit.push(audit("printed J2 vs derived J2", &printed, jk));
            }
        }
        all_negative = equations.iter().all(|e| e.negativity.negative_everywhere);
    } else {
        all_negative = false;
    }

    let numeric_agreement = numeric_check_case_i(case, &j_polys, seed)?;
    let divisible = pairs.iter().all(|p| p.y0_cubed_divides);
    let proved = divisible && all_negative && pairs.iter().all(|p| p.y0_minus_one_same_form);
    let name = match case {
        CaseI::I1 => "I.1",
        CaseI::I2 => "I.2",
    };
    let conclusion = if proved {
        format!("no power integral basis in case {name} for any admissible d")
    } else {
        format!("case {name} not settled by the discriminant argument")
    };
    let verdict = Verdict::from_bool(proved && numeric_agreement.agreeing == numeric_agreement.points);
    Ok(CaseIReport {
        case,
        branch: sym.branch()?,
        ring_variable: var.name().to_string(),
        pairs,
        all_pairs_agree,
        j2: j2.to_string(),
        j2_in_k: j2_in_k.map(|p| p.to_string()),
        not_expressible_residual: residual,
        mod4_table,
        j2_is_1_mod_4,
        printed_audit,
        equations,
        numeric_agreement,
        conclusion,
        verdict,
    })
}

impl KEquation {
    fn discriminant_poly(&self, coeffs: &[MPoly]) -> Result<MPoly> {
        let c0 = &coeffs[0] - &c(1);
        Ok(&coeffs[1].pow(2) - &(&(&c(4) * &coeffs[2]) * &c0))
    }
}

/// Compares `|J|` from the symbolic polynomial with the numeric J factor at
/// random admissible points.
fn numeric_check_case_i(case: CaseI, polys: &[(QuadInt, QuadInt, i8, MPoly)], seed: u64) -> Result<NumericCheck> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ds: Vec<i64> = (1..60).filter(|&d| case.admissible(d)).collect();
    let points = 50;
    let mut agreeing = 0;
    for _ in 0..points {
        let (y1, y2, eps, j) = &polys[rng.gen_range(0..polys.len())];
        let a = rng.gen_range(-6i64..=6);
        let d = ds[rng.gen_range(0..ds.len())];
        let y0 = rng.gen_range(-3i64..=3);
        let var_value = match case {
            CaseI::I1 => (Var::D, BigInt::from(d)),
            CaseI::I2 => (Var::E, BigInt::from((d + 1) / 4)),
        };
        let sym = j.eval(&[(Var::A, BigInt::from(a)), var_value, (Var::Y0, BigInt::from(y0))])?;
        let params = FamilyParams::new(a, d as u64)?;
        let r = params.ring();
        let (x1, x2) = xy_transform(&params.a, &y1.in_ring(r)?, &y2.in_ring(r)?)?;
        let e = r.int(*eps);
        let coords = ThetaCoords::from_relative(&r.elem(0, y0), &e.mul(&x1)?, &e.mul(&x2)?);
        if sym.abs() == j_factor(&params, &coords)? {
            agreeing += 1;
        }
    }
    Ok(NumericCheck { seed, points, agreeing })
}

// ---------------------------------------------------------------------------
// Cases II, II.1, III, III.1, IV

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Scope {
    II,
    II1,
    III,
    III1,
    IV,
}

impl Scope {
    pub const ALL: [Scope; 5] = [Scope::II, Scope::II1, Scope::III, Scope::III1, Scope::IV];

    pub fn parse(s: &str) -> Option<Scope> {
        Some(match s.to_ascii_uppercase().replace('.', "").as_str() {
            "II" => Scope::II,
            "II1" => Scope::II1,
            "III" => Scope::III,
            "III1" => Scope::III1,
            "IV" => Scope::IV,
            _ => return None,
        })
    }
}

impl fmt::Display for Scope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Scope::II => "II",
            Scope::II1 => "II.1",
            Scope::III => "III",
            Scope::III1 => "III.1",
            Scope::IV => "IV",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolvedPoint {
    #[serde(serialize_with = "dec")]
    pub a: BigInt,
    #[serde(serialize_with = "dec")]
    pub d: BigInt,
    #[serde(serialize_with = "dec")]
    pub y0: BigInt,
    /// Value of the J polynomial, `1` or `-1`.
    pub j_value: i8,
    pub admissible: bool,
    /// Absolute index on recomputation, when the point is admissible.
    pub index: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PairAnalysis {
    pub pair: String,
    /// Reading of a tabulated fixed-parameter triple.
    pub reading: Option<String>,
    #[serde(serialize_with = "crate::report::dec_opt")]
    pub a: Option<BigInt>,
    pub epsilon: String,
    /// Ring the J polynomial is computed in.
    pub ring: String,
    /// The variable each univariate equation is solved for.
    pub unknown: String,
    #[serde(serialize_with = "crate::report::dec_opt")]
    pub rel_index: Option<BigInt>,
    pub j: Option<String>,
    pub y0_cubed_divides: Option<bool>,
    pub equations_solved: usize,
    pub solutions: Vec<SolvedPoint>,
    pub status: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct Theorem2Comparison {
    pub expected_classes: usize,
    pub found_classes: usize,
    pub missing: Vec<String>,
    pub extra: Vec<String>,
    pub matches: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct CaseReport {
    pub scope: Scope,
    pub completeness: String,
    pub analyses: Vec<PairAnalysis>,
    pub generators: Vec<GeneratorRecord>,
    /// Classes found here that an earlier scope already produced.
    pub reproduced_from: Option<Scope>,
    pub reproduced: Vec<GeneratorRecord>,
    pub theorem2: Option<Theorem2Comparison>,
    /// Every solved point re-verified through the numeric index path.
    pub all_verified: bool,
    pub notes: Vec<String>,
    pub verdict: Verdict,
}

struct Scan {
    analyses: Vec<PairAnalysis>,
    records: BTreeMap<(BigInt, u64, ThetaCoords), GeneratorRecord>,
    all_verified: bool,
}

impl Scan {
    fn new() -> Self {
        Scan { analyses: Vec::new(), records: BTreeMap::new(), all_verified: true }
    }

    /// Verifies a candidate point and records it when it is a generator.
    fn verify(
        &mut self,
        params: &FamilyParams,
        y0: &BigInt,
        y1: &QuadInt,
        y2: &QuadInt,
        eps: &QuadInt,
        j_value: i8,
    ) -> Result<SolvedPoint> {
        let r = params.ring();
        let (x1, x2) = xy_transform(&params.a, &y1.in_ring(r)?, &y2.in_ring(r)?)?;
        let eps = eps.in_ring(r)?;
        let coords = ThetaCoords::from_relative(&r.elem(BigInt::zero(), y0.clone()), &eps.mul(&x1)?, &eps.mul(&x2)?);
        if !j_factor(params, &coords)?.is_one() {
            self.all_verified = false;
        }
        let index = abs_index(params, &coords)?;
        if index.is_one() {
            let rec = GeneratorRecord::new(params, y0.clone(), x1, x2, eps, index.clone())?;
            self.records.entry(rec.class_key()).or_insert(rec);
        }
        Ok(SolvedPoint {
            a: params.a.clone(),
            d: BigInt::from(params.d()),
            y0: y0.clone(),
            j_value,
            admissible: true,
            index: Some(index.to_string()),
        })
    }

    /// Fixed `d`, symbolic `a`: solve `J(a, y0) = ±1` for each `|y0| <= y_max`.
    fn fixed_d(&mut self, ring: RingDesc, pairs: &[(String, QuadInt, QuadInt)], y_max: u32) -> Result<()> {
        for (label, y1, y2) in pairs {
            for eps in ring.units_mod_sign() {
                let j = symbolic_j(SymbolicCase::FixedD(ring.d()), None, y1, y2, &eps)?;
                let mut solutions = Vec::new();
                let mut solved = 0;
                let mut status = "solved".to_string();
                for y0 in -(y_max as i64)..=y_max as i64 {
                    let y0 = BigInt::from(y0);
                    let p = to_univariate(&j.eval_var(Var::Y0, &y0), Var::A)?;
                    if p.degree().is_none_or(|d| d == 0) {
                        if p.coeffs().first().is_some_and(|c| c.abs().is_one()) {
                            status = format!("J is constant ±1 in a at y0={y0}");
                            self.all_verified = false;
                        }
                        continue;
                    }
                    solved += 1;
                    for (a, sign) in solve_poly_pm1(&p)?.tagged() {
                        let params = FamilyParams::with_ring(a, ring);
                        solutions.push(self.verify(&params, &y0, y1, y2, &eps, sign)?);
                    }
                }
                self.analyses.push(PairAnalysis {
                    pair: label.clone(),
                    reading: None,
                    a: None,
                    epsilon: eps.to_string(),
                    ring: format!("d={}", ring.d()),
                    unknown: "a".into(),
                    rel_index: None,
                    j: Some(j.to_string()),
                    y0_cubed_divides: None,
                    equations_solved: solved,
                    solutions,
                    status,
                });
            }
        }
        Ok(())
    }

    fn generators(&self) -> Vec<GeneratorRecord> {
        self.records.values().cloned().collect()
    }
}

fn split_reproduced(
    found: Vec<GeneratorRecord>,
    earlier: &[GeneratorRecord],
) -> (Vec<GeneratorRecord>, Vec<GeneratorRecord>) {
    let keys: BTreeSet<_> = earlier.iter().map(GeneratorRecord::class_key).collect();
    found.into_iter().partition(|r| !keys.contains(&r.class_key()))
}

fn compare_theorem2(found: &[GeneratorRecord]) -> Theorem2Comparison {
    let expected: BTreeSet<(BigInt, ThetaCoords)> = theorem2_entries()
        .iter()
        .map(|e| (BigInt::from(e.a), e.coords().canonical()))
        .collect();
    let got: BTreeSet<(BigInt, ThetaCoords)> = found
        .iter()
        .filter(|r| r.d() == 1)
        .map(|r| (r.a.clone(), r.coords.clone()))
        .collect();
    let show = |(a, c): &(BigInt, ThetaCoords)| format!("a={a} {c}");
    let missing: Vec<String> = expected.difference(&got).map(show).collect();
    let extra: Vec<String> = got.difference(&expected).map(show).collect();
    Theorem2Comparison {
        expected_classes: expected.len(),
        found_classes: got.len(),
        matches: missing.is_empty() && extra.is_empty(),
        missing,
        extra,
    }
}

/// Runs one of the fixed-ring or fixed-parameter case analyses.
///
/// Scopes II to III.1 solve `J = ±1` in `a` for each `|y0| <= y_max`, so
/// their completeness in `y0` is bounded. Scope IV is exact in `y0` and `d`.
pub fn case_d1_d3_analysis(scope: Scope, y_max: u32) -> Result<CaseReport> {
    let mut notes = Vec::new();
    let (scan, reproduced_from, earlier) = match scope {
        Scope::II | Scope::II1 => {
            let ring = RingDesc::new(1)?;
            let mut scan = Scan::new();
            if scope == Scope::II {
                scan.fixed_d(ring, &catalog_pairs(ring, Applicability::Gaussian), y_max)?;
                (scan, None, Vec::new())
            } else {
                scan.fixed_d(ring, &rational_pairs(ring), y_max)?;
                notes.push(
                    "i times a rational pair is a Gaussian pair up to sign, so the unit twist by i reproduces case II"
                        .into(),
                );
                let earlier = case_d1_d3_analysis(Scope::II, y_max)?.generators;
                (scan, Some(Scope::II), earlier)
            }
        }
        Scope::III | Scope::III1 => {
            let ring = RingDesc::new(3)?;
            let mut scan = Scan::new();
            if scope == Scope::III {
                scan.fixed_d(ring, &catalog_pairs(ring, Applicability::Eisenstein), y_max)?;
                (scan, None, Vec::new())
            } else {
                scan.fixed_d(ring, &rational_pairs(ring), y_max)?;
                notes.push(
                    "unit multiples of rational pairs are Eisenstein pairs up to sign, so the twists reproduce case III"
                        .into(),
                );
                let earlier = case_d1_d3_analysis(Scope::III, y_max)?.generators;
                (scan, Some(Scope::III), earlier)
            }
        }
        Scope::IV => {
            notes.push(
                "fixed-parameter triples are read as printed and under the parameter shift that the tabulated-solution audit validates"
                    .into(),
            );
            (case_iv()?, None, Vec::new())
        }
    };
    let all_verified = scan.all_verified;
    let (generators, reproduced) = split_reproduced(scan.generators(), &earlier);
    let theorem2 = (scope == Scope::II).then(|| compare_theorem2(&generators));
    let completeness = match scope {
        Scope::IV => "exact: every square-free d and every y0".to_string(),
        _ => format!("bounded: |y0| <= {y_max}, every integer a"),
    };
    let ok = all_verified
        && match &theorem2 {
            Some(t) => t.matches,
            None => generators.is_empty(),
        };
    Ok(CaseReport {
        scope,
        completeness,
        analyses: scan.analyses,
        generators,
        reproduced_from,
        reproduced,
        theorem2,
        all_verified,
        notes,
        verdict: if ok { Verdict::Pass } else { Verdict::Flagged },
    })
}

/// Readings of the fixed-parameter triples: as printed, and under every
/// shift hypothesis that turns all of them into Thue solutions.
fn iv_readings() -> Result<Vec<(String, i64)>> {
    let audit = crate::catalog::audit_lemma1(&Hypothesis::ALL)?;
    let mut readings = vec![("printed".to_string(), 0)];
    for h in Hypothesis::ALL {
        if h.shift() != 0 && audit.common_dependent_hypotheses().contains(&h.to_string()) {
            readings.push((h.to_string(), h.shift()));
        }
    }
    Ok(readings)
}

fn case_iv() -> Result<Scan> {
    let mut scan = Scan::new();
    let ring1 = RingDesc::new(1)?;
    let readings = iv_readings()?;
    for entry in lemma1_entries().iter().filter(|e| e.pair.provenance == Provenance::Lemma1Dependent) {
        let printed_a = entry.fixed_a().expect("fixed a");
        for (reading, shift) in &readings {
            let a = printed_a + shift;
            let y1 = entry.pair.y1.clone();
            let y2 = entry.pair.y2.clone();
            let base = PairAnalysis {
                pair: entry.text.to_string(),
                reading: Some(reading.clone()),
                a: Some(a.clone()),
                epsilon: String::new(),
                ring: String::new(),
                unknown: String::new(),
                rel_index: None,
                j: None,
                y0_cubed_divides: None,
                equations_solved: 0,
                solutions: Vec::new(),
                status: String::new(),
            };
            let (x1, x2) = xy_transform(&a, &y1, &y2)?;
            let rel = rel_index(&FamilyParams::with_ring(a.clone(), ring1), &x1, &x2)?;
            if !rel.is_one() {
                scan.analyses.push(PairAnalysis {
                    rel_index: Some(rel.clone()),
                    status: format!("excluded: relative index {rel} for every d and unit"),
                    ..base
                });
                continue;
            }
            for (sym, name) in [(SymbolicCase::BranchA, "branch A, d free"), (SymbolicCase::BranchB, "branch B, e free")] {
                for eps in [1i64, -1] {
                    let analysis = iv_symbolic(&mut scan, &base, sym, name, &a, &y1, &y2, eps)?;
                    scan.analyses.push(PairAnalysis { rel_index: Some(rel.clone()), ..analysis });
                }
            }
            for d in [1u64, 3] {
                let ring = RingDesc::new(d)?;
                for eps in ring.units_mod_sign().into_iter().filter(|e| !e.is_rational()) {
                    let j = symbolic_j(SymbolicCase::FixedD(d), Some(&a), &y1.in_ring(ring)?, &y2.in_ring(ring)?, &eps)?;
                    let p = to_univariate(&j, Var::Y0)?;
                    let params = FamilyParams::with_ring(a.clone(), ring);
                    let mut solutions = Vec::new();
                    for (y0, sign) in solve_poly_pm1(&p)?.tagged() {
                        solutions.push(scan.verify(&params, &y0, &y1, &y2, &eps, sign)?);
                    }
                    scan.analyses.push(PairAnalysis {
                        epsilon: eps.to_string(),
                        ring: format!("d={d}"),
                        unknown: "y0".into(),
                        rel_index: Some(rel.clone()),
                        j: Some(j.to_string()),
                        equations_solved: 2,
                        solutions,
                        status: "solved".into(),
                        ..base.clone()
                    });
                }
            }
        }
    }
    Ok(scan)
}

/// Rational pair with `eps = ±1` over a whole branch: `y0^3 | J` forces
/// `y0 = ±1`, leaving `J(d, ±1) = ±1` to solve in the ring variable.
#[allow(clippy::too_many_arguments)]
fn iv_symbolic(
    scan: &mut Scan,
    base: &PairAnalysis,
    sym: SymbolicCase,
    name: &str,
    a: &BigInt,
    y1: &QuadInt,
    y2: &QuadInt,
    eps: i64,
) -> Result<PairAnalysis> {
    let ring1 = RingDesc::new(1)?;
    let sj = symbolic_j_detailed(sym, Some(a), y1, y2, &ring1.int(eps))?;
    let y0_cubed = MPoly::monomial(1, Monomial::var(Var::Y0, 3));
    let divides = sj.j.exact_div(&y0_cubed).is_ok();
    let var = match sym {
        SymbolicCase::BranchB => Var::E,
        _ => Var::D,
    };
    let mut solutions = Vec::new();
    let mut status = "solved".to_string();
    if !divides {
        status = "J is not divisible by y0^3".into();
        scan.all_verified = false;
    }
    for y0 in [1i64, -1] {
        let y0 = BigInt::from(y0);
        let p = to_univariate(&sj.j.eval_var(Var::Y0, &y0), var)?;
        for (v, sign) in solve_poly_pm1(&p)?.tagged() {
            let d = match sym {
                SymbolicCase::BranchB => &v * 4 - 1,
                _ => v.clone(),
            };
            let admissible = d.to_u64().is_some_and(|d| {
                RingDesc::new(d).is_ok_and(|r| sym.branch().is_ok_and(|b| b == r.branch()))
            });
            if admissible {
                let params = FamilyParams::new(a.clone(), d.to_u64().expect("admissible"))?;
                solutions.push(scan.verify(&params, &y0, y1, y2, &ring1.int(eps), sign)?);
            } else {
                solutions.push(SolvedPoint { a: a.clone(), d, y0: y0.clone(), j_value: sign, admissible: false, index: None });
            }
        }
    }
    Ok(PairAnalysis {
        epsilon: eps.to_string(),
        ring: name.to_string(),
        unknown: var.name().to_string(),
        j: Some(sj.j.to_string()),
        y0_cubed_divides: Some(divides),
        equations_solved: 4,
        solutions,
        status,
        ..base.clone()
    })
}
