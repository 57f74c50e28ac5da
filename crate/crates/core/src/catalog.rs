//! Tabulated Thue solutions and generators, with audits that re-derive every
//! row from the formula layer.
//!
//! Transcription and computation are kept apart: the tables below are copied
//! as printed, and every discrepancy surfaces as a FLAGGED row.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::bigpoly::{MPoly, Var};
use crate::error::Result;
use crate::quadring::{QuadInt, RingDesc};
use crate::report::{as_str, dec, Verdict};
use crate::sextic::{
    abs_index, thue_form, thue_form_rational_symbolic, thue_form_symbolic, AConstraint, FamilyParams, Provenance,
    SolutionPair, ThetaCoords,
};

/// Which quadratic rings an entry lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Applicability {
    /// Rational integers; valid in every ring.
    Rational,
    /// Gaussian integers, `d = 1`.
    Gaussian,
    /// Eisenstein integers, `d = 3`.
    Eisenstein,
}

impl Applicability {
    pub fn applies_to(self, d: u64) -> bool {
        match self {
            Applicability::Rational => true,
            Applicability::Gaussian => d == 1,
            Applicability::Eisenstein => d == 3,
        }
    }

    /// The ring the entry's coordinates are written in.
    fn home_ring(self) -> RingDesc {
        let d = match self {
            Applicability::Rational | Applicability::Gaussian => 1,
            Applicability::Eisenstein => 3,
        };
        RingDesc::new(d).expect("1 and 3 are square-free")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Lemma1Entry {
    /// The entry as printed.
    pub text: &'static str,
    pub pair: SolutionPair,
    pub applicability: Applicability,
}

impl Lemma1Entry {
    pub fn is_independent(&self) -> bool {
        self.pair.provenance == Provenance::Lemma1Independent
    }

    pub fn fixed_a(&self) -> Option<&BigInt> {
        match &self.pair.a_constraint {
            AConstraint::Fixed(a) => Some(a),
            AConstraint::AllA => None,
        }
    }

    /// The pair moved into `ring`, if the entry applies there.
    pub fn pair_in(&self, ring: RingDesc) -> Option<(QuadInt, QuadInt)> {
        if !self.applicability.applies_to(ring.d()) {
            return None;
        }
        Some((self.pair.y1.in_ring(ring).ok()?, self.pair.y2.in_ring(ring).ok()?))
    }
}

// (u1, v1, u2, v2) in the home ring; w = i for d = 1 and w = omega_3 for d = 3.
const INDEPENDENT: [(&str, Applicability, [i64; 4]); 12] = [
    ("(1,0)", Applicability::Rational, [1, 0, 0, 0]),
    ("(0,1)", Applicability::Rational, [0, 0, 1, 0]),
    ("(1,-1)", Applicability::Rational, [1, 0, -1, 0]),
    ("(i,-i)", Applicability::Gaussian, [0, 1, 0, -1]),
    ("(i,0)", Applicability::Gaussian, [0, 1, 0, 0]),
    ("(0,i)", Applicability::Gaussian, [0, 0, 0, 1]),
    ("(\\omega_3,-\\omega_3)", Applicability::Eisenstein, [0, 1, 0, -1]),
    ("(0,\\omega_3)", Applicability::Eisenstein, [0, 0, 0, 1]),
    ("(\\omega_3,0)", Applicability::Eisenstein, [0, 1, 0, 0]),
    ("(1-\\omega_3,0)", Applicability::Eisenstein, [1, -1, 0, 0]),
    ("(0,1-\\omega_3)", Applicability::Eisenstein, [0, 0, 1, -1]),
    ("(1-\\omega_3,-1+\\omega_3)", Applicability::Eisenstein, [1, -1, -1, 1]),
];

const DEPENDENT: [(&str, [i64; 3]); 24] = [
    ("(-3,9,-2)", [-3, 9, -2]),
    ("(-3,7,-9)", [-3, 7, -9]),
    ("(-3,2,7)", [-3, 2, 7]),
    ("(-1,3,-1)", [-1, 3, -1]),
    ("(-1,2,-3)", [-1, 2, -3]),
    ("(-1,1,2)", [-1, 1, 2]),
    ("(0,9,-4)", [0, 9, -4]),
    ("(0,5,-9)", [0, 5, -9]),
    ("(0,4,5)", [0, 4, 5]),
    ("(0,2,-1)", [0, 2, -1]),
    ("(0,1,1)", [0, 1, 1]),
    ("(0,1,-2)", [0, 1, -2]),
    ("(1,9,-5)", [1, 9, -5]),
    ("(1,5,4)", [1, 5, 4]),
    ("(1,4,-9)", [1, 4, -9]),
    ("(1,2,-1)", [1, 2, -1]),
    ("(1,1,1)", [1, 1, 1]),
    ("(1,1,-2)", [1, 1, -2]),
    ("(2,3,-2)", [2, 3, -2]),
    ("(2,2,1)", [2, 2, 1]),
    ("(2,1,-3)", [2, 1, -3]),
    ("(4,9,-7)", [4, 9, -7]),
    ("(4,7,2)", [4, 7, 2]),
    ("(4,2,-9)", [4, 2, -9]),
];

/// The 12 parameter-free pairs followed by the 24 `(a, Y1, Y2)` triples.
pub fn lemma1_entries() -> Vec<Lemma1Entry> {
    let mut out = Vec::with_capacity(36);
    for (text, applicability, [u1, v1, u2, v2]) in INDEPENDENT {
        let r = applicability.home_ring();
        out.push(Lemma1Entry {
            text,
            pair: SolutionPair::new(r.elem(u1, v1), r.elem(u2, v2), AConstraint::AllA, Provenance::Lemma1Independent),
            applicability,
        });
    }
    let r = Applicability::Rational.home_ring();
    for (text, [a, y1, y2]) in DEPENDENT {
        out.push(Lemma1Entry {
            text,
            pair: SolutionPair::new(
                r.int(y1),
                r.int(y2),
                AConstraint::Fixed(BigInt::from(a)),
                Provenance::Lemma1Dependent,
            ),
            applicability: Applicability::Rational,
        });
    }
    out
}

/// `c + k a` with Gaussian `c`, `k`: the shape of the printed `X` entries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AffineGaussian {
    pub text: &'static str,
    /// `(u, v)` of the constant part.
    pub constant: [i64; 2],
    /// `(u, v)` of the coefficient of `a`.
    pub slope: [i64; 2],
}

impl AffineGaussian {
    pub fn at(&self, a: &BigInt) -> QuadInt {
        let r = RingDesc::new(1).expect("d=1");
        let [cu, cv] = self.constant.map(BigInt::from);
        let [su, sv] = self.slope.map(BigInt::from);
        r.elem(cu + su * a, cv + sv * a)
    }
}

impl fmt::Display for AffineGaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.text)
    }
}

impl Serialize for AffineGaussian {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.text)
    }
}

const I_PLUS_AI: AffineGaussian = AffineGaussian { text: "i+ai", constant: [0, 1], slope: [0, 1] };
const MINUS_I: AffineGaussian = AffineGaussian { text: "-i", constant: [0, -1], slope: [0, 0] };
const I: AffineGaussian = AffineGaussian { text: "i", constant: [0, 1], slope: [0, 0] };
const ZERO: AffineGaussian = AffineGaussian { text: "0", constant: [0, 0], slope: [0, 0] };
const MINUS_IA: AffineGaussian = AffineGaussian { text: "-ia", constant: [0, 0], slope: [0, -1] };

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Theorem2Entry {
    #[serde(serialize_with = "as_str")]
    pub a: i64,
    #[serde(serialize_with = "as_str")]
    pub y: i64,
    pub x1: AffineGaussian,
    pub x2: AffineGaussian,
}

impl Theorem2Entry {
    pub fn params(&self) -> FamilyParams {
        FamilyParams::new(self.a, 1).expect("d=1")
    }

    /// `theta = y w + X1 alpha + X2 alpha^2` with `d = 1`.
    pub fn coords(&self) -> ThetaCoords {
        let r = RingDesc::new(1).expect("d=1");
        let a = BigInt::from(self.a);
        ThetaCoords::from_relative(&r.elem(0, self.y), &self.x1.at(&a), &self.x2.at(&a))
    }
}

impl fmt::Display for Theorem2Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.a, self.y, self.x1, self.x2)
    }
}

const THEOREM2: [(i64, i64, AffineGaussian, AffineGaussian); 24] = [
    (-3, 1, I_PLUS_AI, MINUS_I),
    (-2, 1, I_PLUS_AI, MINUS_I),
    (-1, 1, I_PLUS_AI, MINUS_I),
    (0, 1, I_PLUS_AI, MINUS_I),
    (-3, 2, I_PLUS_AI, MINUS_I),
    (-2, 2, I_PLUS_AI, MINUS_I),
    (-1, 2, I_PLUS_AI, MINUS_I),
    (0, 2, I_PLUS_AI, MINUS_I),
    (-3, 1, I, ZERO),
    (-2, 1, I, ZERO),
    (-1, 1, I, ZERO),
    (0, 1, I, ZERO),
    (-3, 0, I, ZERO),
    (-2, 0, I, ZERO),
    (-1, 0, I, ZERO),
    (0, 0, I, ZERO),
    (-2, 0, MINUS_IA, I),
    (-1, -1, MINUS_IA, I),
    (0, -2, MINUS_IA, I),
    (-3, 1, MINUS_IA, I),
    (0, -3, MINUS_IA, I),
    (-3, 0, MINUS_IA, I),
    (-1, -2, MINUS_IA, I),
    (-2, -1, MINUS_IA, I),
];

pub fn theorem2_entries() -> Vec<Theorem2Entry> {
    THEOREM2
        .iter()
        .map(|&(a, y, x1, x2)| Theorem2Entry { a, y, x1, x2 })
        .collect()
}

/// A reinterpretation of a tabulated `(a, Y1, Y2)` before evaluating the form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Hypothesis {
    Identity,
    /// Evaluate at `a + s`.
    Shift(i8),
    /// `(Y1, Y2) -> (Y2, Y1)`.
    Swap,
    /// `(Y1, Y2) -> (-Y1, Y2)`.
    FlipY1,
    /// `(Y1, Y2) -> (Y1, -Y2)`.
    FlipY2,
}

impl Hypothesis {
    pub const ALL: [Hypothesis; 8] = [
        Hypothesis::Identity,
        Hypothesis::Shift(1),
        Hypothesis::Shift(-1),
        Hypothesis::Shift(2),
        Hypothesis::Shift(-2),
        Hypothesis::Swap,
        Hypothesis::FlipY1,
        Hypothesis::FlipY2,
    ];

    pub fn shift(self) -> i64 {
        match self {
            Hypothesis::Shift(s) => s as i64,
            _ => 0,
        }
    }

    /// Applies the coordinate part of the hypothesis.
    pub fn pair(self, y1: &QuadInt, y2: &QuadInt) -> (QuadInt, QuadInt) {
        match self {
            Hypothesis::Swap => (y2.clone(), y1.clone()),
            Hypothesis::FlipY1 => (y1.neg(), y2.clone()),
            Hypothesis::FlipY2 => (y1.clone(), y2.neg()),
            Hypothesis::Identity | Hypothesis::Shift(_) => (y1.clone(), y2.clone()),
        }
    }

    pub fn parse(s: &str) -> Option<Hypothesis> {
        Some(match s {
            "identity" => Hypothesis::Identity,
            "shift+1" => Hypothesis::Shift(1),
            "shift-1" => Hypothesis::Shift(-1),
            "shift+2" => Hypothesis::Shift(2),
            "shift-2" => Hypothesis::Shift(-2),
            "swap" => Hypothesis::Swap,
            "flip-y1" => Hypothesis::FlipY1,
            "flip-y2" => Hypothesis::FlipY2,
            _ => return None,
        })
    }
}

impl fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Hypothesis::Identity => f.write_str("identity"),
            Hypothesis::Shift(s) => write!(f, "shift{s:+}"),
            Hypothesis::Swap => f.write_str("swap"),
            Hypothesis::FlipY1 => f.write_str("flip-y1"),
            Hypothesis::FlipY2 => f.write_str("flip-y2"),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AuditRow {
    pub entry: &'static str,
    pub provenance: Provenance,
    pub applicability: Applicability,
    #[serde(serialize_with = "as_str")]
    pub hypothesis: Hypothesis,
    /// The evaluated form, a polynomial in `a` for parameter-free entries.
    pub value: String,
    /// Its norm; `1` exactly when the value is a unit.
    pub norm: String,
    pub is_unit: bool,
    pub verdict: Verdict,
}

/// Per-entry summary: which hypotheses turn the entry into a unit.
#[derive(Debug, Clone, Serialize)]
pub struct EntryVerdict {
    pub entry: &'static str,
    pub provenance: Provenance,
    pub validated_by: Vec<String>,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, Serialize)]
pub struct AuditReport {
    pub hypotheses: Vec<String>,
    pub rows: Vec<AuditRow>,
    pub entries: Vec<EntryVerdict>,
}

impl AuditReport {
    pub fn verdict(&self) -> Verdict {
        self.rows.iter().fold(Verdict::Pass, |v, r| v.and(r.verdict))
    }

    pub fn row(&self, entry: &str, h: Hypothesis) -> Option<&AuditRow> {
        self.rows.iter().find(|r| r.entry == entry && r.hypothesis == h)
    }

    /// Hypotheses that validate every parameter-dependent entry.
    pub fn common_dependent_hypotheses(&self) -> Vec<String> {
        let dependent: Vec<&EntryVerdict> =
            self.entries.iter().filter(|e| e.provenance == Provenance::Lemma1Dependent).collect();
        self.hypotheses
            .iter()
            .filter(|h| dependent.iter().all(|e| e.validated_by.contains(h)))
            .cloned()
            .collect()
    }
}

/// Evaluates each entry under each hypothesis. Parameter-free entries are
/// evaluated with `a` symbolic, so a PASS there is a polynomial identity.
pub fn audit_lemma1(modes: &[Hypothesis]) -> Result<AuditReport> {
    let mut rows = Vec::new();
    let mut entries = Vec::new();
    for entry in lemma1_entries() {
        let mut validated_by = Vec::new();
        for &h in modes {
            let row = audit_one(&entry, h)?;
            if row.is_unit {
                validated_by.push(h.to_string());
            }
            rows.push(row);
        }
        let verdict = if validated_by.is_empty() { Verdict::Flagged } else { Verdict::Pass };
        entries.push(EntryVerdict {
            entry: entry.text,
            provenance: entry.pair.provenance.clone(),
            validated_by,
            verdict,
        });
    }
    Ok(AuditReport {
        hypotheses: modes.iter().map(ToString::to_string).collect(),
        rows,
        entries,
    })
}

fn audit_one(entry: &Lemma1Entry, h: Hypothesis) -> Result<AuditRow> {
    let (y1, y2) = h.pair(&entry.pair.y1, &entry.pair.y2);
    let shift = BigInt::from(h.shift());
    let (value, norm) = match entry.fixed_a() {
        Some(a) => {
            let v = thue_form(&(a + &shift), &y1, &y2)?;
            let n = v.norm();
            (v.to_string(), MPoly::constant(n))
        }
        None if entry.applicability == Applicability::Rational => {
            let v = thue_form_rational_symbolic(&y1.u, &y2.u);
            let v = v.substitute(Var::A, &(&MPoly::var(Var::A) + &MPoly::constant(shift)));
            let n = &v * &v;
            (v.to_string(), n)
        }
        None => {
            let qr = y1.ring().symbolic_ring();
            let v = thue_form_symbolic(&y1, &y2)?;
            let shifted = &MPoly::var(Var::A) + &MPoly::constant(shift);
            let v = crate::quadring::Quad::new(v.u.substitute(Var::A, &shifted), v.v.substitute(Var::A, &shifted));
            let n = qr.norm(&v);
            (format!("({})+({})*w", v.u, v.v), n)
        }
    };
    let is_unit = norm.constant_value().is_some_and(|n| n.is_one());
    Ok(AuditRow {
        entry: entry.text,
        provenance: entry.pair.provenance.clone(),
        applicability: entry.applicability,
        hypothesis: h,
        value,
        norm: norm.to_string(),
        is_unit,
        verdict: if is_unit { Verdict::Pass } else { Verdict::Flagged },
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationRow {
    pub entry: String,
    #[serde(serialize_with = "as_str")]
    pub a: i64,
    pub x1: QuadInt,
    pub x2: QuadInt,
    pub coords: ThetaCoords,
    #[serde(serialize_with = "dec")]
    pub index: BigInt,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub rows: Vec<VerificationRow>,
    pub verdict: Verdict,
}

pub fn verify_theorem2() -> Result<VerificationReport> {
    verify_entries(&theorem2_entries())
}

/// Computes the absolute index of `y w + X1 alpha + X2 alpha^2` for each entry.
pub fn verify_entries(entries: &[Theorem2Entry]) -> Result<VerificationReport> {
    let mut rows = Vec::with_capacity(entries.len());
    for e in entries {
        let a = BigInt::from(e.a);
        let coords = e.coords();
        let index = abs_index(&e.params(), &coords)?;
        let verdict = Verdict::from_bool(index.is_one());
        rows.push(VerificationRow {
            entry: e.to_string(),
            a: e.a,
            x1: e.x1.at(&a),
            x2: e.x2.at(&a),
            coords,
            index,
            verdict,
        });
    }
    let verdict = rows.iter().fold(Verdict::Pass, |v, r| v.and(r.verdict));
    Ok(VerificationReport { rows, verdict })
}

#[derive(Debug, Clone, Serialize)]
pub struct Lemma1CsvRow {
    pub entry: &'static str,
    pub provenance: Provenance,
    pub applicability: Applicability,
    pub a: String,
    pub y1: QuadInt,
    pub y2: QuadInt,
}

#[derive(Debug, Clone, Serialize)]
pub struct Theorem2CsvRow {
    pub entry: String,
    #[serde(serialize_with = "as_str")]
    pub a: i64,
    #[serde(serialize_with = "as_str")]
    pub y: i64,
    pub x1_printed: &'static str,
    pub x2_printed: &'static str,
    pub x1: QuadInt,
    pub x2: QuadInt,
    pub coords: String,
}

pub fn lemma1_rows() -> Vec<Lemma1CsvRow> {
    lemma1_entries()
        .into_iter()
        .map(|e| Lemma1CsvRow {
            entry: e.text,
            a: e.fixed_a().map_or_else(|| "all".to_string(), ToString::to_string),
            provenance: e.pair.provenance,
            applicability: e.applicability,
            y1: e.pair.y1,
            y2: e.pair.y2,
        })
        .collect()
}

pub fn theorem2_rows() -> Vec<Theorem2CsvRow> {
    theorem2_entries()
        .into_iter()
        .map(|e| {
            let a = BigInt::from(e.a);
            Theorem2CsvRow {
                entry: e.to_string(),
                a: e.a,
                y: e.y,
                x1_printed: e.x1.text,
                x2_printed: e.x2.text,
                x1: e.x1.at(&a),
                x2: e.x2.at(&a),
                coords: e.coords().to_string(),
            }
        })
        .collect()
}

/// Canonical class keys of the tabulated generators with the given `a`.
pub fn theorem2_classes(a: i64) -> Vec<ThetaCoords> {
    let mut v: Vec<ThetaCoords> = theorem2_entries()
        .iter()
        .filter(|e| e.a == a)
        .map(|e| e.coords().canonical())
        .collect();
    v.sort();
    v.dedup();
    v
}
