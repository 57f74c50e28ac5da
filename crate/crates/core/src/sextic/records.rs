use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::Result;
use crate::quadring::{QuadInt, RingDesc, RingTag};
use crate::report::dec;
use crate::sextic::family::{FamilyParams, ThetaCoords};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    Lemma1Independent,
    Lemma1Dependent,
    BruteForce,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AConstraint {
    AllA,
    Fixed(#[serde(serialize_with = "dec")] BigInt),
}

/// A solution `(Y1, Y2)` of the relative Thue equation, kept as the
/// representative of its sign orbit `{(Y1, Y2), (-Y1, -Y2)}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SolutionPair {
    pub y1: QuadInt,
    pub y2: QuadInt,
    pub a_constraint: AConstraint,
    pub provenance: Provenance,
}

impl SolutionPair {
    pub fn new(y1: QuadInt, y2: QuadInt, a_constraint: AConstraint, provenance: Provenance) -> Self {
        SolutionPair { y1, y2, a_constraint, provenance }
    }

    pub fn ring(&self) -> RingDesc {
        self.y1.ring()
    }

    fn key(&self) -> [&BigInt; 4] {
        [&self.y1.u, &self.y1.v, &self.y2.u, &self.y2.v]
    }

    pub fn is_normalized(&self) -> bool {
        self.key().into_iter().find(|c| !c.is_zero()).is_none_or(|c| c.is_positive())
    }

    /// Flips the global sign so the first nonzero of `(u1, v1, u2, v2)` is
    /// positive.
    pub fn normalized(mut self) -> Self {
        if !self.is_normalized() {
            self.y1 = self.y1.neg();
            self.y2 = self.y2.neg();
        }
        self
    }

    pub fn sort_key(&self) -> [BigInt; 4] {
        self.key().map(Clone::clone)
    }
}

impl fmt::Display for SolutionPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.y1, self.y2)
    }
}

/// A verified generator `theta = y0 w + eps (X1 alpha + X2 alpha^2)` of a
/// power integral basis, with its canonical coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct GeneratorRecord {
    #[serde(serialize_with = "dec")]
    pub a: BigInt,
    pub ring: RingTag,
    #[serde(serialize_with = "dec")]
    pub y0: BigInt,
    pub x1: QuadInt,
    pub x2: QuadInt,
    pub epsilon: QuadInt,
    #[serde(serialize_with = "dec")]
    pub index: BigInt,
    pub coords: ThetaCoords,
    #[serde(skip)]
    d: u64,
}

impl GeneratorRecord {
    pub fn new(
        params: &FamilyParams,
        y0: BigInt,
        x1: QuadInt,
        x2: QuadInt,
        epsilon: QuadInt,
        index: BigInt,
    ) -> Result<Self> {
        let ring = params.ring();
        let c1 = epsilon.mul(&x1)?;
        let c2 = epsilon.mul(&x2)?;
        let c0 = ring.elem(0, y0.clone());
        let coords = ThetaCoords::from_relative(&c0, &c1, &c2).canonical();
        Ok(GeneratorRecord {
            a: params.a.clone(),
            ring: ring.tag(),
            y0,
            x1,
            x2,
            epsilon,
            index,
            coords,
            d: ring.d(),
        })
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn params(&self) -> FamilyParams {
        FamilyParams::with_ring(self.a.clone(), RingDesc::new(self.d).expect("validated at construction"))
    }

    /// Identifies the equivalence class `{±theta + t}` within its field.
    pub fn class_key(&self) -> (BigInt, u64, ThetaCoords) {
        (self.a.clone(), self.d, self.coords.clone())
    }
}

impl PartialOrd for GeneratorRecord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GeneratorRecord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.class_key()
            .cmp(&other.class_key())
            .then_with(|| self.epsilon.to_string().cmp(&other.epsilon.to_string()))
            .then_with(|| self.x1.to_string().cmp(&other.x1.to_string()))
            .then_with(|| self.x2.to_string().cmp(&other.x2.to_string()))
            .then_with(|| self.y0.cmp(&other.y0))
    }
}
