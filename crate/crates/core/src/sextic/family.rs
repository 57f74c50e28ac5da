use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::bigpoly::{discriminant_in, UPoly};
use crate::error::{Error, Result};
use crate::quadring::{QuadInt, RingDesc};
use crate::report::dec;
use crate::ring::{Integers, Ring};

/// The family parameters: `a` selects the simplest cubic, `d` the imaginary
/// quadratic base field.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FamilyParams {
    pub a: BigInt,
    ring: RingDesc,
}

impl FamilyParams {
    pub fn new(a: impl Into<BigInt>, d: u64) -> Result<Self> {
        Ok(FamilyParams { a: a.into(), ring: RingDesc::new(d)? })
    }

    pub fn with_ring(a: impl Into<BigInt>, ring: RingDesc) -> Self {
        FamilyParams { a: a.into(), ring }
    }

    pub fn d(&self) -> u64 {
        self.ring.d()
    }

    pub fn ring(&self) -> RingDesc {
        self.ring
    }

    /// `K = a^2 + 3a + 9`; `D(f) = K^2`.
    pub fn k_val(&self) -> BigInt {
        &self.a * &self.a + &self.a * 3 + 9
    }

    /// Sufficient condition for `{1, alpha, alpha^2}` to be an integral basis
    /// of the cubic field. Only a hint: the converse does not hold.
    pub fn k_square_free_hint(&self) -> bool {
        use num_traits::ToPrimitive;
        self.k_val().to_u64().is_some_and(crate::quadring::is_square_free)
    }
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a={}, d={}", self.a, self.ring.d())
    }
}

pub(crate) fn cubic_in<R: Ring>(base: &R, a: &R::Elem) -> Vec<R::Elem> {
    let a3 = base.add(a, &base.from_i64(3));
    vec![base.from_i64(-1), base.neg(&a3), base.neg(a), base.one()]
}

/// `f(x) = x^3 - a x^2 - (a+3) x - 1` and its discriminant.
pub fn simplest_cubic_and_disc(a: &BigInt) -> (UPoly<BigInt>, BigInt) {
    let ring = crate::bigpoly::PolyRing::new(Integers);
    let f = ring.from_coeffs(cubic_in(&Integers, a));
    let disc = discriminant_in(&Integers, &f).expect("f is monic of degree 3");
    (f, disc)
}

/// `D_O = D(f)^2 * D_M^3`.
pub fn order_disc(params: &FamilyParams) -> BigInt {
    let k = params.k_val();
    let dm = params.ring().field_disc();
    k.pow(4) * dm.pow(3)
}

/// `X1 = Y1 - a Y2`, `X2 = Y2`.
pub fn xy_transform(a: &BigInt, y1: &QuadInt, y2: &QuadInt) -> Result<(QuadInt, QuadInt)> {
    let x1 = y1.sub(&y2.scale(a))?;
    Ok((x1, y2.clone()))
}

/// `Y1 = X1 + a X2`, `Y2 = X2`.
pub fn xy_inverse(a: &BigInt, x1: &QuadInt, x2: &QuadInt) -> Result<(QuadInt, QuadInt)> {
    let y1 = x1.add(&x2.scale(a))?;
    Ok((y1, x2.clone()))
}

/// Coordinates of `theta = x0 + x1 alpha + x2 alpha^2 + y0 w + y1 w alpha +
/// y2 w alpha^2` in the basis of the order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ThetaCoords {
    #[serde(serialize_with = "dec")]
    pub x0: BigInt,
    #[serde(serialize_with = "dec")]
    pub x1: BigInt,
    #[serde(serialize_with = "dec")]
    pub x2: BigInt,
    #[serde(serialize_with = "dec")]
    pub y0: BigInt,
    #[serde(serialize_with = "dec")]
    pub y1: BigInt,
    #[serde(serialize_with = "dec")]
    pub y2: BigInt,
}

impl ThetaCoords {
    pub fn new(c: [i64; 6]) -> Self {
        let [x0, x1, x2, y0, y1, y2] = c.map(BigInt::from);
        ThetaCoords { x0, x1, x2, y0, y1, y2 }
    }

    pub fn from_array(c: [BigInt; 6]) -> Self {
        let [x0, x1, x2, y0, y1, y2] = c;
        ThetaCoords { x0, x1, x2, y0, y1, y2 }
    }

    pub fn to_array(&self) -> [BigInt; 6] {
        [
            self.x0.clone(),
            self.x1.clone(),
            self.x2.clone(),
            self.y0.clone(),
            self.y1.clone(),
            self.y2.clone(),
        ]
    }

    /// Builds coordinates from the relative view `c0 + c1 alpha + c2 alpha^2`.
    pub fn from_relative(c0: &QuadInt, c1: &QuadInt, c2: &QuadInt) -> Self {
        ThetaCoords {
            x0: c0.u.clone(),
            x1: c1.u.clone(),
            x2: c2.u.clone(),
            y0: c0.v.clone(),
            y1: c1.v.clone(),
            y2: c2.v.clone(),
        }
    }

    /// `(c0, c1, c2)` with `ci = xi + yi w`.
    pub fn relative(&self, ring: RingDesc) -> [QuadInt; 3] {
        [
            ring.elem(self.x0.clone(), self.y0.clone()),
            ring.elem(self.x1.clone(), self.y1.clone()),
            ring.elem(self.x2.clone(), self.y2.clone()),
        ]
    }

    /// Representative of `{±theta + t : t in Z}`: `x0 = 0` and the first
    /// nonzero remaining coordinate positive.
    pub fn canonical(&self) -> ThetaCoords {
        let mut c = self.clone();
        c.x0 = BigInt::zero();
        let first = c.to_array().into_iter().find(|v| !v.is_zero());
        if first.is_some_and(|v| v.is_negative()) {
            c = ThetaCoords::from_array(c.to_array().map(|v| -v));
        }
        c
    }

    /// Accepts `x0,x1,x2,y0,y1,y2`, optionally in parentheses.
    pub fn parse(s: &str) -> Result<Self> {
        let inner = s.trim();
        let inner = inner.strip_prefix('(').and_then(|r| r.strip_suffix(')')).unwrap_or(inner);
        let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
        if parts.len() != 6 {
            return Err(Error::Parse(format!(
                "expected six comma-separated integers x0,x1,x2,y0,y1,y2, got {s:?}"
            )));
        }
        let mut out: [BigInt; 6] = Default::default();
        for (slot, p) in out.iter_mut().zip(parts) {
            *slot = p
                .parse()
                .map_err(|_| Error::Parse(format!("invalid integer {p:?} in coordinates")))?;
        }
        Ok(ThetaCoords::from_array(out))
    }
}

impl fmt::Display for ThetaCoords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{},{},{},{},{})",
            self.x0, self.x1, self.x2, self.y0, self.y1, self.y2
        )
    }
}
