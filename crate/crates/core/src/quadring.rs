//! The ring of integers of `M = Q(sqrt(-d))`, in the basis `(1, w)`.
//!
//! Branch A (`-d = 2, 3 mod 4`): `w = sqrt(-d)`, `w^2 = -d`.
//! Branch B (`-d = 1 mod 4`): `w = (1 + sqrt(-d))/2`, `w^2 = w - e` with
//! `e = (1 + d)/4`.
//!
//! [`QuadRing`] is the generic structure used by the symbolic engine (its
//! components may be polynomials); [`QuadInt`] is the concrete integer element
//! that carries its ring descriptor.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::bigpoly::{MPoly, MPolyRing, Var};
use crate::error::{Error, Result};
use crate::ring::{Integers, Ring};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Branch {
    A,
    B,
}

/// A quadratic integer `u + v*w` with components in some base ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Quad<E> {
    pub u: E,
    pub v: E,
}

impl<E> Quad<E> {
    pub fn new(u: E, v: E) -> Self {
        Quad { u, v }
    }
}

/// Quadratic extension of a base ring by `w` with `w^2 = -k` (branch A) or
/// `w^2 = w - k` (branch B). Numerically `k` is `d` or `e`; symbolically it
/// is the free variable `d` or `e`, or a constant.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadRing<R: Ring> {
    pub base: R,
    pub branch: Branch,
    pub k: R::Elem,
}

impl<R: Ring> QuadRing<R> {
    pub fn new(base: R, branch: Branch, k: R::Elem) -> Self {
        QuadRing { base, branch, k }
    }

    pub fn elem(&self, u: R::Elem, v: R::Elem) -> Quad<R::Elem> {
        Quad { u, v }
    }

    pub fn embed(&self, x: R::Elem) -> Quad<R::Elem> {
        Quad { u: x, v: self.base.zero() }
    }

    pub fn omega(&self) -> Quad<R::Elem> {
        Quad { u: self.base.zero(), v: self.base.one() }
    }

    pub fn conj(&self, x: &Quad<R::Elem>) -> Quad<R::Elem> {
        let b = &self.base;
        match self.branch {
            Branch::A => Quad { u: x.u.clone(), v: b.neg(&x.v) },
            Branch::B => Quad { u: b.add(&x.u, &x.v), v: b.neg(&x.v) },
        }
    }

    /// `x * conj(x)`, an element of the base ring.
    pub fn norm(&self, x: &Quad<R::Elem>) -> R::Elem {
        let b = &self.base;
        let uu = b.mul(&x.u, &x.u);
        let kvv = b.mul(&self.k, &b.mul(&x.v, &x.v));
        match self.branch {
            Branch::A => b.add(&uu, &kvv),
            Branch::B => b.add(&b.add(&uu, &b.mul(&x.u, &x.v)), &kvv),
        }
    }

    /// Writes a purely imaginary element (`conj(x) = -x`) as `s * r` with
    /// `s = w` in branch A and `s = 2w - 1` in branch B, returning `r`.
    pub fn imaginary_part(&self, x: &Quad<R::Elem>) -> Result<R::Elem> {
        let b = &self.base;
        match self.branch {
            Branch::A => {
                if !b.is_zero(&x.u) {
                    return Err(Error::InternalInconsistency(
                        "expected a multiple of w: real component is nonzero".into(),
                    ));
                }
                Ok(x.v.clone())
            }
            Branch::B => {
                // r*(2w - 1) = -r + 2r*w
                let r = b.neg(&x.u);
                if b.add(&r, &r) != x.v {
                    return Err(Error::InternalInconsistency(
                        "expected a multiple of 2w-1: components are not in ratio -1:2".into(),
                    ));
                }
                Ok(r)
            }
        }
    }
}

impl<R: Ring> Ring for QuadRing<R> {
    type Elem = Quad<R::Elem>;

    fn zero(&self) -> Self::Elem {
        self.embed(self.base.zero())
    }
    fn one(&self) -> Self::Elem {
        self.embed(self.base.one())
    }
    fn from_int(&self, n: &BigInt) -> Self::Elem {
        self.embed(self.base.from_int(n))
    }
    fn is_zero(&self, x: &Self::Elem) -> bool {
        self.base.is_zero(&x.u) && self.base.is_zero(&x.v)
    }
    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        Quad { u: self.base.add(&x.u, &y.u), v: self.base.add(&x.v, &y.v) }
    }
    fn sub(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        Quad { u: self.base.sub(&x.u, &y.u), v: self.base.sub(&x.v, &y.v) }
    }
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        let b = &self.base;
        let uu = b.mul(&x.u, &y.u);
        let vv = b.mul(&x.v, &y.v);
        let cross = b.add(&b.mul(&x.u, &y.v), &b.mul(&x.v, &y.u));
        let u = b.sub(&uu, &b.mul(&self.k, &vv));
        let v = match self.branch {
            Branch::A => cross,
            Branch::B => b.add(&cross, &vv),
        };
        Quad { u, v }
    }
    fn neg(&self, x: &Self::Elem) -> Self::Elem {
        Quad { u: self.base.neg(&x.u), v: self.base.neg(&x.v) }
    }
    fn exact_div(&self, x: &Self::Elem, y: &Self::Elem) -> Result<Self::Elem> {
        let n = self.norm(y);
        let num = self.mul(x, &self.conj(y));
        Ok(Quad {
            u: self.base.exact_div(&num.u, &n)?,
            v: self.base.exact_div(&num.v, &n)?,
        })
    }
}

/// Descriptor of `Z_M` for a concrete square-free `d >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RingDesc {
    d: u64,
    branch: Branch,
}

impl RingDesc {
    pub fn new(d: u64) -> Result<Self> {
        if d == 0 {
            return Err(Error::NonPositiveD);
        }
        if !is_square_free(d) {
            return Err(Error::NotSquareFree(d));
        }
        let branch = if d % 4 == 3 { Branch::B } else { Branch::A };
        Ok(RingDesc { d, branch })
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn branch(&self) -> Branch {
        self.branch
    }

    /// `(1 + d)/4`, branch B only.
    pub fn e(&self) -> Option<u64> {
        (self.branch == Branch::B).then(|| (self.d + 1) / 4)
    }

    /// Field discriminant `D_M`: `-4d` in branch A, `-d` in branch B.
    pub fn field_disc(&self) -> BigInt {
        match self.branch {
            Branch::A => BigInt::from(self.d) * -4,
            Branch::B => -BigInt::from(self.d),
        }
    }

    fn k(&self) -> u64 {
        self.e().unwrap_or(self.d)
    }

    pub fn quad_ring(&self) -> QuadRing<Integers> {
        QuadRing::new(Integers, self.branch, BigInt::from(self.k()))
    }

    /// The same ring with polynomial components (constant `k`).
    pub fn symbolic_ring(&self) -> QuadRing<MPolyRing> {
        QuadRing::new(MPolyRing, self.branch, MPoly::constant(self.k()))
    }

    pub fn elem(&self, u: impl Into<BigInt>, v: impl Into<BigInt>) -> QuadInt {
        QuadInt { u: u.into(), v: v.into(), ring: *self }
    }

    pub fn int(&self, u: impl Into<BigInt>) -> QuadInt {
        self.elem(u, 0)
    }

    pub fn omega(&self) -> QuadInt {
        self.elem(0, 1)
    }

    pub fn from_quad(&self, q: Quad<BigInt>) -> QuadInt {
        QuadInt { u: q.u, v: q.v, ring: *self }
    }

    /// The unit group: `{±1, ±i}` for d = 1, the sixth roots of unity for
    /// d = 3, `{±1}` otherwise.
    pub fn units(&self) -> Vec<QuadInt> {
        match self.d {
            1 => vec![self.elem(1, 0), self.elem(0, 1), self.elem(-1, 0), self.elem(0, -1)],
            3 => {
                let w = self.omega();
                let w2 = w.mul_unchecked(&w);
                vec![self.int(1), w.clone(), w2.clone(), self.int(-1), w.neg(), w2.neg()]
            }
            _ => vec![self.int(1), self.int(-1)],
        }
    }

    /// Unit representatives up to sign: `{1, i}`, `{1, w, w^2}` or `{1}`.
    pub fn units_mod_sign(&self) -> Vec<QuadInt> {
        let units = self.units();
        units[..units.len() / 2].to_vec()
    }

    pub fn parse(&self, s: &str) -> Result<QuadInt> {
        let (u, v) = parse_quad_literal(s)?;
        Ok(self.elem(u, v))
    }

    pub fn tag(&self) -> RingTag {
        RingTag { d: self.d.to_string(), branch: self.branch }
    }
}

impl fmt::Display for RingDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z[w], d={} (branch {:?})", self.d, self.branch)
    }
}

/// Ring tag embedded in JSON reports.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct RingTag {
    pub d: String,
    pub branch: Branch,
}

pub fn is_square_free(n: u64) -> bool {
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        if n.is_multiple_of(p * p) {
            return false;
        }
        p += 1;
    }
    true
}

/// An element `u + v*w` of `Z_M`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadInt {
    pub u: BigInt,
    pub v: BigInt,
    ring: RingDesc,
}

impl QuadInt {
    pub fn ring(&self) -> RingDesc {
        self.ring
    }

    pub fn as_quad(&self) -> Quad<BigInt> {
        Quad { u: self.u.clone(), v: self.v.clone() }
    }

    fn check(&self, other: &QuadInt) -> Result<()> {
        if self.ring != other.ring {
            Err(Error::RingMismatch(self.ring.d, other.ring.d))
        } else {
            Ok(())
        }
    }

    fn lift(&self, q: Quad<BigInt>) -> QuadInt {
        self.ring.from_quad(q)
    }

    pub fn add(&self, other: &QuadInt) -> Result<QuadInt> {
        self.check(other)?;
        Ok(self.lift(self.ring.quad_ring().add(&self.as_quad(), &other.as_quad())))
    }

    pub fn sub(&self, other: &QuadInt) -> Result<QuadInt> {
        self.check(other)?;
        Ok(self.lift(self.ring.quad_ring().sub(&self.as_quad(), &other.as_quad())))
    }

    pub fn mul(&self, other: &QuadInt) -> Result<QuadInt> {
        self.check(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &QuadInt) -> QuadInt {
        self.lift(self.ring.quad_ring().mul(&self.as_quad(), &other.as_quad()))
    }

    pub fn scale(&self, n: &BigInt) -> QuadInt {
        self.ring.elem(&self.u * n, &self.v * n)
    }

    pub fn neg(&self) -> QuadInt {
        self.ring.elem(-&self.u, -&self.v)
    }

    pub fn conj(&self) -> QuadInt {
        self.lift(self.ring.quad_ring().conj(&self.as_quad()))
    }

    pub fn norm(&self) -> BigInt {
        self.ring.quad_ring().norm(&self.as_quad())
    }

    pub fn is_unit(&self) -> bool {
        self.norm().is_one()
    }

    pub fn is_zero(&self) -> bool {
        self.u.is_zero() && self.v.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.v.is_zero()
    }

    /// Moves the element into another ring descriptor; only rational
    /// integers are meaningful in every ring.
    pub fn in_ring(&self, ring: RingDesc) -> Result<QuadInt> {
        if self.ring == ring || self.is_rational() {
            Ok(ring.elem(self.u.clone(), self.v.clone()))
        } else {
            Err(Error::RingMismatch(self.ring.d, ring.d))
        }
    }
}

impl fmt::Display for QuadInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.v.is_negative() {
            write!(f, "{}-{}*w", self.u, -&self.v)
        } else {
            write!(f, "{}+{}*w", self.u, self.v)
        }
    }
}

impl Serialize for QuadInt {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Parses `u`, `v*w`, `w`, `-w`, `u+v*w`, `u-v*w` (spaces ignored).
pub fn parse_quad_literal(s: &str) -> Result<(BigInt, BigInt)> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || Error::Parse(format!("invalid quadratic integer literal {s:?}; expected u+v*w"));
    if s.is_empty() {
        return Err(bad());
    }
    if !s.contains('w') {
        return Ok((BigInt::from_str(&s).map_err(|_| bad())?, BigInt::zero()));
    }
    let body = s.strip_suffix('w').ok_or_else(bad)?;
    let body = body.strip_suffix('*').unwrap_or(body);
    // Split at the last sign that is not the leading character.
    let split = body
        .char_indices()
        .skip(1)
        .filter(|&(_, c)| c == '+' || c == '-')
        .map(|(i, _)| i)
        .last();
    let (u_part, v_part) = match split {
        Some(i) => (&body[..i], &body[i..]),
        None => ("0", body),
    };
    let u = BigInt::from_str(u_part).map_err(|_| bad())?;
    let v = match v_part {
        "" | "+" => BigInt::one(),
        "-" => -BigInt::one(),
        other => BigInt::from_str(other.strip_prefix('+').unwrap_or(other)).map_err(|_| bad())?,
    };
    Ok((u, v))
}

impl QuadRing<MPolyRing> {
    /// Branch A with `d` left free.
    pub fn symbolic_branch_a() -> Self {
        QuadRing::new(MPolyRing, Branch::A, MPoly::var(Var::D))
    }

    /// Branch B with `e = (1 + d)/4` left free.
    pub fn symbolic_branch_b() -> Self {
        QuadRing::new(MPolyRing, Branch::B, MPoly::var(Var::E))
    }

    /// Embeds an integer quadratic element.
    pub fn lift_int(&self, q: &QuadInt) -> Quad<MPoly> {
        Quad { u: MPoly::constant(q.u.clone()), v: MPoly::constant(q.v.clone()) }
    }

    /// Evaluates the symbolic components at a variable assignment.
    pub fn eval(&self, x: &Quad<MPoly>, assignment: &[(Var, BigInt)]) -> Result<Quad<BigInt>> {
        Ok(Quad { u: x.u.eval(assignment)?, v: x.v.eval(assignment)? })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn make_ring_branches() {
        let r1 = RingDesc::new(1).unwrap();
        assert_eq!(r1.branch(), Branch::A);
        assert_eq!(r1.field_disc(), BigInt::from(-4));
        let r3 = RingDesc::new(3).unwrap();
        assert_eq!(r3.branch(), Branch::B);
        assert_eq!(r3.e(), Some(1));
        assert_eq!(r3.field_disc(), BigInt::from(-3));
        assert!(matches!(RingDesc::new(4), Err(Error::NotSquareFree(4))));
        assert!(matches!(RingDesc::new(0), Err(Error::NonPositiveD)));
        assert_eq!(RingDesc::new(2).unwrap().branch(), Branch::A);
        assert_eq!(RingDesc::new(7).unwrap().field_disc(), BigInt::from(-7));
    }

    #[test]
    fn arithmetic_examples() {
        let r1 = RingDesc::new(1).unwrap();
        assert_eq!(r1.elem(3, 4).norm(), BigInt::from(25));
        let r3 = RingDesc::new(3).unwrap();
        assert_eq!(r3.omega().conj(), r3.elem(1, -1));
        assert_eq!(r3.omega().mul(&r3.omega()).unwrap(), r3.elem(-1, 1));
    }

    #[test]
    fn mismatched_rings_are_rejected() {
        let x = RingDesc::new(1).unwrap().omega();
        let y = RingDesc::new(2).unwrap().omega();
        assert!(matches!(x.mul(&y), Err(Error::RingMismatch(1, 2))));
        assert!(x.add(&y).is_err());
    }

    #[test]
    fn unit_groups() {
        assert_eq!(RingDesc::new(1).unwrap().units().len(), 4);
        assert_eq!(RingDesc::new(3).unwrap().units().len(), 6);
        let r7 = RingDesc::new(7).unwrap();
        assert_eq!(r7.units(), vec![r7.int(1), r7.int(-1)]);
        for d in [1, 2, 3, 7] {
            let r = RingDesc::new(d).unwrap();
            let units = r.units();
            for u in &units {
                assert!(u.is_unit());
                assert!(units.contains(&u.neg()));
                assert!(units.contains(&u.conj()));
            }
        }
    }

    #[test]
    fn exact_division_in_quadratic_ring() {
        let r = RingDesc::new(1).unwrap();
        let q = r.quad_ring();
        let x = r.elem(3, 4).as_quad();
        let y = r.elem(1, -2).as_quad();
        let prod = q.mul(&x, &y);
        assert_eq!(q.exact_div(&prod, &y).unwrap(), x);
        assert!(q.exact_div(&r.elem(1, 0).as_quad(), &r.elem(1, 1).as_quad()).is_err());
    }

    #[test]
    fn literal_parsing() {
        let r = RingDesc::new(3).unwrap();
        for (s, u, v) in [
            ("3", 3, 0),
            ("w", 0, 1),
            ("-w", 0, -1),
            ("1-w", 1, -1),
            ("-3-4*w", -3, -4),
            ("2*w", 0, 2),
            (" 5 + 7*w ", 5, 7),
            ("-2", -2, 0),
        ] {
            assert_eq!(r.parse(s).unwrap(), r.elem(u, v), "{s}");
        }
        for bad in ["", "w*2", "1+x", "1++w", "abc"] {
            assert!(r.parse(bad).is_err(), "{bad}");
        }
        let z = r.elem(-3, -4);
        assert_eq!(r.parse(&z.to_string()).unwrap(), z);
    }

    #[test]
    fn square_free_check() {
        let sf: Vec<u64> = (1..=20).filter(|&n| is_square_free(n)).collect();
        assert_eq!(sf, vec![1, 2, 3, 5, 6, 7, 10, 11, 13, 14, 15, 17, 19]);
    }
}
