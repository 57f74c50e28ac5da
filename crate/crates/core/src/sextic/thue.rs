use num_bigint::BigInt;

use crate::bigpoly::{MPoly, MPolyRing, Var};
use crate::error::Result;
use crate::quadring::{Quad, QuadInt, QuadRing, RingDesc};
use crate::ring::Ring;

/// `F(Y1, Y2) = Y1^3 - a Y1^2 Y2 - (a+3) Y1 Y2^2 - Y2^3`, the homogenized
/// cubic, over any quadratic ring.
pub(crate) fn thue_form_in<R: Ring>(
    qr: &QuadRing<R>,
    a: &R::Elem,
    y1: &Quad<R::Elem>,
    y2: &Quad<R::Elem>,
) -> Quad<R::Elem> {
    let a_q = qr.embed(a.clone());
    let a3 = qr.add(&a_q, &qr.from_i64(3));
    let y1_sq = qr.mul(y1, y1);
    let y2_sq = qr.mul(y2, y2);
    let t1 = qr.mul(&y1_sq, y1);
    let t2 = qr.mul(&a_q, &qr.mul(&y1_sq, y2));
    let t3 = qr.mul(&a3, &qr.mul(y1, &y2_sq));
    let t4 = qr.mul(&y2_sq, y2);
    qr.sub(&qr.sub(&qr.sub(&t1, &t2), &t3), &t4)
}

/// `N_{K/M}(Y1 - alpha Y2)` as an element of `Z_M`.
pub fn thue_form(a: &BigInt, y1: &QuadInt, y2: &QuadInt) -> Result<QuadInt> {
    y1.add(y2)?;
    let ring = y1.ring();
    Ok(ring.from_quad(thue_form_in(&ring.quad_ring(), a, &y1.as_quad(), &y2.as_quad())))
}

/// The Thue form with `a` left symbolic, evaluated in a concrete ring.
pub fn thue_form_symbolic(y1: &QuadInt, y2: &QuadInt) -> Result<Quad<MPoly>> {
    y1.add(y2)?;
    let qr = y1.ring().symbolic_ring();
    Ok(thue_form_in(&qr, &MPoly::var(Var::A), &qr.lift_int(y1), &qr.lift_int(y2)))
}

/// Rational pairs evaluated over `Z[a]`; the ring is irrelevant for them.
pub fn thue_form_rational_symbolic(y1: &BigInt, y2: &BigInt) -> MPoly {
    let qr = RingDesc::new(1).expect("d=1").symbolic_ring();
    let q = thue_form_in(
        &qr,
        &MPoly::var(Var::A),
        &qr.embed(MPoly::constant(y1.clone())),
        &qr.embed(MPoly::constant(y2.clone())),
    );
    debug_assert!(MPolyRing.is_zero(&q.v));
    q.u
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pure_terms() {
        let r = RingDesc::new(5).unwrap();
        for a in [-4, 0, 9] {
            let a = BigInt::from(a);
            assert_eq!(thue_form(&a, &r.int(1), &r.int(0)).unwrap(), r.int(1));
            assert_eq!(thue_form(&a, &r.int(0), &r.int(1)).unwrap(), r.int(-1));
        }
    }

    #[test]
    fn direct_expansion() {
        let r = RingDesc::new(1).unwrap();
        // 8 - 0 - 3*2*1 + 1
        assert_eq!(thue_form(&BigInt::from(0), &r.int(2), &r.int(-1)).unwrap(), r.int(3));
    }

    #[test]
    fn gaussian_unit_value() {
        let r = RingDesc::new(1).unwrap();
        assert_eq!(thue_form(&BigInt::from(4), &r.omega(), &r.int(0)).unwrap(), r.elem(0, -1));
    }

    #[test]
    fn symbolic_identities() {
        let one = BigInt::from(1);
        let zero = BigInt::from(0);
        assert_eq!(thue_form_rational_symbolic(&one, &zero), MPoly::from(1));
        assert_eq!(thue_form_rational_symbolic(&zero, &one), MPoly::from(-1));
        assert_eq!(thue_form_rational_symbolic(&one, &-&one), MPoly::from(-1));
    }

    #[test]
    fn ring_mismatch() {
        let r1 = RingDesc::new(1).unwrap();
        let r2 = RingDesc::new(2).unwrap();
        assert!(thue_form(&BigInt::from(0), &r1.int(1), &r2.int(0)).is_err());
    }
}
