//! Relative index, the J factor and the absolute index, all computed from
//! characteristic polynomials by exact resultants.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::bigpoly::{
    discriminant_in, discriminant_with, isqrt_exact, resultant_with, DetMethod, PolyRing, UPoly,
};
use crate::error::{Error, Result};
use crate::quadring::{Quad, QuadInt, QuadRing, RingDesc};
use crate::report::dec;
use crate::ring::{Integers, Ring};
use crate::sextic::family::{cubic_in, order_disc, FamilyParams, ThetaCoords};

/// `Res_x(f(x), t - (c0 + c1 x + c2 x^2))`, i.e. `prod_j (t - theta^(j))`
/// over the three roots of `f`. Monic of degree 3 in `t`.
pub(crate) fn char_poly_in<R: Ring + Clone>(
    qr: &QuadRing<R>,
    a: &R::Elem,
    c: &[Quad<R::Elem>; 3],
    method: DetMethod,
) -> Result<UPoly<Quad<R::Elem>>> {
    let t_ring = PolyRing::new(qr.clone());
    let x_ring = PolyRing::new(t_ring.clone());
    let f = x_ring.from_coeffs(
        cubic_in(&qr.base, a)
            .into_iter()
            .map(|k| t_ring.constant(qr.embed(k)))
            .collect(),
    );
    let g = x_ring.from_coeffs(vec![
        t_ring.from_coeffs(vec![qr.neg(&c[0]), qr.one()]),
        t_ring.constant(qr.neg(&c[1])),
        t_ring.constant(qr.neg(&c[2])),
    ]);
    let p = resultant_with(&t_ring, &f, &g, method)?;
    if p.degree() != Some(3) || !t_ring.is_monic(&p) {
        return Err(Error::InternalInconsistency(
            "characteristic polynomial is not monic of degree 3".into(),
        ));
    }
    Ok(p)
}

pub(crate) fn conj_poly<R: Ring + Clone>(qr: &QuadRing<R>, p: &UPoly<Quad<R::Elem>>) -> UPoly<Quad<R::Elem>> {
    PolyRing::new(qr.clone()).map_coeffs(p, |c| qr.conj(c))
}

/// `R = Res_t(P, conj(P)) = prod_{j1,j2} (theta^(1,j1) - theta^(2,j2))`.
pub(crate) fn cross_resultant_in<R: Ring + Clone>(
    qr: &QuadRing<R>,
    p: &UPoly<Quad<R::Elem>>,
    method: DetMethod,
) -> Result<Quad<R::Elem>> {
    let q = conj_poly(qr, p);
    let r = resultant_with(qr, p, &q, method)?;
    if qr.conj(&r) != qr.neg(&r) {
        return Err(Error::InternalInconsistency(
            "cross-conjugate resultant is not purely imaginary".into(),
        ));
    }
    Ok(r)
}

fn inconsistent(what: &str) -> impl Fn(Error) -> Error + '_ {
    move |e| Error::InternalInconsistency(format!("{what}: {e}"))
}

/// Relative characteristic polynomial of `c0 + c1 alpha + c2 alpha^2` over
/// `Z_M`, coefficients lowest degree first.
pub fn char_poly_rel(params: &FamilyParams, c0: &QuadInt, c1: &QuadInt, c2: &QuadInt) -> Result<Vec<QuadInt>> {
    let ring = params.ring();
    for c in [c0, c1, c2] {
        if c.ring() != ring {
            return Err(Error::RingMismatch(c.ring().d(), ring.d()));
        }
    }
    let qr = ring.quad_ring();
    let p = char_poly_in(&qr, &params.a, &[c0.as_quad(), c1.as_quad(), c2.as_quad()], DetMethod::Bareiss)?;
    Ok(p.into_coeffs().into_iter().map(|q| ring.from_quad(q)).collect())
}

fn numeric_char_poly(params: &FamilyParams, coords: &ThetaCoords) -> Result<UPoly<Quad<BigInt>>> {
    let [c0, c1, c2] = coords.relative(params.ring());
    char_poly_in(
        &params.ring().quad_ring(),
        &params.a,
        &[c0.as_quad(), c1.as_quad(), c2.as_quad()],
        DetMethod::Bareiss,
    )
}

/// Relative index `(O : Z_M[theta])`: the square root of the norm of the
/// relative discriminant of `theta`, divided by `D(f) = K^2`.
pub fn rel_index(params: &FamilyParams, c1: &QuadInt, c2: &QuadInt) -> Result<BigInt> {
    let ring = params.ring();
    let zero = ring.int(0);
    let coords = ThetaCoords::from_relative(&zero, &c1.in_ring(ring)?, &c2.in_ring(ring)?);
    rel_index_of(params, &numeric_char_poly(params, &coords)?)
}

fn rel_index_of(params: &FamilyParams, p: &UPoly<Quad<BigInt>>) -> Result<BigInt> {
    let qr = params.ring().quad_ring();
    let disc = discriminant_in(&qr, p)?;
    let n = qr.norm(&disc);
    let root = isqrt_exact(&n).map_err(inconsistent("relative discriminant norm"))?;
    let dfx = params.k_val().pow(2);
    Integers
        .exact_div(&root, &dfx)
        .map_err(inconsistent("relative index is not divisible by D(f)"))
}

/// `J = (Z_M[theta] : Z[theta])`, from `N(R) = |D_M|^3 J^2`.
pub fn j_factor(params: &FamilyParams, coords: &ThetaCoords) -> Result<BigInt> {
    j_factor_of(params.ring(), &numeric_char_poly(params, coords)?)
}

fn j_factor_of(ring: RingDesc, p: &UPoly<Quad<BigInt>>) -> Result<BigInt> {
    let qr = ring.quad_ring();
    let r = cross_resultant_in(&qr, p, DetMethod::Bareiss)?;
    qr.imaginary_part(&r)?;
    let n = qr.norm(&r);
    let dm3 = ring.field_disc().abs().pow(3);
    let sq = Integers.exact_div(&n, &dm3).map_err(inconsistent("N(R) not divisible by |D_M|^3"))?;
    isqrt_exact(&sq).map_err(inconsistent("N(R)/|D_M|^3"))
}

/// The two factors of the index together with the cross-check quantity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndexBreakdown {
    #[serde(serialize_with = "dec")]
    pub rel_index: BigInt,
    #[serde(serialize_with = "dec")]
    pub j_factor: BigInt,
    #[serde(serialize_with = "dec")]
    pub index: BigInt,
    /// `|disc(P * conj(P))|`, which must equal `index^2 * |D_O|`.
    #[serde(serialize_with = "dec")]
    pub abs_disc_theta: BigInt,
    #[serde(serialize_with = "dec")]
    pub order_disc: BigInt,
}

/// `I(theta) = I_rel(theta) * J(theta)`, cross-checked against the
/// discriminant of the degree-6 characteristic polynomial.
pub fn abs_index_detailed(params: &FamilyParams, coords: &ThetaCoords) -> Result<IndexBreakdown> {
    let ring = params.ring();
    let qr = ring.quad_ring();
    let p = numeric_char_poly(params, coords)?;
    let rel = rel_index_of(params, &p)?;
    let j = j_factor_of(ring, &p)?;
    let index = &rel * &j;

    let q = conj_poly(&qr, &p);
    let pq = PolyRing::new(qr.clone()).mul(&p, &q);
    let rational: Vec<BigInt> = pq
        .coeffs()
        .iter()
        .map(|c| {
            if c.v.is_zero() {
                Ok(c.u.clone())
            } else {
                Err(Error::InternalInconsistency("P*conj(P) has a non-rational coefficient".into()))
            }
        })
        .collect::<Result<_>>()?;
    let pq = PolyRing::new(Integers).from_coeffs(rational);
    let disc = discriminant_with(&Integers, &pq, DetMethod::Bareiss)?.abs();
    let od = order_disc(params);
    let lhs = &index * &index * od.abs();
    if lhs != disc {
        return Err(Error::CrossCheckFailed { lhs: lhs.to_string(), rhs: disc.to_string() });
    }
    Ok(IndexBreakdown { rel_index: rel, j_factor: j, index, abs_disc_theta: disc, order_disc: od })
}

pub fn abs_index(params: &FamilyParams, coords: &ThetaCoords) -> Result<BigInt> {
    Ok(abs_index_detailed(params, coords)?.index)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(a: i64, d: u64) -> FamilyParams {
        FamilyParams::new(a, d).unwrap()
    }

    #[test]
    fn char_poly_of_alpha_is_f() {
        let p = params(3, 2);
        let r = p.ring();
        let cp = char_poly_rel(&p, &r.int(0), &r.int(1), &r.int(0)).unwrap();
        let expected: Vec<QuadInt> = [-1, -6, -3, 1].iter().map(|&k| r.int(k)).collect();
        assert_eq!(cp, expected);
    }

    #[test]
    fn char_poly_of_constant() {
        let p = params(1, 1);
        let r = p.ring();
        let c = r.elem(2, -1);
        let cp = char_poly_rel(&p, &c, &r.int(0), &r.int(0)).unwrap();
        // (t - c)^3 = t^3 - 3c t^2 + 3c^2 t - c^3
        let c2 = c.mul(&c).unwrap();
        let c3 = c2.mul(&c).unwrap();
        assert_eq!(cp, vec![c3.neg(), c2.scale(&BigInt::from(3)), c.scale(&BigInt::from(-3)), r.int(1)]);
    }

    #[test]
    fn char_poly_of_alpha_squared_a0() {
        let p = params(0, 1);
        let r = p.ring();
        let cp = char_poly_rel(&p, &r.int(0), &r.int(0), &r.int(1)).unwrap();
        let expected: Vec<QuadInt> = [-1, 9, -6, 1].iter().map(|&k| r.int(k)).collect();
        assert_eq!(cp, expected);
    }

    #[test]
    fn rel_index_examples() {
        let p = params(0, 1);
        let r = p.ring();
        assert_eq!(rel_index(&p, &r.omega(), &r.int(0)).unwrap(), BigInt::from(1));
        assert_eq!(rel_index(&p, &r.int(2), &r.int(-1)).unwrap(), BigInt::from(9));
        for (a, d) in [(0, 1), (-2, 7), (5, 3)] {
            let p = params(a, d);
            let r = p.ring();
            assert_eq!(rel_index(&p, &r.int(0), &r.int(0)).unwrap(), BigInt::from(0));
        }
    }

    #[test]
    fn j_factor_examples() {
        let p = params(0, 1);
        assert_eq!(j_factor(&p, &ThetaCoords::new([3, 1, -2, 0, 0, 0])).unwrap(), BigInt::from(0));
        let gen = ThetaCoords::new([0, 0, 0, 1, 1, 0]);
        assert_eq!(j_factor(&p, &gen).unwrap(), BigInt::from(1));
        let shifted = ThetaCoords::new([5, 0, 0, 1, 1, 0]);
        assert_eq!(j_factor(&p, &shifted).unwrap(), j_factor(&p, &gen).unwrap());
    }

    #[test]
    fn abs_index_examples() {
        let p = params(0, 1);
        assert_eq!(abs_index(&p, &ThetaCoords::new([0, 0, 0, 1, 1, 0])).unwrap(), BigInt::from(1));
        assert_eq!(abs_index(&p, &ThetaCoords::new([0, 0, 0, 1, 0, 0])).unwrap(), BigInt::from(0));
        let p2 = params(0, 2);
        let b = abs_index_detailed(&p2, &ThetaCoords::new([0, 1, 1, 1, 0, 0])).unwrap();
        assert_eq!(b.index, &b.rel_index * &b.j_factor);
        assert_eq!(&b.index * &b.index * b.order_disc.abs(), b.abs_disc_theta);
    }

    #[test]
    fn bareiss_and_minors_agree_on_char_poly() {
        let p = params(-3, 7);
        let r = p.ring();
        let c = [r.elem(1, -2).as_quad(), r.elem(0, 3).as_quad(), r.elem(-1, 1).as_quad()];
        let qr = r.quad_ring();
        let b = char_poly_in(&qr, &p.a, &c, DetMethod::Bareiss).unwrap();
        let m = char_poly_in(&qr, &p.a, &c, DetMethod::Minors).unwrap();
        assert_eq!(b, m);
        let rb = cross_resultant_in(&qr, &b, DetMethod::Bareiss).unwrap();
        let rm = cross_resultant_in(&qr, &b, DetMethod::Minors).unwrap();
        assert_eq!(rb, rm);
    }
}
