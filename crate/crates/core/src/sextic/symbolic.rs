//! The J-factor pipeline with polynomial-valued coordinates.
//!
//! `theta = y0 w + eps (X1 alpha + X2 alpha^2)` with `y0` free and `a` free
//! (or fixed). The quadratic ring is branch A with `d` free, branch B with
//! `e` free (`d = 4e - 1`), or a fixed `d`.

use num_bigint::BigInt;
use serde::Serialize;

use crate::bigpoly::{DetMethod, MPoly, MPolyRing, Var};
use crate::error::{Error, Result};
use crate::quadring::{Branch, Quad, QuadInt, QuadRing, RingDesc};
use crate::ring::Ring;
use crate::sextic::index::{char_poly_in, cross_resultant_in};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "d")]
pub enum SymbolicCase {
    /// `-d = 2, 3 mod 4`, `d` a free variable.
    BranchA,
    /// `-d = 1 mod 4`, `e = (1+d)/4` a free variable.
    BranchB,
    FixedD(u64),
}

impl SymbolicCase {
    fn ring(&self) -> Result<QuadRing<MPolyRing>> {
        Ok(match self {
            SymbolicCase::BranchA => QuadRing::symbolic_branch_a(),
            SymbolicCase::BranchB => QuadRing::symbolic_branch_b(),
            SymbolicCase::FixedD(d) => RingDesc::new(*d)?.symbolic_ring(),
        })
    }

    /// `|D_M|^3` as a polynomial.
    fn field_disc_cubed(&self) -> Result<MPoly> {
        let abs_dm = match self {
            SymbolicCase::BranchA => &MPoly::from(4) * &MPoly::var(Var::D),
            SymbolicCase::BranchB => &(&MPoly::from(4) * &MPoly::var(Var::E)) - &MPoly::one(),
            SymbolicCase::FixedD(d) => {
                let r = RingDesc::new(*d)?;
                MPoly::constant(-r.field_disc())
            }
        };
        Ok(abs_dm.pow(3))
    }

    fn lift(&self, qr: &QuadRing<MPolyRing>, q: &QuadInt) -> Result<Quad<MPoly>> {
        match self {
            SymbolicCase::FixedD(d) => {
                let r = RingDesc::new(*d)?;
                Ok(qr.lift_int(&q.in_ring(r)?))
            }
            _ if q.is_rational() => Ok(qr.embed(MPoly::constant(q.u.clone()))),
            _ => Err(Error::InvalidParameter(format!(
                "{q} is not rational; symbolic-d cases accept only rational integers"
            ))),
        }
    }

    pub fn branch(&self) -> Result<Branch> {
        Ok(self.ring()?.branch)
    }
}

/// Intermediate quantities of one symbolic J computation.
#[derive(Debug, Clone)]
pub struct SymbolicJ {
    pub case: SymbolicCase,
    /// `R = s * r` with `s = w` (branch A) or `2w - 1` (branch B).
    pub imaginary_part: MPoly,
    /// `N(R) / |D_M|^3 = J^2`.
    pub j_squared: MPoly,
    /// The polynomial square root with positive leading coefficient. Its
    /// value at a point is `±J`.
    pub j: MPoly,
}

/// Runs the J pipeline for `theta = y0 w + eps (X1 alpha + X2 alpha^2)` where
/// `(X1, X2)` is the image of `(Y1, Y2)` under `X1 = Y1 - a Y2`, `X2 = Y2`.
/// With `a = None` the parameter stays symbolic.
pub fn symbolic_j_detailed(
    case: SymbolicCase,
    a: Option<&BigInt>,
    y1: &QuadInt,
    y2: &QuadInt,
    eps: &QuadInt,
) -> Result<SymbolicJ> {
    let qr = case.ring()?;
    let a_poly = match a {
        Some(v) => MPoly::constant(v.clone()),
        None => MPoly::var(Var::A),
    };
    let y1 = case.lift(&qr, y1)?;
    let y2 = case.lift(&qr, y2)?;
    let eps = case.lift(&qr, eps)?;
    let x1 = qr.sub(&y1, &qr.mul(&qr.embed(a_poly.clone()), &y2));
    let x2 = y2;
    let c0 = Quad::new(MPoly::zero(), MPoly::var(Var::Y0));
    let c1 = qr.mul(&eps, &x1);
    let c2 = qr.mul(&eps, &x2);
    let p = char_poly_in(&qr, &a_poly, &[c0, c1, c2], DetMethod::Minors)?;
    let r = cross_resultant_in(&qr, &p, DetMethod::Minors)?;
    let imaginary_part = qr.imaginary_part(&r)?;
    let norm = qr.norm(&r);
    let j_squared = norm
        .exact_div(&case.field_disc_cubed()?)
        .map_err(|_| Error::InternalInconsistency("N(R) is not divisible by |D_M|^3".into()))?;
    let j = j_squared.sqrt_exact()?;
    Ok(SymbolicJ { case, imaginary_part, j_squared, j })
}

pub fn symbolic_j(
    case: SymbolicCase,
    a: Option<&BigInt>,
    y1: &QuadInt,
    y2: &QuadInt,
    eps: &QuadInt,
) -> Result<MPoly> {
    Ok(symbolic_j_detailed(case, a, y1, y2, eps)?.j)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bigpoly::{k_of_a, rewrite_in_k, Monomial};
    use crate::sextic::{j_factor, FamilyParams, ThetaCoords};

    fn r(d: u64) -> RingDesc {
        RingDesc::new(d).unwrap()
    }

    #[test]
    fn branch_a_pair_1_0_is_divisible_by_y0_cubed() {
        let ring = r(2);
        let j = symbolic_j(SymbolicCase::BranchA, None, &ring.int(1), &ring.int(0), &ring.int(1)).unwrap();
        let y0_cubed = MPoly::monomial(1, Monomial::var(Var::Y0, 3));
        let j1 = j.exact_div(&y0_cubed).unwrap();
        let j2 = j1.eval_var(Var::Y0, &BigInt::from(1));
        let in_k = rewrite_in_k(&j2).unwrap();
        // (4d+1) K^2 + 32 d^2 K + 64 d^3, derived by hand from the
        // symmetric functions of the squared root differences.
        let k = MPoly::var(Var::K);
        let d = MPoly::var(Var::D);
        let expected = &(&(&(&(&MPoly::from(4) * &d) + &MPoly::one()) * &k.pow(2))
            + &(&(&MPoly::from(32) * &d.pow(2)) * &k))
            + &(&MPoly::from(64) * &d.pow(3));
        assert_eq!(in_k, expected);
        assert_eq!(in_k.substitute(Var::K, &k_of_a()), j2);
    }

    #[test]
    fn branch_b_matches_printed_j2() {
        let ring = r(7);
        let j = symbolic_j(SymbolicCase::BranchB, None, &ring.int(1), &ring.int(0), &ring.int(1)).unwrap();
        let j2 = j
            .exact_div(&MPoly::monomial(1, Monomial::var(Var::Y0, 3)))
            .unwrap()
            .eval_var(Var::Y0, &BigInt::from(1));
        let in_k = rewrite_in_k(&j2).unwrap();
        // (d+1) K^2 + 2 d^2 K + d^3 with d = 4e - 1
        let k = MPoly::var(Var::K);
        let d = &(&MPoly::from(4) * &MPoly::var(Var::E)) - &MPoly::one();
        let printed = &(&(&(&d + &MPoly::one()) * &k.pow(2)) + &(&(&MPoly::from(2) * &d.pow(2)) * &k)) + &d.pow(3);
        assert_eq!(in_k, printed);
    }

    #[test]
    fn fixed_d_agrees_with_numeric_pipeline() {
        let ring = r(1);
        let j = symbolic_j(SymbolicCase::FixedD(1), None, &ring.omega(), &ring.int(0), &ring.int(1)).unwrap();
        for a in -4..=3 {
            for y0 in -3..=3 {
                let v = j.eval(&[(Var::A, BigInt::from(a)), (Var::Y0, BigInt::from(y0))]).unwrap();
                let p = FamilyParams::new(a, 1).unwrap();
                let numeric = j_factor(&p, &ThetaCoords::new([0, 0, 0, y0, 1, 0])).unwrap();
                assert_eq!(num_traits::Signed::abs(&v), numeric, "a={a} y0={y0}");
            }
        }
    }

    #[test]
    fn non_rational_input_rejected_for_symbolic_d() {
        let ring = r(1);
        let res = symbolic_j(SymbolicCase::BranchA, None, &ring.omega(), &ring.int(0), &ring.int(1));
        assert!(matches!(res, Err(Error::InvalidParameter(_))));
    }
}
