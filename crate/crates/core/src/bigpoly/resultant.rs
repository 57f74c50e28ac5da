//! Sylvester resultants and discriminants over an arbitrary integral domain.
//!
//! Two determinant routes are provided: fraction-free Bareiss elimination
//! (needs exact division in the coefficient ring) and a division-free
//! Laplace expansion memoized over column subsets. They must always agree.

use crate::bigpoly::mpoly::{MPoly, MPolyRing, Var};
use crate::bigpoly::upoly::{PolyRing, UPoly};
use crate::error::{Error, Result};
use crate::ring::Ring;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DetMethod {
    #[default]
    Bareiss,
    Minors,
}

/// Sylvester matrix of `p` (degree m) and `q` (degree n): n shifted rows of
/// `p` followed by m shifted rows of `q`, highest coefficients first.
pub fn sylvester<R: Ring>(ring: &R, p: &UPoly<R::Elem>, q: &UPoly<R::Elem>) -> Vec<Vec<R::Elem>> {
    let m = p.degree().unwrap_or(0);
    let n = q.degree().unwrap_or(0);
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![ring.zero(); size];
        for (k, c) in p.coeffs().iter().rev().enumerate() {
            row[i + k] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![ring.zero(); size];
        for (k, c) in q.coeffs().iter().rev().enumerate() {
            row[i + k] = c.clone();
        }
        rows.push(row);
    }
    rows
}

pub fn determinant<R: Ring>(ring: &R, matrix: Vec<Vec<R::Elem>>, method: DetMethod) -> Result<R::Elem> {
    match method {
        DetMethod::Bareiss => det_bareiss(ring, matrix),
        DetMethod::Minors => Ok(det_minors(ring, &matrix)),
    }
}

fn det_bareiss<R: Ring>(ring: &R, mut m: Vec<Vec<R::Elem>>) -> Result<R::Elem> {
    let n = m.len();
    if n == 0 {
        return Ok(ring.one());
    }
    let mut negate = false;
    let mut prev = ring.one();
    for k in 0..n - 1 {
        if ring.is_zero(&m[k][k]) {
            match (k + 1..n).find(|&i| !ring.is_zero(&m[i][k])) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return Ok(ring.zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = ring.sub(&ring.mul(&m[i][j], &m[k][k]), &ring.mul(&m[i][k], &m[k][j]));
                m[i][j] = ring.exact_div(&num, &prev).map_err(|_| {
                    Error::InternalInconsistency("Bareiss step was not an exact division".into())
                })?;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if negate { ring.neg(&det) } else { det })
}

/// Laplace expansion row by row; `partial[S]` is the signed sum over
/// placements of the first |S| rows into the column set S.
fn det_minors<R: Ring>(ring: &R, m: &[Vec<R::Elem>]) -> R::Elem {
    let n = m.len();
    assert!(n <= 20, "minors expansion is exponential in the matrix size");
    let mut partial: Vec<Option<R::Elem>> = vec![None; 1 << n];
    partial[0] = Some(ring.one());
    for mask in 0usize..(1 << n) {
        let Some(acc) = partial[mask].clone() else {
            continue;
        };
        let row = mask.count_ones() as usize;
        if row == n {
            continue;
        }
        for col in 0..n {
            if mask & (1 << col) != 0 || ring.is_zero(&m[row][col]) {
                continue;
            }
            let inversions = (mask >> (col + 1)).count_ones();
            let mut term = ring.mul(&acc, &m[row][col]);
            if inversions % 2 == 1 {
                term = ring.neg(&term);
            }
            let slot = &mut partial[mask | (1 << col)];
            *slot = Some(match slot.take() {
                Some(prev) => ring.add(&prev, &term),
                None => term,
            });
        }
    }
    partial[(1 << n) - 1].take().unwrap_or_else(|| ring.zero())
}

/// Resultant of `p` and `q`; `Res(p, q) = lc(p)^deg(q) * prod q(roots of p)`.
pub fn resultant_with<R: Ring>(
    ring: &R,
    p: &UPoly<R::Elem>,
    q: &UPoly<R::Elem>,
    method: DetMethod,
) -> Result<R::Elem> {
    let (Some(m), Some(n)) = (p.degree(), q.degree()) else {
        return Err(Error::ZeroPolynomial);
    };
    match (m, n) {
        (0, 0) => Ok(ring.one()),
        (0, _) => Ok(ring.pow(&p.coeffs()[0], n as u32)),
        (_, 0) => Ok(ring.pow(&q.coeffs()[0], m as u32)),
        _ => determinant(ring, sylvester(ring, p, q), method),
    }
}

pub fn resultant_in<R: Ring>(ring: &R, p: &UPoly<R::Elem>, q: &UPoly<R::Elem>) -> Result<R::Elem> {
    resultant_with(ring, p, q, DetMethod::Bareiss)
}

/// Discriminant of a monic polynomial: `(-1)^(n(n-1)/2) * Res(p, p')`.
pub fn discriminant_with<R: Ring + Clone>(ring: &R, p: &UPoly<R::Elem>, method: DetMethod) -> Result<R::Elem> {
    let poly_ring = PolyRing::new(ring.clone());
    let n = p.degree().ok_or(Error::ZeroPolynomial)?;
    if !poly_ring.is_monic(p) {
        return Err(Error::NonMonic);
    }
    if n < 1 {
        return Err(Error::InvalidParameter("discriminant needs degree >= 1".into()));
    }
    let res = resultant_with(ring, p, &poly_ring.derivative(p), method)?;
    Ok(if (n * (n - 1) / 2) % 2 == 1 { ring.neg(&res) } else { res })
}

pub fn discriminant_in<R: Ring + Clone>(ring: &R, p: &UPoly<R::Elem>) -> Result<R::Elem> {
    discriminant_with(ring, p, DetMethod::Bareiss)
}

/// Resultant of two multivariate polynomials with respect to `var`.
pub fn resultant(p: &MPoly, q: &MPoly, var: Var) -> Result<MPoly> {
    resultant_in(&MPolyRing, &UPoly::from_mpoly(p, var), &UPoly::from_mpoly(q, var))
}

/// Discriminant of a polynomial monic in `var`.
pub fn discriminant(p: &MPoly, var: Var) -> Result<MPoly> {
    discriminant_in(&MPolyRing, &UPoly::from_mpoly(p, var))
}
