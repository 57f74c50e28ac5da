use std::fmt;

use num_bigint::BigInt;

use crate::bigpoly::mpoly::{MPoly, Var};
use crate::error::{Error, Result};
use crate::ring::Ring;

/// Dense univariate polynomial, coefficients lowest degree first. The last
/// coefficient is nonzero; the zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UPoly<E> {
    coeffs: Vec<E>,
}

impl<E> UPoly<E> {
    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<E> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&E> {
        self.coeffs.last()
    }

    pub fn coeff(&self, k: usize) -> Option<&E> {
        self.coeffs.get(k)
    }

    pub fn map<F, R>(&self, f: F) -> UPoly<R>
    where
        F: FnMut(&E) -> R,
    {
        UPoly {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }
}

impl UPoly<BigInt> {
    pub fn from_ints<I: IntoIterator<Item = i64>>(coeffs: I) -> Self {
        let ring = PolyRing::new(crate::ring::Integers);
        ring.from_coeffs(coeffs.into_iter().map(BigInt::from).collect())
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::from(0);
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }
}

impl UPoly<MPoly> {
    /// Views `p` as a polynomial in `v` with coefficients in the other
    /// variables.
    pub fn from_mpoly(p: &MPoly, v: Var) -> Self {
        UPoly {
            coeffs: p.coefficients_in(v),
        }
    }

    pub fn to_mpoly(&self, v: Var) -> MPoly {
        MPoly::from_coefficients_in(v, &self.coeffs)
    }

    /// Converts to integer coefficients if every coefficient is constant.
    pub fn to_integer(&self) -> Option<UPoly<BigInt>> {
        let coeffs = self
            .coeffs
            .iter()
            .map(MPoly::constant_value)
            .collect::<Option<Vec<_>>>()?;
        Some(UPoly { coeffs })
    }
}

impl<E: fmt::Display> fmt::Display for UPoly<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .map(|(k, c)| match k {
                0 => format!("({c})"),
                1 => format!("({c})*x"),
                _ => format!("({c})*x^{k}"),
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// `R[x]` for a base ring `R`.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyRing<R> {
    pub base: R,
}

impl<R: Ring> PolyRing<R> {
    pub fn new(base: R) -> Self {
        PolyRing { base }
    }

    pub fn from_coeffs(&self, mut coeffs: Vec<R::Elem>) -> UPoly<R::Elem> {
        while coeffs.last().is_some_and(|c| self.base.is_zero(c)) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn constant(&self, c: R::Elem) -> UPoly<R::Elem> {
        self.from_coeffs(vec![c])
    }

    /// The polynomial `x`.
    pub fn x(&self) -> UPoly<R::Elem> {
        self.from_coeffs(vec![self.base.zero(), self.base.one()])
    }

    pub fn derivative(&self, p: &UPoly<R::Elem>) -> UPoly<R::Elem> {
        let coeffs = p
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| self.base.mul(&self.base.from_i64(k as i64), c))
            .collect();
        self.from_coeffs(coeffs)
    }

    pub fn eval(&self, p: &UPoly<R::Elem>, x: &R::Elem) -> R::Elem {
        let mut acc = self.base.zero();
        for c in p.coeffs.iter().rev() {
            acc = self.base.add(&self.base.mul(&acc, x), c);
        }
        acc
    }

    pub fn map_coeffs<F>(&self, p: &UPoly<R::Elem>, f: F) -> UPoly<R::Elem>
    where
        F: FnMut(&R::Elem) -> R::Elem,
    {
        self.from_coeffs(p.coeffs.iter().map(f).collect())
    }

    pub fn is_monic(&self, p: &UPoly<R::Elem>) -> bool {
        p.leading().is_some_and(|c| *c == self.base.one())
    }

    fn zip_with<F>(&self, p: &UPoly<R::Elem>, q: &UPoly<R::Elem>, f: F) -> UPoly<R::Elem>
    where
        F: Fn(&R::Elem, &R::Elem) -> R::Elem,
    {
        let n = p.coeffs.len().max(q.coeffs.len());
        let zero = self.base.zero();
        let coeffs = (0..n)
            .map(|k| f(p.coeffs.get(k).unwrap_or(&zero), q.coeffs.get(k).unwrap_or(&zero)))
            .collect();
        self.from_coeffs(coeffs)
    }
}

impl<R: Ring> Ring for PolyRing<R> {
    type Elem = UPoly<R::Elem>;

    fn zero(&self) -> Self::Elem {
        UPoly::zero()
    }
    fn one(&self) -> Self::Elem {
        self.constant(self.base.one())
    }
    fn from_int(&self, n: &BigInt) -> Self::Elem {
        self.constant(self.base.from_int(n))
    }
    fn is_zero(&self, x: &Self::Elem) -> bool {
        x.is_zero()
    }
    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        self.zip_with(x, y, |a, b| self.base.add(a, b))
    }
    fn sub(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        self.zip_with(x, y, |a, b| self.base.sub(a, b))
    }
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        if x.is_zero() || y.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![self.base.zero(); x.coeffs.len() + y.coeffs.len() - 1];
        for (i, a) in x.coeffs.iter().enumerate() {
            if self.base.is_zero(a) {
                continue;
            }
            for (j, b) in y.coeffs.iter().enumerate() {
                out[i + j] = self.base.add(&out[i + j], &self.base.mul(a, b));
            }
        }
        self.from_coeffs(out)
    }
    fn neg(&self, x: &Self::Elem) -> Self::Elem {
        self.map_coeffs(x, |c| self.base.neg(c))
    }

    /// Long division where every leading-coefficient quotient must be exact
    /// in the base ring.
    fn exact_div(&self, x: &Self::Elem, y: &Self::Elem) -> Result<Self::Elem> {
        let dy = y.degree().ok_or(Error::NonDivisible)?;
        let lc = y.leading().unwrap();
        let mut rem = x.coeffs.clone();
        let Some(dx) = x.degree() else {
            return Ok(UPoly::zero());
        };
        if dx < dy {
            return Err(Error::NonDivisible);
        }
        let mut quot = vec![self.base.zero(); dx - dy + 1];
        for k in (0..=dx - dy).rev() {
            let top = &rem[k + dy];
            if self.base.is_zero(top) {
                continue;
            }
            let q = self.base.exact_div(top, lc)?;
            for (j, c) in y.coeffs.iter().enumerate() {
                rem[k + j] = self.base.sub(&rem[k + j], &self.base.mul(&q, c));
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !self.base.is_zero(c)) {
            return Err(Error::NonDivisible);
        }
        Ok(self.from_coeffs(quot))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Integers;

    #[test]
    fn trailing_zeros_are_trimmed() {
        let p = UPoly::from_ints([1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert!(UPoly::from_ints([0, 0]).is_zero());
    }

    #[test]
    fn exact_division_over_integers() {
        let r = PolyRing::new(Integers);
        let p = UPoly::from_ints([-1, 0, 1]);
        let q = UPoly::from_ints([1, 1]);
        assert_eq!(r.exact_div(&p, &q).unwrap(), UPoly::from_ints([-1, 1]));
        assert!(r.exact_div(&UPoly::from_ints([1, 0, 1]), &q).is_err());
        assert!(r.exact_div(&UPoly::from_ints([1, 0, 2]), &UPoly::from_ints([0, 3])).is_err());
    }

    #[test]
    fn derivative_and_eval() {
        let r = PolyRing::new(Integers);
        let p = UPoly::from_ints([-1, -3, 0, 1]);
        assert_eq!(r.derivative(&p), UPoly::from_ints([-3, 0, 3]));
        assert_eq!(p.eval(&BigInt::from(2)), BigInt::from(1));
    }

    #[test]
    fn mpoly_view_round_trip() {
        let a = MPoly::var(Var::A);
        let x = MPoly::var(Var::X);
        let p = &(&x.pow(3) - &(&a * &x.pow(2))) - &MPoly::one();
        let u = UPoly::from_mpoly(&p, Var::X);
        assert_eq!(u.degree(), Some(3));
        assert_eq!(u.to_mpoly(Var::X), p);
    }
}
