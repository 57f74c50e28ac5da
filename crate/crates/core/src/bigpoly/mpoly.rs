//! Sparse multivariate polynomials over `Z` in a fixed, named variable set.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ring::Ring;

pub const NVARS: usize = 7;

/// The variable universe. Declaration order is the lexicographic order used
/// for term ordering and rendering.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    A,
    D,
    E,
    Y0,
    T,
    X,
    K,
}

impl Var {
    pub const ALL: [Var; NVARS] = [Var::A, Var::D, Var::E, Var::Y0, Var::T, Var::X, Var::K];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::A => "a",
            Var::D => "d",
            Var::E => "e",
            Var::Y0 => "y0",
            Var::T => "t",
            Var::X => "x",
            Var::K => "K",
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Exponent vector, ordered graded-lexicographically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub [u16; NVARS]);

impl Monomial {
    pub fn one() -> Self {
        Monomial([0; NVARS])
    }

    pub fn var(v: Var, exp: u16) -> Self {
        let mut e = [0; NVARS];
        e[v.index()] = exp;
        Monomial(e)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn exp(&self, v: Var) -> u16 {
        self.0[v.index()]
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn mul(&self, other: &Self) -> Self {
        let mut e = self.0;
        for (x, y) in e.iter_mut().zip(other.0.iter()) {
            *x = x.checked_add(*y).expect("exponent overflow");
        }
        Monomial(e)
    }

    fn div(&self, other: &Self) -> Option<Self> {
        let mut e = self.0;
        for (x, y) in e.iter_mut().zip(other.0.iter()) {
            *x = x.checked_sub(*y)?;
        }
        Some(Monomial(e))
    }

    fn halve(&self) -> Option<Self> {
        let mut e = self.0;
        for x in e.iter_mut() {
            if *x % 2 != 0 {
                return None;
            }
            *x /= 2;
        }
        Some(Monomial(e))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial `sum c_m * m` with nonzero integer coefficients. The zero
/// polynomial has no terms.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash)]
pub struct MPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly::default()
    }

    pub fn one() -> Self {
        MPoly::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        MPoly { terms }
    }

    pub fn var(v: Var) -> Self {
        MPoly::monomial(BigInt::one(), Monomial::var(v, 1))
    }

    pub fn monomial(c: impl Into<BigInt>, m: Monomial) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MPoly { terms }
    }

    /// Builds a polynomial from `(coefficient, monomial)` pairs, merging
    /// repeated monomials.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (C, Monomial)>,
        C: Into<BigInt>,
    {
        let mut p = MPoly::zero();
        for (c, m) in terms {
            p.add_term(m, c.into());
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn constant_value(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.constant_value().is_some()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::total_degree).max()
    }

    pub fn degree_in(&self, v: Var) -> Option<u16> {
        self.terms.keys().map(|m| m.exp(v)).max()
    }

    pub fn uses(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.exp(v) > 0)
    }

    pub fn variables(&self) -> Vec<Var> {
        Var::ALL.into_iter().filter(|&v| self.uses(v)).collect()
    }

    pub fn scale(&self, c: &BigInt) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    fn mul_term(&self, m: &Monomial, c: &BigInt) -> MPoly {
        MPoly {
            terms: self.terms.iter().map(|(k, x)| (k.mul(m), x * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> MPoly {
        MPolyRing.pow(self, n)
    }

    /// Exact division: returns `r` with `divisor * r = self`.
    pub fn exact_div(&self, divisor: &MPoly) -> Result<MPoly> {
        let (lm, lc) = divisor.leading_term().ok_or(Error::NonDivisible)?;
        let (lm, lc) = (*lm, lc.clone());
        if let Some(c) = divisor.constant_value() {
            let mut out = BTreeMap::new();
            for (m, x) in &self.terms {
                let (q, r) = x.div_rem(&c);
                if !r.is_zero() {
                    return Err(Error::NonDivisible);
                }
                out.insert(*m, q);
            }
            return Ok(MPoly { terms: out });
        }
        let mut rem = self.clone();
        let mut quot = MPoly::zero();
        while let Some((rm, rc)) = rem.leading_term() {
            let qm = rm.div(&lm).ok_or(Error::NonDivisible)?;
            let (qc, r) = rc.div_rem(&lc);
            if !r.is_zero() {
                return Err(Error::NonDivisible);
            }
            rem = &rem - &divisor.mul_term(&qm, &qc);
            quot.add_term(qm, qc);
        }
        Ok(quot)
    }

    /// Square root with nonnegative leading coefficient, if `self` is the
    /// square of a polynomial.
    pub fn sqrt_exact(&self) -> Result<MPoly> {
        let Some((lm, lc)) = self.leading_term() else {
            return Ok(MPoly::zero());
        };
        if lc.is_negative() {
            return Err(Error::NotAPolynomialSquare);
        }
        let root_c = lc.sqrt();
        if &(&root_c * &root_c) != lc {
            return Err(Error::NotAPolynomialSquare);
        }
        let root_m = lm.halve().ok_or(Error::NotAPolynomialSquare)?;
        let lead = MPoly::monomial(root_c.clone(), root_m);
        let two_lc = &root_c * 2;
        let mut root = lead.clone();
        let mut rem = self - &(&lead * &lead);
        while let Some((rm, rc)) = rem.leading_term() {
            // Every remaining term must come from 2 * lead * next_term.
            let tm = rm.div(&root_m).ok_or(Error::NotAPolynomialSquare)?;
            if tm >= root_m {
                return Err(Error::NotAPolynomialSquare);
            }
            let (tc, r) = rc.div_rem(&two_lc);
            if !r.is_zero() {
                return Err(Error::NotAPolynomialSquare);
            }
            let term = MPoly::monomial(tc, tm);
            let correction = &(&root.scale(&BigInt::from(2)) * &term) + &(&term * &term);
            rem = &rem - &correction;
            root = &root + &term;
        }
        if &(&root * &root) != self {
            return Err(Error::NotAPolynomialSquare);
        }
        Ok(root)
    }

    /// Replaces `v` by the polynomial `value`.
    pub fn substitute(&self, v: Var, value: &MPoly) -> MPoly {
        let maxdeg = self.degree_in(v).unwrap_or(0);
        let mut powers = vec![MPoly::one()];
        for i in 1..=maxdeg as usize {
            let next = &powers[i - 1] * value;
            powers.push(next);
        }
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            let k = m.exp(v) as usize;
            let mut rest = *m;
            rest.0[v.index()] = 0;
            out = &out + &powers[k].mul_term(&rest, c);
        }
        out
    }

    pub fn eval_var(&self, v: Var, value: &BigInt) -> MPoly {
        self.substitute(v, &MPoly::constant(value.clone()))
    }

    /// Evaluates with every used variable assigned. Missing variables are an
    /// error.
    pub fn eval(&self, assignment: &[(Var, BigInt)]) -> Result<BigInt> {
        let mut p = self.clone();
        for (v, x) in assignment {
            p = p.eval_var(*v, x);
        }
        p.constant_value().ok_or_else(|| {
            Error::InvalidParameter(format!(
                "evaluation left free variables {:?}",
                p.variables()
            ))
        })
    }

    /// Coefficients of `self` as a polynomial in `v`, lowest degree first.
    pub fn coefficients_in(&self, v: Var) -> Vec<MPoly> {
        let n = self.degree_in(v).map(|d| d as usize + 1).unwrap_or(0);
        let mut out = vec![MPoly::zero(); n];
        for (m, c) in &self.terms {
            let k = m.exp(v) as usize;
            let mut rest = *m;
            rest.0[v.index()] = 0;
            out[k].add_term(rest, c.clone());
        }
        out
    }

    pub fn from_coefficients_in(v: Var, coeffs: &[MPoly]) -> MPoly {
        let mut out = MPoly::zero();
        for (k, c) in coeffs.iter().enumerate() {
            out = &out + &c.mul_term(&Monomial::var(v, k as u16), &BigInt::one());
        }
        out
    }

    pub fn content(&self) -> BigInt {
        self.terms.values().fold(BigInt::zero(), |g, c| g.gcd(c))
    }
}

impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        let (mut big, small) = if self.terms.len() >= rhs.terms.len() {
            (self.clone(), rhs)
        } else {
            (rhs.clone(), self)
        };
        for (m, c) in &small.terms {
            big.add_term(*m, c.clone());
        }
        big
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        let mut out = MPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Add for MPoly {
    type Output = MPoly;
    fn add(self, rhs: MPoly) -> MPoly {
        &self + &rhs
    }
}

impl Sub for MPoly {
    type Output = MPoly;
    fn sub(self, rhs: MPoly) -> MPoly {
        &self - &rhs
    }
}

impl Mul for MPoly {
    type Output = MPoly;
    fn mul(self, rhs: MPoly) -> MPoly {
        &self * &rhs
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}

impl From<i64> for MPoly {
    fn from(c: i64) -> Self {
        MPoly::constant(c)
    }
}

impl From<BigInt> for MPoly {
    fn from(c: BigInt) -> Self {
        MPoly::constant(c)
    }
}

/// Canonical rendering: terms in descending graded-lex order, `*` between
/// factors and `^` for exponents, e.g. `4*a^4*d*y0^2 - 3*a + 1`.
impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.is_one() {
                factors.push(abs.to_string());
            }
            for v in Var::ALL {
                match m.exp(v) {
                    0 => {}
                    1 => factors.push(v.name().to_string()),
                    e => factors.push(format!("{}^{}", v.name(), e)),
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

/// `Z[a, d, e, y0, t, x, K]` as a ring structure.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct MPolyRing;

impl Ring for MPolyRing {
    type Elem = MPoly;

    fn zero(&self) -> MPoly {
        MPoly::zero()
    }
    fn one(&self) -> MPoly {
        MPoly::one()
    }
    fn from_int(&self, n: &BigInt) -> MPoly {
        MPoly::constant(n.clone())
    }
    fn is_zero(&self, x: &MPoly) -> bool {
        x.is_zero()
    }
    fn add(&self, x: &MPoly, y: &MPoly) -> MPoly {
        x + y
    }
    fn sub(&self, x: &MPoly, y: &MPoly) -> MPoly {
        x - y
    }
    fn mul(&self, x: &MPoly, y: &MPoly) -> MPoly {
        x * y
    }
    fn neg(&self, x: &MPoly) -> MPoly {
        -x
    }
    fn exact_div(&self, x: &MPoly, y: &MPoly) -> Result<MPoly> {
        x.exact_div(y)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a() -> MPoly {
        MPoly::var(Var::A)
    }
    fn d() -> MPoly {
        MPoly::var(Var::D)
    }
    fn y0() -> MPoly {
        MPoly::var(Var::Y0)
    }

    #[test]
    fn additive_inverse_is_empty() {
        let x = MPoly::var(Var::X);
        let z = &x + &(-&x);
        assert!(z.is_zero());
        assert_eq!(z.num_terms(), 0);
    }

    #[test]
    fn difference_of_squares() {
        let p = &(&a() + &MPoly::from(3)) * &(&a() - &MPoly::from(3));
        assert_eq!(p, &a().pow(2) - &MPoly::from(9));
    }

    #[test]
    fn monomial_division() {
        let p = &(&MPoly::from(8) * &d()) * &y0().pow(3);
        let q = &MPoly::from(8) * &d();
        assert_eq!(p.exact_div(&q).unwrap(), y0().pow(3));
    }

    #[test]
    fn division_detects_remainder() {
        let p = &a().pow(2) + &MPoly::one();
        assert!(matches!(p.exact_div(&(&a() + &MPoly::one())), Err(Error::NonDivisible)));
        assert!(matches!(MPoly::from(3).exact_div(&MPoly::from(2)), Err(Error::NonDivisible)));
        assert!(p.exact_div(&MPoly::zero()).is_err());
    }

    #[test]
    fn multivariate_exact_division() {
        let p = &(&a() + &d()) * &(&(&a() * &y0()) - &MPoly::from(7));
        assert_eq!(p.exact_div(&(&a() + &d())).unwrap(), &(&a() * &y0()) - &MPoly::from(7));
    }

    #[test]
    fn sqrt_round_trip_and_rejection() {
        let s = &(&(&a() * &y0()) - &d().pow(2)) + &MPoly::from(3);
        let sq = &s * &s;
        let r = sq.sqrt_exact().unwrap();
        assert!(r == s || r == -&s);
        assert!((&sq + &MPoly::one()).sqrt_exact().is_err());
        assert!(MPoly::from(-4).sqrt_exact().is_err());
    }

    #[test]
    fn rendering_is_graded_lex_descending() {
        let p = MPoly::from_terms([
            (1, Monomial::one()),
            (-3, Monomial::var(Var::A, 1)),
            (4, Monomial([4, 1, 0, 2, 0, 0, 0])),
            (1, Monomial::var(Var::A, 2)),
        ]);
        assert_eq!(p.to_string(), "4*a^4*d*y0^2 + a^2 - 3*a + 1");
        assert_eq!((-&a()).to_string(), "-a");
        assert_eq!(MPoly::zero().to_string(), "0");
    }

    #[test]
    fn substitution_and_evaluation() {
        let p = &(&a().pow(2) * &d()) + &a();
        let q = p.substitute(Var::A, &(&d() + &MPoly::one()));
        let v = q.eval(&[(Var::D, BigInt::from(2))]).unwrap();
        assert_eq!(v, BigInt::from(9 * 2 + 3));
        assert!(p.eval(&[(Var::A, BigInt::from(1))]).is_err());
    }

    #[test]
    fn coefficient_split_round_trip() {
        let p = &(&a().pow(3) * &y0()) + &(&d() * &a());
        let cs = p.coefficients_in(Var::A);
        assert_eq!(cs.len(), 4);
        assert_eq!(MPoly::from_coefficients_in(Var::A, &cs), p);
    }
}
