use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::bigpoly::upoly::UPoly;
use crate::error::{Error, Result};

/// Below this root bound candidates are scanned directly instead of factoring
/// the trailing coefficient.
const SCAN_LIMIT: u64 = 1 << 16;

/// Exact integer square root.
pub fn isqrt_exact(n: &BigInt) -> Result<BigInt> {
    if n.is_negative() {
        return Err(Error::NegativeInput(n.to_string()));
    }
    let s = n.sqrt();
    if &(&s * &s) == n {
        Ok(s)
    } else {
        Err(Error::NotPerfectSquare(n.to_string()))
    }
}

/// All integer roots of a nonzero integer polynomial.
///
/// Powers of the variable are stripped first (contributing the root 0); every
/// other root divides the trailing coefficient and lies within the Cauchy
/// bound `1 + max |c_i / c_n|`.
pub fn integer_roots(p: &UPoly<BigInt>) -> Result<BTreeSet<BigInt>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let coeffs = p.coeffs();
    let shift = coeffs.iter().take_while(|c| c.is_zero()).count();
    let mut roots = BTreeSet::new();
    if shift > 0 {
        roots.insert(BigInt::zero());
    }
    let core: Vec<BigInt> = coeffs[shift..].to_vec();
    if core.len() <= 1 {
        return Ok(roots);
    }
    let lead = core.last().unwrap().abs();
    let max_ratio = core[..core.len() - 1]
        .iter()
        .map(|c| c.abs().div_ceil(&lead))
        .max()
        .unwrap_or_default();
    let bound = max_ratio + 1u32;
    let trailing = core[0].abs();
    let eval = |x: &BigInt| {
        let mut acc = BigInt::zero();
        for c in core.iter().rev() {
            acc = acc * x + c;
        }
        acc
    };
    let mut try_candidate = |n: BigInt| {
        for cand in [n.clone(), -n] {
            if eval(&cand).is_zero() {
                roots.insert(cand);
            }
        }
    };
    match bound.to_u64().filter(|&b| b <= SCAN_LIMIT) {
        Some(b) => {
            for n in 1..=b {
                if (&trailing % n).is_zero() {
                    try_candidate(BigInt::from(n));
                }
            }
        }
        None => {
            for n in divisors(&trailing)? {
                if BigInt::from(n.clone()) <= bound {
                    try_candidate(BigInt::from_biguint(Sign::Plus, n));
                }
            }
        }
    }
    Ok(roots)
}

fn divisors(n: &BigInt) -> Result<Vec<BigUint>> {
    let n = n.to_biguint().expect("nonnegative");
    if n.is_one() {
        return Ok(vec![BigUint::one()]);
    }
    let (factors, rest) = num_prime::nt_funcs::factors(n.clone(), None);
    if rest.is_some_and(|r| !r.is_empty()) {
        return Err(Error::RootSearch(format!("could not fully factor {n}")));
    }
    let mut divs = vec![BigUint::one()];
    for (p, e) in factors {
        let mut next = Vec::with_capacity(divs.len() * (e + 1));
        for d in &divs {
            let mut pk = d.clone();
            next.push(pk.clone());
            for _ in 0..e {
                pk *= &p;
                next.push(pk.clone());
            }
        }
        divs = next;
    }
    debug_assert!(divs.iter().all(|d| (&n % d).is_zero()));
    Ok(divs)
}
