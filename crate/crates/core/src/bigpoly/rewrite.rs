use crate::bigpoly::mpoly::{MPoly, Var};
use crate::error::{Error, Result};

/// `K = a^2 + 3a + 9` as a polynomial in `a`.
pub fn k_of_a() -> MPoly {
    let a = MPoly::var(Var::A);
    &(&a.pow(2) + &(&MPoly::from(3) * &a)) + &MPoly::from(9)
}

/// Rewrites a polynomial in `a` (and other variables) in terms of
/// `K = a^2 + 3a + 9` by reducing with `a^2 = K - 3a - 9`. Succeeds iff no
/// power of `a` survives the reduction.
pub fn rewrite_in_k(p: &MPoly) -> Result<MPoly> {
    let mut coeffs = p.coefficients_in(Var::A);
    // Fold the highest power down: c_n a^n = c_n a^(n-2) (K - 3a - 9).
    while coeffs.len() > 2 {
        let n = coeffs.len() - 1;
        let top = coeffs.pop().unwrap();
        let k_part = &top * &MPoly::var(Var::K);
        coeffs[n - 2] = &(&coeffs[n - 2] + &k_part) - &(&MPoly::from(9) * &top);
        coeffs[n - 1] = &coeffs[n - 1] - &(&MPoly::from(3) * &top);
        while coeffs.last().is_some_and(MPoly::is_zero) {
            coeffs.pop();
        }
    }
    match coeffs.len() {
        0 => Ok(MPoly::zero()),
        1 => Ok(coeffs.pop().unwrap()),
        _ => Err(Error::NotExpressible {
            residual: coeffs[1].clone(),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defining_relation() {
        assert_eq!(rewrite_in_k(&k_of_a()).unwrap(), MPoly::var(Var::K));
    }

    #[test]
    fn square_times_d() {
        let p = &k_of_a().pow(2) * &MPoly::var(Var::D);
        assert_eq!(
            rewrite_in_k(&p).unwrap(),
            &MPoly::var(Var::K).pow(2) * &MPoly::var(Var::D)
        );
    }

    #[test]
    fn odd_part_survives() {
        match rewrite_in_k(&MPoly::var(Var::A)) {
            Err(Error::NotExpressible { residual }) => assert_eq!(residual, MPoly::one()),
            other => panic!("expected NotExpressible, got {other:?}"),
        }
    }

    #[test]
    fn rewrite_then_substitute_back_is_identity() {
        let p = &(&k_of_a().pow(3) * &MPoly::from(4)) - &(&k_of_a() * &MPoly::var(Var::D));
        let in_k = rewrite_in_k(&p).unwrap();
        assert_eq!(in_k.substitute(Var::K, &k_of_a()), p);
    }
}
