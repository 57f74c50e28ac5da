use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::quadring::{Branch, RingDesc};
use crate::sextic::{thue_form, AConstraint, Provenance, SolutionPair};

/// Enumeration box: `|u|, |v| <= coord_bound` per quadratic coordinate and
/// `|y0| <= y0_bound` for generator pipelines.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SearchBox {
    pub coord_bound: u32,
    pub y0_bound: u32,
}

impl SearchBox {
    pub const THUE_DEFAULT: u32 = 10;
    pub const GENERATOR_DEFAULT: u32 = 3;
    pub const Y_MAX_DEFAULT: u32 = 100;

    pub fn new(coord_bound: u32, y0_bound: u32) -> Result<Self> {
        if coord_bound == 0 || y0_bound == 0 {
            return Err(Error::InvalidParameter("search bounds must be at least 1".into()));
        }
        Ok(SearchBox { coord_bound, y0_bound })
    }

    /// Number of points in the box for `k` enumerated coordinates.
    pub fn points(bound: u32, k: u32) -> u64 {
        (2 * bound as u64 + 1).pow(k)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ThueSearch {
    pub solutions: Vec<SolutionPair>,
    pub iterations: u64,
}

/// Quadratic integers with overflow-checked machine arithmetic; the
/// enumeration falls back to big integers when a product overflows.
#[derive(Clone, Copy)]
struct Small {
    branch: Branch,
    k: i128,
}

impl Small {
    fn mul(self, x: (i128, i128), y: (i128, i128)) -> Option<(i128, i128)> {
        let uu = x.0.checked_mul(y.0)?;
        let vv = x.1.checked_mul(y.1)?;
        let u = uu.checked_sub(self.k.checked_mul(vv)?)?;
        let cross = x.0.checked_mul(y.1)?.checked_add(x.1.checked_mul(y.0)?)?;
        let v = match self.branch {
            Branch::A => cross,
            Branch::B => cross.checked_add(vv)?,
        };
        Some((u, v))
    }

    fn scale(x: (i128, i128), n: i128) -> Option<(i128, i128)> {
        Some((x.0.checked_mul(n)?, x.1.checked_mul(n)?))
    }

    fn sub(x: (i128, i128), y: (i128, i128)) -> Option<(i128, i128)> {
        Some((x.0.checked_sub(y.0)?, x.1.checked_sub(y.1)?))
    }

    fn norm(self, x: (i128, i128)) -> Option<i128> {
        let uu = x.0.checked_mul(x.0)?;
        let vv = self.k.checked_mul(x.1.checked_mul(x.1)?)?;
        let base = uu.checked_add(vv)?;
        match self.branch {
            Branch::A => Some(base),
            Branch::B => base.checked_add(x.0.checked_mul(x.1)?),
        }
    }

    fn thue_norm(self, a: i128, y1: (i128, i128), y2: (i128, i128)) -> Option<i128> {
        let y1s = self.mul(y1, y1)?;
        let y2s = self.mul(y2, y2)?;
        let t1 = self.mul(y1s, y1)?;
        let t2 = Small::scale(self.mul(y1s, y2)?, a)?;
        let t3 = Small::scale(self.mul(y1, y2s)?, a.checked_add(3)?)?;
        let t4 = self.mul(y2s, y2)?;
        self.norm(Small::sub(Small::sub(Small::sub(t1, t2)?, t3)?, t4)?)
    }
}

/// All sign-orbit representatives `(Y1, Y2)` in the box with
/// `N(F(Y1, Y2)) = 1`, in lexicographic order of `(u1, v1, u2, v2)`.
pub fn thue_solutions(a: &BigInt, d: u64, bound: u32) -> Result<ThueSearch> {
    let ring = RingDesc::new(d)?;
    let small = Small {
        branch: ring.branch(),
        k: match ring.branch() {
            Branch::A => d as i128,
            Branch::B => ring.e().expect("branch B has e") as i128,
        },
    };
    let a_small = a.to_i128();
    let b = bound as i64;
    let mut solutions = Vec::new();
    let mut iterations = 0u64;
    for u1 in -b..=b {
        for v1 in -b..=b {
            for u2 in -b..=b {
                for v2 in -b..=b {
                    iterations += 1;
                    let first = [u1, v1, u2, v2].into_iter().find(|&c| c != 0);
                    if first.is_none_or(|c| c < 0) {
                        continue;
                    }
                    let fast = a_small.and_then(|a| {
                        small.thue_norm(a, (u1 as i128, v1 as i128), (u2 as i128, v2 as i128))
                    });
                    let is_unit = match fast {
                        Some(n) => n == 1,
                        None => thue_form(a, &ring.elem(u1, v1), &ring.elem(u2, v2))?.is_unit(),
                    };
                    if is_unit {
                        let pair = SolutionPair::new(
                            ring.elem(u1, v1),
                            ring.elem(u2, v2),
                            AConstraint::Fixed(a.clone()),
                            Provenance::BruteForce,
                        );
                        debug_assert!(pair.is_normalized());
                        solutions.push(pair);
                    }
                }
            }
        }
    }
    Ok(ThueSearch { solutions, iterations })
}
