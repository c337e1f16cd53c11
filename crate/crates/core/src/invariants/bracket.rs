//! Kauffman bracket by state sum.
//!
//! Labels at a crossing `[a, b, c, d]` are listed counterclockwise from the
//! incoming under edge. The A-smoothing joins `a–b` and `c–d`; the
//! B-smoothing joins `a–d` and `b–c`.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::diagram::PdCode;
use crate::error::{Error, Result};
use crate::invariants::laurent::LaurentPolynomial;

/// Largest diagram the `2^n` state sum accepts.
pub const MAX_CROSSINGS: usize = 24;

fn find(parent: &mut [u32], mut x: u32) -> u32 {
    while parent[x as usize] != x {
        let p = parent[x as usize];
        parent[x as usize] = parent[p as usize];
        x = p;
    }
    x
}

/// Joins two classes; returns whether they were distinct.
fn union(parent: &mut [u32], x: u32, y: u32) -> bool {
    let (rx, ry) = (find(parent, x), find(parent, y));
    if rx == ry {
        return false;
    }
    parent[rx as usize] = ry;
    true
}

/// `⟨D⟩` in the variable `A`, with loop value `−A² − A⁻²` and `⟨O⟩ = 1`.
pub fn kauffman_bracket(pd: &PdCode) -> Result<LaurentPolynomial> {
    let n = pd.len();
    if n == 0 {
        return Ok(LaurentPolynomial::one());
    }
    if n > MAX_CROSSINGS {
        return Err(Error::TooManyCrossings {
            crossings: n,
            limit: MAX_CROSSINGS,
        });
    }
    let mut ids: HashMap<u32, u32> = HashMap::new();
    let corners: Vec<[u32; 4]> = pd
        .crossings
        .iter()
        .map(|x| {
            x.map(|label| {
                let next = ids.len() as u32;
                *ids.entry(label).or_insert(next)
            })
        })
        .collect();
    let edges = ids.len();

    // counts[#A smoothings][#loops]
    let width = edges + 2;
    let counts = (0u64..1 << n)
        .into_par_iter()
        .fold(
            || (vec![0u64; (n + 1) * width], vec![0u32; edges]),
            |(mut acc, mut parent), state| {
                for (i, p) in parent.iter_mut().enumerate() {
                    *p = i as u32;
                }
                let mut components = edges;
                for (i, [a, b, c, d]) in corners.iter().copied().enumerate() {
                    let (j1, j2) = if state >> i & 1 == 0 {
                        ((a, b), (c, d))
                    } else {
                        ((a, d), (b, c))
                    };
                    components -= union(&mut parent, j1.0, j1.1) as usize;
                    components -= union(&mut parent, j2.0, j2.1) as usize;
                }
                let a_count = n - state.count_ones() as usize;
                acc[a_count * width + components] += 1;
                (acc, parent)
            },
        )
        .map(|(acc, _)| acc)
        .reduce(
            || vec![0u64; (n + 1) * width],
            |mut x, y| {
                for (u, v) in x.iter_mut().zip(y) {
                    *u += v;
                }
                x
            },
        );

    let d = LaurentPolynomial::from_terms([(2, -1), (-2, -1)]);
    let mut d_pow = vec![LaurentPolynomial::one()];
    for _ in 1..width {
        let next = &d_pow[d_pow.len() - 1] * &d;
        d_pow.push(next);
    }
    let mut out = LaurentPolynomial::zero();
    for a_count in 0..=n {
        let exp = a_count as i64 - (n - a_count) as i64;
        for loops in 1..width {
            let k = counts[a_count * width + loops];
            if k == 0 {
                continue;
            }
            for (e, c) in d_pow[loops - 1].terms() {
                out.add_term(exp + e, c * k as i64);
            }
        }
    }
    Ok(out)
}

/// Jones polynomial in `t`: `(−A³)^{−w}⟨D⟩` at `A = t^{−1/4}`.
pub fn jones(pd: &PdCode) -> Result<LaurentPolynomial> {
    let bracket = kauffman_bracket(pd)?;
    let w = pd.writhe();
    let sign = if w.rem_euclid(2) == 0 { 1 } else { -1 };
    let normalized = &bracket * &LaurentPolynomial::monomial(-3 * w, sign);
    normalized
        .divide_exponents(-4)
        .ok_or_else(|| Error::InvalidInput("bracket exponents are not a knot's".into()))
}

/// `|V(−1)|`.
pub fn determinant(pd: &PdCode) -> Result<u64> {
    Ok(jones(pd)?.eval_minus_one().unsigned_abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknot_and_trefoil() {
        assert_eq!(kauffman_bracket(&PdCode::empty()).unwrap(), LaurentPolynomial::one());
        let trefoil = PdCode::parse("[[1,5,2,4],[3,1,4,6],[5,3,6,2]]").unwrap();
        let v = jones(&trefoil).unwrap();
        assert_eq!(v, LaurentPolynomial::from_terms([(1, 1), (3, 1), (4, -1)]));
        assert_eq!(determinant(&trefoil).unwrap(), 3);
    }

    #[test]
    fn single_kinks() {
        // [1, 1, 2, 2]: the A-smoothing splits off a loop
        let pos = PdCode::with_signs(vec![[1, 1, 2, 2]], vec![crate::Sign::Pos]).unwrap();
        assert_eq!(kauffman_bracket(&pos).unwrap(), LaurentPolynomial::monomial(3, -1));
        assert_eq!(jones(&pos).unwrap(), LaurentPolynomial::one());
        let neg = PdCode::with_signs(vec![[1, 2, 2, 1]], vec![crate::Sign::Neg]).unwrap();
        assert_eq!(kauffman_bracket(&neg).unwrap(), LaurentPolynomial::monomial(-3, -1));
        assert_eq!(jones(&neg).unwrap(), LaurentPolynomial::one());
    }

    #[test]
    fn too_many_crossings() {
        let big = PdCode::with_signs(vec![[1, 2, 3, 4]; 25], vec![crate::Sign::Pos; 25]).unwrap();
        assert_eq!(
            kauffman_bracket(&big),
            Err(Error::TooManyCrossings {
                crossings: 25,
                limit: 24
            })
        );
    }
}
