use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

fn gcd(mut a: i64, mut b: i64) -> i64 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// Reduced `p/q` with `p ≥ 0`; the sign lives on `q` (as in `9/−5`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Fraction {
    pub p: i64,
    pub q: i64,
}

impl Fraction {
    pub fn new(p: i64, q: i64) -> Result<Fraction> {
        if p == 0 && q == 0 {
            return Err(Error::InvalidInput("0/0 is not a fraction".into()));
        }
        let g = gcd(p, q);
        let (mut p, mut q) = (p / g, q / g);
        if p < 0 {
            p = -p;
            q = -q;
        }
        Ok(Fraction { p, q })
    }

    /// `(p, q mod p)` with `p > 0`, the 2-bridge normal form. Links (even
    /// `p`) are rejected.
    pub fn knot_normal_form(&self) -> Result<(i64, i64)> {
        if self.p == 0 || self.p % 2 == 0 {
            return Err(Error::NotAKnotFraction { p: self.p, q: self.q });
        }
        Ok((self.p, self.q.rem_euclid(self.p)))
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

/// `e_1 + 1/(e_2 + 1/(… + 1/e_n))`: the first entry is outermost.
pub fn continued_fraction_value(entries: &[i64]) -> Result<Fraction> {
    let (&last, rest) = entries
        .split_last()
        .ok_or_else(|| Error::InvalidInput("empty continued fraction".into()))?;
    // value of the tail = num/den
    let (mut num, mut den) = (last as i128, 1i128);
    for (i, &e) in rest.iter().enumerate().rev() {
        if num == 0 {
            return Err(Error::DivisionByZero(i + 1));
        }
        let next = e as i128 * num + den;
        den = num;
        num = next;
    }
    let narrow = |v: i128| i64::try_from(v).map_err(|_| Error::InvalidInput("continued fraction overflows i64".into()));
    Fraction::new(narrow(num)?, narrow(den)?)
}

/// Same 2-bridge knot: `p₁ = p₂` and `q₁ ≡ q₂^{±1} (mod p)`.
pub fn two_bridge_equivalent(f1: &Fraction, f2: &Fraction) -> Result<bool> {
    let (p1, q1) = f1.knot_normal_form()?;
    let (p2, q2) = f2.knot_normal_form()?;
    if p1 != p2 {
        return Ok(false);
    }
    let p = p1 as i128;
    let (q1, q2) = (q1 as i128, q2 as i128);
    Ok(q1 == q2 || (q1 * q2).rem_euclid(p) == 1 % p)
}

/// The mirror image `p/(p − q)`, i.e. `q ↦ −q`.
pub fn two_bridge_mirror(f: &Fraction) -> Fraction {
    Fraction::new(f.p, -f.q).expect("nonzero fraction")
}

/// Equivalent to `f2` or to its mirror image.
pub fn two_bridge_equivalent_up_to_mirror(f1: &Fraction, f2: &Fraction) -> Result<bool> {
    Ok(two_bridge_equivalent(f1, f2)? || two_bridge_equivalent(f1, &two_bridge_mirror(f2))?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fr(p: i64, q: i64) -> Fraction {
        Fraction::new(p, q).unwrap()
    }

    #[test]
    fn normalizes_sign_and_gcd() {
        assert_eq!(fr(-9, 5), Fraction { p: 9, q: -5 });
        assert_eq!(fr(6, 4), Fraction { p: 3, q: 2 });
        assert_eq!(fr(9, -5).to_string(), "9/-5");
    }

    #[test]
    fn continued_fractions() {
        assert_eq!(continued_fraction_value(&[1, 1, 1]).unwrap(), fr(3, 2));
        assert_eq!(continued_fraction_value(&[1, 1, 1, -1, -1, -1]).unwrap(), fr(5, 4));
        assert_eq!(continued_fraction_value(&[-1, -1, -1, -1, 1, 1, 1]).unwrap(), fr(9, -5));
        assert_eq!(continued_fraction_value(&[2, 3]).unwrap(), fr(7, 3));
    }

    #[test]
    fn zero_tail_is_reported() {
        // 1 + 1/(1 + 1/(−1)) has the tail 1 − 1 = 0
        assert_eq!(continued_fraction_value(&[1, 1, -1]), Err(Error::DivisionByZero(1)));
        assert!(continued_fraction_value(&[]).is_err());
    }

    #[test]
    fn equivalences() {
        assert!(two_bridge_equivalent(&fr(9, -5), &fr(9, 4)).unwrap());
        assert!(two_bridge_equivalent(&fr(5, 4), &fr(-5, 1)).unwrap());
        // 1·2 ≢ 1 (mod 3): the two trefoils are mirror images
        assert!(!two_bridge_equivalent(&fr(3, 1), &fr(3, 2)).unwrap());
        assert!(two_bridge_equivalent(&fr(3, 1), &two_bridge_mirror(&fr(3, 2))).unwrap());
        assert!(two_bridge_equivalent_up_to_mirror(&fr(3, 1), &fr(3, 2)).unwrap());
        assert!(matches!(
            two_bridge_equivalent(&fr(4, 1), &fr(4, 3)),
            Err(Error::NotAKnotFraction { .. })
        ));
    }

    #[test]
    fn equivalence_relation_up_to_fifty() {
        let mut set = Vec::new();
        for p in (3..=50i64).step_by(2) {
            for q in 1..p {
                if gcd(p, q) == 1 {
                    set.push(fr(p, q));
                }
            }
        }
        let eq = |x: &Fraction, y: &Fraction| two_bridge_equivalent(x, y).unwrap();
        for x in &set {
            assert!(eq(x, x));
            for y in set.iter().filter(|y| y.p == x.p) {
                assert_eq!(eq(x, y), eq(y, x));
                if eq(x, y) {
                    for z in set.iter().filter(|z| z.p == x.p) {
                        if eq(y, z) {
                            assert!(eq(x, z), "{x} {y} {z}");
                        }
                    }
                }
            }
        }
    }
}
