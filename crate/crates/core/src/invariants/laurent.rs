use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg};

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Integer Laurent polynomial in one variable. Zero coefficients are never
/// stored, so structural equality is polynomial equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPolynomial {
    terms: BTreeMap<i64, i64>,
}

impl LaurentPolynomial {
    pub fn zero() -> LaurentPolynomial {
        LaurentPolynomial::default()
    }

    pub fn one() -> LaurentPolynomial {
        LaurentPolynomial::monomial(0, 1)
    }

    pub fn monomial(exp: i64, coeff: i64) -> LaurentPolynomial {
        let mut p = LaurentPolynomial::zero();
        p.add_term(exp, coeff);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, i64)>>(terms: I) -> LaurentPolynomial {
        let mut p = LaurentPolynomial::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exp: i64, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let entry = self.terms.entry(exp).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> i64 {
        self.terms.get(&exp).copied().unwrap_or(0)
    }

    /// `(exponent, coefficient)` pairs by ascending exponent.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Substitutes `x ↦ x^k`.
    pub fn scale_exponents(&self, k: i64) -> LaurentPolynomial {
        LaurentPolynomial::from_terms(self.terms().map(|(e, c)| (e * k, c)))
    }

    /// Inverse of [`scale_exponents`](Self::scale_exponents); `None` if some
    /// exponent is not a multiple of `k`.
    pub fn divide_exponents(&self, k: i64) -> Option<LaurentPolynomial> {
        self.terms()
            .map(|(e, c)| (e % k == 0).then_some((e / k, c)))
            .collect::<Option<Vec<_>>>()
            .map(LaurentPolynomial::from_terms)
    }

    /// `x ↦ x⁻¹`. For a Jones polynomial this is the mirror image.
    pub fn mirror(&self) -> LaurentPolynomial {
        self.scale_exponents(-1)
    }

    pub fn is_palindromic(&self) -> bool {
        *self == self.mirror()
    }

    /// Value at `x = −1`.
    pub fn eval_minus_one(&self) -> i64 {
        self.terms()
            .map(|(e, c)| if e.rem_euclid(2) == 0 { c } else { -c })
            .sum()
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.terms().map(|(e, c)| c as f64 * x.powi(e as i32)).sum()
    }

    /// Compact `exp:coeff;…` form used by the knot table.
    pub fn to_coeff_string(&self) -> String {
        self.terms()
            .map(|(e, c)| format!("{e}:{c}"))
            .collect::<Vec<_>>()
            .join(";")
    }

    pub fn parse_coeff_string(s: &str) -> Result<LaurentPolynomial> {
        let mut p = LaurentPolynomial::zero();
        for item in s.split(';').map(str::trim).filter(|x| !x.is_empty()) {
            let (e, c) = item
                .split_once(':')
                .ok_or_else(|| Error::InvalidInput(format!("bad term {item:?}")))?;
            let e: i64 = e
                .trim()
                .parse()
                .map_err(|_| Error::InvalidInput(format!("bad exponent {e:?}")))?;
            let c: i64 = c
                .trim()
                .parse()
                .map_err(|_| Error::InvalidInput(format!("bad coefficient {c:?}")))?;
            p.add_term(e, c);
        }
        Ok(p)
    }

    /// Ascending-exponent text in the variable `var`, e.g. `t + t^3 - t^4`.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (e, c) in self.terms() {
            if out.is_empty() {
                if c < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(if c < 0 { " - " } else { " + " });
            }
            let mag = c.unsigned_abs();
            match e {
                0 => out.push_str(&mag.to_string()),
                _ => {
                    if mag != 1 {
                        out.push_str(&mag.to_string());
                    }
                    out.push_str(var);
                    if e != 1 {
                        out.push_str(&format!("^{e}"));
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_in("t"))
    }
}

impl Serialize for LaurentPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.terms().map(|(e, c)| [e, c]))
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c);
        }
        out
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial::from_terms(self.terms().map(|(e, c)| (e, -c)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_terms_vanish() {
        let mut p = LaurentPolynomial::monomial(3, 2);
        p.add_term(3, -2);
        assert!(p.is_zero());
        assert_eq!(p, LaurentPolynomial::zero());
    }

    #[test]
    fn display_and_round_trip() {
        let p = LaurentPolynomial::from_terms([(1, 1), (3, 1), (4, -1)]);
        assert_eq!(p.to_string(), "t + t^3 - t^4");
        let q = LaurentPolynomial::from_terms([(-2, 1), (-1, -1), (0, 1), (1, -1), (2, 1)]);
        assert_eq!(q.to_string(), "t^-2 - t^-1 + 1 - t + t^2");
        assert_eq!(LaurentPolynomial::parse_coeff_string(&q.to_coeff_string()).unwrap(), q);
        assert!(q.is_palindromic());
        assert_eq!(q.eval_minus_one(), 5);
    }

    #[test]
    fn arithmetic() {
        let d = LaurentPolynomial::from_terms([(2, -1), (-2, -1)]);
        let sq = &d * &d;
        assert_eq!(sq, LaurentPolynomial::from_terms([(4, 1), (0, 2), (-4, 1)]));
        assert_eq!(sq.divide_exponents(4).unwrap().to_string(), "t^-1 + 2 + t");
        assert!(d.divide_exponents(4).is_none());
        assert!((&d + &-&d).is_zero());
    }
}
