//! Double-double arithmetic (about 106 significand bits).
//!
//! Used to re-evaluate phase-shifted Chebyshev heights at twice the working
//! precision when certifying crossing signs.

use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DoubleDouble {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

// π to double-double precision.
const PI_HI: f64 = std::f64::consts::PI;
const PI_LO: f64 = 1.224_646_799_147_353_2e-16;

impl DoubleDouble {
    pub const ZERO: DoubleDouble = DoubleDouble { hi: 0.0, lo: 0.0 };
    pub const ONE: DoubleDouble = DoubleDouble { hi: 1.0, lo: 0.0 };
    pub const PI: DoubleDouble = DoubleDouble { hi: PI_HI, lo: PI_LO };

    pub fn from_f64(x: f64) -> DoubleDouble {
        DoubleDouble { hi: x, lo: 0.0 }
    }

    pub fn from_i128(x: i128) -> DoubleDouble {
        let hi = x as f64;
        let lo = (x - hi as i128) as f64;
        let (hi, lo) = quick_two_sum(hi, lo);
        DoubleDouble { hi, lo }
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn abs(self) -> DoubleDouble {
        if self.hi < 0.0 {
            -self
        } else {
            self
        }
    }

    pub fn mul_f64(self, b: f64) -> DoubleDouble {
        let (p, e) = two_prod(self.hi, b);
        let e = e + self.lo * b;
        let (hi, lo) = quick_two_sum(p, e);
        DoubleDouble { hi, lo }
    }

    /// `num/den` correctly rounded to double-double.
    pub fn from_ratio(num: i128, den: i128) -> DoubleDouble {
        DoubleDouble::from_i128(num) / DoubleDouble::from_i128(den)
    }

    /// `cos(mπ/N)`.
    pub fn cos_pi_ratio(m: i64, n: i64) -> DoubleDouble {
        assert!(n > 0);
        // fold into [0, 1] in units of π
        let (mut p, q) = (m.rem_euclid(2 * n) as i128, n as i128);
        if p > q {
            p = 2 * q - p;
        }
        let mut negate = false;
        if 2 * p > q {
            // cos x = -cos(π - x)
            p = q - p;
            negate = true;
        }
        // now x = pπ/q in [0, π/2]
        let value = if 4 * p > q {
            // cos x = sin(π/2 - x)
            let (p2, q2) = (q - 2 * p, 2 * q);
            sin_taylor(DoubleDouble::from_ratio(p2, q2) * DoubleDouble::PI)
        } else {
            cos_taylor(DoubleDouble::from_ratio(p, q) * DoubleDouble::PI)
        };
        if negate {
            -value
        } else {
            value
        }
    }
}

fn sin_taylor(x: DoubleDouble) -> DoubleDouble {
    let x2 = x * x;
    let mut term = x;
    let mut sum = x;
    let mut k = 1.0;
    loop {
        term = -(term * x2) / DoubleDouble::from_f64((k + 1.0) * (k + 2.0));
        k += 2.0;
        if term.hi.abs() < 1e-34 {
            break;
        }
        sum = sum + term;
    }
    sum
}

fn cos_taylor(x: DoubleDouble) -> DoubleDouble {
    let x2 = x * x;
    let mut term = DoubleDouble::ONE;
    let mut sum = DoubleDouble::ONE;
    let mut k = 0.0;
    loop {
        term = -(term * x2) / DoubleDouble::from_f64((k + 1.0) * (k + 2.0));
        k += 2.0;
        if term.hi.abs() < 1e-34 {
            break;
        }
        sum = sum + term;
    }
    sum
}

impl Div for DoubleDouble {
    type Output = DoubleDouble;

    fn div(self, b: DoubleDouble) -> DoubleDouble {
        let q1 = self.hi / b.hi;
        let r = self - b.mul_f64(q1);
        let q2 = r.hi / b.hi;
        let r = r - b.mul_f64(q2);
        let q3 = r.hi / b.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        DoubleDouble { hi, lo } + DoubleDouble::from_f64(q3)
    }
}

impl Add for DoubleDouble {
    type Output = DoubleDouble;

    fn add(self, b: DoubleDouble) -> DoubleDouble {
        let (s, e) = two_sum(self.hi, b.hi);
        let (t, f) = two_sum(self.lo, b.lo);
        let e = e + t;
        let (s, e) = quick_two_sum(s, e);
        let e = e + f;
        let (hi, lo) = quick_two_sum(s, e);
        DoubleDouble { hi, lo }
    }
}

impl Sub for DoubleDouble {
    type Output = DoubleDouble;

    fn sub(self, b: DoubleDouble) -> DoubleDouble {
        self + (-b)
    }
}

impl Neg for DoubleDouble {
    type Output = DoubleDouble;

    fn neg(self) -> DoubleDouble {
        DoubleDouble {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl Mul for DoubleDouble {
    type Output = DoubleDouble;

    fn mul(self, b: DoubleDouble) -> DoubleDouble {
        let (p, e) = two_prod(self.hi, b.hi);
        let e = e + (self.hi * b.lo + self.lo * b.hi);
        let (hi, lo) = quick_two_sum(p, e);
        DoubleDouble { hi, lo }
    }
}
