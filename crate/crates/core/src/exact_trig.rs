//! Exact sign and ordering arithmetic for angles that are rational
//! multiples of π.
//!
//! Every sign needed by the φ = 0 pipeline reduces to the sign of a sine or
//! a comparison of two cosines at angles `mπ/N`, and both are decided with
//! integer arithmetic alone.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Mul, Neg};

use serde::{Serialize, Serializer};

/// A sign in {−1, 0, +1}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Neg,
    Zero,
    Pos,
}

impl Sign {
    pub fn of_i128(v: i128) -> Sign {
        match v.cmp(&0) {
            Ordering::Less => Sign::Neg,
            Ordering::Equal => Sign::Zero,
            Ordering::Greater => Sign::Pos,
        }
    }

    /// Sign of a float; NaN maps to zero.
    pub fn of_f64(v: f64) -> Sign {
        if v > 0.0 {
            Sign::Pos
        } else if v < 0.0 {
            Sign::Neg
        } else {
            Sign::Zero
        }
    }

    /// `(-1)^n`.
    pub fn parity(n: i64) -> Sign {
        if n.rem_euclid(2) == 0 {
            Sign::Pos
        } else {
            Sign::Neg
        }
    }

    pub fn to_i32(self) -> i32 {
        match self {
            Sign::Neg => -1,
            Sign::Zero => 0,
            Sign::Pos => 1,
        }
    }

    pub fn is_zero(self) -> bool {
        self == Sign::Zero
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Neg => '-',
            Sign::Zero => '0',
            Sign::Pos => '+',
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        Sign::of_i128((self.to_i32() * rhs.to_i32()) as i128)
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        match self {
            Sign::Neg => Sign::Pos,
            Sign::Zero => Sign::Zero,
            Sign::Pos => Sign::Neg,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_i32())
    }
}

impl Serialize for Sign {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_i8(self.to_i32() as i8)
    }
}

fn gcd_i128(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// The angle `mπ/N`, stored reduced modulo 2π and in lowest terms.
///
/// The canonical numerator lies in `[0, 2N)`, so structural equality is
/// equality of angles modulo 2π.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AngleFraction {
    num: i64,
    den: i64,
}

impl AngleFraction {
    /// Panics if `den <= 0`.
    pub fn new(num: i64, den: i64) -> AngleFraction {
        assert!(den > 0, "angle denominator must be positive, got {den}");
        Self::from_wide(num as i128, den as i128)
    }

    fn from_wide(num: i128, den: i128) -> AngleFraction {
        debug_assert!(den > 0);
        let m = num.rem_euclid(2 * den);
        let g = gcd_i128(m, den);
        let (m, d) = (m / g, den / g);
        AngleFraction {
            num: i64::try_from(m).expect("angle numerator overflow"),
            den: i64::try_from(d).expect("angle denominator overflow"),
        }
    }

    pub fn zero() -> AngleFraction {
        AngleFraction { num: 0, den: 1 }
    }

    pub fn numer(&self) -> i64 {
        self.num
    }

    pub fn denom(&self) -> i64 {
        self.den
    }

    /// `k·θ`.
    pub fn scale(&self, k: i64) -> AngleFraction {
        Self::from_wide(self.num as i128 * k as i128, self.den as i128)
    }

    pub fn add(&self, other: &AngleFraction) -> AngleFraction {
        let (n1, d1) = (self.num as i128, self.den as i128);
        let (n2, d2) = (other.num as i128, other.den as i128);
        Self::from_wide(n1 * d2 + n2 * d1, d1 * d2)
    }

    pub fn sub(&self, other: &AngleFraction) -> AngleFraction {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> AngleFraction {
        Self::from_wide(-(self.num as i128), self.den as i128)
    }

    /// Representative in `[0, π]` with the same cosine, as `(m, N)`.
    pub fn folded(&self) -> (i64, i64) {
        (self.num.min(2 * self.den - self.num), self.den)
    }

    pub fn sign_sin(&self) -> Sign {
        if self.num == 0 || self.num == self.den {
            Sign::Zero
        } else if self.num < self.den {
            Sign::Pos
        } else {
            Sign::Neg
        }
    }

    /// cos θ = sin(θ + π/2), evaluated at denominator 2N so odd N needs no
    /// special case.
    pub fn sign_cos(&self) -> Sign {
        Self::from_wide(2 * self.num as i128 + self.den as i128, 2 * self.den as i128).sign_sin()
    }

    pub fn to_radians(&self) -> f64 {
        std::f64::consts::PI * self.num as f64 / self.den as f64
    }

    pub fn sin(&self) -> f64 {
        self.to_radians().sin()
    }

    pub fn cos(&self) -> f64 {
        self.to_radians().cos()
    }
}

impl fmt::Display for AngleFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}π/{}", self.num, self.den)
    }
}

impl Serialize for AngleFraction {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        [self.num, self.den].serialize(serializer)
    }
}

/// Orders `cos x` against `cos y`.
pub fn compare_cos(x: &AngleFraction, y: &AngleFraction) -> Ordering {
    let (mx, nx) = x.folded();
    let (my, ny) = y.folded();
    // cos is strictly decreasing on [0, π]
    let lhs = mx as i128 * ny as i128;
    let rhs = my as i128 * nx as i128;
    rhs.cmp(&lhs)
}

/// Sign of `sin(mπ/N)`.
pub fn sign_sin(m: i64, n: i64) -> Sign {
    AngleFraction::new(m, n).sign_sin()
}

/// Sign of `cos(mπ/N)`.
pub fn sign_cos(m: i64, n: i64) -> Sign {
    AngleFraction::new(m, n).sign_cos()
}
