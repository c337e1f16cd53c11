//! Harmonic knots `H(a, b, c)`: `x = T_a(t), y = T_b(t), z = T_c(t)`.
//!
//! Every sign is decided exactly. With `τ, σ` the crossing angles,
//! `z(t) − z(s) = −2 sin(chπ/b) sin(ckπ/a)` and
//! `sign(x′(t)y′(t)) = (−1)^{h+k} sign(sin(ahπ/b) sin(bkπ/a))`.

use serde::Serialize;

use crate::diagram::KnotDiagram;
use crate::error::{Error, Result};
use crate::exact_trig::{sign_sin, Sign};
use crate::plane_curve::{enumerate_crossings, gcd, CurveSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct HarmonicKnotSpec {
    pub a: u32,
    pub b: u32,
    pub c: u64,
}

impl HarmonicKnotSpec {
    /// Fails unless `a, b, c` are pairwise coprime (the space curve is
    /// singular otherwise).
    pub fn new(a: u32, b: u32, c: u64) -> Result<HarmonicKnotSpec> {
        let (a64, b64) = (a as u64, b as u64);
        if a == 0 || b == 0 || c == 0 {
            return Err(Error::InvalidInput(format!(
                "degrees must be positive (a = {a}, b = {b}, c = {c})"
            )));
        }
        if gcd(a64, b64) != 1 || gcd(a64, c) != 1 || gcd(b64, c) != 1 {
            return Err(Error::NotPairwiseCoprime { a, b, c });
        }
        Ok(HarmonicKnotSpec { a, b, c })
    }

    pub fn curve(&self) -> CurveSpec {
        CurveSpec { a: self.a, b: self.b }
    }

    /// The same knot with `c` reduced into `(0, ab)`.
    pub fn normalized(&self) -> HarmonicKnotSpec {
        HarmonicKnotSpec {
            c: normalize_c(self.a, self.b, self.c),
            ..*self
        }
    }

    /// The mirror image `H(a, b, c′)`.
    pub fn mirror(&self) -> HarmonicKnotSpec {
        HarmonicKnotSpec {
            c: mirror_c(self.a, self.b, self.c).expect("valid spec is coprime"),
            ..*self
        }
    }

    fn check_pair(&self, k: u32, h: u32) -> Result<()> {
        if self.curve().is_crossing_pair(k, h) {
            Ok(())
        } else {
            Err(Error::InvalidCrossing {
                a: self.a,
                b: self.b,
                k,
                h,
            })
        }
    }

    fn c_mod(&self, n: u32) -> i64 {
        (self.c % (2 * n as u64)) as i64
    }
}

/// `sign(sin(chπ/b)·sin(ckπ/a))`, the factor that depends on `c`.
fn height_factor(spec: &HarmonicKnotSpec, k: u32, h: u32) -> Sign {
    let (a, b) = (spec.a as i64, spec.b as i64);
    sign_sin(spec.c_mod(spec.b) * h as i64, b) * sign_sin(spec.c_mod(spec.a) * k as i64, a)
}

fn nonzero(s: Sign, k: u32, h: u32) -> Result<Sign> {
    if s.is_zero() {
        Err(Error::DegenerateSign { k, h })
    } else {
        Ok(s)
    }
}

/// Sign of `D = (z(t) − z(s))·x′(t)·y′(t)` at crossing `(k, h)`:
/// `−(−1)^{h+k} sin(ahπ/b) sin(bkπ/a) sin(chπ/b) sin(ckπ/a)`.
pub fn crossing_sign(spec: &HarmonicKnotSpec, k: u32, h: u32) -> Result<Sign> {
    spec.check_pair(k, h)?;
    let (a, b) = (spec.a as i64, spec.b as i64);
    let (k64, h64) = (k as i64, h as i64);
    let s = -Sign::parity(h64 + k64) * sign_sin(a * h64, b) * sign_sin(b * k64, a) * height_factor(spec, k, h);
    nonzero(s, k, h)
}

/// Sign of `z(t) − z(s) = −2 sin(chπ/b) sin(ckπ/a)`.
pub fn z_difference_sign(spec: &HarmonicKnotSpec, k: u32, h: u32) -> Result<Sign> {
    spec.check_pair(k, h)?;
    nonzero(-height_factor(spec, k, h), k, h)
}

/// `sign(z(t) − z(s))` for every crossing, in enumeration order.
pub fn zdiff_signs(spec: &HarmonicKnotSpec) -> Result<Vec<Sign>> {
    enumerate_crossings(&spec.curve())?
        .iter()
        .map(|c| z_difference_sign(spec, c.k, c.h))
        .collect()
}

/// `sign(D)` for every crossing, in enumeration order.
pub fn twist_signs(spec: &HarmonicKnotSpec) -> Result<Vec<Sign>> {
    enumerate_crossings(&spec.curve())?
        .iter()
        .map(|c| crossing_sign(spec, c.k, c.h))
        .collect()
}

pub fn build_diagram(spec: &HarmonicKnotSpec) -> Result<KnotDiagram> {
    let crossings = enumerate_crossings(&spec.curve())?;
    let zdiff = crossings
        .iter()
        .map(|c| z_difference_sign(spec, c.k, c.h))
        .collect::<Result<Vec<_>>>()?;
    KnotDiagram::from_zdiff(spec.curve(), crossings, &zdiff)
}

pub fn is_alternating(spec: &HarmonicKnotSpec) -> Result<bool> {
    Ok(build_diagram(spec)?.is_alternating())
}

/// `c ↦ c mod 2ab`, then `c ↦ min(c, 2ab − c)`.
pub fn normalize_c(a: u32, b: u32, c: u64) -> u64 {
    let m = 2 * a as u64 * b as u64;
    let r = c % m;
    r.min(m - r)
}

/// The normalized `c′` with `c′ ≡ c (mod 2a)` and `c′ ≡ −c (mod 2b)`;
/// `H(a, b, c′)` is the mirror image of `H(a, b, c)`.
pub fn mirror_c(a: u32, b: u32, c: u64) -> Result<u64> {
    if gcd(a as u64, b as u64) != 1 {
        return Err(Error::NotCoprime { a, b });
    }
    let (a2, b2) = (2 * a as u64, 2 * b as u64);
    let target_b = (b2 - c % b2) % b2;
    // lcm(2a, 2b) = 2ab, so stepping by 2a through one period finds the
    // unique solution.
    let mut x = c % a2;
    for _ in 0..b {
        if x % b2 == target_b {
            return Ok(normalize_c(a, b, x));
        }
        x += a2;
    }
    unreachable!("c ≡ −c (mod 2) always holds, so the system is solvable")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MirrorClass {
    /// Smaller member of the pair.
    pub representative: u64,
    pub mirror: u64,
    pub self_paired: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Family {
    pub a: u32,
    pub b: u32,
    /// All `c ∈ [1, ab]` coprime to `ab`.
    pub values: Vec<u64>,
    pub classes: Vec<MirrorClass>,
}

/// The `φ(a)φ(b)` admissible heights of `H(a, b, ·)` grouped into mirror
/// pairs.
pub fn enumerate_family(a: u32, b: u32) -> Result<Family> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidInput("degrees must be positive".into()));
    }
    if gcd(a as u64, b as u64) != 1 {
        return Err(Error::NotCoprime { a, b });
    }
    let ab = a as u64 * b as u64;
    let values: Vec<u64> = (1..=ab).filter(|&c| gcd(c, ab) == 1).collect();
    let mut classes = Vec::new();
    let mut taken = std::collections::BTreeSet::new();
    for &c in &values {
        if taken.contains(&c) {
            continue;
        }
        let m = mirror_c(a, b, c)?;
        taken.insert(c);
        taken.insert(m);
        classes.push(MirrorClass {
            representative: c.min(m),
            mirror: c.max(m),
            self_paired: c == m,
        });
    }
    Ok(Family { a, b, values, classes })
}
