//! The plane Chebyshev curve `T_b(x) = T_a(y)`, parametrized by
//! `x = T_a(t), y = T_b(t)`.
//!
//! Crossings are indexed by pairs `(k, h)` with `k/a + h/b < 1`. The two
//! parameters of a crossing are `t = cos τ` and `s = cos σ` with
//! `τ = (k/a + h/b)π` and `σ = (k/a − h/b)π`. Both are of the form
//! `cos(uπ/ab)`, and the integers `u` collectively form the set `E`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact_trig::AngleFraction;

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct CurveSpec {
    pub a: u32,
    pub b: u32,
}

impl CurveSpec {
    pub fn new(a: u32, b: u32) -> Result<CurveSpec> {
        if a == 0 || b == 0 {
            return Err(Error::InvalidInput(format!(
                "curve degrees must be positive (a = {a}, b = {b})"
            )));
        }
        Ok(CurveSpec { a, b })
    }

    pub fn is_coprime(&self) -> bool {
        gcd(self.a as u64, self.b as u64) == 1
    }

    fn require_coprime(&self) -> Result<()> {
        if self.is_coprime() {
            Ok(())
        } else {
            Err(Error::NotCoprime { a: self.a, b: self.b })
        }
    }

    fn require_odd_a(&self) -> Result<()> {
        if self.a % 2 == 1 {
            Ok(())
        } else {
            Err(Error::EvenA(self.a))
        }
    }

    /// `ab`, the common denominator of all crossing parameters.
    pub fn ab(&self) -> u64 {
        self.a as u64 * self.b as u64
    }

    /// Number of crossings `(a−1)(b−1)/2`.
    pub fn crossing_count(&self) -> usize {
        (self.a as usize - 1) * (self.b as usize - 1) / 2
    }

    /// Whether `(k, h)` indexes a crossing.
    pub fn is_crossing_pair(&self, k: u32, h: u32) -> bool {
        k >= 1
            && k < self.a
            && h >= 1
            && h < self.b
            && (k as u64 * self.b as u64 + h as u64 * self.a as u64) < self.ab()
    }
}

/// One double point of the plane curve.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Crossing {
    pub k: u32,
    pub h: u32,
    /// `t = cos(uπ/ab)`, the smaller parameter.
    pub u: u64,
    /// `s = cos(u2·π/ab)`, the larger parameter.
    pub u2: u64,
    /// `(−1)^u`: +1 on the grid `R`, −1 on `R′`.
    pub parity: i8,
    /// `x = cos(x_angle)`.
    pub x_angle: AngleFraction,
    #[serde(skip)]
    pub y_angle: AngleFraction,
    pub tau: AngleFraction,
    pub sigma: AngleFraction,
}

impl Crossing {
    fn new(spec: &CurveSpec, k: u32, h: u32) -> Crossing {
        let (a, b) = (spec.a as i64, spec.b as i64);
        let ab = a * b;
        let (k, h) = (k as i64, h as i64);
        let u = k * b + h * a;
        let sigma_num = k * b - h * a;
        Crossing {
            k: k as u32,
            h: h as u32,
            u: u as u64,
            u2: sigma_num.unsigned_abs(),
            parity: if u % 2 == 0 { 1 } else { -1 },
            x_angle: AngleFraction::new(u, b),
            y_angle: AngleFraction::new(u, a),
            tau: AngleFraction::new(u, ab),
            sigma: AngleFraction::new(sigma_num, ab),
        }
    }

    /// The smaller parameter `t`.
    pub fn t(&self) -> f64 {
        self.tau.cos()
    }

    /// The larger parameter `s`.
    pub fn s(&self) -> f64 {
        self.sigma.cos()
    }

    pub fn x(&self) -> f64 {
        self.x_angle.cos()
    }

    pub fn y(&self) -> f64 {
        self.y_angle.cos()
    }

    /// Index `j` of the vertical line `x = cos(jπ/b)` through the crossing.
    pub fn column(&self, b: u32) -> u64 {
        fold_index(self.u, b as u64)
    }

    /// Index `l` of the horizontal line `y = cos(lπ/a)` through the crossing.
    pub fn row(&self, a: u32) -> u64 {
        fold_index(self.u, a as u64)
    }
}

fn fold_index(u: u64, n: u64) -> u64 {
    let r = u % (2 * n);
    r.min(2 * n - r)
}

/// Crossings of a coprime curve, in lexicographic `(k, h)` order.
///
/// The parametric formula is symmetric in `(a, k) ↔ (b, h)`, so either
/// degree may be the even one.
pub fn enumerate_crossings(spec: &CurveSpec) -> Result<Vec<Crossing>> {
    spec.require_coprime()?;
    let mut out = Vec::with_capacity(spec.crossing_count());
    for k in 1..spec.a {
        for h in 1..spec.b {
            if spec.is_crossing_pair(k, h) {
                out.push(Crossing::new(spec, k, h));
            }
        }
    }
    debug_assert_eq!(out.len(), spec.crossing_count());
    Ok(out)
}

/// `(|R|, |R′|)`: crossings with `T_b(x) = T_a(y) = +1` and `−1`.
pub fn grid_counts(spec: &CurveSpec) -> Result<(usize, usize)> {
    spec.require_coprime()?;
    spec.require_odd_a()?;
    let (a, b) = (spec.a as usize, spec.b as usize);
    Ok(((b - 1) / 2 * (a - 1) / 2, b / 2 * (a - 1) / 2))
}

/// Components of `T_b(x) = T_a(y)`: `⌊gcd(a,b)/2⌋ + 1`.
pub fn component_count(a: u32, b: u32) -> Result<usize> {
    let spec = CurveSpec::new(a, b)?;
    spec.require_odd_a()?;
    Ok(gcd(a as u64, b as u64) as usize / 2 + 1)
}

/// `(X, Y)` with `πX = b(π − arccos x)`, `πY = a(π − arccos y)`.
pub fn billiard_map(spec: &CurveSpec, x: f64, y: f64) -> Result<(f64, f64)> {
    if !(-1.0..=1.0).contains(&x) || !(-1.0..=1.0).contains(&y) {
        return Err(Error::OutOfSquare { x, y });
    }
    let pi = std::f64::consts::PI;
    Ok((
        spec.b as f64 * (pi - x.acos()) / pi,
        spec.a as f64 * (pi - y.acos()) / pi,
    ))
}

/// Which branch of a crossing a passage runs along.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    /// The smaller parameter `t`.
    T,
    /// The larger parameter `s`.
    S,
}

/// A visit of the curve to a crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Visit {
    pub crossing: usize,
    pub branch: Branch,
    /// Index into `E`: the parameter is `cos(uπ/ab)`.
    pub u: u64,
}

/// All `2n` visits sorted by increasing parameter, i.e. decreasing `u`.
pub fn traversal_order(crossings: &[Crossing]) -> Vec<Visit> {
    let mut visits: Vec<Visit> = crossings
        .iter()
        .enumerate()
        .flat_map(|(i, c)| {
            [
                Visit {
                    crossing: i,
                    branch: Branch::T,
                    u: c.u,
                },
                Visit {
                    crossing: i,
                    branch: Branch::S,
                    u: c.u2,
                },
            ]
        })
        .collect();
    visits.sort_by_key(|p| std::cmp::Reverse(p.u));
    visits
}

/// The permutation induced on crossings by `t ↦ −t` (which sends `u` to
/// `ab − u`). Entry `i` is the crossing whose parameters are `{−t_i, −s_i}`;
/// the branches swap, since `−s_i < −t_i`.
pub fn parameter_reflection(spec: &CurveSpec, crossings: &[Crossing]) -> Vec<usize> {
    let ab = spec.ab();
    crossings
        .iter()
        .map(|c| {
            let (t, s) = (ab - c.u2, ab - c.u);
            crossings
                .iter()
                .position(|d| d.u == t && d.u2 == s)
                .expect("reflected crossing exists")
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BraidLetter {
    /// `s_2 s_4 ⋯ s_E`
    Even,
    /// `s_1 s_3 ⋯ s_O`
    Odd,
}

impl BraidLetter {
    /// Generator indices making up this letter on `strings` strings.
    pub fn generators(self, strings: u32) -> Vec<u32> {
        let start = match self {
            BraidLetter::Even => 2,
            BraidLetter::Odd => 1,
        };
        (start..strings).step_by(2).collect()
    }

    fn name(self) -> &'static str {
        match self {
            BraidLetter::Even => "s_even",
            BraidLetter::Odd => "s_odd",
        }
    }
}

/// Plat closure on `2m` strings labelled `0 … 2m−1`: right ends joined
/// `0–1, 2–3, …`, left ends in the same order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PlatClosure {
    pub strings: u32,
    pub right: Vec<(u32, u32)>,
    pub left: Vec<(u32, u32)>,
    /// Label of the added unbraided string.
    pub free_string: u32,
}

/// Plane braid word read left to right (increasing `x`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PlaneBraid {
    pub strings: u32,
    pub letters: Vec<BraidLetter>,
    pub plat: Option<PlatClosure>,
}

impl PlaneBraid {
    /// Word in the generators `s_i` (1-based, as in `B_n`).
    pub fn expanded(&self) -> Vec<u32> {
        self.letters.iter().flat_map(|l| l.generators(self.strings)).collect()
    }
}

impl fmt::Display for PlaneBraid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.letters.len();
        if n == 0 {
            return write!(f, "1");
        }
        let pairs = n / 2;
        let (first, second) = (self.letters[0], *self.letters.get(1).unwrap_or(&self.letters[0]));
        let mut parts = Vec::new();
        if pairs > 0 {
            let body = format!("({} {})", first.name(), second.name());
            parts.push(if pairs > 1 { format!("{body}^{pairs}") } else { body });
        }
        if n % 2 == 1 {
            parts.push(self.letters[n - 1].name().to_string());
        }
        write!(f, "{}", parts.join(" "))
    }
}

/// The plane braid isotopic to the curve inside `|x| < 1 − ε`.
///
/// Column `x_j = cos(jπ/b)` carries `s_even` for odd `j` and `s_odd` for
/// even `j`; reading left to right visits `j = b−1, …, 1`. For even `b`
/// the plat closure on `a + 1` strings is attached.
pub fn plane_braid_word(spec: &CurveSpec) -> Result<PlaneBraid> {
    spec.require_odd_a()?;
    let letters = (1..spec.b)
        .rev()
        .map(|j| {
            if j % 2 == 1 {
                BraidLetter::Even
            } else {
                BraidLetter::Odd
            }
        })
        .collect();
    let plat = spec.b.is_multiple_of(2).then(|| {
        let strings = spec.a + 1;
        let pairs: Vec<(u32, u32)> = (0..strings / 2).map(|i| (2 * i, 2 * i + 1)).collect();
        PlatClosure {
            strings,
            right: pairs.clone(),
            left: pairs,
            free_string: spec.a,
        }
    });
    Ok(PlaneBraid {
        strings: spec.a,
        letters,
        plat,
    })
}
