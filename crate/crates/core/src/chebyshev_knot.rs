//! Chebyshev knots with a phase: `z = T_c(t + φ)`.
//!
//! Heights are evaluated in floating point. A sign `Δ_i = z(t_i) − z(s_i)`
//! is certified when its relative margin `|Δ_i| / max(1, |z(t_i)|, |z(s_i)|)`
//! exceeds `ε` and a double-double re-evaluation agrees on the sign.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::chebyshev::{eval, eval_dd};
use crate::dd::DoubleDouble;
use crate::diagram::{tangent_product_sign, KnotDiagram};
use crate::error::{Error, Result};
use crate::exact_trig::Sign;
use crate::invariants::conway::{abscissa_order, column_sign};
use crate::plane_curve::{enumerate_crossings, gcd, Crossing, CurveSpec};

/// An exact decimal `mantissa · 10^(−scale)`.
///
/// Phases are read as text so that published values like `0.0148` are
/// reproduced bit for bit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Phase {
    mantissa: i64,
    scale: u32,
}

const MAX_SCALE: u32 = 18;

impl Phase {
    pub const ZERO: Phase = Phase { mantissa: 0, scale: 0 };

    pub fn new(mantissa: i64, scale: u32) -> Result<Phase> {
        if scale > MAX_SCALE {
            return Err(Error::InvalidInput(format!("phase has more than {MAX_SCALE} decimals")));
        }
        let (mut m, mut s) = (mantissa, scale);
        while s > 0 && m % 10 == 0 {
            m /= 10;
            s -= 1;
        }
        Ok(Phase { mantissa: m, scale: s })
    }

    pub fn mantissa(&self) -> i64 {
        self.mantissa
    }

    pub fn scale(&self) -> u32 {
        self.scale
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa == 0
    }

    fn pow10(scale: u32) -> i64 {
        10i64.pow(scale)
    }

    /// Nearest double; the division is correctly rounded.
    pub fn to_f64(&self) -> f64 {
        self.mantissa as f64 / Self::pow10(self.scale) as f64
    }

    pub fn to_dd(&self) -> DoubleDouble {
        DoubleDouble::from_ratio(self.mantissa as i128, Self::pow10(self.scale) as i128)
    }

    fn rescale(&self, scale: u32) -> Option<i64> {
        self.mantissa.checked_mul(Self::pow10(scale - self.scale))
    }

    pub fn checked_add(&self, other: &Phase) -> Option<Phase> {
        let s = self.scale.max(other.scale);
        let m = self.rescale(s)?.checked_add(other.rescale(s)?)?;
        Phase::new(m, s).ok()
    }

    pub fn checked_mul_int(&self, k: i64) -> Option<Phase> {
        Phase::new(self.mantissa.checked_mul(k)?, self.scale).ok()
    }

    /// `self / 2`, still an exact decimal.
    pub fn checked_half(&self) -> Option<Phase> {
        Phase::new(self.mantissa.checked_mul(5)?, self.scale + 1).ok()
    }

    pub fn neg(&self) -> Phase {
        Phase {
            mantissa: -self.mantissa,
            scale: self.scale,
        }
    }

    /// `⌊|self| / |step|⌋`.
    pub fn steps_within(&self, step: &Phase) -> Option<u64> {
        let s = self.scale.max(step.scale);
        let (a, b) = (self.rescale(s)?.unsigned_abs(), step.rescale(s)?.unsigned_abs());
        (b != 0).then(|| a / b)
    }
}

impl FromStr for Phase {
    type Err = Error;

    /// Accepts `0.0148`, `-0.01`, `+.5`, `148e-4`.
    fn from_str(text: &str) -> Result<Phase> {
        let bad = || Error::InvalidInput(format!("invalid decimal phase {text:?}"));
        let t = text.trim();
        let (body, exp) = match t.find(['e', 'E']) {
            Some(i) => (&t[..i], t[i + 1..].parse::<i32>().map_err(|_| bad())?),
            None => (t, 0),
        };
        let (neg, digits) = match body.as_bytes().first() {
            Some(b'-') => (true, &body[1..]),
            Some(b'+') => (false, &body[1..]),
            _ => (false, body),
        };
        let (int, frac) = digits.split_once('.').unwrap_or((digits, ""));
        if int.is_empty() && frac.is_empty() {
            return Err(bad());
        }
        if !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let all = format!("{int}{frac}");
        let mut mantissa: i64 = if all.is_empty() {
            0
        } else {
            all.parse().map_err(|_| bad())?
        };
        let mut scale = frac.len() as i32 - exp;
        while scale < 0 {
            mantissa = mantissa.checked_mul(10).ok_or_else(bad)?;
            scale += 1;
        }
        if neg {
            mantissa = -mantissa;
        }
        Phase::new(mantissa, scale as u32)
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.mantissa < 0 { "-" } else { "" };
        let digits = self.mantissa.unsigned_abs().to_string();
        let s = self.scale as usize;
        if s == 0 {
            return write!(f, "{sign}{digits}");
        }
        let padded = format!("{digits:0>width$}", width = s + 1);
        let (int, frac) = padded.split_at(padded.len() - s);
        write!(f, "{sign}{int}.{frac}")
    }
}

impl Serialize for Phase {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct ChebyshevKnotSpec {
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub phi: Phase,
}

impl ChebyshevKnotSpec {
    pub fn new(a: u32, b: u32, c: u32, phi: Phase) -> Result<ChebyshevKnotSpec> {
        let curve = CurveSpec::new(a, b)?;
        if !curve.is_coprime() {
            return Err(Error::NotCoprime { a, b });
        }
        if c == 0 {
            return Err(Error::InvalidInput("c must be positive".into()));
        }
        Ok(ChebyshevKnotSpec { a, b, c, phi })
    }

    pub fn curve(&self) -> CurveSpec {
        CurveSpec { a: self.a, b: self.b }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CertificationPolicy {
    /// Relative margin a sign must exceed.
    pub epsilon: f64,
    /// Re-evaluate in double-double and require the same sign.
    pub double_double: bool,
}

impl Default for CertificationPolicy {
    fn default() -> Self {
        CertificationPolicy {
            epsilon: 1e-9,
            double_double: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SignVector {
    /// `sign(z(t_i) − z(s_i))` in crossing enumeration order.
    pub signs: Vec<Sign>,
    pub margins: Vec<f64>,
    pub min_margin: f64,
}

/// Crossing parameters `t_i, s_i` rounded from double-double values.
#[derive(Debug, Clone)]
struct Parameters {
    t: Vec<DoubleDouble>,
    s: Vec<DoubleDouble>,
}

impl Parameters {
    fn new(curve: &CurveSpec, crossings: &[Crossing]) -> Parameters {
        let ab = curve.ab() as i64;
        Parameters {
            t: crossings
                .iter()
                .map(|c| DoubleDouble::cos_pi_ratio(c.u as i64, ab))
                .collect(),
            s: crossings
                .iter()
                .map(|c| DoubleDouble::cos_pi_ratio(c.u2 as i64, ab))
                .collect(),
        }
    }
}

fn relative_margin(zt: f64, zs: f64) -> f64 {
    let m = (zt - zs).abs() / 1f64.max(zt.abs()).max(zs.abs());
    if m.is_finite() {
        m
    } else {
        0.0
    }
}

fn sign_vector(spec: &ChebyshevKnotSpec, params: &Parameters, policy: &CertificationPolicy) -> Result<SignVector> {
    let phi = spec.phi.to_f64();
    let phi_dd = spec.phi.to_dd();
    let n = params.t.len();
    let mut signs = Vec::with_capacity(n);
    let mut margins = Vec::with_capacity(n);
    for i in 0..n {
        let zt = eval(spec.c, params.t[i].to_f64() + phi);
        let zs = eval(spec.c, params.s[i].to_f64() + phi);
        let margin = relative_margin(zt, zs);
        let sign = Sign::of_f64(zt - zs);
        let ambiguous = || Error::AmbiguousSign {
            index: i,
            margin,
            threshold: policy.epsilon,
        };
        if margin.is_nan() || margin <= policy.epsilon {
            return Err(ambiguous());
        }
        if policy.double_double {
            let d = eval_dd(spec.c, params.t[i] + phi_dd) - eval_dd(spec.c, params.s[i] + phi_dd);
            if Sign::of_f64(d.hi) != sign {
                return Err(ambiguous());
            }
        }
        signs.push(sign);
        margins.push(margin);
    }
    let min_margin = margins.iter().copied().fold(f64::INFINITY, f64::min);
    Ok(SignVector {
        signs,
        margins,
        min_margin,
    })
}

/// Certified `sign(z(t_i) − z(s_i))` for every crossing.
pub fn numeric_sign_vector(spec: &ChebyshevKnotSpec, policy: &CertificationPolicy) -> Result<SignVector> {
    let crossings = enumerate_crossings(&spec.curve())?;
    sign_vector(spec, &Parameters::new(&spec.curve(), &crossings), policy)
}

pub fn build_diagram(spec: &ChebyshevKnotSpec, policy: &CertificationPolicy) -> Result<KnotDiagram> {
    let crossings = enumerate_crossings(&spec.curve())?;
    let v = sign_vector(spec, &Parameters::new(&spec.curve(), &crossings), policy)?;
    KnotDiagram::from_zdiff(spec.curve(), crossings, &v.signs)
}

/// Target over/under pattern: `sign(z(t_i) − z(s_i))` per crossing, in
/// enumeration order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SignAssignment {
    pub signs: Vec<Sign>,
}

impl SignAssignment {
    pub fn new(signs: Vec<Sign>) -> Result<SignAssignment> {
        if signs.iter().any(|s| s.is_zero()) {
            return Err(Error::InvalidInput("target signs must be nonzero".into()));
        }
        Ok(SignAssignment { signs })
    }

    /// Parses a string of `+` and `-`.
    pub fn parse(text: &str) -> Result<SignAssignment> {
        text.trim()
            .chars()
            .map(|ch| match ch {
                '+' => Ok(Sign::Pos),
                '-' => Ok(Sign::Neg),
                _ => Err(Error::InvalidInput(format!(
                    "sign string may only contain + and -, got {ch:?}"
                ))),
            })
            .collect::<Result<Vec<_>>>()
            .map(|signs| SignAssignment { signs })
    }

    /// From twist signs `D_i`: `Δ_i = D_i · sign(x′(t_i)y′(t_i))`.
    pub fn from_twist(curve: &CurveSpec, twist: &[Sign]) -> Result<SignAssignment> {
        let crossings = enumerate_crossings(curve)?;
        check_len(crossings.len(), twist.len())?;
        let signs = crossings
            .iter()
            .zip(twist)
            .map(|(c, &d)| Ok(d * tangent_product_sign(curve, c)?))
            .collect::<Result<Vec<_>>>()?;
        SignAssignment::new(signs)
    }

    /// From a 3-strand Conway sign sequence listed by increasing `x`.
    pub fn from_conway_a3(curve: &CurveSpec, entries: &[Sign]) -> Result<SignAssignment> {
        if curve.a != 3 {
            return Err(Error::NotAThreeStrand(curve.a));
        }
        let crossings = enumerate_crossings(curve)?;
        check_len(crossings.len(), entries.len())?;
        let mut twist = vec![Sign::Zero; crossings.len()];
        for (pos, i) in abscissa_order(&crossings).into_iter().enumerate() {
            twist[i] = entries[pos] * column_sign(curve, &crossings[i]);
        }
        SignAssignment::from_twist(curve, &twist)
    }

    pub fn len(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }

    fn mask(&self) -> u64 {
        self.signs
            .iter()
            .enumerate()
            .filter(|(_, s)| **s == Sign::Pos)
            .fold(0, |m, (i, _)| m | 1 << i)
    }

    /// Every pattern on `n` crossings.
    pub fn all(n: usize) -> Vec<SignAssignment> {
        (0u64..1 << n)
            .map(|m| SignAssignment {
                signs: (0..n)
                    .map(|i| if m >> i & 1 == 1 { Sign::Pos } else { Sign::Neg })
                    .collect(),
            })
            .collect()
    }
}

impl fmt::Display for SignAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.signs.iter().try_for_each(|s| write!(f, "{}", s.as_char()))
    }
}

fn check_len(expected: usize, got: usize) -> Result<()> {
    if expected == got {
        Ok(())
    } else {
        Err(Error::LengthMismatch { expected, got })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchConfig {
    pub c_min: u32,
    pub c_max: u32,
    pub phi_step: Phase,
    /// Phases run over `[−phi_max, phi_max]`.
    pub phi_max: Phase,
    /// Halvings tried around a grid phase whose only mismatches are
    /// uncertified signs.
    pub refine_depth: u32,
    /// Only heights `c` coprime to `ab`.
    pub coprime_only: bool,
    pub policy: CertificationPolicy,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            c_min: 1,
            c_max: 2000,
            phi_step: Phase::new(1, 4).unwrap(),
            phi_max: Phase::new(5, 2).unwrap(),
            refine_depth: 3,
            coprime_only: false,
            policy: CertificationPolicy::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchHit {
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub phi: Phase,
    pub margin: f64,
    pub signs: String,
}

impl SearchHit {
    pub fn spec(&self) -> ChebyshevKnotSpec {
        ChebyshevKnotSpec {
            a: self.a,
            b: self.b,
            c: self.c,
            phi: self.phi,
        }
    }
}

/// Position of a candidate in the search order; smaller is earlier.
/// Packed as `c | grid index | refinement index`.
fn order_key(c: u32, j: u64, sub: u32) -> u64 {
    (c as u64) << 40 | j << 8 | sub as u64
}

/// Grid phase number `j` in the order `0, +h, −h, +2h, −2h, …`.
fn grid_phase(step: &Phase, j: u64) -> Option<Phase> {
    let m = j.div_ceil(2) as i64;
    let p = step.checked_mul_int(m)?;
    Some(if j.is_multiple_of(2) { p.neg() } else { p })
}

/// Refinement number `sub ≥ 1` around a grid phase: `±h/2, ±h/4, …`.
fn refined_phase(base: &Phase, step: &Phase, sub: u32) -> Option<Phase> {
    let r = sub.div_ceil(2);
    let mut d = *step;
    for _ in 0..r {
        d = d.checked_half()?;
    }
    base.checked_add(&if sub % 2 == 1 { d } else { d.neg() })
}

struct SearchContext<'a> {
    curve: CurveSpec,
    params: Parameters,
    t: Vec<f64>,
    s: Vec<f64>,
    config: &'a SearchConfig,
    masks: Vec<u64>,
    by_mask: HashMap<u64, Vec<usize>>,
    best: Vec<AtomicU64>,
}

impl SearchContext<'_> {
    fn admissible(&self, c: u32) -> bool {
        !self.config.coprime_only || gcd(c as u64, self.curve.ab()) == 1
    }

    fn certify(&self, c: u32, phi: Phase, target: usize) -> Option<SearchHit> {
        let spec = ChebyshevKnotSpec {
            a: self.curve.a,
            b: self.curve.b,
            c,
            phi,
        };
        let v = sign_vector(&spec, &self.params, &self.config.policy).ok()?;
        let mask = v
            .signs
            .iter()
            .enumerate()
            .filter(|(_, s)| **s == Sign::Pos)
            .fold(0u64, |m, (i, _)| m | 1 << i);
        (mask == self.masks[target]).then(|| SearchHit {
            a: spec.a,
            b: spec.b,
            c,
            phi,
            margin: v.min_margin,
            signs: v.signs.iter().map(|s| s.as_char()).collect(),
        })
    }

    fn offer(&self, target: usize, key: u64) -> bool {
        key < self.best[target].load(Ordering::Relaxed)
    }

    /// Scans every `c` at grid phase `j`; returns the earliest verified hit
    /// per target.
    fn scan(&self, j: u64) -> Vec<Option<(u64, SearchHit)>> {
        let targets = self.masks.len();
        let mut found: Vec<Option<(u64, SearchHit)>> = vec![None; targets];
        let Some(phi) = grid_phase(&self.config.phi_step, j) else {
            return found;
        };
        let phi_f = phi.to_f64();
        let n = self.t.len();
        let points: Vec<f64> = self.t.iter().chain(&self.s).map(|v| v + phi_f).collect();
        let mut prev = vec![1.0; 2 * n];
        let mut cur = points.clone();
        let eps = self.config.policy.epsilon;
        let mut remaining = targets;
        for c in 1..=self.config.c_max {
            if c > 1 {
                for k in 0..2 * n {
                    let next = 2.0 * points[k] * cur[k] - prev[k];
                    prev[k] = cur[k];
                    cur[k] = next;
                }
            }
            if c < self.config.c_min || !self.admissible(c) {
                continue;
            }
            let (mut mask, mut amb, mut overflow) = (0u64, 0u64, false);
            for i in 0..n {
                let (zt, zs) = (cur[i], cur[n + i]);
                if !zt.is_finite() || !zs.is_finite() {
                    overflow = true;
                    break;
                }
                if relative_margin(zt, zs) > eps {
                    if zt > zs {
                        mask |= 1 << i;
                    }
                } else {
                    amb |= 1 << i;
                }
            }
            if overflow {
                // heights only grow with c off [−1, 1]
                break;
            }
            if amb == 0 {
                if let Some(ts) = self.by_mask.get(&mask) {
                    for &ti in ts {
                        if found[ti].is_some() {
                            continue;
                        }
                        let key = order_key(c, j, 0);
                        if !self.offer(ti, key) {
                            continue;
                        }
                        if let Some(hit) = self.certify(c, phi, ti) {
                            self.best[ti].fetch_min(key, Ordering::Relaxed);
                            found[ti] = Some((key, hit));
                            remaining -= 1;
                        }
                    }
                }
            } else if self.config.refine_depth > 0 {
                #[allow(clippy::needless_range_loop)]
                for ti in 0..targets {
                    if found[ti].is_some() || (mask ^ self.masks[ti]) & !amb != 0 {
                        continue;
                    }
                    for sub in 1..=2 * self.config.refine_depth {
                        let key = order_key(c, j, sub);
                        if !self.offer(ti, key) {
                            break;
                        }
                        let Some(p) = refined_phase(&phi, &self.config.phi_step, sub) else {
                            break;
                        };
                        if let Some(hit) = self.certify(c, p, ti) {
                            self.best[ti].fetch_min(key, Ordering::Relaxed);
                            found[ti] = Some((key, hit));
                            remaining -= 1;
                            break;
                        }
                    }
                }
            }
            if remaining == 0 {
                break;
            }
            // nothing at larger c can beat what is already known
            let bound = order_key(c + 1, 0, 0);
            if (0..targets).all(|ti| found[ti].is_some() || self.best[ti].load(Ordering::Relaxed) < bound) {
                break;
            }
        }
        found
    }
}

/// Searches several targets at once. Entry `i` is the earliest `(c, φ)` in
/// the search order (increasing `c`, then `φ = 0, +h, −h, +2h, …`, with
/// refinements `±h/2^r` placed right after their grid phase) whose
/// certified sign vector equals `targets[i]`.
pub fn search_many(
    a: u32,
    b: u32,
    targets: &[SignAssignment],
    config: &SearchConfig,
) -> Result<Vec<Result<SearchHit>>> {
    let curve = CurveSpec::new(a, b)?;
    let crossings = enumerate_crossings(&curve)?;
    if crossings.len() > 64 {
        return Err(Error::InvalidInput("search supports at most 64 crossings".into()));
    }
    for t in targets {
        check_len(crossings.len(), t.len())?;
    }
    if config.phi_step.is_zero() || config.c_min == 0 || config.c_min > config.c_max {
        return Err(Error::InvalidInput("empty search range".into()));
    }
    if config.c_max >= 1 << 24 {
        return Err(Error::InvalidInput("c_max is too large".into()));
    }
    let steps = config
        .phi_max
        .steps_within(&config.phi_step)
        .ok_or_else(|| Error::InvalidInput("phase range overflows".into()))?;
    let grid = 2 * steps + 1;
    if grid >= 1 << 32 {
        return Err(Error::InvalidInput("phase grid is too fine".into()));
    }
    let params = Parameters::new(&curve, &crossings);
    let masks: Vec<u64> = targets.iter().map(SignAssignment::mask).collect();
    let mut by_mask: HashMap<u64, Vec<usize>> = HashMap::new();
    for (i, &m) in masks.iter().enumerate() {
        by_mask.entry(m).or_default().push(i);
    }
    let ctx = SearchContext {
        curve,
        t: params.t.iter().map(|v| v.to_f64()).collect(),
        s: params.s.iter().map(|v| v.to_f64()).collect(),
        params,
        config,
        masks,
        by_mask,
        best: (0..targets.len()).map(|_| AtomicU64::new(u64::MAX)).collect(),
    };
    let merged = (0..grid).into_par_iter().map(|j| ctx.scan(j)).reduce(
        || vec![None; targets.len()],
        |mut x, y| {
            for (u, v) in x.iter_mut().zip(y) {
                if let Some((kv, _)) = &v {
                    if u.as_ref().is_none_or(|(ku, _)| kv < ku) {
                        *u = v;
                    }
                }
            }
            x
        },
    );
    Ok(merged
        .into_iter()
        .map(|h| h.map(|(_, hit)| hit).ok_or(Error::NotFound))
        .collect())
}

pub fn search_phase(a: u32, b: u32, target: &SignAssignment, config: &SearchConfig) -> Result<SearchHit> {
    search_many(a, b, std::slice::from_ref(target), config)?
        .pop()
        .expect("one result per target")
}
