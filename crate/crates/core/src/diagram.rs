//! Knot diagrams on a Chebyshev plane curve.
//!
//! A diagram is the plane curve's crossing list plus, for each crossing,
//! which branch passes over. The curve is a long knot (`t` runs over the
//! whole real line); its two ends lie in the unbounded face and are joined
//! there, so the Gauss sequence is read cyclically.

use std::fmt;

use serde::Serialize;

use crate::chebyshev::derivative_sign_at_angle;
use crate::error::{Error, Result};
use crate::exact_trig::Sign;
use crate::plane_curve::{traversal_order, Branch, Crossing, CurveSpec, Visit};

/// Crossing of a diagram with its three signs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiagramCrossing {
    #[serde(flatten)]
    pub crossing: Crossing,
    /// Sign of `z(t) − z(s)`; +1 means the `t` branch is over.
    pub zdiff: Sign,
    /// Twist sign `D = (z(t) − z(s))·x′(t)·y′(t)`: +1 right twist, −1 left.
    pub twist: Sign,
    /// Usual oriented crossing sign for the traversal by increasing `t`.
    pub oriented: Sign,
}

impl DiagramCrossing {
    pub fn over_first(&self) -> bool {
        self.zdiff == Sign::Pos
    }
}

/// One entry of the Gauss sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Passage {
    pub crossing: usize,
    pub branch: Branch,
    pub u: u64,
    pub over: bool,
    pub twist: Sign,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KnotDiagram {
    pub curve: CurveSpec,
    pub crossings: Vec<DiagramCrossing>,
    /// Passages by increasing parameter.
    pub gauss: Vec<Passage>,
}

/// Sign of `x′(t)·y′(t)` at the `t` branch of a crossing.
pub fn tangent_product_sign(curve: &CurveSpec, crossing: &Crossing) -> Result<Sign> {
    let sx = derivative_sign_at_angle(curve.a, &crossing.tau)?;
    let sy = derivative_sign_at_angle(curve.b, &crossing.tau)?;
    let s = sx * sy;
    if s.is_zero() {
        return Err(Error::DegenerateSign {
            k: crossing.k,
            h: crossing.h,
        });
    }
    Ok(s)
}

// Sign of the cross product (t-tangent) × (s-tangent). The two tangents have
// opposite slopes, y′(s)/x′(s) = −y′(t)/x′(t), so the cross product equals
// −2·y′(t)·x′(s).
fn branch_cross_sign(curve: &CurveSpec, crossing: &Crossing) -> Result<Sign> {
    let yt = derivative_sign_at_angle(curve.b, &crossing.tau)?;
    let xs = derivative_sign_at_angle(curve.a, &crossing.sigma)?;
    let s = -(yt * xs);
    if s.is_zero() {
        return Err(Error::DegenerateSign {
            k: crossing.k,
            h: crossing.h,
        });
    }
    Ok(s)
}

impl KnotDiagram {
    /// Builds a diagram from the over/under data `zdiff[i] = sign(z(t_i) − z(s_i))`.
    pub fn from_zdiff(curve: CurveSpec, crossings: Vec<Crossing>, zdiff: &[Sign]) -> Result<KnotDiagram> {
        if zdiff.len() != crossings.len() {
            return Err(Error::LengthMismatch {
                expected: crossings.len(),
                got: zdiff.len(),
            });
        }
        let visits = traversal_order(&crossings);
        let mut out = Vec::with_capacity(crossings.len());
        for (c, &z) in crossings.into_iter().zip(zdiff) {
            if z.is_zero() {
                return Err(Error::DegenerateSign { k: c.k, h: c.h });
            }
            let twist = z * tangent_product_sign(&curve, &c)?;
            let t_cross_s = branch_cross_sign(&curve, &c)?;
            // over × under
            let oriented = if z == Sign::Pos { t_cross_s } else { -t_cross_s };
            out.push(DiagramCrossing {
                crossing: c,
                zdiff: z,
                twist,
                oriented,
            });
        }
        let gauss = visits
            .into_iter()
            .map(|Visit { crossing, branch, u }| {
                let dc = &out[crossing];
                let over = match branch {
                    Branch::T => dc.zdiff == Sign::Pos,
                    Branch::S => dc.zdiff == Sign::Neg,
                };
                Passage {
                    crossing,
                    branch,
                    u,
                    over,
                    twist: dc.twist,
                }
            })
            .collect();
        Ok(KnotDiagram {
            curve,
            crossings: out,
            gauss,
        })
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn zdiff_signs(&self) -> Vec<Sign> {
        self.crossings.iter().map(|c| c.zdiff).collect()
    }

    pub fn twist_signs(&self) -> Vec<Sign> {
        self.crossings.iter().map(|c| c.twist).collect()
    }

    pub fn oriented_signs(&self) -> Vec<Sign> {
        self.crossings.iter().map(|c| c.oriented).collect()
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.oriented.to_i32() as i64).sum()
    }

    /// Over/under alternates along the closed Gauss sequence.
    pub fn is_alternating(&self) -> bool {
        let n = self.gauss.len();
        (0..n).all(|i| self.gauss[i].over != self.gauss[(i + 1) % n].over)
    }

    /// Signed Gauss code: `+(id+1)` for an over passage, `−(id+1)` for under.
    pub fn gauss_code(&self) -> Vec<i64> {
        self.gauss
            .iter()
            .map(|p| {
                let id = p.crossing as i64 + 1;
                if p.over {
                    id
                } else {
                    -id
                }
            })
            .collect()
    }

    /// Planar diagram code with edges `1 … 2n` labelled along the traversal
    /// (edge `i` enters passage `i`); the closing edge through the unbounded
    /// face is edge 1.
    pub fn pd_code(&self) -> PdCode {
        let n2 = self.gauss.len() as u32;
        if n2 == 0 {
            return PdCode::empty();
        }
        let incoming = |i: usize| i as u32 + 1;
        let outgoing = |i: usize| (i as u32 + 1) % n2 + 1;
        let mut under = vec![usize::MAX; self.crossings.len()];
        let mut over = vec![usize::MAX; self.crossings.len()];
        for (i, p) in self.gauss.iter().enumerate() {
            if p.over {
                over[p.crossing] = i;
            } else {
                under[p.crossing] = i;
            }
        }
        let mut tuples = Vec::with_capacity(self.crossings.len());
        let mut signs = Vec::with_capacity(self.crossings.len());
        for (c, dc) in self.crossings.iter().enumerate() {
            let (iu, io) = (under[c], over[c]);
            let tuple = match dc.oriented {
                Sign::Pos => [incoming(iu), outgoing(io), outgoing(iu), incoming(io)],
                _ => [incoming(iu), incoming(io), outgoing(iu), outgoing(io)],
            };
            tuples.push(tuple);
            signs.push(dc.oriented);
        }
        PdCode {
            crossings: tuples,
            signs,
        }
    }

    /// The same curve with every crossing switched.
    pub fn mirror(&self) -> KnotDiagram {
        let crossings = self.crossings.iter().map(|c| c.crossing.clone()).collect();
        let zdiff: Vec<Sign> = self.zdiff_signs().into_iter().map(|s| -s).collect();
        KnotDiagram::from_zdiff(self.curve, crossings, &zdiff).expect("mirror of a valid diagram")
    }
}

/// Planar diagram code. Each tuple `[i, j, k, l]` lists edge labels
/// counterclockwise starting from the incoming under edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PdCode {
    pub crossings: Vec<[u32; 4]>,
    #[serde(skip)]
    signs: Vec<Sign>,
}

impl PdCode {
    pub fn empty() -> PdCode {
        PdCode {
            crossings: Vec::new(),
            signs: Vec::new(),
        }
    }

    /// Derives crossing signs from the labels: positive when the over
    /// strand runs `l → j`. Needs at least two crossings for the labels to
    /// be unambiguous; use [`PdCode::with_signs`] otherwise.
    pub fn new(crossings: Vec<[u32; 4]>) -> Result<PdCode> {
        let n2 = 2 * crossings.len() as u32;
        if crossings.len() == 1 {
            return Err(Error::InvalidInput(
                "a one-crossing PD code needs explicit signs".into(),
            ));
        }
        let mut labels: Vec<u32> = crossings.iter().flatten().copied().collect();
        labels.sort_unstable();
        let expected: Vec<u32> = (1..=n2).flat_map(|e| [e, e]).collect();
        if labels != expected {
            return Err(Error::InvalidInput("PD labels must be 1..2n, each used twice".into()));
        }
        let next = |e: u32| e % n2 + 1;
        let mut signs = Vec::with_capacity(crossings.len());
        for x in &crossings {
            let [_, j, _, l] = *x;
            if next(l) == j {
                signs.push(Sign::Pos);
            } else if next(j) == l {
                signs.push(Sign::Neg);
            } else {
                return Err(Error::InvalidInput(format!(
                    "over strand of X{x:?} is not a consecutive edge pair"
                )));
            }
        }
        Ok(PdCode { crossings, signs })
    }

    pub fn with_signs(crossings: Vec<[u32; 4]>, signs: Vec<Sign>) -> Result<PdCode> {
        if crossings.len() != signs.len() {
            return Err(Error::LengthMismatch {
                expected: crossings.len(),
                got: signs.len(),
            });
        }
        Ok(PdCode { crossings, signs })
    }

    /// Parses `[[1,5,2,4],[3,1,4,6],…]`.
    pub fn parse(text: &str) -> Result<PdCode> {
        let nums: Vec<u32> = text
            .split(|ch: char| !ch.is_ascii_digit())
            .filter(|s| !s.is_empty())
            .map(|s| s.parse().map_err(|_| Error::InvalidInput(format!("bad PD label {s}"))))
            .collect::<Result<_>>()?;
        if !nums.len().is_multiple_of(4) {
            return Err(Error::InvalidInput("PD code length is not a multiple of 4".into()));
        }
        PdCode::new(nums.chunks(4).map(|c| [c[0], c[1], c[2], c[3]]).collect())
    }

    pub fn len(&self) -> usize {
        self.crossings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.crossings.is_empty()
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn writhe(&self) -> i64 {
        self.signs.iter().map(|s| s.to_i32() as i64).sum()
    }

    /// Number of faces of the diagram on the sphere. A connected planar
    /// diagram with `n ≥ 1` crossings has `n + 2`.
    pub fn face_count(&self) -> usize {
        if self.crossings.is_empty() {
            return 2;
        }
        // Each crossing contributes four corners; corner (c, p) sits between
        // positions p and p+1 (counterclockwise). Walking a face: leave the
        // corner along the edge at position p+1, arrive at the other end of
        // that edge, then take the corner clockwise-before it.
        let n = self.crossings.len();
        let mut ends: std::collections::HashMap<u32, Vec<(usize, usize)>> = Default::default();
        for (c, x) in self.crossings.iter().enumerate() {
            for (p, &e) in x.iter().enumerate() {
                ends.entry(e).or_default().push((c, p));
            }
        }
        let other_end = |c: usize, p: usize| -> (usize, usize) {
            let e = self.crossings[c][p];
            let v = &ends[&e];
            if v[0] == (c, p) {
                v[1]
            } else {
                v[0]
            }
        };
        let mut seen = vec![[false; 4]; n];
        let mut faces = 0;
        for c0 in 0..n {
            for p0 in 0..4 {
                if seen[c0][p0] {
                    continue;
                }
                faces += 1;
                let (mut c, mut p) = (c0, p0);
                while !seen[c][p] {
                    seen[c][p] = true;
                    let (c2, q) = other_end(c, (p + 1) % 4);
                    c = c2;
                    p = q;
                }
            }
        }
        faces
    }
}

impl fmt::Display for PdCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.crossings.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[{},{},{},{}]", x[0], x[1], x[2], x[3])?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_signs_standard_codes() {
        let trefoil = PdCode::parse("[[1,5,2,4],[3,1,4,6],[5,3,6,2]]").unwrap();
        assert_eq!(trefoil.writhe(), 3);
        assert_eq!(trefoil.face_count(), 5);
        let eight = PdCode::parse("[[4,2,5,1],[8,6,1,5],[6,3,7,4],[2,7,3,8]]").unwrap();
        assert_eq!(eight.writhe(), 0);
        assert_eq!(eight.face_count(), 6);
        assert_eq!(eight.to_string(), "[[4,2,5,1],[8,6,1,5],[6,3,7,4],[2,7,3,8]]");
    }

    #[test]
    fn rejects_malformed_codes() {
        assert!(PdCode::parse("[[1,2,3]]").is_err());
        assert!(PdCode::parse("[[1,1,2,2]]").is_err());
        assert!(PdCode::parse("[[1,5,2,4],[3,1,4,6],[5,3,6,7]]").is_err());
    }
}
