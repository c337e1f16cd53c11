//! Serializable command results and their text rendering.

use std::fmt::Write;

use chebknot::chebyshev_knot::{self, CertificationPolicy};
use chebknot::harmonic;
use chebknot::invariants::{conway_from_a3, identify, Identification, KnotMatch, Status};
use chebknot::{Error, HarmonicKnotSpec, KnotDiagram, Phase, Sign};
use serde::Serialize;

/// A knot given by `(a, b, c)` and an optional phase.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct KnotSpec {
    pub a: u32,
    pub b: u32,
    pub c: u64,
    /// Absent for harmonic knots.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub phi: Option<Phase>,
}

impl KnotSpec {
    pub fn label(&self) -> String {
        match self.phi {
            Some(phi) => format!("T({}, {}, {}, phi = {phi})", self.a, self.b, self.c),
            None => format!("H({}, {}, {})", self.a, self.b, self.c),
        }
    }
}

pub struct Built {
    pub diagram: KnotDiagram,
    /// Smallest certified relative margin; absent for exact signs.
    pub margin: Option<f64>,
}

/// Exact signs when `phi` is absent or zero, certified numeric signs
/// otherwise.
pub fn build(spec: &KnotSpec, policy: &CertificationPolicy) -> chebknot::Result<Built> {
    match spec.phi.filter(|p| !p.is_zero()) {
        None => {
            let h = HarmonicKnotSpec::new(spec.a, spec.b, spec.c)?;
            Ok(Built {
                diagram: harmonic::build_diagram(&h)?,
                margin: None,
            })
        }
        Some(phi) => {
            let c = u32::try_from(spec.c).map_err(|_| Error::InvalidInput("c is too large".into()))?;
            let k = chebknot::ChebyshevKnotSpec::new(spec.a, spec.b, c, phi)?;
            let v = chebyshev_knot::numeric_sign_vector(&k, policy)?;
            Ok(Built {
                diagram: chebyshev_knot::build_diagram(&k, policy)?,
                margin: Some(v.min_margin),
            })
        }
    }
}

pub fn sign_string(signs: &[Sign]) -> String {
    signs.iter().map(|s| s.as_char()).collect()
}

#[derive(Debug, Serialize)]
pub struct IdentificationReport {
    pub status: Status,
    pub label: String,
    pub candidates: Vec<KnotMatch>,
    pub determinant: u64,
    pub jones: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fraction_check: Option<bool>,
}

impl From<Identification> for IdentificationReport {
    fn from(id: Identification) -> Self {
        IdentificationReport {
            status: id.status,
            label: id.label(),
            determinant: id.determinant,
            jones: id.jones.to_string(),
            fraction_check: id.fraction_check,
            candidates: id.candidates,
        }
    }
}

/// Identification, or `None` when the diagram is too large for the state
/// sum.
pub fn identify_diagram(d: &KnotDiagram) -> chebknot::Result<Option<IdentificationReport>> {
    match identify(d) {
        Ok(id) => Ok(Some(id.into())),
        Err(Error::TooManyCrossings { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

#[derive(Debug, Serialize)]
pub struct ConwayReport {
    pub entries: Vec<i64>,
    /// `None` when a continued-fraction tail vanishes.
    pub fraction: Option<String>,
}

#[derive(Debug, Serialize)]
pub struct DiagramReport {
    pub spec: KnotSpec,
    pub exact: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub min_margin: Option<f64>,
    pub crossings: usize,
    pub zdiff_signs: String,
    pub twist_signs: String,
    pub oriented_signs: String,
    pub writhe: i64,
    pub alternating: bool,
    pub gauss: Vec<i64>,
    pub pd: Vec<[u32; 4]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub conway: Option<ConwayReport>,
    pub identification: Option<IdentificationReport>,
}

impl DiagramReport {
    pub fn new(spec: KnotSpec, built: &Built) -> chebknot::Result<DiagramReport> {
        let d = &built.diagram;
        let conway = (d.curve.a == 3)
            .then(|| conway_from_a3(d))
            .transpose()?
            .map(|f| ConwayReport {
                fraction: f.fraction().ok().map(|q| q.to_string()),
                entries: f.entries,
            });
        Ok(DiagramReport {
            spec,
            exact: built.margin.is_none(),
            min_margin: built.margin,
            crossings: d.crossing_count(),
            zdiff_signs: sign_string(&d.zdiff_signs()),
            twist_signs: sign_string(&d.twist_signs()),
            oriented_signs: sign_string(&d.oriented_signs()),
            writhe: d.writhe(),
            alternating: d.is_alternating(),
            gauss: d.gauss_code(),
            pd: d.pd_code().crossings,
            conway,
            identification: identify_diagram(d)?,
        })
    }

    pub fn text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{}", self.spec.label());
        match self.min_margin {
            Some(m) => {
                let _ = writeln!(s, "signs      certified, min margin {m:.3e}");
            }
            None => {
                let _ = writeln!(s, "signs      exact");
            }
        }
        let _ = writeln!(s, "crossings  {}", self.crossings);
        let _ = writeln!(s, "z diff     {}", self.zdiff_signs);
        let _ = writeln!(s, "twist D    {}", self.twist_signs);
        let _ = writeln!(s, "oriented   {}  (writhe {})", self.oriented_signs, self.writhe);
        let _ = writeln!(s, "alternating {}", if self.alternating { "yes" } else { "no" });
        if let Some(c) = &self.conway {
            let entries: Vec<String> = c.entries.iter().map(i64::to_string).collect();
            let frac = c.fraction.as_deref().unwrap_or("undefined (vanishing tail)");
            let _ = writeln!(s, "conway     C({})  fraction {frac}", entries.join(", "));
        }
        let _ = writeln!(s, "gauss      {}", gauss_text(&self.gauss));
        let _ = writeln!(s, "pd         {}", pd_text(&self.pd));
        match &self.identification {
            Some(id) => s.push_str(&id.text()),
            None => {
                let _ = writeln!(s, "knot       not identified (too many crossings for the state sum)");
            }
        }
        s
    }
}

impl IdentificationReport {
    pub fn text(&self) -> String {
        let mut s = String::new();
        let knot = match (self.status, self.label.as_str()) {
            (Status::Known, "0_1") => "0_1 (unknot)".to_string(),
            (Status::Ambiguous, l) => format!("ambiguous: {l}"),
            (_, l) => l.to_string(),
        };
        let _ = writeln!(s, "knot       {knot}");
        let _ = writeln!(s, "determinant {}", self.determinant);
        let _ = writeln!(s, "jones      {}", self.jones);
        if let Some(ok) = self.fraction_check {
            let _ = writeln!(
                s,
                "fraction check {}",
                if ok {
                    "agrees with table"
                } else {
                    "DISAGREES with table"
                }
            );
        }
        s
    }
}

pub fn gauss_text(code: &[i64]) -> String {
    code.iter()
        .map(|&g| format!("{}{}", if g > 0 { 'O' } else { 'U' }, g.abs()))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn pd_text(pd: &[[u32; 4]]) -> String {
    let parts: Vec<String> = pd
        .iter()
        .map(|x| format!("X[{},{},{},{}]", x[0], x[1], x[2], x[3]))
        .collect();
    format!("PD[{}]", parts.join(", "))
}
