//! Table lookup by `(determinant, Jones)`.

use serde::Serialize;

use crate::diagram::{KnotDiagram, PdCode};
use crate::error::Result;
use crate::invariants::bracket::jones;
use crate::invariants::conway::conway_from_a3;
use crate::invariants::fraction::{
    two_bridge_equivalent, two_bridge_equivalent_up_to_mirror, two_bridge_mirror, Fraction,
};
use crate::invariants::laurent::LaurentPolynomial;
use crate::invariants::table::{KnotTable, KnotTableEntry};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Chirality {
    /// Jones polynomial equals the table's.
    AsListed,
    /// Jones polynomial equals the table's with exponents negated.
    Mirror,
    /// The table's Jones polynomial is symmetric, so chirality is undecided.
    Achiral,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KnotMatch {
    pub name: String,
    pub crossings: u32,
    pub chirality: Chirality,
}

impl KnotMatch {
    /// Table name, prefixed with `m` for a mirror image.
    pub fn display_name(&self) -> String {
        match self.chirality {
            Chirality::Mirror => format!("m{}", self.name),
            _ => self.name.clone(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Known,
    /// Several table knots share the invariants.
    Ambiguous,
    /// Not in the bundled table.
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Identification {
    pub status: Status,
    pub candidates: Vec<KnotMatch>,
    pub jones: LaurentPolynomial,
    pub determinant: u64,
    /// For 3-strand diagrams: the Conway fraction agrees with the table
    /// fraction of the matched chirality.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fraction_check: Option<bool>,
}

impl Identification {
    pub fn known(&self) -> Option<&KnotMatch> {
        match self.status {
            Status::Known => self.candidates.first(),
            _ => None,
        }
    }

    pub fn label(&self) -> String {
        match self.status {
            Status::Unknown => "unknown".into(),
            _ => self
                .candidates
                .iter()
                .map(KnotMatch::display_name)
                .collect::<Vec<_>>()
                .join(" | "),
        }
    }
}

/// Looks up a knot with the given invariants and at most `max_crossings`
/// crossings.
pub fn lookup(
    table: &KnotTable,
    jones_poly: &LaurentPolynomial,
    determinant: u64,
    max_crossings: usize,
) -> Identification {
    let mirrored = jones_poly.mirror();
    let candidates: Vec<KnotMatch> = table
        .entries()
        .iter()
        .filter(|e| e.determinant == determinant && e.crossings as usize <= max_crossings)
        .filter_map(|e: &KnotTableEntry| {
            let direct = e.jones == *jones_poly;
            let mirror = e.jones == mirrored;
            let chirality = match (direct, mirror) {
                (true, true) => Chirality::Achiral,
                (true, false) => Chirality::AsListed,
                (false, true) => Chirality::Mirror,
                (false, false) => return None,
            };
            Some(KnotMatch {
                name: e.name.clone(),
                crossings: e.crossings,
                chirality,
            })
        })
        .collect();
    let status = match candidates.len() {
        0 => Status::Unknown,
        1 => Status::Known,
        _ => Status::Ambiguous,
    };
    Identification {
        status,
        candidates,
        jones: jones_poly.clone(),
        determinant,
        fraction_check: None,
    }
}

pub fn identify_pd(pd: &PdCode) -> Result<Identification> {
    let v = jones(pd)?;
    let det = v.eval_minus_one().unsigned_abs();
    Ok(lookup(KnotTable::bundled(), &v, det, pd.len()))
}

pub fn identify(diagram: &KnotDiagram) -> Result<Identification> {
    let mut id = identify_pd(&diagram.pd_code())?;
    if diagram.curve.a == 3 {
        let fraction = conway_from_a3(diagram).and_then(|f| f.fraction()).ok();
        if let (Some(f), Some(m)) = (fraction, id.known()) {
            if let Some(g) = KnotTable::bundled().get(&m.name).and_then(|e| e.fraction) {
                id.fraction_check = fraction_agrees(&f, &g, m.chirality);
            }
        }
    }
    Ok(id)
}

fn fraction_agrees(f: &Fraction, g: &Fraction, chirality: Chirality) -> Option<bool> {
    if f.p == 1 && g.p == 1 {
        return Some(true);
    }
    match chirality {
        Chirality::AsListed => two_bridge_equivalent(f, g),
        Chirality::Mirror => two_bridge_equivalent(f, &two_bridge_mirror(g)),
        Chirality::Achiral => two_bridge_equivalent_up_to_mirror(f, g),
    }
    .ok()
}
