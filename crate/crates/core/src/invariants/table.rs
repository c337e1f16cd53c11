//! Bundled table of prime knots through ten crossings, plus the torus
//! knots `T(2, 11)` and `T(2, 13)`.
//!
//! Jones polynomials are those of the listed chirality; the mirror image
//! has exponents negated. Invariants were taken from KnotInfo, whose
//! diagrams are mirror images of Rolfsen's drawings (its `3_1` is the
//! right-handed trefoil), so every Jones polynomial was mirrored to make
//! the names follow Rolfsen's chirality. Schubert fractions are stored
//! as published and already match that chirality.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::invariants::fraction::Fraction;
use crate::invariants::laurent::LaurentPolynomial;

const TABLE_CSV: &str = include_str!("../../data/knot_table.csv");

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KnotTableEntry {
    pub name: String,
    pub crossings: u32,
    pub determinant: u64,
    pub jones: LaurentPolynomial,
    /// Schubert fraction for 2-bridge knots.
    pub fraction: Option<Fraction>,
}

#[derive(Deserialize)]
struct Row {
    name: String,
    crossings: u32,
    determinant: u64,
    jones_coeffs: String,
    fraction_p: Option<i64>,
    fraction_q: Option<i64>,
}

#[derive(Debug, Clone)]
pub struct KnotTable {
    entries: Vec<KnotTableEntry>,
}

impl KnotTable {
    pub fn from_csv(text: &str) -> Result<KnotTable> {
        let mut reader = csv::Reader::from_reader(text.as_bytes());
        let mut entries = Vec::new();
        for row in reader.deserialize::<Row>() {
            let row = row.map_err(|e| Error::Table(e.to_string()))?;
            let jones = LaurentPolynomial::parse_coeff_string(&row.jones_coeffs)
                .map_err(|e| Error::Table(format!("{}: {e}", row.name)))?;
            let fraction = match (row.fraction_p, row.fraction_q) {
                (Some(p), Some(q)) => Some(Fraction::new(p, q)?),
                _ => None,
            };
            entries.push(KnotTableEntry {
                name: row.name,
                crossings: row.crossings,
                determinant: row.determinant,
                jones,
                fraction,
            });
        }
        Ok(KnotTable { entries })
    }

    /// The bundled table, parsed once.
    pub fn bundled() -> &'static KnotTable {
        static TABLE: OnceLock<KnotTable> = OnceLock::new();
        TABLE.get_or_init(|| KnotTable::from_csv(TABLE_CSV).expect("bundled knot table parses"))
    }

    pub fn entries(&self) -> &[KnotTableEntry] {
        &self.entries
    }

    pub fn get(&self, name: &str) -> Option<&KnotTableEntry> {
        self.entries.iter().find(|e| e.name == name)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_table_is_consistent() {
        let t = KnotTable::bundled();
        assert!(t.entries().len() >= 250);
        for e in t.entries() {
            assert_eq!(e.jones.eval_minus_one().unsigned_abs(), e.determinant, "{}", e.name);
            // V(1) = 1
            assert_eq!(e.jones.terms().map(|(_, c)| c).sum::<i64>(), 1, "{}", e.name);
            if let Some(f) = e.fraction {
                assert_eq!(f.p as u64, e.determinant, "{}", e.name);
            }
        }
        assert_eq!(t.get("3_1").unwrap().jones.to_string(), "-t^-4 + t^-3 + t^-1");
        assert_eq!(t.get("0_1").unwrap().jones, LaurentPolynomial::one());
        assert!(t.get("10_165").is_some());
        assert!(t.get("13a_4878").is_some());
    }
}
