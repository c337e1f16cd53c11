//! Conway normal forms of 3-strand Chebyshev diagrams.
//!
//! For `a = 3` the plane curve is a Conway normal form `C(e_1, …, e_n)`:
//! one crossing per vertical line `x = cos(jπ/b)`. Entries are listed by
//! increasing `x`; entry number `p` (from 0) is the twist sign `D` times
//! `(−1)^p`, which accounts for the alternating orientation of the twist
//! boxes along the diagram.

use std::fmt;

use serde::Serialize;

use crate::diagram::KnotDiagram;
use crate::error::{Error, Result};
use crate::exact_trig::{compare_cos, Sign};
use crate::invariants::fraction::{continued_fraction_value, Fraction};
use crate::plane_curve::{Crossing, CurveSpec};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ConwayForm {
    pub entries: Vec<i64>,
}

impl ConwayForm {
    pub fn new(entries: Vec<i64>) -> Result<ConwayForm> {
        if entries.is_empty() || entries.contains(&0) {
            return Err(Error::InvalidInput(
                "Conway entries must be nonzero and nonempty".into(),
            ));
        }
        Ok(ConwayForm { entries })
    }

    pub fn fraction(&self) -> Result<Fraction> {
        continued_fraction_value(&self.entries)
    }
}

impl fmt::Display for ConwayForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        write!(f, "C({})", parts.join(", "))
    }
}

/// Crossing indices sorted by increasing abscissa.
pub fn abscissa_order(crossings: &[Crossing]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..crossings.len()).collect();
    idx.sort_by(|&i, &j| compare_cos(&crossings[i].x_angle, &crossings[j].x_angle));
    idx
}

/// `(−1)^p` where `p = b − 1 − j` counts the columns `x = cos(jπ/b)` from
/// the left.
pub fn column_sign(curve: &CurveSpec, crossing: &Crossing) -> Sign {
    Sign::parity(curve.b as i64 - 1 - crossing.column(curve.b) as i64)
}

pub fn conway_from_a3(diagram: &KnotDiagram) -> Result<ConwayForm> {
    if diagram.curve.a != 3 {
        return Err(Error::NotAThreeStrand(diagram.curve.a));
    }
    let plain: Vec<Crossing> = diagram.crossings.iter().map(|c| c.crossing.clone()).collect();
    let entries = abscissa_order(&plain)
        .into_iter()
        .map(|i| {
            let dc = &diagram.crossings[i];
            (dc.twist * column_sign(&diagram.curve, &dc.crossing)).to_i32() as i64
        })
        .collect();
    ConwayForm::new(entries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harmonic::{build_diagram, HarmonicKnotSpec};

    fn conway(a: u32, b: u32, c: u64) -> ConwayForm {
        conway_from_a3(&build_diagram(&HarmonicKnotSpec::new(a, b, c).unwrap()).unwrap()).unwrap()
    }

    #[test]
    fn named_forms() {
        assert_eq!(conway(3, 4, 5).entries, vec![1, 1, 1]);
        assert_eq!(conway(3, 7, 8).entries, vec![1, 1, 1, -1, -1, -1]);
        assert_eq!(conway(3, 7, 8).to_string(), "C(1, 1, 1, -1, -1, -1)");
    }

    // H(3, n, 2n−3) is C(±1, …, ±1) with a common sign; it is +1 for even
    // n. For odd n the form has even length and the knot is amphicheiral,
    // so the common sign does not matter.
    #[test]
    fn alternating_family_has_constant_entries() {
        for n in [4u32, 5, 7, 8, 10, 11, 13, 14] {
            let f = conway(3, n, (2 * n - 3) as u64);
            let expect = if n % 2 == 0 { 1 } else { f.entries[0] };
            assert!(f.entries.iter().all(|&e| e == expect), "n={n}: {f}");
        }
    }

    #[test]
    fn one_crossing_per_column() {
        let d = build_diagram(&HarmonicKnotSpec::new(3, 11, 13).unwrap()).unwrap();
        let mut cols: Vec<u64> = d.crossings.iter().map(|c| c.crossing.column(11)).collect();
        cols.sort_unstable();
        assert_eq!(cols, (1..11).collect::<Vec<u64>>());
    }

    #[test]
    fn rejects_other_strand_counts() {
        let d = build_diagram(&HarmonicKnotSpec::new(4, 5, 7).unwrap()).unwrap();
        assert_eq!(conway_from_a3(&d), Err(Error::NotAThreeStrand(4)));
    }
}
