//! Knot identification: Conway forms and Schubert fractions for 3-strand
//! diagrams, the Kauffman bracket and Jones polynomial, and table lookup.

pub mod bracket;
pub mod conway;
pub mod fraction;
pub mod identify;
pub mod laurent;
pub mod table;

pub use bracket::{determinant, jones, kauffman_bracket};
pub use conway::{conway_from_a3, ConwayForm};
pub use fraction::{continued_fraction_value, two_bridge_equivalent, two_bridge_mirror, Fraction};
pub use identify::{identify, identify_pd, Chirality, Identification, KnotMatch, Status};
pub use laurent::LaurentPolynomial;
pub use table::{KnotTable, KnotTableEntry};
