//! Chebyshev knots `x = T_a(t), y = T_b(t), z = T_c(t + φ)`.
//!
//! The φ = 0 pipeline ([`harmonic`]) is exact: every crossing sign reduces
//! to signs of sines at rational multiples of π. Phased knots
//! ([`chebyshev_knot`]) use floating point with a certified margin. Both
//! produce a [`KnotDiagram`], which [`invariants`] classifies.

pub mod chebyshev;
pub mod chebyshev_knot;
pub mod dd;
pub mod diagram;
pub mod error;
pub mod exact_trig;
pub mod harmonic;
pub mod invariants;
pub mod plane_curve;

pub use chebyshev_knot::{ChebyshevKnotSpec, Phase, SearchConfig, SearchHit, SignAssignment};
pub use diagram::{KnotDiagram, PdCode};
pub use error::{Error, Result};
pub use exact_trig::{AngleFraction, Sign};
pub use harmonic::HarmonicKnotSpec;
pub use invariants::{ConwayForm, Fraction, LaurentPolynomial};
pub use plane_curve::{Crossing, CurveSpec};
