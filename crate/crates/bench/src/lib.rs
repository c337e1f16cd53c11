//! Inputs shared by the benchmarks in `benches/`.

use chebknot::harmonic::build_diagram;
use chebknot::{HarmonicKnotSpec, KnotDiagram, PdCode};

/// Harmonic knots of growing size: `(a, b, c)` with `(a−1)(b−1)/2` crossings.
pub const HARMONIC: [(u32, u32, u64); 4] = [(3, 4, 5), (5, 6, 19), (3, 13, 14), (3, 19, 20)];

pub fn diagram(a: u32, b: u32, c: u64) -> KnotDiagram {
    build_diagram(&HarmonicKnotSpec::new(a, b, c).expect("valid spec")).expect("diagram builds")
}

pub fn pd(a: u32, b: u32, c: u64) -> PdCode {
    diagram(a, b, c).pd_code()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_build() {
        for (a, b, c) in HARMONIC {
            assert_eq!(pd(a, b, c).len(), ((a - 1) * (b - 1) / 2) as usize);
        }
    }
}
