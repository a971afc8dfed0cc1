//! Shared inputs for the benchmarks.

use cfc_core::{families::FamilySpec, Graph};

/// Named graphs the benchmarks run against.
pub fn fixtures() -> Vec<(String, Graph)> {
    [
        FamilySpec::Path { n: 7 },
        FamilySpec::H { k: 3, t: 3 },
        FamilySpec::TriangleEnds { t: 5 },
        FamilySpec::S { t: 3 },
        FamilySpec::R { k: 4 },
    ]
    .into_iter()
    .map(|spec| {
        (
            spec.to_string(),
            spec.generate().expect("fixture parameters are valid"),
        )
    })
    .collect()
}
