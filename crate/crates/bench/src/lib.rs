//! Fixtures shared by the criterion benches.

use recurra::{InitialConditions, SystemSpec};

/// `(spec, seeded positive initials)` pairs covering the periodic,
/// unbounded and `m == k` regimes.
pub fn fixtures() -> Vec<(&'static str, SystemSpec, InitialConditions)> {
    [
        ("sys1_k6", SystemSpec::sys_one(6)),
        ("sys2_k4_m2", SystemSpec::sys_two(4, 2)),
        ("sys2_k6_m6", SystemSpec::sys_two(6, 6)),
        ("sys2_k3_m2", SystemSpec::sys_two(3, 2)),
    ]
    .into_iter()
    .map(|(name, spec)| {
        let spec = spec.expect("valid fixture");
        let init = InitialConditions::random_positive(&spec, 1);
        (name, spec, init)
    })
    .collect()
}
