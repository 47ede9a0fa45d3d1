//! The complex round trip in C³ with a seed other than the acceptance one.

use radon_core::verify::arch::{complex_round_trip, ArchParams};

#[test]
fn complex_round_trip_in_three_dimensions() {
    let params = ArchParams::default();
    for (p, q) in [(0, 0), (1, 0), (2, 1), (0, 3)] {
        for c in complex_round_trip(3, p, q, &params, 3) {
            assert!(c.passed, "{} {}: {}", c.identity, c.case, c.detail);
        }
    }
}
