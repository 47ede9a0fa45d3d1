//! The planar convexity demonstration and exact polar duality.

use crate::support::{random_origin_polygon, zero_component_check, PlanarBump, ZeroComponentReport};

use super::{case_rng, Check};

/// The two families used for the demonstration.
pub fn standard_families() -> Vec<(&'static str, PlanarBump)> {
    vec![
        ("annulus", PlanarBump::Annulus { inner: 1.0, outer: 2.0 }),
        ("off_axis", PlanarBump::OffAxis { center: [1.5, 0.8], radius: 0.3 }),
    ]
}

/// Zero component of `sMf` against the polar dual of the hull, within `3h`.
pub fn zero_component(name: &str, f: &PlanarBump, h: f64) -> (Check, ZeroComponentReport) {
    let report = zero_component_check(f, h);
    let tol = 3.0 * h;
    let check = Check {
        suite: "support".into(),
        identity: "zero_component".into(),
        case: format!("{name} h={h:.6}"),
        samples: report.component_polygon.len(),
        error: Some(report.hausdorff),
        tolerance: Some(tol),
        passed: report.hausdorff <= tol,
        detail: format!("window={:.4}", report.window),
    };
    (check, report)
}

/// `(P^*)^* = P` exactly for seeded random rational polygons around 0.
pub fn duality(count: usize, seed: u64) -> Check {
    let mut failure = None;
    for i in 0..count {
        let p = random_origin_polygon(&mut case_rng(seed, &[20, i as u64]));
        let back = p.polar_dual().and_then(|d| d.polar_dual());
        match back {
            Ok(b) if b == p => {}
            Ok(_) => failure = failure.or(Some(format!("polygon {i}: dual of dual differs"))),
            Err(e) => failure = failure.or(Some(format!("polygon {i}: {e}"))),
        }
    }
    Check {
        suite: "support".into(),
        identity: "polar_duality".into(),
        case: format!("polygons={count}"),
        samples: count,
        error: None,
        tolerance: None,
        passed: failure.is_none(),
        detail: failure.unwrap_or_default(),
    }
}
