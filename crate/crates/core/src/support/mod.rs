//! Planar convexity of the zero set of `sMf`: polar duals, support
//! functions, and a grid check that the component of `{sMf = 0}` around 0
//! is the dual of the hull of `supp f ∪ {0}`.

pub mod polygon;
pub mod zero_component;

pub use polygon::{convex_hull, random_origin_polygon, support_function, ConvexPolygon, Coord, Point};
pub use zero_component::{hausdorff_closed_polylines, zero_component_check, PlanarBump, ZeroComponentReport, ZERO_THRESHOLD};
