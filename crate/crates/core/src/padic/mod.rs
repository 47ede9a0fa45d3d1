//! Exact arithmetic for `Q_q` and `Q_q^n`: scalars in `Z[1/q]`, vectors,
//! cells `c + π^m O^n` with Haar measure, and locally constant functions
//! built from cell indicators.

pub mod cell;
pub mod cellfn;
pub mod scalar;
pub mod random;
pub mod vector;

pub use cell::{Cell, CellRelation};
pub use cellfn::CellFunction;
pub use scalar::{check_prime, PAdic, DEFAULT_PRECISION};
pub use vector::PVec;
