//! Exact dynamics of the birational maps arising from the F0 and dP3 quivers.
//!
//! The two maps act on the positive orthant (dimension 4 for F0, 6 for dP3).
//! Each is semiconjugate to a two-dimensional symplectic map, which in turn is
//! conjugate to a very simple globally periodic map (period 4 for F0, 6 for
//! dP3). That chain drives everything here: closed-form orbit solutions,
//! first integrals obtained by lifting, and the invariant fibers an orbit
//! circulates through.
//!
//! All computation is exact over the rationals, so every identity the crate
//! asserts is checked with zero tolerance. See the `verify` module for the
//! property suites and the `qmaps` binary for the command-line surface.

pub mod closed_form;
pub mod error;
pub mod invariants;
pub mod maps;
pub mod numeric;
pub mod orbit;
pub mod sampling;
pub mod verify;

pub use error::{Error, Result};
pub use maps::{MapId, MapKind, Point};
pub use numeric::{Jet2, Scalar};
