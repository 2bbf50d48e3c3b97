//! Computational kernel for graded free resolutions over prime fields:
//! Groebner bases with Schreyer syzygies, minimal free resolutions, Betti
//! tables with regularity and degree-sequence analytics, Koszul and tensor
//! complexes, and constructors for ideals whose regularity is revealed
//! late in the resolution.

pub mod arith;
pub mod construct;
pub mod error;
pub mod freemod;
pub mod groebner;
pub mod resolution;

pub use error::AlgebraError;
