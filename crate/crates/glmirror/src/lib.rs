//! Mirror superpotentials of `GL_n` flag varieties in exact arithmetic.
//!
//! The crate builds the Landau–Ginzburg superpotential `W` in string and
//! ideal toric charts, tropicalizes it into superpotential polytopes, computes
//! ideal fillings and tropical critical points for dominant weights, and
//! provides checkers for the structural identities relating these objects
//! (monomial Chamber Ansatz minors, coordinate changes, quiver critical-point
//! identities, chart independence, Toeplitz factorizations).

pub mod chamber;
pub mod charts;
pub mod error;
pub mod exact;
pub mod fillings;
pub mod matrix;
pub mod polytopes;
pub mod quiver;
pub mod symbolic;
pub mod toeplitz;
pub mod verify;
pub mod weyl;

pub use error::{MirrorError, Result};
