//! Exact arithmetic for stability of quiver representations.
//!
//! The crate computes generic hom and ext dimensions, canonical
//! decompositions, and King (semi)stability for representations of acyclic
//! quivers, entirely over the integers and rationals. On top of the
//! counting engine sit the halfspace descriptions of the domains `D(b)`,
//! their decompositions into cones spanned by exceptional sets, and the
//! cluster-style fan of compatible almost positive roots.
//!
//! Everything the engine reports can be replayed against a brute-force
//! oracle that enumerates representations over small finite fields; the
//! `verify` module packages those comparisons as a fixed battery of
//! checks.

pub mod domains;
pub mod dynkin;
pub mod error;
pub mod fan;
pub mod homext;
pub mod linalg;
pub mod oracle;
pub mod quiver;
pub mod rng;
pub mod stability;
pub mod vector;
pub mod verify;

pub use error::{Error, Result};
pub use homext::{HomExt, Limits, RootClass};
pub use quiver::Quiver;
pub use vector::IntVector;
