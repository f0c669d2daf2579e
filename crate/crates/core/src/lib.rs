//! Executable order theory and non-Hausdorff topology at desk scale.
//!
//! The crate provides finite posets with Scott/Alexandroff topology
//! generators, finite topological spaces with exact deciders (sobriety,
//! well-filteredness, d-space, coherence), the Smyth power space with the
//! upper Vietoris topology, the complete-Heyting-algebra structure on D(L),
//! Rudin-style minimal irreducible searches, and a symbolic gallery of
//! countable counterexample spaces with machine-checkable witnesses.

pub mod error;
pub mod formats;
pub mod frame;
pub mod gallery;
pub mod generate;
pub mod pointset;
pub mod poset;
pub mod powerspace;
pub mod rudin;
pub mod suite;
pub mod topology;

#[cfg(test)]
pub(crate) mod testutil;

pub use error::{Error, Result};
pub use pointset::PointSet;
pub use poset::Poset;
pub use topology::{SpaceReport, TopSpace, WfParams};
