//! Exact symbolic expansion of invariant Kähler potentials on flag manifolds
//! of the classical groups, in the chart `z ↦ exp Σ_{α∈−Q} z_α E_α`, and the
//! decision of when those coordinates are Bochner (normal) coordinates.
//!
//! The crate is `no_std` and needs only `alloc`. Numerical checks, file
//! formats and the command-line driver live in the companion `flag-bochner`
//! crate.
//!
//! ```
//! use flag_bochner_core::{bochner, lie};
//!
//! let su4 = lie::GroupSpec::new(lie::Family::A, 4).unwrap();
//! let diagram = lie::PaintedDiagram::new(su4, &[1, 3]).unwrap();
//! let verdict = bochner::classify(&diagram, 3).unwrap();
//! assert_eq!(verdict.status, bochner::BochnerStatus::BochnerIff);
//! assert_eq!(verdict.constraints[0].to_string(), "c1 - c3");
//! ```

#![no_std]

extern crate alloc;

pub mod bochner;
pub mod error;
pub mod expansion;
pub mod lie;
pub mod poly;
pub mod realization;

pub use error::Error;
