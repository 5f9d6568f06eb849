//! Elementary moves on triangulations of polyhedra, with exact rational arithmetic.
//!
//! An elementary move splits one `n`-simplex into two by a hyperplane through
//! one of its `(n-2)`-faces, or merges two simplices whose union is again a
//! simplex. This crate synthesizes explicit move scripts connecting any two
//! triangulations of the same polyhedron. It also extends valuations from
//! simplices to polyhedra by inclusion-exclusion.
//!
//! * [`kernel`]: rationals, points, hyperplanes, hulls, intersections.
//! * [`triangulation`]: simplices, triangulations, starrings, common refinements.
//! * [`moves`]: split/merge, move scripts, replay, inversion, a BFS oracle.
//! * [`synthesis`]: script generators connecting triangulations.
//! * [`valuations`]: valuations, inclusion-exclusion extension, BSP uniqueness check.
//! * [`cli`]: the command-line surface and file formats.

pub mod error;
pub mod kernel;
pub mod triangulation;
pub mod moves;
pub mod synthesis;
pub mod valuations;
pub mod cli;

pub use error::{Error, Result};
