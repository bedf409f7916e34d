//! Exact constructions for compacta in the 4-cube whose fundamental group is
//! a prescribed countable group.
//!
//! The pipeline has three stages:
//!
//! * [`presentation`] rewrites a group into a triangle presentation whose
//!   relators have length at most three, with every generator used finitely
//!   often, and computes the last relation `m(n)` touching each generator;
//! * [`verify`] certifies finite truncations of that presentation by
//!   Todd–Coxeter coset enumeration;
//! * [`geometry`] builds the piecewise-linear pieces of the compactum with
//!   exact rational coordinates and slices or projects them to the plane.
//!
//! [`io`] and [`cli`] hold the file formats, SVG output and the command line.

pub mod cli;
pub mod geometry;
pub mod group;
pub mod io;
pub mod presentation;
pub mod verify;

pub use group::{make_group, Elem, Group, GroupError, GroupSpec, Order};
pub use presentation::{build_presentation, m_of, Relation, RelationKind, TrianglePresentation};

/// Version string recorded in scene metadata.
pub const TOOL_VERSION: &str = concat!("compactum ", env!("CARGO_PKG_VERSION"));
