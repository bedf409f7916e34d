//! Exact rational geometry in the unit 4-cube: the scene builders, slices
//! and projections.

mod build;
mod primitive;
pub mod rational;
mod scene;
mod slice;

use thiserror::Error;

use crate::presentation::PresentationError;

pub use build::{build_k, build_m, build_relation_track, build_v, build_w, certified_m, loop_gn, track_pieces};
pub use primitive::{Axis, Label, Point4, Primitive4, Shape4};
pub use rational::Q;
pub use scene::{ContainmentReport, Scene4, SceneMeta};
pub use slice::{project_scene, section_scene, slice_scene, Shape2, SliceItem, SliceResult, P2};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("generator index must be positive, got {0}")]
    InvalidIndex(usize),
    #[error("ruled patch collapses to a segment")]
    DegeneratePatch,
    #[error("ruled patch is not a planar convex quadrilateral")]
    NonPlanarPatch,
    #[error("m({0}) is not certified within the horizon")]
    UncertifiedM(usize),
    #[error("relation r_{0} does not exist")]
    UnknownRelation(usize),
    #[error("duplicate primitive label {0}")]
    DuplicateLabel(String),
    #[error("value out of range: {0}")]
    OutOfRange(String),
    #[error("invalid axes: {0}")]
    InvalidAxes(String),
}

impl From<PresentationError> for GeometryError {
    fn from(e: PresentationError) -> Self {
        match e {
            PresentationError::HorizonExceeded(h) => GeometryError::OutOfRange(format!("horizon {h} exceeded")),
            PresentationError::InvalidIndex(n) => GeometryError::InvalidIndex(n),
            PresentationError::UnknownRelation(n) => GeometryError::UnknownRelation(n),
            PresentationError::InvalidRounds(n) => GeometryError::OutOfRange(format!("rounds {n}")),
        }
    }
}
