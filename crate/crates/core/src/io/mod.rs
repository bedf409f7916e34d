//! File formats: group spec JSON, presentation text, scene JSON and SVG.

mod group_file;
mod scene_json;
mod svg;
mod text;

use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::geometry::GeometryError;
use crate::group::GroupError;

pub use group_file::{parse_group_file, parse_group_text, spec_hash, LoadedGroup};
pub use scene_json::{parse_scene_json, scene_to_json};
pub use svg::{render_svg, RenderStyle};
pub use text::{parse_presentation_text, presentation_to_text, PresentationText};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("invalid group: {0}")]
    Validation(#[from] GroupError),
    #[error("invalid presentation: {0}")]
    Presentation(String),
    #[error("invalid scene: {0}")]
    Scene(String),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("{path}: {source}")]
    File { path: PathBuf, source: std::io::Error },
}

pub fn read_file(path: &Path) -> Result<String, IoError> {
    std::fs::read_to_string(path).map_err(|source| IoError::File { path: path.to_path_buf(), source })
}

pub fn write_file(path: &Path, contents: &str) -> Result<(), IoError> {
    std::fs::write(path, contents).map_err(|source| IoError::File { path: path.to_path_buf(), source })
}

fn json_error(e: serde_json::Error) -> IoError {
    IoError::Parse { line: e.line(), column: e.column(), message: e.to_string() }
}
