use std::path::Path;

use sha2::{Digest, Sha256};

use super::{json_error, read_file, IoError};
use crate::group::{make_group, Group, GroupSpec};

/// A parsed spec together with the group it describes.
#[derive(Debug, Clone)]
pub struct LoadedGroup {
    pub spec: GroupSpec,
    pub group: Group,
}

/// Parses and validates group spec JSON.
pub fn parse_group_text(text: &str) -> Result<LoadedGroup, IoError> {
    let spec: GroupSpec = serde_json::from_str(text).map_err(json_error)?;
    let group = make_group(&spec)?;
    Ok(LoadedGroup { spec, group })
}

pub fn parse_group_file(path: &Path) -> Result<LoadedGroup, IoError> {
    parse_group_text(&read_file(path)?)
}

/// Hex SHA-256 of the canonical JSON of `spec`.
pub fn spec_hash(spec: &GroupSpec) -> String {
    hex::encode(Sha256::digest(spec.canonical_json().as_bytes()))
}
