use std::collections::{BTreeMap, BTreeSet};

use super::primitive::{Label, Point4, Primitive4, Shape4};
use super::rational::Q;
use super::GeometryError;

/// Provenance recorded with every scene.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SceneMeta {
    /// What was built: `loop`, `V`, `W`, `M`, `track` or `K`.
    pub component: String,
    /// Hex SHA-256 of the canonical group spec, when a group was involved.
    pub group: Option<String>,
    pub relations: usize,
    pub generators: usize,
    pub tool: String,
}

impl SceneMeta {
    pub fn new(component: &str, relations: usize, generators: usize) -> Self {
        Self {
            component: component.to_string(),
            group: None,
            relations,
            generators,
            tool: crate::TOOL_VERSION.to_string(),
        }
    }
}

/// Labeled primitives, sorted by label, labels unique.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scene4 {
    pub meta: SceneMeta,
    primitives: Vec<Primitive4>,
}

impl Scene4 {
    pub fn new(meta: SceneMeta, mut primitives: Vec<Primitive4>) -> Result<Self, GeometryError> {
        primitives.sort();
        if let Some(w) = primitives.windows(2).find(|w| w[0].label == w[1].label) {
            return Err(GeometryError::DuplicateLabel(w[0].label.to_string()));
        }
        Ok(Self { meta, primitives })
    }

    pub fn primitives(&self) -> &[Primitive4] {
        &self.primitives
    }

    pub fn len(&self) -> usize {
        self.primitives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primitives.is_empty()
    }

    pub fn get(&self, label: &Label) -> Option<&Primitive4> {
        self.primitives.binary_search_by(|p| p.label.cmp(label)).ok().map(|i| &self.primitives[i])
    }

    /// Primitives whose label starts with `prefix`.
    pub fn with_prefix<'a>(&'a self, prefix: &'a str) -> impl Iterator<Item = &'a Primitive4> + 'a {
        self.primitives.iter().filter(move |p| p.label.as_str().starts_with(prefix))
    }

    pub fn count_kind(&self, kind: &str) -> usize {
        self.primitives.iter().filter(|p| p.shape.kind() == kind).count()
    }

    /// Adds the primitives of `other`, keeping this scene's metadata.
    pub fn extend(self, other: Scene4) -> Result<Self, GeometryError> {
        let mut all = self.primitives;
        all.extend(other.primitives);
        Scene4::new(self.meta, all)
    }

    /// Checks every defining point against `[0, 1]^4`.
    pub fn containment_check(&self) -> ContainmentReport {
        let mut report = ContainmentReport::default();
        for prim in &self.primitives {
            for p in prim.shape.points() {
                report.points_checked += 1;
                for x in &p.0 {
                    if report.max_coordinate.as_ref().is_none_or(|m| x > m) {
                        report.max_coordinate = Some(x.clone());
                    }
                    if report.min_coordinate.as_ref().is_none_or(|m| x < m) {
                        report.min_coordinate = Some(x.clone());
                    }
                }
                if !p.in_unit_cube() {
                    report.violations.push((prim.label.clone(), p.clone()));
                }
            }
        }
        report
    }

    /// Graph formed by the segments: distinct endpoints as vertices (in
    /// sorted order) and one edge per segment.
    pub fn one_skeleton(&self) -> (Vec<Point4>, Vec<(usize, usize)>) {
        let segments: Vec<(&Point4, &Point4)> = self
            .primitives
            .iter()
            .filter_map(|p| match &p.shape {
                Shape4::Segment(a, b) => Some((a, b)),
                _ => None,
            })
            .collect();
        let vertices: BTreeSet<&Point4> = segments.iter().flat_map(|&(a, b)| [a, b]).collect();
        let index: BTreeMap<&Point4, usize> = vertices.iter().enumerate().map(|(i, &p)| (p, i)).collect();
        let edges = segments.iter().map(|(a, b)| (index[a], index[b])).collect();
        (vertices.into_iter().cloned().collect(), edges)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ContainmentReport {
    pub points_checked: usize,
    pub max_coordinate: Option<Q>,
    pub min_coordinate: Option<Q>,
    /// Offending points with the label of their primitive.
    pub violations: Vec<(Label, Point4)>,
}

impl ContainmentReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}
