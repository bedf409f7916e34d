//! Exact sections, 2D slices and projections of scenes.
//!
//! Every primitive is a convex polygon (a segment being the two-vertex case),
//! so its intersection with an axis hyperplane is again a convex polygon and
//! its image under a coordinate projection is the hull of the projected
//! corners. Primitives tagged with a solid are merged into one hull, which is
//! the slice or projection of the convex cell they bound.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_traits::{Signed, Zero};

use super::primitive::{Axis, Label, Point4, Primitive4, Shape4};
use super::rational::{in_unit_interval, one, zero, Q};
use super::scene::Scene4;
use super::GeometryError;

pub type P2 = (Q, Q);

/// Convex planar set, normalized: segments run from the smaller endpoint,
/// polygons are counterclockwise from their smallest vertex.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Shape2 {
    Point(P2),
    Segment(P2, P2),
    Polygon(Vec<P2>),
}

impl Shape2 {
    pub fn vertices(&self) -> Vec<&P2> {
        match self {
            Shape2::Point(p) => vec![p],
            Shape2::Segment(a, b) => vec![a, b],
            Shape2::Polygon(v) => v.iter().collect(),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Shape2::Point(_) => "point",
            Shape2::Segment(..) => "segment",
            Shape2::Polygon(_) => "polygon",
        }
    }

    /// Whether the point lies in this closed set.
    pub fn contains_point(&self, p: &P2) -> bool {
        match self {
            Shape2::Point(a) => a == p,
            Shape2::Segment(a, b) => on_segment(a, b, p),
            Shape2::Polygon(v) => (0..v.len()).all(|k| !cross(&v[k], &v[(k + 1) % v.len()], p).is_negative()),
        }
    }

    pub fn contains(&self, other: &Shape2) -> bool {
        other.vertices().into_iter().all(|p| self.contains_point(p))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct SliceItem {
    pub label: Label,
    pub shape: Shape2,
}

/// Planar result of [`slice_scene`] or [`project_scene`], in the coordinates
/// of `axes`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SliceResult {
    pub axes: [Axis; 2],
    /// Fixed coordinates of a slice; empty for projections.
    pub fixed: Vec<(Axis, Q)>,
    /// Sorted by label.
    pub items: Vec<SliceItem>,
    /// Points drawn as dots.
    pub markers: Vec<P2>,
}

impl SliceResult {
    pub fn count(&self, kind: &str) -> usize {
        self.items.iter().filter(|i| i.shape.kind() == kind).count()
    }

    pub fn shapes(&self) -> Vec<&Shape2> {
        self.items.iter().map(|i| &i.shape).collect()
    }

    /// The same result with the two planar coordinates swapped.
    pub fn transposed(&self) -> SliceResult {
        let swap = |p: &P2| (p.1.clone(), p.0.clone());
        let mut items: Vec<SliceItem> = self
            .items
            .iter()
            .map(|i| SliceItem {
                label: i.label.clone(),
                shape: hull(i.shape.vertices().into_iter().map(swap).collect()).expect("non-empty shape"),
            })
            .collect();
        items.sort();
        let mut markers: Vec<P2> = self.markers.iter().map(swap).collect();
        markers.sort();
        SliceResult { axes: [self.axes[1], self.axes[0]], fixed: self.fixed.clone(), items, markers }
    }
}

fn cross(o: &P2, a: &P2, b: &P2) -> Q {
    (&a.0 - &o.0) * (&b.1 - &o.1) - (&a.1 - &o.1) * (&b.0 - &o.0)
}

fn on_segment(a: &P2, b: &P2, p: &P2) -> bool {
    cross(a, b, p).is_zero()
        && p.0 >= a.0.clone().min(b.0.clone())
        && p.0 <= a.0.clone().max(b.0.clone())
        && p.1 >= a.1.clone().min(b.1.clone())
        && p.1 <= a.1.clone().max(b.1.clone())
}

/// Convex hull of a finite point set with collinear points dropped.
pub(crate) fn hull(mut points: Vec<P2>) -> Option<Shape2> {
    points.sort();
    points.dedup();
    match points.len() {
        0 => return None,
        1 => return Some(Shape2::Point(points.pop().expect("one point"))),
        _ => {}
    }
    let mut lower: Vec<P2> = Vec::new();
    for p in &points {
        while lower.len() >= 2 && !cross(&lower[lower.len() - 2], &lower[lower.len() - 1], p).is_positive() {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<P2> = Vec::new();
    for p in points.iter().rev() {
        while upper.len() >= 2 && !cross(&upper[upper.len() - 2], &upper[upper.len() - 1], p).is_positive() {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    Some(match lower.len() {
        // all points collinear: the chain is [first, last]
        2 => {
            let b = lower.pop().expect("two points");
            Shape2::Segment(lower.pop().expect("two points"), b)
        }
        _ => Shape2::Polygon(lower),
    })
}

/// Intersection of the convex polygon with cyclic vertices `corners` and the
/// hyperplane `axis = value`. Returns the corners unchanged when the polygon
/// lies in the hyperplane.
fn clip(corners: &[Point4], axis: Axis, value: &Q) -> Vec<Point4> {
    let side: Vec<Ordering> = corners.iter().map(|p| p.coord(axis).cmp(value)).collect();
    if side.iter().all(|&s| s == Ordering::Equal) {
        return corners.to_vec();
    }
    let mut out: Vec<Point4> = Vec::new();
    let n = corners.len();
    for k in 0..n {
        let (p, s) = (&corners[k], side[k]);
        let (q, t) = (&corners[(k + 1) % n], side[(k + 1) % n]);
        if s == Ordering::Equal {
            out.push(p.clone());
        } else if t != Ordering::Equal && s != t {
            let (xp, xq) = (p.coord(axis), q.coord(axis));
            out.push(p.lerp(q, &((value - xp) / (xq - xp))));
        }
    }
    out.sort();
    out.dedup();
    out
}

fn shape_corners(shape: &Shape4) -> Vec<Point4> {
    shape.corners()
}

/// The part of every primitive lying in the hyperplane `axis = value`.
/// Cut points become zero-length segments; primitives inside the hyperplane
/// are kept whole.
pub fn section_scene(scene: &Scene4, axis: Axis, value: &Q) -> Result<Scene4, GeometryError> {
    if !in_unit_interval(value) {
        return Err(GeometryError::OutOfRange(format!("{axis}={value}")));
    }
    let mut prims = Vec::new();
    for prim in scene.primitives() {
        let corners = shape_corners(&prim.shape);
        let cut = clip(&corners, axis, value);
        if cut.len() == corners.len() && cut.iter().all(|p| p.coord(axis) == value) {
            prims.push(prim.clone());
            continue;
        }
        let shape = match cut.as_slice() {
            [] => continue,
            [p] => Shape4::Segment(p.clone(), p.clone()),
            [p, q] => Shape4::Segment(p.clone(), q.clone()),
            _ => unreachable!("a convex polygon meets a transversal hyperplane in at most a segment"),
        };
        prims.push(Primitive4::new(prim.label.clone(), shape));
    }
    Scene4::new(scene.meta.clone(), prims)
}

fn to_plane(p: &Point4, axes: [Axis; 2]) -> P2 {
    (p.coord(axes[0]).clone(), p.coord(axes[1]).clone())
}

/// Collects per-primitive point sets, merges solids, dedupes exact copies
/// (keeping the smallest label) and drops sets contained in another one.
fn finish(parts: Vec<(Label, Vec<P2>)>) -> Vec<SliceItem> {
    let mut solids: BTreeMap<String, Vec<P2>> = BTreeMap::new();
    let mut shapes: BTreeMap<Shape2, Label> = BTreeMap::new();
    let mut add = |shape: Shape2, label: Label| {
        let slot = shapes.entry(shape).or_insert_with(|| label.clone());
        if label < *slot {
            *slot = label;
        }
    };
    for (label, points) in parts {
        if let Some(tag) = label.solid() {
            solids.entry(tag.to_string()).or_default().extend(points);
        } else if let Some(shape) = hull(points) {
            add(shape, label);
        }
    }
    for (tag, points) in solids {
        if let Some(shape) = hull(points) {
            add(shape, Label::new(tag));
        }
    }
    let unique: Vec<(Shape2, Label)> = shapes.into_iter().collect();
    let mut items: Vec<SliceItem> = unique
        .iter()
        .enumerate()
        .filter(|(k, (shape, _))| !unique.iter().enumerate().any(|(j, (other, _))| j != *k && other.contains(shape)))
        .map(|(_, (shape, label))| SliceItem { label: label.clone(), shape: shape.clone() })
        .collect();
    items.sort();
    items
}

fn check_axes(axes: [Axis; 2]) -> Result<(), GeometryError> {
    if axes[0] == axes[1] {
        return Err(GeometryError::InvalidAxes(format!("{} repeated", axes[0])));
    }
    Ok(())
}

/// Intersection of the scene with the plane fixing two coordinates, drawn
/// in the remaining two in increasing axis order.
pub fn slice_scene(scene: &Scene4, fixed: [(Axis, Q); 2]) -> Result<SliceResult, GeometryError> {
    check_axes([fixed[0].0, fixed[1].0])?;
    for (axis, value) in &fixed {
        if !in_unit_interval(value) {
            return Err(GeometryError::OutOfRange(format!("{axis}={value}")));
        }
    }
    let free: Vec<Axis> = Axis::ALL.into_iter().filter(|a| *a != fixed[0].0 && *a != fixed[1].0).collect();
    let axes = [free[0], free[1]];
    let parts = scene
        .primitives()
        .iter()
        .map(|prim| {
            let cut = clip(&clip(&shape_corners(&prim.shape), fixed[0].0, &fixed[0].1), fixed[1].0, &fixed[1].1);
            (prim.label.clone(), cut.iter().map(|p| to_plane(p, axes)).collect())
        })
        .collect();
    let mut fixed = fixed.to_vec();
    fixed.sort();
    Ok(SliceResult { axes, fixed, items: finish(parts), markers: Vec::new() })
}

/// Image of the scene under the projection onto `axes`.
///
/// Projections onto the `(x3, x4)` plane carry dots where the filled square
/// and the far end of the spine land, since both collapse there.
pub fn project_scene(scene: &Scene4, axes: [Axis; 2]) -> Result<SliceResult, GeometryError> {
    check_axes(axes)?;
    let parts = scene
        .primitives()
        .iter()
        .map(|prim| (prim.label.clone(), shape_corners(&prim.shape).iter().map(|p| to_plane(p, axes)).collect()))
        .collect();
    let mut markers = Vec::new();
    let mut sorted = axes;
    sorted.sort();
    if sorted == [Axis::X3, Axis::X4] {
        if scene.with_prefix("square/").next().is_some() {
            markers.push(to_plane(&Point4::new(zero(), zero(), zero(), zero()), axes));
        }
        if scene.get(&Label::spine()).is_some() {
            markers.push(to_plane(&Point4::new(zero(), zero(), one(), zero()), axes));
        }
    }
    markers.sort();
    Ok(SliceResult { axes, fixed: Vec::new(), items: finish(parts), markers })
}
