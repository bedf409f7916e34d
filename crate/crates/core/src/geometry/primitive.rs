use std::fmt;

use num_traits::Zero;

use super::rational::{in_unit_interval, Q};
use super::GeometryError;

/// Coordinate axis of the 4-cube.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axis {
    X1,
    X2,
    X3,
    X4,
}

impl Axis {
    pub const ALL: [Axis; 4] = [Axis::X1, Axis::X2, Axis::X3, Axis::X4];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn parse(text: &str) -> Option<Axis> {
        match text.trim() {
            "x1" => Some(Axis::X1),
            "x2" => Some(Axis::X2),
            "x3" => Some(Axis::X3),
            "x4" => Some(Axis::X4),
            _ => None,
        }
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{}", self.index() + 1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point4(pub [Q; 4]);

impl Point4 {
    pub fn new(x1: Q, x2: Q, x3: Q, x4: Q) -> Self {
        Self([x1, x2, x3, x4])
    }

    pub fn coord(&self, axis: Axis) -> &Q {
        &self.0[axis.index()]
    }

    pub fn in_unit_cube(&self) -> bool {
        self.0.iter().all(in_unit_interval)
    }

    /// `self + (other - self) * s`.
    pub fn lerp(&self, other: &Point4, s: &Q) -> Point4 {
        Point4(std::array::from_fn(|i| &self.0[i] + (&other.0[i] - &self.0[i]) * s))
    }

    fn sub(&self, other: &Point4) -> [Q; 4] {
        std::array::from_fn(|i| &self.0[i] - &other.0[i])
    }
}

/// Geometric content of a primitive.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[allow(clippy::large_enum_variant)]
pub enum Shape4 {
    /// Oriented segment `p -> q`; loop edges follow the loop's direction.
    Segment(Point4, Point4),
    /// Ruled patch `(u, t) -> lerp(lerp(a0, a1, t), lerp(b0, b1, t), u)`.
    /// Only planar patches whose corner quadrilateral `a0, b0, b1, a1` is
    /// convex are admitted, so the patch equals the convex hull of its corners.
    Patch { a0: Point4, a1: Point4, b0: Point4, b1: Point4 },
    /// Filled triangle.
    Tri(Point4, Point4, Point4),
}

impl Shape4 {
    pub fn patch(a0: Point4, a1: Point4, b0: Point4, b1: Point4) -> Result<Self, GeometryError> {
        if a0 == a1 && b0 == b1 {
            return Err(GeometryError::DegeneratePatch);
        }
        let shape = Shape4::Patch { a0, a1, b0, b1 };
        if !planar_convex(&shape.corners()) {
            return Err(GeometryError::NonPlanarPatch);
        }
        Ok(shape)
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Shape4::Segment(..) => "segment",
            Shape4::Patch { .. } => "patch",
            Shape4::Tri(..) => "tri",
        }
    }

    /// Defining points in serialization order (`a0, a1, b0, b1` for patches).
    pub fn points(&self) -> Vec<&Point4> {
        match self {
            Shape4::Segment(p, q) => vec![p, q],
            Shape4::Patch { a0, a1, b0, b1 } => vec![a0, a1, b0, b1],
            Shape4::Tri(a, b, c) => vec![a, b, c],
        }
    }

    /// Vertices in cyclic order, consecutive duplicates removed.
    pub fn corners(&self) -> Vec<Point4> {
        let raw: Vec<&Point4> = match self {
            Shape4::Segment(p, q) => vec![p, q],
            Shape4::Patch { a0, a1, b0, b1 } => vec![a0, b0, b1, a1],
            Shape4::Tri(a, b, c) => vec![a, b, c],
        };
        let mut out: Vec<Point4> = Vec::with_capacity(raw.len());
        for p in raw {
            if out.last() != Some(p) && (out.is_empty() || out[0] != *p) {
                out.push(p.clone());
            }
        }
        out
    }

    /// Exact point of a patch at parameters `(u, t)`.
    pub fn patch_point(&self, u: &Q, t: &Q) -> Option<Point4> {
        match self {
            Shape4::Patch { a0, a1, b0, b1 } => Some(a0.lerp(a1, t).lerp(&b0.lerp(b1, t), u)),
            _ => None,
        }
    }
}

/// Rank of the difference vectors is at most 2 and, inside that plane, the
/// cyclic corner list is a convex polygon (possibly degenerate).
fn planar_convex(corners: &[Point4]) -> bool {
    if corners.len() <= 3 {
        return true;
    }
    let base = &corners[0];
    let dirs: Vec<[Q; 4]> = corners[1..].iter().map(|p| p.sub(base)).collect();
    // pick the coordinate pair on which the plane projects injectively
    let Some((i, j)) = best_pair(&dirs) else {
        // all corners collinear
        return true;
    };
    // every direction must be a combination of the two spanning ones
    let (u, v) = spanning(&dirs, i, j);
    let det = &u[i] * &v[j] - &u[j] * &v[i];
    for d in &dirs {
        let s = (&d[i] * &v[j] - &d[j] * &v[i]) / &det;
        let t = (&u[i] * &d[j] - &u[j] * &d[i]) / &det;
        if (0..4).any(|k| &u[k] * &s + &v[k] * &t != d[k]) {
            return false;
        }
    }
    let flat: Vec<(Q, Q)> = corners.iter().map(|p| (p.0[i].clone(), p.0[j].clone())).collect();
    let n = flat.len();
    let mut sign = 0i8;
    for k in 0..n {
        let (a, b, c) = (&flat[k], &flat[(k + 1) % n], &flat[(k + 2) % n]);
        let cross = (&b.0 - &a.0) * (&c.1 - &b.1) - (&b.1 - &a.1) * (&c.0 - &b.0);
        let s = if cross.is_zero() {
            0
        } else if cross > Q::zero() {
            1
        } else {
            -1
        };
        if s != 0 {
            if sign != 0 && s != sign {
                return false;
            }
            sign = s;
        }
    }
    true
}

fn best_pair(dirs: &[[Q; 4]]) -> Option<(usize, usize)> {
    for i in 0..4 {
        for j in i + 1..4 {
            for a in 0..dirs.len() {
                for b in a + 1..dirs.len() {
                    if !(&dirs[a][i] * &dirs[b][j] - &dirs[a][j] * &dirs[b][i]).is_zero() {
                        return Some((i, j));
                    }
                }
            }
        }
    }
    None
}

fn spanning(dirs: &[[Q; 4]], i: usize, j: usize) -> ([Q; 4], [Q; 4]) {
    for a in 0..dirs.len() {
        for b in a + 1..dirs.len() {
            if !(&dirs[a][i] * &dirs[b][j] - &dirs[a][j] * &dirs[b][i]).is_zero() {
                return (dirs[a].clone(), dirs[b].clone());
            }
        }
    }
    unreachable!("best_pair found a non-degenerate pair")
}

/// Component tag of a primitive. The text form sorts in construction order
/// because indices are zero-padded.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Label(String);

impl Label {
    pub fn new(text: impl Into<String>) -> Self {
        Self(text.into())
    }

    pub fn axis() -> Self {
        Self::new("axis")
    }

    pub fn loop_edge(n: usize, edge: usize) -> Self {
        Self(format!("loop/{n:08}/e{edge}"))
    }

    pub fn slab(n: usize, edge: usize) -> Self {
        Self(format!("slab/{n:08}/e{edge}"))
    }

    pub fn spine() -> Self {
        Self::new("spine")
    }

    pub fn square(piece: usize) -> Self {
        Self(format!("square/t{piece}"))
    }

    pub fn wall(face: &str, piece: usize) -> Self {
        Self(format!("wall/{face}/t{piece}"))
    }

    pub fn track(n: usize, piece: usize) -> Self {
        Self(format!("track/{n:08}/p{piece:02}"))
    }

    pub fn cap(n: usize) -> Self {
        Self(format!("cap/{n:08}"))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// Leading component tag (`axis`, `loop`, `slab`, ...).
    pub fn component(&self) -> &str {
        self.0.split('/').next().unwrap_or("")
    }

    /// Relation or loop number carried by the label, if any.
    pub fn number(&self) -> Option<usize> {
        self.0.split('/').nth(1).and_then(|s| s.parse().ok())
    }

    /// Primitives sharing a solid tag bound a convex 3-cell.
    pub fn solid(&self) -> Option<&str> {
        (self.component() == "wall").then_some("wall")
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Primitive4 {
    pub label: Label,
    pub shape: Shape4,
}

impl Primitive4 {
    pub fn new(label: Label, shape: Shape4) -> Self {
        Self { label, shape }
    }
}
