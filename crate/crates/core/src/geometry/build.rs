//! Builders for the loops, `V`, `W`, `M`, the relation tracks and `K`.
//!
//! Everything lives in the unit 4-cube. The loops sit in the `(x1, x2)`
//! plane; `x3` carries the slabs and the relation tracks (track `n` at
//! `x3 = 1/n`), and `x4` is the sweep parameter of a track, from the loops
//! at `x4 = 0` to the filled cap at `x4 = 1`.

use super::primitive::{Label, Point4, Primitive4, Shape4};
use super::rational::{half_recip, int, one, recip, zero, Q};
use super::scene::{Scene4, SceneMeta};
use super::GeometryError;
use crate::group::Group;
use crate::presentation::{MFunction, PresentationError, Relation, RelationStream, TrianglePresentation};

type Plane = (Q, Q);

fn lift((x1, x2): &Plane, x3: &Q, x4: &Q) -> Point4 {
    Point4::new(x1.clone(), x2.clone(), x3.clone(), x4.clone())
}

fn origin() -> Plane {
    (zero(), zero())
}

/// Upper apex `(1, 1/n)` of loop `g_n`.
fn top(n: usize) -> Plane {
    (one(), recip(n))
}

/// Lower apex `(1, 1/(n + 1/2))` of loop `g_n`.
fn bottom(n: usize) -> Plane {
    (one(), half_recip(n))
}

/// Edges of `g_n` in traversal order: upper, right, lower.
fn loop_edges(n: usize) -> [(Plane, Plane); 3] {
    [(origin(), top(n)), (top(n), bottom(n)), (bottom(n), origin())]
}

/// The loop `g_n` in `I^2 x {0}^2` as three oriented segments.
pub fn loop_gn(n: usize) -> Result<[Primitive4; 3], GeometryError> {
    if n == 0 {
        return Err(GeometryError::InvalidIndex(n));
    }
    let z = zero();
    let mut e = 0;
    Ok(loop_edges(n).map(|(p, q)| {
        let prim = Primitive4::new(Label::loop_edge(n, e), Shape4::Segment(lift(&p, &z, &z), lift(&q, &z, &z)));
        e += 1;
        prim
    }))
}

/// The axis `I x {0}^3` and the loops `g_1..g_count`.
pub fn build_v(count: usize) -> Scene4 {
    let (z, o) = (zero(), one());
    let mut prims =
        vec![Primitive4::new(Label::axis(), Shape4::Segment(lift(&origin(), &z, &z), lift(&(o, zero()), &z, &z)))];
    for n in 1..=count {
        prims.extend(loop_gn(n).expect("n >= 1"));
    }
    Scene4::new(SceneMeta::new("V", 0, count), prims).expect("labels are distinct")
}

fn m_value(m: &MFunction, n: usize) -> Result<usize, GeometryError> {
    m.get(n).filter(|&v| v >= 1).ok_or(GeometryError::UncertifiedM(n))
}

/// Spine `I x {0} x I x {0}`, slabs `g_n x [1/m(n), 1] x {0}` for
/// `n <= count`, and the filled square `I^2 x {0}^2`.
pub fn build_w(m: &MFunction, count: usize) -> Result<Scene4, GeometryError> {
    let (z, o) = (zero(), one());
    let mut prims = vec![Primitive4::new(
        Label::spine(),
        Shape4::patch(
            lift(&origin(), &z, &z),
            lift(&origin(), &o, &z),
            lift(&(one(), zero()), &z, &z),
            lift(&(one(), zero()), &o, &z),
        )?,
    )];
    for n in 1..=count {
        let lo = recip(m_value(m, n)?);
        for (e, (p, q)) in loop_edges(n).iter().enumerate() {
            // m(n) = 1 leaves only the x3 = 1 copy of the loop
            let shape = if lo == o {
                Shape4::Segment(lift(p, &o, &z), lift(q, &o, &z))
            } else {
                Shape4::patch(lift(p, &lo, &z), lift(p, &o, &z), lift(q, &lo, &z), lift(q, &o, &z))?
            };
            prims.push(Primitive4::new(Label::slab(n, e), shape));
        }
    }
    let corners = unit_square();
    let at = |k: usize| lift(&corners[k], &z, &z);
    prims.push(Primitive4::new(Label::square(0), Shape4::Tri(at(0), at(1), at(2))));
    prims.push(Primitive4::new(Label::square(1), Shape4::Tri(at(0), at(2), at(3))));
    Scene4::new(SceneMeta::new("W", 0, count), prims)
}

fn unit_square() -> [Plane; 4] {
    [(zero(), zero()), (one(), zero()), (one(), one()), (zero(), one())]
}

/// `W` plus the wall `I^2 x {0} x I`, stored as its six faces.
pub fn build_m(m: &MFunction, count: usize) -> Result<Scene4, GeometryError> {
    let w = build_w(m, count)?;
    let mut prims = w.primitives().to_vec();
    // (face name, fixed coordinate, value); the wall has x3 = 0
    let faces = [("x1lo", 0, 0), ("x1hi", 0, 1), ("x2lo", 1, 0), ("x2hi", 1, 1), ("x4lo", 3, 0), ("x4hi", 3, 1)];
    for (name, axis, value) in faces {
        let free: Vec<usize> = [0, 1, 3].into_iter().filter(|&a| a != axis).collect();
        let corner = |(u, v): &Plane| {
            let mut c = [zero(), zero(), zero(), zero()];
            c[axis] = int(value);
            c[free[0]] = u.clone();
            c[free[1]] = v.clone();
            Point4(c)
        };
        let sq = unit_square().map(|p| corner(&p));
        prims.push(Primitive4::new(Label::wall(name, 0), Shape4::Tri(sq[0].clone(), sq[1].clone(), sq[2].clone())));
        prims.push(Primitive4::new(Label::wall(name, 1), Shape4::Tri(sq[0].clone(), sq[2].clone(), sq[3].clone())));
    }
    Scene4::new(SceneMeta::new("M", 0, count), prims)
}

/// Pieces of the track `R_n` of relation `r`, at `x3 = 1/n`.
///
/// The loops of the relator are read in index order. At `x4 = t` the outer
/// boundary (upper edge of the first loop, lower edge of the last, all right
/// verticals) is static; between consecutive loops the inner edges are
/// truncated at an apex moving along them with `x1 = t`, and a vertical
/// connector joins the two apexes. At `t = 1` the apexes reach the right
/// verticals and the cap triangle fills the outer boundary.
pub fn track_pieces(r: &Relation) -> Result<Vec<Primitive4>, GeometryError> {
    if !r.is_well_formed() || r.label == 0 {
        return Err(GeometryError::UnknownRelation(r.label));
    }
    let h = recip(r.label);
    let (t0, t1) = (zero(), one());
    let first = r.indices[0];
    let last = *r.indices.last().expect("non-empty");
    let mut pieces: Vec<Shape4> = Vec::new();
    let swept =
        |p: &Plane, q: &Plane| Shape4::patch(lift(p, &h, &t0), lift(p, &h, &t1), lift(q, &h, &t0), lift(q, &h, &t1));

    pieces.push(swept(&origin(), &top(first))?);
    for &i in &r.indices {
        pieces.push(swept(&top(i), &bottom(i))?);
    }
    pieces.push(swept(&bottom(last), &origin())?);
    for w in r.indices.windows(2) {
        let (a, b) = (bottom(w[0]), top(w[1]));
        // apex (t, t*y) on the edge from the origin to (1, y)
        let apex_end = |p: &Plane| lift(p, &h, &t1);
        let start = lift(&origin(), &h, &t0);
        pieces.push(Shape4::patch(start.clone(), apex_end(&a), lift(&a, &h, &t0), apex_end(&a))?);
        pieces.push(Shape4::patch(start.clone(), apex_end(&b), lift(&b, &h, &t0), apex_end(&b))?);
        pieces.push(Shape4::patch(start.clone(), apex_end(&a), start, apex_end(&b))?);
    }

    let mut out: Vec<Primitive4> =
        pieces.into_iter().enumerate().map(|(k, s)| Primitive4::new(Label::track(r.label, k), s)).collect();
    out.push(Primitive4::new(
        Label::cap(r.label),
        Shape4::Tri(lift(&origin(), &h, &t1), lift(&top(first), &h, &t1), lift(&bottom(last), &h, &t1)),
    ));
    Ok(out)
}

/// The track of relation `r_label` of `p` as a scene.
pub fn build_relation_track(p: &TrianglePresentation, label: usize) -> Result<Scene4, GeometryError> {
    let r = p.relation(label)?;
    let generators = r.indices.last().copied().unwrap_or(0);
    Scene4::new(SceneMeta::new("track", label, generators), track_pieces(r)?)
}

/// `M` together with the tracks of `r_1..r_relations`. `N` is the largest
/// generator index among those relations; `m(1..=N)` is certified first.
pub fn build_k(group: &Group, relations: usize, horizon: usize) -> Result<Scene4, GeometryError> {
    let mut stream = RelationStream::new(group);
    let p = stream.first_relations(relations);
    let count = p.max_index();
    let m = certified_m(&mut stream, count, horizon)?;
    let mut prims = build_m(&m, count)?.primitives().to_vec();
    for r in &p.relations {
        prims.extend(track_pieces(r)?);
    }
    Scene4::new(SceneMeta::new("K", relations, count), prims)
}

/// `m(1..=count)`, naming the first index that fails to certify.
pub fn certified_m(stream: &mut RelationStream<'_>, count: usize, horizon: usize) -> Result<MFunction, GeometryError> {
    for n in 1..=count {
        match stream.m_of(n, horizon) {
            Ok(_) => {}
            Err(PresentationError::HorizonExceeded(_)) => return Err(GeometryError::UncertifiedM(n)),
            Err(e) => return Err(e.into()),
        }
    }
    stream.m_function(count, horizon).map_err(GeometryError::from)
}
