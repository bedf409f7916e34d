//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

mod common;

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use compactum::cli::{build_component, figure_set, Component};
use compactum::geometry::rational::{half_recip, one, q, recip, zero, Q};
use compactum::geometry::{
    build_k, build_v, loop_gn, project_scene, slice_scene, Axis, Primitive4, Scene4, SceneMeta, Shape2, SliceResult,
};
use compactum::presentation::{
    check_incidence, validate_presentation, MFunction, Relation, RelationStream, TrianglePresentation,
    DEFAULT_M_HORIZON,
};
use compactum::verify::{graph_betti, verify_finite_iso, Budget, Verdict};
use compactum::{Group, GroupSpec};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, why: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(why())
    }
}

fn isomorphism_certification() -> Check {
    let budget = Budget::default();
    let mut slowest = Duration::ZERO;
    let mut most_cosets = 0;
    for (name, spec) in common::finite_catalog() {
        let g = common::group(&spec);
        let start = Instant::now();
        let cert = verify_finite_iso(&g, budget).map_err(|e| format!("{name}: {e}"))?;
        let elapsed = start.elapsed();
        let q = g.order().finite().expect("finite");
        ensure(cert.verdict == Verdict::Pass && cert.order_presented == Some(q), || format!("{name}: {cert:?}"))?;
        ensure(cert.cosets_defined <= budget.max_cosets, || format!("{name}: {} cosets", cert.cosets_defined))?;
        ensure(elapsed < Duration::from_secs(60), || format!("{name}: {elapsed:?}"))?;
        slowest = slowest.max(elapsed);
        most_cosets = most_cosets.max(cert.cosets_defined);
    }
    Ok(format!("9 groups, slowest {slowest:.2?}, at most {most_cosets} cosets in the closing enumeration"))
}

/// Certified `m` at every index used by `p`.
fn m_for(stream: &mut RelationStream<'_>, p: &TrianglePresentation) -> Result<MFunction, String> {
    stream.m_function_for(p.generator_values.keys().copied(), DEFAULT_M_HORIZON).map_err(|e| e.to_string())
}

fn block_count_law(g: &Group, stream: &RelationStream<'_>, blocks: usize) -> Result<(), String> {
    let seq = stream.sequence();
    let q = g.order().finite();
    let mut expected_len = 0;
    for k in 1..=blocks {
        expected_len += q.map_or(k, |q| k.min(q));
        ensure(seq.block_start(k + 1) - 1 == expected_len, || format!("length of blocks 1..={k}"))?;
    }
    let prefix = seq.prefix(expected_len);
    let elements = q.map_or(blocks, |q| q.min(blocks));
    for e in 0..elements {
        let count = prefix.iter().filter(|&&v| v == g.enumerate(e)).count();
        ensure(count == blocks - e, || format!("element {e} occurs {count} times in {blocks} blocks"))?;
    }
    Ok(())
}

fn lemma_two_suite() -> Check {
    let rounds = 10_000;
    let mut relations = 0;
    for (name, spec) in common::full_catalog() {
        let g = common::group(&spec);
        let mut stream = RelationStream::new(&g);
        stream.advance_to(rounds);
        let p = stream.presentation();
        relations += p.relations.len();
        let report = validate_presentation(&p, &g);
        ensure(report.passed(), || format!("{name}:\n{report}"))?;
        block_count_law(&g, &stream, 200).map_err(|e| format!("{name}: {e}"))?;
        let m = m_for(&mut stream, &p).map_err(|e| format!("{name}: {e}"))?;
        let incidence = check_incidence(&p, &m);
        ensure(incidence.passed(), || format!("{name}: {:?}", incidence.counterexample))?;
    }
    Ok(format!("11 groups at {rounds} rounds, {relations} relations, zero failures"))
}

fn m_well_defined() -> Check {
    for (name, spec) in [("Z/6", GroupSpec::Cyclic { n: 6 }), ("Z", GroupSpec::Integers)] {
        let g = common::group(&spec);
        let mut stream = RelationStream::new(&g);
        let m = stream.m_function(200, DEFAULT_M_HORIZON).map_err(|e| format!("{name}: {e}"))?;
        let certified_at = stream.rounds();
        stream.advance_to(2 * certified_at + 1_000);
        for n in 1..=200 {
            let last = stream.relations().iter().filter(|r| r.contains(n)).map(|r| r.label).max().unwrap_or(1);
            ensure(m.get(n) == Some(last), || format!("{name}: m({n}) changed from {:?} to {last}", m.get(n)))?;
        }
    }
    Ok("n <= 200 on Z/6 and Z, unchanged after doubling the rounds".into())
}

fn slab_scene(w: &Scene4, generators: &[usize]) -> Scene4 {
    let prims: Vec<Primitive4> =
        generators.iter().flat_map(|&i| w.with_prefix(&format!("slab/{i:08}/")).cloned().collect::<Vec<_>>()).collect();
    Scene4::new(SceneMeta::new("slabs", 0, 0), prims).expect("distinct slabs")
}

fn shape_set(s: &SliceResult) -> BTreeSet<Shape2> {
    s.items.iter().map(|i| i.shape.clone()).collect()
}

fn geometry_invariants() -> Check {
    let mut scenes = vec![build_v(256)];
    for (spec, r) in [
        (GroupSpec::Cyclic { n: 2 }, 6),
        (GroupSpec::Cyclic { n: 6 }, 100),
        (GroupSpec::Symmetric { n: 3 }, 40),
        (GroupSpec::Integers, 60),
    ] {
        let g = common::group(&spec);
        for c in [Component::W, Component::M, Component::K] {
            scenes.push(build_component(&g, r, c, DEFAULT_M_HORIZON).map_err(|e| e.to_string())?);
        }
    }
    for s in &scenes {
        let report = s.containment_check();
        ensure(report.passed(), || format!("{} leaves the cube: {:?}", s.meta.component, report.violations.first()))?;
    }

    for n in [0, 1, 3, 16, 256] {
        let (vertices, edges) = build_v(n).one_skeleton();
        let b1 = graph_betti(vertices.len(), &edges).map_err(|e| e.to_string())?;
        ensure(b1 == n, || format!("b1(V_{n}) = {b1}"))?;
    }

    for n in 1..=64 {
        let sup = loop_gn(n)
            .map_err(|e| e.to_string())?
            .iter()
            .flat_map(|p| p.shape.points().into_iter().map(|x| x.0[1].clone()).collect::<Vec<_>>())
            .max()
            .expect("points");
        ensure(sup == recip(n), || format!("sup x2 on g_{n} is {sup}"))?;
    }

    // tracks: each lies in its own hyperplane x3 = 1/n
    let g = common::group(&GroupSpec::Cyclic { n: 6 });
    let k = build_k(&g, 100, DEFAULT_M_HORIZON).map_err(|e| e.to_string())?;
    let mut planes = BTreeSet::new();
    for n in 1..=100 {
        let x3: BTreeSet<Q> = k
            .with_prefix(&format!("track/{n:08}/"))
            .chain(k.with_prefix(&format!("cap/{n:08}")))
            .flat_map(|p| p.shape.points().into_iter().map(|x| x.0[2].clone()).collect::<Vec<_>>())
            .collect();
        ensure(x3.len() == 1 && x3.contains(&recip(n)), || format!("track {n} spans x3 = {x3:?}"))?;
        planes.insert(recip(n));
    }
    ensure(planes.len() == 100, || "tracks share a hyperplane".into())?;

    // t = 0 sections of the tracks against the slab sections
    let p = RelationStream::new(&g).first_relations(100);
    for r in &p.relations {
        let h = recip(r.label);
        let fixed = [(Axis::X3, h.clone()), (Axis::X4, zero())];
        let track = Scene4::new(
            SceneMeta::new("track", r.label, 0),
            k.with_prefix(&format!("track/{:08}/", r.label)).cloned().collect(),
        )
        .map_err(|e| e.to_string())?;
        let from_track = shape_set(&slice_scene(&track, fixed.clone()).map_err(|e| e.to_string())?);
        let from_slabs = shape_set(&slice_scene(&slab_scene(&k, &r.indices), fixed).map_err(|e| e.to_string())?);
        ensure(from_track == from_slabs, || format!("r_{}: t=0 section differs from the slab section", r.label))?;
    }
    Ok(format!("{} scenes contained; b1, sup x2, disjointness, 100 t=0 sections", scenes.len()))
}

fn census(track: &Scene4, h: &Q, t: Q) -> Result<(usize, usize, usize), String> {
    let s = slice_scene(track, [(Axis::X3, h.clone()), (Axis::X4, t)]).map_err(|e| e.to_string())?;
    Ok((s.count("segment"), s.count("polygon"), s.count("point")))
}

fn track(label: usize, indices: Vec<usize>) -> Result<Scene4, String> {
    let r = Relation::new(label, indices).expect("relation");
    let pieces = compactum::geometry::track_pieces(&r).map_err(|e| e.to_string())?;
    Scene4::new(SceneMeta::new("track", label, 0), pieces).map_err(|e| e.to_string())
}

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

fn figure_reproduction() -> Check {
    let (i, j, n) = (1, 2, 2);
    let pair = track(n, vec![i, j])?;
    let h = recip(n);
    let quarters = [zero(), q(1, 4), q(1, 2), q(3, 4), one()];
    let counts: Vec<_> = quarters.iter().map(|t| census(&pair, &h, t.clone())).collect::<Result<_, _>>()?;
    let expected = [(6, 0, 0), (7, 0, 0), (7, 0, 0), (7, 0, 0), (0, 1, 0)];
    ensure(counts == expected, || format!("Pair census {counts:?}"))?;
    let cap = slice_scene(&pair, [(Axis::X3, h.clone()), (Axis::X4, one())]).map_err(|e| e.to_string())?;
    let tri = Shape2::Polygon(vec![(zero(), zero()), (one(), half_recip(j)), (one(), recip(i))]);
    ensure(cap.items.len() == 1 && cap.items[0].shape == tri, || format!("cap {:?}", cap.items))?;

    let triple = track(5, vec![1, 2, 4])?;
    let unit = track(3, vec![2])?;
    for (name, scene, h, lo, mid) in
        [("Triple", &triple, recip(5), (9, 0, 0), (11, 0, 0)), ("Unit", &unit, recip(3), (3, 0, 0), (3, 0, 0))]
    {
        let got = [census(scene, &h, zero())?, census(scene, &h, q(1, 2))?, census(scene, &h, one())?];
        ensure(got == [lo, mid, (0, 1, 0)], || format!("{name} census {got:?}"))?;
    }

    let z2 = common::group(&GroupSpec::Cyclic { n: 2 });
    let relations = 7;
    let mut projections = Vec::new();
    for c in [Component::W, Component::M, Component::K] {
        let scene = build_component(&z2, relations, c, DEFAULT_M_HORIZON).map_err(|e| e.to_string())?;
        projections.push(project_scene(&scene, [Axis::X3, Axis::X4]).map_err(|e| e.to_string())?);
    }
    let seg = |a: (Q, Q), b: (Q, Q)| Shape2::Segment(a, b);
    let horizontal = seg((zero(), zero()), (one(), zero()));
    let wall = seg((zero(), zero()), (zero(), one()));
    ensure(projections[0].shapes() == vec![&horizontal], || format!("W projection {:?}", projections[0].items))?;
    ensure(projections[0].markers.len() == 2, || "W projection dots".into())?;
    let m_shapes: BTreeSet<Shape2> = shape_set(&projections[1]);
    ensure(m_shapes == BTreeSet::from([horizontal.clone(), wall.clone()]), || format!("M projection {m_shapes:?}"))?;
    let mut k_expected = BTreeSet::from([horizontal, wall]);
    for n in 1..=relations {
        k_expected.insert(seg((recip(n), zero()), (recip(n), one())));
    }
    ensure(shape_set(&projections[2]) == k_expected, || format!("K projection {:?}", projections[2].items))?;
    ensure(projections[2].items.len() == 2 + relations, || "K projection has extra items".into())?;

    let first = figure_set().map_err(|e| e.to_string())?;
    ensure(first == figure_set().map_err(|e| e.to_string())?, || "figures differ between runs".into())?;
    for (name, svg) in &first {
        let golden = std::fs::read_to_string(golden_dir().join(name)).map_err(|e| format!("{name}: {e}"))?;
        ensure(&golden == svg, || format!("{name} differs from its golden file"))?;
    }
    Ok(format!("Pair 6/7/7/7/1, Triple 9/11/1, Unit 3/3/1, W/M/K projections, {} golden SVGs", first.len()))
}

fn determinism() -> Check {
    let dir = std::env::temp_dir().join(format!("compactum-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
    std::fs::write(dir.join("z6.json"), r#"{"kind":"cyclic","n":6}"#).map_err(|e| e.to_string())?;
    let run = |args: &[&str]| -> Result<Vec<u8>, String> {
        let out = Command::new(env!("CARGO_BIN_EXE_compactum"))
            .args(args)
            .current_dir(&dir)
            .output()
            .map_err(|e| e.to_string())?;
        ensure(out.status.success(), || String::from_utf8_lossy(&out.stderr).into_owned())?;
        Ok(out.stdout)
    };
    for args in [
        &["present", "--group", "z6.json", "--rounds", "100"][..],
        &["build", "--group", "z6.json", "--relations", "100"][..],
    ] {
        let outputs: Vec<Vec<u8>> = (0..3).map(|_| run(args)).collect::<Result<_, _>>()?;
        ensure(!outputs[0].is_empty() && outputs.windows(2).all(|w| w[0] == w[1]), || {
            format!("{} output differs between runs", args[0])
        })?;
    }
    let _ = std::fs::remove_dir_all(&dir);
    Ok("present and build for (Z/6, R=100) identical over 3 runs".into())
}

fn main() {
    let criteria: [Criterion; 6] = [
        ("isomorphism certification", isomorphism_certification),
        ("triangle presentation properties", lemma_two_suite),
        ("well-definedness of m", m_well_defined),
        ("geometry invariants", geometry_invariants),
        ("figure reproduction", figure_reproduction),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        match check() {
            Ok(detail) => println!("PASS {name}: {detail} ({:.1?})", start.elapsed()),
            Err(why) => {
                failed += 1;
                println!("FAIL {name}: {why}");
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
