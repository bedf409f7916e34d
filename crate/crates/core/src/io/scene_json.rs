use serde::{Deserialize, Serialize};

use super::{json_error, IoError};
use crate::geometry::rational::{format_q, parse_q};
use crate::geometry::{Label, Point4, Primitive4, Scene4, SceneMeta, Shape4};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MetaFile {
    component: String,
    group: Option<String>,
    relations: usize,
    generators: usize,
    tool: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PrimitiveFile {
    kind: String,
    label: String,
    points: Vec<[String; 4]>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SceneFile {
    meta: MetaFile,
    primitives: Vec<PrimitiveFile>,
}

/// Pretty JSON with `p/q` coordinates, primitives in label order, LF line
/// endings and a trailing newline.
pub fn scene_to_json(scene: &Scene4) -> String {
    let file = SceneFile {
        meta: MetaFile {
            component: scene.meta.component.clone(),
            group: scene.meta.group.clone(),
            relations: scene.meta.relations,
            generators: scene.meta.generators,
            tool: scene.meta.tool.clone(),
        },
        primitives: scene
            .primitives()
            .iter()
            .map(|p| PrimitiveFile {
                kind: p.shape.kind().to_string(),
                label: p.label.to_string(),
                points: p.shape.points().into_iter().map(|x| x.0.each_ref().map(format_q)).collect(),
            })
            .collect(),
    };
    let mut text = serde_json::to_string_pretty(&file).expect("scene serializes");
    text.push('\n');
    text
}

fn point(label: &str, coords: &[String; 4]) -> Result<Point4, IoError> {
    let mut out = Vec::with_capacity(4);
    for c in coords {
        out.push(parse_q(c).ok_or_else(|| IoError::Scene(format!("{label}: bad rational {c:?}")))?);
    }
    let [x1, x2, x3, x4]: [_; 4] = out.try_into().expect("four coordinates");
    Ok(Point4::new(x1, x2, x3, x4))
}

pub fn parse_scene_json(text: &str) -> Result<Scene4, IoError> {
    let file: SceneFile = serde_json::from_str(text).map_err(json_error)?;
    let mut prims = Vec::with_capacity(file.primitives.len());
    for p in file.primitives {
        let pts = p.points.iter().map(|c| point(&p.label, c)).collect::<Result<Vec<_>, _>>()?;
        let count_error = || IoError::Scene(format!("{}: wrong number of points for {}", p.label, p.kind));
        let shape = match (p.kind.as_str(), <[Point4; 2]>::try_from(pts.clone()), <[Point4; 3]>::try_from(pts.clone()))
        {
            ("segment", Ok([a, b]), _) => Shape4::Segment(a, b),
            ("tri", _, Ok([a, b, c])) => Shape4::Tri(a, b, c),
            ("patch", _, _) => {
                let [a0, a1, b0, b1] = <[Point4; 4]>::try_from(pts).map_err(|_| count_error())?;
                Shape4::patch(a0, a1, b0, b1)?
            }
            ("segment" | "tri", _, _) => return Err(count_error()),
            (other, _, _) => return Err(IoError::Scene(format!("{}: unknown kind {other:?}", p.label))),
        };
        prims.push(Primitive4::new(Label::new(p.label), shape));
    }
    let meta = SceneMeta {
        component: file.meta.component,
        group: file.meta.group,
        relations: file.meta.relations,
        generators: file.meta.generators,
        tool: file.meta.tool,
    };
    Ok(Scene4::new(meta, prims)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::build_v;

    #[test]
    fn round_trip_v() {
        let v = build_v(2);
        let text = scene_to_json(&v);
        assert!(text.ends_with("}\n") && !text.contains('\r'));
        assert!(text.contains("\"2/5\""));
        assert_eq!(parse_scene_json(&text).unwrap(), v);
    }

    #[test]
    fn rejects_bad_scenes() {
        let meta = r#""meta":{"component":"V","group":null,"relations":0,"generators":0,"tool":"t"}"#;
        let bad_q = format!(
            r#"{{{meta},"primitives":[{{"kind":"segment","label":"axis","points":[["0/1","0/1","0/1","0/1"],["1/0","0/1","0/1","0/1"]]}}]}}"#
        );
        assert!(matches!(parse_scene_json(&bad_q), Err(IoError::Scene(_))));
        let bad_kind = format!(r#"{{{meta},"primitives":[{{"kind":"blob","label":"axis","points":[]}}]}}"#);
        assert!(matches!(parse_scene_json(&bad_kind), Err(IoError::Scene(_))));
        assert!(matches!(parse_scene_json("{"), Err(IoError::Parse { .. })));
    }
}
