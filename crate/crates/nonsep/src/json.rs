//! Scene and result files: a small JSON dialect with numbers emitted at 17
//! significant digits, which round-trip bit-exactly through `f64`.

use std::fmt;
use std::fs;
use std::io::{self, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use nonsep_core::covering::CoveringResult;
use nonsep_core::geom::{v2, v3, ConvexPolygon, Polytope3};
use nonsep_core::scene::{Homothet, ReferenceBody, Scene};
use nonsep_core::separation::{Method, SeparationCertificate};

#[derive(Debug)]
pub enum LoadError {
    Io(io::Error),
    /// Malformed JSON, with the position serde reported.
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    /// Well-formed JSON violating a scene invariant.
    Validation(String),
}

impl fmt::Display for LoadError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LoadError::Io(e) => write!(f, "io error: {e}"),
            LoadError::Parse {
                line,
                column,
                message,
            } => write!(f, "parse error at line {line}, column {column}: {message}"),
            LoadError::Validation(m) => write!(f, "invalid scene: {m}"),
        }
    }
}

impl std::error::Error for LoadError {}

impl From<io::Error> for LoadError {
    fn from(e: io::Error) -> Self {
        LoadError::Io(e)
    }
}

impl From<serde_json::Error> for LoadError {
    fn from(e: serde_json::Error) -> Self {
        LoadError::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        }
    }
}

/// Formatter emitting every float with 17 significant digits, enough to
/// reproduce the exact `f64` on re-parse.
struct SigDigits;

impl serde_json::ser::Formatter for SigDigits {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> io::Result<()>
    where
        W: ?Sized + Write,
    {
        write!(writer, "{value:.16e}")
    }
}

/// Serializes any `Serialize` value with the pinned number format.
pub fn to_json_string<T: Serialize>(value: &T) -> String {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, SigDigits);
    value.serialize(&mut ser).expect("in-memory serialization");
    String::from_utf8(out).expect("serializer emits UTF-8")
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SceneJson {
    pub dimension: u32,
    pub label: String,
    pub reference: ReferenceJson,
    pub members: Vec<MemberJson>,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum ReferenceJson {
    Polygon { vertices: Vec<[f64; 2]> },
    Ball,
    Polytope3 { vertices: Vec<[f64; 3]> },
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MemberJson {
    pub translation: Vec<f64>,
    pub ratio: f64,
}

pub fn scene_to_json(scene: &Scene) -> SceneJson {
    let reference = match scene.reference() {
        ReferenceBody::Polygon(p) => ReferenceJson::Polygon {
            vertices: p.vertices().iter().map(|v| [v.x, v.y]).collect(),
        },
        ReferenceBody::Ball => ReferenceJson::Ball,
        ReferenceBody::Polytope3(p) => ReferenceJson::Polytope3 {
            vertices: p.vertices().iter().map(|v| [v.x, v.y, v.z]).collect(),
        },
    };
    let members = scene
        .members()
        .iter()
        .map(|m| MemberJson {
            translation: if scene.dimension() == 2 {
                vec![m.translation.x, m.translation.y]
            } else {
                vec![m.translation.x, m.translation.y, m.translation.z]
            },
            ratio: m.ratio,
        })
        .collect();
    SceneJson {
        dimension: scene.dimension() as u32,
        label: scene.label().to_string(),
        reference,
        members,
    }
}

pub fn scene_from_json(json: SceneJson) -> Result<Scene, LoadError> {
    let dimension = json.dimension as usize;
    let reference = match json.reference {
        ReferenceJson::Polygon { vertices } => {
            let verts = vertices.iter().map(|&[x, y]| v2(x, y)).collect();
            ReferenceBody::Polygon(
                ConvexPolygon::new(verts)
                    .map_err(|e| LoadError::Validation(format!("reference polygon: {e}")))?,
            )
        }
        ReferenceJson::Ball => ReferenceBody::Ball,
        ReferenceJson::Polytope3 { vertices } => {
            let verts = vertices.iter().map(|&[x, y, z]| v3(x, y, z)).collect();
            ReferenceBody::Polytope3(
                Polytope3::from_vertices(verts)
                    .map_err(|e| LoadError::Validation(format!("reference polytope: {e}")))?,
            )
        }
    };
    let mut members = Vec::with_capacity(json.members.len());
    for (i, m) in json.members.iter().enumerate() {
        if m.translation.len() != dimension {
            return Err(LoadError::Validation(format!(
                "member {i}: translation has {} components, scene dimension is {dimension}",
                m.translation.len()
            )));
        }
        let t = match m.translation.as_slice() {
            [x, y] => v3(*x, *y, 0.0),
            [x, y, z] => v3(*x, *y, *z),
            _ => {
                return Err(LoadError::Validation(format!(
                    "member {i}: translation must have 2 or 3 components"
                )))
            }
        };
        members.push(Homothet {
            translation: t,
            ratio: m.ratio,
        });
    }
    Scene::new(dimension, json.label, reference, members)
        .map_err(|e| LoadError::Validation(e.to_string()))
}

pub fn save_scene(scene: &Scene, path: &Path) -> Result<(), LoadError> {
    let mut body = to_json_string(&scene_to_json(scene));
    body.push('\n');
    fs::write(path, body)?;
    Ok(())
}

pub fn load_scene(path: &Path) -> Result<Scene, LoadError> {
    let text = fs::read_to_string(path)?;
    load_scene_str(&text)
}

pub fn load_scene_str(text: &str) -> Result<Scene, LoadError> {
    let json: SceneJson = serde_json::from_str(text)?;
    scene_from_json(json)
}

pub fn scene_to_string(scene: &Scene) -> String {
    to_json_string(&scene_to_json(scene))
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum CertificateJson {
    Separable {
        direction: [f64; 2],
        gap: [f64; 2],
        left: Vec<usize>,
        right: Vec<usize>,
    },
    NonSeparable {
        method: String,
        directions_checked: Vec<f64>,
    },
}

pub fn certificate_to_json(cert: &SeparationCertificate) -> CertificateJson {
    match cert {
        SeparationCertificate::Separable {
            direction,
            gap,
            left,
            right,
        } => CertificateJson::Separable {
            direction: [direction.vec().x, direction.vec().y],
            gap: [gap.0, gap.1],
            left: left.clone(),
            right: right.clone(),
        },
        SeparationCertificate::NonSeparable {
            method,
            directions_checked,
        } => CertificateJson::NonSeparable {
            method: match method {
                Method::Sweep => "sweep".to_string(),
                Method::Oracle => "oracle".to_string(),
            },
            directions_checked: directions_checked.clone(),
        },
    }
}

#[derive(Serialize, Deserialize)]
pub struct CoveringJson {
    pub ratio: f64,
    pub translation: Vec<f64>,
    pub lambda: f64,
    pub slack: f64,
}

pub fn covering_to_json(res: &CoveringResult, dimension: usize) -> CoveringJson {
    CoveringJson {
        ratio: res.ratio,
        translation: if dimension == 2 {
            vec![res.translation.x, res.translation.y]
        } else {
            vec![res.translation.x, res.translation.y, res.translation.z]
        },
        lambda: res.lambda,
        slack: res.slack,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use nonsep_core::scene::generators::{gen_circle_ring, gen_counterexample_triangles};

    #[test]
    fn round_trip_is_bit_exact() {
        for scene in [
            gen_counterexample_triangles(),
            gen_circle_ring(2, 0.01).unwrap(),
        ] {
            let first = scene_to_string(&scene);
            let reloaded = load_scene_str(&first).unwrap();
            let second = scene_to_string(&reloaded);
            assert_eq!(first, second);
        }
    }

    #[test]
    fn rejects_bad_scenes() {
        // Zero ratio.
        let text = r#"{"dimension":2,"label":"x","reference":{"kind":"ball"},
            "members":[{"translation":[0,0],"ratio":0.0},
                       {"translation":[1,0],"ratio":1.0}]}"#;
        assert!(matches!(
            load_scene_str(text),
            Err(LoadError::Validation(_))
        ));
        // Single member.
        let text = r#"{"dimension":2,"label":"x","reference":{"kind":"ball"},
            "members":[{"translation":[0,0],"ratio":1.0}]}"#;
        assert!(matches!(
            load_scene_str(text),
            Err(LoadError::Validation(_))
        ));
        // Unknown field.
        let text = r#"{"dimension":2,"label":"x","extra":1,"reference":{"kind":"ball"},
            "members":[{"translation":[0,0],"ratio":1.0},
                       {"translation":[1,0],"ratio":1.0}]}"#;
        assert!(matches!(load_scene_str(text), Err(LoadError::Parse { .. })));
        // Syntax error carries a position.
        match load_scene_str("{\"dimension\":2,") {
            Err(LoadError::Parse { line, .. }) => assert!(line >= 1),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn numbers_have_17_significant_digits() {
        let scene = gen_counterexample_triangles();
        let text = scene_to_string(&scene);
        let x = scene.members()[0].xy().x;
        assert!(text.contains(&format!("{x:.16e}")), "{text}");
    }
}
