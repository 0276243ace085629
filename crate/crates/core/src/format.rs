//! On-disk forms of a [`Decomposition`].
//!
//! JSON (version `"1"`):
//!
//! ```json
//! {"version": "1", "v": 12, "n": 3, "m": 3, "r": 5, "s": 4,
//!  "classes": [
//!    {"kind": "one_factor", "blocks": [[[0,0],[1,1]], ...]},
//!    {"kind": "star_factor", "blocks": [{"center": [0,0], "leaves": [[1,1],[1,2],[1,3]]}, ...]}
//!  ]}
//! ```
//!
//! Vertices are `[base, level]`. The text form is for reading only.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::model::{Block, ClassKind, Decomposition, FactorClass, Params, Vertex};

pub const FORMAT_VERSION: &str = "1";

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported version {0:?}, expected \"1\"")]
    Version(String),
    #[error("invalid block in class {class}: {detail}")]
    Block { class: usize, detail: String },
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DecompositionDoc {
    version: Version,
    v: usize,
    n: usize,
    m: usize,
    r: usize,
    s: usize,
    classes: Vec<ClassDoc>,
}

/// Written as the string `"1"`; the integer `1` is accepted on input.
#[derive(Debug, Serialize, Deserialize)]
#[serde(untagged)]
enum Version {
    Text(String),
    Number(u64),
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ClassDoc {
    kind: KindDoc,
    blocks: Vec<BlockDoc>,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
enum KindDoc {
    OneFactor,
    StarFactor,
}

type VertexDoc = [u32; 2];

#[derive(Debug, Serialize, Deserialize)]
#[serde(untagged)]
enum BlockDoc {
    Edge([VertexDoc; 2]),
    Star {
        center: VertexDoc,
        leaves: Vec<VertexDoc>,
    },
}

fn vertex_doc(x: Vertex) -> VertexDoc {
    [x.base() as u32, x.level() as u32]
}

fn vertex(d: VertexDoc) -> Vertex {
    Vertex::new(d[0] as usize, d[1] as usize)
}

pub fn to_json(d: &Decomposition) -> String {
    let p = d.params();
    let doc = DecompositionDoc {
        version: Version::Text(FORMAT_VERSION.into()),
        v: p.v(),
        n: p.n(),
        m: p.m(),
        r: d.r(),
        s: d.s(),
        classes: d
            .classes()
            .iter()
            .map(|c| ClassDoc {
                kind: match c.kind() {
                    ClassKind::OneFactor => KindDoc::OneFactor,
                    ClassKind::StarFactor => KindDoc::StarFactor,
                },
                blocks: c
                    .blocks()
                    .iter()
                    .map(|b| match b {
                        Block::K2(e) => {
                            let (a, b) = e.endpoints();
                            BlockDoc::Edge([vertex_doc(a), vertex_doc(b)])
                        }
                        Block::Star(s) => BlockDoc::Star {
                            center: vertex_doc(s.center()),
                            leaves: s.leaves().iter().map(|&l| vertex_doc(l)).collect(),
                        },
                    })
                    .collect(),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("document is always serializable")
}

/// Parses a decomposition. Blocks must be well formed (no loops, distinct
/// leaves); everything else is left for the verifier.
pub fn from_json(text: &str) -> Result<Decomposition, FormatError> {
    let doc: DecompositionDoc = serde_json::from_str(text)?;
    match &doc.version {
        Version::Text(s) if s == FORMAT_VERSION => {}
        Version::Number(1) => {}
        Version::Text(s) => return Err(FormatError::Version(s.clone())),
        Version::Number(k) => return Err(FormatError::Version(k.to_string())),
    }
    let params = Params::unchecked(doc.v, doc.n, doc.m);
    let mut classes = Vec::with_capacity(doc.classes.len());
    for (ci, class) in doc.classes.into_iter().enumerate() {
        let kind = match class.kind {
            KindDoc::OneFactor => ClassKind::OneFactor,
            KindDoc::StarFactor => ClassKind::StarFactor,
        };
        let blocks = class
            .blocks
            .into_iter()
            .map(|b| match b {
                BlockDoc::Edge([a, b]) => Block::edge(vertex(a), vertex(b)),
                BlockDoc::Star { center, leaves } => {
                    Block::star(vertex(center), leaves.into_iter().map(vertex))
                }
            })
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| FormatError::Block {
                class: ci,
                detail: e.to_string(),
            })?;
        classes.push(FactorClass::unchecked(kind, blocks));
    }
    Ok(Decomposition::from_parts(params, doc.r, doc.s, classes))
}

/// One paragraph per class.
pub fn to_text(d: &Decomposition) -> String {
    let p = d.params();
    let mut out = String::new();
    let _ = writeln!(
        out,
        "URD(v={}; r={}, s={}) with n={}, m={}",
        p.v(),
        d.r(),
        d.s(),
        p.n(),
        p.m()
    );
    for (ci, class) in d.classes().iter().enumerate() {
        let _ = writeln!(
            out,
            "\nclass {ci} [{}], {} blocks",
            class.kind(),
            class.blocks().len()
        );
        for b in class.blocks() {
            let _ = match b {
                Block::K2(e) => writeln!(out, "  {e}"),
                Block::Star(s) => {
                    let leaves: Vec<String> = s.leaves().iter().map(ToString::to_string).collect();
                    writeln!(out, "  {} ; {}", s.center(), leaves.join(" "))
                }
            };
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::assembler::{construct, BuildRequest};

    #[test]
    fn json_shape() {
        let d = construct(&BuildRequest::new(12, 3, 0)).unwrap();
        let text = to_json(&d);
        let value: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(value["version"], "1");
        assert_eq!(value["m"], 3);
        assert_eq!(value["classes"].as_array().unwrap().len(), 9);
        assert_eq!(value["classes"][0]["kind"], "one_factor");
        assert!(value["classes"][0]["blocks"][0][0].is_array());
        assert_eq!(value["classes"][8]["kind"], "star_factor");
        assert_eq!(
            value["classes"][8]["blocks"][0]["leaves"]
                .as_array()
                .unwrap()
                .len(),
            3
        );
        assert_eq!(from_json(&text).unwrap(), d);
    }

    #[test]
    fn rejects_malformed() {
        assert!(matches!(from_json("{"), Err(FormatError::Json(_))));
        let bad_version = r#"{"version":"2","v":4,"n":3,"m":1,"r":0,"s":0,"classes":[]}"#;
        assert!(matches!(
            from_json(bad_version),
            Err(FormatError::Version(_))
        ));
        let dup_leaf = r#"{"version":"1","v":4,"n":3,"m":1,"r":0,"s":1,"classes":[
            {"kind":"star_factor","blocks":[{"center":[0,0],"leaves":[[0,1],[0,1],[0,2]]}]}]}"#;
        assert!(matches!(
            from_json(dup_leaf),
            Err(FormatError::Block { .. })
        ));
        let numeric = r#"{"version":1,"v":4,"n":3,"m":1,"r":0,"s":0,"classes":[]}"#;
        assert!(from_json(numeric).is_ok());
    }

    #[test]
    fn text_lists_every_class() {
        let d = construct(&BuildRequest::new(12, 3, 0)).unwrap();
        let t = to_text(&d);
        assert_eq!(t.matches("class ").count(), 9);
    }
}
