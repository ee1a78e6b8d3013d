//! Machine-readable results and their plain-text rendering.

use std::fmt::Write as _;

use qface::{EdgeMask, Quiver};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

/// Everything one invocation produced. Serializes to JSON and back without loss.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    /// The input path, when the command reads one.
    pub input: Option<String>,
    /// Options other than the input path, as given.
    pub args: Vec<String>,
    /// SHA-256 of the canonical form of the input quiver.
    pub input_digest: Option<String>,
    pub result: Payload,
    pub elapsed_us: u64,
    pub version: String,
}

/// A face named by its edges, as pairs of vertex ids.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceEntry {
    pub dim: i64,
    pub edges: Vec<(String, String)>,
}

impl FaceEntry {
    pub fn new(q: &Quiver, mask: &EdgeMask, dim: i64) -> Self {
        FaceEntry {
            dim,
            edges: edge_names(q, mask),
        }
    }
}

pub fn edge_names(q: &Quiver, mask: &EdgeMask) -> Vec<(String, String)> {
    mask.iter()
        .map(|i| {
            let e = q.edge(i);
            (q.vertex_name(e.tail).to_string(), q.vertex_name(e.head).to_string())
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Payload {
    Dim {
        dim: i64,
        vertices: usize,
        edges: usize,
        components: usize,
        ranked: bool,
        /// Set when the quiver has no edges, so `DE(Q)` is empty.
        edgeless: bool,
    },
    Rank {
        /// `(vertex, value)` pairs of the normalized rank function.
        rank: Option<Vec<(String, i64)>>,
    },
    Facets {
        facets: Vec<FaceEntry>,
    },
    Faces {
        dim: i64,
        max_dim: Option<i64>,
        total: usize,
        faces: Vec<FaceEntry>,
    },
    Fvector {
        dim: i64,
        counts: Vec<u64>,
    },
    IsFace {
        face: bool,
        dim: Option<i64>,
    },
    Verify {
        matched: bool,
        faces: usize,
        dim: i64,
        discrepancy: Option<String>,
    },
    Gen {
        family: String,
        vertices: Vec<String>,
        edges: Vec<(String, String)>,
    },
}

/// Digest of a canonical quiver: vertex ids in order, then edges in order.
pub fn digest(q: &Quiver) -> String {
    let mut text = String::new();
    for name in q.vertex_names() {
        let _ = writeln!(text, "v {name}");
    }
    for e in q.edges() {
        let _ = writeln!(text, "e {} {}", q.vertex_name(e.tail), q.vertex_name(e.head));
    }
    Sha256::digest(text.as_bytes())
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

fn show_edges(edges: &[(String, String)]) -> String {
    if edges.is_empty() {
        return "(none)".to_string();
    }
    edges
        .iter()
        .map(|(t, h)| format!("({t},{h})"))
        .collect::<Vec<_>>()
        .join(" ")
}

impl Payload {
    /// Human-readable rendering, one item per line.
    pub fn render(&self) -> String {
        match self {
            Payload::Dim {
                dim,
                vertices,
                edges,
                components,
                ranked,
                edgeless,
            } => {
                if *edgeless {
                    format!("dim {dim} (no edges: the polytope is empty)")
                } else {
                    let ranked = if *ranked { "has" } else { "no" };
                    format!(
                        "dim {dim}\n{vertices} vertices, {edges} edges, {components} components, {ranked} rank function"
                    )
                }
            }
            Payload::Rank { rank } => match rank {
                None => "no rank function".to_string(),
                Some(values) => values
                    .iter()
                    .map(|(v, r)| format!("{v}\t{r}"))
                    .collect::<Vec<_>>()
                    .join("\n"),
            },
            Payload::Facets { facets } => {
                let mut out = format!("{} facets", facets.len());
                for f in facets {
                    let _ = write!(out, "\n{}", show_edges(&f.edges));
                }
                out
            }
            Payload::Faces {
                total,
                faces,
                max_dim,
                ..
            } => {
                let mut out = match max_dim {
                    Some(m) => format!("{} of {total} faces with dim <= {m}", faces.len()),
                    None => format!("{total} faces"),
                };
                for f in faces {
                    let _ = write!(out, "\ndim {}: {}", f.dim, show_edges(&f.edges));
                }
                out
            }
            Payload::Fvector { dim, counts } => {
                qface::FVector {
                    dim: *dim,
                    counts: counts.clone(),
                }
                .to_string()
            }
            Payload::IsFace { face, dim } => match (face, dim) {
                (true, Some(d)) => format!("face, dim {d}"),
                _ => "not a face".to_string(),
            },
            Payload::Verify {
                matched,
                faces,
                dim,
                discrepancy,
            } => {
                if *matched {
                    format!("MATCH: {faces} faces, dim {dim}")
                } else {
                    format!("MISMATCH: {}", discrepancy.as_deref().unwrap_or("unknown"))
                }
            }
            Payload::Gen {
                family,
                vertices,
                edges,
            } => {
                let mut out = format!("# {family}");
                let used: std::collections::HashSet<&str> = edges
                    .iter()
                    .flat_map(|(t, h)| [t.as_str(), h.as_str()])
                    .collect();
                if vertices.iter().any(|v| !used.contains(v.as_str())) {
                    let _ = write!(
                        out,
                        "\n# isolated vertices are dropped in this format; use --json to keep them"
                    );
                }
                for (t, h) in edges {
                    let _ = write!(out, "\n{t} {h}");
                }
                out
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_round_trips() {
        let report = Report {
            command: "faces".into(),
            input: Some("q.txt".into()),
            args: vec!["--max-dim".into(), "1".into()],
            input_digest: Some("ab".into()),
            result: Payload::Faces {
                dim: 2,
                max_dim: Some(1),
                total: 10,
                faces: vec![FaceEntry {
                    dim: 0,
                    edges: vec![("0".into(), "1".into())],
                }],
            },
            elapsed_us: 12,
            version: "0.1.0".into(),
        };
        let text = serde_json::to_string(&report).unwrap();
        assert_eq!(serde_json::from_str::<Report>(&text).unwrap(), report);
    }

    #[test]
    fn fvector_text() {
        let p = Payload::Fvector {
            dim: 3,
            counts: vec![8, 12, 6],
        };
        assert_eq!(p.render(), "dim 3; f = 8 12 6");
    }

    #[test]
    fn digest_is_hex_sha256() {
        let q = Quiver::with_vertex_count(2, &[(0, 1)]).unwrap();
        let d = digest(&q);
        assert_eq!(d.len(), 64);
        assert!(d.chars().all(|c| c.is_ascii_hexdigit()));
    }
}
