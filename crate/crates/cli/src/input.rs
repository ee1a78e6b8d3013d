//! Quiver input files.
//!
//! Two formats are accepted. An edge list has one `tail head` pair per line,
//! with `#` starting a comment; vertices are the endpoints, so isolated
//! vertices cannot be written. A JSON object
//! `{"vertices": [...], "edges": [[t, h], ...]}` lists vertices explicitly.
//! Anything whose first non-blank character is `{` is read as JSON.

use std::collections::HashSet;

use qface::{Quiver, QuiverError};
use serde::Deserialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum InputError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("unknown input format: {0}")]
    UnknownFormat(String),
    #[error("line {line}: expected `tail head`, found {content:?}")]
    MalformedLine { line: usize, content: String },
    #[error("line {line}: invalid JSON: {message}")]
    Json { line: usize, message: String },
    #[error("{location}: loop edge at vertex {vertex:?}")]
    LoopEdge { location: String, vertex: String },
    #[error("{location}: duplicate edge ({tail}, {head})")]
    DuplicateEdge {
        location: String,
        tail: String,
        head: String,
    },
    #[error("{0}")]
    Quiver(#[from] QuiverError),
    #[error("the input has no vertices")]
    EmptyVertexSet,
}

/// A vertex id in JSON input: a string or an integer.
#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum JsonId {
    Int(i64),
    Str(String),
}

impl JsonId {
    fn into_string(self) -> String {
        match self {
            JsonId::Int(i) => i.to_string(),
            JsonId::Str(s) => s,
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonQuiver {
    vertices: Vec<JsonId>,
    #[serde(default)]
    edges: Vec<(JsonId, JsonId)>,
}

/// Parses either format, detected from the first non-blank character.
pub fn parse_quiver(text: &str) -> Result<Quiver, InputError> {
    match text.trim_start().chars().next() {
        Some('{') => parse_json(text),
        Some('[') => Err(InputError::UnknownFormat(
            "JSON input must be an object with \"vertices\" and \"edges\"".into(),
        )),
        _ => parse_edge_list(text),
    }
}

pub fn parse_edge_list(text: &str) -> Result<Quiver, InputError> {
    let mut edges = Vec::new();
    let mut seen = HashSet::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let [tail, head] = tokens[..] else {
            return Err(InputError::MalformedLine {
                line,
                content: raw.to_string(),
            });
        };
        let location = format!("line {line}");
        check_edge(&mut seen, tail, head, location)?;
        edges.push((tail.to_string(), head.to_string()));
    }
    if edges.is_empty() {
        return Err(InputError::EmptyVertexSet);
    }
    Ok(Quiver::from_edge_list(edges)?)
}

pub fn parse_json(text: &str) -> Result<Quiver, InputError> {
    let parsed: JsonQuiver = serde_json::from_str(text).map_err(|e| InputError::Json {
        line: e.line(),
        message: e.to_string(),
    })?;
    if parsed.vertices.is_empty() {
        return Err(InputError::EmptyVertexSet);
    }
    let vertices: Vec<String> = parsed.vertices.into_iter().map(JsonId::into_string).collect();
    let mut seen = HashSet::new();
    let mut edges = Vec::new();
    for (i, (t, h)) in parsed.edges.into_iter().enumerate() {
        let (t, h) = (t.into_string(), h.into_string());
        check_edge(&mut seen, &t, &h, format!("edges[{i}]"))?;
        edges.push((t, h));
    }
    Ok(Quiver::new(vertices, edges)?)
}

fn check_edge(
    seen: &mut HashSet<(String, String)>,
    tail: &str,
    head: &str,
    location: String,
) -> Result<(), InputError> {
    if tail == head {
        return Err(InputError::LoopEdge {
            location,
            vertex: tail.to_string(),
        });
    }
    if !seen.insert((tail.to_string(), head.to_string())) {
        return Err(InputError::DuplicateEdge {
            location,
            tail: tail.to_string(),
            head: head.to_string(),
        });
    }
    Ok(())
}

/// Parses `--sub` lists: vertex ids in pairs, separated by whitespace,
/// commas or semicolons.
pub fn parse_pairs(text: &str) -> Result<Vec<(String, String)>, InputError> {
    let tokens: Vec<&str> = text
        .split(|c: char| c.is_whitespace() || c == ',' || c == ';')
        .filter(|t| !t.is_empty())
        .collect();
    if tokens.len() % 2 != 0 {
        return Err(InputError::MalformedLine {
            line: 1,
            content: text.to_string(),
        });
    }
    Ok(tokens
        .chunks(2)
        .map(|p| (p[0].to_string(), p[1].to_string()))
        .collect())
}
