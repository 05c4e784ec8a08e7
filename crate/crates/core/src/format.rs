//! Hypergraph documents.
//!
//! Text form, one declaration per line, `#` starting a comment:
//!
//! ```text
//! nodes: v1 v2 v3
//! edge e1: v1 v2
//! edge e2:
//! ```
//!
//! The JSON form mirrors it: `{"nodes": [...], "edges": [{"id": ..., "nodes": [...]}]}`.
//! Serialization sorts nodes, edges and edge members by id.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::hypergraph::{EdgeId, Hypergraph, NodeId, RawHypergraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            other => Err(format!("unknown format `{other}` (expected text or json)")),
        }
    }
}

/// 1-based line and column.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Position {
    pub line: usize,
    pub column: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax(String),
    UnknownNode { node: String, edge: String },
    DuplicateId { role: &'static str, id: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub struct ParseError {
    pub position: Option<Position>,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(p) = self.position {
            write!(f, "{}:{}: ", p.line, p.column)?;
        }
        match &self.kind {
            ParseErrorKind::Syntax(msg) => write!(f, "syntax error: {msg}"),
            ParseErrorKind::UnknownNode { node, edge } => {
                write!(f, "edge `{edge}` references unknown node `{node}`")
            }
            ParseErrorKind::DuplicateId { role, id } => write!(f, "duplicate {role} id `{id}`"),
        }
    }
}

impl ParseError {
    fn at(line: usize, column: usize, kind: ParseErrorKind) -> Self {
        ParseError {
            position: Some(Position { line, column }),
            kind,
        }
    }

    fn syntax(line: usize, column: usize, msg: impl Into<String>) -> Self {
        Self::at(line, column, ParseErrorKind::Syntax(msg.into()))
    }
}

/// Parses either form; a document whose first non-blank byte is `{` is JSON.
pub fn parse(document: &[u8]) -> Result<Hypergraph, ParseError> {
    let text = std::str::from_utf8(document).map_err(|e| {
        let before = &document[..e.valid_up_to()];
        let line = before.iter().filter(|&&b| b == b'\n').count() + 1;
        let column = before.iter().rev().take_while(|&&b| b != b'\n').count() + 1;
        ParseError::syntax(line, column, "document is not valid UTF-8")
    })?;
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_text(text)
    }
}

/// A token with its 1-based column.
fn tokens(s: &str, offset: usize) -> impl Iterator<Item = (usize, &str)> {
    let mut pos = 0;
    s.split_whitespace().map(move |tok| {
        let at = s[pos..].find(tok).expect("token comes from s") + pos;
        pos = at + tok.len();
        (offset + at + 1, tok)
    })
}

pub fn parse_text(text: &str) -> Result<Hypergraph, ParseError> {
    let mut raw = RawHypergraph::default();
    let mut nodes_line: Option<usize> = None;
    // (line, column, node, edge) of every membership, checked once all lines are read
    let mut members: Vec<(usize, usize, String, EdgeId)> = Vec::new();

    for (idx, full) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = full.split('#').next().unwrap_or("");
        let Some(first) = line.split_whitespace().next() else {
            continue;
        };
        let first_col = line.find(first).expect("token comes from line") + 1;
        let (head, rest_start) = match line.find(':') {
            Some(colon) => (&line[..colon], colon + 1),
            None => {
                return Err(ParseError::syntax(
                    line_no,
                    first_col,
                    "expected `nodes:` or `edge <id>:`",
                ))
            }
        };
        let head_tokens: Vec<(usize, &str)> = tokens(head, 0).collect();
        let rest = &line[rest_start..];
        match head_tokens.as_slice() {
            [(_, "nodes")] => {
                if let Some(prev) = nodes_line {
                    return Err(ParseError::syntax(
                        line_no,
                        first_col,
                        format!("second `nodes:` line (first on line {prev})"),
                    ));
                }
                nodes_line = Some(line_no);
                for (col, tok) in tokens(rest, rest_start) {
                    let v = NodeId::new(tok).map_err(|e| ParseError::syntax(line_no, col, e.to_string()))?;
                    if raw.nodes.contains(&v) {
                        return Err(ParseError::at(
                            line_no,
                            col,
                            ParseErrorKind::DuplicateId {
                                role: "node",
                                id: tok.to_string(),
                            },
                        ));
                    }
                    raw.nodes.push(v);
                }
            }
            [(_, "edge"), (col, id)] => {
                let e = EdgeId::new(*id).map_err(|err| ParseError::syntax(line_no, *col, err.to_string()))?;
                if raw.edges.contains(&e) {
                    return Err(ParseError::at(
                        line_no,
                        *col,
                        ParseErrorKind::DuplicateId {
                            role: "edge",
                            id: id.to_string(),
                        },
                    ));
                }
                let mut seen: Vec<&str> = Vec::new();
                for (col, tok) in tokens(rest, rest_start) {
                    if seen.contains(&tok) {
                        return Err(ParseError::at(
                            line_no,
                            col,
                            ParseErrorKind::DuplicateId {
                                role: "edge member",
                                id: tok.to_string(),
                            },
                        ));
                    }
                    seen.push(tok);
                    members.push((line_no, col, tok.to_string(), e.clone()));
                }
                raw.edges.push(e);
            }
            [(_, "edge")] => return Err(ParseError::syntax(line_no, first_col, "edge line without an id")),
            _ => {
                return Err(ParseError::syntax(
                    line_no,
                    first_col,
                    "expected `nodes:` or `edge <id>:`",
                ))
            }
        }
    }

    for (line, column, node, edge) in members {
        match raw.nodes.iter().find(|v| v.as_str() == node) {
            Some(v) => raw.incidence.push((v.clone(), edge)),
            None => {
                return Err(ParseError::at(
                    line,
                    column,
                    ParseErrorKind::UnknownNode {
                        node,
                        edge: edge.to_string(),
                    },
                ))
            }
        }
    }
    Ok(Hypergraph::try_from(raw).expect("checked while parsing"))
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonDocument {
    nodes: Vec<String>,
    #[serde(default)]
    edges: Vec<JsonEdge>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonEdge {
    id: String,
    #[serde(default)]
    nodes: Vec<String>,
}

pub fn parse_json(text: &str) -> Result<Hypergraph, ParseError> {
    let doc: JsonDocument = serde_json::from_str(text)
        .map_err(|e| ParseError::syntax(e.line().max(1), e.column().max(1), e.to_string()))?;
    let no_pos = |kind| ParseError { position: None, kind };
    let bad_id = |e: crate::error::Error| no_pos(ParseErrorKind::Syntax(e.to_string()));
    let mut raw = RawHypergraph::default();
    for v in &doc.nodes {
        let v = NodeId::new(v.as_str()).map_err(bad_id)?;
        if raw.nodes.contains(&v) {
            return Err(no_pos(ParseErrorKind::DuplicateId {
                role: "node",
                id: v.to_string(),
            }));
        }
        raw.nodes.push(v);
    }
    for edge in &doc.edges {
        let e = EdgeId::new(edge.id.as_str()).map_err(bad_id)?;
        if raw.edges.contains(&e) {
            return Err(no_pos(ParseErrorKind::DuplicateId {
                role: "edge",
                id: e.to_string(),
            }));
        }
        for (k, v) in edge.nodes.iter().enumerate() {
            if edge.nodes[..k].contains(v) {
                return Err(no_pos(ParseErrorKind::DuplicateId {
                    role: "edge member",
                    id: v.clone(),
                }));
            }
            match raw.nodes.iter().find(|n| n.as_str() == v) {
                Some(n) => raw.incidence.push((n.clone(), e.clone())),
                None => {
                    return Err(no_pos(ParseErrorKind::UnknownNode {
                        node: v.clone(),
                        edge: e.to_string(),
                    }))
                }
            }
        }
        raw.edges.push(e);
    }
    Ok(Hypergraph::try_from(raw).expect("checked while parsing"))
}

pub fn serialize(h: &Hypergraph, format: Format) -> String {
    match format {
        Format::Text => to_text(h),
        Format::Json => to_json(h),
    }
}

pub fn to_text(h: &Hypergraph) -> String {
    let mut out = String::from("nodes:");
    for v in h.nodes() {
        out.push(' ');
        out.push_str(v.as_str());
    }
    out.push('\n');
    for e in h.edges() {
        out.push_str("edge ");
        out.push_str(e.as_str());
        out.push(':');
        for v in h.incident_nodes(e.as_str()).expect("own edge") {
            out.push(' ');
            out.push_str(v.as_str());
        }
        out.push('\n');
    }
    out
}

fn json_document(h: &Hypergraph) -> JsonDocument {
    JsonDocument {
        nodes: h.nodes().map(ToString::to_string).collect(),
        edges: h
            .edges()
            .map(|e| JsonEdge {
                id: e.to_string(),
                nodes: h
                    .incident_nodes(e.as_str())
                    .expect("own edge")
                    .iter()
                    .map(ToString::to_string)
                    .collect(),
            })
            .collect(),
    }
}

pub fn to_json(h: &Hypergraph) -> String {
    let mut s = serde_json::to_string_pretty(&json_document(h)).expect("plain data serializes");
    s.push('\n');
    s
}

/// The JSON value of a hypergraph, for embedding in larger documents.
pub fn to_json_value(h: &Hypergraph) -> serde_json::Value {
    serde_json::to_value(json_document(h)).expect("plain data serializes")
}

/// Graphviz rendering of the incidence graph: nodes as circles, edges as
/// boxes.
pub fn to_dot(h: &Hypergraph) -> String {
    let mut out = String::from("graph hypergraph {\n");
    for v in h.nodes() {
        out.push_str(&format!("  \"n:{v}\" [shape=circle, label=\"{v}\"];\n"));
    }
    for e in h.edges() {
        out.push_str(&format!("  \"e:{e}\" [shape=box, label=\"{e}\"];\n"));
    }
    for (v, e) in h.incidence() {
        out.push_str(&format!("  \"n:{v}\" -- \"e:{e}\";\n"));
    }
    out.push_str("}\n");
    out
}
