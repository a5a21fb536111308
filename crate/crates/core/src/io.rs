//! Reading graph presentations from JSON.
//!
//! ```json
//! {"vertices": ["v"],
//!  "edges": [{"id": "a", "src": "v", "dst": "v"},
//!            {"id": "b", "src": "v", "dst": "v"}],
//!  "subshift": false}
//! ```
//!
//! `subshift` is optional.

use std::path::Path;

use thiserror::Error;

use crate::error::ShiftError;
use crate::graph::{validate, EdgeShift, GraphPresentation};

#[derive(Debug, Error)]
pub enum InputError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error(transparent)]
    Invalid(#[from] ShiftError),
    #[error("{path}: {message}")]
    Io { path: String, message: String },
}

/// Parses and reference-checks a presentation. Essentiality is left to
/// [`validate`].
pub fn parse_graph(text: &str) -> Result<GraphPresentation, InputError> {
    let graph: GraphPresentation = serde_json::from_str(text).map_err(|e| InputError::Syntax {
        line: e.line(),
        column: e.column(),
        message: strip_position(&e.to_string()),
    })?;
    graph.check_references()?;
    Ok(graph)
}

// serde_json appends " at line L column C"; the position is reported separately.
fn strip_position(msg: &str) -> String {
    match msg.rfind(" at line ") {
        Some(i) => msg[..i].to_string(),
        None => msg.to_string(),
    }
}

pub fn parse_shift(text: &str) -> Result<EdgeShift, InputError> {
    Ok(validate(&parse_graph(text)?)?)
}

pub fn read_graph_file(path: &Path) -> Result<GraphPresentation, InputError> {
    let text = std::fs::read_to_string(path).map_err(|e| InputError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    parse_graph(&text)
}

/// Pretty JSON with a trailing newline.
pub fn graph_to_json(graph: &GraphPresentation) -> String {
    let mut s = serde_json::to_string_pretty(graph).expect("presentations serialize");
    s.push('\n');
    s
}
