//! The JSON input format.
//!
//! ```json
//! {
//!   "k": 2,
//!   "vertices": ["v"],
//!   "involution": [0],
//!   "matrices": [[[4]], [[4]]]
//! }
//! ```
//!
//! `matrices[i][v][w]` counts the edges of color `i + 1` with source `w`
//! and range `v`. `involution[v]` is the 0-based image of vertex `v`.

use std::fmt;

use kktheory_core::exactalg::IntMatrix;
use kktheory_core::kgraph::KGraphSpec;
use num_bigint::BigInt;
use serde::Deserialize;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct Document {
    k: usize,
    vertices: Vec<String>,
    involution: Vec<usize>,
    matrices: Vec<Vec<Vec<i64>>>,
    /// Free text for the reader; ignored.
    #[serde(default)]
    #[allow(dead_code)]
    comment: Option<String>,
}

/// Malformed input, with a 1-based position when one is known.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line == 0 {
            write!(f, "ParseError: {}", self.message)
        } else {
            write!(
                f,
                "ParseError: line {}, column {}: {}",
                self.line, self.column, self.message
            )
        }
    }
}

impl std::error::Error for ParseError {}

impl From<serde_json::Error> for ParseError {
    fn from(e: serde_json::Error) -> Self {
        // serde_json appends " at line L column C"; keep only the message
        let full = e.to_string();
        let message = match full.rfind(" at line ") {
            Some(i) => full[..i].to_string(),
            None => full,
        };
        ParseError {
            line: e.line(),
            column: e.column(),
            message,
        }
    }
}

/// Parses a document into an unvalidated spec. Graph-level checks
/// (commutation, sources, involution) are left to validation.
pub fn parse_spec(text: &str) -> Result<KGraphSpec, ParseError> {
    let doc: Document = serde_json::from_str(text)?;
    let mut matrices = Vec::with_capacity(doc.matrices.len());
    for (i, m) in doc.matrices.iter().enumerate() {
        let cols = m.first().map_or(0, Vec::len);
        if let Some(r) = m.iter().position(|row| row.len() != cols) {
            return Err(ParseError {
                line: 0,
                column: 0,
                message: format!("matrix {} row {r} has {} entries, expected {cols}", i + 1, m[r].len()),
            });
        }
        let data: Vec<BigInt> = m.iter().flatten().map(|&x| BigInt::from(x)).collect();
        matrices.push(IntMatrix::from_vec(m.len(), cols, data));
    }
    Ok(KGraphSpec {
        k: doc.k,
        vertices: doc.vertices,
        matrices,
        involution: doc.involution,
    })
}
