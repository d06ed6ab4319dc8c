//! Loading labeled posets from JSON files.

use std::fmt;
use std::path::Path;

use nu_tamari_core::error::PosetError;
use nu_tamari_core::posets::LabeledPoset;

use crate::json::PosetJson;

#[derive(Debug)]
pub enum LoadError {
    Io(std::io::Error),
    /// Malformed JSON or a field of the wrong shape.
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    Invalid {
        field: String,
        error: PosetError,
    },
}

impl fmt::Display for LoadError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LoadError::Io(e) => write!(f, "cannot read poset file: {e}"),
            LoadError::Syntax {
                line,
                column,
                message,
            } => {
                write!(f, "line {line}, column {column}: {message}")
            }
            LoadError::Invalid { field, error } => write!(f, "{field}: {error}"),
        }
    }
}

impl std::error::Error for LoadError {}

/// Parses a poset document. Covers must be cover relations unless `reduce`
/// is set, in which case implied relations are dropped.
pub fn parse_poset(text: &str, reduce: bool) -> Result<LabeledPoset, LoadError> {
    let doc: PosetJson = serde_json::from_str(text).map_err(|e| LoadError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let built = if reduce {
        LabeledPoset::from_relations(doc.elements.clone(), &doc.covers, doc.k)
    } else {
        LabeledPoset::new(doc.elements.clone(), &doc.covers, doc.k)
    };
    built.map_err(|error| LoadError::Invalid {
        field: locate(&doc, &error),
        error,
    })
}

pub fn load_poset(path: impl AsRef<Path>, reduce: bool) -> Result<LabeledPoset, LoadError> {
    let text = std::fs::read_to_string(path).map_err(LoadError::Io)?;
    parse_poset(&text, reduce)
}

/// Names the JSON field that triggered a validation error.
fn locate(doc: &PosetJson, error: &PosetError) -> String {
    let cover = |pred: &dyn Fn(&(String, String, u32)) -> bool| {
        doc.covers
            .iter()
            .position(pred)
            .map_or_else(|| "covers".to_string(), |i| format!("covers[{i}]"))
    };
    match error {
        PosetError::ZeroLabels => "k".into(),
        PosetError::DuplicateElement(e) => doc
            .elements
            .iter()
            .rposition(|x| x == e)
            .map_or_else(|| "elements".into(), |i| format!("elements[{i}]")),
        PosetError::UnknownElement(e) => cover(&|c| &c.0 == e || &c.1 == e),
        PosetError::SelfLoop(a) => cover(&|c| &c.0 == a && &c.1 == a),
        PosetError::DuplicateCover(a, b) => {
            let hits: Vec<usize> = (0..doc.covers.len())
                .filter(|&i| &doc.covers[i].0 == a && &doc.covers[i].1 == b)
                .collect();
            hits.get(1)
                .map_or_else(|| "covers".into(), |i| format!("covers[{i}]"))
        }
        PosetError::NotACover(a, b) => cover(&|c| &c.0 == a && &c.1 == b),
        PosetError::LabelOutOfRange { lower, upper, .. } => {
            cover(&|c| &c.0 == lower && &c.1 == upper)
        }
        PosetError::Cycle(_) => "covers".into(),
    }
}
