//! Text formats, the bundled corpus and input resolution.

pub mod corpus;
pub mod greechie;
pub mod oml;

use std::path::Path;

use thiserror::Error;

use crate::lattice::LatticeError;
use crate::ortho::{OrthoError, OrthoLattice};

pub use greechie::{emit_greechie, generate_from_greechie, parse_greechie, GreechieDocument, GreechieError};
pub use oml::{emit_oml, parse_oml, LatticeDocument};

#[derive(Debug, Error)]
pub enum InputError {
    #[error("line {line}: {reason}")]
    Syntax { line: usize, reason: String },
    #[error("{0}")]
    Semantic(String),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Ortho(#[from] OrthoError),
    #[error(transparent)]
    Greechie(#[from] GreechieError),
    #[error("unknown corpus entry `{0}`")]
    UnknownCorpus(String),
    #[error("cannot read `{path}`: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl InputError {
    pub(crate) fn syntax(line: usize, reason: impl Into<String>) -> Self {
        InputError::Syntax {
            line,
            reason: reason.into(),
        }
    }
}

/// A lattice document as read from `corpus:<name>`, a `.gd` Greechie diagram
/// or an `.oml` file.
pub fn load_document(source: &str, max_size: usize) -> Result<LatticeDocument, InputError> {
    if let Some(name) = source.strip_prefix("corpus:") {
        return corpus::document(name);
    }
    let text = std::fs::read_to_string(source).map_err(|e| InputError::Io {
        path: source.to_string(),
        source: e,
    })?;
    if Path::new(source).extension().is_some_and(|ext| ext == "gd") {
        let doc = parse_greechie(&text)?;
        Ok(generate_from_greechie(&doc, max_size)?)
    } else {
        parse_oml(&text)
    }
}

pub fn load(source: &str, max_size: usize) -> Result<(LatticeDocument, OrthoLattice), InputError> {
    let doc = load_document(source, max_size)?;
    let ol = doc.build(max_size)?;
    Ok((doc, ol))
}
