//! JSON evidence documents: one frame plus named mass functions.
//!
//! ```json
//! {
//!   "frame": ["Poor", "Low", "Middle", "High", "Perfect"],
//!   "bbas": {
//!     "m1": [{ "set": ["Poor"], "mass": 1.0 }],
//!     "m2": [{ "set": [2, 3], "mass": 0.6 }, { "set": [1, 2, 3, 4, 5], "mass": 0.4 }]
//!   }
//! }
//! ```
//!
//! Set members are labels or 1-based indices and may be mixed. Entries naming
//! the same set are merged. Document order of the mass functions is kept.

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::{Bba, Element, Frame};

#[derive(Debug, Clone, PartialEq)]
pub struct EvidenceDocument {
    pub frame: Frame,
    pub bbas: IndexMap<String, Bba>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ParseOptions {
    /// Rescale each mass function to sum to 1 instead of rejecting rounding drift.
    pub renormalize: bool,
}

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid frame: {0}")]
    Frame(#[source] crate::Error),
    #[error("invalid bba {name:?}: {source}")]
    Bba {
        name: String,
        #[source]
        source: crate::Error,
    },
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    frame: Vec<String>,
    bbas: IndexMap<String, Vec<RawEntry>>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawEntry {
    set: Vec<Element>,
    mass: f64,
}

pub fn parse_document(text: &str) -> Result<EvidenceDocument, DocumentError> {
    parse_document_with(text, ParseOptions::default())
}

pub fn parse_document_with(
    text: &str,
    options: ParseOptions,
) -> Result<EvidenceDocument, DocumentError> {
    let raw: RawDocument = serde_json::from_str(text).map_err(|e| DocumentError::Syntax {
        line: e.line(),
        column: e.column(),
        message: strip_position(&e.to_string()),
    })?;
    let frame = Frame::new(raw.frame).map_err(DocumentError::Frame)?;
    let mut bbas = IndexMap::with_capacity(raw.bbas.len());
    for (name, entries) in raw.bbas {
        let bba = build_bba(&frame, &entries, options).map_err(|source| DocumentError::Bba {
            name: name.clone(),
            source,
        })?;
        bbas.insert(name, bba);
    }
    Ok(EvidenceDocument { frame, bbas })
}

fn build_bba(frame: &Frame, entries: &[RawEntry], options: ParseOptions) -> crate::Result<Bba> {
    let entries = entries
        .iter()
        .map(|e| Ok((frame.set_of_elements(&e.set)?, e.mass)))
        .collect::<crate::Result<Vec<_>>>()?;
    if options.renormalize {
        Bba::new_normalized(frame, entries)
    } else {
        Bba::new(frame, entries)
    }
}

// serde_json appends " at line X column Y", which the variant already carries
fn strip_position(message: &str) -> String {
    match message.rfind(" at line ") {
        Some(pos) => message[..pos].to_owned(),
        None => message.to_owned(),
    }
}

/// Pretty-printed JSON with sets written as labels.
pub fn serialize_document(doc: &EvidenceDocument) -> String {
    let raw = RawDocument {
        frame: doc.frame.labels().to_vec(),
        bbas: doc
            .bbas
            .iter()
            .map(|(name, bba)| {
                let entries = bba
                    .focal_elements()
                    .map(|(set, mass)| RawEntry {
                        set: set
                            .indices()
                            .map(|i| Element::Label(doc.frame.label(i).unwrap().to_owned()))
                            .collect(),
                        mass,
                    })
                    .collect();
                (name.clone(), entries)
            })
            .collect(),
    };
    let mut out = serde_json::to_string_pretty(&raw).expect("document serializes");
    out.push('\n');
    out
}

impl EvidenceDocument {
    pub fn get(&self, name: &str) -> Option<&Bba> {
        self.bbas.get(name)
    }
}
