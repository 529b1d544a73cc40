//! Input documents: line-oriented JSON describing either a finite
//! Cuntz-Krieger matrix or an infinite-matrix seed.
//!
//! ```json
//! {"kind": "ck", "matrix": [[1,1,1],[1,1,1],[1,0,0]]}
//! {"kind": "seed", "K": 1, "matrix": [[1]], "c": [1], "tail": "all-ones"}
//! {"kind": "seed", "K": 3, "matrix": [[1,1,1],[1,1,1],[1,1,1]], "c": [0,0,1],
//!  "tail": {"hat": [[1,1],[1,1]]}}
//! {"kind": "seed", "K": 2, "matrix": [[1,1],[1,1]], "c": [1,1],
//!  "tail": {"explicit": {"rows": [[1,0,1]], "c": [1], "assumed_drs": true}}}
//! ```
//!
//! Matrices are 1-based arrays of 0/1 rows; `K` is the base level.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::zomat::{
    validate_ck, CkMatrix, ExplicitTail, MatrixError, SeedError, StableSeed, TailRule,
    ZeroOneMatrix,
};

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("malformed document: {0}")]
    Malformed(#[from] serde_json::Error),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Seed(#[from] SeedError),
    #[error("unknown tail {0:?}; expected \"all-ones\", \"p-infinity\", {{\"hat\": rows}} or {{\"explicit\": ...}}")]
    UnknownTail(String),
    #[error("expected a {expected} document but got {got}")]
    WrongKind {
        expected: &'static str,
        got: &'static str,
    },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum InputDocument {
    #[serde(rename = "ck")]
    Ck { matrix: Vec<Vec<u8>> },
    #[serde(rename = "seed")]
    Seed {
        #[serde(rename = "K")]
        k: usize,
        matrix: Vec<Vec<u8>>,
        c: Vec<u8>,
        tail: TailDocument,
    },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum TailDocument {
    Named(String),
    Hat { hat: Vec<Vec<u8>> },
    Explicit { explicit: ExplicitDocument },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ExplicitDocument {
    pub rows: Vec<Vec<u8>>,
    pub c: Vec<u8>,
    #[serde(default)]
    pub assumed_drs: bool,
}

/// A parsed and structurally validated input.  Irreducibility and the
/// permutation check are preconditions of individual operations, not of
/// parsing, so a Cuntz-Krieger document carries the raw matrix.
#[derive(Clone, Debug)]
pub enum Input {
    Ck(ZeroOneMatrix),
    Seed(StableSeed),
}

impl InputDocument {
    pub fn from_json(text: &str) -> Result<Self, DocumentError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("document serialization cannot fail")
    }

    /// Validates the document into domain data.
    pub fn into_input(self) -> Result<Input, DocumentError> {
        match self {
            InputDocument::Ck { matrix } => Ok(Input::Ck(ZeroOneMatrix::new(matrix)?)),
            InputDocument::Seed { k, matrix, c, tail } => {
                let corner = ZeroOneMatrix::new(matrix)?;
                let tail = match tail {
                    TailDocument::Named(name) => match name.as_str() {
                        "all-ones" => TailRule::AllOnes,
                        "p-infinity" => TailRule::PInfinity,
                        other => return Err(DocumentError::UnknownTail(other.to_string())),
                    },
                    TailDocument::Hat { hat } => {
                        let base = ZeroOneMatrix::new(hat)?;
                        TailRule::Hat(validate_ck(&base)?)
                    }
                    TailDocument::Explicit { explicit } => TailRule::Explicit(ExplicitTail {
                        rows: explicit.rows,
                        c: explicit.c,
                        assumed_drs: explicit.assumed_drs,
                    }),
                };
                Ok(Input::Seed(StableSeed::new(k, corner, c, tail)?))
            }
        }
    }
}

impl Input {
    pub fn kind(&self) -> &'static str {
        match self {
            Input::Ck(_) => "ck",
            Input::Seed(_) => "seed",
        }
    }

    pub fn expect_ck(&self) -> Result<&ZeroOneMatrix, DocumentError> {
        match self {
            Input::Ck(m) => Ok(m),
            Input::Seed(_) => Err(DocumentError::WrongKind {
                expected: "ck",
                got: "seed",
            }),
        }
    }

    /// The matrix of a Cuntz-Krieger document, validated.
    pub fn expect_valid_ck(&self) -> Result<CkMatrix, DocumentError> {
        Ok(validate_ck(self.expect_ck()?)?)
    }

    pub fn expect_seed(&self) -> Result<&StableSeed, DocumentError> {
        match self {
            Input::Seed(s) => Ok(s),
            Input::Ck(_) => Err(DocumentError::WrongKind {
                expected: "seed",
                got: "ck",
            }),
        }
    }
}

/// Serializes a seed back into its document form, used to echo inputs and
/// to write fixtures.
pub fn seed_to_document(seed: &StableSeed) -> InputDocument {
    let tail = match seed.tail() {
        TailRule::AllOnes => TailDocument::Named("all-ones".to_string()),
        TailRule::PInfinity => TailDocument::Named("p-infinity".to_string()),
        TailRule::Hat(base) => TailDocument::Hat {
            hat: base.rows_vec(),
        },
        TailRule::Explicit(t) => TailDocument::Explicit {
            explicit: ExplicitDocument {
                rows: t.rows.clone(),
                c: t.c.clone(),
                assumed_drs: t.assumed_drs,
            },
        },
    };
    InputDocument::Seed {
        k: seed.k(),
        matrix: seed.corner().rows_vec(),
        c: seed.c().to_vec(),
        tail,
    }
}

pub fn ck_to_document(m: &CkMatrix) -> InputDocument {
    InputDocument::Ck {
        matrix: m.rows_vec(),
    }
}
