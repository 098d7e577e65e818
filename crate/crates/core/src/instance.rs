//! JSON instance files: a graded matrix of linear forms plus optional run
//! parameters.
//!
//! ```json
//! { "field": {"kind":"Fp","p":32003}, "grading": "row", "m": 2, "n": 3,
//!   "entries": [[[1,0,0],[0,1,0],[0,0,1]], [[1,2,3],[4,5,6],[7,8,10]]] }
//! ```
//!
//! `entries[i][j]` is the coefficient vector of entry `(i, j)` over its block's
//! variables. Prime-field coefficients are JSON integers; rational ones are
//! integers or `"a/b"` strings.

use serde::{Deserialize, Serialize};

use crate::graded::{GradedError, GradedLinearMatrix, Grading};
use crate::linalg::field::parse_rational;
use crate::linalg::{Field, FieldSpec, PrimeField, Rationals};
use crate::poly::OrderKind;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InstanceError {
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("schema error: {0}")]
    Schema(String),
    #[error(transparent)]
    Graded(#[from] GradedError),
}

/// A coefficient as written in JSON.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coeff {
    Int(i64),
    Text(String),
}

/// The on-disk schema.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub field: FieldSpec,
    pub grading: Grading,
    pub m: usize,
    pub n: usize,
    pub entries: Vec<Vec<Vec<Coeff>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<OrderKind>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cap: Option<usize>,
}

/// A parsed matrix over whichever field the file names.
#[derive(Clone, Debug, PartialEq)]
pub enum AnyMatrix {
    Fp(GradedLinearMatrix<PrimeField>),
    Q(GradedLinearMatrix<Rationals>),
}

impl AnyMatrix {
    pub fn grading(&self) -> Grading {
        match self {
            AnyMatrix::Fp(l) => l.grading(),
            AnyMatrix::Q(l) => l.grading(),
        }
    }
}

/// Instance file contents after validation.
#[derive(Clone, Debug, PartialEq)]
pub struct Instance {
    pub matrix: AnyMatrix,
    pub seed: Option<u64>,
    pub order: Option<OrderKind>,
    pub cap: Option<usize>,
}

impl InstanceFile {
    pub fn from_json(text: &str) -> Result<Self, InstanceError> {
        serde_json::from_str(text).map_err(|e| {
            if e.is_syntax() || e.is_eof() {
                InstanceError::Json(e.to_string())
            } else {
                InstanceError::Schema(e.to_string())
            }
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("instance files always serialize")
    }

    pub fn from_matrix<F: Field>(l: &GradedLinearMatrix<F>) -> Self {
        let f = l.field();
        let entries = l
            .coeffs()
            .iter()
            .map(|row| {
                row.iter()
                    .map(|v| {
                        v.iter()
                            .map(|x| {
                                let s = f.format(x);
                                s.parse::<i64>().map(Coeff::Int).unwrap_or(Coeff::Text(s))
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        InstanceFile {
            field: f.spec(),
            grading: l.grading(),
            m: l.m(),
            n: l.n(),
            entries,
            seed: None,
            order: None,
            cap: None,
        }
    }

    pub fn parse(&self) -> Result<Instance, InstanceError> {
        let matrix = match self.field {
            FieldSpec::Fp { p } => {
                let f = PrimeField::new(p)
                    .ok_or_else(|| InstanceError::Schema(format!("{p} is not a prime below 2^31")))?;
                AnyMatrix::Fp(self.build(f, |c| match c {
                    Coeff::Int(v) => Ok(f.from_i64(*v)),
                    Coeff::Text(s) => Err(format!("prime-field coefficient {s:?} must be an integer")),
                })?)
            }
            FieldSpec::Q => AnyMatrix::Q(self.build(Rationals, |c| match c {
                Coeff::Int(v) => Ok(Rationals.from_i64(*v)),
                Coeff::Text(s) => parse_rational(s).ok_or_else(|| format!("bad rational {s:?}")),
            })?),
        };
        Ok(Instance { matrix, seed: self.seed, order: self.order, cap: self.cap })
    }

    fn build<F: Field>(
        &self,
        field: F,
        conv: impl Fn(&Coeff) -> Result<F::Elem, String>,
    ) -> Result<GradedLinearMatrix<F>, InstanceError> {
        let coeffs = self
            .entries
            .iter()
            .map(|row| {
                row.iter().map(|v| v.iter().map(&conv).collect::<Result<Vec<_>, _>>()).collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()
            .map_err(InstanceError::Schema)?;
        GradedLinearMatrix::new(field, self.grading, self.m, self.n, coeffs).map_err(|e| match e {
            GradedError::Shape(s) => InstanceError::Schema(s),
            other => InstanceError::Graded(other),
        })
    }
}

impl Instance {
    pub fn from_json(text: &str) -> Result<Self, InstanceError> {
        InstanceFile::from_json(text)?.parse()
    }
}
