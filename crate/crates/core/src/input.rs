//! The JSON input document.
//!
//! ```json
//! { "schema": 1, "k": 2, "n": 3,
//!   "lambdas": [[2, 3], ["-2", 3], [0, "-3/1"]],
//!   "labels": ["a", "b", "c"], "distinguished": 1 }
//! ```
//!
//! or `{ "schema": 1, "partition": [1, 1, 1, 1, 1] }`. Coefficients are
//! integers or strings `"p/q"`; `distinguished` is 1-based. Unknown fields
//! are rejected.

use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::config::{format_rational, parse_rational, ConfigError, Configuration, Rational};
use crate::cyclic::{CyclicError, CyclicPartition};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coefficient {
    Integer(i64),
    Text(String),
}

impl Coefficient {
    pub fn to_rational(&self) -> Result<Rational, ConfigError> {
        match self {
            Coefficient::Integer(x) => Ok(Rational::from_integer((*x).into())),
            Coefficient::Text(s) => parse_rational(s),
        }
    }

    pub fn from_rational(r: &Rational) -> Self {
        if r.denom().is_one() {
            if let Some(x) = r.numer().to_i64() {
                return Coefficient::Integer(x);
            }
        }
        Coefficient::Text(format_rational(r))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    pub schema: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambdas: Option<Vec<Vec<Coefficient>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub distinguished: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub partition: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InputError {
    #[error("malformed input: {0}")]
    Json(String),
    #[error("unsupported schema version {0}, expected {SCHEMA_VERSION}")]
    Schema(u32),
    #[error("give either `lambdas` or `partition`, not both")]
    BothSources,
    #[error("input needs `lambdas` or `partition`")]
    NoSource,
    #[error("missing field `{0}`")]
    Missing(&'static str),
    #[error("`n` = {declared} but {found} coefficient vectors were given")]
    CountMismatch { declared: usize, found: usize },
    #[error("`k` must be 2 for a partition input, got {0}")]
    PartitionK(usize),
    #[error("distinguished coordinate {index} out of range 1..={n}")]
    Distinguished { index: usize, n: usize },
    #[error("invalid partition list {0:?}")]
    PartitionList(String),
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error(transparent)]
    Cyclic(#[from] CyclicError),
}

/// A parsed input: the configuration and, when given, its partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Input {
    pub config: Configuration,
    pub partition: Option<CyclicPartition>,
}

pub fn parse_document(text: &str) -> Result<InputDocument, InputError> {
    serde_json::from_str(text).map_err(|e| InputError::Json(e.to_string()))
}

pub fn parse_input(text: &str) -> Result<Input, InputError> {
    from_document(&parse_document(text)?)
}

pub fn from_document(doc: &InputDocument) -> Result<Input, InputError> {
    if doc.schema != SCHEMA_VERSION {
        return Err(InputError::Schema(doc.schema));
    }
    let (mut config, partition) = match (&doc.lambdas, &doc.partition) {
        (Some(_), Some(_)) => return Err(InputError::BothSources),
        (None, None) => return Err(InputError::NoSource),
        (None, Some(parts)) => {
            if let Some(k) = doc.k.filter(|&k| k != 2) {
                return Err(InputError::PartitionK(k));
            }
            let p = CyclicPartition::new(parts.clone())?;
            if let Some(n) = doc.n.filter(|&n| n != p.n()) {
                return Err(InputError::CountMismatch {
                    declared: n,
                    found: p.n(),
                });
            }
            (p.realize(), Some(p))
        }
        (Some(rows), None) => {
            let k = doc.k.ok_or(InputError::Missing("k"))?;
            if let Some(n) = doc.n.filter(|&n| n != rows.len()) {
                return Err(InputError::CountMismatch {
                    declared: n,
                    found: rows.len(),
                });
            }
            let lambdas = rows
                .iter()
                .map(|row| row.iter().map(Coefficient::to_rational).collect())
                .collect::<Result<Vec<Vec<Rational>>, _>>()?;
            (Configuration::new(k, lambdas)?, None)
        }
    };
    if let Some(labels) = &doc.labels {
        config = config.with_labels(labels.clone())?;
    }
    if let Some(d) = doc.distinguished {
        if d == 0 || d > config.n() {
            return Err(InputError::Distinguished {
                index: d,
                n: config.n(),
            });
        }
        config = config.with_distinguished(d - 1)?;
    }
    Ok(Input { config, partition })
}

/// The document describing `cfg` explicitly; parsing it gives `cfg` back.
pub fn to_document(cfg: &Configuration) -> InputDocument {
    InputDocument {
        schema: SCHEMA_VERSION,
        k: Some(cfg.k()),
        n: Some(cfg.n()),
        lambdas: Some(
            cfg.lambdas()
                .iter()
                .map(|v| v.iter().map(Coefficient::from_rational).collect())
                .collect(),
        ),
        labels: Some(cfg.labels().to_vec()),
        distinguished: Some(cfg.distinguished() + 1),
        partition: None,
    }
}

impl Serialize for Configuration {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        to_document(self).serialize(serializer)
    }
}

/// Parses a comma separated partition such as `1,1,1,1,1`.
pub fn parse_partition_list(text: &str) -> Result<CyclicPartition, InputError> {
    let parts = text
        .split(',')
        .map(|s| s.trim().parse::<usize>())
        .collect::<Result<Vec<usize>, _>>()
        .map_err(|_| InputError::PartitionList(text.to_string()))?;
    Ok(CyclicPartition::new(parts)?)
}
