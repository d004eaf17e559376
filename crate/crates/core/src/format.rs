//! JSON encodings of relations.
//!
//! Canonical form: `{"n": 3, "pairs": [[0,0],[0,1],[1,1],[2,2]]}`, listing
//! every pair (diagonal included) in lexicographic order. Input may instead
//! give `{"n": 3, "hex": "c88"}`, the row-major bit string packed four bits
//! per hex digit with the first bit most significant.

use serde::{Deserialize, Serialize};

use crate::error::{OmegaError, Result};
use crate::relation::{GroundSet, OrderRelation, Relation};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RelationDoc {
    n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pairs: Option<Vec<[usize; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    hex: Option<String>,
}

pub fn relation_from_value(value: serde_json::Value) -> Result<Relation> {
    let doc: RelationDoc =
        serde_json::from_value(value).map_err(|e| OmegaError::Parse(e.to_string()))?;
    let ground = GroundSet::new(doc.n)?;
    match (doc.pairs, doc.hex) {
        (Some(pairs), None) => Relation::from_pairs(ground, pairs.into_iter().map(|[x, y]| (x, y))),
        (None, Some(hex)) => Relation::from_hex(ground, &hex),
        _ => Err(OmegaError::Parse(
            "expected exactly one of \"pairs\" or \"hex\"".into(),
        )),
    }
}

pub fn parse_relation(text: &str) -> Result<Relation> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| OmegaError::Parse(e.to_string()))?;
    relation_from_value(value)
}

pub fn parse_order(text: &str) -> Result<OrderRelation> {
    OrderRelation::new(parse_relation(text)?)
}

pub fn relation_to_value(r: &Relation) -> serde_json::Value {
    serde_json::to_value(RelationDoc {
        n: r.n(),
        pairs: Some(r.pairs().map(|(x, y)| [x, y]).collect()),
        hex: None,
    })
    .expect("relation documents always serialize")
}

/// Single-line canonical JSON.
pub fn to_canonical_json(r: &Relation) -> String {
    relation_to_value(r).to_string()
}

/// Canonical JSON with the hex form instead of the pair list.
pub fn to_hex_json(r: &Relation) -> String {
    serde_json::to_string(&RelationDoc {
        n: r.n(),
        pairs: None,
        hex: Some(r.to_hex()),
    })
    .expect("relation documents always serialize")
}

/// One canonical relation per line.
pub fn to_json_lines<'a, I>(relations: I) -> String
where
    I: IntoIterator<Item = &'a Relation>,
{
    let mut out = String::new();
    for r in relations {
        out.push_str(&to_canonical_json(r));
        out.push('\n');
    }
    out
}
