//! Wire formats for the domain objects.
//!
//! The raw structs mirror the JSON schemas one-to-one and derive serde;
//! conversion into the domain types runs full validation, so a document
//! can be structurally well-formed (deserializable) yet rejected as an
//! invariant violation. Callers that need to tell the two failure modes
//! apart deserialize into the raw struct first and convert second.

use crate::bijections::RefinedCountTable;
use crate::dissections::{Dissection, LabeledPolygon, Labeling};
use crate::partitions::{PartitionError, StaircasePartition};
use crate::shi_tableaux::{ShiTableau, TableauError};
use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::collections::BTreeSet;

/// `{"n": …, "m": …, "parts": […]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionJson {
    pub n: usize,
    pub m: usize,
    pub parts: Vec<usize>,
}

impl From<&StaircasePartition> for PartitionJson {
    fn from(p: &StaircasePartition) -> Self {
        Self {
            n: p.rank(),
            m: p.fuss(),
            parts: p.parts().to_vec(),
        }
    }
}

impl TryFrom<PartitionJson> for StaircasePartition {
    type Error = PartitionError;

    fn try_from(raw: PartitionJson) -> Result<Self, Self::Error> {
        StaircasePartition::new(raw.n, raw.m, raw.parts)
    }
}

/// `{"n": …, "m": …, "rows": [[k_{1,1},…,k_{1,n}], …, [k_{n,n}]]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableauJson {
    pub n: usize,
    pub m: usize,
    pub rows: Vec<Vec<usize>>,
}

impl From<&ShiTableau> for TableauJson {
    fn from(t: &ShiTableau) -> Self {
        Self {
            n: t.rank(),
            m: t.fuss(),
            rows: t.rows(),
        }
    }
}

impl TryFrom<TableauJson> for ShiTableau {
    type Error = TableauError;

    fn try_from(raw: TableauJson) -> Result<Self, Self::Error> {
        ShiTableau::new(raw.n, raw.m, &raw.rows)
    }
}

/// `{"n": …, "m": …, "labeling": "standard"|"alternating", "diagonals": [[a,b],…]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DissectionJson {
    pub n: usize,
    pub m: usize,
    pub labeling: Labeling,
    pub diagonals: Vec<(usize, usize)>,
}

impl From<&Dissection> for DissectionJson {
    fn from(d: &Dissection) -> Self {
        Self {
            n: d.polygon().rank(),
            m: d.polygon().fuss(),
            labeling: d.polygon().labeling(),
            diagonals: d.diagonals().to_vec(),
        }
    }
}

impl TryFrom<DissectionJson> for Dissection {
    type Error = crate::dissections::DissectionError;

    fn try_from(raw: DissectionJson) -> Result<Self, Self::Error> {
        if raw.n == 0 || raw.m == 0 {
            return Err(crate::dissections::DissectionError::InvalidParameters {
                n: raw.n,
                m: raw.m,
            });
        }
        let polygon = LabeledPolygon::with_labeling(raw.n, raw.m, raw.labeling);
        Dissection::new(polygon, raw.diagonals)
    }
}

/// One row of a refined-count table: a subset of snake indices and its
/// exact count as a decimal string.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RefinedCountRow {
    #[serde(rename = "J")]
    pub subset: Vec<usize>,
    pub count: String,
}

/// `{"n": …, "m": …, "rows": [{"J": […], "count": "…"}, …]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RefinedCountTableJson {
    pub n: usize,
    pub m: usize,
    pub rows: Vec<RefinedCountRow>,
}

impl From<&RefinedCountTable> for RefinedCountTableJson {
    fn from(table: &RefinedCountTable) -> Self {
        let rows = table
            .entries()
            .iter()
            .map(|(subset, count)| RefinedCountRow {
                subset: subset.iter().copied().collect(),
                count: count.to_string(),
            })
            .collect();
        Self {
            n: table.rank(),
            m: table.fuss(),
            rows,
        }
    }
}

impl TryFrom<RefinedCountTableJson> for RefinedCountTable {
    type Error = String;

    fn try_from(raw: RefinedCountTableJson) -> Result<Self, Self::Error> {
        let mut entries = BTreeMap::new();
        for row in raw.rows {
            let subset: BTreeSet<usize> = row.subset.iter().copied().collect();
            if subset.len() != row.subset.len() {
                return Err(format!("duplicate indices in subset {:?}", row.subset));
            }
            if let Some(&bad) = subset.iter().find(|&&i| i == 0 || i > raw.n) {
                return Err(format!("index {bad} outside 1..={}", raw.n));
            }
            let count = row
                .count
                .parse::<BigUint>()
                .map_err(|e| format!("bad count {:?}: {e}", row.count))?;
            if entries.insert(subset, count).is_some() {
                return Err(format!("subset {:?} listed twice", row.subset));
            }
        }
        Ok(RefinedCountTable::new(raw.n, raw.m, entries))
    }
}
