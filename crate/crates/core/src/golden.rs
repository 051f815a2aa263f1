//! Historical tables stored exactly as printed, plus the routine that
//! recomputes every entry and reports disagreements.
//!
//! Data lives in `data/*.json` next to this crate. Rows follow the same
//! schema the CLI emits for tables; a row may carry an `erratum` object
//! naming the column, the printed value and the corrected value. Printed
//! values are never edited in place.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::heterogeneous::{hetero_distribution, DicePool, MarkedDie};
use crate::homogeneous::count_table_add_die;
use crate::series::Count;

const TABLE1_JSON: &str = include_str!("../data/table1.json");
const S22_JSON: &str = include_str!("../data/s22.json");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TableId {
    /// Ways to throw `N = 1..=36` with `n = 1..=8` six-sided dice.
    Table1,
    /// Distribution of a d6 + d8 + d12 pool.
    S22,
}

impl TableId {
    pub const ALL: [TableId; 2] = [TableId::Table1, TableId::S22];

    pub fn name(&self) -> &'static str {
        match self {
            TableId::Table1 => "table1",
            TableId::S22 => "s22",
        }
    }

    /// Raw JSON as shipped.
    pub fn raw_json(&self) -> &'static str {
        match self {
            TableId::Table1 => TABLE1_JSON,
            TableId::S22 => S22_JSON,
        }
    }
}

impl fmt::Display for TableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TableId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TableId::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::UnknownTable(s.to_string()))
    }
}

/// On-disk layout of a golden table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldenFile {
    pub source: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n_max: Option<u32>,
    #[serde(rename = "N_max", default, skip_serializing_if = "Option::is_none")]
    pub sum_max: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub faces: Option<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub total: Option<String>,
    pub rows: Vec<GoldenRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldenRow {
    #[serde(rename = "N")]
    pub sum: u64,
    pub counts: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub erratum: Option<ErratumJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErratumJson {
    /// Column (number of dice) of the flagged entry; absent for one-column tables.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    pub printed: String,
    pub corrected: String,
}

/// One printed cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldenEntry {
    pub sum: u64,
    /// Number of dice; `None` for the single-pool distribution.
    pub dice: Option<u32>,
    pub printed: Count,
    pub corrected: Option<Count>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldenTable {
    pub id: TableId,
    pub file: GoldenFile,
    pub entries: Vec<GoldenEntry>,
    pub printed_total: Option<Count>,
}

fn parse_count(s: &str) -> Result<Count> {
    s.parse()
        .map_err(|_| Error::GoldenData(format!("`{s}` is not an integer")))
}

impl GoldenTable {
    pub fn load(id: TableId) -> Result<Self> {
        let file: GoldenFile =
            serde_json::from_str(id.raw_json()).map_err(|e| Error::GoldenData(e.to_string()))?;
        if file.source != id.name() {
            return Err(Error::GoldenData(format!(
                "file for {id} declares source `{}`",
                file.source
            )));
        }
        let single_column = id == TableId::S22;
        let mut entries = Vec::new();
        for row in &file.rows {
            for (col, printed) in row.counts.iter().enumerate() {
                let dice = (!single_column).then_some(col as u32 + 1);
                let corrected = match &row.erratum {
                    Some(e) if e.n == dice => {
                        if e.printed != *printed {
                            return Err(Error::GoldenData(format!(
                                "erratum at N={} expects printed {}, row has {printed}",
                                row.sum, e.printed
                            )));
                        }
                        Some(parse_count(&e.corrected)?)
                    }
                    _ => None,
                };
                entries.push(GoldenEntry {
                    sum: row.sum,
                    dice,
                    printed: parse_count(printed)?,
                    corrected,
                });
            }
        }
        let printed_total = file.total.as_deref().map(parse_count).transpose()?;
        Ok(Self {
            id,
            file,
            entries,
            printed_total,
        })
    }

    /// Printed value at `(N, n)` (`n = None` for the pool table).
    pub fn printed(&self, sum: u64, dice: Option<u32>) -> Option<&Count> {
        self.entries
            .iter()
            .find(|e| e.sum == sum && e.dice == dice)
            .map(|e| &e.printed)
    }

    pub fn errata(&self) -> impl Iterator<Item = &GoldenEntry> {
        self.entries.iter().filter(|e| e.corrected.is_some())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub sum: u64,
    pub dice: Option<u32>,
    pub printed: Count,
    pub computed: Count,
    /// Correction recorded for this cell, if it is a known erratum.
    pub corrected: Option<Count>,
}

impl Mismatch {
    /// A flagged erratum whose correction equals the recomputed value.
    pub fn is_confirmed_erratum(&self) -> bool {
        self.corrected.as_ref() == Some(&self.computed)
    }

    fn location(&self) -> String {
        match self.dice {
            Some(n) => format!("(N={},n={n})", self.sum),
            None => format!("(N={})", self.sum),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub table: TableId,
    pub checked: usize,
    pub mismatches: Vec<Mismatch>,
    /// Flagged errata whose printed value turned out to match after all.
    pub unconfirmed_errata: Vec<GoldenEntry>,
    pub printed_total: Option<Count>,
    pub computed_total: Count,
}

impl VerificationReport {
    pub fn matched(&self) -> usize {
        self.checked - self.mismatches.len()
    }

    /// Only flagged errata disagree, each equals its correction, and any
    /// printed total is reproduced.
    pub fn is_clean(&self) -> bool {
        self.mismatches.iter().all(Mismatch::is_confirmed_erratum)
            && self.unconfirmed_errata.is_empty()
            && self
                .printed_total
                .as_ref()
                .is_none_or(|t| *t == self.computed_total)
    }

    /// Human-readable report, one line per finding.
    pub fn summary(&self) -> String {
        let what = match self.table {
            TableId::Table1 => "printed entries",
            TableId::S22 => "entries",
        };
        let mut out = format!("{}/{} {what} match", self.matched(), self.checked);
        let confirmed: Vec<_> = self
            .mismatches
            .iter()
            .filter(|m| m.is_confirmed_erratum())
            .collect();
        if !confirmed.is_empty() {
            let plural = if confirmed.len() == 1 { "" } else { "s" };
            out.push_str(&format!(
                "; {} known erratum{plural} confirmed at ",
                confirmed.len()
            ));
            let parts: Vec<String> = confirmed
                .iter()
                .map(|m| {
                    format!(
                        "{}: printed {}, computed {}",
                        m.location(),
                        m.printed,
                        m.computed
                    )
                })
                .collect();
            out.push_str(&parts.join("; "));
        }
        if let Some(total) = &self.printed_total {
            if *total == self.computed_total {
                out.push_str(&format!("; total {total}"));
            } else {
                out.push_str(&format!(
                    "; total MISMATCH printed {total}, computed {}",
                    self.computed_total
                ));
            }
        }
        for m in self.mismatches.iter().filter(|m| !m.is_confirmed_erratum()) {
            out.push_str(&format!(
                "\nMISMATCH at {}: printed {}, computed {}",
                m.location(),
                m.printed,
                m.computed
            ));
            if let Some(c) = &m.corrected {
                out.push_str(&format!(" (recorded correction {c})"));
            }
        }
        for e in &self.unconfirmed_errata {
            out.push_str(&format!(
                "\nERRATUM NOT REPRODUCED at (N={}, n={:?}): printed value {} matches the computation",
                e.sum, e.dice, e.printed
            ));
        }
        out
    }
}

/// Recompute every entry of a golden table and compare.
pub fn verify_against_golden(id: TableId) -> Result<VerificationReport> {
    let table = GoldenTable::load(id)?;
    let computed: Vec<(Option<u32>, u64, Count)> = match id {
        TableId::Table1 => {
            let m = table
                .file
                .m
                .ok_or_else(|| Error::GoldenData("missing m".into()))?;
            let n_max = table
                .file
                .n_max
                .ok_or_else(|| Error::GoldenData("missing n_max".into()))?;
            let sum_max = table
                .file
                .sum_max
                .ok_or_else(|| Error::GoldenData("missing N_max".into()))?;
            let grid = count_table_add_die(m, n_max, sum_max);
            (1..=sum_max)
                .flat_map(|s| (1..=n_max).map(move |n| (s, n)))
                .map(|(s, n)| (Some(n), s, grid.get(s, n)))
                .collect()
        }
        TableId::S22 => {
            let faces = table
                .file
                .faces
                .clone()
                .ok_or_else(|| Error::GoldenData("missing faces".into()))?;
            let dice = faces
                .iter()
                .map(|&m| MarkedDie::standard(m))
                .collect::<Result<Vec<_>>>()?;
            hetero_distribution(&DicePool::new(dice)?)
                .into_iter()
                .map(|(s, c)| (None, s, c))
                .collect()
        }
    };

    let lookup = |sum: u64, dice: Option<u32>| -> Count {
        computed
            .iter()
            .find(|(d, s, _)| *s == sum && *d == dice)
            .map(|(_, _, c)| c.clone())
            .unwrap_or_default()
    };

    let mut mismatches = Vec::new();
    let mut unconfirmed_errata = Vec::new();
    for entry in &table.entries {
        let value = lookup(entry.sum, entry.dice);
        if value != entry.printed {
            mismatches.push(Mismatch {
                sum: entry.sum,
                dice: entry.dice,
                printed: entry.printed.clone(),
                computed: value,
                corrected: entry.corrected.clone(),
            });
        } else if entry.corrected.is_some() {
            unconfirmed_errata.push(entry.clone());
        }
    }
    // Nonzero computed cells the printed table omits.
    for (dice, sum, value) in &computed {
        if !value.is_zero() && table.printed(*sum, *dice).is_none() {
            mismatches.push(Mismatch {
                sum: *sum,
                dice: *dice,
                printed: Count::zero(),
                computed: value.clone(),
                corrected: None,
            });
        }
    }

    Ok(VerificationReport {
        table: id,
        checked: table.entries.len(),
        mismatches,
        unconfirmed_errata,
        printed_total: table.printed_total.clone(),
        computed_total: computed.iter().map(|(_, _, c)| c).sum(),
    })
}
