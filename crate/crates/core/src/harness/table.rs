use std::collections::BTreeMap;
use std::fmt::Write as _;

use num::BigUint;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::perm::Permutation;
use crate::series::PowerSeries;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CountSource {
    Enumeration,
    Series,
    Structural,
}

impl CountSource {
    pub fn label(&self) -> &'static str {
        match self {
            CountSource::Enumeration => "enumeration",
            CountSource::Series => "series",
            CountSource::Structural => "structural",
        }
    }
}

/// Exact counts per length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountTable {
    pub source: CountSource,
    pub basis: Vec<Permutation>,
    pub counts: BTreeMap<usize, BigUint>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum TableFormat {
    Json,
    Csv,
    Text,
}

impl CountTable {
    pub fn new(source: CountSource, basis: Vec<Permutation>, counts: BTreeMap<usize, BigUint>) -> Self {
        CountTable { source, basis, counts }
    }

    /// Integer coefficients of `series` for lengths `lo..=hi`; `None` if any is not a non-negative integer.
    pub fn from_series(series: &PowerSeries, basis: Vec<Permutation>, lo: usize, hi: usize) -> Option<Self> {
        let mut counts = BTreeMap::new();
        for n in lo..=hi.min(series.order()) {
            let c = series.coeff(n);
            if !c.is_integer() {
                return None;
            }
            counts.insert(n, c.to_integer().to_biguint()?);
        }
        Some(CountTable { source: CountSource::Series, basis, counts })
    }

    pub fn get(&self, n: usize) -> Option<&BigUint> {
        self.counts.get(&n)
    }

    pub fn render(&self, format: TableFormat) -> String {
        match format {
            TableFormat::Json => serde_json::to_string_pretty(self).expect("tables serialize"),
            TableFormat::Csv => {
                let mut out = String::from("n,count\n");
                for (n, c) in &self.counts {
                    writeln!(out, "{n},{c}").expect("string write");
                }
                out
            }
            TableFormat::Text => {
                let basis: Vec<String> = self.basis.iter().map(ToString::to_string).collect();
                let mut out = format!("Av({}) [{}]\n", basis.join(", "), self.source.label());
                for (n, c) in &self.counts {
                    writeln!(out, "{n:>4}  {c}").expect("string write");
                }
                out
            }
        }
    }
}

struct DecimalCounts<'a>(&'a BTreeMap<usize, BigUint>);

impl Serialize for DecimalCounts<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (n, c) in self.0 {
            map.serialize_entry(&n.to_string(), &c.to_string())?;
        }
        map.end()
    }
}

impl Serialize for CountTable {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(3))?;
        map.serialize_entry("basis", &self.basis)?;
        map.serialize_entry("source", self.source.label())?;
        map.serialize_entry("counts", &DecimalCounts(&self.counts))?;
        map.end()
    }
}
