//! The JSON/CSV/exact renderings of probability tables and histograms.
//!
//! Rationals cross this boundary as numerator/denominator decimal strings,
//! never as floats; the `prob_dec` CSV column is display-only and rounds
//! half-even.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use young_schur::graph::Diagram;
use young_schur::measures::DistributionTable;
use young_schur::rational::{to_decimal, Rational};
use young_schur::sample::EmpiricalTable;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Exact,
    Json,
    Csv,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct TableJson {
    pub kind: String,
    pub n: u64,
    pub params: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub total: Option<u64>,
    pub entries: Vec<EntryJson>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct EntryJson {
    pub parts: String,
    pub prob_num: String,
    pub prob_den: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub count: Option<u64>,
}

pub fn from_distribution<D: Diagram>(
    table: &DistributionTable<D>,
    params: &BTreeMap<String, String>,
) -> TableJson {
    TableJson {
        kind: D::KIND.as_str().to_string(),
        n: table.level(),
        params: params.clone(),
        total: None,
        entries: table
            .iter()
            .map(|(d, p)| EntryJson {
                parts: d.to_string(),
                prob_num: p.numer().to_string(),
                prob_den: p.denom().to_string(),
                count: None,
            })
            .collect(),
    }
}

pub fn from_empirical<D: Diagram>(
    emp: &EmpiricalTable<D>,
    params: &BTreeMap<String, String>,
) -> TableJson {
    TableJson {
        kind: D::KIND.as_str().to_string(),
        n: emp.level(),
        params: params.clone(),
        total: Some(emp.total()),
        entries: emp
            .iter()
            .map(|(d, count)| {
                let freq = emp.frequency(d);
                EntryJson {
                    parts: d.to_string(),
                    prob_num: freq.numer().to_string(),
                    prob_den: freq.denom().to_string(),
                    count: Some(count),
                }
            })
            .collect(),
    }
}

impl EntryJson {
    pub fn prob(&self) -> Result<Rational, String> {
        let num = self
            .prob_num
            .parse()
            .map_err(|_| format!("bad numerator {:?}", self.prob_num))?;
        let den = self
            .prob_den
            .parse()
            .map_err(|_| format!("bad denominator {:?}", self.prob_den))?;
        Ok(Rational::new(num, den))
    }
}

pub fn render(table: &TableJson, format: Format, digits: usize) -> String {
    match format {
        Format::Json => {
            let mut out =
                serde_json::to_string_pretty(table).expect("table serialization is infallible");
            out.push('\n');
            out
        }
        Format::Csv => {
            let with_counts = table.total.is_some();
            let mut out = String::from("parts,prob_num,prob_den,prob_dec");
            if with_counts {
                out.push_str(",count");
            }
            out.push('\n');
            for e in &table.entries {
                let dec = e
                    .prob()
                    .map(|p| to_decimal(&p, digits))
                    .unwrap_or_default();
                out.push_str(&format!(
                    "\"{}\",{},{},{}",
                    e.parts, e.prob_num, e.prob_den, dec
                ));
                if with_counts {
                    out.push_str(&format!(",{}", e.count.unwrap_or(0)));
                }
                out.push('\n');
            }
            out
        }
        Format::Exact => {
            let mut out = String::new();
            for e in &table.entries {
                out.push_str(&format!("{}\t{}/{}", e.parts, e.prob_num, e.prob_den));
                if let Some(c) = e.count {
                    out.push_str(&format!("\t{c}"));
                }
                out.push('\n');
            }
            out
        }
    }
}
