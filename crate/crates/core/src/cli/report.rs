//! Census reports and their CSV, JSON and markdown forms.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::blocks::SweepRow;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum ReportFormat {
    #[default]
    Csv,
    Json,
    Md,
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "csv" => Ok(ReportFormat::Csv),
            "json" => Ok(ReportFormat::Json),
            "md" | "markdown" => Ok(ReportFormat::Md),
            other => Err(Error::InvalidParameter(format!(
                "unknown format `{other}` (expected csv, json or md)"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportMetadata {
    pub tool: String,
    pub version: String,
    pub spec_hash: String,
    /// RFC 3339, UTC. Absent with `--strip-timestamp`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<String>,
}

impl ReportMetadata {
    pub fn new(spec_hash: String, with_timestamp: bool) -> Self {
        ReportMetadata {
            tool: env!("CARGO_PKG_NAME").to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            spec_hash,
            timestamp: with_timestamp.then(|| {
                chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true)
            }),
        }
    }
}

/// Verdict column value for rows whose parameters were rejected.
pub const ERROR_VERDICT: &str = "ERROR";

/// One census row. Field order is the CSV column order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRow {
    pub family: String,
    pub n: u64,
    pub ell: u64,
    pub d: u64,
    pub a: u64,
    pub w: u64,
    pub g: u64,
    pub m: u64,
    /// Decimal; empty for error rows.
    #[serde(rename = "k_B")]
    pub k_b: String,
    pub exactness: String,
    pub defect_exponent: Option<u64>,
    pub abelian: Option<bool>,
    pub verdict: String,
    pub two_path_checked: bool,
}

impl ReportRow {
    pub fn from_sweep(row: &SweepRow) -> Self {
        let q = &row.query;
        let mut out = ReportRow {
            family: q.family.tag().to_string(),
            n: q.n,
            ell: q.profile.ell,
            d: q.profile.d,
            a: q.profile.a,
            w: q.w,
            g: q.g,
            m: q.m,
            k_b: String::new(),
            exactness: String::new(),
            defect_exponent: None,
            abelian: None,
            verdict: ERROR_VERDICT.to_string(),
            two_path_checked: row.two_path_checked,
        };
        if let Ok(inv) = &row.outcome {
            out.k_b = inv.k_b.to_string();
            out.exactness = inv.exactness.to_string();
            out.defect_exponent = Some(inv.defect_exponent);
            out.abelian = Some(inv.abelian_defect);
            out.verdict = inv.verdict.to_string();
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusReport {
    pub metadata: ReportMetadata,
    pub rows: Vec<ReportRow>,
}

const CSV_META_PREFIX: &str = "# ";

impl CensusReport {
    pub fn render(&self, format: ReportFormat) -> Result<String> {
        match format {
            ReportFormat::Csv => self.to_csv(),
            ReportFormat::Json => self.to_json(),
            ReportFormat::Md => Ok(self.to_markdown()),
        }
    }

    fn metadata_pairs(&self) -> Vec<(&'static str, &str)> {
        let m = &self.metadata;
        let mut pairs = vec![
            ("tool", m.tool.as_str()),
            ("version", m.version.as_str()),
            ("spec_hash", m.spec_hash.as_str()),
        ];
        if let Some(ts) = &m.timestamp {
            pairs.push(("timestamp", ts.as_str()));
        }
        pairs
    }

    /// Metadata as leading `# key: value` lines, then a header and the rows.
    pub fn to_csv(&self) -> Result<String> {
        let mut out = String::new();
        for (key, value) in self.metadata_pairs() {
            writeln!(out, "{CSV_META_PREFIX}{key}: {value}").expect("writing to a String");
        }
        let mut writer = csv::WriterBuilder::new()
            .has_headers(false)
            .from_writer(Vec::new());
        writer
            .write_record([
                "family", "n", "ell", "d", "a", "w", "g", "m", "k_B", "exactness",
                "defect_exponent", "abelian", "verdict", "two_path_checked",
            ])
            .map_err(csv_error)?;
        for row in &self.rows {
            writer.serialize(row).map_err(csv_error)?;
        }
        let bytes = writer.into_inner().map_err(|e| csv_error(e.into_error().into()))?;
        out.push_str(&String::from_utf8(bytes).expect("csv output is UTF-8"));
        Ok(out)
    }

    pub fn from_csv(text: &str) -> Result<Self> {
        let mut tool = None;
        let mut version = None;
        let mut spec_hash = None;
        let mut timestamp = None;
        for line in text.lines() {
            let Some(meta) = line.strip_prefix(CSV_META_PREFIX) else {
                break;
            };
            let (key, value) = meta.split_once(": ").ok_or_else(|| Error::Parse {
                line: 0,
                message: format!("bad metadata line `{line}`"),
            })?;
            let value = value.to_string();
            match key {
                "tool" => tool = Some(value),
                "version" => version = Some(value),
                "spec_hash" => spec_hash = Some(value),
                "timestamp" => timestamp = Some(value),
                _ => {}
            }
        }
        let missing = |what: &str| Error::Parse {
            line: 0,
            message: format!("missing metadata `{what}`"),
        };
        let metadata = ReportMetadata {
            tool: tool.ok_or_else(|| missing("tool"))?,
            version: version.ok_or_else(|| missing("version"))?,
            spec_hash: spec_hash.ok_or_else(|| missing("spec_hash"))?,
            timestamp,
        };
        let mut reader = csv::ReaderBuilder::new()
            .comment(Some(b'#'))
            .from_reader(text.as_bytes());
        let rows = reader
            .deserialize()
            .collect::<std::result::Result<Vec<ReportRow>, _>>()
            .map_err(csv_error)?;
        Ok(CensusReport { metadata, rows })
    }

    pub fn to_json(&self) -> Result<String> {
        let mut text = serde_json::to_string_pretty(self)
            .map_err(|e| Error::InvalidParameter(format!("json: {e}")))?;
        text.push('\n');
        Ok(text)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            message: e.to_string(),
        })
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::from("# Census report\n\n");
        for (key, value) in self.metadata_pairs() {
            writeln!(out, "- {key}: `{value}`").unwrap();
        }
        out.push_str(
            "\n| family | n | ell | d | a | w | g | m | k_B | exactness | defect_exponent | abelian | verdict | two_path_checked |\n",
        );
        out.push_str(&format!("|{}\n", "---|".repeat(14)));
        let opt = |v: Option<String>| v.unwrap_or_default();
        for r in &self.rows {
            writeln!(
                out,
                "| {} | {} | {} | {} | {} | {} | {} | {} | {} | {} | {} | {} | {} | {} |",
                r.family,
                r.n,
                r.ell,
                r.d,
                r.a,
                r.w,
                r.g,
                r.m,
                r.k_b,
                r.exactness,
                opt(r.defect_exponent.map(|v| v.to_string())),
                opt(r.abelian.map(|v| v.to_string())),
                r.verdict,
                r.two_path_checked
            )
            .unwrap();
        }
        out
    }
}

fn csv_error(e: csv::Error) -> Error {
    Error::InvalidParameter(format!("csv: {e}"))
}
