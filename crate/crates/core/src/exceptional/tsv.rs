//! Reader for the embedded tab-separated tables.
//!
//! Layout: `#! key = value` metadata lines, `#` comments, one header line,
//! then one row per line. Blank lines are ignored.

use std::collections::BTreeMap;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct TsvRecord {
    pub line: usize,
    pub fields: Vec<String>,
}

impl TsvRecord {
    pub fn parse<T: FromStr>(&self, column: usize, name: &str) -> Result<T> {
        let raw = &self.fields[column];
        raw.parse().map_err(|_| Error::Parse {
            line: self.line,
            message: format!("column `{name}`: cannot parse `{raw}`"),
        })
    }

    pub fn fail(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            line: self.line,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct TsvDocument {
    pub metadata: BTreeMap<String, String>,
    pub records: Vec<TsvRecord>,
}

impl TsvDocument {
    pub fn parse(text: &str, header: &[&str]) -> Result<Self> {
        let mut metadata = BTreeMap::new();
        let mut records = Vec::new();
        let mut seen_header = false;
        for (index, raw) in text.lines().enumerate() {
            let line = index + 1;
            if let Some(meta) = raw.strip_prefix("#!") {
                let (key, value) = meta.split_once('=').ok_or_else(|| Error::Parse {
                    line,
                    message: "metadata line needs `key = value`".into(),
                })?;
                metadata.insert(key.trim().to_string(), value.trim().to_string());
                continue;
            }
            if raw.starts_with('#') || raw.trim().is_empty() {
                continue;
            }
            let fields: Vec<String> = raw.split('\t').map(|f| f.trim().to_string()).collect();
            if !seen_header {
                if fields != header {
                    return Err(Error::Parse {
                        line,
                        message: format!("expected header `{}`", header.join("\\t")),
                    });
                }
                seen_header = true;
                continue;
            }
            if fields.len() != header.len() {
                return Err(Error::Parse {
                    line,
                    message: format!("expected {} fields, found {}", header.len(), fields.len()),
                });
            }
            records.push(TsvRecord { line, fields });
        }
        if !seen_header {
            return Err(Error::Parse {
                line: 0,
                message: "missing header line".into(),
            });
        }
        Ok(TsvDocument { metadata, records })
    }

    pub fn meta(&self, key: &str) -> Result<&str> {
        self.metadata
            .get(key)
            .map(String::as_str)
            .ok_or_else(|| Error::Parse {
                line: 0,
                message: format!("missing metadata `{key}`"),
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_metadata_and_rows() {
        let doc = TsvDocument::parse("#! ell = 3\n# note\nx\ty\n1\t2\n\n3\t4\n", &["x", "y"]).unwrap();
        assert_eq!(doc.meta("ell").unwrap(), "3");
        assert_eq!(doc.records.len(), 2);
        assert_eq!(doc.records[1].line, 6);
    }

    #[test]
    fn rejects_ragged_rows() {
        let err = TsvDocument::parse("x\ty\n1\n", &["x", "y"]).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }

    #[test]
    fn rejects_wrong_header() {
        assert!(TsvDocument::parse("x\tz\n", &["x", "y"]).is_err());
        assert!(TsvDocument::parse("# only comments\n", &["x"]).is_err());
    }
}
