//! Sweep specification files.
//!
//! One `key = value` per line, `#` starts a comment. Repeating a key appends
//! to its list, and a value may itself be a comma-separated list of integers,
//! inclusive ranges `lo..hi`, or `*` (for `d`: every divisor of `ℓ − 1`).

use std::path::{Path, PathBuf};

use serde::Serialize;
use sha2::{Digest, Sha256};

use super::report::ReportFormat;
use crate::blocks::{ell_profile, ell_profile_negated, BlockQuery, EllProfile};
use crate::combinatorics::is_prime;
use crate::error::{Error, Result};
use crate::family::GroupFamily;

/// Longest list a single spec may expand a key to.
pub const MAX_LIST_LEN: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DValues {
    /// Every divisor of `ℓ − 1`.
    All,
    List(Vec<u64>),
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SweepSpec {
    pub families: Vec<GroupFamily>,
    pub ell_values: Vec<u64>,
    /// `None` means `*`.
    pub d_values: Option<Vec<u64>>,
    pub a_values: Vec<u64>,
    /// Weights, or ranks `n` for the principal-block families.
    pub w_values: Vec<u64>,
    /// Index exponents for `SL_n ≤ G ≤ GL_n`; empty means `g = a` (`G = SL_n`).
    pub g_values: Vec<u64>,
    /// Field sizes; when present, `(d, a)` are derived from each `q`.
    pub q_values: Vec<u64>,
    pub format: Option<ReportFormat>,
    pub out: Option<PathBuf>,
}

#[derive(Serialize)]
struct CanonicalSpec<'a> {
    families: Vec<&'static str>,
    ell: &'a [u64],
    d: DValues,
    a: &'a [u64],
    w: &'a [u64],
    g: &'a [u64],
    q: &'a [u64],
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_u64(token: &str, line: usize) -> Result<u64> {
    token
        .parse()
        .map_err(|_| parse_err(line, format!("`{token}` is not a nonnegative integer")))
}

/// Expands `1, 3..5` to `[1, 3, 4, 5]`.
pub fn parse_int_list(value: &str, line: usize) -> Result<Vec<u64>> {
    let mut out = Vec::new();
    for token in value.split(',').map(str::trim) {
        if token.is_empty() {
            return Err(parse_err(line, "empty list item"));
        }
        if let Some((lo, hi)) = token.split_once("..") {
            let (lo, hi) = (parse_u64(lo.trim(), line)?, parse_u64(hi.trim(), line)?);
            if lo > hi {
                return Err(parse_err(line, format!("empty range {lo}..{hi}")));
            }
            if (hi - lo) as usize >= MAX_LIST_LEN {
                return Err(parse_err(line, format!("range {lo}..{hi} is too long")));
            }
            out.extend(lo..=hi);
        } else {
            out.push(parse_u64(token, line)?);
        }
    }
    Ok(out)
}

impl SweepSpec {
    pub fn parse(text: &str) -> Result<Self> {
        let mut spec = SweepSpec::default();
        let mut d_all = false;
        let mut d_list = Vec::new();
        for (index, raw) in text.lines().enumerate() {
            let line = index + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let (key, value) = content
                .split_once('=')
                .ok_or_else(|| parse_err(line, "expected `key = value`"))?;
            let (key, value) = (key.trim(), value.trim());
            if value.is_empty() {
                return Err(parse_err(line, format!("`{key}` has no value")));
            }
            match key {
                "family" | "families" => {
                    for tag in value.split(',') {
                        spec.families.push(
                            tag.trim()
                                .parse()
                                .map_err(|_| parse_err(line, format!("unknown family `{}`", tag.trim())))?,
                        );
                    }
                }
                "ell" => spec.ell_values.extend(parse_int_list(value, line)?),
                "d" if value == "*" => d_all = true,
                "d" => d_list.extend(parse_int_list(value, line)?),
                "a" => spec.a_values.extend(parse_int_list(value, line)?),
                "w" | "n" => spec.w_values.extend(parse_int_list(value, line)?),
                "g" => spec.g_values.extend(parse_int_list(value, line)?),
                "q" => spec.q_values.extend(parse_int_list(value, line)?),
                "format" => {
                    spec.format = Some(value.parse().map_err(|e: Error| parse_err(line, e.to_string()))?)
                }
                "out" => spec.out = Some(PathBuf::from(value)),
                other => return Err(parse_err(line, format!("unknown key `{other}`"))),
            }
        }
        if d_all && !d_list.is_empty() {
            return Err(parse_err(0, "`d = *` cannot be combined with explicit d values"));
        }
        spec.d_values = (!d_all && !d_list.is_empty()).then_some(d_list);
        spec.validate()?;
        Ok(spec)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidParameter(format!("cannot read {}: {e}", path.display())))?;
        SweepSpec::parse(&text)
    }

    pub fn validate(&self) -> Result<()> {
        let empty = |what: &str| Err(Error::InvalidParameter(format!("no {what} given")));
        if self.families.is_empty() {
            return empty("families");
        }
        if self.ell_values.is_empty() {
            return empty("ell values");
        }
        if self.w_values.is_empty() && !self.families.iter().all(|f| *f == GroupFamily::PslEll) {
            return empty("w values");
        }
        for &ell in &self.ell_values {
            if ell == 2 {
                return Err(Error::EvenEll);
            }
            if !is_prime(ell) {
                return Err(Error::NotPrime(ell));
            }
        }
        if self.q_values.is_empty() {
            if self.a_values.is_empty() {
                return empty("a values (or q values)");
            }
            if self.a_values.contains(&0) {
                return Err(Error::InvalidParameter("a must be positive".into()));
            }
        } else if self.d_values.is_some() || !self.a_values.is_empty() {
            return Err(Error::InvalidParameter(
                "give either q values or d/a values, not both".into(),
            ));
        }
        Ok(())
    }

    /// SHA-256 of the canonical form of the parsed spec (output settings
    /// excluded).
    pub fn hash(&self) -> String {
        let canonical = CanonicalSpec {
            families: self.families.iter().map(|f| f.tag()).collect(),
            ell: &self.ell_values,
            d: match &self.d_values {
                None => DValues::All,
                Some(list) => DValues::List(list.clone()),
            },
            a: &self.a_values,
            w: &self.w_values,
            g: &self.g_values,
            q: &self.q_values,
        };
        let bytes = serde_json::to_vec(&canonical).expect("canonical spec serializes");
        hex::encode(Sha256::digest(&bytes))
    }

    fn profiles(&self, family: GroupFamily, ell: u64) -> Result<Vec<EllProfile>> {
        if !self.q_values.is_empty() {
            return self
                .q_values
                .iter()
                .map(|&q| {
                    if family.is_unitary() {
                        ell_profile_negated(q, ell)
                    } else {
                        ell_profile(q, ell)
                    }
                })
                .collect();
        }
        let ds: Vec<u64> = match &self.d_values {
            Some(list) => list.clone(),
            // Principal-block families live at d = 1.
            None if family.is_principal_only() => vec![1],
            None => (1..ell).filter(|d| (ell - 1) % d == 0).collect(),
        };
        let mut out = Vec::new();
        for d in ds {
            for &a in &self.a_values {
                out.push(EllProfile::new(ell, d, a)?);
            }
        }
        Ok(out)
    }

    /// Every query, in the order family, ℓ, profile, g, w.
    pub fn queries(&self) -> Result<Vec<BlockQuery>> {
        self.validate()?;
        let mut out = Vec::new();
        for &family in &self.families {
            for &ell in &self.ell_values {
                for profile in self.profiles(family, ell)? {
                    match family {
                        GroupFamily::PslEll => out.push(BlockQuery::psl(profile)),
                        GroupFamily::SlRange | GroupFamily::SuRange => {
                            let gs = if self.g_values.is_empty() {
                                vec![profile.a]
                            } else {
                                self.g_values.clone()
                            };
                            for g in gs {
                                for &n in &self.w_values {
                                    out.push(BlockQuery::principal(family, profile, n, g));
                                }
                            }
                        }
                        _ => {
                            for &w in &self.w_values {
                                out.push(BlockQuery::weighted(family, profile, w));
                            }
                        }
                    }
                    if out.len() > MAX_LIST_LEN {
                        return Err(Error::CapExceeded(format!(
                            "spec expands to more than {MAX_LIST_LEN} rows"
                        )));
                    }
                }
            }
        }
        Ok(out)
    }
}
