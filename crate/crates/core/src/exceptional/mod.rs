//! Tabulated data for exceptional groups and the numeric checks run on it.
//!
//! The tables ship as tab-separated files under `data/` and are compiled into
//! the binary. [`ExceptionalData::load_dir`] reads replacements from disk,
//! which the CLI uses for `--data`.

mod tsv;

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::LazyLock;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::combinatorics::{nat_pow, Nat};
use crate::error::{Error, Result};
use crate::lseries::{el_series_total, SeriesKind};
use tsv::TsvDocument;

pub const TABLE1_FILE: &str = "table1_unipotent.tsv";
pub const CLASS_TABLE_FILES: [&str; 3] = ["f4_l2.tsv", "f4_l3.tsv", "e6_l3.tsv"];
pub const E8_FILE: &str = "e8_l5_isolated.tsv";

const TABLE1_TEXT: &str = include_str!("../../data/table1_unipotent.tsv");
const CLASS_TABLE_TEXTS: [&str; 3] = [
    include_str!("../../data/f4_l2.tsv"),
    include_str!("../../data/f4_l3.tsv"),
    include_str!("../../data/e6_l3.tsv"),
];
const E8_TEXT: &str = include_str!("../../data/e8_l5_isolated.tsv");

/// One printed column of the unipotent-count table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnipotentCountEntry {
    /// Type labels sharing this count, e.g. `["B2", "C2"]`.
    pub labels: Vec<String>,
    #[serde(with = "crate::combinatorics::nat_serde")]
    pub count: Nat,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnipotentCountTable {
    pub entries: Vec<UnipotentCountEntry>,
    by_label: BTreeMap<String, Nat>,
}

pub const UNIPOTENT_TABLE_LEN: usize = 15;

impl UnipotentCountTable {
    pub fn parse(text: &str) -> Result<Self> {
        let doc = TsvDocument::parse(text, &["label", "count"])?;
        let mut entries = Vec::new();
        let mut by_label = BTreeMap::new();
        for record in &doc.records {
            let labels: Vec<String> = record.fields[0]
                .split(',')
                .map(|l| l.trim().to_string())
                .filter(|l| !l.is_empty())
                .collect();
            if labels.is_empty() {
                return Err(record.fail("empty label"));
            }
            let count: Nat = record.parse(1, "count")?;
            if count.is_zero() {
                return Err(record.fail("count must be positive"));
            }
            for label in &labels {
                if by_label.insert(label.clone(), count.clone()).is_some() {
                    return Err(record.fail(format!("duplicate label `{label}`")));
                }
            }
            entries.push(UnipotentCountEntry { labels, count });
        }
        if entries.len() != UNIPOTENT_TABLE_LEN {
            return Err(Error::Parse {
                line: 0,
                message: format!(
                    "expected {UNIPOTENT_TABLE_LEN} entries, found {}",
                    entries.len()
                ),
            });
        }
        Ok(UnipotentCountTable { entries, by_label })
    }

    pub fn get(&self, label: &str) -> Result<Nat> {
        self.by_label
            .get(label.trim())
            .cloned()
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn labels(&self) -> impl Iterator<Item = &str> {
        self.by_label.keys().map(String::as_str)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassRow {
    pub centralizer_label: String,
    pub order_of_t: u64,
    #[serde(with = "crate::combinatorics::nat_serde")]
    pub e_count: Nat,
    #[serde(with = "crate::combinatorics::nat_serde")]
    pub class_size: Nat,
    pub multiplicity: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassTable {
    pub group_label: String,
    pub ell: u64,
    pub rows: Vec<ClassRow>,
}

impl ClassTable {
    pub fn parse(text: &str) -> Result<Self> {
        let doc = TsvDocument::parse(
            text,
            &["centralizer", "order", "e_count", "class_size", "multiplicity"],
        )?;
        let group_label = doc.meta("group")?.to_string();
        let ell: u64 = doc.meta("ell")?.parse().map_err(|_| Error::Parse {
            line: 0,
            message: "metadata `ell` is not an integer".into(),
        })?;
        let mut rows = Vec::new();
        for record in &doc.records {
            let row = ClassRow {
                centralizer_label: record.fields[0].clone(),
                order_of_t: record.parse(1, "order")?,
                e_count: record.parse(2, "e_count")?,
                class_size: record.parse(3, "class_size")?,
                multiplicity: record.parse(4, "multiplicity")?,
            };
            if row.order_of_t == 0 || row.multiplicity == 0 {
                return Err(record.fail("order and multiplicity must be positive"));
            }
            if row.e_count.is_zero() || row.class_size.is_zero() {
                return Err(record.fail(format!(
                    "row `{}`: e_count and class_size must be at least 1",
                    row.centralizer_label
                )));
            }
            rows.push(row);
        }
        let table = ClassTable {
            group_label,
            ell,
            rows,
        };
        table.identity_row()?;
        Ok(table)
    }

    pub fn identity_row(&self) -> Result<&ClassRow> {
        let row = self
            .rows
            .iter()
            .find(|r| r.order_of_t == 1)
            .ok_or_else(|| {
                Error::InvalidParameter(format!("{} table has no identity row", self.group_label))
            })?;
        if row.class_size != Nat::from(1u8) || row.multiplicity != 1 {
            return Err(Error::InvalidParameter(format!(
                "{} identity row `{}` must have class size 1",
                self.group_label, row.centralizer_label
            )));
        }
        Ok(row)
    }
}

/// Totals over a class table; `holds` iff the average of
/// `|E(G,t)| / |P ∩ t^N|` is below one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AverageCheck {
    #[serde(with = "crate::combinatorics::nat_serde")]
    pub sum_e: Nat,
    #[serde(with = "crate::combinatorics::nat_serde")]
    pub sum_sizes: Nat,
    pub holds: bool,
}

pub fn average_check(table: &ClassTable) -> AverageCheck {
    let mut sum_e = Nat::zero();
    let mut sum_sizes = Nat::zero();
    for row in &table.rows {
        sum_e += &row.e_count * row.multiplicity;
        sum_sizes += &row.class_size * row.multiplicity;
    }
    let holds = sum_e < sum_sizes;
    AverageCheck {
        sum_e,
        sum_sizes,
        holds,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct E8IsolatedRow {
    /// `None` for the two rows printed without a number.
    pub case_number: Option<u32>,
    pub centralizer_label: String,
    pub levi_label: String,
    pub cuspidal_label: String,
    pub defect_coeff: u64,
    pub defect_const: u64,
}

pub fn parse_e8_table(text: &str) -> Result<Vec<E8IsolatedRow>> {
    let doc = TsvDocument::parse(
        text,
        &["case", "centralizer", "levi", "cuspidal", "coeff", "const"],
    )?;
    let mut rows = Vec::new();
    for record in &doc.records {
        let case_number = match record.fields[0].as_str() {
            "-" => None,
            _ => Some(record.parse(0, "case")?),
        };
        let row = E8IsolatedRow {
            case_number,
            centralizer_label: record.fields[1].clone(),
            levi_label: record.fields[2].clone(),
            cuspidal_label: record.fields[3].clone(),
            defect_coeff: record.parse(4, "coeff")?,
            defect_const: record.parse(5, "const")?,
        };
        if ![4, 5, 8].contains(&row.defect_coeff) || row.defect_const > 1 {
            return Err(record.fail(format!(
                "row `{}`: defect 5^({}a+{}) is outside the tabulated shapes",
                row.centralizer_label, row.defect_coeff, row.defect_const
            )));
        }
        rows.push(row);
    }
    Ok(rows)
}

/// `|D| = 5^{coeff·a + const}`.
pub fn e8_defect_order(row: &E8IsolatedRow, a: u64) -> Nat {
    nat_pow(5, row.defect_coeff * a + row.defect_const)
}

/// Every table, validated against each other.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExceptionalData {
    pub unipotent: UnipotentCountTable,
    pub class_tables: Vec<ClassTable>,
    pub e8_rows: Vec<E8IsolatedRow>,
}

impl ExceptionalData {
    fn from_texts(table1: &str, classes: &[String], e8: &str) -> Result<Self> {
        let unipotent = UnipotentCountTable::parse(table1)?;
        let class_tables = classes
            .iter()
            .map(|t| ClassTable::parse(t))
            .collect::<Result<Vec<_>>>()?;
        for table in &class_tables {
            let identity = table.identity_row()?;
            let expected = unipotent.get(&table.group_label)?;
            if identity.e_count != expected {
                return Err(Error::InvalidParameter(format!(
                    "{} ℓ={} identity row `{}` has {} unipotent characters, table lists {}",
                    table.group_label,
                    table.ell,
                    identity.centralizer_label,
                    identity.e_count,
                    expected
                )));
            }
        }
        let e8_rows = parse_e8_table(e8)?;
        Ok(ExceptionalData {
            unipotent,
            class_tables,
            e8_rows,
        })
    }

    pub fn builtin() -> &'static ExceptionalData {
        static DATA: LazyLock<ExceptionalData> = LazyLock::new(|| {
            let classes: Vec<String> = CLASS_TABLE_TEXTS.iter().map(|s| s.to_string()).collect();
            ExceptionalData::from_texts(TABLE1_TEXT, &classes, E8_TEXT)
                .expect("embedded tables are valid")
        });
        &DATA
    }

    /// Loads the five tables from `dir`, falling back to the embedded copy for
    /// any file that is absent.
    pub fn load_dir(dir: &Path) -> Result<Self> {
        let read = |name: &str, fallback: &str| -> Result<String> {
            let path = dir.join(name);
            if path.exists() {
                std::fs::read_to_string(&path).map_err(|e| {
                    Error::InvalidParameter(format!("cannot read {}: {e}", path.display()))
                })
            } else {
                Ok(fallback.to_string())
            }
        };
        let table1 = read(TABLE1_FILE, TABLE1_TEXT)?;
        let classes = CLASS_TABLE_FILES
            .iter()
            .zip(CLASS_TABLE_TEXTS)
            .map(|(name, text)| read(name, text))
            .collect::<Result<Vec<_>>>()?;
        let e8 = read(E8_FILE, E8_TEXT)?;
        ExceptionalData::from_texts(&table1, &classes, &e8)
    }

    pub fn class_table(&self, group: &str, ell: u64) -> Result<&ClassTable> {
        self.class_tables
            .iter()
            .find(|t| t.group_label == group && t.ell == ell)
            .ok_or_else(|| Error::UnknownLabel(format!("{group} ℓ={ell}")))
    }
}

pub fn unipotent_count(label: &str) -> Result<Nat> {
    ExceptionalData::builtin().unipotent.get(label)
}

pub fn class_tables() -> &'static [ClassTable] {
    &ExceptionalData::builtin().class_tables
}

pub fn e8_isolated_rows() -> &'static [E8IsolatedRow] {
    &ExceptionalData::builtin().e8_rows
}

/// The unitary factors `GU_6 × GU_3 × GU_2` and the exponent `k` of the bound
/// `5^{ka}` each must respect.
pub const E8_UNITARY_FACTORS: [(u64, u64); 3] = [(6, 4), (3, 2), (2, 2)];

/// Order of `−q` modulo 5 when `q ≡ 1 (mod 5)`.
const E8_UNITARY_E: u64 = 2;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct E8SeriesBound {
    pub a: u64,
    /// `|E_5(GU_n(q), 1)|` per factor, in the order of [`E8_UNITARY_FACTORS`].
    #[serde(with = "nat_vec_serde")]
    pub factor_counts: Vec<Nat>,
    pub factors_within_bounds: bool,
    /// Product of the factor counts, compared with `5^{8a}`.
    #[serde(with = "crate::combinatorics::nat_serde")]
    pub product: Nat,
    pub product_within_bound: bool,
    /// `5^{8a} / 5^{3a}` against the defect order of the abelian tabulated row.
    #[serde(with = "crate::combinatorics::nat_serde")]
    pub quotient: Nat,
    #[serde(with = "crate::combinatorics::nat_serde")]
    pub defect_order: Nat,
    pub holds: bool,
}

mod nat_vec_serde {
    use crate::combinatorics::Nat;
    use serde::{de::Error as _, Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &[Nat], s: S) -> Result<S::Ok, S::Error> {
        v.iter().map(|n| n.to_string()).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Nat>, D::Error> {
        Vec::<String>::deserialize(d)?
            .iter()
            .map(|t| t.parse().map_err(D::Error::custom))
            .collect()
    }
}

pub fn e8_series_bound(a: u64) -> Result<E8SeriesBound> {
    e8_series_bound_in(e8_isolated_rows(), a)
}

/// [`e8_series_bound`] against a given copy of the isolated-block table.
pub fn e8_series_bound_in(rows: &[E8IsolatedRow], a: u64) -> Result<E8SeriesBound> {
    if a == 0 {
        return Err(Error::InvalidParameter("a must be positive".into()));
    }
    let mut factor_counts = Vec::new();
    let mut factors_within_bounds = true;
    let mut product = Nat::from(1u8);
    for (n, k) in E8_UNITARY_FACTORS {
        let count = el_series_total(SeriesKind::Unitary, n, E8_UNITARY_E, a, 5)?;
        factors_within_bounds &= count <= nat_pow(5, k * a);
        product *= &count;
        factor_counts.push(count);
    }
    let product_within_bound = product <= nat_pow(5, 8 * a);
    let quotient = nat_pow(5, 8 * a) / nat_pow(5, 3 * a);
    let row = rows
        .iter()
        .find(|r| r.case_number.is_none() && r.defect_coeff == 5)
        .ok_or_else(|| Error::UnknownLabel("unnumbered 5^{5a} row".into()))?;
    let defect_order = e8_defect_order(row, a);
    let holds = factors_within_bounds && product_within_bound && quotient <= defect_order;
    Ok(E8SeriesBound {
        a,
        factor_counts,
        factors_within_bounds,
        product,
        product_within_bound,
        quotient,
        defect_order,
        holds,
    })
}

pub fn e8_series_bound_check(a: u64) -> Result<bool> {
    Ok(e8_series_bound(a)?.holds)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootSystemDatum {
    pub label: String,
    pub rank: u64,
    pub positive_roots: u64,
}

impl RootSystemDatum {
    pub fn new(label: impl Into<String>, rank: u64, positive_roots: u64) -> Result<Self> {
        if rank == 0 || positive_roots < rank {
            return Err(Error::InvalidParameter(format!(
                "need N ≥ r ≥ 1, got N = {positive_roots}, r = {rank}"
            )));
        }
        Ok(RootSystemDatum {
            label: label.into(),
            rank,
            positive_roots,
        })
    }
}

/// Simple types up to rank 8.
pub fn root_system_data() -> Vec<RootSystemDatum> {
    let mut out = Vec::new();
    let mut push = |label: String, r: u64, n: u64| out.push(RootSystemDatum::new(label, r, n).unwrap());
    for r in 1..=8 {
        push(format!("A{r}"), r, r * (r + 1) / 2);
    }
    for r in 2..=8 {
        push(format!("B{r}"), r, r * r);
    }
    for r in 3..=8 {
        push(format!("C{r}"), r, r * r);
    }
    for r in 4..=8 {
        push(format!("D{r}"), r, r * (r - 1));
    }
    push("G2".into(), 2, 6);
    push("F4".into(), 4, 24);
    push("E6".into(), 6, 36);
    push("E7".into(), 7, 63);
    push("E8".into(), 8, 120);
    out
}

pub fn root_system(label: &str) -> Result<RootSystemDatum> {
    root_system_data()
        .into_iter()
        .find(|d| d.label == label)
        .ok_or_else(|| Error::UnknownLabel(label.to_string()))
}

/// `q^{N−r} > 27.2`, i.e. `5·q^{N−r} > 136`.
pub fn fg_margin(datum: &RootSystemDatum, q: u64) -> bool {
    nat_pow(q, datum.positive_roots - datum.rank) * 5u8 > Nat::from(136u8)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(v: u64) -> Nat {
        Nat::from(v)
    }

    #[test]
    fn builtin_tables_load() {
        let data = ExceptionalData::builtin();
        assert_eq!(data.unipotent.entries.len(), 15);
        assert_eq!(data.class_tables.len(), 3);
        assert_eq!(data.e8_rows.len(), 15);
        assert_eq!(unipotent_count("C3").unwrap(), n(12));
        assert_eq!(unipotent_count("2E6").unwrap(), n(30));
        assert_eq!(unipotent_count("G2"), Err(Error::UnknownLabel("G2".into())));
    }

    #[test]
    fn multiplicity_counts_twice() {
        let table = ClassTable::parse(
            "#! group = X\n#! ell = 3\ncentralizer\torder\te_count\tclass_size\tmultiplicity\n\
             X\t1\t5\t1\t1\nY\t3\t2\t4\t2\n",
        )
        .unwrap();
        let check = average_check(&table);
        assert_eq!((check.sum_e, check.sum_sizes), (n(9), n(9)));
        assert!(!check.holds);
    }

    #[test]
    fn bad_rows_are_named() {
        let text = "#! group = X\n#! ell = 3\ncentralizer\torder\te_count\tclass_size\tmultiplicity\n\
                    X\t1\t5\t1\t1\nB3(q)\t3\t0\t4\t1\n";
        match ClassTable::parse(text) {
            Err(Error::Parse { line, message }) => {
                assert_eq!(line, 5);
                assert!(message.contains("B3(q)"));
            }
            other => panic!("unexpected {other:?}"),
        }
        let no_identity = "#! group = X\n#! ell = 3\ncentralizer\torder\te_count\tclass_size\tmultiplicity\n\
                           Y\t3\t2\t4\t1\n";
        assert!(ClassTable::parse(no_identity).is_err());
    }

    #[test]
    fn identity_row_must_match_unipotent_count() {
        let tampered = CLASS_TABLE_TEXTS[0].replace("F4(q)\t1\t37", "F4(q)\t1\t36");
        let classes = vec![tampered];
        let err = ExceptionalData::from_texts(TABLE1_TEXT, &classes, E8_TEXT).unwrap_err();
        assert!(err.to_string().contains("F4(q)"));
    }

    #[test]
    fn e8_rejects_unknown_defect_shape() {
        let text = "case\tcentralizer\tlevi\tcuspidal\tcoeff\tconst\n1\tD8(q)\tempty\t1\t6\t1\n";
        assert!(parse_e8_table(text).is_err());
    }

    #[test]
    fn defect_order_increases_with_a() {
        for row in e8_isolated_rows() {
            assert!(e8_defect_order(row, 2) > e8_defect_order(row, 1));
        }
    }

    #[test]
    fn root_data() {
        let data = root_system_data();
        assert!(data.iter().all(|d| d.positive_roots >= d.rank));
        assert_eq!(root_system("E8").unwrap().positive_roots, 120);
        assert!(RootSystemDatum::new("bad", 3, 2).is_err());
    }
}
