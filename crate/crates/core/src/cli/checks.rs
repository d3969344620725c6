use serde::Serialize;

use crate::blocks::{bound_thm_slnproof, forced_m, k_principal_slrange, BlockQuery, EllProfile};
use crate::combinatorics::{
    irr_count_g2d_2_n, multipartition_count, nat_pow, p_ell, p_ell_table, Nat,
};
use crate::error::{Error, Result};
use crate::exceptional::{
    average_check, e8_defect_order, e8_series_bound_in, fg_margin, root_system,
    root_system_data, ExceptionalData, UNIPOTENT_TABLE_LEN,
};
use crate::family::GroupFamily;
use crate::lseries::build_inventory;
use crate::oracle::{
    census_matches_weight_vectors, gl_ell_class_census, gmpn_class_count,
    multipartition_enumerate, sl_ell_class_census,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckOutcome {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        CheckOutcome {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }
}

/// Average checks on every class table, the isolated-block checks at
/// `a = 1, 2` and the defining-characteristic margin.
pub fn exceptional_checks(data: &ExceptionalData) -> Vec<CheckOutcome> {
    let mut out = Vec::new();
    let entries = data.unipotent.entries.len();
    out.push(CheckOutcome::new(
        "table1",
        entries == UNIPOTENT_TABLE_LEN,
        format!("{entries} entries"),
    ));
    for table in &data.class_tables {
        let check = average_check(table);
        let mut detail = format!("sum_e={} sum_sizes={}", check.sum_e, check.sum_sizes);
        if !check.holds {
            let heavy: Vec<&str> = table
                .rows
                .iter()
                .filter(|r| r.e_count >= r.class_size)
                .map(|r| r.centralizer_label.as_str())
                .collect();
            detail.push_str(&format!("; rows with e_count ≥ class_size: {}", heavy.join(", ")));
        }
        out.push(CheckOutcome::new(
            format!("{}-l{}", table.group_label, table.ell),
            check.holds,
            detail,
        ));
    }
    let increasing = data
        .e8_rows
        .iter()
        .all(|r| e8_defect_order(r, 2) > e8_defect_order(r, 1));
    out.push(CheckOutcome::new(
        "E8-defect",
        increasing,
        format!("{} rows", data.e8_rows.len()),
    ));
    for a in [1, 2] {
        let outcome = match e8_series_bound_in(&data.e8_rows, a) {
            Ok(b) => CheckOutcome::new(
                format!("E8-bound-a{a}"),
                b.holds,
                format!(
                    "factors {} product={} ≤ 5^{} quotient={} ≤ |D|={}",
                    b.factor_counts
                        .iter()
                        .map(Nat::to_string)
                        .collect::<Vec<_>>()
                        .join("·"),
                    b.product,
                    8 * a,
                    b.quotient,
                    b.defect_order
                ),
            ),
            Err(e) => CheckOutcome::new(format!("E8-bound-a{a}"), false, e.to_string()),
        };
        out.push(outcome);
    }
    out.push(fg_margin_check());
    out
}

fn fg_margin_check() -> CheckOutcome {
    let mut failures = Vec::new();
    for datum in root_system_data() {
        if datum.positive_roots - datum.rank >= 5 && !fg_margin(&datum, 2) {
            failures.push(format!("{} at q=2", datum.label));
        }
    }
    let b2 = root_system("B2").expect("B2 is stored");
    for q in 2..=10 {
        if fg_margin(&b2, q) != (q >= 6) {
            failures.push(format!("B2 at q={q}"));
        }
    }
    let a1 = root_system("A1").expect("A1 is stored");
    if (2..=10).any(|q| fg_margin(&a1, q)) {
        failures.push("A1".into());
    }
    let passed = failures.is_empty();
    let detail = if passed {
        "N−r ≥ 5 at q=2; B2 cutoff q ≥ 6; A1 never".to_string()
    } else {
        format!("unexpected: {}", failures.join(", "))
    };
    CheckOutcome::new("fg-margin", passed, detail)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleRequest {
    Gl { n: u32, q: u32, ell: u64 },
    Sl { n: u32, q: u32, ell: u64 },
    Gmpn { m: u64, p: u64, n: u64 },
    Multipartition { s: u64, t: u64 },
}

impl OracleRequest {
    pub fn defaults() -> Vec<OracleRequest> {
        vec![
            OracleRequest::Gl { n: 2, q: 4, ell: 3 },
            OracleRequest::Gl { n: 2, q: 2, ell: 3 },
            OracleRequest::Gl { n: 3, q: 4, ell: 3 },
            OracleRequest::Sl { n: 2, q: 4, ell: 3 },
            OracleRequest::Gmpn { m: 2, p: 2, n: 2 },
            OracleRequest::Gmpn { m: 2, p: 1, n: 2 },
            OracleRequest::Gmpn { m: 4, p: 1, n: 2 },
            OracleRequest::Gmpn { m: 4, p: 2, n: 3 },
            OracleRequest::Multipartition { s: 3, t: 2 },
            OracleRequest::Multipartition { s: 8, t: 12 },
        ]
    }

    pub fn kind(&self) -> &'static str {
        match self {
            OracleRequest::Gl { .. } => "gl",
            OracleRequest::Sl { .. } => "sl",
            OracleRequest::Gmpn { .. } => "gmpn",
            OracleRequest::Multipartition { .. } => "multipartition",
        }
    }

    pub fn params(&self) -> String {
        match *self {
            OracleRequest::Gl { n, q, ell } | OracleRequest::Sl { n, q, ell } => {
                format!("{n},{q},{ell}")
            }
            OracleRequest::Gmpn { m, p, n } => format!("{m},{p},{n}"),
            OracleRequest::Multipartition { s, t } => format!("{s},{t}"),
        }
    }
}

/// Runs one oracle comparison. Parameter and cap errors are returned as `Err`.
pub fn oracle_checks(request: &OracleRequest) -> Result<CheckOutcome> {
    let name = format!("{} {}", request.kind(), request.params());
    match *request {
        OracleRequest::Gl { n, q, ell } => {
            let census = gl_ell_class_census(n, q, ell)?;
            let profile = crate::blocks::ell_profile(q as u64, ell)?;
            let inventory = build_inventory(
                GroupFamily::Gl,
                ell,
                profile.d,
                profile.a,
                n as u64 / profile.d,
            )?;
            let vectors =
                crate::lseries::enumerate_weight_vectors(&inventory, n as u64 / profile.d).count();
            let matched = census_matches_weight_vectors(&census, &inventory);
            Ok(CheckOutcome::new(
                name,
                matched,
                format!("classes={} weight_vectors={vectors}", census.classes.len()),
            ))
        }
        OracleRequest::Sl { n, q, ell } => {
            let census = sl_ell_class_census(n, q, ell)?;
            let total: u64 = census.classes.iter().map(|c| c.class_size).sum();
            let consistent = total == census.element_count
                && census
                    .classes
                    .iter()
                    .all(|c| c.class_size * c.centralizer_order == census.order);
            Ok(CheckOutcome::new(
                name,
                consistent,
                format!("classes={} elements={}", census.classes.len(), census.element_count),
            ))
        }
        OracleRequest::Gmpn { m, p, n } => {
            let count = gmpn_class_count(m, p, n)?;
            let formula = if p == 1 {
                Some(multipartition_count(m, n))
            } else if p == 2 && m % 2 == 0 {
                Some(irr_count_g2d_2_n(m / 2, n))
            } else {
                None
            };
            Ok(match formula {
                Some(f) => CheckOutcome::new(
                    name,
                    f == Nat::from(count),
                    format!("classes={count} formula={f}"),
                ),
                None => CheckOutcome::new(name, true, format!("classes={count} (no formula)")),
            })
        }
        OracleRequest::Multipartition { s, t } => {
            let listed = multipartition_enumerate(s, t)?;
            let counted = multipartition_count(s, t);
            Ok(CheckOutcome::new(
                name,
                listed == counted,
                format!("listed={listed} recurrence={counted}"),
            ))
        }
    }
}

fn floor_log(ell: u64, w: u64) -> u64 {
    let mut u = 0;
    let mut power = ell;
    while power <= w {
        u += 1;
        power = match power.checked_mul(ell) {
            Some(p) => p,
            None => break,
        };
    }
    u
}

/// The combinatorial inequalities: the `p_ℓ` bound, `p_ℓ(2ℓ) = 3`, the
/// multipartition convolution, and the explicit `SL_n` estimates.
pub fn bound_checks(max_w: u64, max_n: u64) -> Result<Vec<CheckOutcome>> {
    if max_w == 0 || max_n == 0 {
        return Err(Error::InvalidParameter("bounds need positive limits".into()));
    }
    let mut out = Vec::new();

    let mut first_bad = None;
    for ell in [2u64, 3, 5] {
        let table = p_ell_table(ell, max_w);
        for w in 1..=max_w {
            let u = floor_log(ell, w);
            if table[w as usize] > nat_pow(ell, u * (u + 1) / 2) {
                first_bad.get_or_insert((ell, w));
            }
        }
    }
    out.push(CheckOutcome::new(
        "p-ell-bound",
        first_bad.is_none(),
        match first_bad {
            None => format!("ℓ ∈ {{2,3,5}}, 1 ≤ w ≤ {max_w}"),
            Some((ell, w)) => format!("fails at ℓ={ell}, w={w}"),
        },
    ));

    let twice: Vec<String> = [3u64, 5, 7]
        .iter()
        .map(|&ell| format!("p_{ell}({})={}", 2 * ell, p_ell(ell, 2 * ell)))
        .collect();
    let ok = [3u64, 5, 7].iter().all(|&ell| p_ell(ell, 2 * ell) == Nat::from(3u8));
    out.push(CheckOutcome::new("p-ell-2ell", ok, twice.join(" ")));

    let mut conv_ok = true;
    for s in 0..=6 {
        for s2 in 0..=6 {
            for n in 0..=40 {
                let sum: Nat = (0..=n)
                    .map(|t| multipartition_count(s, t) * multipartition_count(s2, n - t))
                    .sum();
                conv_ok &= sum == multipartition_count(s + s2, n);
            }
        }
    }
    out.push(CheckOutcome::new("convolution", conv_ok, "s, s' ≤ 6, n ≤ 40"));

    let mut dominated = true;
    let mut chain = true;
    let mut first_gap = None;
    for ell in [3u64, 5] {
        for a in [1u64, 2] {
            let profile = EllProfile::new(ell, 1, a)?;
            for n in 1..=max_n {
                let q = BlockQuery::principal(GroupFamily::SlRange, profile, n, a);
                let exact = k_principal_slrange(&q)?;
                let bound = bound_thm_slnproof(n, ell, a, forced_m(n, ell, a))?;
                if bound < exact {
                    dominated = false;
                    first_gap.get_or_insert((ell, a, n));
                }
                if n == ell {
                    let middle = nat_pow(ell, a * ell - a) + ell * ell;
                    chain &= exact <= middle && middle < nat_pow(ell, a * ell - a + 1);
                }
            }
        }
    }
    out.push(CheckOutcome::new(
        "sl-bound-dominance",
        dominated,
        match first_gap {
            None => format!("n ≤ {max_n}, ℓ ∈ {{3,5}}, a ≤ 2"),
            Some((ell, a, n)) => format!("bound below exact at ℓ={ell}, a={a}, n={n}"),
        },
    ));
    out.push(CheckOutcome::new(
        "sl-n-equals-ell",
        chain,
        "k(B) ≤ ℓ^{aℓ−a} + ℓ² < ℓ^{aℓ−a+1}",
    ));
    Ok(out)
}
