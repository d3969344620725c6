use rayon::prelude::*;

use crate::combinatorics::presize_shared;
use crate::error::{Error, Result};
use crate::family::GroupFamily;
use crate::lseries::block_count_proof_path;

use super::{evaluate, BlockInvariants, BlockQuery, Exactness};

/// One evaluated sweep row. Errors are kept per row so a sweep never aborts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepRow {
    pub query: BlockQuery,
    pub outcome: Result<BlockInvariants>,
    /// The closed form was confirmed by the class-by-class count.
    pub two_path_checked: bool,
}

fn supports_two_path(family: GroupFamily) -> bool {
    matches!(
        family,
        GroupFamily::Gl
            | GroupFamily::Gu
            | GroupFamily::Sp
            | GroupFamily::SoOdd
            | GroupFamily::GoEvenPlus
            | GroupFamily::GoEvenMinus
    )
}

/// Recomputes an exact `k(B)` along the slot calculus. `Ok(false)` when the
/// family has no second route.
pub fn cross_check(query: &BlockQuery, invariants: &BlockInvariants) -> Result<bool> {
    if !supports_two_path(query.family) || invariants.exactness != Exactness::Exact {
        return Ok(false);
    }
    let p = &query.profile;
    let proof = block_count_proof_path(query.family, p.ell, p.d, p.a, query.w)?;
    if proof != invariants.k_b {
        return Err(Error::CrossCheckMismatch {
            closed_form: invariants.k_b.to_string(),
            proof_path: proof.to_string(),
        });
    }
    Ok(true)
}

pub fn evaluate_row(query: &BlockQuery) -> SweepRow {
    let outcome = evaluate(query);
    let (outcome, two_path_checked) = match outcome {
        Ok(inv) => match cross_check(query, &inv) {
            Ok(checked) => (Ok(inv), checked),
            Err(e) => (Err(e), false),
        },
        Err(e) => (Err(e), false),
    };
    SweepRow {
        query: query.clone(),
        outcome,
        two_path_checked,
    }
}

/// Evaluates every query, in parallel over `jobs` threads (`0` = all cores).
/// Rows come back in query order.
pub fn sweep(queries: &[BlockQuery], jobs: usize) -> Vec<SweepRow> {
    if queries.is_empty() {
        return Vec::new();
    }
    let max_t = queries.iter().map(|q| q.w.max(q.n)).max().unwrap_or(0);
    let max_s = queries
        .iter()
        .filter(|q| q.profile.ell > 2 && q.profile.a < 8)
        .map(|q| q.profile.ell.saturating_pow(q.profile.a as u32) + q.profile.d)
        .max()
        .unwrap_or(0)
        .min(512);
    presize_shared(max_s, max_t);

    let run = || queries.par_iter().map(evaluate_row).collect::<Vec<_>>();
    match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(pool) => pool.install(run),
        Err(_) => queries.iter().map(evaluate_row).collect(),
    }
}
