//! Subcommands behind the `kbound` binary. Each takes its options plus an
//! output stream and returns the process exit code.

mod checks;
mod report;
mod spec;

use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

pub use checks::{bound_checks, exceptional_checks, oracle_checks, CheckOutcome, OracleRequest};
pub use report::{CensusReport, ReportFormat, ReportMetadata, ReportRow, ERROR_VERDICT};
pub use spec::{parse_int_list, SweepSpec, MAX_LIST_LEN};

use crate::blocks::{sweep, SweepRow};
use crate::error::{Error, Result};
use crate::exceptional::ExceptionalData;

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_FAILURE: u8 = 2;

#[derive(Debug, Clone, Default)]
pub struct CensusOptions {
    /// Overrides the spec's `format`.
    pub format: Option<ReportFormat>,
    /// Overrides the spec's `out`; `None` on both writes to the stream.
    pub out: Option<PathBuf>,
    /// Worker threads; `0` uses every core.
    pub jobs: usize,
    pub strip_timestamp: bool,
}

/// Exit code for a finished sweep: failures of the inequality and
/// disagreements between the two counting routes are verification failures,
/// other rejected rows are spec errors.
pub fn sweep_exit_code(rows: &[SweepRow]) -> u8 {
    let mut code = EXIT_OK;
    for row in rows {
        match &row.outcome {
            Ok(inv) if inv.verdict.is_failure() => return EXIT_FAILURE,
            Err(Error::CrossCheckMismatch { .. }) => return EXIT_FAILURE,
            Err(_) => code = EXIT_USAGE,
            Ok(_) => {}
        }
    }
    code
}

pub fn build_census(spec: &SweepSpec, opts: &CensusOptions) -> Result<(CensusReport, u8)> {
    let queries = spec.queries()?;
    let rows = sweep(&queries, opts.jobs);
    let code = sweep_exit_code(&rows);
    let report = CensusReport {
        metadata: ReportMetadata::new(spec.hash(), !opts.strip_timestamp),
        rows: rows.iter().map(ReportRow::from_sweep).collect(),
    };
    Ok((report, code))
}

pub fn cmd_census(spec: &SweepSpec, opts: &CensusOptions, out: &mut dyn Write) -> u8 {
    let (report, mut code) = match build_census(spec, opts) {
        Ok(built) => built,
        Err(e) => {
            let _ = writeln!(out, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let format = opts.format.or(spec.format).unwrap_or_default();
    let text = match report.render(format) {
        Ok(text) => text,
        Err(e) => {
            let _ = writeln!(out, "error: {e}");
            return EXIT_USAGE;
        }
    };
    match opts.out.as_ref().or(spec.out.as_ref()) {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                let _ = writeln!(out, "error: cannot write {}: {e}", path.display());
                return EXIT_USAGE;
            }
        }
        None => {
            let _ = out.write_all(text.as_bytes());
        }
    }
    let rejected = report.rows.iter().filter(|r| r.verdict == ERROR_VERDICT).count();
    if rejected > 0 {
        let _ = writeln!(out, "{rejected} row(s) rejected their parameters");
    }
    if code == EXIT_FAILURE {
        let _ = writeln!(out, "verification failure in census");
    }
    if code == EXIT_OK && report.rows.is_empty() {
        code = EXIT_USAGE;
        let _ = writeln!(out, "error: spec produced no rows");
    }
    code
}

fn print_outcomes(outcomes: &[CheckOutcome], out: &mut dyn Write) -> u8 {
    let width = outcomes.iter().map(|o| o.name.len()).max().unwrap_or(0);
    let mut failed = 0;
    for o in outcomes {
        let status = if o.passed { "PASS" } else { "FAIL" };
        let _ = writeln!(out, "{status}  {:width$}  {}", o.name, o.detail);
        failed += (!o.passed) as usize;
    }
    let _ = writeln!(out, "{} checks, {} failed", outcomes.len(), failed);
    if failed == 0 {
        EXIT_OK
    } else {
        EXIT_FAILURE
    }
}

#[derive(Debug, Clone, Default)]
pub struct VerifyOptions {
    /// Run only the check with this name, e.g. `F4-l2`.
    pub table: Option<String>,
    /// Directory with replacement data files.
    pub data_dir: Option<PathBuf>,
}

pub fn cmd_verify_exceptional(opts: &VerifyOptions, out: &mut dyn Write) -> u8 {
    let loaded;
    let data = match &opts.data_dir {
        Some(dir) => match ExceptionalData::load_dir(dir) {
            Ok(d) => {
                loaded = d;
                &loaded
            }
            Err(e) => {
                let _ = writeln!(out, "FAIL  data  {e}");
                return EXIT_FAILURE;
            }
        },
        None => ExceptionalData::builtin(),
    };
    let mut outcomes = exceptional_checks(data);
    if let Some(name) = &opts.table {
        outcomes.retain(|o| o.name.eq_ignore_ascii_case(name));
        if outcomes.is_empty() {
            let names: Vec<String> = exceptional_checks(data).into_iter().map(|o| o.name).collect();
            let _ = writeln!(out, "error: no check named `{name}` (have {})", names.join(", "));
            return EXIT_USAGE;
        }
    }
    print_outcomes(&outcomes, out)
}

pub fn cmd_oracle(requests: &[OracleRequest], out: &mut dyn Write) -> u8 {
    let requests = if requests.is_empty() {
        OracleRequest::defaults()
    } else {
        requests.to_vec()
    };
    let mut outcomes = Vec::new();
    for request in &requests {
        let start = Instant::now();
        match oracle_checks(request) {
            Ok(mut outcome) => {
                outcome.detail = format!("{} ({} ms)", outcome.detail, start.elapsed().as_millis());
                outcomes.push(outcome);
            }
            Err(e) => {
                let _ = writeln!(out, "error: {} {}: {e}", request.kind(), request.params());
                return EXIT_USAGE;
            }
        }
    }
    print_outcomes(&outcomes, out)
}

#[derive(Debug, Clone)]
pub struct BoundsOptions {
    pub max_w: u64,
    pub max_n: u64,
}

impl Default for BoundsOptions {
    fn default() -> Self {
        BoundsOptions {
            max_w: 5000,
            max_n: 20,
        }
    }
}

pub fn cmd_bounds(opts: &BoundsOptions, out: &mut dyn Write) -> u8 {
    match bound_checks(opts.max_w, opts.max_n) {
        Ok(outcomes) => print_outcomes(&outcomes, out),
        Err(e) => {
            let _ = writeln!(out, "error: {e}");
            EXIT_USAGE
        }
    }
}
