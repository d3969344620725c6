use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use kbound::cli::{
    cmd_bounds, cmd_census, cmd_oracle, cmd_verify_exceptional, parse_int_list, BoundsOptions,
    CensusOptions, OracleRequest, ReportFormat, SweepSpec, VerifyOptions, EXIT_USAGE,
};

#[derive(Parser)]
#[command(name = "kbound", version, about = "Character counts and defect groups of unipotent blocks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate every block of a sweep spec and write a report.
    Census {
        /// Sweep specification file.
        spec: PathBuf,
        #[arg(long, value_parser = parse_format)]
        format: Option<ReportFormat>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Worker threads (0 = all cores).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Leave the timestamp out so reruns are byte-identical.
        #[arg(long)]
        strip_timestamp: bool,
    },
    /// Check the tabulated exceptional-group data.
    VerifyExceptional {
        /// Only run this check, e.g. `F4-l2` or `E8-bound-a1`.
        #[arg(long)]
        table: Option<String>,
        /// Directory holding replacement data files.
        #[arg(long)]
        data: Option<PathBuf>,
    },
    /// Compare counting formulas with brute-force enumeration.
    Oracle {
        /// `n,q,ell`: ℓ-element classes of GL_n(q) against weight vectors.
        #[arg(long, value_name = "N,Q,ELL")]
        gl: Vec<String>,
        /// `n,q,ell`: ℓ-element classes of SL_n(q).
        #[arg(long, value_name = "N,Q,ELL")]
        sl: Vec<String>,
        /// `m,p,n`: conjugacy classes of G(m,p,n).
        #[arg(long, value_name = "M,P,N")]
        gmpn: Vec<String>,
        /// `s,t`: multipartitions by listing.
        #[arg(long, value_name = "S,T")]
        multipartition: Vec<String>,
    },
    /// Run the combinatorial bound sweeps.
    Bounds {
        #[arg(long, default_value_t = 5000)]
        max_w: u64,
        #[arg(long, default_value_t = 20)]
        max_n: u64,
    },
}

fn parse_format(s: &str) -> Result<ReportFormat, String> {
    s.parse().map_err(|e: kbound::Error| e.to_string())
}

fn triple(raw: &str) -> Result<[u64; 3], String> {
    let values = parse_int_list(raw, 0).map_err(|e| e.to_string())?;
    values
        .try_into()
        .map_err(|_| format!("`{raw}` needs exactly three integers"))
}

fn oracle_requests(
    gl: &[String],
    sl: &[String],
    gmpn: &[String],
    multipartition: &[String],
) -> Result<Vec<OracleRequest>, String> {
    let mut out = Vec::new();
    let small = |v: u64| u32::try_from(v).map_err(|_| format!("{v} is too large"));
    for raw in gl {
        let [n, q, ell] = triple(raw)?;
        out.push(OracleRequest::Gl { n: small(n)?, q: small(q)?, ell });
    }
    for raw in sl {
        let [n, q, ell] = triple(raw)?;
        out.push(OracleRequest::Sl { n: small(n)?, q: small(q)?, ell });
    }
    for raw in gmpn {
        let [m, p, n] = triple(raw)?;
        out.push(OracleRequest::Gmpn { m, p, n });
    }
    for raw in multipartition {
        let values = parse_int_list(raw, 0).map_err(|e| e.to_string())?;
        let [s, t]: [u64; 2] = values
            .try_into()
            .map_err(|_| format!("`{raw}` needs exactly two integers"))?;
        out.push(OracleRequest::Multipartition { s, t });
    }
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let code = match cli.command {
        Command::Census {
            spec,
            format,
            out: path,
            jobs,
            strip_timestamp,
        } => match SweepSpec::load(&spec) {
            Ok(parsed) => {
                let opts = CensusOptions {
                    format,
                    out: path,
                    jobs,
                    strip_timestamp,
                };
                cmd_census(&parsed, &opts, &mut out)
            }
            Err(e) => {
                let _ = writeln!(out, "error: {}: {e}", spec.display());
                EXIT_USAGE
            }
        },
        Command::VerifyExceptional { table, data } => {
            cmd_verify_exceptional(&VerifyOptions { table, data_dir: data }, &mut out)
        }
        Command::Oracle {
            gl,
            sl,
            gmpn,
            multipartition,
        } => match oracle_requests(&gl, &sl, &gmpn, &multipartition) {
            Ok(requests) => cmd_oracle(&requests, &mut out),
            Err(e) => {
                let _ = writeln!(out, "error: {e}");
                EXIT_USAGE
            }
        },
        Command::Bounds { max_w, max_n } => cmd_bounds(&BoundsOptions { max_w, max_n }, &mut out),
    };
    let _ = out.flush();
    ExitCode::from(code)
}
