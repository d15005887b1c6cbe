//! Command-line interface.

use std::io::Write;

use clap::{Parser, ValueEnum};
use flag_bochner_core::expansion::{DEFAULT_AUDIT_DEGREE, DEFAULT_DEGREE};

use crate::numeric::{run_numeric_check, CheckConfig, DEFAULT_RADIUS};
use crate::report::{render_case_table, run_case};
use crate::request::{CaseRequest, SweepRequest};
use crate::sweep::{render_sweep_table, run_sweep};
use crate::Failure;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    Table,
    Json,
}

/// Expands invariant Kähler potentials on flag manifolds of classical groups
/// and decides when the standard chart gives Bochner coordinates.
///
/// Groups are written FAMILY:RANK with FAMILY one of SU, Sp, SOeven, SOodd;
/// the rank d stands for SU(d), Sp(d), SO(2d) and SO(2d+1).
#[derive(Debug, Parser)]
#[command(name = "flag-bochner", version)]
pub struct Args {
    /// Group of a single case, e.g. SU:5 or SOeven:4.
    #[arg(long, required_unless_present = "sweep")]
    pub group: Option<String>,
    /// Black nodes (1-based positions), comma separated.
    #[arg(long, required_unless_present = "sweep")]
    pub black: Option<String>,
    /// `symbolic`, or one positive rational per black node.
    #[arg(long, default_value = "symbolic", allow_hyphen_values = true)]
    pub coeffs: String,
    /// Truncation degree of the expansion.
    #[arg(long, default_value_t = DEFAULT_DEGREE)]
    pub max_degree: u32,
    /// Also classify at this higher degree. Without a value, uses 6.
    #[arg(long, num_args = 0..=1, default_missing_value = DEFAULT_AUDIT_DEGREE_STR)]
    pub audit_degree: Option<u32>,
    #[arg(long, value_enum, default_value_t = Emit::Table)]
    pub emit: Emit,
    /// Classify every painting up to --max-rank and --max-black.
    #[arg(long, conflicts_with_all = ["group", "black", "numeric_check"])]
    pub sweep: bool,
    #[arg(long, default_value_t = 6)]
    pub max_rank: usize,
    #[arg(long, default_value_t = 3)]
    pub max_black: usize,
    /// Families for --sweep, comma separated, or `all`.
    #[arg(long, default_value = "all")]
    pub families: String,
    /// Compare the expansion against the exact potential numerically.
    /// Needs numeric --coeffs. The comparison uses the audit degree (6 unless
    /// given) or --max-degree, whichever is larger.
    #[arg(long)]
    pub numeric_check: bool,
    #[arg(long, default_value_t = 10)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Largest coordinate modulus of the sampled points.
    #[arg(long, default_value_t = DEFAULT_RADIUS)]
    pub radius: f64,
}

const DEFAULT_AUDIT_DEGREE_STR: &str = "6";
const _: () = assert!(DEFAULT_AUDIT_DEGREE == 6);

/// Runs the command and writes its output; returns the process exit code.
pub fn run(args: &Args, out: &mut impl Write) -> Result<i32, Failure> {
    if args.sweep {
        let request = SweepRequest {
            families: SweepRequest::parse_families(&args.families)?,
            max_rank: args.max_rank,
            max_black: args.max_black,
            degree: args.max_degree,
        };
        let report = run_sweep(&request)?;
        match args.emit {
            Emit::Table => out.write_all(render_sweep_table(&report).as_bytes())?,
            Emit::Json => writeln!(out, "{}", serde_json::to_string_pretty(&report).expect("serializable"))?,
        }
        return Ok(0);
    }
    let request = CaseRequest::parse(
        args.group.as_deref().expect("clap requires --group"),
        args.black.as_deref().expect("clap requires --black"),
        &args.coeffs,
        args.max_degree,
        args.audit_degree,
    )?;
    let mut report = run_case(&request)?;
    let mut code = 0;
    if args.numeric_check {
        let Some(coeffs) = request.numeric_coeffs() else {
            return Err(Failure::Validation("--numeric-check needs numeric --coeffs".into()));
        };
        if !(args.radius > 0.0 && args.radius < 1.0) {
            return Err(Failure::Validation("--radius must lie in (0, 1)".into()));
        }
        let config = CheckConfig {
            samples: args.samples,
            seed: args.seed,
            radius: args.radius,
            degree: request.audit_degree.unwrap_or(DEFAULT_AUDIT_DEGREE).max(request.max_degree),
        };
        let check = run_numeric_check(&request.diagram, coeffs, &config)?;
        if !check.passed() {
            code = 3;
        }
        report.numeric_check = Some(check);
    }
    match args.emit {
        Emit::Table => out.write_all(render_case_table(&report).as_bytes())?,
        Emit::Json => writeln!(out, "{}", serde_json::to_string_pretty(&report).expect("serializable"))?,
    }
    if code == 3 {
        let check = report.numeric_check.as_ref().expect("set above");
        let worst = check
            .worst_sample()
            .map_or(String::new(), |s| format!("; worst sample {:?} error {:.3e}", s.point, s.error));
        return Err(Failure::CheckFailed(format!(
            "Hessian error {:.3e}, positive definite {}{worst}",
            check.hessian_max_error, check.positive_definite
        )));
    }
    Ok(code)
}
