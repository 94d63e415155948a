//! Command-line verification harness.
//!
//! Exit codes: 0 all checks pass, 1 a check failed, 2 invalid input,
//! 3 window-inconclusive (a truncation ladder did not stabilize).

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use liecheck::catalog::{catalog, lookup};
use liecheck::ce::KcBimodule;
use liecheck::checks::{self, builtin_bimodule, default_ladder, SuiteOptions};
use liecheck::io::{parse_algebra, parse_bimodule, parse_module};
use liecheck::lie::{center_basis, commutator_ideal, LieIdeal, LieModule};
use liecheck::report::{CheckReport, ReportDocument, Verdict};
use liecheck::scalar::{rat_int, Rat};
use liecheck::AlgRef;

#[derive(Parser)]
#[command(
    name = "liecheck",
    version,
    about = "Exact homological checks for small Lie algebras and their enveloping algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Built-in algebra catalog.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Structural checks on input documents.
    Check {
        #[command(subcommand)]
        action: CheckAction,
    },
    /// Theorem verification checks.
    Verify {
        #[command(subcommand)]
        action: VerifyAction,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    /// List the built-in algebras and their distinguished ideals.
    List,
}

#[derive(Subcommand)]
enum CheckAction {
    /// Validate antisymmetry and the Jacobi identity of an algebra file.
    Jacobi {
        /// Path to an algebra JSON document.
        #[arg(long)]
        input: PathBuf,
    },
}

#[derive(Args)]
struct CommonArgs {
    /// Algebra: `builtin:NAME` or `file:PATH`.
    #[arg(long)]
    algebra: String,
    /// Write the JSON report here.
    #[arg(long)]
    report: Option<PathBuf>,
    /// Seed for the random property samples recorded in reports.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct LadderArg {
    /// Cutoff ladder, e.g. `3,4,5,6`. Default depends on the dimension.
    #[arg(long)]
    ladder: Option<String>,
}

#[derive(Subcommand)]
enum VerifyAction {
    /// Unimodular character and dualizing automorphism shifts.
    Character {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Hochschild Poincare duality for a finite k-central bimodule.
    Poincare {
        #[command(flatten)]
        common: CommonArgs,
        /// Bimodule: `trivial`, `adjoint`, `dual-adjoint` or `file:PATH`.
        #[arg(long, default_value = "trivial")]
        bimodule: String,
    },
    /// Concentration of Ext against U(g) for a finite module.
    ExtFinite {
        #[command(flatten)]
        common: CommonArgs,
        /// Module: `trivial`, `adjoint` or `file:PATH`.
        #[arg(long, default_value = "trivial")]
        module: String,
        #[command(flatten)]
        ladder: LadderArg,
    },
    /// Concentration of Ext of a quotient envelope, with Hilbert check.
    ExtQuotient {
        #[command(flatten)]
        common: CommonArgs,
        /// Ideal: `commutator`, `center`, `full` or `span:label,..`.
        #[arg(long, default_value = "commutator")]
        ideal: String,
        #[command(flatten)]
        ladder: LadderArg,
    },
    /// Concentration of Hochschild cohomology with enveloping-square
    /// coefficients.
    HhSelf {
        #[command(flatten)]
        common: CommonArgs,
        #[command(flatten)]
        ladder: LadderArg,
        /// Allow algebras of dimension three and higher.
        #[arg(long)]
        force: bool,
    },
    /// The full deterministic suite over the catalog.
    All {
        /// Write the JSON report here.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Seed for the random property samples.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Worker threads for independent checks.
        #[arg(long, default_value_t = 4)]
        jobs: usize,
        /// Include wall-clock timings in the report (breaks byte-for-byte
        /// reproducibility between runs).
        #[arg(long)]
        timings: bool,
    },
}

fn fail_input(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn basis_vector(n: usize, i: usize) -> Vec<Rat> {
    let mut e = vec![rat_int(0); n];
    e[i] = rat_int(1);
    e
}

fn resolve_algebra(spec: &str) -> Result<(String, AlgRef<Rat>), String> {
    if let Some(name) = spec.strip_prefix("builtin:") {
        let entry = lookup(name).ok_or_else(|| format!("no builtin algebra named {name:?}"))?;
        return Ok((entry.name, entry.algebra));
    }
    if let Some(path) = spec.strip_prefix("file:") {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
        let (name, g) = parse_algebra(&text).map_err(|e| e.to_string())?;
        g.validate().map_err(|e| format!("{path}: {e}"))?;
        return Ok((name, g));
    }
    Err(format!(
        "algebra spec {spec:?} must start with builtin: or file:"
    ))
}

fn resolve_module(g: &AlgRef<Rat>, spec: &str) -> Result<(String, LieModule<Rat>), String> {
    match spec {
        "trivial" => Ok(("trivial".into(), LieModule::trivial(g))),
        "adjoint" => Ok(("adjoint".into(), LieModule::adjoint(g))),
        other => {
            let path = other.strip_prefix("file:").ok_or_else(|| {
                format!("module spec {other:?} must be trivial, adjoint or file:PATH")
            })?;
            let text = std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
            let m = parse_module(g, &text).map_err(|e| e.to_string())?;
            Ok((path.to_string(), m))
        }
    }
}

fn resolve_bimodule(g: &AlgRef<Rat>, spec: &str) -> Result<(String, KcBimodule<Rat>), String> {
    if let Some(b) = builtin_bimodule(g, spec) {
        return Ok((spec.to_string(), b));
    }
    let path = spec.strip_prefix("file:").ok_or_else(|| {
        format!("bimodule spec {spec:?} must be trivial, adjoint, dual-adjoint or file:PATH")
    })?;
    let text = std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
    let b = parse_bimodule(g, &text).map_err(|e| e.to_string())?;
    Ok((path.to_string(), b))
}

fn resolve_ideal(g: &AlgRef<Rat>, spec: &str) -> Result<(String, LieIdeal<Rat>), String> {
    match spec {
        "commutator" => Ok(("commutator".into(), commutator_ideal(g))),
        "center" => {
            let rows = center_basis(g);
            let ideal = LieIdeal::new(g, rows).map_err(|e| e.to_string())?;
            Ok(("center".into(), ideal))
        }
        "full" => {
            let rows = (0..g.dim()).map(|i| basis_vector(g.dim(), i)).collect();
            let ideal = LieIdeal::new(g, rows).map_err(|e| e.to_string())?;
            Ok(("full".into(), ideal))
        }
        other => {
            let labels = other.strip_prefix("span:").ok_or_else(|| {
                format!("ideal spec {other:?} must be commutator, center, full or span:...")
            })?;
            let rows = labels
                .split(',')
                .map(|label| {
                    let i = g
                        .label_index(label.trim())
                        .ok_or_else(|| format!("unknown basis label {label:?}"))?;
                    Ok(basis_vector(g.dim(), i))
                })
                .collect::<Result<Vec<_>, String>>()?;
            let ideal = LieIdeal::new(g, rows).map_err(|e| e.to_string())?;
            Ok((format!("span:{labels}"), ideal))
        }
    }
}

fn parse_ladder(spec: &Option<String>, dim: usize) -> Result<Vec<usize>, String> {
    let Some(s) = spec else {
        return Ok(default_ladder(dim));
    };
    let ladder: Vec<usize> = s
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|e| format!("bad ladder entry {p:?}: {e}"))
        })
        .collect::<Result<_, _>>()?;
    if ladder.is_empty() || ladder.windows(2).any(|w| w[0] >= w[1]) {
        return Err("ladder must be strictly increasing and nonempty".into());
    }
    Ok(ladder)
}

/// Emit one report: human line on stdout, JSON document if requested,
/// exit code from the verdict.
fn emit(report: CheckReport, seed: u64, report_path: &Option<PathBuf>) -> ExitCode {
    let code = match report.verdict {
        Verdict::Pass => 0u8,
        Verdict::Fail => 1,
        Verdict::InconclusiveWindow => 3,
    };
    println!("{}", report.human_line());
    let doc = ReportDocument::new(seed, vec![report]);
    if let Some(path) = report_path {
        if let Err(e) = std::fs::write(path, doc.to_json()) {
            return fail_input(format!("cannot write report: {e}"));
        }
    }
    ExitCode::from(code)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Catalog {
            action: CatalogAction::List,
        } => {
            for entry in catalog() {
                let ideals: Vec<&str> = entry.ideals.keys().map(String::as_str).collect();
                println!(
                    "{:10} dim {}  ideals: {}  ({})",
                    entry.name,
                    entry.algebra.dim(),
                    ideals.join(", "),
                    entry.note
                );
            }
            ExitCode::SUCCESS
        }
        Command::Check {
            action: CheckAction::Jacobi { input },
        } => {
            let text = match std::fs::read_to_string(&input) {
                Ok(t) => t,
                Err(e) => return fail_input(format!("{}: {e}", input.display())),
            };
            let (name, g) = match parse_algebra(&text) {
                Ok(v) => v,
                Err(e) => return fail_input(e),
            };
            match g.validate() {
                Ok(()) => {
                    println!("{name}: axioms hold");
                    ExitCode::SUCCESS
                }
                Err(e) => {
                    eprintln!("{name}: {e}");
                    ExitCode::from(1)
                }
            }
        }
        Command::Verify { action } => run_verify(action),
    }
}

fn run_verify(action: VerifyAction) -> ExitCode {
    match action {
        VerifyAction::Character { common } => {
            let (name, g) = match resolve_algebra(&common.algebra) {
                Ok(v) => v,
                Err(e) => return fail_input(e),
            };
            emit(
                checks::verify_character(&name, &g),
                common.seed,
                &common.report,
            )
        }
        VerifyAction::Poincare { common, bimodule } => {
            let (name, g) = match resolve_algebra(&common.algebra) {
                Ok(v) => v,
                Err(e) => return fail_input(e),
            };
            let (bname, b) = match resolve_bimodule(&g, &bimodule) {
                Ok(v) => v,
                Err(e) => return fail_input(e),
            };
            match checks::verify_poincare(&name, &g, &bname, &b) {
                Ok(report) => emit(report, common.seed, &common.report),
                Err(e) => fail_input(e),
            }
        }
        VerifyAction::ExtFinite {
            common,
            module,
            ladder,
        } => {
            let (name, g) = match resolve_algebra(&common.algebra) {
                Ok(v) => v,
                Err(e) => return fail_input(e),
            };
            let (mname, m) = match resolve_module(&g, &module) {
                Ok(v) => v,
                Err(e) => return fail_input(e),
            };
            let ladder = match parse_ladder(&ladder.ladder, g.dim()) {
                Ok(v) => v,
                Err(e) => return fail_input(e),
            };
            match checks::verify_ext_finite(&name, &g, &mname, &m, &ladder) {
                Ok(report) => emit(report, common.seed, &common.report),
                Err(e) => fail_input(e),
            }
        }
        VerifyAction::ExtQuotient {
            common,
            ideal,
            ladder,
        } => {
            let (name, g) = match resolve_algebra(&common.algebra) {
                Ok(v) => v,
                Err(e) => return fail_input(e),
            };
            let (iname, h) = match resolve_ideal(&g, &ideal) {
                Ok(v) => v,
                Err(e) => return fail_input(e),
            };
            if h.dim() == 0 || h.dim() == g.dim() {
                return fail_input("ext-quotient needs a proper nonzero ideal");
            }
            let ladder = match parse_ladder(&ladder.ladder, g.dim()) {
                Ok(v) => v,
                Err(e) => return fail_input(e),
            };
            match checks::verify_ext_quotient(&name, &g, &iname, &h, &ladder) {
                Ok(report) => emit(report, common.seed, &common.report),
                Err(e) => fail_input(e),
            }
        }
        VerifyAction::HhSelf {
            common,
            ladder,
            force,
        } => {
            let (name, g) = match resolve_algebra(&common.algebra) {
                Ok(v) => v,
                Err(e) => return fail_input(e),
            };
            let ladder = match parse_ladder(&ladder.ladder, g.dim()) {
                Ok(v) => v,
                Err(e) => return fail_input(e),
            };
            match checks::verify_hh_self(&name, &g, &ladder, force) {
                Ok(report) => emit(report, common.seed, &common.report),
                Err(e) => fail_input(e),
            }
        }
        VerifyAction::All {
            report,
            seed,
            jobs,
            timings,
        } => {
            let opts = SuiteOptions {
                seed,
                jobs,
                timings,
            };
            let doc = match checks::full_suite(&opts) {
                Ok(doc) => doc,
                Err(e) => return fail_input(e),
            };
            for check in &doc.checks {
                println!("{}", check.human_line());
            }
            let worst = doc.worst_verdict();
            println!(
                "{} checks, worst verdict: {}",
                doc.checks.len(),
                match worst {
                    Verdict::Pass => "pass",
                    Verdict::Fail => "fail",
                    Verdict::InconclusiveWindow => "inconclusive-window",
                }
            );
            if let Some(path) = report {
                if let Err(e) = std::fs::write(&path, doc.to_json()) {
                    return fail_input(format!("cannot write report: {e}"));
                }
            }
            ExitCode::from(match worst {
                Verdict::Pass => 0u8,
                Verdict::Fail => 1,
                Verdict::InconclusiveWindow => 3,
            })
        }
    }
}
