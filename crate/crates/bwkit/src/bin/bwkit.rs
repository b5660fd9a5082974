use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use bwkit::checks::{apply_expectations, registry, run_named, Params};
use bwkit::report::{exit_code, stream_payload, Report};
use bwkit::scenario;

/// Exact verification suite for relativistic wave equations in the
/// (1/2,1/2) and multispinor representations.
#[derive(Parser)]
#[command(name = "bwkit", version)]
struct Cli {
    /// Emit deterministic JSON instead of the human-readable summary.
    #[arg(long, global = true)]
    json: bool,
    /// Relative tolerance for floating-point comparison paths. Exact
    /// rational checks ignore it.
    #[arg(long, global = true, default_value_t = 1e-12)]
    tolerance: f64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Clifford and reflection identities of the matrix representations.
    Matrices,
    /// Mass spectrum of the first-order wave operator.
    Spectrum {
        /// Scalar-term coefficient, exact rational ("p/q" or integer).
        #[arg(long = "A", allow_hyphen_values = true)]
        a: String,
        /// Mass-term coefficient, exact rational.
        #[arg(long = "B", allow_hyphen_values = true)]
        b: String,
    },
    /// Polarization basis completeness and field-strength structure.
    Polarization,
    /// Coupled spin-1 system checks.
    Bw1 {
        /// Which verification to run: shell, wth, or signs.
        #[arg(long, default_value = "shell")]
        check: String,
    },
    /// Rank-two multispinor symmetry systems.
    Spin2 {
        #[command(subcommand)]
        cmd: Spin2Cmd,
    },
    /// Field-operator relations, propagator and plane-wave invariants.
    Quanta,
    /// Run a scenario file (key=value lines or JSON).
    Run { file: PathBuf },
    /// Run every registered verification in name order.
    VerifyAll,
}

#[derive(Subcommand)]
enum Spin2Cmd {
    /// Component-space and image-space nullspace dimensions.
    Nullity {
        /// Standard coefficient assignment.
        #[arg(long, conflicts_with = "generalized")]
        standard: bool,
        /// Fully generic nonzero coefficients.
        #[arg(long)]
        generalized: bool,
    },
}

fn emit(reports: &[Report], json: bool) -> ExitCode {
    if let Ok(dir) = std::env::var("BWKIT_REPORT_DIR") {
        let dir = PathBuf::from(dir);
        if let Err(e) = std::fs::create_dir_all(&dir) {
            eprintln!("cannot create report directory: {e}");
            return ExitCode::from(2);
        }
        for r in reports {
            let path = dir.join(format!("{}.json", r.scenario));
            let body = serde_json::to_string_pretty(&r.payload_with_timing())
                .expect("serializable payload");
            if let Err(e) = std::fs::write(&path, body) {
                eprintln!("cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
    }
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&stream_payload(reports)).expect("serializable")
        );
    } else {
        for r in reports {
            println!("{}", r.summary_line());
            for (k, v) in &r.values {
                println!("    {k} = {v}");
            }
        }
        let fails = reports
            .iter()
            .filter(|r| r.status == bwkit::report::Status::Fail)
            .count();
        println!(
            "{} scenario(s), {} failed",
            reports.len(),
            fails
        );
    }
    ExitCode::from(exit_code(reports) as u8)
}

fn input_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn run_one(name: &str, params: Params, json: bool) -> ExitCode {
    match run_named(name, &params) {
        Ok(report) => emit(&[report], json),
        Err(e) => input_error(e),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if !(cli.tolerance.is_finite() && cli.tolerance > 0.0) {
        return input_error("--tolerance must be a positive finite number");
    }
    match cli.command {
        Command::Matrices => run_one("representation-identities", Params::empty(), cli.json),
        Command::Spectrum { a, b } => {
            for (key, v) in [("A", &a), ("B", &b)] {
                if let Err(e) = scenario::parse_rational(v) {
                    return input_error(format!("--{key}: {e}"));
                }
            }
            let mut p = BTreeMap::new();
            p.insert("A".to_string(), a);
            p.insert("B".to_string(), b);
            run_one("dispersion-spectrum", Params(p), cli.json)
        }
        Command::Polarization => run_one("polarization-suite", Params::empty(), cli.json),
        Command::Bw1 { check } => {
            let name = match check.as_str() {
                "shell" => "spin1-shell",
                "wth" => "wth-roundtrip",
                "signs" => "sign-enumeration",
                other => {
                    return input_error(format!(
                        "unknown --check {:?}; expected shell, wth or signs",
                        other
                    ))
                }
            };
            run_one(name, Params::empty(), cli.json)
        }
        Command::Spin2 { cmd } => {
            let Spin2Cmd::Nullity {
                standard,
                generalized,
            } = cmd;
            let name = if generalized && !standard {
                "spin2-generalized"
            } else {
                "spin2-standard"
            };
            run_one(name, Params::empty(), cli.json)
        }
        Command::Quanta => run_one("quanta-suite", Params::empty(), cli.json),
        Command::Run { file } => {
            let text = match std::fs::read_to_string(&file) {
                Ok(t) => t,
                Err(e) => return input_error(format!("{}: {e}", file.display())),
            };
            let sc = match scenario::parse(&text) {
                Ok(sc) => sc,
                Err(e) => return input_error(format!("{}: {e}", file.display())),
            };
            match run_named(&sc.target, &Params(sc.params.clone())) {
                Ok(mut report) => {
                    report.scenario = sc.name.clone();
                    apply_expectations(&mut report, &sc.expectations);
                    emit(&[report], cli.json)
                }
                Err(e) => input_error(e),
            }
        }
        Command::VerifyAll => {
            let mut reports = Vec::new();
            for check in registry() {
                match run_named(check.name(), &Params::empty()) {
                    Ok(r) => reports.push(r),
                    Err(e) => return input_error(e),
                }
            }
            emit(&reports, cli.json)
        }
    }
}
