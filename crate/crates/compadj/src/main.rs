//! Command-line front end: parse symbol and test-function expressions, run
//! engine operations and verification suites, and emit one JSON document
//! per command on standard output. Diagnostics go to standard error.
//!
//! Exit codes: 0 success, 1 verification failure, 2 invalid map or usage,
//! 3 numeric failure.

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_complex::Complex64;
use serde_json::{json, Value};

use compadj::{
    branch_solve, check_test_function, classify_map, format_map, parse_complex, parse_map,
    run_suite, AdjointConfig, AdjointEngine, Classification, Error, ExtendedValue, RationalMap,
    Result, SUITE_NAMES,
};

#[derive(Parser)]
#[command(
    name = "compadj",
    about = "Adjoints of composition operators with rational symbol on the Hardy space H^2",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Truncation order for coefficient extraction.
    #[arg(long, global = true, default_value_t = 64)]
    n_terms: usize,

    /// Circle sample count (a power of two, at least the truncation order).
    #[arg(long, global = true, default_value_t = 512)]
    samples: usize,

    /// Sampling radius in (0, 1).
    #[arg(long, global = true, default_value_t = 0.5)]
    radius: f64,

    /// Residual tolerance for certified polynomial roots.
    #[arg(long, global = true, default_value_t = 1e-12)]
    tol_root: f64,

    /// Residual tolerance for the branch equation.
    #[arg(long, global = true, default_value_t = 1e-9)]
    tol_branch: f64,

    /// Relative tolerance for deflating common numerator/denominator roots.
    #[arg(long, global = true, default_value_t = 1e-9)]
    tol_coprime: f64,

    /// Seed for every randomized component (root starting points, suites).
    #[arg(long, global = true, default_value_t = 0x5EED)]
    seed: u64,

    /// Also write the JSON report verbatim to this file.
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a symbol by its value at infinity after checking the
    /// self-map property.
    Classify {
        /// Symbol expression, e.g. "(2*z)/(z+4)".
        map: String,
    },
    /// Solve the branch equation of the companion map at one point.
    Branches {
        /// Symbol expression.
        map: String,
        /// Evaluation point, e.g. "0.25" or "0.1+0.2i".
        #[arg(long)]
        at: String,
    },
    /// Evaluate the adjoint C*_phi f at points, or extract its leading
    /// Taylor coefficients.
    Adjoint {
        /// Symbol expression.
        map: String,
        /// Test function with all poles outside the closed unit disk.
        #[arg(long)]
        f: String,
        /// Evaluation point (repeatable).
        #[arg(long, conflicts_with = "coeffs")]
        at: Vec<String>,
        /// Number of leading Taylor coefficients to extract.
        #[arg(long)]
        coeffs: Option<usize>,
    },
    /// Run verification suites and report machine-readable results.
    Verify {
        /// One suite by name.
        #[arg(long, conflicts_with = "all")]
        suite: Option<String>,
        /// Every suite.
        #[arg(long)]
        all: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn run(cli: &Cli) -> Result<u8> {
    match &cli.command {
        Command::Classify { map } => {
            let phi = parse_map(map)?;
            let cfg = config(cli, None)?;
            let classification = classify_map(&phi, &cfg)?;
            emit(cli, classify_json(&phi, &classification))?;
            Ok(0)
        }
        Command::Branches { map, at } => {
            let phi = parse_map(map)?;
            let z = parse_complex(at)?;
            let cfg = config(cli, None)?;
            let set = branch_solve(&phi, z, &cfg)?;
            let branches: Vec<Value> = set
                .branches
                .iter()
                .map(|b| {
                    json!({
                        "sigma": cjson(b.location),
                        "psi": cjson(b.weight),
                        "multiplicity": b.multiplicity,
                        "residual": b.residual,
                    })
                })
                .collect();
            emit(
                cli,
                json!({
                    "command": "branches",
                    "map": format_map(&phi),
                    "at": cjson(z),
                    "nominal_degree": set.nominal_degree,
                    "degree_deficit": set.degree_deficit,
                    "branches": branches,
                }),
            )?;
            Ok(0)
        }
        Command::Adjoint { map, f, at, coeffs } => {
            let phi = parse_map(map)?;
            let func = parse_map(f)?;
            check_test_function(&func)?;
            match (at.is_empty(), coeffs) {
                (false, None) => {
                    let cfg = config(cli, None)?;
                    let engine = engine_for(&phi, &cfg)?;
                    let mut values = Vec::new();
                    for text in at {
                        let z = parse_complex(text)?;
                        let value = engine.eval(&func, z)?;
                        values.push(json!({ "at": cjson(z), "value": cjson(value) }));
                    }
                    emit(
                        cli,
                        json!({
                            "command": "adjoint",
                            "map": format_map(&phi),
                            "f": format_map(&func),
                            "values": values,
                        }),
                    )?;
                    Ok(0)
                }
                (true, Some(n)) => {
                    let cfg = config(cli, Some(*n))?;
                    let engine = engine_for(&phi, &cfg)?;
                    let series = engine.coeffs(&func)?;
                    let coefficients: Vec<Value> =
                        (0..*n).map(|k| cjson(series.coeff(k))).collect();
                    emit(
                        cli,
                        json!({
                            "command": "adjoint",
                            "map": format_map(&phi),
                            "f": format_map(&func),
                            "coefficients": coefficients,
                        }),
                    )?;
                    Ok(0)
                }
                _ => Err(Error::Usage {
                    message: "pass either --at (repeatable) or --coeffs N".to_string(),
                }),
            }
        }
        Command::Verify { suite, all } => {
            let cfg = config(cli, None)?;
            let names: Vec<&str> = match (suite, all) {
                (Some(name), false) => vec![name.as_str()],
                (None, true) => SUITE_NAMES.to_vec(),
                _ => {
                    return Err(Error::Usage {
                        message: "pass either --suite <name> or --all".to_string(),
                    })
                }
            };
            let mut reports = Vec::new();
            for name in names {
                let report = run_suite(name, &cfg).ok_or_else(|| Error::Usage {
                    message: format!(
                        "unknown suite '{name}'; available: {}",
                        SUITE_NAMES.join(", ")
                    ),
                })?;
                eprintln!(
                    "suite {: <18} {}  (max error {:.3e} over {} cases)",
                    report.suite,
                    if report.passed { "pass" } else { "FAIL" },
                    report.max_error,
                    report.cases.len(),
                );
                reports.push(report);
            }
            let passed = reports.iter().all(|r| r.passed);
            emit(
                cli,
                json!({
                    "command": "verify",
                    "seed": cfg.seed,
                    "passed": passed,
                    "reports": reports,
                }),
            )?;
            Ok(if passed { 0 } else { 1 })
        }
    }
}

/// Builds the engine configuration from the global flags, enforcing the
/// sampling invariants up front so deeper layers never panic on user input.
fn config(cli: &Cli, min_terms: Option<usize>) -> Result<AdjointConfig> {
    let mut cfg = AdjointConfig {
        n_terms: cli.n_terms,
        samples: cli.samples,
        radius: cli.radius,
        eps_root: cli.tol_root,
        eps_branch: cli.tol_branch,
        tol_coprime: cli.tol_coprime,
        seed: cli.seed,
        ..AdjointConfig::default()
    };
    if let Some(n) = min_terms {
        cfg.n_terms = cfg.n_terms.max(n);
    }
    if cfg.n_terms == 0 {
        return Err(Error::Usage { message: "--n-terms must be positive".to_string() });
    }
    if !cfg.samples.is_power_of_two() || cfg.samples < cfg.n_terms.max(2) {
        return Err(Error::Usage {
            message: "--samples must be a power of two no smaller than the truncation order"
                .to_string(),
        });
    }
    if !(cfg.radius > 0.0 && cfg.radius < 1.0) {
        return Err(Error::Usage { message: "--radius must lie in (0, 1)".to_string() });
    }
    if !(cfg.eps_root > 0.0 && cfg.eps_branch > 0.0 && cfg.tol_coprime > 0.0) {
        return Err(Error::Usage { message: "tolerances must be positive".to_string() });
    }
    Ok(cfg)
}

/// Validates the self-map property before handing the symbol to the
/// engine, so an invalid map exits with code 2 rather than failing deep in
/// the numerics.
fn engine_for(phi: &RationalMap, cfg: &AdjointConfig) -> Result<AdjointEngine> {
    classify_map(phi, cfg)?;
    AdjointEngine::new(phi, cfg)
}

fn classify_json(phi: &RationalMap, classification: &Classification) -> Value {
    json!({
        "command": "classify",
        "map": format_map(phi),
        "class": classification.class,
        "value_at_infinity": extended_json(&classification.value_at_infinity),
        "self_map": {
            "is_self_map": classification.self_map.is_self_map,
            "max_boundary_modulus": classification.self_map.max_boundary_modulus,
            "min_pole_modulus": classification.self_map.min_pole_modulus,
        },
    })
}

fn cjson(v: Complex64) -> Value {
    json!({ "re": v.re, "im": v.im })
}

fn extended_json(v: &ExtendedValue) -> Value {
    match v {
        ExtendedValue::Finite(v) => cjson(*v),
        ExtendedValue::Infinity => json!("infinity"),
    }
}

fn emit(cli: &Cli, value: Value) -> Result<()> {
    let text = serde_json::to_string_pretty(&value).expect("reports serialize");
    println!("{text}");
    if let Some(path) = &cli.out {
        std::fs::write(path, format!("{text}\n")).map_err(|e| Error::Usage {
            message: format!("cannot write {}: {e}", path.display()),
        })?;
    }
    Ok(())
}
