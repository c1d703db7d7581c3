//! `nuspectra` command-line front end.

mod config;
mod output;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use nuspectra::batch::{self, SpectrumRequest, SweepRequest};
use nuspectra::radial;
use nuspectra::validate::{self, ValidateRequest};

use config::{ConfigError, Format, Layer, RunConfig, ENV_DEFAULTS};

const USAGE_ERROR: u8 = 1;
const DOMAIN_ERROR: u8 = 2;

#[derive(Parser)]
#[command(
    name = "nuspectra",
    version,
    about = "Bound states of the D-dimensional hyperbolic Poschl-Teller plus ring-shaped potential",
    after_help = "Parameter flags accept a single value; under `sweep` exactly one of them may be a \
                  comma list (0.2,0.1,0.05) or an inclusive range start:stop:count.\n\
                  Precedence: flags > --config > $NUSPECTRA_DEFAULTS > built-in defaults.\n\
                  Exit codes: 0 success, 1 usage/config error, 2 domain/validation failure."
)]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// key=value file, overriding $NUSPECTRA_DEFAULTS.
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,
    /// Spatial dimension D (default 3).
    #[arg(long = "D", global = true, value_name = "D")]
    dim: Option<String>,
    #[arg(long = "A", global = true, value_name = "VALUE", allow_hyphen_values = true)]
    a: Option<String>,
    #[arg(long = "B", global = true, value_name = "VALUE", allow_hyphen_values = true)]
    b: Option<String>,
    #[arg(long, global = true, value_name = "VALUE")]
    lambda: Option<String>,
    #[arg(long, global = true, value_name = "VALUE", allow_hyphen_values = true)]
    gamma: Option<String>,
    #[arg(long, global = true, value_name = "VALUE", allow_hyphen_values = true)]
    zeta: Option<String>,
    #[arg(long, global = true, value_name = "VALUE", allow_hyphen_values = true)]
    kappa: Option<String>,
    #[arg(long, global = true, value_name = "VALUE")]
    mu: Option<String>,
    #[arg(long, global = true, value_name = "VALUE")]
    hbar: Option<String>,
    #[arg(long = "n-max", global = true, value_name = "N")]
    n_max: Option<String>,
    #[arg(long = "l-max", global = true, value_name = "L")]
    l_max: Option<String>,
    /// Add the finite-difference oracle column.
    #[arg(long, global = true)]
    numeric: bool,
    #[arg(long, global = true, value_parser = ["csv", "json"])]
    format: Option<String>,
    /// Write to this file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<String>,
    /// Radial box size in units of 1/lambda (default 20).
    #[arg(long = "rmax-factor", global = true, value_name = "X")]
    rmax_factor: Option<String>,
    /// Radial grid points (default 4000).
    #[arg(long = "grid-points", global = true, value_name = "N")]
    grid_points: Option<String>,
    /// Run without the thread pool.
    #[arg(long, global = true)]
    sequential: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Energies for n <= n-max and angular levels l <= l-max.
    Spectrum,
    /// Normalized radial wavefunction g_n(r) on the radial grid.
    Wavefunction {
        #[arg(long, value_name = "N")]
        n: Option<String>,
        /// Angular level (l_{D-1} without a ring term).
        #[arg(long, value_name = "L")]
        l: Option<String>,
    },
    /// Run a validation suite and report every check.
    Validate {
        /// pekeris, radial-oracle, angular-oracle, jacobi, special-cases, gram or all.
        #[arg(long, value_name = "NAME")]
        suite: Option<String>,
        /// Seed for the randomized checks.
        #[arg(long, value_name = "SEED")]
        seed: Option<String>,
    },
    /// Spectra over one ranged parameter.
    Sweep {
        /// Oscillator-limit mode: A and B follow lambda.
        #[arg(long = "limiting-omega", value_name = "OMEGA")]
        limiting_omega: Option<String>,
        #[arg(long = "limiting-alpha", value_name = "ALPHA")]
        limiting_alpha: Option<String>,
        /// Fixed box size of the limiting comparison (default 12).
        #[arg(long = "limiting-rmax", value_name = "R")]
        limiting_rmax: Option<String>,
    },
}

fn flag_layer(cli: &Cli) -> Result<Layer, ConfigError> {
    let c = &cli.common;
    let mut layer = Layer::default();
    let mut pairs: Vec<(&str, &Option<String>)> = vec![
        ("D", &c.dim),
        ("A", &c.a),
        ("B", &c.b),
        ("lambda", &c.lambda),
        ("gamma", &c.gamma),
        ("zeta", &c.zeta),
        ("kappa", &c.kappa),
        ("mu", &c.mu),
        ("hbar", &c.hbar),
        ("n-max", &c.n_max),
        ("l-max", &c.l_max),
        ("format", &c.format),
        ("out", &c.out),
        ("rmax-factor", &c.rmax_factor),
        ("grid-points", &c.grid_points),
    ];
    match &cli.command {
        Command::Spectrum => {}
        Command::Wavefunction { n, l } => pairs.extend([("n", n), ("l", l)]),
        Command::Validate { suite, seed } => pairs.extend([("suite", suite), ("seed", seed)]),
        Command::Sweep {
            limiting_omega,
            limiting_alpha,
            limiting_rmax,
        } => pairs.extend([
            ("limiting-omega", limiting_omega),
            ("limiting-alpha", limiting_alpha),
            ("limiting-rmax", limiting_rmax),
        ]),
    }
    for (key, value) in pairs {
        if let Some(v) = value {
            layer.set(key, v.clone())?;
        }
    }
    if c.numeric {
        layer.set("numeric", "true")?;
    }
    if c.sequential {
        layer.set("sequential", "true")?;
    }
    Ok(layer)
}

fn load(cli: &Cli) -> Result<RunConfig, ConfigError> {
    let mut layer = Layer::default();
    if let Some(path) = std::env::var_os(ENV_DEFAULTS).filter(|p| !p.is_empty()) {
        layer = layer.overlay(Layer::read(PathBuf::from(path).as_path())?);
    }
    if let Some(path) = &cli.common.config {
        layer = layer.overlay(Layer::read(path)?);
    }
    RunConfig::resolve(&layer.overlay(flag_layer(cli)?))
}

fn emit(cfg: &RunConfig, text: &str) -> Result<(), String> {
    match &cfg.out {
        Some(path) => std::fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|()| stdout.flush())
                .map_err(|e| format!("cannot write to stdout: {e}"))
        }
    }
}

/// Exit code plus an optional message for stderr.
struct Outcome {
    code: u8,
    message: Option<String>,
}

impl Outcome {
    fn done(code: u8) -> Self {
        Self { code, message: None }
    }

    fn fail(code: u8, message: impl Into<String>) -> Self {
        Self {
            code,
            message: Some(message.into()),
        }
    }
}

fn spectrum_request(cfg: &RunConfig) -> SpectrumRequest {
    let mut req = SpectrumRequest::new(cfg.params, cfg.dim);
    req.n_max = cfg.n_max;
    req.l_max = cfg.l_max;
    req.numeric = cfg.numeric;
    req.grid = cfg.grid;
    req.execution = cfg.execution;
    req
}

fn run_spectrum(cfg: &RunConfig) -> Outcome {
    if let Err(e) = cfg.require_single_point() {
        return Outcome::fail(USAGE_ERROR, e.to_string());
    }
    let rows = batch::spectrum(&spectrum_request(cfg));
    let text = match cfg.format.unwrap_or(Format::Csv) {
        Format::Csv => output::spectrum_csv(&rows),
        Format::Json => output::json(&rows),
    };
    if let Err(e) = emit(cfg, &text) {
        return Outcome::fail(USAGE_ERROR, e);
    }
    let failed = rows.iter().filter(|r| r.error.is_some()).count();
    if failed > 0 {
        Outcome::fail(DOMAIN_ERROR, format!("{failed} row(s) carry a domain error"))
    } else {
        Outcome::done(0)
    }
}

fn run_wavefunction(cfg: &RunConfig) -> Outcome {
    if let Err(e) = cfg.require_single_point() {
        return Outcome::fail(USAGE_ERROR, e.to_string());
    }
    let table = match batch::wavefunction(&cfg.params, cfg.dim, cfg.l, cfg.n, &cfg.grid, cfg.execution) {
        Ok(t) => t,
        Err(e) => {
            let ring = nuspectra::angular::RingParams::from_physical(&cfg.params);
            let violated = batch::effective_l(&ring, cfg.dim, cfg.l)
                .map(|l| {
                    let gamma_d = nuspectra::geometry::centrifugal_gamma_real(cfg.dim, l);
                    radial::bound_state_window_gamma(&cfg.params, gamma_d).failures()
                })
                .unwrap_or_default();
            let detail = if violated.is_empty() {
                String::new()
            } else {
                format!(" (violated: {})", violated.join(", "))
            };
            return Outcome::fail(DOMAIN_ERROR, format!("n = {}, l = {}: {e}{detail}", cfg.n, cfg.l));
        }
    };
    let text = match cfg.format.unwrap_or(Format::Csv) {
        Format::Csv => output::wavefunction_csv(&table, cfg.l, cfg.dim),
        Format::Json => output::json(&table),
    };
    match emit(cfg, &text) {
        Ok(()) => Outcome::done(0),
        Err(e) => Outcome::fail(USAGE_ERROR, e),
    }
}

fn run_validate(cfg: &RunConfig) -> Outcome {
    if let Err(e) = cfg.require_single_point() {
        return Outcome::fail(USAGE_ERROR, e.to_string());
    }
    let req = ValidateRequest {
        params: cfg.params_given.then_some(cfg.params),
        dim: cfg.dim,
        grid: cfg.grid,
        execution: cfg.execution,
        seed: cfg.seed,
    };
    let report = validate::run(cfg.suite, &req);
    let text = match cfg.format.unwrap_or(Format::Json) {
        Format::Csv => output::report_csv(&report),
        Format::Json => output::json(&report),
    };
    if let Err(e) = emit(cfg, &text) {
        return Outcome::fail(USAGE_ERROR, e);
    }
    if report.passed {
        Outcome::done(0)
    } else {
        let failed: Vec<&str> = report
            .checks
            .iter()
            .filter(|c| !c.passed())
            .map(|c| c.check.as_str())
            .collect();
        Outcome::fail(DOMAIN_ERROR, format!("failed checks: {}", failed.join(", ")))
    }
}

fn run_sweep(cfg: &RunConfig) -> Outcome {
    let Some((param, values)) = cfg.ranged.clone() else {
        return Outcome::fail(
            USAGE_ERROR,
            "sweep needs exactly one ranged parameter (e.g. --lambda 0.2,0.1,0.05 or --A 0:40:9)",
        );
    };
    let req = SweepRequest {
        base: spectrum_request(cfg),
        param,
        values,
        limiting: cfg.limiting,
    };
    let rows = match batch::sweep(&req) {
        Ok(r) => r,
        Err(e) => return Outcome::fail(USAGE_ERROR, e.to_string()),
    };
    let text = match cfg.format.unwrap_or(Format::Csv) {
        Format::Csv => output::sweep_csv(&rows),
        Format::Json => output::json(&rows),
    };
    if let Err(e) = emit(cfg, &text) {
        return Outcome::fail(USAGE_ERROR, e);
    }
    let failed = rows.iter().filter(|r| r.row.error.is_some()).count();
    if failed > 0 {
        Outcome::fail(DOMAIN_ERROR, format!("{failed} row(s) carry a domain error"))
    } else {
        Outcome::done(0)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { USAGE_ERROR } else { 0 });
        }
    };
    let cfg = match load(&cli) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(USAGE_ERROR);
        }
    };
    let outcome = match cli.command {
        Command::Spectrum => run_spectrum(&cfg),
        Command::Wavefunction { .. } => run_wavefunction(&cfg),
        Command::Validate { .. } => run_validate(&cfg),
        Command::Sweep { .. } => run_sweep(&cfg),
    };
    if let Some(msg) = outcome.message {
        eprintln!("{}: {msg}", if outcome.code == DOMAIN_ERROR { "failure" } else { "error" });
    }
    ExitCode::from(outcome.code)
}
