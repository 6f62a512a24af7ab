//! Command-line front end.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64 as C64;

use crate::contours::{BranchSpec, DEFAULT_MAX_PANELS};
use crate::converge::{converge_study, to_csv};
use crate::error::{Error, Result};
use crate::funcalc::{
    branch_logarithm_limit, branch_logarithm_with, branch_power_with, sectorial_projection_with,
    CalcSettings, Computed, SectorSpec,
};
use crate::io::{load_matrix, matrix_to_json, save_matrix};
use crate::symbolcalc::{log_symbol_term_with, projection_symbol_with, ClassicalSymbol};
use crate::verify::{run_suite, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED_CHECK: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NUMERIC: i32 = 3;

/// Environment variable capping the number of quadrature panels.
pub const MAX_PANELS_ENV: &str = "SECTORIAL_MAX_PANELS";

#[derive(Parser, Debug)]
#[command(name = "sectorial", version, about = "Sectorial projections, logarithms and powers by contour integration")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Debug, Clone)]
struct Theta {
    /// Branch-cut / first ray angle in radians.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "theta_deg", required_unless_present = "theta_deg")]
    theta: Option<f64>,
    /// Same in degrees.
    #[arg(long, allow_hyphen_values = true)]
    theta_deg: Option<f64>,
}

impl Theta {
    fn radians(&self) -> f64 {
        self.theta.unwrap_or_else(|| self.theta_deg.unwrap_or(0.0).to_radians())
    }
}

#[derive(Args, Debug, Clone)]
struct Phi {
    /// Second ray angle in radians.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "phi_deg", required_unless_present = "phi_deg")]
    phi: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    phi_deg: Option<f64>,
}

impl Phi {
    fn radians(&self) -> f64 {
        self.phi.unwrap_or_else(|| self.phi_deg.unwrap_or(0.0).to_radians())
    }
}

#[derive(Args, Debug, Clone)]
struct MatrixIo {
    /// Input matrix JSON file.
    #[arg(long)]
    matrix: PathBuf,
    /// Output file; the result is printed when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SuiteArg {
    Matrix,
    Symbol,
    Opdisc,
    All,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Sectorial projection for the sector between two rays.
    Project {
        #[command(flatten)]
        io: MatrixIo,
        #[command(flatten)]
        theta: Theta,
        #[command(flatten)]
        phi: Phi,
    },
    /// Logarithm with branch cut along a ray.
    Logm {
        #[command(flatten)]
        io: MatrixIo,
        #[command(flatten)]
        theta: Theta,
        /// Extrapolate the regularized integral instead of using the keyhole.
        #[arg(long)]
        limit_mode: bool,
    },
    /// Complex power with branch cut along a ray.
    Powm {
        #[command(flatten)]
        io: MatrixIo,
        #[command(flatten)]
        theta: Theta,
        /// Real part of the exponent.
        #[arg(long, allow_hyphen_values = true)]
        s: f64,
        /// Imaginary part of the exponent.
        #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
        s_im: f64,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        /// Write the reports as JSON to this file.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Homogeneous term of the log symbol, or of the projection symbol
    /// when `--phi` is given.
    Symbol {
        /// Principal-first symbol matrix, rows separated by ';', entries by ','.
        #[arg(long)]
        p: String,
        #[arg(long, default_value_t = 0)]
        j: usize,
        #[arg(long, allow_hyphen_values = true)]
        x: f64,
        #[arg(long, allow_hyphen_values = true)]
        xi: f64,
        #[command(flatten)]
        theta: Theta,
        #[arg(long, allow_hyphen_values = true, conflicts_with = "phi_deg")]
        phi: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        phi_deg: Option<f64>,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// Projection error as the panel count per segment doubles (CSV).
    Converge {
        #[arg(long)]
        matrix: PathBuf,
        #[command(flatten)]
        theta: Theta,
        #[command(flatten)]
        phi: Phi,
        #[arg(long, value_delimiter = ',', default_value = "8,16,32,64")]
        nodes: Vec<usize>,
    },
}

fn settings(tol: f64) -> Result<CalcSettings> {
    let mut cfg = CalcSettings::new(tol);
    if let Ok(v) = std::env::var(MAX_PANELS_ENV) {
        let n: usize = v
            .trim()
            .parse()
            .map_err(|_| Error::InvalidArgument(format!("{MAX_PANELS_ENV}={v:?} is not a positive integer")))?;
        if n == 0 {
            return Err(Error::InvalidArgument(format!("{MAX_PANELS_ENV} must be positive")));
        }
        cfg = cfg.max_panels(n);
    } else {
        cfg = cfg.max_panels(DEFAULT_MAX_PANELS);
    }
    Ok(cfg)
}

fn emit(io: &MatrixIo, c: &Computed, out: &mut dyn Write) -> Result<()> {
    match &io.out {
        Some(path) => save_matrix(path, &c.value),
        None => write_str(out, &matrix_to_json(&c.value)),
    }
}

fn write_str(out: &mut dyn Write, s: &str) -> Result<()> {
    out.write_all(s.as_bytes())
        .map_err(|e| Error::InvalidArgument(format!("cannot write output: {e}")))
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InvalidArgument(_)
        | Error::InvalidMatrix(_)
        | Error::DimensionMismatch { .. }
        | Error::Parse { .. }
        | Error::Degree(_)
        | Error::InvalidPath(_) => EXIT_USAGE,
        _ => EXIT_NUMERIC,
    }
}

fn dispatch(cmd: Cmd, out: &mut dyn Write) -> Result<i32> {
    match cmd {
        Cmd::Project { io, theta, phi } => {
            let a = load_matrix(&io.matrix)?;
            let s = SectorSpec::new(theta.radians(), phi.radians())?;
            let c = sectorial_projection_with(&a, s, &settings(io.tol)?)?;
            emit(&io, &c, out)?;
        }
        Cmd::Logm { io, theta, limit_mode } => {
            let a = load_matrix(&io.matrix)?;
            let b = BranchSpec::new(theta.radians());
            let cfg = settings(io.tol)?;
            let c = if limit_mode {
                branch_logarithm_limit(&a, b, &cfg)?
            } else {
                branch_logarithm_with(&a, b, &cfg)?
            };
            emit(&io, &c, out)?;
        }
        Cmd::Powm { io, theta, s, s_im } => {
            let a = load_matrix(&io.matrix)?;
            let c = branch_power_with(&a, C64::new(s, s_im), BranchSpec::new(theta.radians()), &settings(io.tol)?)?;
            emit(&io, &c, out)?;
        }
        Cmd::Verify { suite, seed, tol, json } => {
            if !(tol > 0.0) {
                return Err(Error::InvalidArgument("--tol must be positive".into()));
            }
            let suite = match suite {
                SuiteArg::Matrix => Suite::Matrix,
                SuiteArg::Symbol => Suite::Symbol,
                SuiteArg::Opdisc => Suite::Opdisc,
                SuiteArg::All => Suite::All,
            };
            let reports = run_suite(suite, seed, tol)?;
            let mut text = String::new();
            for r in &reports {
                text.push_str(&format!(
                    "{} {:<34} max_error={:.3e} tol={:.1e} nodes={} ms={}\n",
                    if r.pass { "PASS" } else { "FAIL" },
                    r.check,
                    r.max_error,
                    r.tol,
                    r.nodes_used,
                    r.wall_ms
                ));
            }
            write_str(out, &text)?;
            if let Some(path) = json {
                let body = serde_json::to_string_pretty(&reports).expect("reports serialize");
                std::fs::write(&path, body + "\n")
                    .map_err(|e| Error::InvalidArgument(format!("cannot write {}: {e}", path.display())))?;
            }
            return Ok(if reports.iter().all(|r| r.pass) { EXIT_OK } else { EXIT_FAILED_CHECK });
        }
        Cmd::Symbol { p, j, x, xi, theta, phi, phi_deg, tol } => {
            let sym = ClassicalSymbol::parse(&p)?;
            let cfg = settings(tol)?;
            let phi = phi.or(phi_deg.map(f64::to_radians));
            let c = match phi {
                Some(phi) => projection_symbol_with(&sym, j..=j, x, xi, SectorSpec::new(theta.radians(), phi)?, &cfg)?,
                None => log_symbol_term_with(&sym, j, x, xi, BranchSpec::new(theta.radians()), &cfg)?,
            };
            write_str(out, &matrix_to_json(&c.value))?;
        }
        Cmd::Converge { matrix, theta, phi, nodes } => {
            let a = load_matrix(&matrix)?;
            let s = SectorSpec::new(theta.radians(), phi.radians())?;
            write_str(out, &to_csv(&converge_study(&a, s, &nodes)?))?;
        }
    }
    Ok(EXIT_OK)
}

/// Runs the CLI on `args` (including the program name) and returns the
/// exit code; results go to `out`, diagnostics to `err`.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let _ = if code == 0 {
                write!(out, "{e}")
            } else {
                write!(err, "{e}")
            };
            return if code == 0 { EXIT_OK } else { EXIT_USAGE };
        }
    };
    match dispatch(cli.cmd, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

pub fn run() -> i32 {
    run_with(std::env::args_os(), &mut std::io::stdout(), &mut std::io::stderr())
}
