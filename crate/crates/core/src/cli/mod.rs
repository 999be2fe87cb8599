//! The `resum` command line.
//!
//! ```text
//! resum eval   --model hurwitz:a=1,b=1 --point -3+0i
//! resum eval   --model logmix:b=2 --grid -2:2:41,-2:2:41 --format json --out grid.json
//! resum coeffs --model exp_sqrt:gamma=-1 --k 1..10
//! resum corpus
//! ```
//!
//! Exit status is 0 on success, 1 for invalid input, 2 for numerical failure
//! (including corpus checks that fail) and 3 for I/O errors.

pub mod corpus;
pub mod emit;
pub mod parse;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::analysis::{decay_scan, jump_check, singularity_type};
use crate::reconstruct::{borel_sum, borel_sum_iterated, eval_many, FunctionKind, GlobalFunction};
use crate::{Result, ResumError};
pub use emit::{emit, format_f64, Cell, Format, Metadata, Table};
pub use parse::{parse_complex, parse_grid, parse_k_range, parse_model, ModelSource};

/// Default quadrature tolerance.
pub const DEFAULT_TOL: f64 = 1e-8;
/// Environment variable that replaces the default tolerance.
pub const TOL_ENV: &str = "RESUM_TOL";

#[derive(Debug, Parser)]
#[command(
    name = "resum",
    version,
    about = "Evaluate functions from integral representations of their Taylor coefficients"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Absolute quadrature tolerance in [1e-14, 1e-2] [default: 1e-8, or $RESUM_TOL]
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    /// Write results here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct ModelArg {
    /// Builtin such as `hurwitz:a=1,b=1,scale=-1`, `logmix:b=2`, `stirling_f3`,
    /// `exp_sqrt:gamma=-1`, or the path of a JSON model.
    #[arg(long)]
    pub model: String,
    /// Summation mode; builtins choose their own when omitted.
    #[arg(long, value_enum)]
    pub kind: Option<KindArg>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Finite,
    Entire,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CoeffMethod {
    Quadrature,
    Closed,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate the reconstructed function at points or on a grid.
    Eval {
        #[command(flatten)]
        model: ModelArg,
        /// A point such as `-3+0i`; repeatable.
        #[arg(long, allow_hyphen_values = true)]
        point: Vec<String>,
        /// `re0:re1:n,im0:im1:m`.
        #[arg(long, allow_hyphen_values = true, conflicts_with = "point")]
        grid: Option<String>,
    },
    /// Taylor coefficients `c_k` (`re_z` holds k).
    Coeffs {
        #[command(flatten)]
        model: ModelArg,
        /// `1..5`, `7` or `1,3,9`.
        #[arg(long)]
        k: String,
        #[arg(long, value_enum, default_value_t = CoeffMethod::Quadrature)]
        method: CoeffMethod,
    },
    /// Check every builtin model against its closed-form oracle.
    Corpus,
    /// Side limits across the cut of term `j` (`re_f`, `im_f`: observed jump; `abs_err`: residual).
    Jumps {
        #[command(flatten)]
        model: ModelArg,
        #[arg(long, default_value_t = 0)]
        term: usize,
        /// Cut parameters t > 1; the cut point is `a_j t`.
        #[arg(long, value_delimiter = ',', default_value = "1.3,2,2.9,4.5,7")]
        t: Vec<f64>,
        /// Transverse offset for the side limits.
        #[arg(long, default_value_t = 1e-3)]
        h: f64,
    },
    /// Remainder after subtracting the singular part at `a_j` (`re_z`, `im_z`: offset).
    Singularity {
        #[command(flatten)]
        model: ModelArg,
        #[arg(long, default_value_t = 0)]
        term: usize,
        #[arg(long, value_delimiter = ',', default_value = "1e-2,1e-3,1e-4")]
        radii: Vec<f64>,
    },
    /// Borel sum of `Σ c_k k! x^{-k-1}` (`re_z` holds x).
    Borel {
        #[command(flatten)]
        model: ModelArg,
        #[arg(long, value_delimiter = ',', required = true)]
        x: Vec<f64>,
        /// Use the iterated Laplace form.
        #[arg(long)]
        iterated: bool,
    },
    /// `|f(z)/z|` along rays (`re_f` holds the ratio).
    Scan {
        #[command(flatten)]
        model: ModelArg,
        #[arg(long, value_delimiter = ',', default_value = "10,100,1000")]
        radii: Vec<f64>,
        /// Directions in radians.
        #[arg(
            long,
            value_delimiter = ',',
            allow_hyphen_values = true,
            default_value = "3.141592653589793,2,-2"
        )]
        directions: Vec<f64>,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Eval { .. } => "eval",
            Command::Coeffs { .. } => "coeffs",
            Command::Corpus => "corpus",
            Command::Jumps { .. } => "jumps",
            Command::Singularity { .. } => "singularity",
            Command::Borel { .. } => "borel",
            Command::Scan { .. } => "scan",
        }
    }
}

/// Exit status for an error.
pub fn exit_code(e: &ResumError) -> i32 {
    match e {
        ResumError::Io(_) => 3,
        e if e.is_numerical() => 2,
        _ => 1,
    }
}

/// Resolve the tolerance from the flag, then `RESUM_TOL`, then the default.
pub fn resolve_tol(flag: Option<f64>, env: Option<&str>) -> Result<f64> {
    let tol = match (flag, env) {
        (Some(t), _) => t,
        (None, Some(s)) => s
            .trim()
            .parse()
            .map_err(|_| ResumError::Validation(format!("{TOL_ENV}='{s}' is not a number")))?,
        (None, None) => DEFAULT_TOL,
    };
    if (1e-14..=1e-2).contains(&tol) {
        Ok(tol)
    } else {
        Err(ResumError::Validation(format!(
            "tolerance {tol} is outside [1e-14, 1e-2]"
        )))
    }
}

fn function(arg: &ModelArg) -> Result<(GlobalFunction, String)> {
    let src = parse_model(&arg.model)?;
    let kind = match arg.kind {
        Some(KindArg::Finite) => FunctionKind::FiniteRadius,
        Some(KindArg::Entire) => FunctionKind::Entire,
        None => src.default_kind,
    };
    Ok((GlobalFunction::new(src.model, kind)?.with_f0(src.f0), src.label))
}

/// Run a parsed command line and return the process exit status.
pub fn run(cli: &Cli) -> i32 {
    let env = std::env::var(TOL_ENV).ok();
    let outcome = resolve_tol(cli.tol, env.as_deref()).and_then(|tol| execute(cli, tol));
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("resum: {e}");
            exit_code(&e)
        }
    }
}

/// Parse `args` (program name first) and run; clap's help and version exit 0, bad flags exit 1.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            code
        }
    }
}

fn execute(cli: &Cli, tol: f64) -> Result<i32> {
    let command = cli.command.name();
    let (table, label) = match &cli.command {
        Command::Corpus => {
            let results = corpus::run_corpus(tol);
            for r in results.iter().filter(|r| r.error.is_some()) {
                eprintln!("resum: {}: {}", r.name, r.error.as_deref().unwrap_or_default());
            }
            let table = corpus::corpus_table(&results);
            emit(
                &table,
                cli.format,
                &Metadata::new(command, "builtin corpus", tol),
                cli.out.as_deref(),
            )?;
            return Ok(if results.iter().all(|r| r.passed()) { 0 } else { 2 });
        }
        Command::Eval { model, point, grid } => {
            let (g, label) = function(model)?;
            let points = match grid {
                Some(spec) => parse_grid(spec)?,
                None if point.is_empty() => return Err(ResumError::Validation("eval needs --point or --grid".into())),
                None => point.iter().map(|p| parse_complex(p)).collect::<Result<_>>()?,
            };
            let mut table = Table::results();
            for (z, r) in points.iter().zip(eval_many(&g, &points, tol)) {
                match r {
                    Ok(e) => table.push_evaluation(*z, &e),
                    // A grid may cross a cut; keep its shape and mark the point.
                    Err(e) if grid.is_some() => {
                        eprintln!("resum: {z}: {e}");
                        table.push_result(*z, crate::C64::new(f64::NAN, f64::NAN), f64::NAN);
                    }
                    Err(e) => return Err(e),
                }
            }
            (table, label)
        }
        Command::Coeffs { model, k, method } => {
            let (g, label) = function(model)?;
            let mut table = Table::results();
            for k in parse_k_range(k)? {
                let (c, err) = match method {
                    CoeffMethod::Closed => (
                        g.model
                            .closed_form(k)
                            .ok_or_else(|| ResumError::Validation("model has no closed-form coefficients".into()))?,
                        0.0,
                    ),
                    CoeffMethod::Quadrature => (g.model.coefficient(k, tol)?, tol),
                };
                table.push_result(crate::C64::new(f64::from(k), 0.0), c, err);
            }
            (table, label)
        }
        Command::Jumps { model, term, t, h } => {
            let (g, label) = function(model)?;
            let mut table = Table::results();
            for &t in t {
                let r = jump_check(&g.model, *term, t, *h, tol)?;
                table.push_result(r.z_on_cut, r.side_plus - r.side_minus, r.residual);
            }
            (table, label)
        }
        Command::Singularity { model, term, radii } => {
            let (g, label) = function(model)?;
            let probe = singularity_type(&g, *term, radii, tol)?;
            if !probe.bounded {
                eprintln!("resum: remainder at term {term} does not stay bounded");
            }
            let mut table = Table::results();
            for (z, v) in probe.offsets.iter().zip(&probe.remainder_values) {
                table.push_result(*z, *v, tol);
            }
            (table, label)
        }
        Command::Borel { model, x, iterated } => {
            let src = parse_model(&model.model)?;
            let g = GlobalFunction::borel(src.model)?.with_f0(src.f0);
            let mut table = Table::results();
            for &x in x {
                let e = if *iterated {
                    borel_sum_iterated(&g, x, tol)?
                } else {
                    borel_sum(&g, x, tol)?
                };
                table.push_evaluation(crate::C64::new(x, 0.0), &e);
            }
            (table, src.label)
        }
        Command::Scan {
            model,
            radii,
            directions,
        } => {
            let (g, label) = function(model)?;
            let scan = decay_scan(&g, radii, directions, tol)?;
            let mut table = Table::results();
            for row in &scan.rows {
                let z = crate::C64::from_polar(row.radius, row.direction);
                table.push_result(z, crate::C64::new(row.ratio, 0.0), tol);
            }
            (table, label)
        }
    };
    emit(
        &table,
        cli.format,
        &Metadata::new(command, &label, tol),
        cli.out.as_deref(),
    )?;
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tolerance_precedence_and_range() {
        assert_eq!(resolve_tol(None, None).unwrap(), DEFAULT_TOL);
        assert_eq!(resolve_tol(None, Some("1e-10")).unwrap(), 1e-10);
        assert_eq!(resolve_tol(Some(1e-6), Some("1e-10")).unwrap(), 1e-6);
        assert!(resolve_tol(Some(1e-15), None).is_err());
        assert!(resolve_tol(Some(0.1), None).is_err());
        assert!(resolve_tol(None, Some("tight")).is_err());
    }

    #[test]
    fn exit_codes_by_error_class() {
        assert_eq!(exit_code(&ResumError::Validation("x".into())), 1);
        assert_eq!(exit_code(&ResumError::Domain("x".into())), 1);
        assert_eq!(exit_code(&ResumError::ContourPinch("x".into())), 2);
        assert_eq!(exit_code(&ResumError::Io("x".into())), 3);
    }

    #[test]
    fn negative_points_parse_as_values() {
        let cli = Cli::try_parse_from(["resum", "eval", "--model", "hurwitz:a=1,b=1", "--point", "-3+0i"]).unwrap();
        match cli.command {
            Command::Eval { point, .. } => assert_eq!(point, vec!["-3+0i".to_string()]),
            _ => unreachable!(),
        }
        assert!(
            Cli::try_parse_from(["resum", "eval", "--model", "m", "--point", "1", "--grid", "0:1:2,0:1:2"]).is_err()
        );
    }
}
