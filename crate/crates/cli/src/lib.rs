//! Front end for `boole-core`: argument parsing, polynomial expressions and
//! report formatting. [`run`] is the whole program; `main` only wires it to
//! the process streams.

pub mod parse;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use boole_core::boole::{self, IndexFrom};
use boole_core::finite_difference::{difference_table, nth_delta};
use boole_core::float_numerics::{error_sweep, ErrorKind, FloatErrorRecord, Strategy};
use boole_core::interpolation::{lagrange_interpolate, leading_coeff_from_samples, PointSet};
use boole_core::{rational, NodeGrid, Polynomial, Rational};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

pub use parse::{parse_polynomial, ParseError};

/// Every check passed.
pub const EXIT_OK: i32 = 0;
/// A verification found a violated identity.
pub const EXIT_VIOLATION: i32 = 1;
/// Bad arguments, unparsable input, or a rejected domain value.
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "boole",
    version,
    about = "Finite differences, Lagrange interpolation and the alternating binomial sum identity, in exact arithmetic",
    after_help = "Polynomials are written like \"2x^2 + 3x + 1\" or \"-1/2x^3 + x\"; \
                  coefficient lists are printed leading-first (x^n first, constant last). \
                  Rationals are written p/q."
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Write the report to this file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Alternating sum of p over the grid a, a+b, ..., a+nb against a0*b^n*n!.
    BooleSum(BooleSumArgs),
    /// sum_{k=1}^{n} (-1)^(n-k) C(n,k) k^n, checked against n!.
    Classic {
        #[arg(long)]
        n: u64,
    },
    /// sum_k (-1)^(n-k) C(n,k) k^m under both index conventions.
    Vanishing {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        m: u64,
    },
    /// Symbolic n-th forward difference with step h.
    Diff {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long, default_value = "1", value_parser = parse_rational, allow_hyphen_values = true)]
        h: Rational,
    },
    /// Forward difference table of a sequence.
    DiffTable {
        #[arg(long, value_delimiter = ',', required = true, value_parser = parse_rational, allow_hyphen_values = true)]
        values: Vec<Rational>,
        /// Defaults to the full depth, len(values) - 1.
        #[arg(long)]
        depth: Option<usize>,
    },
    /// Lagrange interpolant through (xs[i], ys[i]).
    Interp {
        #[arg(long, value_delimiter = ',', required = true, value_parser = parse_rational, allow_hyphen_values = true)]
        xs: Vec<Rational>,
        #[arg(long, value_delimiter = ',', required = true, value_parser = parse_rational, allow_hyphen_values = true)]
        ys: Vec<Rational>,
    },
    /// x^n coefficient of the interpolant through samples on a, a+b, ..., a+nb.
    LeadCoeff {
        #[arg(long, value_delimiter = ',', required = true, value_parser = parse_rational, allow_hyphen_values = true)]
        values: Vec<Rational>,
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        a: Rational,
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        b: Rational,
        /// Defaults to len(values) - 1.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Check the identity on seeded random polynomials and grids.
    Verify {
        #[arg(long)]
        max_degree: usize,
        #[arg(long)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        coeff_bound: u64,
    },
    /// Binary64 error of the x^n sum on 0..n under several summation orders.
    FloatSweep {
        #[arg(long)]
        n_min: usize,
        #[arg(long)]
        n_max: usize,
        /// Any of naive, pairwise, compensated, sorted_magnitude. Defaults to all.
        #[arg(long, value_delimiter = ',', value_parser = parse_strategy)]
        strategy: Vec<Strategy>,
        #[arg(long, conflicts_with = "json")]
        csv: bool,
    },
}

#[derive(Debug, Args)]
struct BooleSumArgs {
    #[arg(long, allow_hyphen_values = true)]
    poly: String,
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    a: Rational,
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    b: Rational,
    #[arg(long)]
    n: usize,
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    rational::parse(s).map_err(|e| format!("{e}: {s:?}"))
}

fn parse_strategy(s: &str) -> Result<Strategy, String> {
    s.parse().map_err(|e: boole_core::Error| e.to_string())
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("invalid polynomial: {0}")]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Domain(#[from] boole_core::Error),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
    #[error("cannot write CSV: {0}")]
    Csv(#[from] csv::Error),
}

enum Format {
    Text,
    Json,
    Csv,
}

/// Rendered result of one subcommand.
struct Report {
    text: String,
    json: Value,
    csv: Option<String>,
    code: i32,
}

impl Report {
    fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text.clone(),
            Format::Json => format!("{:#}\n", self.json),
            Format::Csv => self.csv.clone().unwrap_or_else(|| self.text.clone()),
        }
    }
}

fn rat(r: &Rational) -> Value {
    Value::String(r.to_string())
}

fn rats(rs: &[Rational]) -> Value {
    Value::Array(rs.iter().map(rat).collect())
}

fn join(rs: &[Rational]) -> String {
    rs.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

fn polynomial_report(p: &Polynomial) -> Report {
    Report {
        text: format!("{p}\ncoefficients: [{}]\n", join(p.coefficients())),
        json: json!({ "polynomial": p.to_string(), "coefficients": rats(p.coefficients()) }),
        csv: None,
        code: EXIT_OK,
    }
}

fn grid_json(grid: &NodeGrid) -> Value {
    json!({ "a": rat(grid.offset()), "b": rat(grid.step()), "n": grid.n() })
}

/// Shortest decimal that parses back to the same binary64.
fn float_text(x: f64) -> String {
    format!("{x:?}")
}

fn record_json(r: &FloatErrorRecord) -> Value {
    json!({
        "n": r.n,
        "strategy": r.strategy.name(),
        "computed": r.computed,
        "exact": rat(&r.exact),
        "relative_error": r.relative_error,
        "error_kind": match r.error_kind { ErrorKind::Relative => "relative", ErrorKind::Absolute => "absolute" },
        "overflow": r.overflow,
        "term_magnitude_ratio": r.term_magnitude_ratio,
    })
}

fn records_csv(records: &[FloatErrorRecord]) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "n",
        "strategy",
        "computed",
        "exact",
        "relative_error",
        "term_magnitude_ratio",
    ])?;
    for r in records {
        w.write_record([
            r.n.to_string(),
            r.strategy.name().to_string(),
            float_text(r.computed),
            r.exact.to_string(),
            float_text(r.relative_error),
            float_text(r.term_magnitude_ratio),
        ])?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn execute(command: Command) -> Result<Report, CliError> {
    Ok(match command {
        Command::BooleSum(args) => {
            let p = parse_polynomial(&args.poly)?;
            let grid = NodeGrid::new(args.a, args.b, args.n)?;
            let r = boole::verify_proposition(&p, &grid)?;
            Report {
                text: format!(
                    "computed: {}\npredicted: {}\nresidual: {}\nholds: {}\n",
                    r.computed, r.predicted, r.residual, r.holds
                ),
                json: json!({
                    "computed": rat(&r.computed),
                    "predicted": rat(&r.predicted),
                    "residual": rat(&r.residual),
                    "holds": r.holds,
                    "mode": "exact",
                    "polynomial": p.to_string(),
                    "grid": grid_json(&grid),
                }),
                csv: None,
                code: if r.holds { EXIT_OK } else { EXIT_VIOLATION },
            }
        }
        Command::Classic { n } => {
            let sum = boole::boole_classic(n)?;
            let factorial = boole::factorial_int(n);
            let holds = sum == factorial;
            Report {
                text: format!("{sum}\nfactorial: {factorial}\nholds: {holds}\n"),
                json: json!({ "n": n, "sum": sum.to_string(), "factorial": factorial.to_string(), "holds": holds }),
                csv: None,
                code: if holds { EXIT_OK } else { EXIT_VIOLATION },
            }
        }
        Command::Vanishing { n, m } => {
            let from_zero = boole::vanishing_sum(n, m, IndexFrom::Zero)?;
            let from_one = boole::vanishing_sum(n, m, IndexFrom::One)?;
            let expected = if m == n {
                boole::factorial_int(n)
            } else {
                0.into()
            };
            let holds = from_zero == expected;
            Report {
                text: format!(
                    "sum (k from 0): {from_zero}\nsum (k from 1): {from_one}\nexpected: {expected}\nholds: {holds}\n"
                ),
                json: json!({
                    "n": n,
                    "m": m,
                    "sum_from_zero": from_zero.to_string(),
                    "sum_from_one": from_one.to_string(),
                    "expected": expected.to_string(),
                    "holds": holds,
                }),
                csv: None,
                code: if holds { EXIT_OK } else { EXIT_VIOLATION },
            }
        }
        Command::Diff { poly, n, h } => {
            let p = parse_polynomial(&poly)?;
            polynomial_report(&nth_delta(&p, n, &h)?)
        }
        Command::DiffTable { values, depth } => {
            let depth = depth.unwrap_or(values.len().saturating_sub(1));
            let table = difference_table(&values, depth)?;
            let text = table
                .rows()
                .iter()
                .map(|row| join(row))
                .collect::<Vec<_>>()
                .join("\n");
            Report {
                text: text + "\n",
                json: json!({ "rows": table.rows().iter().map(|r| rats(r)).collect::<Vec<_>>() }),
                csv: None,
                code: EXIT_OK,
            }
        }
        Command::Interp { xs, ys } => {
            let data = PointSet::from_columns(xs, ys)?;
            polynomial_report(&lagrange_interpolate(&data))
        }
        Command::LeadCoeff { values, a, b, n } => {
            let n = n.unwrap_or(values.len().saturating_sub(1));
            let grid = NodeGrid::new(a, b, n)?;
            let lead = leading_coeff_from_samples(&values, &grid)?;
            Report {
                text: format!("{lead}\n"),
                json: json!({ "leading_coefficient": rat(&lead), "grid": grid_json(&grid) }),
                csv: None,
                code: EXIT_OK,
            }
        }
        Command::Verify {
            max_degree,
            trials,
            seed,
            coeff_bound,
        } => {
            let r = boole::fuzz_verify(max_degree, trials, seed, coeff_bound);
            let mut text = format!(
                "trials: {}\nfailures: {}\nseed: {}\n",
                r.trials, r.failures, r.seed
            );
            for (p, g) in &r.witnesses {
                text += &format!(
                    "witness: p = {p}, a = {}, b = {}, n = {}\n",
                    g.offset(),
                    g.step(),
                    g.n()
                );
            }
            Report {
                text,
                json: json!({
                    "trials": r.trials,
                    "failures": r.failures,
                    "seed": r.seed,
                    "witnesses": r.witnesses.iter()
                        .map(|(p, g)| json!({ "polynomial": p.to_string(), "grid": grid_json(g) }))
                        .collect::<Vec<_>>(),
                }),
                csv: None,
                code: if r.failures == 0 {
                    EXIT_OK
                } else {
                    EXIT_VIOLATION
                },
            }
        }
        Command::FloatSweep {
            n_min,
            n_max,
            strategy,
            csv: _,
        } => {
            let strategies = if strategy.is_empty() {
                Strategy::ALL.to_vec()
            } else {
                strategy
            };
            let records = error_sweep(n_min, n_max, &strategies)?;
            let mut text = format!(
                "{:>4}  {:<16}  {:>24}  {:>24}  {:>24}\n",
                "n", "strategy", "computed", "relative_error", "term_magnitude_ratio"
            );
            for r in &records {
                text += &format!(
                    "{:>4}  {:<16}  {:>24}  {:>24}  {:>24}\n",
                    r.n,
                    r.strategy.name(),
                    float_text(r.computed),
                    float_text(r.relative_error),
                    float_text(r.term_magnitude_ratio)
                );
            }
            Report {
                text,
                json: json!({ "records": records.iter().map(record_json).collect::<Vec<_>>() }),
                csv: Some(records_csv(&records)?),
                code: EXIT_OK,
            }
        }
    })
}

/// Runs the program on `args` (including the program name) and returns the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let format = if cli.json {
        Format::Json
    } else if matches!(cli.command, Command::FloatSweep { csv: true, .. }) {
        Format::Csv
    } else {
        Format::Text
    };
    let report = match execute(cli.command) {
        Ok(report) => report,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let rendered = report.render(format);
    let written = match &cli.out {
        Some(path) => std::fs::write(path, rendered),
        None => out.write_all(rendered.as_bytes()),
    };
    if let Err(e) = written {
        let _ = writeln!(err, "error: {}", CliError::Io(e));
        return EXIT_USAGE;
    }
    report.code
}
