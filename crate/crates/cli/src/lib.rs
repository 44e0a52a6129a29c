//! Command-line front end for `riordan-lab`.

pub mod expr;
pub mod suites;

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use riordan_lab::alpha_beta::{alpha_expand, beta_expand, AlphaBetaExpansion, Side};
use riordan_lab::bcomp::{conv_u_beta, u_matrix};
use riordan_lab::flow::l_matrix;
use riordan_lab::format::{
    display_rational, matrix_to_csv, matrix_to_json, matrix_to_text, poly_to_json, series_to_csv, series_to_json,
    series_to_text,
};
use riordan_lab::pseudo::{b_expansion, b_from_g, BFunction};
use riordan_lab::rational::{parse_rational, to_fraction_string, Rational};
use riordan_lab::riordan::{build_exp_riordan, build_riordan};
use riordan_lab::{Poly, Render, RiordanPair, Series, TriMatrix};

use expr::{eval, parse_series, EvalError, ParseError};
use suites::{Check, Suite};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Parser, Debug)]
#[command(name = "riordan-lab", version, about = "Exact Riordan array computations")]
pub struct Cli {
    /// Truncation order N: series to x^N, matrices with N + 1 rows.
    #[arg(long, global = true, env = "RIORDAN_LAB_ORDER", default_value_t = 16)]
    pub order: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

fn rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Evaluate a series expression.
    Series {
        #[command(subcommand)]
        action: SeriesCmd,
    },
    /// Matrix of the pair (f, x g).
    Riordan {
        #[command(subcommand)]
        action: RiordanCmd,
    },
    /// B-sequence of a pseudo-involution (g, x g).
    Bseq {
        #[command(subcommand)]
        action: BseqCmd,
    },
    /// Coefficient of x^n in g^phi as a polynomial in phi.
    Bexp {
        #[command(subcommand)]
        action: BexpCmd,
    },
    /// Composition polynomial matrix <B>.
    Bcomp {
        #[command(subcommand)]
        action: BcompCmd,
    },
    /// Logarithm matrix L(g).
    Flow {
        #[command(subcommand)]
        action: FlowCmd,
    },
    /// Infinite-product exponents of x g.
    Alphabeta {
        #[command(subcommand)]
        action: AlphabetaCmd,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
    },
}

#[derive(Subcommand, Debug)]
pub enum SeriesCmd {
    Eval { expr: String },
}

#[derive(Subcommand, Debug)]
pub enum RiordanCmd {
    Build {
        #[arg(long, default_value = "1")]
        f: String,
        #[arg(long)]
        g: String,
        /// Exponential matrix n!/m! [x^n] f (x g)^m.
        #[arg(long)]
        exponential: bool,
    },
}

#[derive(Subcommand, Debug)]
pub enum BseqCmd {
    Extract {
        #[arg(long)]
        g: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum BexpCmd {
    Poly {
        #[arg(long)]
        b: String,
        #[arg(long)]
        n: usize,
        /// Evaluate at this phi instead of printing the polynomial.
        #[arg(long, value_parser = rational_arg)]
        phi: Option<Rational>,
    },
}

#[derive(Subcommand, Debug)]
pub enum BcompCmd {
    Matrix {
        #[arg(long)]
        b: String,
        /// Coefficients of u_n(beta, phi) = [x^n] g^beta instead.
        #[arg(long, value_parser = rational_arg)]
        beta: Option<Rational>,
    },
}

#[derive(Subcommand, Debug)]
pub enum FlowCmd {
    Log {
        #[arg(long)]
        g: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    Alpha,
    Beta,
}

#[derive(Subcommand, Debug)]
pub enum AlphabetaCmd {
    Expand {
        /// Normalized series x + g_2 x^2 + ...
        #[arg(long)]
        g: String,
        #[arg(long, value_enum, default_value_t = SideArg::Alpha)]
        side: SideArg,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    VerifyFailed,
    ParseError,
    DomainError,
}

impl Status {
    pub fn code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::VerifyFailed => 1,
            Status::ParseError => 2,
            Status::DomainError => 3,
        }
    }
}

#[derive(Debug)]
pub enum Failure {
    Parse { input: String, error: ParseError },
    Domain(String),
}

impl From<EvalError> for Failure {
    fn from(e: EvalError) -> Self {
        Failure::Domain(e.to_string())
    }
}

impl From<riordan_lab::Error> for Failure {
    fn from(e: riordan_lab::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

pub struct CommandResult {
    pub status: Status,
    pub payload: String,
}

fn series_arg(text: &str, order: usize) -> Result<Series<Rational>, Failure> {
    let e = parse_series(text).map_err(|error| Failure::Parse { input: text.to_string(), error })?;
    Ok(eval(&e, order)?)
}

fn render_matrix(m: &TriMatrix<Rational>, format: Format) -> String {
    match format {
        Format::Text => matrix_to_text(m),
        Format::Csv => matrix_to_csv(m),
        Format::Json => matrix_to_json(m).to_string() + "\n",
    }
}

fn render_series(s: &Series<Rational>, format: Format) -> String {
    match format {
        Format::Text => series_to_text(s),
        Format::Csv => series_to_csv(s),
        Format::Json => series_to_json(s).to_string() + "\n",
    }
}

fn render_poly(p: &Poly<Rational>, format: Format) -> String {
    match format {
        Format::Text => p.render(&["phi"]) + "\n",
        Format::Csv => p.coeffs().iter().map(to_fraction_string).collect::<Vec<_>>().join(",") + "\n",
        Format::Json => poly_to_json(p).to_string() + "\n",
    }
}

fn render_expansion(e: &AlphaBetaExpansion<Rational>, format: Format) -> String {
    let name = match e.side {
        Side::Alpha => "alpha",
        Side::Beta => "beta",
    };
    match format {
        Format::Text => e.coeffs.iter().enumerate().map(|(i, c)| format!("{name}_{} = {}\n", i + 1, display_rational(c))).collect(),
        Format::Csv => e.coeffs.iter().enumerate().map(|(i, c)| format!("{},{}\n", i + 1, to_fraction_string(c))).collect(),
        Format::Json => {
            let coeffs: Vec<Value> = e.coeffs.iter().map(|c| Value::String(to_fraction_string(c))).collect();
            json!({ "side": name, "coeffs": coeffs }).to_string() + "\n"
        }
    }
}

fn render_report(checks: &[Check], format: Format) -> String {
    match format {
        Format::Text => {
            let suite_w = checks.iter().map(|c| c.suite.len()).max().unwrap_or(5);
            let name_w = checks.iter().map(|c| c.name.len()).max().unwrap_or(5);
            let mut out = String::new();
            for c in checks {
                let status = if c.pass { "PASS" } else { "FAIL" };
                let line = format!("{:suite_w$}  {:name_w$}  {status}  {}", c.suite, c.name, c.detail);
                out.push_str(line.trim_end());
                out.push('\n');
            }
            let passed = checks.iter().filter(|c| c.pass).count();
            out.push_str(&format!("{passed}/{} checks passed\n", checks.len()));
            out
        }
        Format::Csv => {
            let mut out = String::from("suite,check,status,detail\n");
            for c in checks {
                let status = if c.pass { "pass" } else { "fail" };
                out.push_str(&format!("{},\"{}\",{status},\"{}\"\n", c.suite, c.name, c.detail));
            }
            out
        }
        Format::Json => {
            let items: Vec<Value> = checks
                .iter()
                .map(|c| json!({ "suite": c.suite, "check": c.name, "pass": c.pass, "detail": c.detail }))
                .collect();
            Value::Array(items).to_string() + "\n"
        }
    }
}

fn b_arg(text: &str, order: usize) -> Result<BFunction<Rational>, Failure> {
    Ok(BFunction::new(series_arg(text, order)?))
}

pub fn execute(cli: &Cli) -> Result<CommandResult, Failure> {
    let order = cli.order;
    let fmt = cli.format;
    let ok = |payload| Ok(CommandResult { status: Status::Ok, payload });
    match &cli.command {
        Command::Series { action: SeriesCmd::Eval { expr } } => ok(render_series(&series_arg(expr, order)?, fmt)),
        Command::Riordan { action: RiordanCmd::Build { f, g, exponential } } => {
            let pair = RiordanPair::new(series_arg(f, order)?, series_arg(g, order)?)?;
            let m = if *exponential { build_exp_riordan(&pair, order)? } else { build_riordan(&pair, order)? };
            ok(render_matrix(&m, fmt))
        }
        Command::Bseq { action: BseqCmd::Extract { g } } => {
            let b = b_from_g(&series_arg(g, order)?)?;
            ok(render_series(&b.b, fmt))
        }
        Command::Bexp { action: BexpCmd::Poly { b, n, phi } } => {
            let p = b_expansion(&b_arg(b, order.max(*n))?, *n);
            match phi {
                Some(phi) => ok(render_series(&Series::new(vec![p.eval(phi)]), fmt)),
                None => ok(render_poly(&p, fmt)),
            }
        }
        Command::Bcomp { action: BcompCmd::Matrix { b, beta } } => {
            let b = b_arg(b, order)?;
            let m = match beta {
                None => u_matrix(&b, order),
                Some(beta) => {
                    let rows: Vec<Poly<Rational>> = (0..=order).map(|n| conv_u_beta(&b, n).map(|c| c.eval(beta))).collect();
                    TriMatrix::from_fn(order + 1, |n, m| rows[n].coeff(m))
                }
            };
            ok(render_matrix(&m, fmt))
        }
        Command::Flow { action: FlowCmd::Log { g } } => ok(render_matrix(&l_matrix(&series_arg(g, order + 1)?, order)?, fmt)),
        Command::Alphabeta { action: AlphabetaCmd::Expand { g, side } } => {
            let g = series_arg(g, order)?;
            let e = match side {
                SideArg::Alpha => alpha_expand(&g)?,
                SideArg::Beta => beta_expand(&g)?,
            };
            ok(render_expansion(&e, fmt))
        }
        Command::Verify { suite } => {
            let checks = suites::run(*suite, order);
            let status = if checks.iter().all(|c| c.pass) { Status::Ok } else { Status::VerifyFailed };
            Ok(CommandResult { status, payload: render_report(&checks, fmt) })
        }
    }
}

fn caret(input: &str, offset: usize) -> String {
    let col = input[..offset.min(input.len())].chars().count();
    format!("  {input}\n  {}^\n", " ".repeat(col))
}

/// Parses `args` (program name first), runs the command and writes to the
/// given streams. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { Status::ParseError.code() } else { Status::Ok.code() };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    match execute(&cli) {
        Ok(result) => {
            let _ = write!(out, "{}", result.payload);
            result.status.code()
        }
        Err(Failure::Parse { input, error }) => {
            let _ = write!(err, "error: {error}\n{}", caret(&input, error.offset));
            Status::ParseError.code()
        }
        Err(Failure::Domain(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            Status::DomainError.code()
        }
    }
}
