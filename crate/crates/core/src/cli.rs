//! The `kcontent` command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
//! 3 domain violation (for example more columns than rows).

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::content::{projection_contents, pythagorean_check};
use crate::error::Error;
use crate::exterior::compound;
use crate::geometry::{de_gua_check, immersion_content, Shape, Simplex};
use crate::matrix::{AnyMatrix, Matrix};
use crate::scalar::{format_f64, Exact, Float, Mode, Scalar};
use crate::subsets::k_subsets;
use crate::text::{parse_any, ModeChoice};
use crate::verify::{run_suite, Suite, DE_GUA_TOLERANCE};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Auto,
    Exact,
    Float,
}

impl From<ModeArg> for ModeChoice {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Auto => ModeChoice::Auto,
            ModeArg::Exact => ModeChoice::Exact,
            ModeArg::Float => ModeChoice::Float,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "kcontent",
    version,
    about = "k-dimensional content, compound matrices and the sum-of-squared-minors identity"
)]
pub struct Cli {
    /// Arithmetic: exact rationals, binary64 floats, or pick from the input.
    #[arg(long, value_enum, default_value_t = ModeArg::Auto, global = true)]
    pub mode: ModeArg,

    /// Emit one JSON object instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Only print the summary lines.
    #[arg(short, long, global = true)]
    pub quiet: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check det(AᵗA) against the sum of squared maximal row minors.
    Content { file: PathBuf },
    /// List the minors of a matrix (maximal row minors by default).
    Minors {
        file: PathBuf,
        #[arg(long)]
        grade: Option<usize>,
    },
    /// Print the i-th compound matrix.
    Compound {
        file: PathBuf,
        #[arg(long)]
        grade: usize,
    },
    /// Print the Gram matrix AᵗA and its determinant.
    Gram { file: PathBuf },
    /// Run a seeded randomized verification suite.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 100)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Integrate √det(g) over a built-in curve or surface.
    Measure {
        shape: String,
        #[arg(long, default_value_t = 256, value_parser = clap::value_parser!(u64).range(1..))]
        resolution: u64,
    },
    /// Content of the simplex whose vertices are the rows of FILE.
    Simplex { file: PathBuf },
    /// Both sides of de Gua's theorem for legs a, b, c.
    Degua { a: String, b: String, c: String },
}

/// Failure of one command, already mapped to its exit code.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: if e.is_usage() {
                EXIT_USAGE
            } else {
                EXIT_DOMAIN
            },
            message: e.to_string(),
        }
    }
}

type CmdResult = std::result::Result<i32, Failure>;

struct Ctx<'a> {
    mode: ModeChoice,
    json: bool,
    quiet: bool,
    out: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn emit_json(&mut self, v: &Value) {
        let _ = writeln!(
            self.out,
            "{}",
            serde_json::to_string_pretty(v).expect("json")
        );
    }

    fn emit_text(&mut self, s: &str) {
        let _ = self.out.write_all(s.as_bytes());
    }
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit code.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return code;
        }
    };
    let mut ctx = Ctx {
        mode: cli.mode.into(),
        json: cli.json,
        quiet: cli.quiet,
        out,
    };
    match dispatch(cli.command, &mut ctx) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

/// Entry point for the binary.
pub fn main() -> i32 {
    let stdout = io::stdout();
    let stderr = io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

fn dispatch(cmd: Command, ctx: &mut Ctx<'_>) -> CmdResult {
    match cmd {
        Command::Content { file } => match load(&file, ctx.mode)? {
            AnyMatrix::Exact(m) => cmd_content(&m, ctx),
            AnyMatrix::Float(m) => cmd_content(&m, ctx),
        },
        Command::Minors { file, grade } => match load(&file, ctx.mode)? {
            AnyMatrix::Exact(m) => cmd_minors(&m, grade, ctx),
            AnyMatrix::Float(m) => cmd_minors(&m, grade, ctx),
        },
        Command::Compound { file, grade } => match load(&file, ctx.mode)? {
            AnyMatrix::Exact(m) => cmd_compound(&m, grade, ctx),
            AnyMatrix::Float(m) => cmd_compound(&m, grade, ctx),
        },
        Command::Gram { file } => match load(&file, ctx.mode)? {
            AnyMatrix::Exact(m) => cmd_gram(&m, ctx),
            AnyMatrix::Float(m) => cmd_gram(&m, ctx),
        },
        Command::Verify {
            suite,
            trials,
            seed,
        } => cmd_verify(&suite, trials, seed, ctx),
        Command::Measure { shape, resolution } => cmd_measure(&shape, resolution as usize, ctx),
        Command::Simplex { file } => match load(&file, ctx.mode)? {
            AnyMatrix::Exact(m) => cmd_simplex(&m, ctx),
            AnyMatrix::Float(m) => cmd_simplex(&m, ctx),
        },
        Command::Degua { a, b, c } => {
            let args = [a.as_str(), b.as_str(), c.as_str()];
            match ctx.mode.resolve(args) {
                Mode::Exact => cmd_degua::<Exact>(args, ctx),
                Mode::Float => cmd_degua::<Float>(args, ctx),
            }
        }
    }
}

fn load(path: &PathBuf, mode: ModeChoice) -> Result<AnyMatrix, Failure> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map(|_| s)
    } else {
        fs::read_to_string(path)
    }
    .map_err(|e| Failure {
        code: EXIT_USAGE,
        message: format!("{}: {e}", path.display()),
    })?;
    parse_any(&text, mode).map_err(|e| Failure {
        code: EXIT_USAGE,
        message: format!("{}: {e}", path.display()),
    })
}

fn cmd_content<T: Scalar>(a: &Matrix<T>, ctx: &mut Ctx<'_>) -> CmdResult {
    let report = pythagorean_check(a)?;
    if ctx.json {
        let mut v = report.to_json();
        v["command"] = json!("content");
        if ctx.quiet {
            v.as_object_mut().expect("object").remove("minors");
        }
        ctx.emit_json(&v);
    } else if ctx.quiet {
        let text = report.to_text();
        let summary: String = text
            .lines()
            .filter(|l| !l.starts_with("minor "))
            .map(|l| format!("{l}\n"))
            .collect();
        ctx.emit_text(&summary);
    } else {
        ctx.emit_text(&report.to_text());
    }
    Ok(if report.is_verified() {
        EXIT_OK
    } else {
        EXIT_FAILED
    })
}

fn cmd_minors<T: Scalar>(a: &Matrix<T>, grade: Option<usize>, ctx: &mut Ctx<'_>) -> CmdResult {
    let grade = grade.unwrap_or(a.cols());
    let mut records = Vec::new();
    let mut text = String::new();
    if grade == a.cols() {
        for p in projection_contents(a)? {
            text.push_str(&format!(
                "{} {} {}\n",
                p.subset,
                p.signed.render(),
                p.absolute.render()
            ));
            records.push(json!({
                "rows": p.subset.to_string(),
                "value": p.signed.render(),
                "absolute": p.absolute.render(),
            }));
        }
    } else {
        let c = compound(a, grade)?;
        for rows in k_subsets(a.rows(), grade)? {
            for cols in k_subsets(a.cols(), grade)? {
                let v = c.entry(&rows, &cols);
                text.push_str(&format!("{rows} {cols} {}\n", v.render()));
                records.push(json!({
                    "rows": rows.to_string(),
                    "cols": cols.to_string(),
                    "value": v.render(),
                    "absolute": v.abs().render(),
                }));
            }
        }
    }
    if ctx.json {
        ctx.emit_json(&json!({
            "command": "minors",
            "mode": T::MODE,
            "grade": grade,
            "minors": records,
        }));
    } else {
        ctx.emit_text(&text);
    }
    Ok(EXIT_OK)
}

fn cmd_compound<T: Scalar>(a: &Matrix<T>, grade: usize, ctx: &mut Ctx<'_>) -> CmdResult {
    let c = compound(a, grade)?;
    if ctx.json {
        let m = c.matrix();
        let entries: Vec<Vec<String>> = (0..m.rows())
            .map(|i| m.row(i).iter().map(Scalar::render).collect())
            .collect();
        let names = |n| -> Vec<String> {
            k_subsets(n, grade)
                .expect("grade checked")
                .iter()
                .map(ToString::to_string)
                .collect()
        };
        ctx.emit_json(&json!({
            "command": "compound",
            "mode": T::MODE,
            "n": a.rows(),
            "k": a.cols(),
            "grade": grade,
            "rows": names(a.rows()),
            "cols": names(a.cols()),
            "entries": entries,
        }));
    } else {
        ctx.emit_text(&c.to_string());
    }
    Ok(EXIT_OK)
}

fn cmd_gram<T: Scalar>(a: &Matrix<T>, ctx: &mut Ctx<'_>) -> CmdResult {
    let g = a.gram();
    let det = g.determinant();
    let content = format_f64(det.to_f64().max(0.0).sqrt());
    let leading: Vec<String> = g
        .leading_principal_minors()
        .iter()
        .map(Scalar::render)
        .collect();
    if ctx.json {
        let m = g.as_matrix();
        let entries: Vec<Vec<String>> = (0..m.rows())
            .map(|i| m.row(i).iter().map(Scalar::render).collect())
            .collect();
        ctx.emit_json(&json!({
            "command": "gram",
            "mode": T::MODE,
            "gram": entries,
            "det": det.render(),
            "leading_principal_minors": leading,
            "content": content,
        }));
    } else {
        ctx.emit_text(&format!(
            "# gram k={}\n{}# det {}\n# leading_principal_minors {}\n# content {}\n",
            g.dim(),
            g.as_matrix(),
            det.render(),
            leading.join(" "),
            content
        ));
    }
    Ok(EXIT_OK)
}

fn cmd_verify(suite: &str, trials: u64, seed: u64, ctx: &mut Ctx<'_>) -> CmdResult {
    let suite: Suite = suite.parse().map_err(|e: Error| Failure {
        code: EXIT_USAGE,
        message: e.to_string(),
    })?;
    let outcome = run_suite(suite, trials, seed);
    let repro = |s: u64| format!("kcontent verify --suite {suite} --trials 1 --seed {s}");
    if ctx.json {
        let failures: Vec<Value> = outcome
            .failures
            .iter()
            .map(|f| {
                json!({
                    "trial": f.trial,
                    "seed": f.seed,
                    "detail": f.detail,
                    "reproduce": repro(f.seed),
                })
            })
            .collect();
        ctx.emit_json(&json!({
            "command": "verify",
            "suite": suite,
            "seed": seed,
            "trials": trials,
            "passed": outcome.passed,
            "verified": outcome.all_passed(),
            "failures": failures,
        }));
    } else {
        let mut text = format!(
            "suite {suite}: {}/{} passed (seed {seed})\n",
            outcome.passed, outcome.trials
        );
        for f in &outcome.failures {
            text.push_str(&format!(
                "FAIL trial {}: {}\n  reproduce: {}\n",
                f.trial,
                f.detail,
                repro(f.seed)
            ));
        }
        ctx.emit_text(&text);
    }
    Ok(if outcome.all_passed() {
        EXIT_OK
    } else {
        EXIT_FAILED
    })
}

fn cmd_measure(spec: &str, resolution: usize, ctx: &mut Ctx<'_>) -> CmdResult {
    let shape = Shape::parse(spec)?;
    let value = immersion_content(&shape.immersion(resolution)?)?;
    let analytic = shape.analytic_content();
    let rel = analytic.map(|a| (value - a).abs() / a.abs());
    if ctx.json {
        ctx.emit_json(&json!({
            "command": "measure",
            "mode": Mode::Float,
            "shape": shape.to_string(),
            "resolution": resolution,
            "content": format_f64(value),
            "analytic": analytic.map(format_f64),
            "relative_error": rel.map(format_f64),
        }));
    } else {
        let mut text = format!(
            "shape {shape}\nresolution {resolution}\ncontent {}\n",
            format_f64(value)
        );
        if let (Some(a), Some(r)) = (analytic, rel) {
            text.push_str(&format!(
                "analytic {}\nrelative_error {}\n",
                format_f64(a),
                format_f64(r)
            ));
        }
        ctx.emit_text(&text);
    }
    Ok(EXIT_OK)
}

fn cmd_simplex<T: Scalar>(vertices: &Matrix<T>, ctx: &mut Ctx<'_>) -> CmdResult {
    let s = Simplex::from_rows(vertices)?;
    let sq = s.content_squared();
    let content = format_f64(s.content());
    if ctx.json {
        ctx.emit_json(&json!({
            "command": "simplex",
            "mode": T::MODE,
            "dimension": s.dimension(),
            "ambient": s.ambient(),
            "content_sq": sq.render(),
            "content": content,
        }));
    } else {
        ctx.emit_text(&format!(
            "mode {}\ndimension {}\nambient {}\ncontent_sq {}\ncontent {content}\n",
            T::MODE,
            s.dimension(),
            s.ambient(),
            sq.render()
        ));
    }
    Ok(EXIT_OK)
}

fn cmd_degua<T: Scalar>(args: [&str; 3], ctx: &mut Ctx<'_>) -> CmdResult {
    let mut legs = Vec::with_capacity(3);
    for a in args {
        legs.push(T::parse_literal(a).map_err(|e| Failure {
            code: EXIT_USAGE,
            message: format!("`{a}`: {e}"),
        })?);
    }
    let c = legs.pop().expect("three legs");
    let b = legs.pop().expect("three legs");
    let a = legs.pop().expect("three legs");
    let r = de_gua_check(a, b, c)?;
    let verified = match T::MODE {
        Mode::Exact => r.residual.is_zero(),
        Mode::Float => r.relative_residual <= DE_GUA_TOLERANCE,
    };
    if ctx.json {
        ctx.emit_json(&json!({
            "command": "degua",
            "mode": T::MODE,
            "leg_sq_sum": r.leg_sq_sum.render(),
            "hyp_sq": r.hyp_sq.render(),
            "residual": r.residual.render(),
            "relative_residual": format_f64(r.relative_residual),
            "verified": verified,
        }));
    } else {
        ctx.emit_text(&format!(
            "mode {}\nleg_sq_sum {}\nhyp_sq {}\nresidual {}\nrelative_residual {}\n{} = {}\n",
            T::MODE,
            r.leg_sq_sum.render(),
            r.hyp_sq.render(),
            r.residual.render(),
            format_f64(r.relative_residual),
            r.hyp_sq.render(),
            r.leg_sq_sum.render(),
        ));
    }
    Ok(if verified { EXIT_OK } else { EXIT_FAILED })
}
