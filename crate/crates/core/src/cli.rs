//! The `dubrovnik` command line.
//!
//! [`run`] does all the work and returns the exit code and both output
//! streams, so it can be tested without spawning a process.
//!
//! ```
//! let out = dubrovnik::cli::run(["dubrovnik", "compute", "--tuple", "[1]"]);
//! assert_eq!((out.code, out.stdout.as_str()), (0, "a\n"));
//! assert_eq!(out.stderr, "engines: 3/3 agree\n");
//! ```

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::{BraidTuple, Engine, Error, Fraction, Kind, LaurentPoly2, Style, P_4_3_5};

/// Exit status for success.
pub const EXIT_OK: u8 = 0;
/// Exit status for malformed or unsupported input.
pub const EXIT_INPUT: u8 = 1;
/// Exit status when engines disagree with each other or with the fixture.
pub const EXIT_MISMATCH: u8 = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser)]
#[command(name = "dubrovnik", version, about = "Dubrovnik polynomial of rational knots and links")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the polynomial of a tuple or fraction.
    Compute(ComputeArgs),
    /// Recompute [4,3,5] on every engine and compare with the stored polynomial.
    Selftest {
        /// Plain-format polynomial to compare against instead of the built-in one.
        #[arg(long, value_name = "FILE")]
        fixture: Option<PathBuf>,
    },
}

#[derive(Args)]
#[command(group = clap::ArgGroup::new("input").required(true).args(["tuple", "fraction", "batch", "check_equiv"]))]
struct ComputeArgs {
    /// Braid-form tuple, e.g. "[4,3,5]".
    #[arg(long, allow_hyphen_values = true)]
    tuple: Option<String>,
    /// Fraction p/q with |q| <= p.
    #[arg(long, allow_hyphen_values = true)]
    fraction: Option<String>,
    /// File with one tuple or fraction per line; '#' starts a comment line.
    #[arg(long, value_name = "FILE")]
    batch: Option<PathBuf>,
    /// Test whether two fractions give the same knot or link.
    #[arg(long, num_args = 2, value_names = ["P/Q", "P'/Q'"], allow_hyphen_values = true)]
    check_equiv: Option<Vec<String>>,
    #[arg(long, value_enum, default_value_t = EngineChoice::All)]
    engine: EngineChoice,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
    /// Multiply by a^(-writhe) (knots only).
    #[arg(long)]
    normalize: bool,
    /// Use the mirror image.
    #[arg(long)]
    mirror: bool,
    /// Accept mixed-sign tuples by rewriting them through their fraction.
    #[arg(long)]
    canonicalize: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EngineChoice {
    Skein,
    Reduce,
    Closed,
    All,
}

impl EngineChoice {
    fn engines(self) -> Vec<Engine> {
        match self {
            EngineChoice::Skein => vec![Engine::Skein],
            EngineChoice::Reduce => vec![Engine::Reduce],
            EngineChoice::Closed => vec![Engine::Closed],
            EngineChoice::All => Engine::ALL.to_vec(),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Latex,
    Json,
}

/// Parses `args` (including the program name) and executes the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    Outcome { code: EXIT_OK, stdout: text, stderr: String::new() }
                }
                _ => Outcome { code: EXIT_INPUT, stdout: String::new(), stderr: text },
            };
        }
    };
    match cli.command {
        Command::Compute(args) => compute(&args),
        Command::Selftest { fixture } => selftest(fixture),
    }
}

/// Why a single computation failed.
enum Failure {
    Input(String),
    Mismatch(String),
}

impl Failure {
    fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Mismatch(m) => m,
        }
    }

    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => EXIT_INPUT,
            Failure::Mismatch(_) => EXIT_MISMATCH,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

struct Computed {
    input: String,
    tuple: BraidTuple,
    fraction: Fraction,
    engines: Vec<Engine>,
    writhe: Option<i64>,
    normalized: bool,
    poly: LaurentPoly2,
}

impl Computed {
    fn render(&self, format: Format) -> String {
        match format {
            Format::Plain => self.poly.format(Style::Plain),
            Format::Latex => self.poly.format(Style::Latex),
            Format::Json => self.json().to_string(),
        }
    }

    fn json(&self) -> Value {
        let mut v = json!({
            "input": self.input,
            "tuple": self.tuple.entries(),
            "fraction": self.fraction.to_string(),
            "kind": self.fraction.kind().to_string(),
            "engines": self.engines.iter().map(|e| e.name()).collect::<Vec<_>>(),
            "normalized": self.normalized,
            "polynomial": self.poly.to_json_value(),
        });
        if let Some(w) = self.writhe {
            v["writhe"] = json!(w);
        }
        v
    }
}

fn parse_input(text: &str) -> Result<BraidTuple, Error> {
    let text = text.trim();
    if text.starts_with('[') {
        text.parse()
    } else {
        BraidTuple::from_fraction(&text.parse()?)
    }
}

fn compute_one(input: &str, args: &ComputeArgs) -> Result<Computed, Failure> {
    let mut t = parse_input(input)?;
    if !t.is_sign_homogeneous() {
        if !args.canonicalize {
            let e = t.sign().unwrap_err();
            return Err(Failure::Input(format!("{e}; pass --canonicalize to rewrite it")));
        }
        t = t.canonicalize()?;
    }
    if args.mirror {
        t = t.mirror();
    }
    let fraction = t.fraction()?;
    let engines = args.engine.engines();
    let mut polys = Vec::with_capacity(engines.len());
    for e in &engines {
        polys.push(e.evaluate(&t)?);
    }
    if let Some(i) = polys.iter().position(|p| *p != polys[0]) {
        return Err(Failure::Mismatch(format!(
            "engines disagree on {t}: {} gives {}, {} gives {}",
            engines[0], polys[0], engines[i], polys[i]
        )));
    }
    let writhe = match fraction.kind() {
        Kind::Knot => Some(t.writhe()?),
        Kind::Link => None,
    };
    let mut poly = polys.swap_remove(0);
    if args.normalize {
        poly = t.normalized_polynomial(&poly)?;
    }
    Ok(Computed {
        input: input.trim().to_string(),
        tuple: t,
        fraction,
        engines,
        writhe,
        normalized: args.normalize,
        poly,
    })
}

fn agreement_line(engines: usize) -> String {
    if engines > 1 {
        format!("engines: {engines}/{engines} agree\n")
    } else {
        String::new()
    }
}

fn compute(args: &ComputeArgs) -> Outcome {
    if let Some(pair) = &args.check_equiv {
        return check_equiv(&pair[0], &pair[1], args);
    }
    if let Some(path) = &args.batch {
        return batch(path, args);
    }
    let input = args.tuple.as_deref().or(args.fraction.as_deref()).expect("clap requires an input");
    if args.fraction.is_some() && input.trim().starts_with('[') {
        return input_error(format!("--fraction expects p/q, got {input:?}"));
    }
    if args.tuple.is_some() && !input.trim().starts_with('[') {
        return input_error(format!("--tuple expects [b1,...,bn], got {input:?}"));
    }
    match compute_one(input, args) {
        Ok(c) => Outcome {
            code: EXIT_OK,
            stdout: format!("{}\n", c.render(args.format)),
            stderr: agreement_line(c.engines.len()),
        },
        Err(f) => {
            Outcome { code: f.code(), stdout: String::new(), stderr: format!("error: {}\n", f.message()) }
        }
    }
}

fn input_error(message: String) -> Outcome {
    Outcome { code: EXIT_INPUT, stdout: String::new(), stderr: format!("error: {message}\n") }
}

fn batch(path: &PathBuf, args: &ComputeArgs) -> Outcome {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => return input_error(format!("cannot read {}: {e}", path.display())),
    };
    let lines: Vec<&str> = text.lines().collect();
    let records: Vec<(u8, String)> = lines
        .par_iter()
        .map(|&line| {
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                return match args.format {
                    Format::Json => (EXIT_OK, json!({ "input": line, "skipped": true }).to_string()),
                    _ => (EXIT_OK, line.to_string()),
                };
            }
            match (compute_one(trimmed, args), args.format) {
                (Ok(c), Format::Json) => (EXIT_OK, c.json().to_string()),
                (Ok(c), f) => (EXIT_OK, format!("{trimmed}\t{}", c.render(f))),
                (Err(e), Format::Json) => {
                    (e.code(), json!({ "input": trimmed, "error": e.message() }).to_string())
                }
                (Err(e), _) => (e.code(), format!("{trimmed}\terror: {}", e.message())),
            }
        })
        .collect();
    let code = records.iter().map(|(c, _)| *c).max().unwrap_or(EXIT_OK);
    let mut stdout = String::new();
    for (_, r) in &records {
        stdout.push_str(r);
        stdout.push('\n');
    }
    let failed = records.iter().filter(|(c, _)| *c != EXIT_OK).count();
    let stderr =
        if failed > 0 { format!("{failed} of {} lines failed\n", lines.len()) } else { String::new() };
    Outcome { code, stdout, stderr }
}

/// A tuple for the knot `K(f)`, replacing `q` by a residue when `|q| > p`.
fn knot_tuple(f: &Fraction) -> Result<BraidTuple, Error> {
    use num_integer::Integer;
    use num_traits::Zero;
    if f.q().magnitude() <= f.p().magnitude() {
        return BraidTuple::from_fraction(f);
    }
    let mut q = f.q().mod_floor(f.p());
    if q.is_zero() {
        q = 1.into();
    }
    BraidTuple::from_fraction(&Fraction::new(f.p().clone(), q)?)
}

fn check_equiv(first: &str, second: &str, args: &ComputeArgs) -> Outcome {
    let parsed = first.parse::<Fraction>().and_then(|f1| Ok((f1, second.parse::<Fraction>()?)));
    let (f1, f2) = match parsed {
        Ok(pair) => pair,
        Err(e) => return input_error(e.to_string()),
    };
    let equivalent = f1.equivalent(&f2);
    let both_knots = f1.kind() == Kind::Knot && f2.kind() == Kind::Knot;
    let mut agree = None;
    if both_knots {
        let engine = args.engine.engines()[0];
        let normalized = |f: &Fraction| -> Result<LaurentPoly2, Error> {
            let t = knot_tuple(f)?;
            t.normalized_polynomial(&engine.evaluate(&t)?)
        };
        match (normalized(&f1), normalized(&f2)) {
            (Ok(p1), Ok(p2)) => agree = Some(p1 == p2),
            (Err(e), _) | (_, Err(e)) => return input_error(e.to_string()),
        }
    }
    // Equivalent knots must have equal invariants; anything else is a bug.
    let code = if equivalent && agree == Some(false) { EXIT_MISMATCH } else { EXIT_OK };
    let stdout = match args.format {
        Format::Json => {
            let v = json!({
                "fractions": [f1.to_string(), f2.to_string()],
                "equivalent": equivalent,
                "normalized_polynomials_agree": agree,
            });
            format!("{v}\n")
        }
        _ => {
            let verdict = if equivalent { "equivalent" } else { "not equivalent" };
            let polys = match agree {
                Some(true) => "agree",
                Some(false) => "differ",
                None => "not compared (not both knots)",
            };
            format!("{f1} and {f2}: {verdict}\nnormalized polynomials: {polys}\n")
        }
    };
    Outcome { code, stdout, stderr: String::new() }
}

fn selftest(fixture: Option<PathBuf>) -> Outcome {
    let text = match fixture {
        Some(path) => match std::fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) => return input_error(format!("cannot read {}: {e}", path.display())),
        },
        None => P_4_3_5.to_string(),
    };
    let expected: LaurentPoly2 = match text.trim().parse() {
        Ok(p) => p,
        Err(e) => return input_error(format!("fixture is not a polynomial: {e}")),
    };
    let t: BraidTuple = "[4,3,5]".parse().expect("literal tuple");
    let mut code = EXIT_OK;
    let mut stdout = String::new();
    for e in Engine::ALL {
        let line = match e.evaluate(&t) {
            Ok(p) if p == expected => format!("{e}: ok ({} terms)\n", p.len()),
            Ok(p) => {
                code = EXIT_MISMATCH;
                let diff = &p - &expected;
                format!("{e}: MISMATCH, computed minus expected = {diff}\n")
            }
            Err(err) => {
                code = EXIT_MISMATCH;
                format!("{e}: error: {err}\n")
            }
        };
        stdout.push_str(&line);
    }
    Outcome { code, stdout, stderr: String::new() }
}
