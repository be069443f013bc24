//! `glmirror`: command-line front end for superpotentials, polytopes, tropical critical
//! points, ideal fillings, Toeplitz witnesses and the verification battery.
//!
//! Every subcommand prints one JSON document to stdout carrying a `schema_version` field.
//! Exit codes: 0 success, 1 verification failure, 2 usage error, 3 non-generic or
//! degenerate input.

use std::io::{IsTerminal, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use glmirror::charts::{ideal_superpotential, ideal_superpotential_i0, string_superpotential};
use glmirror::error::MirrorError;
use glmirror::exact::{parse_rational, render_rational, Rational};
use glmirror::fillings::{filling_for_weight, tropical_critical_point, tropical_weight};
use glmirror::polytopes::{
    contains_for_word, gt_pattern_count, pl_transfer, polytope_hrep, string_pl_transfer, PolytopeChart,
};
use glmirror::symbolic::SubFreeExpr;
use glmirror::toeplitz::{sample_witnesses, theorem_check, TheoremReport};
use glmirror::verify::{run_suite, Suite};
use glmirror::weyl::{positive_root_sequence, weyl_dimension, DominantWeight, ReducedWord};
use serde_json::{json, Value};

const SCHEMA_VERSION: u32 = 1;

#[derive(Parser, Debug)]
#[command(name = "glmirror", version, about = "Mirror superpotentials of GL_n flag varieties")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CoordChart {
    String,
    Ideal,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the superpotential in a toric chart.
    Superpotential {
        /// Rank n of GL_n.
        #[arg(long)]
        n: usize,
        /// Chart.
        #[arg(long, value_enum, default_value = "ideal")]
        chart: CoordChart,
        /// Reduced word of the longest element, e.g. 1,2,1 (defaults to i_0).
        #[arg(long)]
        word: Option<String>,
    },
    /// Superpotential polytope of a dominant weight.
    Polytope {
        /// Dominant weight as comma-separated rationals, e.g. 2,1,-1.
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        /// Chart: string, ideal or gt.
        #[arg(long, default_value = "string")]
        chart: String,
        /// Include vertices.
        #[arg(long)]
        vertices: bool,
        /// Include the lattice point count.
        #[arg(long)]
        lattice: bool,
        /// Write vertices and lattice points to a CSV file.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Tropical critical point in the ideal coordinates of a reduced word.
    CriticalPoint {
        /// Dominant weight.
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        /// Reduced word (defaults to i_0).
        #[arg(long)]
        word: Option<String>,
    },
    /// The ideal filling of a dominant weight.
    IdealFilling {
        /// Dominant weight.
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// Transfer a tropical point between the charts of two reduced words.
    Transfer {
        /// Dominant weight.
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        /// Source reduced word.
        #[arg(long)]
        from_word: String,
        /// Target reduced word.
        #[arg(long)]
        to_word: String,
        /// Point as comma-separated rationals in the source coordinates.
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        /// Coordinate family.
        #[arg(long, value_enum, default_value = "ideal")]
        chart: CoordChart,
    },
    /// Sample Toeplitz witnesses and check their valuations.
    Toeplitz {
        /// Rank n (3 to 5).
        #[arg(long)]
        n: usize,
        /// Number of witnesses.
        #[arg(long, default_value_t = 5)]
        samples: usize,
        /// Random seed.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run a verification suite.
    Verify {
        /// minors, charts, quiver, fillings, polytopes, toeplitz or all.
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// Gelfand-Tsetlin pattern count of a dominant weight.
    Gt {
        /// Dominant weight.
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
}

/// Failure carrying its exit code.
#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl From<MirrorError> for Failure {
    fn from(e: MirrorError) -> Self {
        let code = match e {
            MirrorError::Parse(_)
            | MirrorError::Domain(_)
            | MirrorError::IndexOutOfRange(_)
            | MirrorError::UnboundVariable(_) => 2,
            MirrorError::NonGeneric(_) | MirrorError::SizeLimit(_) | MirrorError::Unsupported(_) => 3,
            MirrorError::Integrity(_) => 1,
        };
        Failure { code, message: e.to_string() }
    }
}

/// Successful payload, with a flag for verification failures.
struct Output {
    payload: Value,
    failed: bool,
}

impl Output {
    fn ok(payload: Value) -> Self {
        Output { payload, failed: false }
    }
}

fn parse_list<T>(s: &str, item: impl Fn(&str) -> Result<T, MirrorError>) -> Result<Vec<T>, MirrorError> {
    s.split(',').map(|x| item(x.trim())).collect()
}

fn parse_word(s: &str) -> Result<ReducedWord, MirrorError> {
    let letters = parse_list(s, |x| x.parse::<usize>().map_err(|e| MirrorError::Parse(format!("word letter {x:?}: {e}"))))?;
    let len = letters.len();
    let n = (2..=64).find(|n| n * (n - 1) / 2 == len).ok_or_else(|| {
        MirrorError::Domain(format!("a reduced word of the longest element has length n(n-1)/2, got {len}"))
    })?;
    ReducedWord::new(n, letters)
}

fn parse_point(s: &str) -> Result<Vec<Rational>, MirrorError> {
    parse_list(s, parse_rational)
}

fn parse_weight(s: &str) -> Result<DominantWeight, MirrorError> {
    s.parse()
}

fn rationals(v: &[Rational]) -> Value {
    v.iter().map(render_rational).collect::<Vec<_>>().into()
}

fn with_schema(mut v: Value) -> Value {
    if let Value::Object(map) = &mut v {
        map.insert("schema_version".into(), SCHEMA_VERSION.into());
    }
    v
}

fn superpotential_json(w: &SubFreeExpr) -> Result<Value, MirrorError> {
    let mut terms: Vec<String> = w.monomial_terms()?.iter().map(|m| m.render()).collect();
    terms.sort();
    Ok(json!({ "superpotential": w.render_canonical(), "terms": terms }))
}

fn superpotential(n: usize, chart: CoordChart, word: Option<&str>) -> Result<Output, Failure> {
    if !(2..=6).contains(&n) {
        return Err(MirrorError::SizeLimit(format!("superpotential supports 2 <= n <= 6, got {n}")).into());
    }
    let word = match word {
        Some(s) => {
            let w = parse_word(s)?;
            if w.n() != n {
                return Err(MirrorError::Domain(format!("word is for n = {}, not {n}", w.n())).into());
            }
            Some(w)
        }
        None => None,
    };
    let i0 = ReducedWord::i0(n);
    let (w, expr) = match (chart, &word) {
        (CoordChart::String, w) => {
            let w = w.clone().unwrap_or(i0);
            let e = string_superpotential(&w)?;
            (w, e)
        }
        (CoordChart::Ideal, None) => (i0, ideal_superpotential_i0(n)?),
        (CoordChart::Ideal, Some(w)) => (w.clone(), ideal_superpotential(w)?),
    };
    let mut v = superpotential_json(&expr)?;
    v["n"] = n.into();
    v["chart"] = match chart {
        CoordChart::String => "string",
        CoordChart::Ideal => "ideal",
    }
    .into();
    v["word"] = w.letters().into();
    Ok(Output::ok(v))
}

fn write_csv(path: &PathBuf, vars: &[String], vertices: &[Vec<Rational>], lattice: &[Vec<i64>]) -> Result<(), Failure> {
    let io = |e: csv::Error| Failure { code: 2, message: format!("cannot write {}: {e}", path.display()) };
    let mut w = csv::Writer::from_path(path).map_err(io)?;
    let header: Vec<&str> = std::iter::once("kind").chain(vars.iter().map(String::as_str)).collect();
    w.write_record(&header).map_err(io)?;
    for v in vertices {
        w.write_record(std::iter::once("vertex".to_string()).chain(v.iter().map(render_rational))).map_err(io)?;
    }
    for p in lattice {
        w.write_record(std::iter::once("lattice".to_string()).chain(p.iter().map(i64::to_string))).map_err(io)?;
    }
    w.flush().map_err(|e| Failure { code: 2, message: format!("cannot write {}: {e}", path.display()) })
}

fn polytope(lambda: &str, chart: &str, vertices: bool, lattice: bool, csv: Option<&PathBuf>) -> Result<Output, Failure> {
    let lam = parse_weight(lambda)?;
    let chart: PolytopeChart = chart.parse()?;
    let p = polytope_hrep(chart, &lam)?;
    let mut v = p.to_json(vertices, lattice)?;
    if let Some(path) = csv {
        let vars: Vec<String> = p.vars().iter().map(|x| x.to_string()).collect();
        let verts = if vertices || !lattice { p.vertices()? } else { Vec::new() };
        let points = if lattice { p.lattice_points()? } else { Vec::new() };
        write_csv(path, &vars, &verts, &points)?;
        v["csv"] = path.display().to_string().into();
    }
    Ok(Output::ok(v))
}

fn critical_point(lambda: &str, word: Option<&str>) -> Result<Output, Failure> {
    let lam = parse_weight(lambda)?;
    let w = match word {
        Some(s) => parse_word(s)?,
        None => ReducedWord::i0(lam.n()),
    };
    if w.n() != lam.n() {
        return Err(MirrorError::Domain(format!("word is for n = {}, weight has {} entries", w.n(), lam.n())).into());
    }
    let mu = tropical_critical_point(&lam, &w)?;
    let positional: Vec<Rational> = positive_root_sequence(&w).iter().map(|r| mu[r].clone()).collect();
    let point: serde_json::Map<String, Value> = mu.iter().map(|(r, x)| (r.to_string(), render_rational(x).into())).collect();
    Ok(Output::ok(json!({
        "lambda": rationals(lam.components()),
        "word": w.letters(),
        "point": point,
        "coordinates": rationals(&positional),
        "weight": rationals(&tropical_weight(&lam, &mu)?),
        "ell": render_rational(&lam.ell()),
    })))
}

fn ideal_filling(lambda: &str) -> Result<Output, Failure> {
    let lam = parse_weight(lambda)?;
    let f = filling_for_weight(&lam)?;
    Ok(Output::ok(json!({ "filling": f.to_json(), "ell": render_rational(&lam.ell()) })))
}

fn transfer(lambda: &str, from: &str, to: &str, point: &str, chart: CoordChart) -> Result<Output, Failure> {
    let lam = parse_weight(lambda)?;
    let (from, to) = (parse_word(from)?, parse_word(to)?);
    if from.n() != lam.n() || to.n() != lam.n() {
        return Err(MirrorError::Domain("words and weight must have the same rank".into()).into());
    }
    let x = parse_point(point)?;
    let (image, chart_name, pchart) = match chart {
        CoordChart::Ideal => (pl_transfer(&x, &from, &to)?, "ideal", PolytopeChart::Ideal),
        CoordChart::String => (string_pl_transfer(&x, &from, &to)?, "string", PolytopeChart::String),
    };
    Ok(Output::ok(json!({
        "chart": chart_name,
        "lambda": rationals(lam.components()),
        "from_word": from.letters(),
        "to_word": to.letters(),
        "point": rationals(&x),
        "image": rationals(&image),
        "in_polytope": contains_for_word(pchart, &to, &lam, &image)?,
    })))
}

fn toeplitz(n: usize, samples: usize, seed: u64) -> Result<Output, Failure> {
    let witnesses = sample_witnesses(n, samples, seed)?;
    let mut failed = false;
    let items: Vec<Value> = witnesses
        .iter()
        .map(|w| {
            let mut j = w.to_json();
            j["theorem"] = match theorem_check(w) {
                TheoremReport::Checked { filling, valid } => {
                    failed |= !valid;
                    json!({ "status": "checked", "valid": valid, "valuations": filling.to_json() })
                }
                TheoremReport::Skipped { reason } => json!({ "status": "skipped", "reason": reason }),
            };
            j
        })
        .collect();
    Ok(Output { payload: json!({ "n": n, "seed": seed, "witnesses": items }), failed })
}

fn verify(suite: &str) -> Result<Output, Failure> {
    let suite: Suite = suite.parse()?;
    let results = run_suite(suite);
    let color = std::env::var_os("NO_COLOR").is_none() && std::io::stderr().is_terminal();
    let mut err = std::io::stderr().lock();
    for r in &results {
        let line = r.to_string();
        let _ = match (color, r.passed) {
            (true, true) => writeln!(err, "\x1b[32m{line}\x1b[0m"),
            (true, false) => writeln!(err, "\x1b[31m{line}\x1b[0m"),
            _ => writeln!(err, "{line}"),
        };
    }
    let failed = results.iter().any(|r| !r.passed);
    Ok(Output {
        payload: json!({
            "suite": suite.to_string(),
            "passed": !failed,
            "results": results.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
        }),
        failed,
    })
}

fn gt(lambda: &str) -> Result<Output, Failure> {
    let lam = parse_weight(lambda)?;
    Ok(Output::ok(json!({
        "lambda": rationals(lam.components()),
        "pattern_count": gt_pattern_count(&lam)?.to_string(),
        "weyl_dimension": weyl_dimension(&lam)?.to_string(),
    })))
}

fn dispatch(cmd: &Command) -> Result<Output, Failure> {
    match cmd {
        Command::Superpotential { n, chart, word } => superpotential(*n, *chart, word.as_deref()),
        Command::Polytope { lambda, chart, vertices, lattice, csv } => {
            polytope(lambda, chart, *vertices, *lattice, csv.as_ref())
        }
        Command::CriticalPoint { lambda, word } => critical_point(lambda, word.as_deref()),
        Command::IdealFilling { lambda } => ideal_filling(lambda),
        Command::Transfer { lambda, from_word, to_word, point, chart } => {
            transfer(lambda, from_word, to_word, point, *chart)
        }
        Command::Toeplitz { n, samples, seed } => toeplitz(*n, *samples, *seed),
        Command::Verify { suite } => verify(suite),
        Command::Gt { lambda } => gt(lambda),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match dispatch(&cli.command) {
        Ok(out) => {
            let _ = writeln!(std::io::stdout().lock(), "{}", with_schema(out.payload));
            ExitCode::from(if out.failed { 1 } else { 0 })
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
