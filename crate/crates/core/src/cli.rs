//! Command-line front end. Data goes to the output stream (or `--output`),
//! diagnostics to the error stream. Exit codes: 0 success, 1 a check failed,
//! 2 usage error.

use std::io::Write;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::json;

use crate::acceptance;
use crate::error::{Error, Result};
use crate::facschur::{fac_schur_det, fac_schur_skew, schur, schur_tableau, SeqSpec};
use crate::lrcoef::{
    c_hh, c_recurrence, c_tableau, classical_lr_fits, classical_lr_lattice, f_hook,
    f_tableau_within, Engine, LRResult, Recurrence,
};
use crate::oracle::{product_expand, product_expand_with, Oracle};
use crate::ring::{Family, MultiPoly, Rational, Specialization, VarRef};
use crate::shapes::{dim_skew, partitions_in_box, Partition, SkewShape};
use crate::tableaux::ssyt_count;
use crate::verify::{run_suite, RunConfig, Suite, DEFAULT_POINTS, DEFAULT_SEED};

pub const SCHEMA: u32 = 1;
pub const SEED_VAR: &str = "FACLR_SEED";
const GUARD_LIMIT: u64 = 10_000_000;

#[derive(Parser, Debug)]
#[command(
    name = "faclr",
    version,
    about = "Factorial Schur polynomials and their product coefficients"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classical Schur polynomial s_λ(x₁..x_n).
    Schur(SchurArgs),
    /// Factorial Schur polynomial s_θ(x|a), θ possibly skew.
    Facschur(FacschurArgs),
    /// One coefficient c^ν_{θμ}(a,b).
    Lrcoef(LrcoefArgs),
    /// Coefficients for every triple in a box.
    Table(TableArgs),
    /// Run identity suites.
    Verify(VerifyArgs),
    /// Time the engines on a seeded workload.
    Bench(BenchArgs),
    /// Run the acceptance criteria.
    Selftest(OutputArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args, Debug)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write data here instead of standard output.
    #[arg(long)]
    output: Option<std::path::PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Route {
    Det,
    Tableau,
}

#[derive(Args, Debug)]
struct SchurArgs {
    #[arg(long, value_parser = parse_partition)]
    lambda: Partition,
    #[arg(long, default_value_t = 3)]
    n: usize,
    #[arg(long, value_enum, default_value_t = Route::Det)]
    route: Route,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args, Debug)]
struct FacschurArgs {
    #[arg(long, value_parser = parse_skew)]
    lambda: SkewShape,
    #[arg(long, default_value_t = 3)]
    n: usize,
    /// symbolic, shifted, zero, or a comma list of values a₁,a₂,…
    #[arg(long, default_value = "symbolic")]
    a: String,
    #[arg(long, value_enum, default_value_t = Route::Tableau)]
    route: Route,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args, Debug)]
struct LrcoefArgs {
    #[arg(long, value_parser = parse_skew)]
    theta: SkewShape,
    #[arg(long, value_parser = parse_partition)]
    mu: Partition,
    #[arg(long, value_parser = parse_partition)]
    nu: Partition,
    #[arg(long, default_value_t = 3)]
    n: usize,
    #[arg(long, value_enum, default_value_t = EngineArg::Tableau)]
    engine: EngineArg,
    #[arg(long, default_value = "symbolic")]
    a: String,
    #[arg(long, default_value = "symbolic")]
    b: String,
    /// Allow enumerations beyond the desk-scale limit.
    #[arg(long)]
    force: bool,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum EngineArg {
    Tableau,
    Recurrence,
    Hook,
    Oracle,
    Classical,
}

impl From<EngineArg> for Engine {
    fn from(e: EngineArg) -> Engine {
        match e {
            EngineArg::Tableau => Engine::Tableau,
            EngineArg::Recurrence => Engine::Recurrence,
            EngineArg::Hook => Engine::Hook,
            EngineArg::Oracle => Engine::Oracle,
            EngineArg::Classical => Engine::Classical,
        }
    }
}

#[derive(Args, Debug)]
#[group(id = "kind", multiple = false)]
struct TableKind {
    /// f^ν_{λμ} with the four-engine agreement column (default).
    #[arg(long)]
    fs: bool,
    /// Classical c^ν_{λμ} by both counting rules.
    #[arg(long)]
    classical: bool,
    /// Symbolic c^ν_{λμ}(a,b), tableau sum checked against the recurrence.
    #[arg(long)]
    symbolic: bool,
}

#[derive(Args, Debug)]
struct TableArgs {
    #[command(flatten)]
    kind: TableKind,
    #[arg(long = "box", value_parser = parse_box, default_value = "2x2")]
    bbox: (usize, usize),
    #[arg(long, default_value_t = 2)]
    n: usize,
    #[arg(long)]
    jobs: Option<usize>,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// One suite name, or `all`.
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long = "box", value_parser = parse_box, default_value = "3x3")]
    bbox: (usize, usize),
    #[arg(long, default_value_t = 3)]
    n: usize,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, default_value_t = DEFAULT_POINTS)]
    points: usize,
    #[arg(long)]
    jobs: Option<usize>,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args, Debug)]
struct BenchArgs {
    #[arg(long = "box", value_parser = parse_box, default_value = "3x3")]
    bbox: (usize, usize),
    #[arg(long, default_value_t = 3)]
    n: usize,
    #[arg(long)]
    seed: Option<u64>,
    /// Number of (θ, μ, ν) triples drawn from the box.
    #[arg(long, default_value_t = 20)]
    samples: usize,
    #[arg(long, value_delimiter = ',', default_value = "tableau,recurrence")]
    engines: Vec<EngineArg>,
    #[arg(long)]
    jobs: Option<usize>,
    #[command(flatten)]
    out: OutputArgs,
}

fn parse_partition(s: &str) -> std::result::Result<Partition, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_skew(s: &str) -> std::result::Result<SkewShape, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_box(s: &str) -> std::result::Result<(usize, usize), String> {
    let (r, c) = s
        .split_once(['x', 'X'])
        .ok_or_else(|| format!("box `{s}` is not ROWSxCOLS"))?;
    let r = r
        .trim()
        .parse()
        .map_err(|_| format!("bad row count in `{s}`"))?;
    let c = c
        .trim()
        .parse()
        .map_err(|_| format!("bad column count in `{s}`"))?;
    Ok((r, c))
}

fn parse_seq(s: &str, family: Family) -> Result<SeqSpec> {
    match s {
        "symbolic" => Ok(SeqSpec::Symbolic(family)),
        other => other.parse(),
    }
}

enum Failure {
    Usage(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_)
            | Error::TooLong { .. }
            | Error::NotContained { .. }
            | Error::OutOfWindow { .. } => Failure::Usage(e.to_string()),
            other => Failure::Check(other.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(format!("i/o error: {e}"))
    }
}

type Outcome = std::result::Result<bool, Failure>;

/// Parse `args` (program name first) and execute. Returns the exit code.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    2
                }
            };
        }
    };
    let mut data = Vec::new();
    let (result, output) = match cli.command {
        Command::Schur(a) => (schur_cmd(&a, &mut data), a.out.output),
        Command::Facschur(a) => (facschur_cmd(&a, &mut data), a.out.output),
        Command::Lrcoef(a) => (lrcoef_cmd(&a, &mut data, err), a.out.output),
        Command::Table(a) => (with_jobs(a.jobs, || table_cmd(&a, &mut data)), a.out.output),
        Command::Verify(a) => (
            with_jobs(a.jobs, || verify_cmd(&a, &mut data)),
            a.out.output,
        ),
        Command::Bench(a) => (with_jobs(a.jobs, || bench_cmd(&a, &mut data)), a.out.output),
        Command::Selftest(a) => (selftest_cmd(&a, &mut data), a.output),
    };
    let written = match output {
        Some(path) => std::fs::write(&path, &data).map_err(Failure::from),
        None => out.write_all(&data).map_err(Failure::from),
    };
    match result.and_then(|ok| written.map(|_| ok)) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(Failure::Check(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            let _ = writeln!(err, "usage: faclr <schur|facschur|lrcoef|table|verify|bench|selftest> [options]; see --help");
            2
        }
    }
}

fn with_jobs(jobs: Option<usize>, f: impl FnOnce() -> Outcome + Send) -> Outcome {
    match jobs {
        None => f(),
        Some(0) => Err(Failure::Usage("--jobs must be at least 1".into())),
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build()
            .map_err(|e| Failure::Usage(e.to_string()))?
            .install(f),
    }
}

fn check_n(n: usize) -> std::result::Result<(), Failure> {
    if n == 0 {
        return Err(Failure::Usage("--n must be at least 1".into()));
    }
    Ok(())
}

fn seed_of(flag: Option<u64>) -> std::result::Result<u64, Failure> {
    if let Some(s) = flag {
        return Ok(s);
    }
    match std::env::var(SEED_VAR) {
        Ok(v) => v
            .parse()
            .map_err(|_| Failure::Usage(format!("{SEED_VAR}={v} is not an unsigned integer"))),
        Err(_) => Ok(DEFAULT_SEED),
    }
}

fn emit_poly(
    p: &MultiPoly,
    fields: serde_json::Value,
    format: Format,
    data: &mut Vec<u8>,
) -> Outcome {
    match format {
        Format::Text => writeln!(data, "{p}")?,
        Format::Json => {
            let mut v = json!({ "schema": SCHEMA });
            if let (Some(obj), Some(extra)) = (v.as_object_mut(), fields.as_object()) {
                obj.extend(extra.clone());
                obj.insert(
                    "value".into(),
                    serde_json::to_value(p).expect("polynomials serialize"),
                );
            }
            writeln!(data, "{v}")?;
        }
        Format::Csv => {
            writeln!(data, "coefficient,monomial")?;
            for (m, c) in p.terms() {
                writeln!(data, "{},{}", crate::ring::format_rational(c), m)?;
            }
        }
    }
    Ok(true)
}

fn schur_cmd(a: &SchurArgs, data: &mut Vec<u8>) -> Outcome {
    check_n(a.n)?;
    let p = match a.route {
        Route::Det => schur(&a.lambda, a.n)?,
        Route::Tableau => schur_tableau(&a.lambda, a.n)?,
    };
    emit_poly(
        &p,
        json!({ "lambda": a.lambda.to_string(), "n": a.n }),
        a.out.format,
        data,
    )
}

fn facschur_cmd(a: &FacschurArgs, data: &mut Vec<u8>) -> Outcome {
    check_n(a.n)?;
    let seq = parse_seq(&a.a, Family::A)?;
    let p = match a.route {
        Route::Tableau => fac_schur_skew(&a.lambda, a.n, &seq)?,
        Route::Det if a.lambda.is_normal() => fac_schur_det(a.lambda.outer(), a.n, &seq)?,
        Route::Det => {
            return Err(Failure::Usage(
                "the determinant route needs a straight shape".into(),
            ))
        }
    };
    let fields = json!({ "lambda": a.lambda.to_string(), "n": a.n, "a": a.a });
    emit_poly(&p, fields, a.out.format, data)
}

/// Upper estimate of |𝒯(θ, ν/μ)|.
fn predicted_size(theta: &SkewShape, mu: &Partition, nu: &Partition, n: usize) -> BigInt {
    let Ok(gap) = SkewShape::new(nu.clone(), mu.clone()) else {
        return BigInt::zero();
    };
    let l = gap.size();
    let cells = theta.size();
    if l > cells {
        return BigInt::zero();
    }
    let mut choose = BigInt::from(1);
    for i in 0..l {
        choose = choose * BigInt::from(cells - i) / BigInt::from(i + 1);
    }
    ssyt_count(theta, n) * dim_skew(&gap) * choose
}

/// A specialization holding the values of numeric sequences over the index
/// ranges a coefficient can touch.
fn point_from(
    aseq: &SeqSpec,
    bseq: &SeqSpec,
    theta: &SkewShape,
    nu: &Partition,
    n: usize,
) -> Specialization {
    let mut s = Specialization::new();
    let a_hi = (nu.part(1) + n + 1) as i64;
    for i in 1..=a_hi {
        if let Ok(Some(v)) = aseq.term(i).map(|p| p.as_constant()) {
            s.set(VarRef::a(i), v);
        }
    }
    let b_lo = 2 - theta.rows() as i64;
    let b_hi = (n + theta.outer().part(1)) as i64;
    for i in b_lo..=b_hi {
        if let Ok(Some(v)) = bseq.term(i).map(|p| p.as_constant()) {
            s.set(VarRef::b(i), v);
        }
    }
    s
}

fn lrcoef_cmd(a: &LrcoefArgs, data: &mut Vec<u8>, err: &mut dyn Write) -> Outcome {
    check_n(a.n)?;
    let aseq = parse_seq(&a.a, Family::A)?;
    let bseq = parse_seq(&a.b, Family::B)?;
    let engine = Engine::from(a.engine);
    if engine == Engine::Tableau {
        let size = predicted_size(&a.theta, &a.mu, &a.nu, a.n);
        if size > BigInt::from(GUARD_LIMIT) {
            let _ = writeln!(
                err,
                "warning: about {size} barred tableaux would be enumerated"
            );
            if !a.force {
                return Err(Failure::Usage(
                    "enumeration exceeds the desk-scale limit; pass --force".into(),
                ));
            }
        }
    }
    let value = match engine {
        Engine::Tableau => c_tableau(&a.theta, &a.mu, &a.nu, a.n, &aseq, &bseq)?.value,
        Engine::Recurrence => c_recurrence(&a.theta, &a.mu, &a.nu, a.n, &aseq, &bseq)?.value,
        Engine::Oracle => product_expand(&a.theta, &a.mu, a.n, &aseq, &bseq)?.coeff(&a.nu),
        Engine::Classical => {
            if !a.theta.is_normal() {
                return Err(Failure::Usage(
                    "the classical engine needs a straight shape".into(),
                ));
            }
            let lam = a.theta.outer();
            let (x, y) = (
                classical_lr_lattice(lam, &a.mu, &a.nu),
                classical_lr_fits(lam, &a.mu, &a.nu),
            );
            if x != y {
                return Err(Failure::Check(format!(
                    "lattice count {x} != fits count {y}"
                )));
            }
            MultiPoly::constant(Rational::from_integer(x))
        }
        Engine::Hook => {
            if !aseq.is_numeric() || !bseq.is_numeric() {
                return Err(Failure::Usage(
                    "the hook engine needs numeric --a and --b".into(),
                ));
            }
            if aseq == SeqSpec::Shifted && bseq == SeqSpec::Shifted && a.theta.is_normal() {
                MultiPoly::constant(Rational::from_integer(f_hook(
                    a.theta.outer(),
                    &a.mu,
                    &a.nu,
                )?))
            } else {
                let s = point_from(&aseq, &bseq, &a.theta, &a.nu, a.n);
                MultiPoly::constant(c_hh(&a.theta, &a.mu, &a.nu, a.n, &s)?)
            }
        }
    };
    let result = LRResult {
        theta: a.theta.clone(),
        mu: a.mu.clone(),
        nu: a.nu.clone(),
        n: a.n,
        value,
        engine,
    };
    match a.out.format {
        Format::Text => writeln!(data, "{}", result.value)?,
        Format::Json => {
            let mut v = result.to_json();
            v["schema"] = json!(SCHEMA);
            writeln!(data, "{v}")?;
        }
        Format::Csv => {
            writeln!(data, "engine,theta,mu,nu,n,value")?;
            writeln!(
                data,
                "{},{},{},{},{},\"{}\"",
                engine.name(),
                result.theta,
                result.mu,
                result.nu,
                result.n,
                result.value
            )?;
        }
    }
    Ok(true)
}

/// One table row: the triple plus named column values and an agreement flag.
struct Row {
    lambda: Partition,
    mu: Partition,
    nu: Partition,
    columns: Vec<(&'static str, String)>,
    agree: bool,
}

fn triples(parts: &[Partition]) -> Vec<(Partition, Partition, Vec<Partition>)> {
    let mut out = Vec::new();
    for lambda in parts {
        for mu in parts {
            let nus = parts
                .iter()
                .filter(|nu| lambda.is_subset_of(nu) && mu.is_subset_of(nu))
                .cloned()
                .collect();
            out.push((lambda.clone(), mu.clone(), nus));
        }
    }
    out
}

fn fs_rows(
    lambda: &Partition,
    mu: &Partition,
    nus: &[Partition],
    n: usize,
    bound: &Partition,
) -> Result<Vec<Row>> {
    let shifted = SeqSpec::Shifted;
    let theta = SkewShape::normal(lambda.clone());
    let tab = f_tableau_within(lambda, mu, n, bound)?;
    let mut oracle = Oracle::new(n, &shifted);
    let exp = product_expand_with(&mut oracle, &theta, mu, &shifted)?;
    let mut rec = Recurrence::new(&theta, n, &shifted, &shifted);
    let mut rows = Vec::new();
    for nu in nus {
        let t = tab.get(nu).cloned().unwrap_or_default();
        let h = f_hook(lambda, mu, nu)?;
        let r = rec.coeff(mu, nu)?;
        let o = exp.coeff(nu);
        let as_int = |p: &MultiPoly| {
            p.as_constant()
                .filter(|c| c.is_integer())
                .map(|c| c.to_integer())
        };
        let agree = as_int(&r) == Some(t.clone()) && as_int(&o) == Some(t.clone()) && h == t;
        rows.push(Row {
            lambda: lambda.clone(),
            mu: mu.clone(),
            nu: nu.clone(),
            columns: vec![
                ("tableau", t.to_string()),
                ("hook", h.to_string()),
                ("recurrence", r.to_string()),
                ("oracle", o.to_string()),
            ],
            agree,
        });
    }
    Ok(rows)
}

fn classical_rows(lambda: &Partition, mu: &Partition, nus: &[Partition]) -> Vec<Row> {
    nus.iter()
        .filter(|nu| nu.size() == lambda.size() + mu.size())
        .map(|nu| {
            let x = classical_lr_lattice(lambda, mu, nu);
            let y = classical_lr_fits(lambda, mu, nu);
            Row {
                lambda: lambda.clone(),
                mu: mu.clone(),
                nu: nu.clone(),
                columns: vec![("lattice", x.to_string()), ("fits", y.to_string())],
                agree: x == y,
            }
        })
        .collect()
}

fn symbolic_rows(
    lambda: &Partition,
    mu: &Partition,
    nus: &[Partition],
    n: usize,
) -> Result<Vec<Row>> {
    let (a, b) = (SeqSpec::symbolic_a(), SeqSpec::symbolic_b());
    let theta = SkewShape::normal(lambda.clone());
    let mut rec = Recurrence::new(&theta, n, &a, &b);
    let mut rows = Vec::new();
    for nu in nus {
        let t = c_tableau(&theta, mu, nu, n, &a, &b)?.value;
        let r = rec.coeff(mu, nu)?;
        rows.push(Row {
            lambda: lambda.clone(),
            mu: mu.clone(),
            nu: nu.clone(),
            agree: t == r,
            columns: vec![("value", t.to_string())],
        });
    }
    Ok(rows)
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', ' ']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn table_cmd(a: &TableArgs, data: &mut Vec<u8>) -> Outcome {
    check_n(a.n)?;
    let (rows_n, cols) = a.bbox;
    let kind = if a.kind.classical {
        "classical"
    } else if a.kind.symbolic {
        "symbolic"
    } else {
        "fs"
    };
    let parts = partitions_in_box(rows_n.min(a.n), cols);
    let bound = Partition::rectangle(rows_n, cols);
    let work = triples(&parts);
    let chunks: Vec<Result<Vec<Row>>> = work
        .par_iter()
        .map(|(lambda, mu, nus)| match kind {
            "classical" => Ok(classical_rows(lambda, mu, nus)),
            "symbolic" => symbolic_rows(lambda, mu, nus, a.n),
            _ => fs_rows(lambda, mu, nus, a.n, &bound),
        })
        .collect();
    let mut rows = Vec::new();
    for c in chunks {
        rows.extend(c?);
    }
    let all_agree = rows.iter().all(|r| r.agree);
    match a.out.format {
        Format::Json => {
            let items: Vec<serde_json::Value> = rows
                .iter()
                .map(|r| {
                    let mut v = json!({
                        "lambda": r.lambda.to_string(),
                        "mu": r.mu.to_string(),
                        "nu": r.nu.to_string(),
                    });
                    for (k, val) in &r.columns {
                        v[*k] = json!(val);
                    }
                    v["agree"] = json!(r.agree);
                    v
                })
                .collect();
            let doc = json!({
                "schema": SCHEMA,
                "kind": kind,
                "box": format!("{rows_n}x{cols}"),
                "n": a.n,
                "rows": items,
            });
            writeln!(data, "{doc}")?;
        }
        Format::Csv => {
            let names: Vec<&str> = rows
                .first()
                .map(|r| r.columns.iter().map(|c| c.0).collect())
                .unwrap_or_default();
            let mut header = vec!["lambda", "mu", "nu"];
            header.extend(names);
            header.push("agree");
            writeln!(data, "{}", header.join(","))?;
            for r in &rows {
                let mut fields = vec![
                    csv_field(&r.lambda.to_string()),
                    csv_field(&r.mu.to_string()),
                    csv_field(&r.nu.to_string()),
                ];
                fields.extend(r.columns.iter().map(|(_, v)| csv_field(v)));
                fields.push(r.agree.to_string());
                writeln!(data, "{}", fields.join(","))?;
            }
        }
        Format::Text => {
            for r in &rows {
                let cols: Vec<String> = r.columns.iter().map(|(k, v)| format!("{k}={v}")).collect();
                writeln!(
                    data,
                    "{} ; {} -> {} : {}{}",
                    r.lambda,
                    r.mu,
                    r.nu,
                    cols.join(" "),
                    if r.agree { "" } else { "  DISAGREE" }
                )?;
            }
        }
    }
    Ok(all_agree)
}

fn verify_cmd(a: &VerifyArgs, data: &mut Vec<u8>) -> Outcome {
    check_n(a.n)?;
    let suites: Vec<Suite> = if a.suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![a.suite.parse()?]
    };
    let cfg = RunConfig {
        n: a.n,
        rows: a.bbox.0,
        cols: a.bbox.1,
        seed: seed_of(a.seed)?,
        points: a.points,
    };
    let reports: Vec<_> = suites.iter().map(|s| run_suite(*s, &cfg)).collect();
    let ok = reports.iter().all(|r| r.ok());
    match a.out.format {
        Format::Json => {
            let doc = json!({
                "schema": SCHEMA,
                "seed": cfg.seed,
                "points": cfg.points,
                "box": format!("{}x{}", cfg.rows, cfg.cols),
                "n": cfg.n,
                "suites": reports,
            });
            writeln!(data, "{doc}")?;
        }
        Format::Csv => {
            writeln!(data, "suite,passed,failed")?;
            for r in &reports {
                writeln!(data, "{},{},{}", r.name, r.passed, r.failed)?;
            }
        }
        Format::Text => {
            for r in &reports {
                writeln!(data, "{r}")?;
            }
        }
    }
    Ok(ok)
}

fn bench_cmd(a: &BenchArgs, data: &mut Vec<u8>) -> Outcome {
    check_n(a.n)?;
    let seed = seed_of(a.seed)?;
    let parts = partitions_in_box(a.bbox.0.min(a.n), a.bbox.1);
    let mut all: Vec<(Partition, Partition, Partition)> = Vec::new();
    for theta in &parts {
        for mu in &parts {
            for nu in &parts {
                if mu.is_subset_of(nu) {
                    all.push((theta.clone(), mu.clone(), nu.clone()));
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    all.shuffle(&mut rng);
    all.truncate(a.samples);
    let (aseq, bseq) = (SeqSpec::symbolic_a(), SeqSpec::symbolic_b());
    let engines: Vec<Engine> = a.engines.iter().map(|e| Engine::from(*e)).collect();
    let timed: Vec<Result<Vec<(Engine, u128, MultiPoly)>>> = all
        .par_iter()
        .map(|(theta, mu, nu)| {
            let th = SkewShape::normal(theta.clone());
            engines
                .iter()
                .map(|&e| {
                    let start = Instant::now();
                    let v = match e {
                        Engine::Tableau => c_tableau(&th, mu, nu, a.n, &aseq, &bseq)?.value,
                        Engine::Recurrence => c_recurrence(&th, mu, nu, a.n, &aseq, &bseq)?.value,
                        Engine::Oracle => product_expand(&th, mu, a.n, &aseq, &bseq)?.coeff(nu),
                        Engine::Classical => MultiPoly::constant(Rational::from_integer(
                            classical_lr_lattice(theta, mu, nu),
                        )),
                        Engine::Hook => {
                            return Err(Error::Parse(
                                "the hook engine needs a numeric point; not benchmarked".into(),
                            ))
                        }
                    };
                    Ok((e, start.elapsed().as_micros(), v))
                })
                .collect()
        })
        .collect();
    writeln!(data, "engine,theta,mu,nu,n,micros,terms")?;
    let mut agree = true;
    for ((theta, mu, nu), res) in all.iter().zip(timed) {
        let res = res?;
        let symbolic: Vec<&MultiPoly> = res
            .iter()
            .filter(|r| r.0 != Engine::Classical)
            .map(|r| &r.2)
            .collect();
        agree &= symbolic.windows(2).all(|w| w[0] == w[1]);
        for (e, micros, v) in &res {
            writeln!(
                data,
                "{},{},{},{},{},{},{}",
                e.name(),
                csv_field(&theta.to_string()),
                csv_field(&mu.to_string()),
                csv_field(&nu.to_string()),
                a.n,
                micros,
                v.num_terms()
            )?;
        }
    }
    Ok(agree)
}

fn selftest_cmd(a: &OutputArgs, data: &mut Vec<u8>) -> Outcome {
    let outcomes = acceptance::run_all();
    let passed = outcomes.iter().filter(|o| o.passed).count();
    match a.format {
        Format::Json => {
            let items: Vec<serde_json::Value> = outcomes
                .iter()
                .map(|o| json!({ "id": o.id, "title": o.title, "passed": o.passed, "detail": o.detail }))
                .collect();
            writeln!(data, "{}", json!({ "schema": SCHEMA, "criteria": items }))?;
        }
        _ => {
            for o in &outcomes {
                writeln!(data, "{o}")?;
            }
            writeln!(data, "{passed}/{} criteria passed", outcomes.len())?;
        }
    }
    Ok(passed == outcomes.len())
}
