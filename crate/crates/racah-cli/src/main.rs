use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use racah::algebra::{build_operator_set, verify_casimir_catalog, verify_diagonal_shift, verify_qr9_catalog, verify_univariate_qr3, RelationReport};
use racah::battery::{default_packs, default_packs3, BIVARIATE_N, UNIVARIATE_N};
use racah::exactnum::{parse_rational, Rational};
use racah::gridop::{solve_weight, ValueTable};
use racah::racah1::{racah1_eval, racah1_table, Su11Weights};
use racah::racah2::{racah2_eval, racah2_table, DegreePair, GridPoint2, Normalization};
use racah::suites;
use racah::Error;

#[derive(Parser, Debug)]
#[command(name = "racah", version, about = "Exact evaluation and verification for univariate and bivariate Racah polynomials")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug, Clone)]
enum Command {
    /// r_n(x) for three weights
    Eval1(Opts),
    /// R₂(n₁,n₂; x₁,x₂) for four weights
    Eval2(Opts),
    /// Table of r_n(x), rows n, columns x
    Table1(Opts),
    /// Table of R₂, rows (n₁,n₂), columns (x₁,x₂)
    Table2(Opts),
    VerifyQr3(Opts),
    VerifyQr9(Opts),
    VerifyCasimir(Opts),
    VerifyDuality(Opts),
    VerifyOrthogonality(Opts),
    /// Orthogonality weights ω and σ solved from the value table
    Weights(Opts),
}

#[derive(Args, Debug, Clone)]
struct Opts {
    #[arg(long, value_delimiter = ',', value_parser = parse_nu)]
    nu: Option<Vec<Rational>>,
    #[arg(long = "N")]
    big_n: Option<usize>,
    #[arg(long, value_delimiter = ',')]
    n: Option<Vec<usize>>,
    #[arg(long, value_delimiter = ',')]
    x: Option<Vec<usize>>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Json,
    Csv,
    Text,
}

fn parse_nu(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

enum Failure {
    Usage(String),
    Lib(Error),
    Suite(String),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Eval1(_) => "eval1",
            Command::Eval2(_) => "eval2",
            Command::Table1(_) => "table1",
            Command::Table2(_) => "table2",
            Command::VerifyQr3(_) => "verify-qr3",
            Command::VerifyQr9(_) => "verify-qr9",
            Command::VerifyCasimir(_) => "verify-casimir",
            Command::VerifyDuality(_) => "verify-duality",
            Command::VerifyOrthogonality(_) => "verify-orthogonality",
            Command::Weights(_) => "weights",
        }
    }

    fn opts(&self) -> &Opts {
        match self {
            Command::Eval1(o)
            | Command::Eval2(o)
            | Command::Table1(o)
            | Command::Table2(o)
            | Command::VerifyQr3(o)
            | Command::VerifyQr9(o)
            | Command::VerifyCasimir(o)
            | Command::VerifyDuality(o)
            | Command::VerifyOrthogonality(o)
            | Command::Weights(o) => o,
        }
    }
}

#[derive(Serialize)]
struct Params<'a> {
    #[serde(serialize_with = "racah::exactnum::serialize_rationals")]
    nu: &'a [Rational],
    #[serde(rename = "N")]
    n: usize,
}

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    version: &'static str,
    command: &'static str,
    params: Params<'a>,
    results: T,
}

fn envelope<'a, T: Serialize>(cmd: &Command, nu: &'a [Rational], n: usize, results: T) -> Envelope<'a, T> {
    Envelope {
        version: env!("CARGO_PKG_VERSION"),
        command: cmd.name(),
        params: Params { nu, n },
        results,
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn join(nu: &[Rational]) -> String {
    nu.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}

fn csv_string(records: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in records {
        w.write_record(r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
}

fn weights(o: &Opts, len: usize) -> Result<Su11Weights, Failure> {
    let nu = o.nu.clone().ok_or_else(|| Failure::Usage("--nu is required".into()))?;
    if nu.len() != len {
        return Err(Failure::Usage(format!("--nu needs {len} weights, got {}", nu.len())));
    }
    Ok(Su11Weights::new(nu)?)
}

fn required_n(o: &Opts) -> Result<usize, Failure> {
    o.big_n.ok_or_else(|| Failure::Usage("--N is required".into()))
}

fn index_list(v: &Option<Vec<usize>>, flag: &str, len: usize) -> Result<Vec<usize>, Failure> {
    match v {
        Some(v) if v.len() == len => Ok(v.clone()),
        Some(v) => Err(Failure::Usage(format!("--{flag} needs {len} value(s), got {}", v.len()))),
        None => Err(Failure::Usage(format!("--{flag} is required"))),
    }
}

#[derive(Serialize)]
struct Value {
    n: Vec<usize>,
    x: Vec<usize>,
    #[serde(serialize_with = "racah::exactnum::serialize_rational")]
    value: Rational,
}

fn emit_value(cmd: &Command, nu: &[Rational], big_n: usize, v: Value) -> String {
    match cmd.opts().format {
        Format::Text => format!("{}\n", v.value),
        Format::Csv => {
            let list = |xs: &[usize]| xs.iter().map(|k| k.to_string()).collect::<Vec<_>>().join(";");
            csv_string(&[
                vec!["n".into(), "x".into(), "value".into()],
                vec![list(&v.n), list(&v.x), v.value.to_string()],
            ])
        }
        Format::Json => to_json(&envelope(cmd, nu, big_n, [v])),
    }
}

#[derive(Serialize)]
struct TableJson {
    degrees: Vec<String>,
    points: Vec<String>,
    rows: Vec<Vec<String>>,
}

fn emit_table(cmd: &Command, nu: &[Rational], big_n: usize, t: &ValueTable) -> String {
    let degrees = t.degrees.labels();
    let points = t.grid.labels();
    let rows: Vec<Vec<String>> = t.rows.iter().map(|r| r.iter().map(|v| v.to_string()).collect()).collect();
    match cmd.opts().format {
        Format::Json => to_json(&envelope(cmd, nu, big_n, TableJson { degrees, points, rows })),
        Format::Csv => {
            let mut records = vec![std::iter::once("n\\x".to_string()).chain(points).collect::<Vec<_>>()];
            for (d, r) in degrees.into_iter().zip(rows) {
                records.push(std::iter::once(d).chain(r).collect());
            }
            csv_string(&records)
        }
        Format::Text => {
            let mut cells = vec![std::iter::once("n\\x".to_string()).chain(points).collect::<Vec<_>>()];
            for (d, r) in degrees.into_iter().zip(rows) {
                cells.push(std::iter::once(d).chain(r).collect());
            }
            let cols = cells[0].len();
            let width: Vec<usize> = (0..cols).map(|c| cells.iter().map(|r| r[c].len()).max().unwrap_or(0)).collect();
            let mut s = String::new();
            for r in &cells {
                let line: Vec<String> = r.iter().zip(&width).map(|(c, w)| format!("{c:>w$}")).collect();
                writeln!(s, "{}", line.join("  ").trim_end()).unwrap();
            }
            s
        }
    }
}

#[derive(Serialize)]
struct Entry {
    at: String,
    #[serde(serialize_with = "racah::exactnum::serialize_rational")]
    value: Rational,
}

#[derive(Serialize)]
struct WeightsJson {
    omega: Vec<Entry>,
    sigma: Vec<Entry>,
}

fn emit_weights(cmd: &Command, nu: &[Rational], big_n: usize, t: &ValueTable) -> Result<String, Failure> {
    let w = solve_weight(t)?;
    let entries = |g: racah::gridop::Grid, vals: &[Rational]| -> Vec<Entry> {
        g.labels().into_iter().zip(vals).map(|(at, v)| Entry { at, value: v.clone() }).collect()
    };
    let omega = entries(w.omega.grid, &w.omega.values);
    let sigma = entries(w.sigma.grid, &w.sigma.values);
    Ok(match cmd.opts().format {
        Format::Json => to_json(&envelope(cmd, nu, big_n, WeightsJson { omega, sigma })),
        Format::Csv => {
            let mut records = vec![vec!["kind".to_string(), "at".into(), "value".into()]];
            for (kind, list) in [("omega", &omega), ("sigma", &sigma)] {
                records.extend(list.iter().map(|e| vec![kind.to_string(), e.at.clone(), e.value.to_string()]));
            }
            csv_string(&records)
        }
        Format::Text => {
            let mut s = String::new();
            for (kind, list) in [("omega", &omega), ("sigma", &sigma)] {
                writeln!(s, "{kind}").unwrap();
                for e in list {
                    writeln!(s, "  {:>8}  {}", e.at, e.value).unwrap();
                }
            }
            s
        }
    })
}

/// One verification run of a suite at fixed weights and N.
struct Run {
    nu: Vec<Rational>,
    n: usize,
    reports: Vec<RelationReport>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Family {
    Univariate,
    Bivariate,
}

fn suite(cmd: &Command, w: &Su11Weights, n: usize) -> racah::Result<Vec<RelationReport>> {
    let mut out = Vec::new();
    match cmd {
        Command::VerifyQr3(_) => {
            let p = w.params1(n)?;
            out.extend(suites::univariate_eigen(&p)?);
            out.extend(verify_univariate_qr3(&p)?);
        }
        Command::VerifyQr9(_) => {
            let p = w.params2(n)?;
            out.extend(suites::bivariate_eigen(&p)?);
            out.extend(suites::commutation(&p)?);
            out.extend(verify_qr9_catalog(&build_operator_set(w, n)?));
            out.extend(verify_diagonal_shift(w, n)?);
            out.extend(suites::my_family(w, n)?);
        }
        Command::VerifyCasimir(_) => out.extend(verify_casimir_catalog(&build_operator_set(w, n)?)),
        Command::VerifyDuality(_) => out.extend(suites::duality(&w.params2(n)?)?),
        Command::VerifyOrthogonality(_) if w.nu().len() == 3 => out.extend(suites::univariate_orthogonality(w, n)?),
        Command::VerifyOrthogonality(_) => out.extend(suites::bivariate_orthogonality(&w.params2(n)?)?),
        _ => unreachable!("not a verify command"),
    }
    Ok(out)
}

fn verify_runs(cmd: &Command) -> Result<Vec<(Su11Weights, usize)>, Failure> {
    let o = cmd.opts();
    if o.big_n == Some(0) {
        return Err(Failure::Usage("verification needs N >= 1".into()));
    }
    let families: &[Family] = match cmd {
        Command::VerifyQr3(_) => &[Family::Univariate],
        Command::VerifyOrthogonality(_) => match o.nu.as_ref().map(Vec::len) {
            Some(3) => &[Family::Univariate],
            Some(_) => &[Family::Bivariate],
            None => &[Family::Univariate, Family::Bivariate],
        },
        _ => &[Family::Bivariate],
    };
    let mut runs = Vec::new();
    for &f in families {
        let (len, range) = match f {
            Family::Univariate => (3, UNIVARIATE_N),
            Family::Bivariate => (4, BIVARIATE_N),
        };
        let ns: Vec<usize> = match o.big_n {
            Some(n) => vec![n],
            None => range.collect(),
        };
        let packs = match &o.nu {
            Some(_) => vec![weights(o, len)?],
            None if len == 3 => default_packs3(),
            None => default_packs(),
        };
        for w in packs {
            runs.extend(ns.iter().map(|&n| (w.clone(), n)));
        }
    }
    Ok(runs)
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct CsvRow<'a> {
    nu: String,
    #[serde(rename = "N")]
    n: usize,
    relation_id: &'a str,
    printed_form_holds: bool,
    corrected_form_holds: Option<bool>,
    witness: String,
}

fn witness_text(r: &RelationReport) -> String {
    r.residual_witness
        .as_ref()
        .map(|w| format!("[{}, {}] = {}", w.row, w.col, w.value))
        .unwrap_or_default()
}

fn emit_runs(cmd: &Command, runs: &[Run]) -> String {
    match cmd.opts().format {
        Format::Json => {
            let objs: Vec<_> = runs.iter().map(|r| envelope(cmd, &r.nu, r.n, &r.reports)).collect();
            if objs.len() == 1 {
                to_json(&objs[0])
            } else {
                to_json(&objs)
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for run in runs {
                for r in &run.reports {
                    w.serialize(CsvRow {
                        nu: join(&run.nu),
                        n: run.n,
                        relation_id: &r.relation_id,
                        printed_form_holds: r.printed_form_holds,
                        corrected_form_holds: r.corrected_form_holds,
                        witness: witness_text(r),
                    })
                    .expect("in-memory write");
                }
            }
            String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
        }
        Format::Text => {
            let mut s = String::new();
            let width = runs
                .iter()
                .flat_map(|r| &r.reports)
                .map(|r| r.relation_id.chars().count())
                .max()
                .unwrap_or(0);
            let (mut printed, mut corrected, mut failed) = (0, 0, 0);
            for run in runs {
                writeln!(s, "nu = {}  N = {}", join(&run.nu), run.n).unwrap();
                for r in &run.reports {
                    match r.verdict() {
                        "printed" => printed += 1,
                        "corrected" => corrected += 1,
                        _ => failed += 1,
                    }
                    let line = format!("  {:<width$}  {:<9}  {}", r.relation_id, r.verdict(), witness_text(r));
                    writeln!(s, "{}", line.trim_end()).unwrap();
                }
            }
            writeln!(s, "{printed} printed, {corrected} corrected, {failed} failed").unwrap();
            s
        }
    }
}

fn run(cmd: &Command) -> Result<String, Failure> {
    let o = cmd.opts();
    match cmd {
        Command::Eval1(_) => {
            let w = weights(o, 3)?;
            let big_n = required_n(o)?;
            let n = index_list(&o.n, "n", 1)?;
            let x = index_list(&o.x, "x", 1)?;
            if n[0] > big_n || x[0] > big_n {
                return Err(Error::Validity(format!("n and x must lie in 0..={big_n}")).into());
            }
            let value = racah1_eval(n[0], x[0], &w.params1(big_n)?)?;
            Ok(emit_value(cmd, w.nu(), big_n, Value { n, x, value }))
        }
        Command::Eval2(_) => {
            let w = weights(o, 4)?;
            let big_n = required_n(o)?;
            let n = index_list(&o.n, "n", 2)?;
            let x = index_list(&o.x, "x", 2)?;
            let d = DegreePair::new(n[0], n[1], big_n)?;
            let g = GridPoint2::new(x[0], x[1], big_n)?;
            let value = racah2_eval(d, g, &w.params2(big_n)?)?;
            Ok(emit_value(cmd, w.nu(), big_n, Value { n, x, value }))
        }
        Command::Table1(_) => {
            let w = weights(o, 3)?;
            let big_n = required_n(o)?;
            let t = racah1_table(&w.params1(big_n)?)?;
            Ok(emit_table(cmd, w.nu(), big_n, &t))
        }
        Command::Table2(_) => {
            let w = weights(o, 4)?;
            let big_n = required_n(o)?;
            let t = racah2_table(&w.params2(big_n)?, Normalization::Printed)?;
            Ok(emit_table(cmd, w.nu(), big_n, &t))
        }
        Command::Weights(_) => {
            let len = o.nu.as_ref().map_or(0, Vec::len);
            let big_n = required_n(o)?;
            let (w, t) = match len {
                3 => {
                    let w = weights(o, 3)?;
                    let t = racah1_table(&w.params1(big_n)?)?;
                    (w, t)
                }
                _ => {
                    let w = weights(o, 4)?;
                    let t = racah2_table(&w.params2(big_n)?, Normalization::Printed)?;
                    (w, t)
                }
            };
            emit_weights(cmd, w.nu(), big_n, &t)
        }
        _ => {
            let plan = verify_runs(cmd)?;
            let runs: Vec<Run> = plan
                .par_iter()
                .map(|(w, n)| {
                    suite(cmd, w, *n).map(|reports| Run {
                        nu: w.nu().to_vec(),
                        n: *n,
                        reports,
                    })
                })
                .collect::<racah::Result<_>>()?;
            let text = emit_runs(cmd, &runs);
            let failed: Vec<String> = runs
                .iter()
                .flat_map(|r| r.reports.iter().filter(|x| x.failed()).map(move |x| format!("{} (N = {})", x.relation_id, r.n)))
                .collect();
            if failed.is_empty() {
                Ok(text)
            } else {
                write_output(o, &text)?;
                Err(Failure::Suite(failed.join(", ")))
            }
        }
    }
}

fn write_output(o: &Opts, text: &str) -> Result<(), Failure> {
    match &o.out {
        Some(path) => std::fs::write(path, text).map_err(|e| Failure::Io(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli.command).and_then(|text| write_output(cli.command.opts(), &text));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Lib(e @ (Error::Validity(_) | Error::Pole { .. }))) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Suite(msg)) => {
            eprintln!("relations failed in both forms: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
