//! Command-line front end. [`run`] parses arguments, writes to the supplied
//! streams and returns the process exit code: 0 success, 1 check or
//! invariant failure, 2 usage error.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::cyclic::{DistanceMethod, DistanceRecord, DEFAULT_DISTANCE_BUDGET};
use crate::error::Error;
use crate::mth::MthContext;
use crate::qr::{
    base_field_admissible, count_all, count_dual_containing, count_lcd, ClassifyOptions, QrCodeReport, QrContext,
};
use crate::reference::{run_checks, Expectations, CHECKS};

/// Lengths above this skip minimum distances unless `--distance` is given.
pub const DISTANCE_DEFAULT_MAX_N: u64 = 63;

#[derive(Parser, Debug)]
#[command(name = "resicode", version, about = "Quadratic and m-th residue cyclic codes over finite fields")]
struct Cli {
    /// Worker threads (overrides RESICODE_THREADS).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    output: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List every selector and its generator polynomial.
    Enumerate(LengthArgs),
    /// Build every code and report LCD, dual-containing and distance.
    Classify(ClassifyArgs),
    /// Minimum distance of one code.
    Distance(DistanceArgs),
    /// m-th residue codes of prime length.
    Mth(MthArgs),
    /// Closed-form counts for a prime list.
    Count(CountArgs),
    /// Recompute the published examples.
    VerifyPaper(VerifyArgs),
}

#[derive(Args, Debug)]
struct LengthArgs {
    /// Distinct odd primes whose product is the length.
    #[arg(long, value_delimiter = ',', required = true)]
    primes: Vec<u64>,
    /// Field order.
    #[arg(long)]
    q: u64,
    /// Use θ^u in place of θ.
    #[arg(long, default_value_t = 1)]
    theta_exponent: u64,
}

#[derive(Args, Debug)]
struct ClassifyArgs {
    #[command(flatten)]
    length: LengthArgs,
    /// Compute minimum distances even for long codes.
    #[arg(long, conflicts_with = "no_distance")]
    distance: bool,
    /// Skip minimum distances.
    #[arg(long)]
    no_distance: bool,
    /// Exhaustive search limit in codewords.
    #[arg(long, default_value_t = DEFAULT_DISTANCE_BUDGET)]
    budget: u128,
    /// Also run the matrix-based predicate tests.
    #[arg(long)]
    cross_check: bool,
}

#[derive(Args, Debug)]
struct DistanceArgs {
    #[command(flatten)]
    length: LengthArgs,
    /// Selector index (see `enumerate`).
    #[arg(long)]
    index: u128,
    #[arg(long, default_value_t = DEFAULT_DISTANCE_BUDGET)]
    budget: u128,
}

#[derive(Args, Debug)]
struct MthArgs {
    #[arg(long)]
    p: u64,
    #[arg(long)]
    m: u64,
    /// Field order; defaults to the smallest prime power ≡ 1 mod p.
    #[arg(long)]
    q: Option<u64>,
}

#[derive(Args, Debug)]
struct CountArgs {
    #[arg(long, value_delimiter = ',', required = true)]
    primes: Vec<u64>,
    #[arg(long)]
    q: Option<u64>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Run a single check by id.
    #[arg(long)]
    only: Option<String>,
    /// Expected length-15 distance histogram, as `d:count,...`.
    #[arg(long, value_parser = parse_histogram)]
    expect_histogram: Option<BTreeMap<usize, usize>>,
}

fn parse_histogram(s: &str) -> Result<BTreeMap<usize, usize>, String> {
    s.split(',')
        .map(|kv| {
            let (k, v) = kv.split_once(':').ok_or_else(|| format!("expected d:count, got `{kv}`"))?;
            Ok((k.trim().parse().map_err(|e| format!("{e}"))?, v.trim().parse().map_err(|e| format!("{e}"))?))
        })
        .collect()
}

/// Command outcome before it becomes an exit code.
enum Failure {
    Usage(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Invariant(_) | Error::UnbalancedSplit { .. } => Failure::Check(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Check(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn thread_count(flag: Option<usize>) -> Option<usize> {
    flag.or_else(|| std::env::var("RESICODE_THREADS").ok()?.parse().ok()).filter(|&t| t > 0)
}

pub fn run<I, T>(args: I, out: &mut (dyn Write + Send), err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(t) = thread_count(cli.threads) {
        builder = builder.num_threads(t);
    }
    let pool = match builder.build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 2;
        }
    };
    let result = pool.install(|| dispatch(&cli, out));
    match result {
        Ok(()) => 0,
        Err(Failure::Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            2
        }
        Err(Failure::Check(m)) => {
            let _ = writeln!(err, "failed: {m}");
            1
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Outcome {
    match &cli.command {
        Command::Enumerate(a) => enumerate(a, cli.output, out),
        Command::Classify(a) => classify(a, cli.output, out),
        Command::Distance(a) => distance(a, cli.output, out),
        Command::Mth(a) => mth(a, cli.output, out),
        Command::Count(a) => count(a, cli.output, out),
        Command::VerifyPaper(a) => verify(a, cli.output, out),
    }
}

fn context(a: &LengthArgs) -> Result<QrContext, Failure> {
    let ctx = QrContext::new(&a.primes, a.q)?;
    Ok(if a.theta_exponent == 1 { ctx } else { ctx.with_theta_exponent(a.theta_exponent)? })
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

fn csv_writer(out: &mut dyn Write) -> csv::Writer<&mut dyn Write> {
    csv::Writer::from_writer(out)
}

fn csv_err(e: csv::Error) -> Failure {
    Failure::Check(e.to_string())
}

fn flag(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn distance_text(d: &Option<DistanceRecord>) -> String {
    match d {
        None => "-".into(),
        Some(r) if r.method == DistanceMethod::Exhaustive => r.d.to_string(),
        Some(r) => format!("<={} (budget exceeded)", r.d),
    }
}

fn histogram_text(h: &BTreeMap<usize, usize>) -> String {
    let parts: Vec<String> = h.iter().rev().map(|(d, c)| format!("{d}:{c}")).collect();
    format!("{{{}}}", parts.join(","))
}

/// Serialized form of `classify` and `enumerate`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyOutput {
    pub primes: Vec<u64>,
    pub n: u64,
    pub q: u64,
    pub theta_exponent: u64,
    pub admissible: bool,
    pub codes: Vec<QrCodeReport>,
    pub lcd_count: u128,
    pub dual_containing_count: u128,
    pub distance_histogram: BTreeMap<usize, usize>,
}

fn write_reports(out: &mut dyn Write, format: Format, o: &ClassifyOutput, with_flags: bool) -> Outcome {
    match format {
        Format::Json => writeln!(out, "{}", to_json(o))?,
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["index", "selector", "generator", "k", "lcd", "dual_containing", "q_ary", "distance"])
                .map_err(csv_err)?;
            for r in &o.codes {
                let d = r.distance.map(|d| if d.is_exact() { d.d.to_string() } else { format!("<={}", d.d) });
                w.write_record([
                    r.index.to_string(),
                    r.selector.to_string(),
                    r.generator.clone(),
                    r.k.to_string(),
                    r.lcd.to_string(),
                    r.dual_containing.to_string(),
                    r.q_ary.to_string(),
                    d.unwrap_or_default(),
                ])
                .map_err(csv_err)?;
            }
            w.flush()?;
        }
        Format::Text => {
            writeln!(out, "n={} q={} primes={:?} theta_exponent={}", o.n, o.q, o.primes, o.theta_exponent)?;
            for r in &o.codes {
                let tag = if r.q_ary { String::new() } else { "  [not a q-ary code]".into() };
                if with_flags {
                    writeln!(
                        out,
                        "{:>6} {} k={} lcd={} dual-containing={} d={}  g={}{tag}",
                        r.index,
                        r.selector,
                        r.k,
                        flag(r.lcd),
                        flag(r.dual_containing),
                        distance_text(&r.distance),
                        r.generator
                    )?;
                } else {
                    writeln!(out, "{:>6} {} k={}  g={}{tag}", r.index, r.selector, r.k, r.generator)?;
                }
            }
            if with_flags {
                writeln!(
                    out,
                    "codes={} lcd={} dual-containing={} histogram={}",
                    o.codes.len(),
                    o.lcd_count,
                    o.dual_containing_count,
                    histogram_text(&o.distance_histogram)
                )?;
            }
        }
    }
    Ok(())
}

fn admissibility_failure(ctx: &QrContext) -> Failure {
    let prime = ctx.length().inadmissible_prime().unwrap_or_default();
    Failure::Check(format!(
        "q={} is not a square modulo {prime}; the codes are defined only over F_{}^{}",
        ctx.length().q,
        ctx.length().q,
        ctx.length().extension_degree
    ))
}

fn classification(ctx: &QrContext, options: &ClassifyOptions, theta_exponent: u64) -> Result<ClassifyOutput, Failure> {
    let c = ctx.classify_all(options)?;
    Ok(ClassifyOutput {
        primes: ctx.length().primes.clone(),
        n: ctx.n(),
        q: ctx.length().q,
        theta_exponent,
        admissible: ctx.admissible(),
        codes: c.reports,
        lcd_count: c.lcd_count,
        dual_containing_count: c.dual_containing_count,
        distance_histogram: c.distance_histogram,
    })
}

fn enumerate(a: &LengthArgs, format: Format, out: &mut dyn Write) -> Outcome {
    let ctx = context(a)?;
    let options = ClassifyOptions { order: Some(ctx.case_grouped_order()), ..Default::default() };
    let o = classification(&ctx, &options, a.theta_exponent)?;
    write_reports(out, format, &o, false)?;
    if !ctx.admissible() {
        return Err(admissibility_failure(&ctx));
    }
    Ok(())
}

fn classify(a: &ClassifyArgs, format: Format, out: &mut dyn Write) -> Outcome {
    let ctx = context(&a.length)?;
    let want_distance = !a.no_distance && (a.distance || ctx.n() <= DISTANCE_DEFAULT_MAX_N);
    let options = ClassifyOptions {
        distance_budget: (want_distance && ctx.admissible()).then_some(a.budget),
        cross_check: a.cross_check,
        order: Some(ctx.case_grouped_order()),
    };
    let o = classification(&ctx, &options, a.length.theta_exponent)?;
    write_reports(out, format, &o, true)?;
    if !ctx.admissible() {
        return Err(admissibility_failure(&ctx));
    }
    Ok(())
}

fn distance(a: &DistanceArgs, format: Format, out: &mut dyn Write) -> Outcome {
    let ctx = context(&a.length)?;
    if !ctx.admissible() {
        return Err(admissibility_failure(&ctx));
    }
    let options = ClassifyOptions { distance_budget: Some(a.budget), ..Default::default() };
    let r = ctx.report(a.index, &options)?;
    match format {
        Format::Json => writeln!(out, "{}", to_json(&r))?,
        Format::Csv => {
            let d = r.distance.expect("requested");
            let mut w = csv_writer(out);
            w.write_record(["index", "generator", "k", "distance", "method", "codewords"]).map_err(csv_err)?;
            w.write_record([
                r.index.to_string(),
                r.generator.clone(),
                r.k.to_string(),
                d.d.to_string(),
                serde_json::to_value(d.method).expect("serializable").as_str().unwrap_or_default().to_string(),
                d.codewords_enumerated.to_string(),
            ])
            .map_err(csv_err)?;
            w.flush()?;
        }
        Format::Text => {
            let d = r.distance.expect("requested");
            writeln!(out, "{} [{},{}] d={}  g={}", r.selector, r.n, r.k, distance_text(&r.distance), r.generator)?;
            writeln!(out, "codewords enumerated: {}", d.codewords_enumerated)?;
        }
    }
    Ok(())
}

fn mth(a: &MthArgs, format: Format, out: &mut dyn Write) -> Outcome {
    let ctx = MthContext::new(a.p, a.m, a.q)?;
    let r = ctx.report()?;
    match format {
        Format::Json => writeln!(out, "{}", to_json(&r))?,
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["coset", "unit_factor", "generator", "k", "lcd", "dual_containing", "root_condition"])
                .map_err(csv_err)?;
            for c in &r.codes {
                w.write_record([
                    c.coset.to_string(),
                    c.include_unit_factor.to_string(),
                    c.generator_text.clone(),
                    c.k.to_string(),
                    c.lcd.to_string(),
                    c.dual_containing.to_string(),
                    c.root_condition.to_string(),
                ])
                .map_err(csv_err)?;
            }
            w.flush()?;
        }
        Format::Text => {
            writeln!(out, "p={} m={} q={} primitive root r={}", r.p, r.m, r.q, r.primitive_root)?;
            for (i, c) in r.cosets.iter().enumerate() {
                writeln!(out, "A_{i} = {c:?}")?;
            }
            for c in &r.codes {
                let g = if c.include_unit_factor { format!("(x-1)f_{}", c.coset) } else { format!("f_{}", c.coset) };
                writeln!(
                    out,
                    "{g:<9} k={} lcd={} dual-containing={}  g={}",
                    c.k,
                    flag(c.lcd),
                    flag(c.dual_containing),
                    c.generator_text
                )?;
            }
            writeln!(
                out,
                "p = 1 mod 2m: {}  p = m+1 mod 2m: {}  lcd_count={} dual_containing_count={}",
                r.lcd_criterion, r.dual_containing_criterion, r.lcd_count, r.dual_containing_count
            )?;
        }
    }
    let family: Vec<_> = r.codes.iter().filter(|c| !c.include_unit_factor).collect();
    let lcd = family.iter().filter(|c| c.lcd).count() as u64;
    let dc = family.iter().filter(|c| c.dual_containing).count() as u64;
    if lcd != r.lcd_count || dc != r.dual_containing_count {
        return Err(Failure::Check(format!("per-code counts lcd={lcd} dc={dc} disagree with the congruences")));
    }
    if family.iter().any(|c| c.dual_containing != c.root_condition) {
        return Err(Failure::Check("divisibility and root-pairing tests disagree".into()));
    }
    Ok(())
}

#[derive(Serialize)]
struct CountOutput {
    primes: Vec<u64>,
    n: u64,
    g: usize,
    total: u128,
    lcd: u128,
    dual_containing: u128,
    #[serde(skip_serializing_if = "Option::is_none")]
    q: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    admissible: Option<bool>,
}

fn count(a: &CountArgs, format: Format, out: &mut dyn Write) -> Outcome {
    let length = crate::residue::LengthContext::new(&a.primes, a.q.unwrap_or(2))?;
    let o = CountOutput {
        primes: length.primes.clone(),
        n: length.n,
        g: length.g(),
        total: count_all(length.g() as u32),
        lcd: count_lcd(&length.primes),
        dual_containing: count_dual_containing(&length.primes),
        q: a.q,
        admissible: a.q.map(|q| base_field_admissible(&length.primes, q)),
    };
    match format {
        Format::Json => writeln!(out, "{}", to_json(&o))?,
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["n", "g", "total", "lcd", "dual_containing"]).map_err(csv_err)?;
            w.write_record([o.n, o.g as u64].iter().map(u64::to_string).chain(
                [o.total, o.lcd, o.dual_containing].iter().map(u128::to_string),
            ))
            .map_err(csv_err)?;
            w.flush()?;
        }
        Format::Text => {
            writeln!(out, "n={} g={} codes={} lcd={} dual-containing={}", o.n, o.g, o.total, o.lcd, o.dual_containing)?;
            if let (Some(q), Some(adm)) = (o.q, o.admissible) {
                writeln!(out, "q={q} admissible={adm}")?;
            }
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct CheckLine<'a> {
    id: &'a str,
    title: &'a str,
    passed: bool,
    detail: &'a str,
}

fn verify(a: &VerifyArgs, format: Format, out: &mut dyn Write) -> Outcome {
    let mut exp = Expectations::default();
    if let Some(h) = &a.expect_histogram {
        exp.histogram_15 = h.clone();
    }
    let results = run_checks(a.only.as_deref(), &exp).ok_or_else(|| {
        let ids: Vec<&str> = CHECKS.iter().flat_map(|c| std::iter::once(c.id).chain(c.alias)).collect();
        Failure::Usage(format!("unknown check; expected one of {}", ids.join(", ")))
    })?;
    for r in &results {
        eprintln!("{:<24} {:.2}s (limit {}s)", r.id, r.elapsed.as_secs_f64(), r.limit.as_secs());
    }
    match format {
        Format::Json => {
            let lines: Vec<CheckLine> = results
                .iter()
                .map(|r| CheckLine { id: r.id, title: r.title, passed: r.passed, detail: &r.detail })
                .collect();
            writeln!(out, "{}", to_json(&lines))?;
        }
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["id", "passed", "detail"]).map_err(csv_err)?;
            for r in &results {
                w.write_record([r.id, if r.passed { "true" } else { "false" }, &r.detail]).map_err(csv_err)?;
            }
            w.flush()?;
        }
        Format::Text => {
            for r in &results {
                writeln!(out, "{} {:<22} {}: {}", if r.passed { "PASS" } else { "FAIL" }, r.id, r.title, r.detail)?;
            }
        }
    }
    let failed: Vec<&str> = results.iter().filter(|r| !r.passed).map(|r| r.id).collect();
    if failed.is_empty() {
        writeln!(out, "{} of {} checks passed", results.len(), results.len())?;
        Ok(())
    } else {
        Err(Failure::Check(format!("{} failed: {}", failed.len(), failed.join(", "))))
    }
}
