//! The `arapath` command line. Kept in the library so the exit-code contract
//! can be exercised without spawning processes.

use std::fs;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::groebner::Budget;
use crate::hochster::{projective_dimension, DEFAULT_VARIABLE_CAP, MAX_VARIABLE_CAP};
use crate::ideal::{verify_text, MonomialIdeal};
use crate::paths::{
    construct_certificate, path_ideal, search_block_pair, AraCertificate, CertificateOptions, CertificateStatus,
    PairRegistry, PairSources, PathParams, VerifyPolicy, DEFAULT_SEARCH_BUDGET,
};
use crate::ring::{PrimeField, DEFAULT_PRIME};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DEGRADED: i32 = 3;
pub const EXIT_VERIFICATION: i32 = 4;
pub const EXIT_RESOURCE: i32 = 5;

#[derive(Debug, Parser)]
#[command(name = "arapath", version, about = "Arithmetical rank certificates for path ideals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the generators of I_t(L_n).
    Gen {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        t: u32,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Build a generating set up to radical with the formula's size.
    Construct {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        t: u32,
        #[command(flatten)]
        common: CommonArgs,
        #[command(flatten)]
        verify: VerifyArgs,
        #[command(flatten)]
        pairs: PairArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Projective dimension of R/I via Hochster's formula.
    Pd {
        #[arg(long, requires = "t", conflicts_with_all = ["ideal", "ideal_file"])]
        n: Option<u32>,
        #[arg(long)]
        t: Option<u32>,
        /// Square-free monomial ideal, e.g. `(x1*x2; x2*x3)`.
        #[arg(long, conflicts_with = "ideal_file")]
        ideal: Option<String>,
        #[arg(long)]
        ideal_file: Option<PathBuf>,
        /// Largest number of relevant variables enumerated.
        #[arg(long, default_value_t = DEFAULT_VARIABLE_CAP)]
        cap: usize,
        #[arg(long, default_value_t = DEFAULT_PRIME as u64)]
        p: u64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Formula against pd (and constructions) over a grid of (t, n).
    Table {
        /// Range `a..b` (inclusive) or a single value.
        #[arg(long, value_parser = parse_range)]
        t: RangeInclusive<u32>,
        #[arg(long, value_parser = parse_range)]
        n: RangeInclusive<u32>,
        #[command(flatten)]
        common: CommonArgs,
        #[command(flatten)]
        verify: VerifyArgs,
        #[command(flatten)]
        pairs: PairArgs,
        #[arg(long, default_value_t = DEFAULT_VARIABLE_CAP)]
        cap: usize,
        /// Leave timings out so identical runs give identical output.
        #[arg(long)]
        deterministic: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Certify that the radical of a polynomial system is a monomial ideal.
    Verify {
        /// Polynomials separated by `|`, `;` or newlines.
        #[arg(long, required_unless_present = "gens_file", conflicts_with = "gens_file")]
        gens: Option<String>,
        #[arg(long)]
        gens_file: Option<PathBuf>,
        #[arg(long, required_unless_present = "ideal_file", conflicts_with = "ideal_file")]
        ideal: Option<String>,
        #[arg(long)]
        ideal_file: Option<PathBuf>,
        #[command(flatten)]
        common: CommonArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Search the candidate family for a block pair.
    SearchPair {
        #[arg(long)]
        t: u32,
        /// Maximum number of candidates examined.
        #[arg(long, default_value_t = DEFAULT_SEARCH_BUDGET)]
        budget: usize,
        #[command(flatten)]
        common: CommonArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Debug, Args)]
struct CommonArgs {
    /// Characteristic of the coefficient field.
    #[arg(long, default_value_t = DEFAULT_PRIME as u64)]
    p: u64,
    /// Pair reductions allowed per Groebner run (overrides ARA_PATH_BUDGET).
    #[arg(long)]
    gb_budget: Option<usize>,
}

impl CommonArgs {
    fn field(&self) -> Result<PrimeField> {
        PrimeField::new(self.p)
    }

    fn budget(&self) -> Result<Budget> {
        let mut budget = Budget::from_env();
        if let Some(b) = self.gb_budget {
            if b == 0 {
                return Err(Error::InvalidParams("--gb-budget must be positive".into()));
            }
            budget.max_pair_reductions = b;
        }
        Ok(budget)
    }
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Always run the radical-equality certifier.
    #[arg(long, conflicts_with = "no_verify")]
    verify: bool,
    /// Never run it (formula and pd only).
    #[arg(long)]
    no_verify: bool,
}

impl VerifyArgs {
    fn policy(&self) -> VerifyPolicy {
        match (self.verify, self.no_verify) {
            (true, _) => VerifyPolicy::Always,
            (_, true) => VerifyPolicy::Never,
            _ => VerifyPolicy::Auto,
        }
    }
}

#[derive(Debug, Args)]
struct PairArgs {
    /// Pair config file, one `t=<t>: f | g` per line.
    #[arg(long)]
    pairs: Option<PathBuf>,
    /// Fall back to the candidate search with this many candidates.
    #[arg(long)]
    search_budget: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

fn parse_range(text: &str) -> std::result::Result<RangeInclusive<u32>, String> {
    let bad = || format!("expected `a..b` or a single integer, got `{text}`");
    let (lo, hi) = match text.split_once("..") {
        Some((a, b)) => (a, b.strip_prefix('=').unwrap_or(b)),
        None => (text, text),
    };
    let lo: u32 = lo.trim().parse().map_err(|_| bad())?;
    let hi: u32 = hi.trim().parse().map_err(|_| bad())?;
    if lo == 0 || lo > hi {
        return Err(format!("empty or non-positive range `{text}`"));
    }
    Ok(lo..=hi)
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Budget(_) | Error::VariableCap { .. } => EXIT_RESOURCE,
        Error::VerificationFailed(_) | Error::InvariantViolation(_) => EXIT_VERIFICATION,
        Error::PairUnavailable(_) => EXIT_DEGRADED,
        _ => EXIT_USAGE,
    }
}

fn read_file(path: &PathBuf) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::InvalidParams(format!("cannot read {}: {e}", path.display())))
}

/// Runs the CLI on `args` (including the program name), writing results to
/// `out` and diagnostics to `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };
    let (output, result) = dispatch(cli.command, err);
    match result {
        Ok((text, code)) => {
            let written = match output {
                Some(path) => fs::write(&path, &text).map_err(|e| e.to_string()),
                None => out.write_all(text.as_bytes()).map_err(|e| e.to_string()),
            };
            if let Err(e) = written {
                let _ = writeln!(err, "error: cannot write output: {e}");
                return EXIT_USAGE;
            }
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

type Outcome = Result<(String, i32)>;

fn dispatch(command: Command, err: &mut dyn Write) -> (Option<PathBuf>, Outcome) {
    match command {
        Command::Gen { n, t, out } => (out.output, cmd_gen(n, t, out.format)),
        Command::Construct {
            n,
            t,
            common,
            verify,
            pairs,
            out,
        } => (
            out.output,
            cmd_construct(n, t, &common, &verify, &pairs, out.format, err),
        ),
        Command::Pd {
            n,
            t,
            ideal,
            ideal_file,
            cap,
            p,
            out,
        } => (out.output, cmd_pd(n, t, ideal, ideal_file, cap, p, out.format)),
        Command::Table {
            t,
            n,
            common,
            verify,
            pairs,
            cap,
            deterministic,
            out,
        } => {
            let result = cmd_table(t, n, &common, &verify, &pairs, cap, deterministic, out.format, err);
            (out.output, result)
        }
        Command::Verify {
            gens,
            gens_file,
            ideal,
            ideal_file,
            common,
            out,
        } => (
            out.output,
            cmd_verify(gens, gens_file, ideal, ideal_file, &common, out.format),
        ),
        Command::SearchPair { t, budget, common, out } => (out.output, cmd_search_pair(t, budget, &common, out.format)),
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn csv_string(write_rows: impl FnOnce(&mut csv::Writer<Vec<u8>>) -> csv::Result<()>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    write_rows(&mut w).expect("in-memory csv");
    String::from_utf8(w.into_inner().expect("in-memory csv")).expect("utf-8 csv")
}

fn cmd_gen(n: u32, t: u32, format: Format) -> Outcome {
    let ideal = path_ideal(n, t)?;
    let gens: Vec<String> = ideal.generators().iter().map(|m| m.to_string()).collect();
    let text = match format {
        Format::Text => format!("{ideal}\n"),
        Format::Json => to_json(&json!({ "n": n, "t": t, "generators": gens })),
        Format::Csv => csv_string(|w| {
            w.write_record(["index", "generator"])?;
            for (i, g) in gens.iter().enumerate() {
                w.write_record([(i + 1).to_string(), g.clone()])?;
            }
            Ok(())
        }),
    };
    Ok((text, EXIT_OK))
}

fn pair_sources(pairs: &PairArgs, field: PrimeField, budget: Budget, err: &mut dyn Write) -> Result<PairSources> {
    let registry = match &pairs.pairs {
        Some(path) => {
            let registry = PairRegistry::from_text(&read_file(path)?, field, budget)?;
            for d in &registry.diagnostics {
                let _ = writeln!(err, "warning: {}: {d}", path.display());
            }
            Some(registry)
        }
        None => None,
    };
    Ok(PairSources {
        builtin: true,
        registry,
        search_budget: pairs.search_budget,
    })
}

fn status_code(status: CertificateStatus) -> i32 {
    match status {
        CertificateStatus::Verified | CertificateStatus::Unverified => EXIT_OK,
        CertificateStatus::Degraded => EXIT_DEGRADED,
        CertificateStatus::BudgetExhausted => EXIT_RESOURCE,
    }
}

/// The stable JSON shape of a certificate, fields in documented order.
#[derive(Debug, Serialize)]
pub struct CertificateJson<'a> {
    pub params: ParamsJson,
    pub generators: Vec<String>,
    pub count: usize,
    pub formula: u32,
    pub pd: Option<usize>,
    pub status: CertificateStatus,
    pub pair: Option<crate::paths::PairProvenance>,
    pub verification: Option<&'a crate::ideal::RadicalEqualityReport>,
    pub gap: Option<&'a crate::paths::GapReport>,
    pub steps: &'a [crate::paths::Step],
}

#[derive(Debug, Serialize)]
pub struct ParamsJson {
    pub n: u32,
    pub t: u32,
    pub k: u32,
    pub d: u32,
    pub branch: crate::paths::Branch,
}

impl<'a> From<&'a AraCertificate> for CertificateJson<'a> {
    fn from(cert: &'a AraCertificate) -> Self {
        let p = cert.params;
        CertificateJson {
            params: ParamsJson {
                n: p.n,
                t: p.t,
                k: p.k,
                d: p.d,
                branch: p.branch(),
            },
            generators: cert.generators.iter().map(|g| g.to_string()).collect(),
            count: cert.count(),
            formula: cert.formula_value,
            pd: cert.pd_value,
            status: cert.status,
            pair: cert.pair,
            verification: cert.verification.as_ref(),
            gap: cert.gap.as_ref(),
            steps: &cert.steps,
        }
    }
}

fn certificate_text(cert: &AraCertificate) -> String {
    let p = &cert.params;
    let mut s = format!(
        "n={} t={} k={} d={} branch={}\n",
        p.n,
        p.t,
        p.k,
        p.d,
        serde_json::to_value(p.branch()).unwrap().as_str().unwrap()
    );
    let pd = cert.pd_value.map_or("-".to_string(), |v| v.to_string());
    s += &format!("count={} formula={} pd={pd}\n", cert.count(), cert.formula_value);
    for g in &cert.generators {
        s += &format!("  {g}\n");
    }
    s += &format!(
        "status: {}\n",
        serde_json::to_value(cert.status).unwrap().as_str().unwrap()
    );
    if let Some(gap) = &cert.gap {
        s += &format!(
            "gap: {} constructed, formula {}, {} over (no pair for t={})\n",
            gap.constructed, gap.formula, gap.gap, gap.missing_pair_for_t
        );
    }
    if let Some(report) = &cert.verification {
        s += &format!("{report}\n");
    }
    s += "steps:\n";
    for step in &cert.steps {
        s += &format!("  {}\n", serde_json::to_string(step).unwrap());
    }
    s
}

fn cmd_construct(
    n: u32,
    t: u32,
    common: &CommonArgs,
    verify: &VerifyArgs,
    pairs: &PairArgs,
    format: Format,
    err: &mut dyn Write,
) -> Outcome {
    let field = common.field()?;
    let budget = common.budget()?;
    let options = CertificateOptions {
        verify: verify.policy(),
        field,
        budget,
        sources: pair_sources(pairs, field, budget, err)?,
        pd_cap: DEFAULT_VARIABLE_CAP,
    };
    let cert = construct_certificate(n, t, &options)?;
    let text = match format {
        Format::Text => certificate_text(&cert),
        Format::Json => to_json(&CertificateJson::from(&cert)),
        Format::Csv => csv_string(|w| {
            w.write_record(["index", "generator"])?;
            for (i, g) in cert.generators.iter().enumerate() {
                w.write_record([(i + 1).to_string(), g.to_string()])?;
            }
            Ok(())
        }),
    };
    Ok((text, status_code(cert.status)))
}

fn cmd_pd(
    n: Option<u32>,
    t: Option<u32>,
    ideal: Option<String>,
    ideal_file: Option<PathBuf>,
    cap: usize,
    p: u64,
    format: Format,
) -> Outcome {
    let field = PrimeField::new(p)?;
    if cap > MAX_VARIABLE_CAP {
        return Err(Error::InvalidParams(format!("--cap above {MAX_VARIABLE_CAP}")));
    }
    let ideal = match (n, t, ideal, ideal_file) {
        (Some(n), Some(t), None, None) => path_ideal(n, t)?,
        (None, None, Some(text), None) => MonomialIdeal::parse(&text, None)?,
        (None, None, None, Some(path)) => MonomialIdeal::parse(&read_file(&path)?, None)?,
        _ => {
            return Err(Error::InvalidParams(
                "give either --n/--t, --ideal or --ideal-file".into(),
            ))
        }
    };
    let pd = projective_dimension(&ideal, field, cap)?;
    let text = match format {
        Format::Text => format!("{pd}\n"),
        Format::Json => to_json(&json!({ "ideal": ideal.to_string(), "p": p, "pd": pd })),
        Format::Csv => csv_string(|w| {
            w.write_record(["ideal", "p", "pd"])?;
            w.write_record([ideal.to_string(), p.to_string(), pd.to_string()])
        }),
    };
    Ok((text, EXIT_OK))
}

/// One grid row of `table`.
#[derive(Debug, Clone, Serialize)]
pub struct ReportRow {
    pub n: u32,
    pub t: u32,
    pub k: u32,
    pub d: u32,
    pub formula: u32,
    pub pd: Option<usize>,
    pub constructed_count: Option<usize>,
    /// `pass`, `skipped`, `degraded`, `fail` or `skipped(budget)`.
    pub verified: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl ReportRow {
    /// pd agrees with the formula (rows without pd count as agreeing).
    pub fn formula_holds(&self) -> bool {
        self.pd.is_none_or(|pd| pd == self.formula as usize)
    }

    fn consistent(&self) -> bool {
        if self.verified != "pass" {
            return true;
        }
        let count = self.constructed_count.unwrap_or(0);
        count == self.formula as usize && self.pd.is_none_or(|pd| pd <= count)
    }
}

fn table_row(params: PathParams, options: &CertificateOptions, cap: usize, timed: bool) -> Result<ReportRow> {
    let start = Instant::now();
    let ideal = path_ideal(params.n, params.t)?;
    let mut note = None;
    let pd = match projective_dimension(&ideal, options.field, cap) {
        Ok(pd) => Some(pd),
        Err(e @ Error::VariableCap { .. }) => {
            note = Some(e.to_string());
            None
        }
        Err(e) => return Err(e),
    };
    // pd is computed above, the certificate only builds and verifies
    let options = CertificateOptions {
        pd_cap: 0,
        ..options.clone()
    };
    let (count, verified) = match construct_certificate(params.n, params.t, &options) {
        Ok(cert) => {
            let verified = match cert.status {
                CertificateStatus::Degraded => "degraded",
                CertificateStatus::BudgetExhausted => "skipped(budget)",
                CertificateStatus::Verified => "pass",
                CertificateStatus::Unverified => "skipped",
            };
            (Some(cert.count()), verified)
        }
        Err(e @ Error::VerificationFailed(_)) => {
            note = Some(e.to_string());
            (None, "fail")
        }
        Err(e) => return Err(e),
    };
    Ok(ReportRow {
        n: params.n,
        t: params.t,
        k: params.k,
        d: params.d,
        formula: crate::paths::ara_formula(params.n, params.t)?,
        pd,
        constructed_count: count,
        verified: verified.to_string(),
        timing_ms: timed.then(|| start.elapsed().as_millis()),
        note,
    })
}

#[derive(Debug, Serialize)]
struct TableJson<'a> {
    rows: &'a [ReportRow],
    summary: TableSummary,
}

#[derive(Debug, Serialize)]
struct TableSummary {
    rows: usize,
    formula_equals_pd: usize,
    verified: usize,
}

/// Builds the `(t, n)` grid rows in parallel, returned in `(t, n)` order.
pub fn report_rows(
    t_range: RangeInclusive<u32>,
    n_range: RangeInclusive<u32>,
    options: &CertificateOptions,
    cap: usize,
    timed: bool,
) -> Result<Vec<ReportRow>> {
    let grid: Vec<PathParams> = t_range
        .flat_map(|t| n_range.clone().filter(move |&n| t <= n).map(move |n| (n, t)))
        .map(|(n, t)| PathParams::new(n, t))
        .collect::<Result<_>>()?;
    grid.into_par_iter()
        .map(|p| table_row(p, options, cap, timed))
        .collect()
}

#[allow(clippy::too_many_arguments)]
fn cmd_table(
    t_range: RangeInclusive<u32>,
    n_range: RangeInclusive<u32>,
    common: &CommonArgs,
    verify: &VerifyArgs,
    pairs: &PairArgs,
    cap: usize,
    deterministic: bool,
    format: Format,
    err: &mut dyn Write,
) -> Outcome {
    let field = common.field()?;
    let budget = common.budget()?;
    if cap > MAX_VARIABLE_CAP {
        return Err(Error::InvalidParams(format!("--cap above {MAX_VARIABLE_CAP}")));
    }
    let options = CertificateOptions {
        verify: verify.policy(),
        field,
        budget,
        sources: pair_sources(pairs, field, budget, err)?,
        pd_cap: cap,
    };
    let rows = report_rows(t_range, n_range, &options, cap, !deterministic)?;
    let agree = rows.iter().filter(|r| r.formula_holds()).count();
    let passed = rows.iter().filter(|r| r.verified == "pass").count();
    let bad = rows
        .iter()
        .any(|r| !r.formula_holds() || !r.consistent() || r.verified == "fail");
    let summary = format!(
        "formula = pd on {agree}/{} rows; verification passed on {passed} rows",
        rows.len()
    );
    let dash = |v: Option<String>| v.unwrap_or_else(|| "-".into());
    let text = match format {
        Format::Text => {
            let mut s = format!(
                "{:>3} {:>3} {:>3} {:>3} {:>7} {:>3} {:>5} {:<16}{}\n",
                "t",
                "n",
                "k",
                "d",
                "formula",
                "pd",
                "count",
                "verified",
                if deterministic { "" } else { " ms" }
            );
            for r in &rows {
                s += &format!(
                    "{:>3} {:>3} {:>3} {:>3} {:>7} {:>3} {:>5} {:<16}{}\n",
                    r.t,
                    r.n,
                    r.k,
                    r.d,
                    r.formula,
                    dash(r.pd.map(|v| v.to_string())),
                    dash(r.constructed_count.map(|v| v.to_string())),
                    r.verified,
                    r.timing_ms.map_or(String::new(), |ms| format!(" {ms}")),
                );
            }
            s + &summary + "\n"
        }
        Format::Json => to_json(&TableJson {
            rows: &rows,
            summary: TableSummary {
                rows: rows.len(),
                formula_equals_pd: agree,
                verified: passed,
            },
        }),
        Format::Csv => csv_string(|w| {
            w.write_record([
                "n",
                "t",
                "k",
                "d",
                "formula",
                "pd",
                "constructed_count",
                "verified",
                "timing_ms",
            ])?;
            for r in &rows {
                w.write_record([
                    r.n.to_string(),
                    r.t.to_string(),
                    r.k.to_string(),
                    r.d.to_string(),
                    r.formula.to_string(),
                    r.pd.map_or(String::new(), |v| v.to_string()),
                    r.constructed_count.map_or(String::new(), |v| v.to_string()),
                    r.verified.clone(),
                    r.timing_ms.map_or(String::new(), |v| v.to_string()),
                ])?;
            }
            Ok(())
        }),
    };
    if format == Format::Csv {
        let _ = writeln!(err, "{summary}");
    }
    Ok((text, if bad { EXIT_VERIFICATION } else { EXIT_OK }))
}

fn cmd_verify(
    gens: Option<String>,
    gens_file: Option<PathBuf>,
    ideal: Option<String>,
    ideal_file: Option<PathBuf>,
    common: &CommonArgs,
    format: Format,
) -> Outcome {
    let field = common.field()?;
    let budget = common.budget()?;
    let gens_text = match (gens, gens_file) {
        (Some(g), _) => g,
        (None, Some(path)) => read_file(&path)?,
        (None, None) => return Err(Error::InvalidParams("missing generators".into())),
    };
    let ideal_text = match (ideal, ideal_file) {
        (Some(i), _) => i,
        (None, Some(path)) => read_file(&path)?,
        (None, None) => return Err(Error::InvalidParams("missing ideal".into())),
    };
    let report = verify_text(&gens_text, &ideal_text, field, budget)?;
    let code = if report.failures().next().is_some() {
        EXIT_VERIFICATION
    } else if report.budget_exhausted() {
        EXIT_RESOURCE
    } else {
        EXIT_OK
    };
    let text = match format {
        Format::Text => format!("{report}\n"),
        Format::Json => to_json(&report),
        Format::Csv => csv_string(|w| {
            w.write_record(["kind", "target", "result"])?;
            for c in &report.checks {
                let kind = serde_json::to_value(c.kind).unwrap();
                w.write_record([kind.as_str().unwrap(), &c.target, &c.result.to_string()])?;
            }
            Ok(())
        }),
    };
    Ok((text, code))
}

fn cmd_search_pair(t: u32, max_candidates: usize, common: &CommonArgs, format: Format) -> Outcome {
    if t == 0 {
        return Err(Error::InvalidParams("t must be positive".into()));
    }
    let outcome = search_block_pair(t, max_candidates, common.field()?, common.budget()?);
    let line = outcome.pair.as_ref().map(|p| p.config_line());
    let text = match format {
        Format::Text => format!("{}\n", line.as_deref().unwrap_or("none within budget")),
        Format::Json => to_json(&json!({
            "t": t,
            "pair": line,
            "examined": outcome.examined,
            "groebner_checked": outcome.groebner_checked,
        })),
        Format::Csv => csv_string(|w| {
            w.write_record(["t", "pair", "examined", "groebner_checked"])?;
            w.write_record([
                t.to_string(),
                line.clone().unwrap_or_default(),
                outcome.examined.to_string(),
                outcome.groebner_checked.to_string(),
            ])
        }),
    };
    Ok((text, EXIT_OK))
}
