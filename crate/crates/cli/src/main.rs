//! `descartes`: sign-rule analysis, witness construction, trinomial tests, exact root
//! counts and `(P, N)` tables from the command line.
//!
//! Exit codes: 0 success, 2 usage or malformed input, 3 inadmissible request,
//! 4 construction or verification failure.

use std::collections::BTreeSet;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use descartes_core::pn_table::{
    descartes_pn_candidates, erasing_rule, exploratory_table, render_csv, render_grid,
    TableConfig, MAX_CLASSIFIED_DEGREE,
};
use descartes_core::{
    admissible_p, construct_witness_with, count_with_multiplicity, descartes_bound,
    discriminant_crosscheck, distinct_positive_roots, isolate_signomial_roots, parse_rational,
    pn_count, verify_witness_with, Axis, DiscriminantPattern, Error, ExactTrinomial,
    IsolationOptions, PnPair, RationalPolynomial, RootMultiset, SignSequence,
    Signomial, TrinomialVerdict, WitnessCertificate, WitnessOptions,
};
use serde_json::{json, Value};

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Inadmissible(String),
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Inadmissible(_) => 3,
            CliError::Failed(_) => 4,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Inadmissible { .. } | Error::Domain(_) | Error::NotDoubleRoot => {
                CliError::Inadmissible(e.to_string())
            }
            Error::IllConditioned { .. } | Error::ConstructionFailed(_) => {
                CliError::Failed(e.to_string())
            }
            _ => CliError::Usage(e.to_string()),
        }
    }
}

type CliResult<T> = Result<T, CliError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
    Grid,
}

#[derive(Debug, Parser)]
#[command(name = "descartes", version, about = "Sign sequences and real roots of polynomials")]
struct Cli {
    /// Output format; `csv` and `grid` apply to `pn-table` only.
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    /// Seed for every randomized step.
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,
    /// Directory for files written without an explicit `--output`.
    #[arg(long, global = true, env = "DESCARTES_OUT_DIR")]
    out_dir: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Variation count, admissible root counts and `(P, N)` candidates of a sign sequence.
    Analyze {
        sequence: String,
        /// Integer exponents of the terms (default `0, 1, ..., n`).
        #[arg(long, value_delimiter = ',')]
        exps: Option<Vec<i64>>,
    },
    /// Builds a signomial with the given signs, exponents and positive roots.
    Construct(ConstructArgs),
    /// Positivity of `a x^alpha + b x^beta + c x^gamma` on the positive half-line.
    #[command(allow_negative_numbers = true)]
    Trinomial {
        a: String,
        alpha: String,
        b: String,
        beta: String,
        c: String,
        gamma: String,
    },
    /// Exact real-root counts of a rational polynomial file.
    Count {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "both")]
        axis: AxisArg,
    },
    /// Feasibility of every `(P, N)` pair for dense polynomials of one degree.
    PnTable {
        degree: usize,
        /// Random candidates per pair before a pair is left unknown.
        #[arg(long, default_value_t = 100_000)]
        budget: usize,
        /// Worker threads.
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Re-checks a polynomial or witness file against claimed counts or roots.
    Verify {
        file: PathBuf,
        /// Claimed `P,N` (rational polynomials only).
        #[arg(long)]
        pair: Option<String>,
        /// Claimed positive roots; repeat a value or write `x:m` for multiplicity.
        #[arg(long, value_delimiter = ',')]
        roots: Option<Vec<String>>,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
}

#[derive(Debug, Args)]
struct ConstructArgs {
    sequence: String,
    /// Real exponents, increasing.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    exps: Vec<f64>,
    /// Target positive roots; repeat a value or write `x:m` for multiplicity.
    #[arg(long, value_delimiter = ',')]
    roots: Vec<String>,
    /// Relative residual tolerance of the verification.
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AxisArg {
    Positive,
    Negative,
    Both,
}

fn parse_sequence(s: &str) -> CliResult<SignSequence> {
    s.parse().map_err(|e: Error| CliError::Usage(e.to_string()))
}

fn parse_roots(items: &[String]) -> CliResult<RootMultiset> {
    let mut repeated = Vec::new();
    for item in items.iter().map(|s| s.trim()).filter(|s| !s.is_empty()) {
        let (x, m) = match item.split_once(':') {
            Some((x, m)) => (x, m.parse::<u32>().map_err(|_| CliError::Usage(format!("bad multiplicity in {item:?}")))?),
            None => (item, 1),
        };
        let x: f64 = x.parse().map_err(|_| CliError::Usage(format!("bad root {item:?}")))?;
        repeated.extend(std::iter::repeat(x).take(m as usize));
    }
    Ok(RootMultiset::from_repeated(&repeated)?)
}

fn parse_pair(s: &str) -> CliResult<PnPair> {
    let bad = || CliError::Usage(format!("expected P,N, got {s:?}"));
    let (p, n) = s.trim_matches(['(', ')']).split_once(',').ok_or_else(bad)?;
    Ok(PnPair::new(p.trim().parse().map_err(|_| bad())?, n.trim().parse().map_err(|_| bad())?))
}

fn pairs_json(pairs: &BTreeSet<PnPair>) -> Value {
    pairs.iter().map(|p| json!([p.p, p.n])).collect()
}

fn pairs_text(pairs: &BTreeSet<PnPair>) -> String {
    pairs.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" ")
}

fn list_text(v: &[usize]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn text_only(format: Format) -> CliResult<bool> {
    match format {
        Format::Text => Ok(true),
        Format::Json => Ok(false),
        Format::Csv | Format::Grid => Err(CliError::Usage("csv and grid output apply to pn-table only".into())),
    }
}

fn emit(format: Format, text: String, value: Value) -> CliResult<String> {
    Ok(if text_only(format)? {
        text
    } else {
        serde_json::to_string_pretty(&value).expect("json values serialize") + "\n"
    })
}

fn cmd_analyze(format: Format, sequence: &str, exps: Option<Vec<i64>>) -> CliResult<String> {
    let seq = parse_sequence(sequence)?;
    let exps = exps.unwrap_or_else(|| (0..seq.len() as i64).collect());
    if exps.windows(2).any(|w| w[0] >= w[1]) {
        return Err(CliError::Usage("exponents must be strictly increasing".into()));
    }
    let (k, parity) = descartes_bound(&seq);
    let ps = admissible_p(&seq);
    let neg = seq.negate_x(&exps)?;
    let ns = admissible_p(&neg);
    let span = (exps[exps.len() - 1] - exps[0]) as usize;
    let dense = exps.iter().enumerate().all(|(i, &e)| e == exps[0] + i as i64);
    let candidates: BTreeSet<PnPair> = if dense {
        descartes_pn_candidates(&seq)
    } else {
        ps.iter()
            .flat_map(|&p| ns.iter().map(move |&n| PnPair::new(p, n)))
            .filter(|pair| pair.p + pair.n <= span)
            .collect()
    };
    let erasing = dense.then(|| erasing_rule(&seq));
    let mut text = format!(
        "sequence {seq}\nvariations k={k} ({})\nadmissible P: {}\nnegate-x sequence {neg}\nvariations k'={}\nadmissible N: {}\ncandidate (P,N): {} ({} pairs)\n",
        format!("{parity:?}").to_lowercase(),
        list_text(&ps),
        neg.variations(),
        list_text(&ns),
        pairs_text(&candidates),
        candidates.len()
    );
    if let Some(e) = &erasing {
        text.push_str(&format!("erasing rule: {}\n", pairs_text(e)));
    }
    let value = json!({
        "sequence": seq.to_string(),
        "exponents": exps,
        "k": k,
        "admissible_p": ps,
        "negate_x": neg.to_string(),
        "k_negate_x": neg.variations(),
        "admissible_n": ns,
        "candidates": pairs_json(&candidates),
        "erasing_rule": erasing.as_ref().map(pairs_json),
    });
    emit(format, text, value)
}

fn sanitized(seq: &SignSequence) -> String {
    seq.to_string().replace('+', "p").replace('-', "m")
}

fn destination(explicit: Option<PathBuf>, out_dir: Option<&Path>, default_name: String) -> Option<PathBuf> {
    explicit.or_else(|| out_dir.map(|d| d.join(default_name)))
}

fn write_file(path: &Path, contents: &str) -> CliResult<()> {
    if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
        fs::create_dir_all(parent).map_err(|e| CliError::Usage(format!("{}: {e}", parent.display())))?;
    }
    fs::write(path, contents).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

fn cmd_construct(format: Format, out_dir: Option<&Path>, args: ConstructArgs) -> CliResult<String> {
    let seq = parse_sequence(&args.sequence)?;
    let target = parse_roots(&args.roots)?;
    let opts = WitnessOptions {
        residual_tol: args.tol,
        ..WitnessOptions::default()
    };
    let cert = construct_witness_with(&seq, &args.exps, &target, &opts)?;
    let json_text = serde_json::to_string_pretty(&cert).expect("certificates serialize");
    let path = destination(args.output, out_dir, format!("witness_{}.json", sanitized(&seq)));
    if let Some(path) = &path {
        write_file(path, &json_text)?;
    }
    let written = path.as_ref().map(|p| p.display().to_string());
    let eps = cert.epsilon.map_or("none".to_string(), |e| e.to_string());
    let mut text = format!(
        "witness {}\nsign sequence {}\nepsilon {eps}\ncondition {:.3e}\nmax relative root error {:.3e}\n",
        cert.polynomial,
        cert.polynomial.sign_sequence(),
        cert.condition,
        cert.report.max_relative_error()
    );
    match &written {
        Some(p) => text.push_str(&format!("certificate written to {p}\n")),
        None => {
            text.push_str(&json_text);
            text.push('\n');
        }
    }
    let value = json!({ "certificate": cert, "written_to": written });
    emit(format, text, value)
}

fn verdict_name(v: TrinomialVerdict) -> &'static str {
    match v {
        TrinomialVerdict::PositiveOnAxis => "positive_on_axis",
        TrinomialVerdict::DoubleRoot => "double_root",
        TrinomialVerdict::TwoSimpleRoots => "two_simple_roots",
    }
}

fn cmd_trinomial(format: Format, raw: [&str; 6]) -> CliResult<String> {
    let mut values = Vec::with_capacity(6);
    for s in raw {
        values.push(parse_rational(s).map_err(|e| CliError::Usage(e.to_string()))?);
    }
    let [a, alpha, b, beta, c, gamma]: [_; 6] = values.try_into().expect("six values");
    let t = ExactTrinomial {
        a,
        alpha,
        b,
        beta,
        c,
        gamma,
    };
    let exact = t.classify_exact()?;
    let verdict = match exact {
        Some(v) => v,
        None => t.to_f64().classify()?,
    };
    let criterion = t.to_f64().criterion()?;
    let location = (verdict == TrinomialVerdict::DoubleRoot)
        .then(|| t.to_f64().double_root_location().ok())
        .flatten();
    let integer_exponents: Option<Vec<i64>> = [&t.alpha, &t.beta, &t.gamma]
        .iter()
        .map(|e| e.is_integer().then(|| e.to_integer().try_into().ok()).flatten())
        .collect();
    let crosscheck = integer_exponents
        .and_then(|e| DiscriminantPattern::from_exponents(&e).ok())
        .map(|p| discriminant_crosscheck(&t.a, &t.b, &t.c, p))
        .transpose()?;
    let mut text = format!("{}\n", verdict_name(verdict));
    text.push_str(&format!(
        "log product {:.6e} (exact comparison: {})\n",
        criterion.log_product,
        if exact.is_some() { "yes" } else { "no" }
    ));
    if let Some(x) = location {
        text.push_str(&format!("double root at x = {x}\n"));
    }
    if let Some(x) = &crosscheck {
        text.push_str(&format!(
            "discriminant {} ({}), {}\n",
            x.discriminant,
            verdict_name(x.discriminant_verdict),
            if x.agree { "agrees" } else { "DISAGREES" }
        ));
    }
    let value = json!({
        "verdict": verdict,
        "exact": exact.is_some(),
        "criterion": criterion,
        "double_root": location,
        "discriminant": crosscheck,
    });
    emit(format, text, value)
}

enum PolynomialFile {
    Rational(RationalPolynomial),
    Signomial(Signomial),
    Certificate(Box<WitnessCertificate>),
}

fn read_polynomial(path: &Path) -> CliResult<PolynomialFile> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    if let Ok(p) = serde_json::from_str::<RationalPolynomial>(&text) {
        return Ok(PolynomialFile::Rational(p));
    }
    if let Ok(c) = serde_json::from_str::<WitnessCertificate>(&text) {
        return Ok(PolynomialFile::Certificate(Box::new(c)));
    }
    serde_json::from_str::<Signomial>(&text)
        .map(PolynomialFile::Signomial)
        .map_err(|e| CliError::Usage(format!("{}: not a polynomial file: {e}", path.display())))
}

fn cmd_count(format: Format, file: &Path, axis: AxisArg) -> CliResult<String> {
    match read_polynomial(file)? {
        PolynomialFile::Rational(p) => {
            let (pc, nc) = match axis {
                AxisArg::Both => {
                    let pair = pn_count(&p)?;
                    (Some(pair.p), Some(pair.n))
                }
                AxisArg::Positive => (Some(count_with_multiplicity(&p, Axis::Positive)?), None),
                AxisArg::Negative => (None, Some(count_with_multiplicity(&p, Axis::Negative)?)),
            };
            let distinct = distinct_positive_roots(&p)?;
            let text = match (pc, nc) {
                (Some(a), Some(b)) => format!("({a},{b})\n"),
                (Some(a), None) => format!("P={a}\n"),
                (None, Some(b)) => format!("N={b}\n"),
                (None, None) => unreachable!(),
            };
            let value = json!({ "polynomial": p.to_string(), "p": pc, "n": nc, "distinct_positive": distinct });
            emit(format, text, value)
        }
        PolynomialFile::Signomial(y) => count_signomial(format, &y, axis),
        PolynomialFile::Certificate(c) => count_signomial(format, &c.polynomial, axis),
    }
}

fn count_signomial(format: Format, y: &Signomial, axis: AxisArg) -> CliResult<String> {
    if axis == AxisArg::Negative {
        return Err(CliError::Usage("real-exponent signomials live on the positive half-line".into()));
    }
    let iso = isolate_signomial_roots(y, &IsolationOptions::default());
    if !iso.complete {
        return Err(CliError::Failed("root isolation ran out of budget".into()));
    }
    let text = format!(
        "P={} ({} distinct{})\n",
        iso.with_multiplicity(),
        iso.distinct(),
        if iso.ambiguous { ", multiplicities estimated" } else { "" }
    );
    let value = json!({
        "p": iso.with_multiplicity(),
        "distinct_positive": iso.distinct(),
        "ambiguous": iso.ambiguous,
        "roots": iso.centers(),
    });
    emit(format, text, value)
}

fn cmd_pn_table(
    format: Format,
    seed: u64,
    out_dir: Option<&Path>,
    degree: usize,
    budget: usize,
    jobs: Option<usize>,
    output: Option<PathBuf>,
) -> CliResult<String> {
    let config = TableConfig { seed, budget, jobs };
    let table = exploratory_table(degree, &config)?;
    let (body, ext) = match format {
        Format::Csv => (render_csv(&table), "csv"),
        Format::Json => (serde_json::to_string_pretty(&table).expect("tables serialize") + "\n", "json"),
        Format::Text | Format::Grid => (render_grid(&table), "txt"),
    };
    let mut out = String::new();
    match destination(output, out_dir, format!("pn_table_{degree}.{ext}")) {
        Some(path) => {
            write_file(&path, &body)?;
            let s = &table.summary;
            out.push_str(&format!(
                "degree {degree}: {} possible, {} certified impossible, {} unknown; written to {}\n",
                s.possible,
                s.impossible_certificate,
                s.unknown,
                path.display()
            ));
        }
        None => out.push_str(&body),
    }
    if table.summary.unknown > 0 && degree <= MAX_CLASSIFIED_DEGREE {
        eprint!("{out}");
        return Err(CliError::Failed(format!(
            "{} pairs without a witness at degree {degree}",
            table.summary.unknown
        )));
    }
    Ok(out)
}

fn cmd_verify(format: Format, file: &Path, pair: Option<String>, roots: Option<Vec<String>>, tol: f64) -> CliResult<String> {
    let claimed_pair = pair.as_deref().map(parse_pair).transpose()?;
    let claimed_roots = roots.as_deref().map(parse_roots).transpose()?;
    let opts = WitnessOptions {
        residual_tol: tol,
        ..WitnessOptions::default()
    };
    let mut lines = Vec::new();
    let mut checks = Vec::new();
    let mut ok = true;
    let (signomial, rational, expected_signs, default_roots) = match read_polynomial(file)? {
        PolynomialFile::Rational(p) => (p.to_signomial().ok(), Some(p), None, None),
        PolynomialFile::Signomial(y) => (Some(y), None, None, None),
        PolynomialFile::Certificate(c) => {
            (Some(c.polynomial.clone()), None, Some(c.sequence.clone()), Some(c.target.clone()))
        }
    };
    if let Some(pair) = claimed_pair {
        let p = rational
            .as_ref()
            .ok_or_else(|| CliError::Usage("--pair needs a rational polynomial file".into()))?;
        let got = pn_count(p)?;
        let pass = got == pair;
        ok &= pass;
        lines.push(format!("(P,N) claimed {pair}, counted {got}: {}", if pass { "ok" } else { "MISMATCH" }));
        checks.push(json!({ "check": "pn", "claimed": pair, "counted": got, "ok": pass }));
    }
    if let Some(target) = claimed_roots.or(default_roots) {
        let y = signomial
            .as_ref()
            .ok_or_else(|| CliError::Usage("the polynomial is zero".into()))?;
        let report = verify_witness_with(y, &target, expected_signs.as_ref(), &opts);
        ok &= report.passed;
        lines.push(format!(
            "roots {}: max relative error {:.3e}",
            if report.passed { "verified" } else { "FAILED" },
            report.max_relative_error()
        ));
        for f in report.failures() {
            lines.push(format!("  {f}"));
        }
        checks.push(json!({ "check": "roots", "ok": report.passed, "report": report }));
    }
    if checks.is_empty() {
        return Err(CliError::Usage("nothing to verify: pass --pair or --roots".into()));
    }
    let text = lines.join("\n") + "\n";
    let out = emit(format, text, json!({ "ok": ok, "checks": checks }))?;
    if ok {
        Ok(out)
    } else {
        print!("{out}");
        Err(CliError::Failed("verification failed".into()))
    }
}

fn run(cli: Cli) -> CliResult<String> {
    let format = cli.format;
    let out_dir = cli.out_dir.as_deref();
    match cli.command {
        Command::Analyze { sequence, exps } => cmd_analyze(format, &sequence, exps),
        Command::Construct(args) => cmd_construct(format, out_dir, args),
        Command::Trinomial { a, alpha, b, beta, c, gamma } => {
            cmd_trinomial(format, [&a, &alpha, &b, &beta, &c, &gamma])
        }
        Command::Count { file, axis } => cmd_count(format, &file, axis),
        Command::PnTable { degree, budget, jobs, output } => {
            cmd_pn_table(format, cli.seed, out_dir, degree, budget, jobs, output)
        }
        Command::Verify { file, pair, roots, tol } => cmd_verify(format, &file, pair, roots, tol),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            // a closed pipe (e.g. `| head`) is not an error worth reporting
            let _ = std::io::stdout().lock().write_all(out.as_bytes());
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
