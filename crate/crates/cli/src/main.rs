//! `fixlab` — exact contraction-class analysis of self-maps on finite
//! metric spaces from the command line.
//!
//! Every verb maps to one library entry point: `validate` checks the
//! metric axioms, `classify` computes a minimal coefficient, `iterate`
//! runs Picard iteration, `example` builds the worked family,
//! `search` mines class separations / runs theorem campaigns / replays
//! failures, and `verify` re-checks every theorem claim on one
//! instance.

use std::env;
use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use fixlab_core::{
    campaign, cauchy_certificate, document_from_parts, emit_json, example_family, format_rat,
    is_ultrametric, kannan_min_coefficient, mine_separation, npk_min_coefficient, parse_document,
    parse_rat, picard, rat_to_f64, replay, tpd_min_coefficient, verify_theorems, CampaignConfig,
    CampaignSummary, CauchyCertificate, ClassificationReport, Coefficient, Error,
    FiniteMetricSpace, GeneratorConfig, IterationTrace, MapScheme, Rat, ReplaySpec, SelfMap,
    SeparationWitness, Termination, TheoremReport, WitnessSource,
};

#[derive(Parser, Debug)]
#[command(
    name = "fixlab",
    version,
    about = "Exact contraction-class laboratory for self-maps on finite metric spaces",
    after_help = "Exit codes: 0 = positive verdict (valid / member / claims hold / witness \
                  found); 1 = negative verdict (non-member, failed claim, empty search); \
                  2 = input or usage error.\n\
                  File arguments accept `-` (or may be omitted) to read stdin. Rationals are \
                  written exactly as `p/q` everywhere; `--approx` adds display-only decimals."
)]
struct Cli {
    #[command(subcommand)]
    verb: Verb,

    /// Cap the worker-thread count (overrides the FIXLAB_JOBS
    /// environment variable; default: one worker per core)
    #[arg(long, global = true, value_name = "N")]
    jobs: Option<usize>,

    /// Print only the essential verdict line
    #[arg(long, global = true)]
    quiet: bool,

    /// Emit the machine-readable JSON document instead of tables
    #[arg(long, global = true)]
    json: bool,

    /// Add decimal approximations next to exact rationals (display only)
    #[arg(long, global = true)]
    approx: bool,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Check a space document (JSON or CSV) against the metric axioms
    Validate {
        /// Space document; `-` or absent reads stdin
        file: Option<PathBuf>,
    },
    /// Compute the minimal coefficient and membership for a class
    Classify {
        /// Space+map document; `-` or absent reads stdin
        file: Option<PathBuf>,
        /// Contraction class to test
        #[arg(long, value_enum)]
        class: ClassArg,
        /// Tuple arity for npk/tpd (kannan is fixed at 2)
        #[arg(long, default_value_t = 2, value_name = "N")]
        n: usize,
    },
    /// Run Picard iteration from a starting point and print the trace
    Iterate {
        /// Space+map document; `-` or absent reads stdin
        file: Option<PathBuf>,
        /// Label of the starting point
        #[arg(long, value_name = "LABEL")]
        start: String,
        /// Budget of map applications
        #[arg(long, default_value_t = 100, value_name = "K")]
        max_steps: usize,
        /// Check the trace's gap decay against the rate implied by an
        /// n-point coefficient (exit 1 if the trace beats no such rate)
        #[arg(long, requires = "lambda")]
        certify: bool,
        /// Coefficient for --certify, as p/q (must be below (n-1)/n)
        #[arg(long, value_name = "p/q")]
        lambda: Option<String>,
        /// Arity the --lambda coefficient refers to
        #[arg(long, default_value_t = 2, value_name = "N")]
        n: usize,
    },
    /// Build the worked family instance E(n, M)
    Example {
        /// Number of points (at least 3)
        #[arg(long, value_name = "N")]
        n: usize,
        /// Scale parameter as p/q, strictly greater than 1
        #[arg(long = "M", value_name = "p/q")]
        m: String,
        /// Emit the instance as a JSON document suitable for piping
        #[arg(long)]
        emit: bool,
    },
    /// Randomized search: class separation, theorem campaign, replay
    Search {
        /// What to search for
        #[arg(long, value_enum)]
        mode: ModeArg,
        /// Separation arity: member at n, non-member at n-1 (n >= 3)
        #[arg(long, value_name = "N")]
        n: Option<usize>,
        /// Trial budget (separation default: 0, family witness only)
        #[arg(long, value_name = "T")]
        trials: Option<u64>,
        /// Seed deriving every per-trial generator seed
        #[arg(long, default_value_t = 0, value_name = "S")]
        seed: u64,
        /// Campaign point-count range, inclusive (`A..B` or one value)
        #[arg(long, value_name = "A..B", default_value = "3..7")]
        sizes: String,
        /// Campaign arity range, inclusive (`A..B` or one value)
        #[arg(long, value_name = "A..B", default_value = "2..5")]
        arities: String,
        /// Point count for separation trial instances (default: n)
        #[arg(long, value_name = "K")]
        size: Option<usize>,
        /// Replay spec (JSON, as embedded in campaign failure records);
        /// `-` reads stdin
        #[arg(long, value_name = "FILE")]
        spec: Option<PathBuf>,
        /// Also emit each found instance as a JSON document
        #[arg(long)]
        emit: bool,
    },
    /// Re-check every theorem claim on one instance
    Verify {
        /// Space+map document; `-` or absent reads stdin
        file: Option<PathBuf>,
        /// Tuple arity the claims quantify over
        #[arg(long, value_name = "N")]
        n: usize,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ClassArg {
    /// Two-point condition d(Tx,Ty) <= λ(d(x,Tx)+d(y,Ty)), λ < 1/2
    Kannan,
    /// n-point condition S(images) <= λ·Σ d(x_i,Tx_i), λ < (n-1)/n
    Npk,
    /// Total-pairwise contraction S(images) <= α·S(tuple), α < 1
    Tpd,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    /// Find maps in the n-point class but outside the (n-1)-point class
    Separation,
    /// Verify every theorem claim over many random instances
    Campaign,
    /// Regenerate one campaign instance and re-run the claims
    Replay,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.json;
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            if json {
                // keep machine output parseable even on failure
                println!("{}", json!({ "error": format!("{err:#}") }));
            } else {
                eprintln!("error: {err:#}");
            }
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let jobs = cli.jobs.or_else(jobs_from_env);
    if let Some(j) = jobs {
        if j > 0 {
            // ignore "already initialized": only the first caller wins,
            // which is fine for a single-dispatch front end
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(j)
                .build_global();
        }
    }
    let out = Output {
        quiet: cli.quiet,
        json: cli.json,
        approx: cli.approx,
    };
    match cli.verb {
        Verb::Validate { file } => validate_verb(file.as_deref(), &out),
        Verb::Classify { file, class, n } => classify_verb(file.as_deref(), class, n, &out),
        Verb::Iterate {
            file,
            start,
            max_steps,
            certify,
            lambda,
            n,
        } => iterate_verb(
            file.as_deref(),
            &start,
            max_steps,
            certify,
            lambda.as_deref(),
            n,
            &out,
        ),
        Verb::Example { n, m, emit } => example_verb(n, &m, emit, &out),
        Verb::Search {
            mode,
            n,
            trials,
            seed,
            sizes,
            arities,
            size,
            spec,
            emit,
        } => match mode {
            ModeArg::Separation => separation_verb(n, trials, seed, size, emit, &out),
            ModeArg::Campaign => campaign_verb(trials, seed, &sizes, &arities, &out),
            ModeArg::Replay => replay_verb(spec.as_deref(), emit, &out),
        },
        Verb::Verify { file, n } => verify_verb(file.as_deref(), n, &out),
    }
}

fn jobs_from_env() -> Option<usize> {
    env::var("FIXLAB_JOBS").ok()?.trim().parse().ok()
}

// ---------------------------------------------------------------- output

struct Output {
    quiet: bool,
    json: bool,
    approx: bool,
}

impl Output {
    fn rat(&self, r: &Rat) -> String {
        if self.approx {
            format!("{} (~{:.6})", format_rat(r), rat_to_f64(r))
        } else {
            format_rat(r)
        }
    }

    fn coeff(&self, c: &Coefficient) -> String {
        match c.as_rat() {
            Some(r) => self.rat(r),
            None => "infinite".to_string(),
        }
    }

    fn print_json(&self, value: &Value) {
        println!(
            "{}",
            serde_json::to_string_pretty(value).expect("document serialization is total")
        );
    }
}

fn coeff_json(c: &Coefficient) -> Value {
    match c.as_rat() {
        Some(r) => json!(format_rat(r)),
        None => json!("infinite"),
    }
}

fn labels_of(space: &FiniteMetricSpace, indices: &[usize]) -> Vec<String> {
    indices
        .iter()
        .map(|&i| space.label(i).to_string())
        .collect()
}

fn exit(code: u8) -> Result<ExitCode> {
    Ok(ExitCode::from(code))
}

// ---------------------------------------------------------------- input

fn read_input(file: Option<&Path>) -> Result<String> {
    match file {
        Some(path) if path != Path::new("-") => {
            fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
        }
        _ => {
            let mut text = String::new();
            std::io::stdin()
                .read_to_string(&mut text)
                .context("cannot read stdin")?;
            Ok(text)
        }
    }
}

fn load_instance(file: Option<&Path>) -> Result<(FiniteMetricSpace, Option<SelfMap>)> {
    let text = read_input(file)?;
    Ok(parse_document(&text)?)
}

fn load_instance_with_map(file: Option<&Path>) -> Result<(FiniteMetricSpace, SelfMap)> {
    let (space, map) = load_instance(file)?;
    let map = map.ok_or(Error::MissingMap)?;
    Ok((space, map))
}

fn resolve_start(space: &FiniteMetricSpace, label: &str) -> Result<usize> {
    space
        .index_of(label)
        .ok_or_else(|| Error::UnknownLabel(label.to_string()).into())
}

fn parse_inclusive_range(text: &str) -> Result<(usize, usize)> {
    let parse = |part: &str| -> Result<usize> {
        part.trim()
            .parse()
            .with_context(|| format!("`{part}` is not a count"))
    };
    match text.split_once("..") {
        Some((lo, hi)) => Ok((parse(lo)?, parse(hi)?)),
        None => {
            let v = parse(text)?;
            Ok((v, v))
        }
    }
}

// ---------------------------------------------------------------- validate

fn validate_verb(file: Option<&Path>, out: &Output) -> Result<ExitCode> {
    let text = read_input(file)?;
    match parse_document(&text) {
        Ok((space, map)) => {
            let ultra = is_ultrametric(&space);
            if out.json {
                out.print_json(&json!({
                    "valid": true,
                    "points": space.len(),
                    "ultrametric": ultra,
                    "map": map.is_some(),
                }));
            } else if out.quiet {
                println!("valid");
            } else {
                println!("valid metric on {} points", space.len());
                println!("ultrametric: {ultra}");
                match &map {
                    Some(m) => println!(
                        "map: present, fixed points: {}",
                        join_or_none(&labels_of(&space, m.fixed_points()))
                    ),
                    None => println!("map: absent"),
                }
            }
            exit(0)
        }
        Err(Error::InvalidMetric(report)) => {
            let violations: Vec<String> = report.violations.iter().map(|v| v.to_string()).collect();
            if out.json {
                out.print_json(&json!({ "valid": false, "violations": violations }));
            } else {
                println!("invalid metric: {} violation(s)", violations.len());
                for v in &violations {
                    println!("  {v}");
                }
            }
            exit(2)
        }
        Err(other) => Err(other.into()),
    }
}

fn join_or_none(items: &[String]) -> String {
    if items.is_empty() {
        "none".to_string()
    } else {
        items.join(" ")
    }
}

// ---------------------------------------------------------------- classify

fn classify_verb(file: Option<&Path>, class: ClassArg, n: usize, out: &Output) -> Result<ExitCode> {
    let (space, map) = load_instance_with_map(file)?;
    let report = match class {
        ClassArg::Kannan => {
            if n != 2 {
                bail!("--class kannan is a two-point condition; --n must be 2");
            }
            kannan_min_coefficient(&space, &map)?
        }
        ClassArg::Npk => npk_min_coefficient(&space, &map, n)?,
        ClassArg::Tpd => tpd_min_coefficient(&space, &map, n)?,
    };
    print_classification(&space, &report, out);
    exit(if report.member { 0 } else { 1 })
}

fn print_classification(space: &FiniteMetricSpace, report: &ClassificationReport, out: &Output) {
    let verdict = if report.member {
        "member"
    } else {
        "non-member"
    };
    if out.json {
        out.print_json(&classification_json(space, report));
    } else if out.quiet {
        println!("{} {verdict}", out.coeff(&report.min_coefficient));
    } else {
        let bound = report
            .bound
            .as_ref()
            .map(|b| out.rat(b))
            .unwrap_or_else(|| "none".to_string());
        println!("class            {}", report.class_name);
        println!("min_coefficient  {}", out.coeff(&report.min_coefficient));
        println!("bound            {bound}");
        println!("member           {}", report.member);
        println!(
            "witness          {}",
            labels_of(space, &report.witness).join(" ")
        );
    }
}

fn classification_json(space: &FiniteMetricSpace, report: &ClassificationReport) -> Value {
    json!({
        "class": report.class_name.to_string(),
        "min_coefficient": coeff_json(&report.min_coefficient),
        "bound": report.bound.as_ref().map(format_rat),
        "member": report.member,
        "witness": labels_of(space, &report.witness),
    })
}

// ---------------------------------------------------------------- iterate

#[allow(clippy::too_many_arguments)]
fn iterate_verb(
    file: Option<&Path>,
    start: &str,
    max_steps: usize,
    certify: bool,
    lambda: Option<&str>,
    n: usize,
    out: &Output,
) -> Result<ExitCode> {
    let (space, map) = load_instance_with_map(file)?;
    let start_index = resolve_start(&space, start)?;
    let trace = picard(&space, &map, start_index, max_steps)?;
    let certificate = if certify {
        let lambda = parse_rat(lambda.expect("clap enforces --lambda with --certify"))?;
        Some(cauchy_certificate(&trace, n, &lambda)?)
    } else {
        None
    };

    if out.json {
        out.print_json(&trace_json(&space, &trace, certificate.as_ref(), out));
    } else {
        if !out.quiet {
            print_trace_table(&space, &trace, out);
        }
        println!(
            "termination: {}",
            describe_termination(&space, &trace, max_steps)
        );
        if let Some(cert) = &certificate {
            print_certificate(cert, out);
        }
    }

    let failed = certificate.as_ref().is_some_and(|c| !c.predicted_decay);
    exit(if failed { 1 } else { 0 })
}

fn print_trace_table(space: &FiniteMetricSpace, trace: &IterationTrace, out: &Output) {
    let gaps: Vec<String> = trace.gaps.iter().map(|g| out.rat(g)).collect();
    let point_width = trace
        .points
        .iter()
        .map(|&p| space.label(p).len())
        .max()
        .unwrap_or(0)
        .max("point".len());
    let step_width = format!("{}", trace.points.len() - 1)
        .len()
        .max("step".len());
    println!("{:>step_width$}  {:<point_width$}  gap", "step", "point");
    for (k, &p) in trace.points.iter().enumerate() {
        let gap = gaps.get(k).map(String::as_str).unwrap_or("-");
        println!("{k:>step_width$}  {:<point_width$}  {gap}", space.label(p));
    }
}

fn describe_termination(
    space: &FiniteMetricSpace,
    trace: &IterationTrace,
    budget: usize,
) -> String {
    match trace.termination {
        Termination::FixedPoint { point, step } => {
            format!(
                "fixed point {} first reached at step {step}",
                space.label(point)
            )
        }
        Termination::Cycle {
            prime_period,
            entry_step,
        } => format!("cycle of prime period {prime_period} entered at step {entry_step}"),
        Termination::BudgetExhausted => {
            format!("budget of {budget} steps exhausted without a revisit")
        }
    }
}

fn print_certificate(cert: &CauchyCertificate, out: &Output) {
    println!(
        "certificate (n = {}, lambda = {}):",
        cert.n,
        out.rat(&cert.lambda)
    );
    println!("  predicted decay rate  {}", out.rat(&cert.rho));
    if cert.vacuous {
        println!("  vacuous               true (trace shorter than n gaps)");
    } else {
        let analysis = cert.gap_analysis.as_ref().expect("non-vacuous certificate");
        println!("  fitted rate rho_min   {}", out.coeff(&analysis.rho_min));
        let envelope = cert.envelope.as_ref().expect("non-vacuous certificate");
        println!(
            "  envelope              {}",
            if envelope.holds { "holds" } else { "violated" }
        );
    }
    println!("  predicted_decay       {}", cert.predicted_decay);
    if out.approx {
        if let Some(hint) = cert.tail_bound_hint {
            println!("  tail_bound_hint       ~{hint:.6}");
        }
    }
}

fn trace_json(
    space: &FiniteMetricSpace,
    trace: &IterationTrace,
    certificate: Option<&CauchyCertificate>,
    out: &Output,
) -> Value {
    let termination = match trace.termination {
        Termination::FixedPoint { point, step } => json!({
            "kind": "fixed_point",
            "point": space.label(point),
            "step": step,
        }),
        Termination::Cycle {
            prime_period,
            entry_step,
        } => json!({
            "kind": "cycle",
            "prime_period": prime_period,
            "entry_step": entry_step,
        }),
        Termination::BudgetExhausted => json!({ "kind": "budget_exhausted" }),
    };
    let mut doc = json!({
        "points": labels_of(space, &trace.points),
        "gaps": trace.gaps.iter().map(format_rat).collect::<Vec<_>>(),
        "termination": termination,
    });
    if let Some(cert) = certificate {
        doc["certificate"] = certificate_json(cert, out);
    }
    doc
}

fn certificate_json(cert: &CauchyCertificate, out: &Output) -> Value {
    let mut doc = json!({
        "n": cert.n,
        "lambda": format_rat(&cert.lambda),
        "rho": format_rat(&cert.rho),
        "vacuous": cert.vacuous,
        "rho_min": cert.gap_analysis.as_ref().map(|a| coeff_json(&a.rho_min)),
        "envelope_holds": cert.envelope.as_ref().map(|e| e.holds),
        "predicted_decay": cert.predicted_decay,
    });
    if out.approx {
        doc["tail_bound_hint"] = json!(cert.tail_bound_hint);
    }
    doc
}

// ---------------------------------------------------------------- example

fn example_verb(n: usize, m: &str, emit: bool, out: &Output) -> Result<ExitCode> {
    let m = parse_rat(m)?;
    let (space, map) = example_family(n, &m)?;
    if emit || out.json {
        print!("{}", emit_json(&space, Some(&map)));
    } else if out.quiet {
        println!("E({n}, {}) on {} points", format_rat(&m), space.len());
    } else {
        println!(
            "worked family E({n}, {}) on {} points",
            format_rat(&m),
            space.len()
        );
        print_matrix(&space, out);
        let arrows: Vec<String> = map
            .table()
            .iter()
            .enumerate()
            .map(|(i, &img)| format!("{}->{}", space.label(i), space.label(img)))
            .collect();
        println!("map: {}", arrows.join("  "));
        println!(
            "fixed points: {}",
            join_or_none(&labels_of(&space, map.fixed_points()))
        );
    }
    exit(0)
}

fn print_matrix(space: &FiniteMetricSpace, out: &Output) {
    let labels = space.labels();
    let cells: Vec<Vec<String>> = space
        .matrix()
        .iter()
        .map(|row| row.iter().map(|d| out.rat(d)).collect())
        .collect();
    let mut widths: Vec<usize> = labels.iter().map(String::len).collect();
    for row in &cells {
        for (j, cell) in row.iter().enumerate() {
            widths[j] = widths[j].max(cell.len());
        }
    }
    let head_width = labels.iter().map(String::len).max().unwrap_or(0);
    let header: Vec<String> = labels
        .iter()
        .enumerate()
        .map(|(j, l)| format!("{l:>width$}", width = widths[j]))
        .collect();
    println!("{:head_width$}  {}", "", header.join("  "));
    for (i, row) in cells.iter().enumerate() {
        let line: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(j, cell)| format!("{cell:>width$}", width = widths[j]))
            .collect();
        println!("{:<head_width$}  {}", labels[i], line.join("  "));
    }
}

// ---------------------------------------------------------------- search

fn separation_verb(
    n: Option<usize>,
    trials: Option<u64>,
    seed: u64,
    size: Option<usize>,
    emit: bool,
    out: &Output,
) -> Result<ExitCode> {
    let n = n.ok_or_else(|| anyhow!("--mode separation requires --n"))?;
    let budget = trials.unwrap_or(0);
    let mut template = GeneratorConfig::range(seed, size.unwrap_or(n));
    template.map_scheme = MapScheme::FixedPointBiased;
    let witnesses = mine_separation(n, budget, &template)?;

    if out.json {
        let items: Vec<Value> = witnesses.iter().map(witness_json).collect();
        out.print_json(&json!({ "n": n, "witnesses": items }));
    } else if out.quiet {
        println!("{} witness(es)", witnesses.len());
    } else {
        println!(
            "separation at n = {n} (member at {n}, non-member at {}): {} witness(es)",
            n - 1,
            witnesses.len()
        );
        for (k, w) in witnesses.iter().enumerate() {
            println!("[{}] {}", k + 1, describe_source(&w.source));
            print_report_line(&w.space, &w.member_report, out);
            print_report_line(&w.space, &w.non_member_report, out);
            if emit {
                print!("{}", emit_json(&w.space, Some(&w.map)));
            }
        }
    }
    exit(if witnesses.is_empty() { 1 } else { 0 })
}

fn describe_source(source: &WitnessSource) -> String {
    match source {
        WitnessSource::Family { n, m } => format!("worked family E({n}, {})", format_rat(m)),
        WitnessSource::Generated { trial, config } => format!(
            "generated instance (trial {trial}): {}",
            serde_json::to_string(config).expect("config serialization is total")
        ),
    }
}

fn print_report_line(space: &FiniteMetricSpace, report: &ClassificationReport, out: &Output) {
    let verdict = if report.member {
        "member"
    } else {
        "non-member"
    };
    println!(
        "    {}: min_coefficient {}, {verdict}, witness {}",
        report.class_name,
        out.coeff(&report.min_coefficient),
        labels_of(space, &report.witness).join(" ")
    );
}

fn witness_json(w: &SeparationWitness) -> Value {
    json!({
        "source": serde_json::to_value(&w.source).expect("source serialization is total"),
        "instance": serde_json::to_value(document_from_parts(&w.space, Some(&w.map)))
            .expect("document serialization is total"),
        "member_report": classification_json(&w.space, &w.member_report),
        "non_member_report": classification_json(&w.space, &w.non_member_report),
    })
}

fn campaign_verb(
    trials: Option<u64>,
    seed: u64,
    sizes: &str,
    arities: &str,
    out: &Output,
) -> Result<ExitCode> {
    let trials = trials.ok_or_else(|| anyhow!("--mode campaign requires --trials"))?;
    let (min_size, max_size) = parse_inclusive_range(sizes)?;
    let (min_n, max_n) = parse_inclusive_range(arities)?;
    let cfg = CampaignConfig {
        trials,
        min_size,
        max_size,
        min_n,
        max_n,
        seed,
    };
    let summary = campaign(&cfg)?;

    if out.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&summary).expect("summary serialization is total")
        );
    } else {
        if !out.quiet {
            println!(
                "campaign: {} trials, seed {}, sizes {}..{}, arities {}..{}",
                cfg.trials, cfg.seed, cfg.min_size, cfg.max_size, cfg.min_n, cfg.max_n
            );
            print_claim_table(
                summary.stats.iter().map(|s| {
                    (
                        s.claim.name(),
                        s.applicable.to_string(),
                        s.failures.to_string(),
                    )
                }),
                "applicable",
                "failures",
            );
            for f in &summary.failures {
                println!(
                    "failure: trial {} claim {} — {}",
                    f.trial,
                    f.claim,
                    f.witness.as_deref().unwrap_or("(no witness)")
                );
                println!(
                    "  replay: {}",
                    serde_json::to_string(&f.replay).expect("spec serialization is total")
                );
            }
        }
        println!("{}", campaign_verdict(&summary));
    }
    exit(if summary.all_hold() { 0 } else { 1 })
}

fn campaign_verdict(summary: &CampaignSummary) -> String {
    if summary.all_hold() {
        format!("all claims hold across {} trials", summary.trials)
    } else {
        format!(
            "{} claim failure(s) across {} trials",
            summary.failures.len(),
            summary.trials
        )
    }
}

fn print_claim_table<I>(rows: I, left: &str, right: &str)
where
    I: Iterator<Item = (&'static str, String, String)>,
{
    let rows: Vec<_> = rows.collect();
    let name_width = rows
        .iter()
        .map(|(name, _, _)| name.len())
        .max()
        .unwrap_or(0)
        .max("claim".len());
    let left_width = rows
        .iter()
        .map(|(_, l, _)| l.len())
        .max()
        .unwrap_or(0)
        .max(left.len());
    println!("{:<name_width$}  {left:>left_width$}  {right}", "claim");
    for (name, l, r) in &rows {
        println!("{name:<name_width$}  {l:>left_width$}  {r}");
    }
}

fn replay_verb(spec: Option<&Path>, emit: bool, out: &Output) -> Result<ExitCode> {
    let spec = spec.ok_or_else(|| anyhow!("--mode replay requires --spec"))?;
    let text = read_input(Some(spec))?;
    let spec: ReplaySpec = serde_json::from_str(&text).context("replay spec is not valid JSON")?;
    let (space, map, report) = replay(&spec)?;
    if emit && !out.json {
        print!("{}", emit_json(&space, Some(&map)));
    }
    print_theorem_report(&report, space.len(), out);
    exit(if report.all_hold() { 0 } else { 1 })
}

// ---------------------------------------------------------------- verify

fn verify_verb(file: Option<&Path>, n: usize, out: &Output) -> Result<ExitCode> {
    let (space, map) = load_instance_with_map(file)?;
    let report = verify_theorems(&space, &map, n)?;
    print_theorem_report(&report, space.len(), out);
    exit(if report.all_hold() { 0 } else { 1 })
}

fn print_theorem_report(report: &TheoremReport, points: usize, out: &Output) {
    if out.json {
        println!(
            "{}",
            serde_json::to_string_pretty(report).expect("report serialization is total")
        );
        return;
    }
    if !out.quiet {
        println!("claims at n = {} on {points} points", report.n);
        print_claim_table(
            report.verdicts.iter().map(|v| {
                (
                    v.claim.name(),
                    yes_no(v.applicable).to_string(),
                    yes_no(v.holds).to_string(),
                )
            }),
            "applicable",
            "holds",
        );
        for v in report.verdicts.iter().filter(|v| !v.holds) {
            println!(
                "violation in {}: {}",
                v.claim,
                v.witness.as_deref().unwrap_or("(no witness)")
            );
        }
    }
    let failed = report.verdicts.iter().filter(|v| !v.holds).count();
    if failed == 0 {
        println!("all claims hold");
    } else {
        println!("{failed} claim(s) failed");
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}
