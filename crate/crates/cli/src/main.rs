//! `qsocle`: inspect numerical semigroups, analyze quasi-socle ideals
//! `(t^s) : m^q`, render socle tables, and run the verification sweeps and
//! acceptance checks.
//!
//! Exit status: 0 on success, 1 on a usage or input error, 2 when a
//! verification run reports a failing conclusion or an oracle disagreement.

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use quasisocle::socle::analyze;
use quasisocle::verify::{
    check_statement_bounded, pattern_markdown, random_oracle_trials, render_markdown,
    run_criterion, sweep, sweep_all, StatementParams, SweepBounds, SweepReport, TableRow,
    VerificationOutcome, DEFAULT_ORACLE_SEED, STATEMENT_IDS,
};
use quasisocle::{Error, NumericalSemigroup};
use std::process::ExitCode;
use std::sync::Arc;

#[derive(Parser)]
#[command(
    name = "qsocle",
    version,
    about = "Numerical semigroup rings and their quasi-socle ideals",
    propagate_version = true
)]
struct Cli {
    /// Output format (also settable via QSOCLE_FORMAT)
    #[arg(
        long,
        global = true,
        value_enum,
        env = "QSOCLE_FORMAT",
        default_value = "human"
    )]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Markdown,
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants of a numerical semigroup
    Semigroup(SemigroupArgs),
    /// Full report on I = (t^s) : m^q
    Analyze(AnalyzeArgs),
    /// Socle table over explicit exponents or a swept range
    Table(TableArgs),
    /// Statement checks, sweeps, and acceptance criteria
    Verify(VerifyArgs),
    /// Randomized comparison of the engine against the dense model
    Oracle(OracleArgs),
}

#[derive(Args)]
struct SemigroupArgs {
    /// Generators, comma separated
    #[arg(long, value_delimiter = ',', required = true)]
    gens: Vec<u64>,
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Generators, comma separated
    #[arg(long, value_delimiter = ',', required = true)]
    gens: Vec<u64>,
    /// Exponent of the principal reduction Q = (t^s)
    #[arg(long)]
    s: u64,
    /// Socle degree
    #[arg(long)]
    q: u64,
}

#[derive(Args)]
struct TableArgs {
    /// Generators, comma separated
    #[arg(long, value_delimiter = ',', required = true)]
    gens: Vec<u64>,
    /// Socle degree
    #[arg(long)]
    q: u64,
    /// Explicit exponents, comma separated
    #[arg(long, value_delimiter = ',', conflicts_with = "s_range")]
    s_list: Option<Vec<u64>>,
    /// Inclusive exponent range LO..HI over members of H; repeating row
    /// shapes collapse into an `otherwise` line in text formats
    #[arg(long)]
    s_range: Option<String>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Statement to sweep, or to check once when point parameters are given
    /// (default: sweep every statement)
    #[arg(long, conflicts_with = "criterion")]
    statement: Option<String>,
    /// Acceptance criterion to run (1-6)
    #[arg(long)]
    criterion: Option<u8>,

    /// Point parameter: ambient generators
    #[arg(long, value_delimiter = ',')]
    gens: Option<Vec<u64>>,
    /// Point parameter: reflection point
    #[arg(long)]
    alpha: Option<i64>,
    /// Point parameter: multiplicity of <a, a+1>
    #[arg(long)]
    a: Option<u64>,
    /// Point parameter: socle degree
    #[arg(long)]
    q: Option<u64>,
    /// Point parameter: reduction exponent
    #[arg(long)]
    s: Option<u64>,
    /// Point parameter: quotient of s by a
    #[arg(long)]
    ell: Option<u64>,
    /// Point parameter: remainder of s mod a
    #[arg(long)]
    r: Option<u64>,

    /// Smallest multiplicity swept
    #[arg(long)]
    a_min: Option<u64>,
    /// Largest multiplicity swept
    #[arg(long)]
    a_max: Option<u64>,
    /// Largest conductor admitted into the semigroup families
    #[arg(long)]
    conductor_max: Option<u64>,
    /// Reduction exponents range up to s_factor * conductor
    #[arg(long)]
    s_factor: Option<u64>,
    /// Socle degrees reach q_extra past the multiplicity
    #[arg(long)]
    q_extra: Option<u64>,
}

#[derive(Args)]
struct OracleArgs {
    /// RNG seed
    #[arg(long, default_value_t = DEFAULT_ORACLE_SEED)]
    seed: u64,
    /// Number of randomized comparisons
    #[arg(long, default_value_t = 500)]
    trials: u64,
}

/// Rendered output plus whether a verification failure occurred (exit 2).
type CmdResult = Result<(String, bool), String>;

fn friendly(e: Error) -> String {
    match e {
        Error::UnknownStatement(id) => format!(
            "unknown statement `{id}` (known: {})",
            STATEMENT_IDS.join(", ")
        ),
        other => other.to_string(),
    }
}

fn semigroup_of(gens: &[u64]) -> Result<Arc<NumericalSemigroup>, String> {
    NumericalSemigroup::new(gens)
        .map(Arc::new)
        .map_err(friendly)
}

fn join<T: ToString>(items: &[T], sep: &str) -> String {
    items
        .iter()
        .map(T::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn reduction_text(r: Option<u64>) -> String {
    r.map(|n| n.to_string()).unwrap_or_else(|| "∞".to_string())
}

fn cm_text(cm: Option<bool>) -> String {
    cm.map(|b| yes_no(b).to_string())
        .unwrap_or_else(|| "n/a".to_string())
}

fn cm_csv(cm: Option<bool>) -> String {
    cm.map(|b| b.to_string()).unwrap_or_else(|| "n/a".to_string())
}

fn csv_quote(field: &str) -> String {
    if field.contains(',') || field.contains('"') || field.contains('\n') {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

macro_rules! to_json {
    ($value:expr) => {
        serde_json::to_string($value).expect("serializable")
    };
}

fn run_semigroup(args: &SemigroupArgs, format: Format) -> CmdResult {
    let h = semigroup_of(&args.gens)?;
    let inv = h.invariants();
    let text = match format {
        Format::Json => format!("{}\n", to_json!(&inv)),
        Format::Csv => format!(
            "generators,multiplicity,frobenius,conductor,genus,symmetric,gaps\n{},{},{},{},{},{},{}\n",
            join(&inv.generators, " "),
            inv.multiplicity,
            inv.frobenius,
            inv.conductor,
            inv.genus,
            inv.symmetric,
            join(&inv.gaps, " "),
        ),
        Format::Markdown => {
            let mut out = String::from("| invariant | value |\n|---|---|\n");
            out += &format!("| generators | {h} |\n");
            out += &format!("| multiplicity | {} |\n", inv.multiplicity);
            out += &format!("| frobenius | {} |\n", inv.frobenius);
            out += &format!("| conductor | {} |\n", inv.conductor);
            out += &format!("| genus | {} |\n", inv.genus);
            out += &format!("| gaps | {} |\n", join(&inv.gaps, " "));
            out += &format!(
                "| symmetric (Gorenstein) | {} |\n",
                if inv.symmetric { "Yes" } else { "No" }
            );
            out
        }
        Format::Human => format!(
            "H = {h}\n\
             multiplicity  {}\n\
             frobenius     {}\n\
             conductor     {}\n\
             genus         {}\n\
             gaps          {}\n\
             symmetric     {}\n",
            inv.multiplicity,
            inv.frobenius,
            inv.conductor,
            inv.genus,
            join(&inv.gaps, " "),
            if inv.symmetric {
                "yes (k[[H]] is Gorenstein)"
            } else {
                "no"
            },
        ),
    };
    Ok((text, false))
}

fn run_analyze(args: &AnalyzeArgs, format: Format) -> CmdResult {
    if args.s == 0 {
        return Err("s must be positive".to_string());
    }
    if args.q == 0 {
        return Err("q must be positive".to_string());
    }
    let h = semigroup_of(&args.gens)?;
    let report = analyze(&h, args.s, args.q).map_err(friendly)?;
    let text = match format {
        Format::Json => format!("{}\n", to_json!(&report)),
        Format::Csv => format!(
            "s,generators,integral_over_q,mq_stable,reduction_number,cm,vv_table,lengths\n{},{},{},{},{},{},{},{}\n",
            report.s,
            join(report.socle_ideal.generators(), " "),
            report.integral_over_q,
            report.mq_stable,
            reduction_text(report.reduction_number),
            cm_csv(report.cm),
            join(&report.vv_table, " "),
            join(&report.lengths, " "),
        ),
        Format::Markdown => {
            let rows = quasisocle::verify::table_rows(&h, args.q, &[args.s]).map_err(friendly)?;
            render_markdown(args.q, &rows)
        }
        Format::Human => {
            let q = args.q;
            let mut out = format!("H = {h}, s = {}, q = {q}\n", report.s);
            out += &format!("I = Q : m^{q} = {}\n", report.socle_ideal);
            out += &format!("integral over Q        {}\n", yes_no(report.integral_over_q));
            out += &format!("m^{q} I = m^{q} Q          {}\n", yes_no(report.mq_stable));
            out += &format!("r_Q(I)                 {}\n", reduction_text(report.reduction_number));
            out += &format!("G(I) Cohen-Macaulay    {}\n", cm_text(report.cm));
            if !report.vv_table.is_empty() {
                out += &format!(
                    "Q ∩ I^(n+1) = Q I^n    {}  (n = 1..{})\n",
                    join(
                        &report.vv_table.iter().map(|&b| yes_no(b)).collect::<Vec<_>>(),
                        " "
                    ),
                    report.vv_table.len()
                );
                out += &format!(
                    "l(I^(n+1) / Q I^n)     {}  (n = 0..{})\n",
                    join(&report.lengths, " "),
                    report.lengths.len() - 1
                );
            }
            out
        }
    };
    Ok((text, false))
}

fn rows_csv(rows: &[TableRow]) -> String {
    let mut out = String::from("s,generators,is_max_ideal,cm,reduction_number,mq_stable\n");
    for row in rows {
        out += &format!(
            "{},{},{},{},{},{}\n",
            row.s,
            join(&row.generators, " "),
            row.is_max_ideal,
            cm_csv(row.cm),
            reduction_text(row.reduction_number),
            row.mq_stable,
        );
    }
    out
}

fn parse_range(text: &str) -> Result<(u64, u64), String> {
    let parsed = text
        .split_once("..")
        .and_then(|(lo, hi)| Some((lo.parse::<u64>().ok()?, hi.parse::<u64>().ok()?)));
    match parsed {
        Some((lo, hi)) if lo >= 1 && lo <= hi => Ok((lo, hi)),
        _ => Err(format!("bad range `{text}`: expected LO..HI with 1 <= LO <= HI")),
    }
}

fn run_table(args: &TableArgs, format: Format) -> CmdResult {
    if args.q == 0 {
        return Err("q must be positive".to_string());
    }
    let h = semigroup_of(&args.gens)?;
    let (exponents, aggregate) = match (&args.s_list, &args.s_range) {
        (Some(list), None) => {
            if list.iter().any(|&s| s == 0) {
                return Err("s must be positive".to_string());
            }
            (list.clone(), false)
        }
        (None, Some(range)) => {
            let (lo, hi) = parse_range(range)?;
            let members = (lo..=hi).filter(|&s| h.contains(s as i64)).collect();
            (members, true)
        }
        _ => return Err("exactly one of --s-list and --s-range is required".to_string()),
    };
    let text = match format {
        Format::Human | Format::Markdown if aggregate => {
            pattern_markdown(&h, args.q, &exponents).map_err(friendly)?
        }
        Format::Human | Format::Markdown => {
            let rows = quasisocle::verify::table_rows(&h, args.q, &exponents).map_err(friendly)?;
            render_markdown(args.q, &rows)
        }
        Format::Csv => {
            let rows = quasisocle::verify::table_rows(&h, args.q, &exponents).map_err(friendly)?;
            rows_csv(&rows)
        }
        Format::Json => {
            let rows = quasisocle::verify::table_rows(&h, args.q, &exponents).map_err(friendly)?;
            format!("{}\n", to_json!(&rows))
        }
    };
    Ok((text, false))
}

fn outcome_human(o: &VerificationOutcome) -> String {
    let point = if o.parameters.is_empty() {
        String::new()
    } else {
        format!(
            " at {}",
            o.parameters
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect::<Vec<_>>()
                .join(", ")
        )
    };
    match (&o.conclusion_holds, &o.counterexample) {
        (None, _) => format!("{}{point}: hypotheses not met\n", o.statement_id),
        (Some(true), _) => format!("{}{point}: conclusion holds\n", o.statement_id),
        (Some(false), cx) => format!(
            "{}{point}: FAIL — {}\n",
            o.statement_id,
            cx.as_deref().unwrap_or("no counterexample recorded")
        ),
    }
}

fn outcome_params(o: &VerificationOutcome) -> String {
    o.parameters
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn point_check(args: &VerifyArgs, id: &str, bounds: &SweepBounds, format: Format) -> CmdResult {
    let params = StatementParams {
        generators: args.gens.clone(),
        alpha: args.alpha,
        a: args.a,
        q: args.q,
        s: args.s,
        ell: args.ell,
        r: args.r,
    };
    let outcome = check_statement_bounded(id, &params, bounds).map_err(friendly)?;
    let failed = outcome.conclusion_holds == Some(false);
    let text = match format {
        Format::Json => format!("{}\n", to_json!(&outcome)),
        Format::Csv => format!(
            "statement,parameters,hypotheses_met,conclusion_holds,counterexample\n{},{},{},{},{}\n",
            outcome.statement_id,
            csv_quote(&outcome_params(&outcome)),
            outcome.hypotheses_met,
            outcome
                .conclusion_holds
                .map(|b| b.to_string())
                .unwrap_or_default(),
            csv_quote(outcome.counterexample.as_deref().unwrap_or("")),
        ),
        Format::Markdown => format!(
            "| statement | parameters | hypotheses met | conclusion | counterexample |\n\
             |---|---|---|---|---|\n| {} | {} | {} | {} | {} |\n",
            outcome.statement_id,
            outcome_params(&outcome),
            if outcome.hypotheses_met { "Yes" } else { "No" },
            match outcome.conclusion_holds {
                Some(true) => "holds",
                Some(false) => "FAILS",
                None => "n/a",
            },
            outcome.counterexample.as_deref().unwrap_or(""),
        ),
        Format::Human => outcome_human(&outcome),
    };
    Ok((text, failed))
}

fn sweeps_text(reports: &[SweepReport], format: Format) -> String {
    match format {
        Format::Json => {
            let mut out = String::new();
            for report in reports {
                for outcome in &report.outcomes {
                    out += &to_json!(outcome);
                    out.push('\n');
                }
                let summary = serde_json::json!({
                    "statement_id": report.statement_id,
                    "summary": report.summary,
                });
                out += &summary.to_string();
                out.push('\n');
            }
            out
        }
        Format::Csv => {
            let mut out = String::from("statement,total,hypotheses_unmet,holds,fails\n");
            for r in reports {
                out += &format!(
                    "{},{},{},{},{}\n",
                    r.statement_id,
                    r.summary.total,
                    r.summary.hypotheses_unmet,
                    r.summary.holds,
                    r.summary.fails
                );
            }
            out
        }
        Format::Markdown => {
            let mut out =
                String::from("| statement | points | unmet | hold | fail |\n|---|---|---|---|---|\n");
            for r in reports {
                out += &format!(
                    "| {} | {} | {} | {} | {} |\n",
                    r.statement_id,
                    r.summary.total,
                    r.summary.hypotheses_unmet,
                    r.summary.holds,
                    r.summary.fails
                );
            }
            out
        }
        Format::Human => {
            let mut out = String::new();
            for r in reports {
                out += &format!(
                    "{}: {} points — {} hold, {} hypothesis-unmet, {} fail\n",
                    r.statement_id,
                    r.summary.total,
                    r.summary.holds,
                    r.summary.hypotheses_unmet,
                    r.summary.fails
                );
                for o in r.failures() {
                    out += &format!("  FAIL at {}: {}\n", outcome_params(o), o.counterexample.as_deref().unwrap_or(""));
                }
            }
            let fails: u64 = reports.iter().map(|r| r.summary.fails).sum();
            let holds: u64 = reports.iter().map(|r| r.summary.holds).sum();
            out += &if fails == 0 {
                format!("all conclusions hold ({holds} checked)\n")
            } else {
                format!("{fails} FAILING conclusions\n")
            };
            out
        }
    }
}

fn run_verify(args: &VerifyArgs, format: Format) -> CmdResult {
    if let Some(index) = args.criterion {
        let report =
            run_criterion(index).ok_or_else(|| format!("unknown criterion {index} (1-6)"))?;
        let failed = !report.passed;
        let verdict = if report.passed { "PASS" } else { "FAIL" };
        let text = match format {
            Format::Json => format!("{}\n", to_json!(&report)),
            Format::Csv => format!(
                "criterion,name,passed,detail\n{},{},{},{}\n",
                report.index,
                csv_quote(report.name),
                report.passed,
                csv_quote(&report.detail)
            ),
            Format::Markdown => format!(
                "| criterion | name | verdict | detail |\n|---|---|---|---|\n| {} | {} | {} | {} |\n",
                report.index, report.name, verdict, report.detail
            ),
            Format::Human => format!(
                "criterion {} ({}): {verdict} — {}\n",
                report.index, report.name, report.detail
            ),
        };
        return Ok((text, failed));
    }

    let defaults = SweepBounds::default();
    let bounds = SweepBounds {
        a_min: args.a_min.unwrap_or(defaults.a_min),
        a_max: args.a_max.unwrap_or(defaults.a_max),
        conductor_max: args.conductor_max.unwrap_or(defaults.conductor_max),
        s_factor: args.s_factor.unwrap_or(defaults.s_factor),
        q_extra: args.q_extra.unwrap_or(defaults.q_extra),
    };
    let has_point = args.gens.is_some()
        || args.alpha.is_some()
        || args.a.is_some()
        || args.q.is_some()
        || args.s.is_some()
        || args.ell.is_some()
        || args.r.is_some();
    match (&args.statement, has_point) {
        (Some(id), true) => point_check(args, id, &bounds, format),
        (Some(id), false) => {
            let report = sweep(id, &bounds).map_err(friendly)?;
            let failed = report.summary.fails > 0;
            Ok((sweeps_text(&[report], format), failed))
        }
        (None, true) => Err("point parameters need --statement".to_string()),
        (None, false) => {
            let reports = sweep_all(&bounds).map_err(friendly)?;
            let failed = reports.iter().any(|r| r.summary.fails > 0);
            Ok((sweeps_text(&reports, format), failed))
        }
    }
}

fn run_oracle(args: &OracleArgs, format: Format) -> CmdResult {
    let summary = random_oracle_trials(args.seed, args.trials);
    let failed = summary.disagreements > 0;
    let text = match format {
        Format::Json => format!("{}\n", to_json!(&summary)),
        Format::Csv => format!(
            "seed,trials,disagreements\n{},{},{}\n",
            summary.seed, summary.trials, summary.disagreements
        ),
        Format::Markdown => format!(
            "| seed | trials | disagreements |\n|---|---|---|\n| {} | {} | {} |\n",
            summary.seed, summary.trials, summary.disagreements
        ),
        Format::Human => {
            let mut out = format!(
                "seed {}, {} trials: {}\n",
                summary.seed,
                summary.trials,
                if failed {
                    format!("{} disagreements", summary.disagreements)
                } else {
                    "engine and dense model agree everywhere".to_string()
                }
            );
            for line in &summary.failures {
                out += &format!("  {line}\n");
            }
            out
        }
    };
    Ok((text, failed))
}

fn run(cli: &Cli) -> CmdResult {
    match &cli.command {
        Command::Semigroup(args) => run_semigroup(args, cli.format),
        Command::Analyze(args) => run_analyze(args, cli.format),
        Command::Table(args) => run_table(args, cli.format),
        Command::Verify(args) => run_verify(args, cli.format),
        Command::Oracle(args) => run_oracle(args, cli.format),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok((text, failed)) => {
            print!("{text}");
            if failed {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}
