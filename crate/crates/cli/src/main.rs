//! `qc`: decide, construct and verify conjugation-quandle colorings of torus
//! knots, and sweep group families into tables.
//!
//! Exit codes: `0` colorable / verified / clean sweep, `1` not colorable /
//! not verified / disagreement under `--strict`, `2` usage or input error.

mod list;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use list::IntList;
use torus_coloring::arith::odd_primes_up_to;
use torus_coloring::coloring::{
    brute_force_search, classify_tuple, harlequin, verify_tuple_ii, verify_tuple_iii, DEFAULT_BUDGET,
};
use torus_coloring::experiments::{
    closed_form_table, crosscheck, predicate_table, summarize, write_csv, Agreement, CLOSED_FORM_HEADER,
    CROSSCHECK_HEADER, TABLE_HEADER,
};
use torus_coloring::transforms::{construct_coloring, decide_general, Construction};
use torus_coloring::{
    Caveat, ColoringClass, ColoringTuple, Error, Family, GroupContext, GroupElement, SearchOptions, TorusKnot,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Json,
    Csv,
    Text,
}

#[derive(Parser)]
#[command(name = "qc", version, about = "Conjugation-quandle colorings of torus knots")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct SearchArgs {
    /// Cap on partial assignments visited by the exhaustive search.
    #[arg(long, env = "QC_BUDGET", default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Search every first color instead of one per conjugacy class.
    #[arg(long)]
    no_symmetry_reduction: bool,
}

impl SearchArgs {
    fn options(&self) -> anyhow::Result<SearchOptions> {
        if self.budget == 0 {
            bail!("--budget must be at least 1");
        }
        Ok(SearchOptions { budget: self.budget, symmetry_reduction: !self.no_symmetry_reduction })
    }
}

#[derive(Subcommand)]
enum Command {
    /// Decide colorability of K(m,n) through the prime-pair reduction.
    Decide {
        /// Group descriptor: S:<n>, D:<n>, GL2:<q> or SL2:<q>.
        #[arg(long)]
        group: GroupContext,
        #[arg(long)]
        m: IntList,
        #[arg(long)]
        n: IntList,
        /// Confirm the verdict with the exhaustive search when it fits the budget.
        #[arg(long)]
        confirm: bool,
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long, value_enum, default_value_t = Output::Json)]
        output: Output,
    },
    /// Construct a verified nontrivial coloring with its bridge colors.
    Color {
        #[arg(long)]
        group: GroupContext,
        #[arg(long)]
        m: IntList,
        #[arg(long)]
        n: IntList,
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long, value_enum, default_value_t = Output::Json)]
        output: Output,
    },
    /// Check a tuple file (JSON array of element strings) against K(m,n).
    Verify {
        #[arg(long)]
        group: GroupContext,
        #[arg(long)]
        m: IntList,
        /// Expected tuple length; defaults to the length of the file.
        #[arg(long)]
        n: Option<IntList>,
        #[arg(long)]
        tuple: PathBuf,
        #[arg(long, value_enum, default_value_t = Output::Json)]
        output: Output,
    },
    /// Predicate and criterion truth table for a family.
    Table {
        /// gl2, sl2, dihedral or symmetric.
        #[arg(long)]
        family: Family,
        /// Field sizes for gl2/sl2.
        #[arg(long)]
        q: Option<IntList>,
        /// Degrees for dihedral/symmetric.
        #[arg(long)]
        n: Option<IntList>,
        /// Family parameters, for any family.
        #[arg(long)]
        param: Option<IntList>,
        #[arg(long, default_value_t = 13)]
        max_p: u64,
        #[arg(long, value_enum, default_value_t = Output::Csv)]
        output: Output,
    },
    /// Compare predicate, criterion and exhaustive search cell by cell.
    Crosscheck {
        /// Group descriptors, comma separated or repeated.
        #[arg(long, value_delimiter = ',')]
        group: Vec<GroupContext>,
        /// Sweep a family instead of listing groups.
        #[arg(long)]
        family: Option<Family>,
        #[arg(long)]
        q: Option<IntList>,
        #[arg(long)]
        param: Option<IntList>,
        #[arg(long)]
        m: IntList,
        /// Strand counts; defaults to the odd primes up to --max-p.
        #[arg(long)]
        n: Option<IntList>,
        #[arg(long)]
        max_p: Option<u64>,
        /// Exit 1 if any row is a DISAGREEMENT.
        #[arg(long)]
        strict: bool,
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long, value_enum, default_value_t = Output::Csv)]
        output: Output,
    },
    /// Type-4 recurrence against both closed forms of y_n.
    ClosedForm {
        #[arg(long, default_value = "3,5,7,11,13")]
        q: IntList,
        #[arg(long, default_value_t = 60)]
        max_n: u64,
        #[arg(long, value_enum, default_value_t = Output::Csv)]
        output: Output,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> anyhow::Result<u8> {
    match command {
        Command::Decide { group, m, n, confirm, search, output } => {
            cmd_decide(group, m.single("m")?, n.single("n")?, confirm.then_some(search), output)
        }
        Command::Color { group, m, n, search, output } => {
            cmd_color(group, m.single("m")?, n.single("n")?, search.options()?, output)
        }
        Command::Verify { group, m, n, tuple, output } => {
            let n = n.map(|l| l.single("n")).transpose()?;
            cmd_verify(group, m.single("m")?, n, &tuple, output)
        }
        Command::Table { family, q, n, param, max_p, output } => {
            let params = params_for(family, q, n, param)?;
            cmd_table(family, &params, max_p, output)
        }
        Command::Crosscheck { group, family, q, param, m, n, max_p, strict, search, output } => {
            let mut groups = group;
            if let Some(family) = family {
                for p in params_for(family, q, None, param)? {
                    groups.push(GroupContext::new(family, p)?);
                }
            }
            let ns = match (n, max_p) {
                (Some(n), _) => n.0,
                (None, Some(max_p)) => odd_primes_up_to(max_p),
                (None, None) => bail!("crosscheck needs --n or --max-p"),
            };
            cmd_crosscheck(&groups, &m.0, &ns, strict, search.options()?, output)
        }
        Command::ClosedForm { q, max_n, output } => {
            let qs = q.0.iter().map(|&v| u32::try_from(v)).collect::<Result<Vec<_>, _>>()?;
            let rows = closed_form_table(&qs, max_n)?;
            match output {
                Output::Json => print_json(&rows)?,
                _ => write_csv(io::stdout().lock(), &CLOSED_FORM_HEADER, &rows)?,
            }
            let bad = rows.iter().filter(|r| !r.minus_agrees).count();
            let plus_bad = rows.iter().filter(|r| !r.plus_agrees).count();
            eprintln!("{} rows; minus form disagrees in {bad}, plus form in {plus_bad}", rows.len());
            Ok(u8::from(bad > 0))
        }
    }
}

fn params_for(
    family: Family,
    q: Option<IntList>,
    n: Option<IntList>,
    param: Option<IntList>,
) -> anyhow::Result<Vec<u32>> {
    let list = match family {
        Family::GL2 | Family::SL2 => param.or(q),
        Family::Dihedral | Family::Symmetric => param.or(n),
    };
    let Some(list) = list else {
        let flag = if matches!(family, Family::GL2 | Family::SL2) { "--q" } else { "--n" };
        bail!("{} needs {flag} (or --param)", family.tag());
    };
    list.0.into_iter().map(|v| u32::try_from(v).context("parameter out of range")).collect()
}

fn print_json<T: Serialize + ?Sized>(value: &T) -> anyhow::Result<()> {
    let mut out = io::stdout().lock();
    serde_json::to_writer(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}

fn strings(elems: &[GroupElement]) -> String {
    elems.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

fn cmd_decide(group: GroupContext, m: u64, n: u64, confirm: Option<SearchArgs>, output: Output) -> anyhow::Result<u8> {
    let mut verdict = decide_general(&group, m, n)?;
    if let Some(search) = confirm {
        match brute_force_search(&group, TorusKnot::new(m, n)?, search.options()?) {
            Ok(oracle) if oracle.colorable == verdict.colorable => {
                verdict.caveats.remove(&Caveat::SufficiencyUnverified);
                eprintln!("confirmed by exhaustive search");
            }
            Ok(oracle) => {
                eprintln!(
                    "exhaustive search contradicts the reduction verdict ({} vs {}); reporting the search result",
                    oracle.colorable, verdict.colorable
                );
                verdict = oracle;
            }
            Err(Error::SearchInfeasible(msg)) => eprintln!("not confirmed: {msg}"),
            Err(e) => return Err(e.into()),
        }
    }
    match output {
        Output::Text => {
            let mut line = format!("K({m},{n}) over {group}: colorable={} method={}", verdict.colorable, verdict.method);
            if let Some((p, q)) = verdict.prime_pair {
                line += &format!(" pair=({p},{q})");
            }
            if let Some((u, x0)) = verdict.witness_pair() {
                line += &format!(" u={u} x0={x0}");
            }
            if let Some(t) = verdict.witness_tuple() {
                line += &format!(" tuple={t}");
            }
            for c in &verdict.caveats {
                line += &format!(" [{}]", serde_json::to_value(c)?.as_str().unwrap_or_default());
            }
            println!("{line}");
        }
        _ => print_json(&verdict)?,
    }
    Ok(u8::from(!verdict.colorable))
}

#[derive(Serialize)]
struct ColorReport<'a> {
    group: String,
    m: u64,
    n: u64,
    tuple: &'a ColoringTuple,
    harlequin: &'a GroupElement,
    bridges: &'a [GroupElement],
    construction: Construction,
    fallback: Option<&'a str>,
}

fn cmd_color(group: GroupContext, m: u64, n: u64, options: SearchOptions, output: Output) -> anyhow::Result<u8> {
    let constructed = match construct_coloring(&group, m, n, options) {
        Ok(c) => c,
        Err(Error::SearchInfeasible(msg)) => {
            eprintln!("no verified coloring: criterion witnesses failed and the exhaustive search is infeasible ({msg})");
            return Ok(1);
        }
        Err(e) => return Err(e.into()),
    };
    let Some(c) = constructed else {
        eprintln!("K({m},{n}) has no nontrivial coloring over {group}: no criterion witness verified and the exhaustive search found none");
        return Ok(1);
    };
    if let Some(note) = &c.fallback {
        eprintln!("fell back to exhaustive search: {note}");
    }
    let report = ColorReport {
        group: group.to_string(),
        m,
        n,
        tuple: &c.coloring.tuple,
        harlequin: &c.coloring.harlequin,
        bridges: &c.bridges.bridges,
        construction: c.construction,
        fallback: c.fallback.as_deref(),
    };
    match output {
        Output::Text => {
            println!("tuple: {}", report.tuple);
            println!("harlequin: {}", report.harlequin);
            println!("bridges: ({})", strings(report.bridges));
        }
        _ => print_json(&report)?,
    }
    Ok(0)
}

#[derive(Serialize)]
struct VerifyReport {
    group: String,
    m: u64,
    n: u64,
    condition_ii: bool,
    condition_iii: bool,
    harlequin: GroupElement,
    class: ColoringClass,
}

fn cmd_verify(group: GroupContext, m: u64, n: Option<u64>, path: &PathBuf, output: Output) -> anyhow::Result<u8> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let colors: Vec<String> = serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
    let tuple = ColoringTuple::parse(group, &colors)?;
    if let Some(n) = n {
        if tuple.len() as u64 != n {
            return Err(Error::ShapeMismatch(format!("expected {n} colors, found {}", tuple.len())).into());
        }
    }
    let report = VerifyReport {
        group: group.to_string(),
        m,
        n: tuple.len() as u64,
        condition_ii: verify_tuple_ii(&tuple, m)?,
        condition_iii: verify_tuple_iii(&tuple, m)?,
        harlequin: harlequin(&tuple, m)?,
        class: classify_tuple(&tuple),
    };
    match output {
        Output::Text => println!(
            "condition (ii): {}\ncondition (iii): {}\nharlequin: {}\nclass: {}",
            report.condition_ii,
            report.condition_iii,
            report.harlequin,
            serde_json::to_value(report.class)?.as_str().unwrap_or_default()
        ),
        _ => print_json(&report)?,
    }
    Ok(u8::from(!report.condition_iii))
}

fn cmd_table(family: Family, params: &[u32], max_p: u64, output: Output) -> anyhow::Result<u8> {
    let rows = predicate_table(family, params, max_p)?;
    match output {
        Output::Json => print_json(&rows)?,
        Output::Csv => write_csv(io::stdout().lock(), &TABLE_HEADER, &rows)?,
        Output::Text => {
            for r in &rows {
                println!(
                    "{}:{} p={} predicate={} criterion={}{}",
                    r.family,
                    r.param,
                    r.p,
                    r.predicate,
                    r.criterion,
                    if r.agree { "" } else { " MISMATCH" }
                );
            }
        }
    }
    Ok(0)
}

fn cmd_crosscheck(
    groups: &[GroupContext],
    ms: &[u64],
    ns: &[u64],
    strict: bool,
    options: SearchOptions,
    output: Output,
) -> anyhow::Result<u8> {
    let rows = crosscheck(groups, ms, ns, options)?;
    let summary = summarize(&rows);
    match output {
        Output::Json => {
            #[derive(Serialize)]
            struct Report<'a, R, S> {
                rows: &'a [R],
                summary: S,
            }
            print_json(&Report { rows: &rows, summary })?;
        }
        Output::Csv => write_csv(io::stdout().lock(), &CROSSCHECK_HEADER, &rows)?,
        Output::Text => {
            for r in &rows {
                let show = |v: Option<bool>| v.map_or("-".to_string(), |b| b.to_string());
                println!(
                    "{}:{} K({},{}) predicate={} criterion={} oracle={} {}",
                    r.family,
                    r.param,
                    r.m,
                    r.n,
                    show(r.predicate),
                    r.criterion,
                    show(r.oracle),
                    serde_json::to_value(r.agree)?.as_str().unwrap_or_default()
                );
            }
        }
    }
    eprintln!(
        "{} rows: {} agree, {} disagreement, {} unconfirmed",
        summary.rows, summary.agree, summary.disagreement, summary.unconfirmed
    );
    let disagreement = rows.iter().any(|r| r.agree == Agreement::Disagreement);
    Ok(u8::from(strict && disagreement))
}
