//! Sweeps: predicate truth tables, the predicate / criterion / oracle
//! crosscheck, and the type-4 closed-form comparison.

use std::io::Write;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::arith::odd_primes_up_to;
use crate::coloring::{brute_force_search, decide_by_criterion, SearchOptions, TorusKnot};
use crate::error::{Error, Result};
use crate::families::{
    is_irreducible, predicate, type4_recurrence, type4_yn_closed_form, type4_yn_plus_form,
};
use crate::field::FieldElement;
use crate::group::{Family, GroupContext};
use crate::transforms::{decide_general, reduce_to_prime_pairs};

pub const TABLE_HEADER: [&str; 6] = ["family", "param", "p", "predicate", "criterion", "agree"];
pub const CROSSCHECK_HEADER: [&str; 9] =
    ["family", "param", "m", "n", "predicate", "criterion", "oracle", "agree", "runtime_ms"];
pub const CLOSED_FORM_HEADER: [&str; 9] =
    ["q", "a", "b", "n", "recurrence", "minus_form", "plus_form", "minus_agrees", "plus_agrees"];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub family: &'static str,
    pub param: u32,
    pub p: u64,
    pub predicate: bool,
    pub criterion: bool,
    pub agree: bool,
}

/// Predicate and criterion for every `param` and every odd prime `p <= max_p`,
/// rows ordered by `param` then `p`.
pub fn predicate_table(family: Family, params: &[u32], max_p: u64) -> Result<Vec<TableRow>> {
    let cells: Vec<(GroupContext, u64)> = params
        .iter()
        .map(|&param| GroupContext::new(family, param))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flat_map(|ctx| odd_primes_up_to(max_p).into_iter().map(move |p| (ctx, p)))
        .collect();
    cells
        .par_iter()
        .map(|&(ctx, p)| {
            let predicate = predicate(&ctx, p)?;
            let criterion = decide_by_criterion(&ctx, p)?.colorable;
            Ok(TableRow {
                family: family.tag(),
                param: ctx.param(),
                p,
                predicate,
                criterion,
                agree: predicate == criterion,
            })
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Agreement {
    Agree,
    Disagreement,
    /// The oracle did not run within budget.
    Unconfirmed,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrosscheckRow {
    pub family: &'static str,
    pub param: u32,
    pub m: u64,
    pub n: u64,
    pub predicate: Option<bool>,
    pub criterion: bool,
    pub oracle: Option<bool>,
    pub agree: Agreement,
    pub runtime_ms: u64,
}

/// The family predicate lifted to `K(m, n)` through the odd primes of the
/// prime pairs, mirroring [`decide_general`].
pub fn predicate_general(ctx: &GroupContext, m: u64, n: u64) -> Result<bool> {
    for pair in reduce_to_prime_pairs(m, n)? {
        for r in [pair.q, pair.p] {
            if r != 2 && predicate(ctx, r)? {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

fn crosscheck_cell(ctx: GroupContext, m: u64, n: u64, options: SearchOptions) -> Result<CrosscheckRow> {
    let start = Instant::now();
    let knot = TorusKnot::new(m, n)?;
    let predicate = Some(predicate_general(&ctx, m, n)?);
    let criterion = decide_general(&ctx, m, n)?.colorable;
    let oracle = match brute_force_search(&ctx, knot, options) {
        Ok(v) => Some(v.colorable),
        Err(Error::SearchInfeasible(_)) => None,
        Err(e) => return Err(e),
    };
    let agree = match oracle {
        None => Agreement::Unconfirmed,
        Some(o) if o == criterion && predicate.map_or(true, |p| p == o) => Agreement::Agree,
        Some(_) => Agreement::Disagreement,
    };
    Ok(CrosscheckRow {
        family: ctx.family().tag(),
        param: ctx.param(),
        m,
        n,
        predicate,
        criterion,
        oracle,
        agree,
        runtime_ms: start.elapsed().as_millis() as u64,
    })
}

/// Runs every coprime cell of `groups × ms × ns`. Rows follow grid order;
/// pairs with `gcd(m, n) > 1` are skipped.
pub fn crosscheck(
    groups: &[GroupContext],
    ms: &[u64],
    ns: &[u64],
    options: SearchOptions,
) -> Result<Vec<CrosscheckRow>> {
    let cells: Vec<(GroupContext, u64, u64)> = groups
        .iter()
        .flat_map(|&g| ms.iter().flat_map(move |&m| ns.iter().map(move |&n| (g, m, n))))
        .filter(|&(_, m, n)| m > 0 && n > 0 && TorusKnot::new(m, n).is_ok())
        .collect();
    cells.par_iter().map(|&(g, m, n)| crosscheck_cell(g, m, n, options)).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct CrosscheckSummary {
    pub rows: usize,
    pub agree: usize,
    pub disagreement: usize,
    pub unconfirmed: usize,
}

pub fn summarize(rows: &[CrosscheckRow]) -> CrosscheckSummary {
    let mut s = CrosscheckSummary { rows: rows.len(), ..Default::default() };
    for r in rows {
        match r.agree {
            Agreement::Agree => s.agree += 1,
            Agreement::Disagreement => s.disagreement += 1,
            Agreement::Unconfirmed => s.unconfirmed += 1,
        }
    }
    s
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosedFormRow {
    pub q: u32,
    pub a: u32,
    pub b: u32,
    pub n: u64,
    pub recurrence: u32,
    pub minus_form: u32,
    pub plus_form: String,
    pub minus_agrees: bool,
    pub plus_agrees: bool,
}

/// Recurrence against both closed forms for every irreducible `(a, b)` over
/// each odd `q` and every `n <= max_n`.
pub fn closed_form_table(qs: &[u32], max_n: u64) -> Result<Vec<ClosedFormRow>> {
    let mut rows = Vec::new();
    for &q in qs {
        if q == 2 {
            continue;
        }
        for a in 0..q {
            for b in 0..q {
                let (fa, fb) = (FieldElement::new(a as i64, q), FieldElement::new(b as i64, q));
                if !is_irreducible(fa, fb) {
                    continue;
                }
                for n in 0..=max_n {
                    let recurrence = type4_recurrence(fa, fb, n)?.y;
                    let minus = type4_yn_closed_form(fa, fb, n)?.value();
                    let plus = type4_yn_plus_form(fa, fb, n)?;
                    rows.push(ClosedFormRow {
                        q,
                        a,
                        b,
                        n,
                        recurrence,
                        minus_form: minus,
                        plus_form: plus.to_string(),
                        minus_agrees: minus == recurrence,
                        plus_agrees: plus.in_base_field() && plus.a0().value() == recurrence,
                    });
                }
            }
        }
    }
    Ok(rows)
}

/// Writes `header` and then one record per row. The header is written even
/// when there are no rows.
pub fn write_csv<W: Write, T: Serialize>(out: W, header: &[&str], rows: &[T]) -> Result<()> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(out);
    let csv_err = |e: csv::Error| Error::Internal(format!("csv output: {e}"));
    w.write_record(header).map_err(csv_err)?;
    for row in rows {
        w.serialize(row).map_err(csv_err)?;
    }
    w.flush().map_err(|e| Error::Internal(format!("csv output: {e}")))?;
    Ok(())
}
