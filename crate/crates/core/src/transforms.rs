//! Moving colorings between torus knots, and reducing `K(m, n)` to prime
//! parameter pairs.

use std::collections::HashMap;

use serde::Serialize;

use crate::arith::distinct_prime_factors;
use crate::coloring::{
    brute_force_search, check_knot, decide_by_criterion, expand_to_diagram, verify_tuple_iii, witness_to_tuple,
    BridgeColors, Caveat, Coloring, ColoringTuple, Method, SearchOptions, TorusKnot, Verdict,
};
use crate::error::{Error, Result};
use crate::group::GroupContext;

fn require_coloring(tuple: &ColoringTuple, m: u64) -> Result<()> {
    if !verify_tuple_iii(tuple, m)? {
        return Err(Error::NotAColoring { m, n: tuple.len() as u64 });
    }
    Ok(())
}

fn reverify(tuple: ColoringTuple, m: u64, what: &str) -> Result<Coloring> {
    let n = tuple.len();
    Coloring::verify(tuple, m).map_err(|e| match e {
        Error::NotAColoring { .. } => Error::Internal(format!("{what} produced a tuple that fails for K({m},{n})")),
        other => other,
    })
}

/// A coloring of `K(m, n)` is also a coloring of `K(t m, n)`; the harlequin
/// becomes `u^t`.
pub fn extend_twists(tuple: &ColoringTuple, m: u64, t: u64) -> Result<Coloring> {
    let n = tuple.len() as u64;
    check_knot(t * m, n)?;
    require_coloring(tuple, m)?;
    reverify(tuple.clone(), t * m, "twist extension")
}

/// Repeats the tuple `t` times, giving a coloring of `K(m, t n)`.
pub fn extend_strands(tuple: &ColoringTuple, m: u64, t: u64) -> Result<Coloring> {
    let n = tuple.len() as u64;
    if t == 0 {
        return Err(Error::ShapeMismatch("t must be positive".into()));
    }
    check_knot(m, t * n)?;
    require_coloring(tuple, m)?;
    let colors = tuple.colors().iter().cycle().take((t * n) as usize).cloned().collect();
    reverify(ColoringTuple::new(tuple.ctx(), colors)?, m, "strand extension")
}

/// Multiplies consecutive blocks of `t` colors, turning a coloring of
/// `K(m, t n)` into a (possibly trivial) coloring of `K(m, n)` with
/// harlequin `v^t`.
pub fn contract_strands(tuple: &ColoringTuple, n: u64, t: u64, m: u64) -> Result<Coloring> {
    if t == 0 || n == 0 || tuple.len() as u64 != t * n {
        return Err(Error::ShapeMismatch(format!(
            "a tuple of length {} cannot be cut into {n} blocks of {t}",
            tuple.len()
        )));
    }
    check_knot(m, n)?;
    require_coloring(tuple, m)?;
    let ctx = tuple.ctx();
    let colors = tuple
        .colors()
        .chunks(t as usize)
        .map(|block| block.iter().try_fold(ctx.identity(), |acc, y| ctx.mul(&acc, y)))
        .collect::<Result<Vec<_>>>()?;
    reverify(ColoringTuple::new(ctx, colors)?, m, "strand contraction")
}

/// A prime `p | m` paired with a prime `q | n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PrimePair {
    pub p: u64,
    pub q: u64,
}

/// Every pair of prime divisors `(p | m, q | n)` in lexicographic order.
/// Empty when `m = 1` or `n = 1`.
pub fn reduce_to_prime_pairs(m: u64, n: u64) -> Result<Vec<PrimePair>> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidKnot { m, n });
    }
    check_knot(m, n)?;
    let qs = distinct_prime_factors(n);
    Ok(distinct_prime_factors(m)
        .into_iter()
        .flat_map(|p| qs.iter().map(move |&q| PrimePair { p, q }))
        .collect())
}

/// Decides `K(m, n)` by running the criterion on the prime pairs of `(m, n)`,
/// trying `q` before `p` within each pair and stopping at the first success.
///
/// Only odd primes are tested; every pair has at least one.
pub fn decide_general(ctx: &GroupContext, m: u64, n: u64) -> Result<Verdict> {
    let knot = TorusKnot::new(m, n)?;
    if knot.is_unknot() {
        return Ok(Verdict::new(false, Method::Reduction).with_caveat(Caveat::UnknotTrivialOnly));
    }
    let mut cache: HashMap<u64, Verdict> = HashMap::new();
    for pair in reduce_to_prime_pairs(m, n)? {
        for prime in [pair.q, pair.p] {
            if prime == 2 {
                continue;
            }
            let verdict = match cache.get(&prime) {
                Some(v) => v.clone(),
                None => {
                    let v = decide_by_criterion(ctx, prime)?;
                    cache.insert(prime, v.clone());
                    v
                }
            };
            if verdict.colorable {
                return Ok(Verdict {
                    colorable: true,
                    method: Method::Reduction,
                    witness: verdict.witness,
                    prime_pair: Some((pair.p, pair.q)),
                    caveats: verdict.caveats,
                });
            }
        }
    }
    Ok(Verdict::new(false, Method::Reduction).with_caveat(Caveat::SufficiencyUnverified))
}

/// Where a constructed coloring came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase", tag = "source")]
pub enum Construction {
    /// Criterion witness for a prime `q | n`, repeated `n / q` times.
    Criterion { q: u64 },
    /// Exhaustive search.
    Oracle,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstructedColoring {
    pub coloring: Coloring,
    pub bridges: BridgeColors,
    pub construction: Construction,
    /// Why the criterion route was abandoned, when it was.
    pub fallback: Option<String>,
}

/// Produces a verified nontrivial coloring of `K(m, n)`, or `None` when the
/// search proves there is none.
///
/// Tries the criterion witness for each prime `q | n`, turned into a tuple
/// and extended along the strands. If no witness survives verification the
/// exhaustive search decides.
pub fn construct_coloring(
    ctx: &GroupContext,
    m: u64,
    n: u64,
    options: SearchOptions,
) -> Result<Option<ConstructedColoring>> {
    let knot = TorusKnot::new(m, n)?;
    let mut notes = Vec::new();
    if !knot.is_unknot() {
        for q in distinct_prime_factors(n) {
            let verdict = decide_by_criterion(ctx, q)?;
            let Some((u, x0)) = verdict.witness_pair() else {
                notes.push(format!("criterion fails at q={q}"));
                continue;
            };
            let (tuple, verified) = witness_to_tuple(u, x0, m, q, ctx)?;
            if !verified || tuple.is_trivial() {
                notes.push(format!("witness u={u}, x0={x0} for q={q} does not color K({m},{q})"));
                continue;
            }
            let coloring = extend_strands(&tuple, m, n / q)?;
            let bridges = expand_to_diagram(&coloring.tuple, m)?;
            return Ok(Some(ConstructedColoring {
                coloring,
                bridges,
                construction: Construction::Criterion { q },
                fallback: None,
            }));
        }
    }
    if notes.is_empty() {
        notes.push("no prime of n is usable".into());
    }
    let verdict = brute_force_search(ctx, knot, options)?;
    let Some(tuple) = verdict.witness_tuple() else {
        return Ok(None);
    };
    let coloring = Coloring::verify(tuple.clone(), m)?;
    let bridges = expand_to_diagram(&coloring.tuple, m)?;
    Ok(Some(ConstructedColoring {
        coloring,
        bridges,
        construction: Construction::Oracle,
        fallback: Some(notes.join("; ")),
    }))
}
