use rayon::prelude::*;

use super::{Caveat, ColoringTuple, Method, TorusKnot, Verdict, Witness};
use crate::error::{Error, Result};
use crate::group::{CayleyTable, GroupContext};

pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    /// Cap on visited partial assignments.
    pub budget: u64,
    /// Restrict `x_0` to one element per conjugacy class.
    pub symmetry_reduction: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self { budget: DEFAULT_BUDGET, symmetry_reduction: true }
    }
}

impl SearchOptions {
    pub fn with_budget(budget: u64) -> Self {
        Self { budget, ..Self::default() }
    }
}

/// Index-level search over tuples of length `n` satisfying condition (ii).
///
/// With `m < n` only `x_0 .. x_{m-1}` are free: the common product `u` is then
/// fixed and each later `x_i` is forced by `x_{i-m+1} ⋯ x_i = u`. Otherwise
/// every position is enumerated.
struct Searcher<'a> {
    table: &'a CayleyTable,
    m: usize,
    n: usize,
}

impl Searcher<'_> {
    fn free_positions(&self) -> usize {
        if self.m < self.n {
            self.m
        } else {
            self.n
        }
    }

    /// Number of partial assignments the full tree visits.
    fn cost(&self, first_choices: usize) -> u128 {
        let g = self.table.len() as u128;
        let free = self.free_positions();
        let mut level = first_choices as u128;
        let mut total = 0u128;
        for d in 0..free {
            if d > 0 {
                level = level.saturating_mul(g);
            }
            total = total.saturating_add(level);
        }
        let forced = (self.n - free) as u128;
        total.saturating_add(level.saturating_mul(forced))
    }

    fn product(&self, buf: &[usize], start: usize, len: usize) -> usize {
        (0..len).fold(self.table.identity(), |acc, j| self.table.mul(acc, buf[(start + j) % self.n]))
    }

    fn satisfies_ii(&self, buf: &[usize]) -> bool {
        let first = self.product(buf, 0, self.m);
        (1..self.n).all(|i| self.product(buf, i, self.m) == first)
    }

    /// Visits every solution whose first entry is `x0`, in enumeration order.
    /// Stops early when `visit` returns `true`, and reports whether it did.
    fn run(&self, x0: usize, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        let mut buf = vec![0usize; self.n];
        buf[0] = x0;
        self.descend(1, &mut buf, visit)
    }

    fn descend(&self, pos: usize, buf: &mut [usize], visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if pos < self.free_positions() {
            for g in 0..self.table.len() {
                buf[pos] = g;
                if self.descend(pos + 1, buf, visit) {
                    return true;
                }
            }
            return false;
        }
        if self.m < self.n {
            let u = self.product(buf, 0, self.m);
            for i in self.m..self.n {
                let prefix = self.product(buf, i + 1 - self.m, self.m - 1);
                buf[i] = self.table.mul(self.table.inverse(prefix), u);
            }
        }
        self.satisfies_ii(buf) && visit(buf)
    }
}

fn prepare(ctx: &GroupContext, knot: TorusKnot, budget: u64, reduce: bool) -> Result<(CayleyTable, Vec<usize>)> {
    let table = CayleyTable::new(*ctx).map_err(|e| Error::SearchInfeasible(e.to_string()))?;
    let firsts: Vec<usize> = if reduce { table.class_representatives() } else { (0..table.len()).collect() };
    let searcher = Searcher { table: &table, m: knot.m() as usize, n: knot.n() as usize };
    let cost = searcher.cost(firsts.len());
    if cost > budget as u128 {
        return Err(Error::SearchInfeasible(format!(
            "{knot} over {ctx} needs {cost} partial assignments, budget is {budget}"
        )));
    }
    Ok((table, firsts))
}

fn to_tuple(table: &CayleyTable, buf: &[usize]) -> ColoringTuple {
    ColoringTuple::new_unchecked(table.ctx(), buf.iter().map(|&i| table.element(i).clone()).collect())
}

/// Exhaustive search for a nontrivial coloring of `knot`.
///
/// Returns the first nontrivial tuple in enumeration order, or a negative
/// verdict once the whole space is exhausted. Refuses up front with
/// "search infeasible" when the tree exceeds the budget.
pub fn brute_force_search(ctx: &GroupContext, knot: TorusKnot, options: SearchOptions) -> Result<Verdict> {
    let (table, firsts) = prepare(ctx, knot, options.budget, options.symmetry_reduction)?;
    let searcher = Searcher { table: &table, m: knot.m() as usize, n: knot.n() as usize };
    let found = firsts.par_iter().find_map_first(|&x0| {
        let mut hit = None;
        searcher.run(x0, &mut |buf| {
            if buf.iter().any(|&g| g != buf[0]) {
                hit = Some(buf.to_vec());
                true
            } else {
                false
            }
        });
        hit
    });
    let mut verdict = match found {
        Some(buf) => Verdict::new(true, Method::Bruteforce).with_witness(Witness::Tuple(to_tuple(&table, &buf))),
        None => Verdict::new(false, Method::Bruteforce),
    };
    if knot.is_unknot() {
        verdict = verdict.with_caveat(Caveat::UnknotTrivialOnly);
    }
    Ok(verdict)
}

/// Calls `f` on every tuple (trivial ones included) that colors `knot`.
pub fn for_each_coloring(
    ctx: &GroupContext,
    knot: TorusKnot,
    budget: u64,
    mut f: impl FnMut(&ColoringTuple),
) -> Result<()> {
    let (table, firsts) = prepare(ctx, knot, budget, false)?;
    let searcher = Searcher { table: &table, m: knot.m() as usize, n: knot.n() as usize };
    for x0 in firsts {
        searcher.run(x0, &mut |buf| {
            f(&to_tuple(&table, buf));
            false
        });
    }
    Ok(())
}

/// Number of tuples (trivial ones included) that color `knot`.
pub fn count_colorings(ctx: &GroupContext, knot: TorusKnot, budget: u64) -> Result<u64> {
    let (table, firsts) = prepare(ctx, knot, budget, false)?;
    let searcher = Searcher { table: &table, m: knot.m() as usize, n: knot.n() as usize };
    Ok(firsts
        .par_iter()
        .map(|&x0| {
            let mut count = 0u64;
            searcher.run(x0, &mut |_| {
                count += 1;
                false
            });
            count
        })
        .sum())
}
