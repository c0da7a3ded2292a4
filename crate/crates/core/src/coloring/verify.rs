use super::{check_knot, BridgeColors, ColoringClass, ColoringTuple};
use crate::error::{Error, Result};
use crate::group::GroupElement;
use crate::quandle::conjugate;

/// Product of `m` cyclically consecutive colors starting at `start`.
fn window_product(tuple: &ColoringTuple, start: i64, m: u64) -> GroupElement {
    let ctx = tuple.ctx();
    (0..m as i64).fold(ctx.identity(), |acc, j| ctx.mul_unchecked(&acc, tuple.at(start + j)))
}

/// `u = x_{n-m} x_{n-m+1} ⋯ x_{n-1}`, indices mod `n`.
pub fn harlequin(tuple: &ColoringTuple, m: u64) -> Result<GroupElement> {
    let n = tuple.len() as u64;
    check_knot(m, n)?;
    Ok(window_product(tuple, n as i64 - m as i64, m))
}

/// All `n` products `x_i x_{i+1} ⋯ x_{i+m-1}` coincide.
pub fn verify_tuple_ii(tuple: &ColoringTuple, m: u64) -> Result<bool> {
    let n = tuple.len() as u64;
    check_knot(m, n)?;
    let first = window_product(tuple, 0, m);
    Ok((1..n as i64).all(|i| window_product(tuple, i, m) == first))
}

/// `x_i ▷ u = x_{i-m}` for every `i`, with `u` the harlequin.
pub fn verify_tuple_iii(tuple: &ColoringTuple, m: u64) -> Result<bool> {
    let u = harlequin(tuple, m)?;
    let ctx = tuple.ctx();
    Ok((0..tuple.len() as i64).all(|i| conjugate(tuple.at(i), &u, &ctx) == *tuple.at(i - m as i64)))
}

pub fn classify_tuple(tuple: &ColoringTuple) -> ColoringClass {
    let first = &tuple.colors()[0];
    if tuple.colors().iter().all(|x| x == first) {
        ColoringClass::Trivial
    } else {
        ColoringClass::Nontrivial
    }
}

/// Bridge colors of the braid diagram: `y_0 = x_0` and
/// `y_j = (((x_j ▷ y_0) ▷ y_1) ⋯) ▷ y_{j-1}`.
///
/// Also checks that pushing every initial arc under all `m` bridges lands on
/// `x_{i-m}`; a failure there is an internal error.
pub fn expand_to_diagram(tuple: &ColoringTuple, m: u64) -> Result<BridgeColors> {
    let n = tuple.len() as u64;
    if !verify_tuple_iii(tuple, m)? {
        return Err(Error::NotAColoring { m, n });
    }
    let ctx = tuple.ctx();
    let pass_under = |x: &GroupElement, bridges: &[GroupElement]| {
        bridges.iter().fold(x.clone(), |acc, y| conjugate(&acc, y, &ctx))
    };
    let mut bridges: Vec<GroupElement> = Vec::with_capacity(m as usize);
    for j in 0..m as i64 {
        let y = pass_under(tuple.at(j), &bridges);
        bridges.push(y);
    }
    for i in 0..n as i64 {
        let terminal = pass_under(tuple.at(i), &bridges);
        if terminal != *tuple.at(i - m as i64) {
            return Err(Error::Internal(format!(
                "bridge expansion of {tuple} for m={m} sends arc {i} to {terminal}, expected {}",
                tuple.at(i - m as i64)
            )));
        }
    }
    Ok(BridgeColors { bridges })
}
