//! Closed-form colorability predicates for `GL(2,q)`, `SL(2,q)`, `D_n` and
//! `S_n`, together with the conjugacy-type machinery for 2x2 matrices.

mod type4;
mod types;

pub use type4::{scalar_power_test, type4_recurrence, type4_yn_closed_form, type4_yn_plus_form, RecurrencePair};
pub use types::{
    class_representatives_by_type, classify_gl2, gl2_representatives, is_irreducible, sl2_representatives,
    MatrixType,
};

use crate::arith::is_prime;
use crate::error::{Error, Result};
use crate::group::{Family, GroupContext};

fn check_odd_prime(p: u64) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p == 2 {
        return Err(Error::UseCriterionPath);
    }
    Ok(())
}

/// `p | q (q + 1) (q - 1)`.
pub fn gl2_colorable(p: u64, q: u64) -> Result<bool> {
    check_odd_prime(p)?;
    if !is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    Ok(q % p == 0 || (q + 1) % p == 0 || (q - 1) % p == 0)
}

/// Same condition as [`gl2_colorable`].
pub fn sl2_colorable(p: u64, q: u64) -> Result<bool> {
    gl2_colorable(p, q)
}

/// `p | n`.
pub fn dihedral_colorable(p: u64, n: u64) -> Result<bool> {
    check_odd_prime(p)?;
    Ok(n % p == 0)
}

/// `p <= n`.
pub fn symmetric_colorable(p: u64, n: u64) -> Result<bool> {
    check_odd_prime(p)?;
    Ok(p <= n)
}

/// The family predicate for `ctx` at the prime `p`.
pub fn predicate(ctx: &GroupContext, p: u64) -> Result<bool> {
    let param = ctx.param() as u64;
    match ctx.family() {
        Family::GL2 => gl2_colorable(p, param),
        Family::SL2 => sl2_colorable(p, param),
        Family::Dihedral => dihedral_colorable(p, param),
        Family::Symmetric => symmetric_colorable(p, param),
    }
}
