use rayon::prelude::*;

use super::{check_knot, verify_tuple_iii, Caveat, ColoringTuple, Method, Verdict, Witness};
use crate::arith::is_prime;
use crate::error::{Error, Result};
use crate::families::class_representatives_by_type;
use crate::group::{Family, GroupContext, GroupElement, TABLE_LIMIT};
use crate::quandle::{centralizer_witness, class_representatives_of, conjugate};

/// Searches for `u` with `C(u^p) ⊋ C(u)`, one `u` per conjugacy class.
///
/// A positive verdict carries the pair `(u, x0)` with `x0 ∈ C(u^p) ∖ C(u)`.
/// Every verdict is marked [`Caveat::SufficiencyUnverified`], and `p = 2`
/// additionally gets [`Caveat::ExperimentalP2`].
pub fn decide_by_criterion(ctx: &GroupContext, p: u64) -> Result<Verdict> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let elements = ctx.elements()?;
    let reps = representatives(ctx, &elements)?;
    let found = reps
        .par_iter()
        .find_map_first(|u| centralizer_witness(&elements, u, p, ctx).map(|x0| (u.clone(), x0)));
    let mut verdict = Verdict::new(found.is_some(), Method::Criterion).with_caveat(Caveat::SufficiencyUnverified);
    if p == 2 {
        verdict = verdict.with_caveat(Caveat::ExperimentalP2);
    }
    if let Some((u, x0)) = found {
        verdict = verdict.with_witness(Witness::Pair { u, x0 });
    }
    Ok(verdict)
}

fn representatives(ctx: &GroupContext, elements: &[GroupElement]) -> Result<Vec<GroupElement>> {
    match ctx.family() {
        Family::GL2 | Family::SL2 if elements.len() > TABLE_LIMIT => class_representatives_by_type(ctx),
        _ => Ok(class_representatives_of(elements, ctx)),
    }
}

/// Builds the length-`p` tuple `x_{-i·m mod p} = u^i x0 u^-i` and reports
/// whether it actually colors `K(m, p)`. The tuple is returned either way.
pub fn witness_to_tuple(
    u: &GroupElement,
    x0: &GroupElement,
    m: u64,
    p: u64,
    ctx: &GroupContext,
) -> Result<(ColoringTuple, bool)> {
    ctx.check(u)?;
    ctx.check(x0)?;
    if p == 0 {
        return Err(Error::InvalidKnot { m, n: p });
    }
    check_knot(m, p)?;
    let mut slots: Vec<Option<GroupElement>> = vec![None; p as usize];
    let mut current = x0.clone();
    for i in 0..p {
        let idx = ((p - (i * (m % p)) % p) % p) as usize;
        slots[idx] = Some(current.clone());
        current = conjugate(&current, u, ctx);
    }
    let colors = slots.into_iter().map(|s| s.expect("m is a unit mod p")).collect();
    let tuple = ColoringTuple::new_unchecked(*ctx, colors);
    let verified = verify_tuple_iii(&tuple, m)?;
    Ok((tuple, verified))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(s: &str) -> GroupContext {
        s.parse().unwrap()
    }

    #[test]
    fn criterion_examples() {
        let s3 = ctx("S:3");
        let v = decide_by_criterion(&s3, 3).unwrap();
        assert!(v.colorable);
        assert!(v.caveats.contains(&Caveat::SufficiencyUnverified));
        let (u, x0) = v.witness_pair().unwrap();
        assert_eq!(u.to_string(), "(1 2 3)");
        assert_eq!(x0.to_string(), "(2 3)");
        assert!(!decide_by_criterion(&s3, 5).unwrap().colorable);
        assert!(!decide_by_criterion(&ctx("GL2:3"), 13).unwrap().colorable);
        assert!(matches!(decide_by_criterion(&s3, 9), Err(Error::NotPrime(9))));
        let v = decide_by_criterion(&s3, 2).unwrap();
        assert!(v.colorable && v.caveats.contains(&Caveat::ExperimentalP2));
    }

    #[test]
    fn witness_tuple_examples() {
        let s3 = ctx("S:3");
        let u = s3.parse_element("(1 2 3)").unwrap();
        let x0 = s3.parse_element("(2 3)").unwrap();
        let expected = ColoringTuple::parse(s3, &["(2 3)", "(1 2)", "(1 3)"]).unwrap();

        let (t, ok) = witness_to_tuple(&u, &x0, 2, 3, &s3).unwrap();
        assert_eq!((t.clone(), ok), (expected.clone(), true));
        let (t, ok) = witness_to_tuple(&u, &x0, 5, 3, &s3).unwrap();
        assert_eq!((t, ok), (expected, false));

        let g = s3.parse_element("(1 3)").unwrap();
        let (t, ok) = witness_to_tuple(&s3.identity(), &g, 2, 3, &s3).unwrap();
        assert!(ok && t.is_trivial() && t.colors()[0] == g);

        assert!(witness_to_tuple(&u, &x0, 3, 3, &s3).is_err());
    }

    #[test]
    fn large_matrix_groups_use_type_representatives() {
        let v = decide_by_criterion(&ctx("GL2:11"), 5).unwrap();
        assert!(v.colorable);
        assert!(!decide_by_criterion(&ctx("GL2:11"), 7).unwrap().colorable);
        assert!(decide_by_criterion(&ctx("SL2:13"), 7).unwrap().colorable);
    }
}
