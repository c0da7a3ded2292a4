//! The conjugation quandle `Conj(G)` and centralizer utilities.

use crate::arith::is_prime;
use crate::error::{Error, Result};
use crate::group::{GroupContext, GroupElement};

/// `x ▷ y = y x y^-1`.
pub fn quandle_op(x: &GroupElement, y: &GroupElement, ctx: &GroupContext) -> Result<GroupElement> {
    ctx.check(x)?;
    ctx.check(y)?;
    Ok(conjugate(x, y, ctx))
}

pub(crate) fn conjugate(x: &GroupElement, y: &GroupElement, ctx: &GroupContext) -> GroupElement {
    let yx = ctx.mul_unchecked(y, x);
    ctx.mul_unchecked(&yx, &ctx.inverse_unchecked(y))
}

pub(crate) fn commutes(x: &GroupElement, y: &GroupElement, ctx: &GroupContext) -> bool {
    ctx.mul_unchecked(x, y) == ctx.mul_unchecked(y, x)
}

/// Multiplicative order of `g`, found by stripping prime factors off `|G|`.
pub fn element_order(g: &GroupElement, ctx: &GroupContext) -> Result<u64> {
    ctx.check(g)?;
    let identity = ctx.identity();
    let mut order = ctx.order();
    for p in ctx.order_factors() {
        if order % p == 0 && ctx.pow_unchecked(g, (order / p) as i64) == identity {
            order /= p;
        }
    }
    Ok(order)
}

/// Looks for `x` with `x u^p = u^p x` but `x u != u x`, i.e. a witness that
/// `C(u^p)` strictly contains `C(u)`. Returns the first such `x` in
/// enumeration order.
pub fn centralizer_grows(u: &GroupElement, p: u64, ctx: &GroupContext) -> Result<Option<GroupElement>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    ctx.check(u)?;
    let elements = ctx.elements()?;
    Ok(centralizer_witness(&elements, u, p, ctx))
}

pub(crate) fn centralizer_witness(
    elements: &[GroupElement],
    u: &GroupElement,
    p: u64,
    ctx: &GroupContext,
) -> Option<GroupElement> {
    let up = ctx.pow_unchecked(u, p as i64);
    if up == *u {
        return None;
    }
    elements
        .iter()
        .find(|x| commutes(x, &up, ctx) && !commutes(x, u, ctx))
        .cloned()
}

/// First element (in enumeration order) of every conjugacy class.
pub fn conjugacy_class_representatives(ctx: &GroupContext) -> Result<Vec<GroupElement>> {
    let elements = ctx.elements()?;
    Ok(class_representatives_of(&elements, ctx))
}

pub(crate) fn class_representatives_of(elements: &[GroupElement], ctx: &GroupContext) -> Vec<GroupElement> {
    let inverses: Vec<GroupElement> = elements.iter().map(|g| ctx.inverse_unchecked(g)).collect();
    let mut seen = vec![false; ctx.key_space()];
    let mut reps = Vec::new();
    for a in elements {
        if seen[ctx.key(a)] {
            continue;
        }
        reps.push(a.clone());
        for (g, g_inv) in elements.iter().zip(&inverses) {
            let c = ctx.mul_unchecked(&ctx.mul_unchecked(g, a), g_inv);
            seen[ctx.key(&c)] = true;
        }
    }
    reps
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ctx(s: &str) -> GroupContext {
        s.parse().unwrap()
    }

    #[test]
    fn quandle_examples() {
        let s3 = ctx("S:3");
        let x = s3.parse_element("(2 3)").unwrap();
        let y = s3.parse_element("(1 2 3)").unwrap();
        assert_eq!(quandle_op(&x, &y, &s3).unwrap(), s3.parse_element("(1 2)").unwrap());
        assert_eq!(quandle_op(&x, &x, &s3).unwrap(), x);
        assert_eq!(quandle_op(&x, &s3.identity(), &s3).unwrap(), x);
        let foreign = ctx("S:4").identity();
        assert!(matches!(quandle_op(&x, &foreign, &s3), Err(Error::GroupMismatch(_))));
    }

    #[test]
    fn order_examples() {
        let s3 = ctx("S:3");
        assert_eq!(element_order(&s3.identity(), &s3).unwrap(), 1);
        assert_eq!(element_order(&s3.parse_element("(1 2 3)").unwrap(), &s3).unwrap(), 3);
        let d6 = ctx("D:6");
        assert_eq!(element_order(&d6.parse_element("r").unwrap(), &d6).unwrap(), 6);
        let gl = ctx("GL2:13");
        let g = gl.parse_element("[[0,1],[1,1]]").unwrap();
        let k = element_order(&g, &gl).unwrap();
        assert_eq!(gl.pow(&g, k as i64).unwrap(), gl.identity());
        assert!((1..k).all(|j| gl.pow(&g, j as i64).unwrap() != gl.identity()));
    }

    #[test]
    fn order_agrees_with_naive_iteration() {
        for g in ["S:5", "D:12", "GL2:5", "SL2:7"] {
            let c = ctx(g);
            for e in c.elements().unwrap() {
                let mut k = 1;
                let mut acc = e.clone();
                while acc != c.identity() {
                    acc = c.mul(&acc, &e).unwrap();
                    k += 1;
                }
                assert_eq!(element_order(&e, &c).unwrap(), k, "{g} {e}");
                assert_eq!(c.order() % k, 0);
            }
        }
    }

    #[test]
    fn centralizer_examples() {
        let gl = ctx("GL2:3");
        let diag = gl.parse_element("[[1,0],[0,2]]").unwrap();
        assert!(centralizer_grows(&diag, 2, &gl).unwrap().is_some());
        let unipotent = gl.parse_element("[[1,1],[0,1]]").unwrap();
        assert!(centralizer_grows(&unipotent, 2, &gl).unwrap().is_none());

        let d6 = ctx("D:6");
        let r2 = d6.parse_element("r^2").unwrap();
        let w = centralizer_grows(&r2, 3, &d6).unwrap();
        assert_eq!(w, Some(d6.parse_element("s").unwrap()));

        assert!(matches!(centralizer_grows(&r2, 4, &d6), Err(Error::NotPrime(4))));
    }

    #[test]
    fn centralizer_of_u_is_inside_centralizer_of_power() {
        for g in ["S:4", "D:10", "GL2:3", "SL2:3"] {
            let c = ctx(g);
            let elems = c.elements().unwrap();
            for u in &elems {
                for p in [2u64, 3, 5, 7, 11, 13] {
                    let up = c.pow(u, p as i64).unwrap();
                    for x in &elems {
                        if commutes(x, u, &c) {
                            assert!(commutes(x, &up, &c));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn class_representatives_match_cayley_table() {
        use crate::group::CayleyTable;
        for g in ["S:4", "D:9", "GL2:3", "SL2:5"] {
            let c = ctx(g);
            let t = CayleyTable::new(c).unwrap();
            let from_table: Vec<GroupElement> =
                t.class_representatives().into_iter().map(|i| t.element(i).clone()).collect();
            assert_eq!(conjugacy_class_representatives(&c).unwrap(), from_table);
        }
    }

    fn group_and_indices() -> impl Strategy<Value = (GroupContext, Vec<usize>)> {
        prop::sample::select(vec!["S:5", "D:9", "GL2:5", "SL2:5"])
            .prop_flat_map(|g| (Just(g.parse::<GroupContext>().unwrap()), prop::collection::vec(0usize..10_000, 5)))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn conjugation_identities((c, idx) in group_and_indices(), k in 0i64..=6) {
            let elems = c.elements().unwrap();
            let pick = |i: usize| elems[idx[i] % elems.len()].clone();
            let (x, x1, x2, y1, y2) = (pick(0), pick(1), pick(2), pick(3), pick(4));
            let y = y1.clone();
            let op = |a: &GroupElement, b: &GroupElement| quandle_op(a, b, &c).unwrap();
            let mul = |a: &GroupElement, b: &GroupElement| c.mul(a, b).unwrap();
            let pow = |a: &GroupElement, e: i64| c.pow(a, e).unwrap();

            prop_assert_eq!(op(&mul(&x1, &x2), &y), mul(&op(&x1, &y), &op(&x2, &y)));
            prop_assert_eq!(op(&pow(&x, k), &y), pow(&op(&x, &y), k));
            prop_assert_eq!(op(&x, &mul(&y1, &y2)), op(&op(&x, &y2), &y1));
            let mut iterated = x.clone();
            for _ in 0..k {
                iterated = op(&iterated, &y);
            }
            prop_assert_eq!(op(&x, &pow(&y, k)), iterated);
        }

        #[test]
        fn group_laws((c, idx) in group_and_indices()) {
            let elems = c.elements().unwrap();
            let pick = |i: usize| elems[idx[i] % elems.len()].clone();
            let (a, b, d) = (pick(0), pick(1), pick(2));
            let mul = |x: &GroupElement, y: &GroupElement| c.mul(x, y).unwrap();
            prop_assert_eq!(mul(&mul(&a, &b), &d), mul(&a, &mul(&b, &d)));
            prop_assert_eq!(mul(&a, &c.identity()), a.clone());
            prop_assert_eq!(mul(&c.identity(), &a), a.clone());
            prop_assert_eq!(mul(&a, &c.inverse(&a).unwrap()), c.identity());
        }

        #[test]
        fn criterion_is_conjugation_invariant((c, idx) in group_and_indices(), p in prop::sample::select(vec![2u64, 3, 5, 7])) {
            let elems = c.elements().unwrap();
            let u = elems[idx[0] % elems.len()].clone();
            let g = elems[idx[1] % elems.len()].clone();
            let conj = quandle_op(&u, &g, &c).unwrap();
            prop_assert_eq!(
                centralizer_grows(&u, p, &c).unwrap().is_some(),
                centralizer_grows(&conj, p, &c).unwrap().is_some()
            );
        }
    }
}
