use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{least_non_residue, FieldElement};
use crate::group::{Family, GroupContext, GroupElement, Matrix2};

/// Conjugacy type of an invertible 2x2 matrix over `F_q`, with the entries
/// of its normal form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum MatrixType {
    /// `a I`.
    Type1 { a: u32 },
    /// `diag(a, b)` with `a < b`.
    Type2 { a: u32, b: u32 },
    /// `[[a, b], [0, a]]` with `b != 0`.
    Type3 { a: u32, b: u32 },
    /// Companion matrix `[[0, 1], [a, b]]` of the irreducible `x^2 - b x - a`.
    Type4 { a: u32, b: u32 },
}

impl MatrixType {
    pub fn index(&self) -> u8 {
        match self {
            MatrixType::Type1 { .. } => 1,
            MatrixType::Type2 { .. } => 2,
            MatrixType::Type3 { .. } => 3,
            MatrixType::Type4 { .. } => 4,
        }
    }

    pub fn normal_form(&self, q: u32) -> Matrix2 {
        let v = |x: u32| x as i64;
        match *self {
            MatrixType::Type1 { a } => Matrix2::scalar(q, v(a)),
            MatrixType::Type2 { a, b } => Matrix2::new(q, [v(a), 0, 0, v(b)]),
            MatrixType::Type3 { a, b } => Matrix2::new(q, [v(a), v(b), 0, v(a)]),
            MatrixType::Type4 { a, b } => Matrix2::new(q, [0, 1, v(a), v(b)]),
        }
    }
}

/// Roots of `x^2 - t x + d` in `F_q`, ascending.
pub(crate) fn quadratic_roots(t: FieldElement, d: FieldElement) -> Vec<FieldElement> {
    let q = t.modulus();
    (0..q)
        .map(|x| FieldElement::new(x as i64, q))
        .filter(|&x| (x * x - t * x + d).is_zero())
        .collect()
}

/// `x^2 - b x - a` has no root in `F_q`.
pub fn is_irreducible(a: FieldElement, b: FieldElement) -> bool {
    quadratic_roots(b, -a).is_empty()
}

/// Classifies `u` from its trace, determinant and the roots of its
/// characteristic polynomial. The result describes the GL(2,q) class.
pub fn classify_gl2(u: &Matrix2) -> Result<MatrixType> {
    let det = u.det();
    if det.is_zero() {
        return Err(Error::NotInGl(u.to_string()));
    }
    if u.is_scalar() {
        return Ok(MatrixType::Type1 { a: u.entry(0, 0).value() });
    }
    let trace = u.trace();
    Ok(match quadratic_roots(trace, det).as_slice() {
        [r1, r2] => MatrixType::Type2 { a: r1.value(), b: r2.value() },
        [r] => MatrixType::Type3 { a: r.value(), b: 1 },
        _ => MatrixType::Type4 { a: (-det).value(), b: trace.value() },
    })
}

/// One normal form per conjugacy class of GL(2,q): `q^2 - 1` classes.
pub fn gl2_representatives(q: u32) -> Vec<(MatrixType, Matrix2)> {
    let mut out = Vec::new();
    for a in 1..q {
        out.push(MatrixType::Type1 { a });
    }
    for a in 1..q {
        for b in a + 1..q {
            out.push(MatrixType::Type2 { a, b });
        }
    }
    for a in 1..q {
        out.push(MatrixType::Type3 { a, b: 1 });
    }
    for a in 0..q {
        for b in 0..q {
            let (fa, fb) = (FieldElement::new(a as i64, q), FieldElement::new(b as i64, q));
            if is_irreducible(fa, fb) {
                out.push(MatrixType::Type4 { a, b });
            }
        }
    }
    out.into_iter().map(|t| (t, t.normal_form(q))).collect()
}

/// One normal form per conjugacy class of SL(2,q): `q + 4` classes for odd
/// `q`. Type 3 splits by the corner, which is `1` or the least non-residue.
pub fn sl2_representatives(q: u32) -> Vec<(MatrixType, Matrix2)> {
    if q == 2 {
        // SL(2,2) = GL(2,2)
        return gl2_representatives(2);
    }
    let nu = least_non_residue(q).expect("q is an odd prime");
    let minus_one = q - 1;
    let mut out = vec![MatrixType::Type1 { a: 1 }, MatrixType::Type1 { a: minus_one }];
    for a in 2..q - 1 {
        let inv = FieldElement::new(a as i64, q).inverse().expect("a != 0").value();
        if a < inv {
            out.push(MatrixType::Type2 { a, b: inv });
        }
    }
    for a in [1, minus_one] {
        for b in [1, nu] {
            out.push(MatrixType::Type3 { a, b });
        }
    }
    for t in 0..q {
        if is_irreducible(FieldElement::new(-1, q), FieldElement::new(t as i64, q)) {
            out.push(MatrixType::Type4 { a: minus_one, b: t });
        }
    }
    out.into_iter().map(|t| (t, t.normal_form(q))).collect()
}

/// Class representatives of a matrix group from the normal forms above.
pub fn class_representatives_by_type(ctx: &GroupContext) -> Result<Vec<GroupElement>> {
    let reps = match ctx.family() {
        Family::GL2 => gl2_representatives(ctx.param()),
        Family::SL2 => sl2_representatives(ctx.param()),
        _ => return Err(Error::GroupMismatch(format!("{ctx} is not a matrix group"))),
    };
    Ok(reps.into_iter().map(|(_, m)| m.into()).collect())
}
