use serde::Serialize;

use super::types::is_irreducible;
use crate::error::{Error, Result};
use crate::field::{ExtField, ExtFieldElement, FieldElement};
use crate::group::Matrix2;

/// Entries of the companion-matrix power `u^n = [[x_{n-1}, y_{n-1}], [x_n, y_n]]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RecurrencePair {
    pub x: u32,
    pub y: u32,
}

fn check_type4(a: FieldElement, b: FieldElement) -> Result<u32> {
    if a.modulus() != b.modulus() {
        return Err(Error::FieldMismatch);
    }
    if !is_irreducible(a, b) {
        return Err(Error::NotType4 { a: a.value(), b: b.value(), q: a.modulus() });
    }
    Ok(a.modulus())
}

/// `(x_0, y_0) = (0, 1)`, `x_n = a y_{n-1}`, `y_n = x_{n-1} + b y_{n-1}`.
pub fn type4_recurrence(a: FieldElement, b: FieldElement, n: u64) -> Result<RecurrencePair> {
    let q = check_type4(a, b)?;
    let (mut x, mut y) = (FieldElement::zero(q), FieldElement::one(q));
    for _ in 0..n {
        (x, y) = (a * y, x + b * y);
    }
    Ok(RecurrencePair { x: x.value(), y: y.value() })
}

/// `c = b/2` and `d = sqrt(b^2 + 4a)/2`, with `d` in `F_{q^2}`.
fn c_and_d(a: FieldElement, b: FieldElement) -> Result<(ExtField, ExtFieldElement, ExtFieldElement)> {
    let q = check_type4(a, b)?;
    if q == 2 {
        return Err(Error::UseRecurrencePath);
    }
    let ext = ExtField::new(q)?;
    let half = ext.embed(FieldElement::new(2, q).inverse()?);
    let four = FieldElement::new(4, q);
    let c = ext.embed(b) * half;
    let d = ext.sqrt_of_base(b * b + four * a) * half;
    Ok((ext, c, d))
}

/// `y_n = (2d)^-1 ((c + d)^{n+1} - (c - d)^{n+1})`, evaluated in `F_{q^2}`.
pub fn type4_yn_closed_form(a: FieldElement, b: FieldElement, n: u64) -> Result<FieldElement> {
    let (ext, c, d) = c_and_d(a, b)?;
    let two_d = ext.embed(FieldElement::new(2, ext.q())) * d;
    let y = two_d.inverse()? * ((c + d).pow(n + 1) - (c - d).pow(n + 1));
    if !y.in_base_field() {
        return Err(Error::Internal(format!("closed form for y_{n} left F_{}: {y}", ext.q())));
    }
    Ok(y.a0())
}

/// The variant `(2d)^-1 ((d + c)^{n+1} + (d - c)^{n+1})`. It agrees with
/// [`type4_yn_closed_form`] for even `n` and is kept for comparison tables.
pub fn type4_yn_plus_form(a: FieldElement, b: FieldElement, n: u64) -> Result<ExtFieldElement> {
    let (ext, c, d) = c_and_d(a, b)?;
    let two_d = ext.embed(FieldElement::new(2, ext.q())) * d;
    Ok(two_d.inverse()? * ((d + c).pow(n + 1) + (d - c).pow(n + 1)))
}

/// Whether `u^p` is scalar, decided from the conjugacy type of `u`:
/// never fails for scalars, compares the eigenvalue ratio for split
/// matrices, needs `p = q` for non-semisimple ones, and reads `y_{p-1}` for
/// type 4.
pub fn scalar_power_test(u: &Matrix2, p: u64) -> Result<bool> {
    let q = u.q();
    let f = |v: u32| FieldElement::new(v as i64, q);
    Ok(match super::classify_gl2(u)? {
        super::MatrixType::Type1 { .. } => true,
        super::MatrixType::Type2 { a, b } => (f(a) * f(b).inverse()?).pow(p).value() == 1,
        super::MatrixType::Type3 { .. } => p == q as u64,
        super::MatrixType::Type4 { a, b } => type4_recurrence(f(a), f(b), p - 1)?.y == 0,
    })
}
