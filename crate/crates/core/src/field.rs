//! Prime fields `F_q` and their quadratic extensions `F_q[w]/(w^2 - nu)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::arith::is_prime;
use crate::error::{Error, Result};

/// A residue modulo a prime `q`, always stored in canonical form `0 <= value < q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement {
    value: u32,
    modulus: u32,
}

impl FieldElement {
    /// Reduces `value` modulo `q`. The caller guarantees `q` is prime.
    pub fn new(value: i64, q: u32) -> Self {
        Self { value: value.rem_euclid(q as i64) as u32, modulus: q }
    }

    pub fn zero(q: u32) -> Self {
        Self { value: 0, modulus: q }
    }

    pub fn one(q: u32) -> Self {
        Self { value: 1 % q, modulus: q }
    }

    pub fn value(self) -> u32 {
        self.value
    }

    pub fn modulus(self) -> u32 {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn pow(self, mut e: u64) -> Self {
        let q = self.modulus as u64;
        let mut base = self.value as u64;
        let mut acc = 1 % q;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % q;
            }
            base = base * base % q;
            e >>= 1;
        }
        Self { value: acc as u32, modulus: self.modulus }
    }

    pub fn inverse(self) -> Result<Self> {
        if self.value == 0 {
            return Err(Error::NotInvertible(0, self.modulus));
        }
        // Fermat: a^(q-2) = a^-1
        Ok(self.pow(self.modulus as u64 - 2))
    }

    /// Euler's criterion; zero counts as a square.
    pub fn is_square(self) -> bool {
        if self.value == 0 || self.modulus == 2 {
            return true;
        }
        self.pow((self.modulus as u64 - 1) / 2).value == 1
    }

    /// Some square root, found by scanning the field (fields here are small).
    pub fn sqrt(self) -> Option<Self> {
        (0..self.modulus)
            .map(|r| Self { value: r, modulus: self.modulus })
            .find(|&r| r * r == self)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for FieldElement {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        debug_assert_eq!(self.modulus, rhs.modulus);
        let v = (self.value as u64 + rhs.value as u64) % self.modulus as u64;
        Self { value: v as u32, modulus: self.modulus }
    }
}

impl Sub for FieldElement {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for FieldElement {
    type Output = Self;
    fn neg(self) -> Self {
        let v = if self.value == 0 { 0 } else { self.modulus - self.value };
        Self { value: v, modulus: self.modulus }
    }
}

impl Mul for FieldElement {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        debug_assert_eq!(self.modulus, rhs.modulus);
        let v = self.value as u64 * rhs.value as u64 % self.modulus as u64;
        Self { value: v as u32, modulus: self.modulus }
    }
}

/// Inverse of `a` in `F_q`.
pub fn field_inverse(a: FieldElement) -> Result<FieldElement> {
    a.inverse()
}

/// Least quadratic non-residue modulo an odd prime `q`.
pub fn least_non_residue(q: u32) -> Result<u32> {
    if q == 2 || !is_prime(q as u64) {
        return Err(Error::NotOddPrime(q as u64));
    }
    (2..q)
        .find(|&v| !FieldElement::new(v as i64, q).is_square())
        .ok_or(Error::Internal(format!("no non-residue modulo {q}")))
}

/// `F_{q^2}` realized as `F_q[w]/(w^2 - nu)` with `nu` the least non-residue.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ExtField {
    q: u32,
    nu: u32,
}

impl ExtField {
    pub fn new(q: u32) -> Result<Self> {
        Ok(Self { q, nu: least_non_residue(q)? })
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn nu(&self) -> u32 {
        self.nu
    }

    pub fn element(&self, a0: i64, a1: i64) -> ExtFieldElement {
        ExtFieldElement {
            a0: FieldElement::new(a0, self.q),
            a1: FieldElement::new(a1, self.q),
            nu: self.nu,
        }
    }

    pub fn embed(&self, a: FieldElement) -> ExtFieldElement {
        debug_assert_eq!(a.modulus(), self.q);
        ExtFieldElement { a0: a, a1: FieldElement::zero(self.q), nu: self.nu }
    }

    pub fn one(&self) -> ExtFieldElement {
        self.element(1, 0)
    }

    /// The adjoined root `w`, with `w^2 = nu`.
    pub fn omega(&self) -> ExtFieldElement {
        self.element(0, 1)
    }

    /// Every element of the field, `a0` major.
    pub fn elements(&self) -> impl Iterator<Item = ExtFieldElement> + '_ {
        let q = self.q as i64;
        (0..q).flat_map(move |a0| (0..q).map(move |a1| self.element(a0, a1)))
    }

    /// A square root of `delta`, which lives in `F_q` or in `F_q * w`.
    pub fn sqrt_of_base(&self, delta: FieldElement) -> ExtFieldElement {
        match delta.sqrt() {
            Some(r) => self.embed(r),
            None => {
                // delta / nu is a square since both are non-residues
                let nu = FieldElement::new(self.nu as i64, self.q);
                let s = (delta * nu.inverse().expect("nu != 0"))
                    .sqrt()
                    .expect("quotient of non-residues is a residue");
                ExtFieldElement { a0: FieldElement::zero(self.q), a1: s, nu: self.nu }
            }
        }
    }
}

/// `a0 + a1 * w` in `F_q[w]/(w^2 - nu)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ExtFieldElement {
    a0: FieldElement,
    a1: FieldElement,
    nu: u32,
}

impl ExtFieldElement {
    pub fn a0(&self) -> FieldElement {
        self.a0
    }

    pub fn a1(&self) -> FieldElement {
        self.a1
    }

    pub fn modulus(&self) -> u32 {
        self.a0.modulus()
    }

    pub fn is_zero(&self) -> bool {
        self.a0.is_zero() && self.a1.is_zero()
    }

    pub fn in_base_field(&self) -> bool {
        self.a1.is_zero()
    }

    fn same_field(&self, other: &Self) -> bool {
        self.modulus() == other.modulus() && self.nu == other.nu
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if !self.same_field(other) {
            return Err(Error::FieldMismatch);
        }
        Ok(Self { a0: self.a0 + other.a0, a1: self.a1 + other.a1, nu: self.nu })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&-*other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if !self.same_field(other) {
            return Err(Error::FieldMismatch);
        }
        let nu = FieldElement::new(self.nu as i64, self.modulus());
        Ok(Self {
            a0: self.a0 * other.a0 + nu * self.a1 * other.a1,
            a1: self.a0 * other.a1 + self.a1 * other.a0,
            nu: self.nu,
        })
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = *self;
        let mut acc = Self { a0: FieldElement::one(self.modulus()), a1: FieldElement::zero(self.modulus()), nu: self.nu };
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    /// The Frobenius map `z -> z^q`, i.e. conjugation `a0 + a1 w -> a0 - a1 w`.
    pub fn frobenius(&self) -> Self {
        self.pow(self.modulus() as u64)
    }

    pub fn norm(&self) -> FieldElement {
        let nu = FieldElement::new(self.nu as i64, self.modulus());
        self.a0 * self.a0 - nu * self.a1 * self.a1
    }

    pub fn inverse(&self) -> Result<Self> {
        let n = self.norm().inverse().map_err(|_| Error::NotInvertible(0, self.modulus()))?;
        Ok(Self { a0: self.a0 * n, a1: -self.a1 * n, nu: self.nu })
    }
}

impl fmt::Display for ExtFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.a1.is_zero() {
            write!(f, "{}", self.a0)
        } else {
            write!(f, "{}+{}w", self.a0, self.a1)
        }
    }
}

impl Add for ExtFieldElement {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.checked_add(&rhs).expect("field mismatch")
    }
}

impl Sub for ExtFieldElement {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.checked_sub(&rhs).expect("field mismatch")
    }
}

impl Neg for ExtFieldElement {
    type Output = Self;
    fn neg(self) -> Self {
        Self { a0: -self.a0, a1: -self.a1, nu: self.nu }
    }
}

impl Mul for ExtFieldElement {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.checked_mul(&rhs).expect("field mismatch")
    }
}

pub fn ext_field_mul(x: &ExtFieldElement, y: &ExtFieldElement) -> Result<ExtFieldElement> {
    x.checked_mul(y)
}

/// Counts elements of multiplicative order `p` in `F_{q^2}`, returning
/// `(all of them, those outside F_q)`.
pub fn count_order_p_in_ext_field(q: u32, p: u64) -> Result<(usize, usize)> {
    if p == 2 || !is_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    let field = ExtField::new(q)?;
    let one = field.one();
    let mut total = 0;
    let mut outside = 0;
    for z in field.elements().filter(|z| !z.is_zero()) {
        // p is prime, so z^p = 1 with z != 1 means order exactly p
        if z != one && z.pow(p) == one {
            total += 1;
            if !z.in_base_field() {
                outside += 1;
            }
        }
    }
    Ok((total, outside))
}
