use std::fmt;

use crate::error::{Error, Result};
use crate::field::FieldElement;

/// A 2x2 matrix over `F_q`, entries stored row-major as canonical residues.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix2 {
    q: u32,
    e: [u32; 4],
}

impl Matrix2 {
    pub fn new(q: u32, entries: [i64; 4]) -> Self {
        let e = entries.map(|v| v.rem_euclid(q as i64) as u32);
        Self { q, e }
    }

    pub fn from_fields(e00: FieldElement, e01: FieldElement, e10: FieldElement, e11: FieldElement) -> Self {
        debug_assert!([e01, e10, e11].iter().all(|x| x.modulus() == e00.modulus()));
        Self { q: e00.modulus(), e: [e00.value(), e01.value(), e10.value(), e11.value()] }
    }

    pub fn identity(q: u32) -> Self {
        Self::scalar(q, 1)
    }

    pub fn scalar(q: u32, a: i64) -> Self {
        Self::new(q, [a, 0, 0, a])
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn raw(&self) -> [u32; 4] {
        self.e
    }

    pub fn entry(&self, row: usize, col: usize) -> FieldElement {
        FieldElement::new(self.e[row * 2 + col] as i64, self.q)
    }

    pub fn det(&self) -> FieldElement {
        self.entry(0, 0) * self.entry(1, 1) - self.entry(0, 1) * self.entry(1, 0)
    }

    pub fn trace(&self) -> FieldElement {
        self.entry(0, 0) + self.entry(1, 1)
    }

    pub fn is_scalar(&self) -> bool {
        self.e[1] == 0 && self.e[2] == 0 && self.e[0] == self.e[3]
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.q, other.q);
        let q = self.q as u64;
        let [a, b, c, d] = self.e.map(u64::from);
        let [w, x, y, z] = other.e.map(u64::from);
        Self {
            q: self.q,
            e: [
                ((a * w + b * y) % q) as u32,
                ((a * x + b * z) % q) as u32,
                ((c * w + d * y) % q) as u32,
                ((c * x + d * z) % q) as u32,
            ],
        }
    }

    pub fn inverse(&self) -> Result<Self> {
        let inv = self.det().inverse().map_err(|_| Error::NotInGl(self.to_string()))?;
        let [a, b, c, d] = self.e.map(|v| FieldElement::new(v as i64, self.q));
        Ok(Self::from_fields(d * inv, -b * inv, -c * inv, a * inv))
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = *self;
        let mut acc = Self::identity(self.q);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Parses `[[a,b],[c,d]]`; entries are reduced modulo `q`.
    pub fn parse(s: &str, q: u32) -> Result<Self> {
        let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = cleaned
            .strip_prefix("[[")
            .and_then(|r| r.strip_suffix("]]"))
            .ok_or_else(|| Error::Parse(format!("expected [[a,b],[c,d]], got {s:?}")))?;
        let rows: Vec<&str> = inner.split("],[").collect();
        if rows.len() != 2 {
            return Err(Error::Parse(format!("expected two rows in {s:?}")));
        }
        let mut vals = Vec::with_capacity(4);
        for row in rows {
            let entries: Vec<&str> = row.split(',').collect();
            if entries.len() != 2 {
                return Err(Error::Parse(format!("expected two entries per row in {s:?}")));
            }
            for v in entries {
                vals.push(v.parse::<i64>().map_err(|_| Error::Parse(format!("bad entry {v:?} in {s:?}")))?);
            }
        }
        Ok(Self::new(q, [vals[0], vals[1], vals[2], vals[3]]))
    }
}

impl fmt::Display for Matrix2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.e;
        write!(f, "[[{a},{b}],[{c},{d}]]")
    }
}
