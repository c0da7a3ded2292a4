//! The four supported group families behind one interface.
//!
//! A [`GroupContext`] names a family and its size parameter (`S:<n>`,
//! `D:<n>`, `GL2:<q>`, `SL2:<q>`) and supplies identity, product, inverse,
//! membership and enumeration for [`GroupElement`] values.

mod dihedral;
mod matrix;
mod perm;
mod table;

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

pub use dihedral::DihedralWord;
pub use matrix::Matrix2;
pub use perm::Permutation;
pub use table::{CayleyTable, TABLE_LIMIT};

use crate::arith::{is_prime, prime_factors};
use crate::error::{Error, Result};

/// Largest group `elements()` will materialize.
pub const ENUMERATION_LIMIT: u64 = 1 << 22;

const MAX_SYMMETRIC_DEGREE: u32 = 20;
const MAX_FIELD_PRIME: u32 = 1 << 15;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    Symmetric,
    Dihedral,
    GL2,
    SL2,
}

impl Family {
    pub fn tag(self) -> &'static str {
        match self {
            Family::Symmetric => "S",
            Family::Dihedral => "D",
            Family::GL2 => "GL2",
            Family::SL2 => "SL2",
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "s" | "sym" | "symmetric" => Ok(Family::Symmetric),
            "d" | "dih" | "dihedral" => Ok(Family::Dihedral),
            "gl2" | "gl" => Ok(Family::GL2),
            "sl2" | "sl" => Ok(Family::SL2),
            other => Err(Error::Parse(format!("unknown group family {other:?}"))),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupElement {
    Perm(Permutation),
    Dihedral(DihedralWord),
    Matrix(Matrix2),
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupElement::Perm(p) => p.fmt(f),
            GroupElement::Dihedral(d) => d.fmt(f),
            GroupElement::Matrix(m) => m.fmt(f),
        }
    }
}

impl Serialize for GroupElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl From<Permutation> for GroupElement {
    fn from(p: Permutation) -> Self {
        GroupElement::Perm(p)
    }
}

impl From<DihedralWord> for GroupElement {
    fn from(d: DihedralWord) -> Self {
        GroupElement::Dihedral(d)
    }
}

impl From<Matrix2> for GroupElement {
    fn from(m: Matrix2) -> Self {
        GroupElement::Matrix(m)
    }
}

impl GroupElement {
    pub fn as_matrix(&self) -> Option<&Matrix2> {
        match self {
            GroupElement::Matrix(m) => Some(m),
            _ => None,
        }
    }
}

/// A group family descriptor. Contexts are immutable and cheap to copy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupContext {
    family: Family,
    param: u32,
}

impl GroupContext {
    pub fn new(family: Family, param: u32) -> Result<Self> {
        match family {
            Family::Symmetric if !(1..=MAX_SYMMETRIC_DEGREE).contains(&param) => {
                Err(Error::Parse(format!("S:<n> needs 1 <= n <= {MAX_SYMMETRIC_DEGREE}, got {param}")))
            }
            Family::Dihedral if param == 0 => Err(Error::Parse("D:<n> needs n >= 1".into())),
            Family::GL2 | Family::SL2 if !is_prime(param as u64) || param >= MAX_FIELD_PRIME => {
                Err(Error::Parse(format!("{}:<q> needs a prime q < {MAX_FIELD_PRIME}, got {param}", family.tag())))
            }
            _ => Ok(Self { family, param }),
        }
    }

    pub fn symmetric(n: u32) -> Result<Self> {
        Self::new(Family::Symmetric, n)
    }

    pub fn dihedral(n: u32) -> Result<Self> {
        Self::new(Family::Dihedral, n)
    }

    pub fn gl2(q: u32) -> Result<Self> {
        Self::new(Family::GL2, q)
    }

    pub fn sl2(q: u32) -> Result<Self> {
        Self::new(Family::SL2, q)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn param(&self) -> u32 {
        self.param
    }

    /// `|G|`: `n!`, `2n`, `(q^2-1)(q^2-q)` or `q(q^2-1)`.
    pub fn order(&self) -> u64 {
        let p = self.param as u64;
        match self.family {
            Family::Symmetric => (1..=p).product(),
            Family::Dihedral => 2 * p,
            Family::GL2 => (p * p - 1) * (p * p - p),
            Family::SL2 => p * (p * p - 1),
        }
    }

    pub fn identity(&self) -> GroupElement {
        match self.family {
            Family::Symmetric => Permutation::identity(self.param as usize).into(),
            Family::Dihedral => DihedralWord::rotation(0, self.param).into(),
            Family::GL2 | Family::SL2 => Matrix2::identity(self.param).into(),
        }
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        match (self.family, g) {
            (Family::Symmetric, GroupElement::Perm(p)) => p.degree() == self.param as usize,
            (Family::Dihedral, GroupElement::Dihedral(d)) => d.n() == self.param,
            (Family::GL2, GroupElement::Matrix(m)) => m.q() == self.param && !m.det().is_zero(),
            (Family::SL2, GroupElement::Matrix(m)) => m.q() == self.param && m.det().value() == 1,
            _ => false,
        }
    }

    pub fn check(&self, g: &GroupElement) -> Result<()> {
        if self.contains(g) {
            Ok(())
        } else {
            Err(Error::GroupMismatch(format!("{g} is not an element of {self}")))
        }
    }

    /// Product `g h` (for permutations: apply `g`, then `h`).
    pub fn mul(&self, g: &GroupElement, h: &GroupElement) -> Result<GroupElement> {
        self.check(g)?;
        self.check(h)?;
        Ok(self.mul_unchecked(g, h))
    }

    pub(crate) fn mul_unchecked(&self, g: &GroupElement, h: &GroupElement) -> GroupElement {
        match (g, h) {
            (GroupElement::Perm(a), GroupElement::Perm(b)) => a.then(b).into(),
            (GroupElement::Dihedral(a), GroupElement::Dihedral(b)) => a.compose(b).into(),
            (GroupElement::Matrix(a), GroupElement::Matrix(b)) => a.mul(b).into(),
            _ => unreachable!("elements were checked against {self}"),
        }
    }

    pub fn inverse(&self, g: &GroupElement) -> Result<GroupElement> {
        self.check(g)?;
        Ok(self.inverse_unchecked(g))
    }

    pub(crate) fn inverse_unchecked(&self, g: &GroupElement) -> GroupElement {
        match g {
            GroupElement::Perm(p) => p.inverse().into(),
            GroupElement::Dihedral(d) => d.inverse().into(),
            GroupElement::Matrix(m) => m.inverse().expect("group elements are invertible").into(),
        }
    }

    /// `g^e` for any integer exponent.
    pub fn pow(&self, g: &GroupElement, e: i64) -> Result<GroupElement> {
        self.check(g)?;
        Ok(self.pow_unchecked(g, e))
    }

    pub(crate) fn pow_unchecked(&self, g: &GroupElement, e: i64) -> GroupElement {
        let mut base = if e < 0 { self.inverse_unchecked(g) } else { g.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = self.identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_unchecked(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul_unchecked(&base, &base);
            }
        }
        acc
    }

    /// Every element, in a fixed order: lexicographic image lists for `S_n`,
    /// rotations before reflections for `D_n`, row-major entries for matrices.
    pub fn elements(&self) -> Result<Vec<GroupElement>> {
        let order = self.order();
        if order > ENUMERATION_LIMIT {
            return Err(Error::TooLarge(format!("{self} has {order} elements")));
        }
        Ok(match self.family {
            Family::Symmetric => Permutation::all(self.param as usize).into_iter().map(Into::into).collect(),
            Family::Dihedral => (0..2u8)
                .flat_map(|t| (0..self.param as i64).map(move |k| (t, k)))
                .map(|(t, k)| DihedralWord::new(t, k, self.param).into())
                .collect(),
            Family::GL2 | Family::SL2 => {
                let q = self.param as i64;
                let mut out = Vec::with_capacity(order as usize);
                for a in 0..q {
                    for b in 0..q {
                        for c in 0..q {
                            for d in 0..q {
                                let g: GroupElement = Matrix2::new(self.param, [a, b, c, d]).into();
                                if self.contains(&g) {
                                    out.push(g);
                                }
                            }
                        }
                    }
                }
                out
            }
        })
    }

    /// Dense integer key of a member element, below [`Self::key_space`].
    pub fn key(&self, g: &GroupElement) -> usize {
        match g {
            GroupElement::Perm(p) => p.rank(),
            GroupElement::Dihedral(d) => d.t() as usize * d.n() as usize + d.k() as usize,
            GroupElement::Matrix(m) => {
                let q = m.q() as usize;
                m.raw().iter().fold(0, |acc, &v| acc * q + v as usize)
            }
        }
    }

    pub fn key_space(&self) -> usize {
        let p = self.param as usize;
        match self.family {
            Family::Symmetric => self.order() as usize,
            Family::Dihedral => 2 * p,
            Family::GL2 | Family::SL2 => p.pow(4),
        }
    }

    /// Parses one element in the family's grammar: cycle notation, `s^t r^k`,
    /// or `[[a,b],[c,d]]`.
    pub fn parse_element(&self, s: &str) -> Result<GroupElement> {
        let g: GroupElement = match self.family {
            Family::Symmetric => Permutation::parse(s, self.param as usize)?.into(),
            Family::Dihedral => DihedralWord::parse(s, self.param)?.into(),
            Family::GL2 | Family::SL2 => Matrix2::parse(s, self.param)?.into(),
        };
        self.check(&g)?;
        Ok(g)
    }

    /// Prime factorization of `|G|`.
    pub fn order_factors(&self) -> Vec<u64> {
        prime_factors(self.order())
    }
}

impl fmt::Display for GroupContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.family.tag(), self.param)
    }
}

impl FromStr for GroupContext {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (fam, param) = s
            .trim()
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("group descriptor {s:?} is not of the form FAMILY:<n>")))?;
        let family = match fam {
            "S" => Family::Symmetric,
            "D" => Family::Dihedral,
            "GL2" => Family::GL2,
            "SL2" => Family::SL2,
            _ => return Err(Error::Parse(format!("unknown family {fam:?} (expected S, D, GL2 or SL2)"))),
        };
        let param = param
            .parse::<u32>()
            .map_err(|_| Error::Parse(format!("bad group parameter {param:?}")))?;
        Self::new(family, param)
    }
}

impl Serialize for GroupContext {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
