//! Colorings of torus knots by `Conj(G)`.
//!
//! A coloring of `K(m, n)` is determined by the colors `x_0, .., x_{n-1}` of
//! the initial arcs. Such a tuple extends to a coloring exactly when every
//! product of `m` cyclically consecutive colors takes the same value, or
//! equivalently when `x_i ▷ u = x_{i-m}` for the harlequin
//! `u = x_{n-m} ⋯ x_{n-1}` (indices mod `n`).

mod criterion;
mod search;
mod verify;

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

pub use criterion::{decide_by_criterion, witness_to_tuple};
pub use search::{brute_force_search, count_colorings, for_each_coloring, SearchOptions, DEFAULT_BUDGET};
pub use verify::{classify_tuple, expand_to_diagram, harlequin, verify_tuple_ii, verify_tuple_iii};

use crate::arith::gcd;
use crate::error::{Error, Result};
use crate::group::{GroupContext, GroupElement};

/// Torus knot parameters `(m, n)`: `m` twists on `n` strands, `gcd(m, n) = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct TorusKnot {
    m: u64,
    n: u64,
}

impl TorusKnot {
    pub fn new(m: u64, n: u64) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::InvalidKnot { m, n });
        }
        check_knot(m, n)?;
        Ok(Self { m, n })
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// `K(1, n)` and `K(m, 1)` are unknots.
    pub fn is_unknot(&self) -> bool {
        self.m == 1 || self.n == 1
    }
}

impl fmt::Display for TorusKnot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K({},{})", self.m, self.n)
    }
}

pub(crate) fn check_knot(m: u64, n: u64) -> Result<()> {
    let g = gcd(m, n);
    if g != 1 {
        return Err(Error::LinkParameters { m, n, gcd: g });
    }
    Ok(())
}

/// Colors of the initial arcs, `x_0 .. x_{n-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColoringTuple {
    colors: Vec<GroupElement>,
    ctx: GroupContext,
}

impl ColoringTuple {
    pub fn new(ctx: GroupContext, colors: Vec<GroupElement>) -> Result<Self> {
        if colors.is_empty() {
            return Err(Error::ShapeMismatch("a coloring tuple needs at least one color".into()));
        }
        for c in &colors {
            ctx.check(c)?;
        }
        Ok(Self { colors, ctx })
    }

    /// Parses element strings in the group's grammar.
    pub fn parse<S: AsRef<str>>(ctx: GroupContext, colors: &[S]) -> Result<Self> {
        let colors = colors.iter().map(|s| ctx.parse_element(s.as_ref())).collect::<Result<Vec<_>>>()?;
        Self::new(ctx, colors)
    }

    pub(crate) fn new_unchecked(ctx: GroupContext, colors: Vec<GroupElement>) -> Self {
        Self { colors, ctx }
    }

    pub fn ctx(&self) -> GroupContext {
        self.ctx
    }

    pub fn colors(&self) -> &[GroupElement] {
        &self.colors
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// `x_{i mod n}` for any integer index.
    pub fn at(&self, i: i64) -> &GroupElement {
        &self.colors[i.rem_euclid(self.colors.len() as i64) as usize]
    }

    pub fn is_trivial(&self) -> bool {
        classify_tuple(self) == ColoringClass::Trivial
    }

    /// Applies `x -> g x g^-1` to every color.
    pub fn conjugated_by(&self, g: &GroupElement) -> Result<Self> {
        let colors = self
            .colors
            .iter()
            .map(|x| crate::quandle::quandle_op(x, g, &self.ctx))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { colors, ctx: self.ctx })
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.colors.iter().map(ToString::to_string).collect()
    }
}

impl Serialize for ColoringTuple {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.colors.serialize(serializer)
    }
}

impl fmt::Display for ColoringTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.colors.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ColoringClass {
    Trivial,
    Nontrivial,
}

/// Colors `y_0 .. y_{m-1}` of the bridges of the braid diagram.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BridgeColors {
    pub bridges: Vec<GroupElement>,
}

/// A tuple that has been checked to color `K(m, n)`, with its harlequin.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Coloring {
    pub tuple: ColoringTuple,
    pub m: u64,
    pub harlequin: GroupElement,
}

impl Coloring {
    /// Accepts `tuple` only if it colors `K(m, len)`.
    pub fn verify(tuple: ColoringTuple, m: u64) -> Result<Self> {
        if !verify_tuple_iii(&tuple, m)? {
            return Err(Error::NotAColoring { m, n: tuple.len() as u64 });
        }
        let harlequin = harlequin(&tuple, m)?;
        Ok(Self { tuple, m, harlequin })
    }

    pub fn n(&self) -> u64 {
        self.tuple.len() as u64
    }

    pub fn is_trivial(&self) -> bool {
        self.tuple.is_trivial()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Criterion,
    Bruteforce,
    Predicate,
    Reduction,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Method::Criterion => "criterion",
            Method::Bruteforce => "bruteforce",
            Method::Predicate => "predicate",
            Method::Reduction => "reduction",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Caveat {
    /// The centralizer criterion is only known to be necessary.
    SufficiencyUnverified,
    /// The criterion was evaluated at `p = 2`.
    ExperimentalP2,
    /// `K(1, n)` and `K(m, 1)` admit only the trivial coloring.
    UnknotTrivialOnly,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Witness {
    /// `u` with `C(u^p) ∖ C(u)` containing `x0`.
    Pair { u: GroupElement, x0: GroupElement },
    Tuple(ColoringTuple),
}

/// A colorability decision, naming the method that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub colorable: bool,
    pub method: Method,
    pub witness: Option<Witness>,
    pub prime_pair: Option<(u64, u64)>,
    pub caveats: BTreeSet<Caveat>,
}

impl Verdict {
    pub fn new(colorable: bool, method: Method) -> Self {
        Self { colorable, method, witness: None, prime_pair: None, caveats: BTreeSet::new() }
    }

    pub fn with_witness(mut self, w: Witness) -> Self {
        self.witness = Some(w);
        self
    }

    pub fn with_caveat(mut self, c: Caveat) -> Self {
        self.caveats.insert(c);
        self
    }

    pub fn witness_pair(&self) -> Option<(&GroupElement, &GroupElement)> {
        match &self.witness {
            Some(Witness::Pair { u, x0 }) => Some((u, x0)),
            _ => None,
        }
    }

    pub fn witness_tuple(&self) -> Option<&ColoringTuple> {
        match &self.witness {
            Some(Witness::Tuple(t)) => Some(t),
            _ => None,
        }
    }
}
