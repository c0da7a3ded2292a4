//! Colorability of torus knots by conjugation quandles of small finite groups.
//!
//! A torus knot `K(m, n)` with `gcd(m, n) = 1` is colored by `Conj(G)` when a
//! tuple `(x_0, .., x_{n-1})` of group elements assigned to the initial arcs
//! satisfies the crossing relations of the braid diagram. This crate provides:
//!
//! * exact arithmetic over `F_q` and `F_{q^2}` ([`field`]),
//! * four concrete group families behind one interface ([`group`]),
//! * the quandle operation and centralizer utilities ([`quandle`]),
//! * tuple verification, the centralizer criterion and an exhaustive
//!   search oracle ([`coloring`]),
//! * coloring transport between torus knots ([`transforms`]),
//! * closed-form predicates per group family ([`families`]),
//! * sweep tables and the predicate/criterion/oracle crosscheck
//!   ([`experiments`]).

pub mod arith;
pub mod coloring;
pub mod error;
pub mod experiments;
pub mod families;
pub mod field;
pub mod group;
pub mod quandle;
pub mod transforms;

pub use coloring::{
    BridgeColors, Caveat, Coloring, ColoringClass, ColoringTuple, Method, SearchOptions,
    TorusKnot, Verdict, Witness,
};
pub use error::{Error, Result};
pub use group::{Family, GroupContext, GroupElement};
