//! Analysis toolkit for finite lattices, built around pseudocomplements.
//!
//! A bounded lattice is *pseudocomplemented* when every element `a` has a
//! greatest element disjoint from it: some `a*` with `a ∧ a* = 0` such that
//! `a ∧ x = 0` implies `x ≤ a*`. For finite *modular* lattices this property
//! has two equivalent structural characterizations, and this crate implements
//! all three as independent decision procedures:
//!
//! 1. every element has a pseudocomplement ([`analysis::is_pseudocomplemented`]);
//! 2. no 0-sublattice of the lattice is isomorphic to the diamond `M3` or to
//!    the seven-element lattice `M23` ([`patterns::find_zero_sublattice_embedding`]);
//! 3. no ternary witness exists: no triple `(a, b, c)` of nonzero elements
//!    with `c ∧ a = c ∧ b = 0` and `c ∨ a = c ∨ b = a ∨ b`
//!    ([`patterns::find_ternary_witness`]).
//!
//! [`patterns::theorem1_report`] evaluates all three on a lattice and checks
//! that they agree. Outside the modular hypothesis the three conditions can
//! genuinely diverge, so reports carry the modularity verdict alongside.
//!
//! The [`groups`] module applies the machinery to subgroup lattices of finite
//! abelian groups, where pseudocomplementedness, distributivity, and
//! cyclicity all coincide ([`groups::theorem3_report`]).
//!
//! [`generators`] produces the test corpora: named fixtures, divisor
//! lattices, exhaustive enumeration of small lattices up to isomorphism, and
//! seeded random lattices.

#![forbid(unsafe_code)]
// table-building code walks several arrays by the same index; rewriting
// those loops around iterators obscures which table drives the loop
#![allow(clippy::needless_range_loop)]
#![allow(clippy::manual_is_multiple_of)]

pub mod analysis;
pub mod generators;
pub mod groups;
pub mod harness;
pub mod io;
pub mod lattice;
pub mod patterns;
pub mod report;

pub use lattice::{CoverList, FiniteLattice, LatticeError, LatticeOp};
