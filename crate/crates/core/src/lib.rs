//! Vertex connectivity of addition Cayley graphs on finite abelian groups.
//!
//! The addition Cayley graph of `S ⊆ G` has vertex set `G` and an edge
//! `{g1, g2}` whenever `g1 + g2 ∈ S`. This crate evaluates its connectivity in
//! closed form from the subgroup lattice of `G` ([`connectivity`]), and ships an
//! independent max-flow oracle ([`cayley_graph`]) to check the closed form
//! against.
//!
//! The crate is `no_std` and only needs `alloc`; parsing, JSON and the command
//! line live in the companion `sumgraph` crate.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod abelian_group;
pub mod cayley_graph;
pub mod connectivity;
mod error;
mod set;
pub mod sumsets;

pub use abelian_group::{CosetSpace, Element, GroupSpec, Subgroup, SubgroupLattice};
pub use cayley_graph::{AdditionCayleyGraph, Fragment, SimpleGraph};
pub use connectivity::{Analyzer, Branch, FamilyEntry, FamilyTag, KappaReport};
pub use error::{Error, Result};
pub use set::GSubset;
