//! Finite coset G-sets viewed as unary algebras, together with the lattice
//! machinery needed to compare their congruence lattices.
//!
//! The crate is organised bottom-up:
//!
//! * [`group`]: finite groups as Cayley tables, subgroups, cosets and the
//!   subgroup enumeration kernel.
//! * [`lattice`]: finite bounded lattices built from a partial order, with
//!   filters, isomorphism search, the pentagon (N5) test and DOT export.
//! * [`algebra`]: unary algebras, partitions and congruence lattices.
//! * [`construction`]: the isotopic pair `A ~_C B` built from a non-Dedekind
//!   group `S`, the explicit isotopy map and the aggregated verification report.
//! * [`oracle`]: brute-force reference implementations used to cross-check the
//!   fast paths.

pub mod algebra;
pub mod bounds;
pub mod construction;
mod error;
pub mod group;
pub mod lattice;
pub mod oracle;

pub use algebra::{Partition, UnaryAlgebra};
pub use bounds::Bounds;
pub use construction::{ExampleBundle, IsotopyWitness, VerificationReport};
pub use error::{Error, Result};
pub use group::{FiniteGroup, LeftCosetSpace, SubgroupSet};
pub use lattice::FiniteLattice;
