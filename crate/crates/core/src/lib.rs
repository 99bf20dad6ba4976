//! Finite multiplicative lattices.
//!
//! Lattices are built from order relations ([`order`]), equipped with a
//! validated multiplication ([`mult`]), and their elements classified with
//! respect to M-closed sets ([`xclass`]). [`ring`] builds ideal lattices of
//! `ℤ_n` and `ℤ_m × ℤ_n` and decides the ring-side ideal classes directly from
//! ring elements; [`suite`] runs the executable lemma checks.

pub mod corpus;
pub mod error;
pub mod mult;
pub mod order;
pub mod report;
pub mod ring;
pub mod set;
pub mod suite;
pub mod xclass;

pub use error::{Axiom, Error, Result};
pub use mult::{attach_multiplication, meet_mult, trivial_mult, MultTable, MultiplicativeLattice, Witness};
pub use order::{build_order, validate_lattice, FiniteLattice, PartialOrder};
pub use set::ElementSet;
pub use xclass::MClosedSet;
