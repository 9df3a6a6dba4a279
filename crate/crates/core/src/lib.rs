//! Finite residuated lattices and bounded distributive lattices, their
//! filters, and the reticulation functor between them.
//!
//! Algebras are stored as operation tables over `0..n`. Everything is
//! computed exhaustively; the checkers return [`Report`]s that list every
//! verified clause, and constructions certify the morphisms they produce.

pub mod algebra;
pub mod constructions;
pub mod dot;
pub mod error;
pub mod filters;
pub mod fixtures;
pub mod golden;
pub mod io;
pub mod morphism;
mod par;
pub mod report;
pub mod reticulation;
pub mod stone;

pub use algebra::{Elem, FiniteAlgebra, FiniteBoundedLattice, FiniteResiduatedLattice, Kind, Op};
pub use error::{Error, Result};
pub use filters::{Filter, FilterLattice};
pub use morphism::{Morphism, SearchOptions};
pub use report::Report;
pub use reticulation::{reticulate, Reticulation};
