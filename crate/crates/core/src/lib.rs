//! Set-theoretic calculus of discrete relations.
//!
//! A relation is an arbitrary subset of the hypercube `S^δ` of state
//! assignments to a finite ordered point set `δ`, with `S = {0, .., q-1}`.
//! Relations are stored as packed bit tables indexed by the little-endian
//! base-`q` ordinal of a tuple. On top of the primitive set algebra
//! (intersection, union, complement, extension, projection) the crate
//! builds compatibility analysis of relation systems, proper consequences,
//! canonical decompositions into principal factor and consequences,
//! prime / reducible classification, and the simplicial complex a
//! relation induces on its points.
//!
//! The [`poly`] module bridges relations with prime `q` to normal-form
//! polynomials over `GF(q)`, and [`automata`] builds the elementary
//! cellular automaton relations and the Game of Life local rule.
//!
//! ```
//! use relcalc::{automata, structure};
//!
//! let rule = automata::wolfram_relation(30).unwrap();
//! assert_eq!(rule.relation().bit_string(), "1001010101101010");
//! let dec = structure::canonical_decomposition(rule.relation()).unwrap();
//! assert_eq!(dec.consequences.len(), 2);
//! assert_eq!(dec.principal_factor.bit_string(), "1011111101111111");
//! ```

pub mod automata;
pub mod bits;
pub mod domain;
pub mod error;
pub mod io;
pub mod par;
pub mod poly;
pub mod relation;
pub mod structure;
pub mod topology;

pub use bits::BitTable;
pub use domain::Domain;
pub use error::{Error, Result};
pub use par::Execution;
pub use relation::{decode_point, encode_point, Relation};
