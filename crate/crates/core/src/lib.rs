//! A laboratory for finite unital rings given by Cayley tables.
//!
//! The crate decides, by exhaustive computation, whether a finite ring is
//! *strongly 2-nil-clean* (every element is a commuting sum of two
//! idempotents and a nilpotent) or *Zhou nil-clean* (two tripotents and a
//! nilpotent), and evaluates a family of square-element characterizations of
//! both classes so that their equivalence can be checked ring by ring.
//!
//! Module map:
//!
//! - [`ring`]: tables, axiom validation, constructors, characteristic,
//!   corner rings and the primary (CRT) splitting.
//! - [`classes`]: nilpotents, idempotents, tripotents, 5-potents,
//!   involutions, units and squares.
//! - [`lifting`]: idempotent/tripotent lifting inside `Z[a]` and the
//!   tripotent split `p = e - f`.
//! - [`decompose`]: commuting decomposition search and the constructive
//!   route through the lifting algorithms.
//! - [`classifier`]: characterization predicates and the equivalence
//!   cross-check.
//! - [`catalog`]: named rings and the survey corpus.
//! - [`expr`]: the textual ring-expression language used by the CLI and
//!   the web demo.

pub mod catalog;
pub mod classes;
pub mod classifier;
pub mod decompose;
pub mod error;
pub mod expr;
pub mod iso;
pub mod lifting;
pub mod ring;

pub use classes::{ElementClassification, ElementSet};
pub use classifier::{cross_check, CharacterizationId, CharacterizationReport};
pub use decompose::{find_decomposition, DecompositionWitness, Kind, Shape};
pub use error::{Axiom, Error, Result};
pub use ring::{ElementId, RingTable};
