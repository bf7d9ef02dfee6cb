//! Parenthesized framed braids: objects, framed braid group elements,
//! morphism words in the generators of the framed braid operad and its
//! genus-`g` modules, relation catalogs, and evaluation of words into
//! truncated enveloping algebras.
//!
//! Equality of words is decided only after evaluation, so it is sound
//! through the truncation weight.

pub mod artin;
pub mod catalog;
pub mod eval;
pub mod framed;
pub mod object;
pub mod word;

pub use artin::{artin_morphism, pure_braid_generator};
pub use catalog::{check_relations, relation_words, Catalog, CatalogEntries, RelationPair, SymbolicRelation};
pub use eval::Evaluator;
pub use framed::FramedBraid;
pub use object::{PaObject, Tree};
pub use word::{commutator, invert, parse_pattern, parse_word, BraidMorphism, Generator, Letter};

use crate::cabling::CablingError;
use crate::envelope::SeriesError;
use crate::equations::EquationError;

/// Errors raised by the braid-word module.
#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum BraidError {
    /// Malformed word, pattern or object.
    #[error("parse error: {0}")]
    Parse(String),
    /// Adjacent letters do not compose.
    #[error("endpoint mismatch: {0}")]
    Endpoint(String),
    /// Framed braids on different strand counts.
    #[error("strand counts differ: {0} and {1}")]
    StrandMismatch(usize, usize),
    /// Unknown catalog name.
    #[error("unknown catalog {0}")]
    UnknownCatalog(String),
    /// A word with handle letters was evaluated without genus data.
    #[error("genus data are required to evaluate handle letters")]
    MissingGenusData,
    /// A framing letter was evaluated in an unframed algebra.
    #[error("framing letters need a framed algebra")]
    Unframed,
    /// Input data known to too low a weight.
    #[error("truncation: {0}")]
    Truncation(String),
    /// Error from the equation modules.
    #[error(transparent)]
    Equation(#[from] EquationError),
    /// Error from cabling.
    #[error(transparent)]
    Cabling(#[from] CablingError),
    /// Error from the enveloping algebra.
    #[error(transparent)]
    Series(#[from] SeriesError),
}
