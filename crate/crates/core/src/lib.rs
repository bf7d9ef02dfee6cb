//! Exact computer algebra for chord-diagram Lie algebras, their truncated
//! enveloping algebras, cabling maps, parenthesized braid words, and the
//! associator, genus, elliptic, GT and GRT equation systems, plus a
//! high-precision numerical KZ associator used as a cross-check.

pub mod braid;
pub mod cabling;
pub mod envelope;
pub mod equations;
pub mod kz;
pub mod lie;
pub mod linalg;
pub mod scalar;

pub use cabling::{cable, superscript, superscript_eval, CablingError, StrandAssignment};
pub use envelope::{Envelope, GroupLike, Mono, Series, SeriesError};
pub use scalar::{rat, rint, CFixed, Fixed, Rat, Scalar};
