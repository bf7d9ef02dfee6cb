//! Free graded Lie algebras, Lyndon normal forms and graded quotients.

pub mod alphabet;
pub mod family;
pub mod lyndon;
pub mod morphism;
pub mod poly;
pub mod quotient;

pub use alphabet::{Alphabet, GenKind, GeneratorSymbol, Letter};
pub use family::{algebra, build_algebra, c3, chord, Family, Gens};
pub use lyndon::{free_graded_dim, necklace_dim, Word};
pub use morphism::{check_hom, LieMap};
pub use poly::{LieError, LiePoly};
pub use quotient::{GradedQuotient, QuotientError};
