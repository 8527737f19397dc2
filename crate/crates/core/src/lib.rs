//! Middle-levels graphs `M_k`, their quotients under cyclic rotation, the
//! lexical 1-factorization, the lexical tree, and Hamilton cycles built from
//! short color words in the reduced graph `R_k`.

pub mod error;
pub mod export;
pub mod hamilton;
pub mod lexical;
pub mod quotient;
pub mod tree;
pub mod words;

pub use error::{Error, Result};
pub use lexical::{delta, lexical_color, lexical_color_upper, DeltaString, LexColor};
pub use quotient::{EdgeKind, MiddleLevelsGraph, QuotientGraph, ReducedGraph};
pub use words::{necklace_of, BinaryWord, Necklace};
