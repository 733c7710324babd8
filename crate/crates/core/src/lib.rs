//! Exact computation in free Post-Lie and Post-Hopf algebras.
//!
//! The crate covers two free right Post-Hopf algebras:
//!
//! * `T(Mag(X))`, spanned by forests of planar binary trees with leaves
//!   decorated by an alphabet `X`, where the magmatic product is grafting;
//! * `T(T(V)₊)`, spanned by sentences of nonempty words, where the base
//!   product is concatenation of words.
//!
//! The star product on each is computed by a recursive extension
//! ([`extension`]) and, independently, by closed combinatorial formulas
//! ([`free`] and [`words`]). The [`verify`] module certifies Post-Lie and
//! Post-Hopf identities with exact arithmetic.

pub mod error;
pub mod extension;
pub mod free;
pub mod linear;
mod parse;
pub mod random;
pub mod scalar;
pub mod symbol;
pub mod tensor;
pub mod trees;
pub mod verify;
pub mod words;

pub use error::{Error, Result};
pub use linear::LinComb;
pub use scalar::Scalar;
pub use symbol::{Alphabet, Symbol};
pub use tensor::Word;
pub use trees::{Forest, PRTree, Tree};
