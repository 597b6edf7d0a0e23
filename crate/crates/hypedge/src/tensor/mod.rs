//! Minimal dense + sparse numeric core with reverse-mode gradients.
//!
//! Everything is 64-bit; the fixed operator set lives on [`tape::Tape`].

mod dense;
mod sparse;
pub mod tape;

pub use dense::DenseMatrix;
pub use sparse::SparseIncidence;
pub use tape::{Gradients, Tape, Var};
