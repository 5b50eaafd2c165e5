//! The groups `G(H,I)`, their kernels `N(H,I)`, and the maps between them.

mod group;
mod morphism;
mod set;
mod wreath;

pub use group::{GElement, Group, NElement, Support};
pub use morphism::{Embedding, Injection, Quotient};
pub use set::{IntegerSetForm, Predicate, SymmetricSet};
pub use wreath::{Wreath, WreathElement};

pub(crate) use set::gcd;
