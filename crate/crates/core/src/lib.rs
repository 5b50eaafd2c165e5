//! Central extensions `G(H, I)` of lamplighter groups `C₂ ≀ H` over
//! `H ∈ {ℤ, ℤ^d, F_r}`: arithmetic, word and conjugacy problems, the
//! conjugacy geodesic grammar, growth, membership and structural tests.
//!
//! ```
//! use lampext::{Group, SymmetricSet, GeneratingSet, GeneratorWord, word};
//!
//! let g = Group::over_integers(SymmetricSet::finite_integers([1])).unwrap();
//! let w = GeneratorWord::parse("a t a T a t a T", GeneratingSet::Standard, g.base()).unwrap();
//! assert_eq!(word::normal_form(&g, &w), "z");
//! ```

pub mod base;
pub mod conjugacy;
pub mod error;
pub mod ext;
pub mod geo;
pub mod growth;
pub mod membership;
pub mod structure;
pub mod word;

pub use base::{BaseElement, BaseGroup, FreeWord, Letter, TotalOrder, TreeHull};
pub use conjugacy::{conjugate_decide_gi, ConjugacyCertificate};
pub use error::{Error, Result};
pub use ext::{
    Embedding, GElement, Group, Injection, IntegerSetForm, NElement, Quotient, Support, SymmetricSet, Wreath,
    WreathElement,
};
pub use geo::{Grammar, GrammarVariant, ParseResult};
pub use growth::{LabelledBall, RationalSeries};
pub use membership::{LaurentPoly, SubgroupHandle, SubgroupWord, WreathSubgroupData, ZStatus};
pub use structure::{FiniteQuotientWitness, Periodicity};
pub use word::{GeneratingSet, GeneratorWord, Symbol};
