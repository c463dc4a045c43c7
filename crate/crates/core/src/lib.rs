//! Exact arithmetic for modular data: cyclotomic fields, the admissibility
//! conditions, Galois actions, `SL₂(ℤ)` lifts and a rank-5 verification
//! harness.

pub mod arith;
pub mod catalog;
pub mod classifier;
pub mod cyclotomic;
pub mod error;
pub mod field_theory;
pub mod galois;
pub mod matrix;
pub mod modular_data;
pub mod perm;
pub mod sl2z_reps;
pub mod verdict;

pub use cyclotomic::{Cyclotomic, Rational, RootOfUnity};
pub use error::{Error, Result};
pub use matrix::Matrix;
pub use modular_data::{FusionRules, ModularDatum};
pub use perm::Perm;
pub use verdict::{NamedVerdict, Verdict};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    struct Introduction;
    #[doc = include_str!("../../../book/src/cyclotomic.md")]
    struct CyclotomicChapter;
    #[doc = include_str!("../../../book/src/modular-data.md")]
    struct ModularData;
    #[doc = include_str!("../../../book/src/galois.md")]
    struct Galois;
    #[doc = include_str!("../../../book/src/lifts.md")]
    struct Lifts;
    #[doc = include_str!("../../../book/src/field-theory.md")]
    struct FieldTheory;
    #[doc = include_str!("../../../book/src/rank-five.md")]
    struct RankFive;
    #[doc = include_str!("../../../book/src/cli.md")]
    struct Cli;
}
