//! Exact computations with deformed Lie superalgebra brackets on the forms of
//! a Lie algebra, their axioms, and the weighted homology of the super
//! exterior algebras they generate.
//!
//! Coefficients live in `Q[t]` (and `Q(t)`, `Q[t]/(p)` for ranks), so every
//! statement is checked symbolically in the deformation parameter.

pub mod axiomlab;
pub mod brackets;
pub mod gradedalgebra;
pub mod homology;
pub mod liecore;
pub mod linalg;
pub mod scalarfield;
pub mod superchain;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/lie-algebras.md")]
    mod lie_algebras {}
    #[doc = include_str!("../../../book/src/brackets.md")]
    mod brackets {}
    #[doc = include_str!("../../../book/src/axioms.md")]
    mod axioms {}
    #[doc = include_str!("../../../book/src/f-family.md")]
    mod f_family {}
    #[doc = include_str!("../../../book/src/extension.md")]
    mod extension {}
    #[doc = include_str!("../../../book/src/homology.md")]
    mod homology {}
    #[doc = include_str!("../../../book/src/schouten.md")]
    mod schouten {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
