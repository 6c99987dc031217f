//! Deformed brackets: on forms `Λ g*` (trivial, standard, `d_t` and general
//! deformations), on `h ⊕ g0'` where vectors act by Lie derivative, and the
//! deformed Schouten bracket on multivectors.
//!
//! Every concrete superalgebra implements [`SuperBracket`], a bracket table
//! on a finite ordered set of homogeneous generators. The axiom checker and
//! the chain complex only see that trait.

mod deformation;
mod extension;
mod generator;
mod schouten;

use std::fmt;
use std::hash::Hash;

use thiserror::Error;

pub use deformation::{
    standard_deformed, trivial_deformed, BracketWarning, DeformationKind, DeformationSpec,
    DeformedBracket, FSpec, FTable,
};
pub use extension::{
    extension_bracket, mixed_jacobi_defect, mixed_jacobi_expected, solve_g0_doubleprime,
    solve_g0_prime, DeformedSuperalgebra, Subalgebra, SuperElement,
};
pub use generator::Generator;
pub use schouten::{deformed_schouten, DeformedSchoutenAlgebra};

use crate::gradedalgebra::{AlgebraError, Kind, LinComb};
use crate::liecore::LieError;
use crate::scalarfield::Poly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BracketError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error("deformation kind {got:?} where {expected:?} was required")]
    WrongKind {
        expected: DeformationKind,
        got: DeformationKind,
    },
    #[error("expected a {expected:?}, got a {got:?}")]
    WrongElementKind { expected: Kind, got: Kind },
    #[error("F is not symmetric: F({a},{b}) != F({b},{a})")]
    AsymmetricF { a: usize, b: usize },
    #[error("vector space is not closed under the Lie bracket")]
    NotASubalgebra,
    #[error("subalgebra lives in a Lie algebra of different dimension")]
    DimensionMismatch,
}

/// A bracket on a finite ordered basis of homogeneous generators with
/// `Z`-valued super degrees and coefficients in `Q[t]`.
pub trait SuperBracket: Sync {
    type Gen: Ord + Clone + Hash + fmt::Debug + Send + Sync;

    /// Short identifier used in reports.
    fn id(&self) -> String;

    /// All generators, ascending.
    fn generators(&self) -> &[Self::Gen];

    fn degree(&self, g: &Self::Gen) -> i64;

    fn bracket(&self, a: &Self::Gen, b: &Self::Gen) -> LinComb<Self::Gen>;

    fn render(&self, g: &Self::Gen) -> String;

    fn is_odd(&self, g: &Self::Gen) -> bool {
        self.degree(g).rem_euclid(2) == 1
    }

    /// Bilinear extension of [`SuperBracket::bracket`].
    fn bracket_comb(&self, u: &LinComb<Self::Gen>, v: &LinComb<Self::Gen>) -> LinComb<Self::Gen> {
        let mut out = LinComb::zero();
        for (a, ca) in u {
            for (b, cb) in v {
                let c: Poly = ca * cb;
                out.add_scaled(&self.bracket(a, b), &c);
            }
        }
        out
    }

    fn render_comb(&self, u: &LinComb<Self::Gen>) -> String {
        if u.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = u
            .iter()
            .map(|(g, c)| {
                let name = self.render(g);
                if c.is_one() {
                    name
                } else if c.coeffs().len() == 1 {
                    format!("{c}*{name}")
                } else {
                    format!("({c})*{name}")
                }
            })
            .collect();
        parts.join(" + ")
    }
}
