//! Finite-dimensional Lie algebras given by rational structure constants,
//! the Chevalley–Eilenberg differential on the dual basis, and closedness of
//! 1-forms.
//!
//! Left-invariant forms on a Lie group are modelled by `Λ g*`: a form is a
//! constant-coefficient combination of wedge monomials in the dual basis
//! `ζ_1, …, ζ_n`, and `dζ(X, Y) = -ζ([X, Y])`.

use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::gradedalgebra::{GradedElement, Monomial};
use crate::scalarfield::{rat, Poly, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("dimension must be positive")]
    ZeroDimension,
    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("bracket entry [y{n}, y{n}] is identically zero and cannot be set", n = .0 + 1)]
    DiagonalEntry(usize),
    #[error("bracket [y{}, y{}] component y{} given inconsistently", .i + 1, .j + 1, .k + 1)]
    InconsistentEntry { i: usize, j: usize, k: usize },
    #[error("one-form has {got} coefficients, expected {dim}")]
    LengthMismatch { got: usize, dim: usize },
}

/// A triple violating the Jacobi identity together with its defect
/// `[[y_i,y_j],y_k] + [[y_j,y_k],y_i] + [[y_k,y_i],y_j]`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("Jacobi identity fails on (y{}, y{}, y{})", .i + 1, .j + 1, .k + 1)]
pub struct JacobiViolation {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub defect: Vec<Rational>,
}

/// A 1-form `φ = Σ φ_i ζ_i` with constant coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OneForm(Vec<Rational>);

impl OneForm {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        OneForm(coeffs)
    }

    pub fn zero(n: usize) -> Self {
        OneForm(vec![Rational::zero(); n])
    }

    /// The dual basis element `ζ_k` (0-based `k`).
    pub fn basis(n: usize, k: usize) -> Self {
        let mut c = vec![Rational::zero(); n];
        c[k] = rat(1, 1);
        OneForm(c)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn to_form(&self) -> GradedElement {
        let mut out = GradedElement::zero_form();
        for (i, c) in self.0.iter().enumerate() {
            out.add_term(Monomial::single(i), Poly::constant(c.clone()));
        }
        out
    }

    /// `φ(X)` for a vector with coordinates `x`.
    pub fn pair(&self, x: &[Rational]) -> Rational {
        self.0.iter().zip(x).map(|(a, b)| a * b).sum()
    }
}

/// Structure constants `c^k_{ij}` with `[y_i, y_j] = Σ_k c^k_{ij} y_k`,
/// stored densely and antisymmetrically. Indices are 0-based; display
/// names are 1-based.
#[derive(Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    n: usize,
    c: Vec<Rational>,
    names: Vec<String>,
    dual_names: Vec<String>,
}

impl LieAlgebra {
    /// Builds from `(i, j, k, c)` entries meaning the `y_k` component of
    /// `[y_i, y_j]` is `c`. Entries with `i > j` are read through
    /// antisymmetry; repeating a component is allowed only if consistent.
    pub fn new(
        n: usize,
        entries: impl IntoIterator<Item = (usize, usize, usize, Rational)>,
    ) -> Result<Self, LieError> {
        if n == 0 {
            return Err(LieError::ZeroDimension);
        }
        let mut c = vec![Rational::zero(); n * n * n];
        let mut set = vec![false; n * n * n];
        for (i, j, k, v) in entries {
            for index in [i, j, k] {
                if index >= n {
                    return Err(LieError::IndexOutOfRange { index, dim: n });
                }
            }
            if i == j {
                return Err(LieError::DiagonalEntry(i));
            }
            let (lo, hi, v) = if i < j { (i, j, v) } else { (j, i, -v) };
            let slot = (lo * n + hi) * n + k;
            if set[slot] && c[slot] != v {
                return Err(LieError::InconsistentEntry { i: lo, j: hi, k });
            }
            set[slot] = true;
            c[(hi * n + lo) * n + k] = -v.clone();
            c[slot] = v;
        }
        Ok(LieAlgebra {
            n,
            c,
            names: (1..=n).map(|i| format!("y{i}")).collect(),
            dual_names: (1..=n).map(|i| format!("z{i}")).collect(),
        })
    }

    pub fn with_names(mut self, names: Vec<String>, dual_names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.n);
        assert_eq!(dual_names.len(), self.n);
        self.names = names;
        self.dual_names = dual_names;
        self
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn dual_names(&self) -> &[String] {
        &self.dual_names
    }

    /// `c^k_{ij}`.
    pub fn structure(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.c[(i * self.n + j) * self.n + k]
    }

    /// Nonzero `(i, j, k, c)` with `i < j`, in index order.
    pub fn entries(&self) -> Vec<(usize, usize, usize, Rational)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in i + 1..self.n {
                for k in 0..self.n {
                    let v = self.structure(i, j, k);
                    if !v.is_zero() {
                        out.push((i, j, k, v.clone()));
                    }
                }
            }
        }
        out
    }

    /// `[y_i, y_j]` as a coordinate vector.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<Rational> {
        (0..self.n).map(|k| self.structure(i, j, k).clone()).collect()
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.n];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() || i == j {
                    continue;
                }
                let s = xi * yj;
                for (k, o) in out.iter_mut().enumerate() {
                    *o += &s * self.structure(i, j, k);
                }
            }
        }
        out
    }

    /// Checks the Jacobi identity on every basis triple `i < j < k` and
    /// reports the first failure.
    pub fn validate_jacobi(&self) -> Result<(), JacobiViolation> {
        let e = |i: usize| {
            let mut v = vec![Rational::zero(); self.n];
            v[i] = rat(1, 1);
            v
        };
        for i in 0..self.n {
            for j in i + 1..self.n {
                for k in j + 1..self.n {
                    let (yi, yj, yk) = (e(i), e(j), e(k));
                    let a = self.bracket(&self.bracket(&yi, &yj), &yk);
                    let b = self.bracket(&self.bracket(&yj, &yk), &yi);
                    let c = self.bracket(&self.bracket(&yk, &yi), &yj);
                    let defect: Vec<Rational> = (0..self.n)
                        .map(|l| &a[l] + &b[l] + &c[l])
                        .collect();
                    if defect.iter().any(|x| !x.is_zero()) {
                        return Err(JacobiViolation { i, j, k, defect });
                    }
                }
            }
        }
        Ok(())
    }

    /// `dζ_k = -Σ_{i<j} c^k_{ij} ζ_i ∧ ζ_j`.
    pub fn ce_differential(&self, k: usize) -> Result<GradedElement, LieError> {
        if k >= self.n {
            return Err(LieError::IndexOutOfRange {
                index: k,
                dim: self.n,
            });
        }
        let mut out = GradedElement::zero_form();
        for i in 0..self.n {
            for j in i + 1..self.n {
                let c = self.structure(i, j, k);
                if !c.is_zero() {
                    out.add_term(Monomial::pair(i, j), Poly::constant(-c.clone()));
                }
            }
        }
        Ok(out)
    }

    /// `dφ` as a 2-form.
    pub fn d_one_form(&self, phi: &OneForm) -> GradedElement {
        let mut out = GradedElement::zero_form();
        for (k, c) in phi.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let dk = self.ce_differential(k).expect("index in range");
            out = &out + &dk.scale(&Poly::constant(c.clone()));
        }
        out
    }

    /// `dφ = 0`; equivalently `φ` vanishes on `[g, g]`.
    pub fn is_closed(&self, phi: &OneForm) -> bool {
        self.d_one_form(phi).is_zero()
    }

    pub fn check_one_form(&self, phi: &OneForm) -> Result<(), LieError> {
        if phi.dim() != self.n {
            return Err(LieError::LengthMismatch {
                got: phi.dim(),
                dim: self.n,
            });
        }
        Ok(())
    }
}

impl fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LieAlgebra(dim {}", self.n)?;
        for (i, j, k, c) in self.entries() {
            write!(f, ", [y{},y{}]_{}={}", i + 1, j + 1, k + 1, c)?;
        }
        write!(f, ")")
    }
}

/// Small algebras used throughout the tests, the examples and the guide.
pub mod catalog {
    use super::*;

    fn one() -> Rational {
        rat(1, 1)
    }

    /// The non-abelian 2-dimensional algebra `[y1, y2] = y1`.
    pub fn affine_line() -> LieAlgebra {
        LieAlgebra::new(2, [(0, 1, 0, one())]).expect("valid")
    }

    /// Heisenberg algebra `[y1, y2] = y3`.
    pub fn heisenberg() -> LieAlgebra {
        LieAlgebra::new(3, [(0, 1, 2, one())]).expect("valid")
    }

    pub fn abelian(n: usize) -> LieAlgebra {
        LieAlgebra::new(n, []).expect("valid")
    }

    /// `aff(1) ⊕ R`: `[y1, y2] = y1`, `y3` central.
    pub fn affine_line_plus_center() -> LieAlgebra {
        LieAlgebra::new(3, [(0, 1, 0, one())]).expect("valid")
    }

    /// `[y3, y1] = y1`, `[y3, y2] = y2`.
    pub fn book_algebra() -> LieAlgebra {
        LieAlgebra::new(3, [(2, 0, 0, one()), (2, 1, 1, one())]).expect("valid")
    }

    /// `aff(1) ⊕ aff(1)`.
    pub fn affine_line_squared() -> LieAlgebra {
        LieAlgebra::new(4, [(0, 1, 0, one()), (2, 3, 2, one())]).expect("valid")
    }

    /// Heisenberg extended by a derivation: `[y1,y2]=y3`, `[y4,y1]=y1`,
    /// `[y4,y3]=y3`.
    pub fn oscillator_like() -> LieAlgebra {
        LieAlgebra::new(4, [(0, 1, 2, one()), (3, 0, 0, one()), (3, 2, 2, one())])
            .expect("valid")
    }

    /// `aff(1) ⊕ R²`.
    pub fn affine_line_plus_plane() -> LieAlgebra {
        LieAlgebra::new(4, [(0, 1, 0, one())]).expect("valid")
    }

    /// Every catalog algebra with a short name, by dimension.
    pub fn named() -> Vec<(&'static str, LieAlgebra)> {
        vec![
            ("aff1", affine_line()),
            ("abelian2", abelian(2)),
            ("heisenberg", heisenberg()),
            ("aff1+R", affine_line_plus_center()),
            ("scaling3", book_algebra()),
            ("abelian3", abelian(3)),
            ("aff1+aff1", affine_line_squared()),
            ("oscillator", oscillator_like()),
            ("aff1+R2", affine_line_plus_plane()),
            ("abelian4", abelian(4)),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::catalog::*;
    use super::*;

    #[test]
    fn jacobi_holds_on_catalog() {
        for alg in [
            affine_line(),
            heisenberg(),
            abelian(3),
            affine_line_plus_center(),
            book_algebra(),
            affine_line_squared(),
            oscillator_like(),
            affine_line_plus_plane(),
        ] {
            assert!(alg.validate_jacobi().is_ok(), "{alg:?}");
        }
    }

    #[test]
    fn fake_algebra_violates_jacobi() {
        let fake = LieAlgebra::new(
            3,
            [
                (0, 1, 2, rat(1, 1)),
                (1, 2, 0, rat(1, 1)),
                (2, 0, 0, rat(1, 1)),
            ],
        )
        .unwrap();
        let v = fake.validate_jacobi().unwrap_err();
        assert_eq!((v.i, v.j, v.k), (0, 1, 2));
        // [[y3,y1],y2] = [y1,y2] = y3 is the only surviving term
        assert_eq!(v.defect, vec![rat(0, 1), rat(0, 1), rat(1, 1)]);
    }

    #[test]
    fn differential_matches_dual_basis_rule() {
        let alg = affine_line();
        let d1 = alg.ce_differential(0).unwrap();
        assert_eq!(d1, GradedElement::form_term(Monomial::pair(0, 1), Poly::from_int(-1)));
        assert!(alg.ce_differential(1).unwrap().is_zero());
        let h = heisenberg();
        assert_eq!(
            h.ce_differential(2).unwrap(),
            GradedElement::form_term(Monomial::pair(0, 1), Poly::from_int(-1))
        );
        assert!(matches!(
            h.ce_differential(3),
            Err(LieError::IndexOutOfRange { index: 3, dim: 3 })
        ));
    }

    #[test]
    fn closedness() {
        let alg = affine_line();
        assert!(alg.is_closed(&OneForm::basis(2, 1)));
        assert!(!alg.is_closed(&OneForm::basis(2, 0)));
        assert!(alg.is_closed(&OneForm::zero(2)));
        assert!(!heisenberg().is_closed(&OneForm::basis(3, 2)));
    }

    #[test]
    fn inconsistent_duplicate_rejected() {
        // [y1,y2] = y1 and [y2,y1] = y1 disagree
        let r = LieAlgebra::new(2, [(0, 1, 0, rat(1, 1)), (1, 0, 0, rat(1, 1))]);
        assert_eq!(r, Err(LieError::InconsistentEntry { i: 0, j: 1, k: 0 }));
        let ok = LieAlgebra::new(2, [(0, 1, 0, rat(1, 1)), (1, 0, 0, rat(-1, 1))]);
        assert!(ok.is_ok());
        assert_eq!(
            LieAlgebra::new(2, [(0, 0, 1, rat(1, 1))]),
            Err(LieError::DiagonalEntry(0))
        );
    }
}
