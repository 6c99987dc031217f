//! Exterior algebras of a Lie algebra: forms `Λ g*` and multivectors `Λ g`.
//!
//! Both live in the same container, [`GradedElement`], tagged with a
//! [`Kind`]. Form degree `a` carries super degree `-a-1`; multivector degree
//! `p` carries super degree `p-1`. Coefficients are polynomials in `t` so
//! deformed brackets can be composed without leaving the ring.
//!
//! Sign conventions:
//! - interior products act from the left, `ι(e_{i1}∧…∧e_{ip}) = Σ_s (-1)^{s-1} c_{is} (omit s)`;
//! - the exterior derivative is the Chevalley–Eilenberg one, extended as an
//!   antiderivation;
//! - the Schouten bracket satisfies `[P, Q∧R] = [P,Q]∧R + (-1)^{(p-1)q} Q∧[P,R]`.

mod lincomb;
mod monomial;

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::Zero;
use thiserror::Error;

pub use lincomb::LinComb;
pub use monomial::Monomial;

use crate::liecore::{LieAlgebra, OneForm};
use crate::scalarfield::{rat, Poly, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Form,
    MultiVector,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("expected a {expected:?}, got a {got:?}")]
    KindMismatch { expected: Kind, got: Kind },
    #[error("element is not homogeneous")]
    NonHomogeneous,
}

/// Super degree of an `a`-form.
pub fn form_superdegree(a: usize) -> i64 {
    -(a as i64) - 1
}

/// Super degree of a `p`-vector.
pub fn multivector_superdegree(p: usize) -> i64 {
    p as i64 - 1
}

/// `(-1)^k` as a polynomial coefficient.
pub(crate) fn sign_poly(k: i64) -> Poly {
    Poly::from_int(if k.rem_euclid(2) == 0 { 1 } else { -1 })
}

/// A vector `X = Σ x_i y_i` with constant coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VectorField(Vec<Rational>);

impl VectorField {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        VectorField(coeffs)
    }

    pub fn basis(n: usize, k: usize) -> Self {
        let mut c = vec![Rational::zero(); n];
        c[k] = rat(1, 1);
        VectorField(c)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }
}

/// Linear combination of wedge monomials, either forms or multivectors.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GradedElement {
    kind: Kind,
    terms: LinComb<Monomial>,
}

impl GradedElement {
    pub fn zero(kind: Kind) -> Self {
        GradedElement {
            kind,
            terms: LinComb::zero(),
        }
    }

    pub fn zero_form() -> Self {
        Self::zero(Kind::Form)
    }

    pub fn zero_multivector() -> Self {
        Self::zero(Kind::MultiVector)
    }

    pub fn from_terms(kind: Kind, terms: LinComb<Monomial>) -> Self {
        GradedElement { kind, terms }
    }

    pub fn form_term(m: Monomial, c: Poly) -> Self {
        GradedElement {
            kind: Kind::Form,
            terms: LinComb::term(m, c),
        }
    }

    pub fn multivector_term(m: Monomial, c: Poly) -> Self {
        GradedElement {
            kind: Kind::MultiVector,
            terms: LinComb::term(m, c),
        }
    }

    /// The constant 0-form `1`.
    pub fn one_form_unit() -> Self {
        Self::form_term(Monomial::unit(), Poly::from_int(1))
    }

    /// `ζ_i` (0-based).
    pub fn zeta(i: usize) -> Self {
        Self::form_term(Monomial::single(i), Poly::from_int(1))
    }

    /// `y_i` as a 1-vector (0-based).
    pub fn y(i: usize) -> Self {
        Self::multivector_term(Monomial::single(i), Poly::from_int(1))
    }

    pub fn from_vector(x: &VectorField) -> Self {
        let mut out = Self::zero_multivector();
        for (i, c) in x.coeffs().iter().enumerate() {
            out.add_term(Monomial::single(i), Poly::constant(c.clone()));
        }
        out
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn terms(&self) -> &LinComb<Monomial> {
        &self.terms
    }

    pub fn add_term(&mut self, m: Monomial, c: Poly) {
        self.terms.add_term(m, c);
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn scale(&self, c: &Poly) -> Self {
        GradedElement {
            kind: self.kind,
            terms: self.terms.scale(c),
        }
    }

    /// Degree of every term when they agree; `None` for zero or mixed.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut degs = self.terms.generators().map(Monomial::degree);
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn require_homogeneous(&self) -> Result<Option<usize>, AlgebraError> {
        if self.is_zero() {
            return Ok(None);
        }
        self.homogeneous_degree()
            .map(Some)
            .ok_or(AlgebraError::NonHomogeneous)
    }

    /// Homogeneous components by degree.
    pub fn components(&self) -> Vec<(usize, GradedElement)> {
        let mut out: Vec<(usize, GradedElement)> = Vec::new();
        for (m, c) in &self.terms {
            let d = m.degree();
            match out.iter_mut().find(|(k, _)| *k == d) {
                Some((_, e)) => e.add_term(m.clone(), c.clone()),
                None => {
                    let mut e = GradedElement::zero(self.kind);
                    e.add_term(m.clone(), c.clone());
                    out.push((d, e));
                }
            }
        }
        out.sort_by_key(|(d, _)| *d);
        out
    }

    pub fn map_coeffs(&self, f: impl Fn(&Poly) -> Poly) -> Self {
        GradedElement {
            kind: self.kind,
            terms: self.terms.map_coeffs(f),
        }
    }

    pub fn render(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(m, c)| {
                if c.is_one() {
                    m.render(names)
                } else {
                    format!("({c}) {}", m.render(names))
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl fmt::Debug for GradedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}[{}]", self.kind, self.terms)
    }
}

impl fmt::Display for GradedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.terms)
    }
}

impl Add for &GradedElement {
    type Output = GradedElement;
    fn add(self, rhs: &GradedElement) -> GradedElement {
        assert_eq!(self.kind, rhs.kind, "adding forms to multivectors");
        GradedElement {
            kind: self.kind,
            terms: &self.terms + &rhs.terms,
        }
    }
}

impl Sub for &GradedElement {
    type Output = GradedElement;
    fn sub(self, rhs: &GradedElement) -> GradedElement {
        assert_eq!(self.kind, rhs.kind, "subtracting forms and multivectors");
        GradedElement {
            kind: self.kind,
            terms: &self.terms - &rhs.terms,
        }
    }
}

impl Neg for &GradedElement {
    type Output = GradedElement;
    fn neg(self) -> GradedElement {
        GradedElement {
            kind: self.kind,
            terms: -&self.terms,
        }
    }
}

/// Graded-commutative wedge product of two elements of the same kind.
pub fn wedge(u: &GradedElement, v: &GradedElement) -> Result<GradedElement, AlgebraError> {
    if u.kind != v.kind {
        return Err(AlgebraError::KindMismatch {
            expected: u.kind,
            got: v.kind,
        });
    }
    let mut out = GradedElement::zero(u.kind);
    for (a, ca) in &u.terms {
        for (b, cb) in &v.terms {
            if let Some((s, m)) = a.wedge(b) {
                out.add_term(m, (ca * cb).scale(&rat(s as i64, 1)));
            }
        }
    }
    Ok(out)
}

/// Wedge of several elements of one kind, left to right.
pub fn wedge_all(parts: &[&GradedElement]) -> GradedElement {
    let mut it = parts.iter();
    let first = (*it.next().expect("at least one factor")).clone();
    it.fold(first, |acc, p| wedge(&acc, p).expect("same kind"))
}

fn contract_terms(e: &GradedElement, coeffs: &[Rational]) -> GradedElement {
    let mut out = GradedElement::zero(e.kind);
    for (m, c) in &e.terms {
        for (s, &i) in m.indices().iter().enumerate() {
            let x = &coeffs[i];
            if x.is_zero() {
                continue;
            }
            let sign = if s % 2 == 0 { x.clone() } else { -x.clone() };
            out.add_term(m.omit(s), c.scale(&sign));
        }
    }
    out
}

/// `ι_φ P` for a multivector `P`: lowers the degree by one.
pub fn contract(p: &GradedElement, phi: &OneForm) -> Result<GradedElement, AlgebraError> {
    if p.kind != Kind::MultiVector {
        return Err(AlgebraError::KindMismatch {
            expected: Kind::MultiVector,
            got: p.kind,
        });
    }
    Ok(contract_terms(p, phi.coeffs()))
}

/// `ι_X α` for a form `α`.
pub fn interior(x: &VectorField, alpha: &GradedElement) -> Result<GradedElement, AlgebraError> {
    if alpha.kind != Kind::Form {
        return Err(AlgebraError::KindMismatch {
            expected: Kind::Form,
            got: alpha.kind,
        });
    }
    Ok(contract_terms(alpha, x.coeffs()))
}

/// Chevalley–Eilenberg exterior derivative on forms, as an antiderivation:
/// `d(ζ_{i1}∧…∧ζ_{ia}) = Σ_s (-1)^{s-1} ζ_{i1}∧…∧dζ_{is}∧…∧ζ_{ia}`.
pub fn exterior_derivative(
    alg: &LieAlgebra,
    alpha: &GradedElement,
) -> Result<GradedElement, AlgebraError> {
    if alpha.kind != Kind::Form {
        return Err(AlgebraError::KindMismatch {
            expected: Kind::Form,
            got: alpha.kind,
        });
    }
    let dz: Vec<GradedElement> = (0..alg.dim())
        .map(|k| alg.ce_differential(k).expect("index in range"))
        .collect();
    let mut out = GradedElement::zero_form();
    for (m, c) in &alpha.terms {
        let idx = m.indices();
        for (s, &i) in idx.iter().enumerate() {
            if dz[i].is_zero() {
                continue;
            }
            let before = GradedElement::form_term(Monomial::from_sorted(idx[..s].to_vec()), c.clone());
            let after =
                GradedElement::form_term(Monomial::from_sorted(idx[s + 1..].to_vec()), Poly::from_int(1));
            let term = wedge_all(&[&before, &dz[i], &after]);
            out = &out + &term.scale(&sign_poly(s as i64));
        }
    }
    Ok(out)
}

/// Cartan formula `L_X = ι_X ∘ d + d ∘ ι_X`.
pub fn lie_derivative(
    alg: &LieAlgebra,
    x: &VectorField,
    alpha: &GradedElement,
) -> Result<GradedElement, AlgebraError> {
    let a = interior(x, &exterior_derivative(alg, alpha)?)?;
    let b = exterior_derivative(alg, &interior(x, alpha)?)?;
    Ok(&a + &b)
}

/// Lie bracket of two basis vectors as a 1-vector.
fn bracket_basis_vectors(alg: &LieAlgebra, i: usize, j: usize) -> GradedElement {
    let mut out = GradedElement::zero_multivector();
    for (k, c) in alg.bracket_basis(i, j).into_iter().enumerate() {
        out.add_term(Monomial::single(k), Poly::constant(c));
    }
    out
}

/// Schouten–Nijenhuis bracket of multivectors, extending the Lie bracket as
/// a biderivation:
/// `[X_1∧…∧X_p, Y_1∧…∧Y_q] = Σ_{i,j} (-1)^{i+j} [X_i,Y_j]∧X_1…X̂_i…X_p∧Y_1…Ŷ_j…Y_q`.
pub fn schouten(
    alg: &LieAlgebra,
    p: &GradedElement,
    q: &GradedElement,
) -> Result<GradedElement, AlgebraError> {
    for e in [p, q] {
        if e.kind != Kind::MultiVector {
            return Err(AlgebraError::KindMismatch {
                expected: Kind::MultiVector,
                got: e.kind,
            });
        }
    }
    let mut out = GradedElement::zero_multivector();
    for (mp, cp) in &p.terms {
        for (mq, cq) in &q.terms {
            let coeff = cp * cq;
            for (i, &xi) in mp.indices().iter().enumerate() {
                for (j, &yj) in mq.indices().iter().enumerate() {
                    let br = bracket_basis_vectors(alg, xi, yj);
                    if br.is_zero() {
                        continue;
                    }
                    let rest_p = GradedElement::multivector_term(mp.omit(i), Poly::from_int(1));
                    let rest_q = GradedElement::multivector_term(mq.omit(j), Poly::from_int(1));
                    let term = wedge_all(&[&br, &rest_p, &rest_q]);
                    out = &out + &term.scale(&(&coeff * &sign_poly((i + j) as i64)));
                }
            }
        }
    }
    Ok(out)
}
