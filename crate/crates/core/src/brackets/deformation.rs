use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::Zero;

use super::BracketError;
use crate::gradedalgebra::{exterior_derivative, sign_poly, wedge, wedge_all, GradedElement};
use crate::liecore::{LieAlgebra, OneForm};
use crate::scalarfield::{rat, Poly, Rational};

/// Which family of brackets on forms is being deformed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DeformationKind {
    /// `F(a,b) α ∧ tφ ∧ β`, a deformation of the zero bracket.
    Trivial,
    /// `(-1)^a d(α∧β) + (a+b+2)/2 · α ∧ tφ ∧ β`.
    Standard,
    /// `(-1)^a d_t(α∧β)` with `d_t = d + tφ∧`, i.e. `F ≡ 1`.
    NaiveDt,
    /// `(-1)^a d(α∧β) + F(a,b) α ∧ tφ ∧ β` for an arbitrary `F`.
    General,
}

impl DeformationKind {
    pub fn has_d_term(self) -> bool {
        !matches!(self, DeformationKind::Trivial)
    }
}

/// Finite table of `F(a,b)` values; absent entries read as zero.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FTable {
    values: BTreeMap<(usize, usize), Rational>,
}

impl FTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Table on `{(a,b) : a+b ≤ bound}`.
    pub fn from_fn(bound: usize, f: impl Fn(usize, usize) -> Rational) -> Self {
        let mut t = FTable::new();
        for a in 0..=bound {
            for b in 0..=bound - a {
                t.set(a, b, f(a, b));
            }
        }
        t
    }

    pub fn set(&mut self, a: usize, b: usize, v: Rational) {
        if v.is_zero() {
            self.values.remove(&(a, b));
        } else {
            self.values.insert((a, b), v);
        }
    }

    pub fn get(&self, a: usize, b: usize) -> Rational {
        self.values.get(&(a, b)).cloned().unwrap_or_else(Rational::zero)
    }

    /// Nonzero entries in `(a, b)` order.
    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &Rational)> {
        self.values.iter()
    }

    /// First `(a, b)` with `F(a,b) ≠ F(b,a)`.
    pub fn asymmetry(&self) -> Option<(usize, usize)> {
        self.values
            .keys()
            .map(|&(a, b)| (a.min(b), a.max(b)))
            .find(|&(a, b)| self.get(a, b) != self.get(b, a))
    }
}

/// The deformation function `F`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FSpec {
    Table(FTable),
    /// `F(a,b) = κ (a+b+2)`.
    Kappa(Rational),
    Constant(Rational),
}

impl FSpec {
    pub fn value(&self, a: usize, b: usize) -> Rational {
        match self {
            FSpec::Table(t) => t.get(a, b),
            FSpec::Kappa(k) => k * rat((a + b + 2) as i64, 1),
            FSpec::Constant(c) => c.clone(),
        }
    }

    pub fn asymmetry(&self) -> Option<(usize, usize)> {
        match self {
            FSpec::Table(t) => t.asymmetry(),
            _ => None,
        }
    }
}

/// Kind, deformation function and deforming 1-form of a bracket on forms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeformationSpec {
    kind: DeformationKind,
    f: FSpec,
    phi: OneForm,
}

impl DeformationSpec {
    /// Deformation of the zero bracket; `F` must be symmetric.
    pub fn trivial(f: FSpec, phi: OneForm) -> Result<Self, BracketError> {
        if let Some((a, b)) = f.asymmetry() {
            return Err(BracketError::AsymmetricF { a, b });
        }
        Ok(Self::trivial_unchecked(f, phi))
    }

    /// Accepts an asymmetric `F`, for exhibiting the failure of super symmetry.
    pub fn trivial_unchecked(f: FSpec, phi: OneForm) -> Self {
        DeformationSpec {
            kind: DeformationKind::Trivial,
            f,
            phi,
        }
    }

    pub fn standard(phi: OneForm) -> Self {
        DeformationSpec {
            kind: DeformationKind::Standard,
            f: FSpec::Kappa(rat(1, 2)),
            phi,
        }
    }

    pub fn naive_dt(phi: OneForm) -> Self {
        DeformationSpec {
            kind: DeformationKind::NaiveDt,
            f: FSpec::Constant(rat(1, 1)),
            phi,
        }
    }

    pub fn general(f: FSpec, phi: OneForm) -> Self {
        DeformationSpec {
            kind: DeformationKind::General,
            f,
            phi,
        }
    }

    /// The standard bracket `(-1)^a d(α∧β)` with no deformation.
    pub fn undeformed(n: usize) -> Self {
        Self::standard(OneForm::zero(n))
    }

    pub fn kind(&self) -> DeformationKind {
        self.kind
    }

    pub fn f(&self) -> &FSpec {
        &self.f
    }

    pub fn phi(&self) -> &OneForm {
        &self.phi
    }
}

/// Reasons a bracket was built but is not guaranteed to be a Lie superbracket.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BracketWarning {
    /// `dφ ≠ 0` while the bracket has a `d` term.
    NonClosedPhi,
    /// `F(a,b) ≠ F(b,a)` for the recorded pair.
    AsymmetricF(usize, usize),
}

/// A deformed bracket on the forms `Λ g*` of a fixed Lie algebra.
#[derive(Debug, Clone)]
pub struct DeformedBracket {
    alg: Arc<LieAlgebra>,
    spec: DeformationSpec,
    phi_form: GradedElement,
}

impl DeformedBracket {
    pub fn new(alg: Arc<LieAlgebra>, spec: DeformationSpec) -> Result<Self, BracketError> {
        alg.check_one_form(spec.phi())?;
        let phi_form = spec.phi().to_form();
        Ok(DeformedBracket {
            alg,
            spec,
            phi_form,
        })
    }

    pub fn algebra(&self) -> &Arc<LieAlgebra> {
        &self.alg
    }

    pub fn spec(&self) -> &DeformationSpec {
        &self.spec
    }

    pub fn warnings(&self) -> Vec<BracketWarning> {
        let mut w = Vec::new();
        if self.spec.kind.has_d_term() && !self.alg.is_closed(self.spec.phi()) {
            w.push(BracketWarning::NonClosedPhi);
        }
        if let Some((a, b)) = self.spec.f.asymmetry() {
            w.push(BracketWarning::AsymmetricF(a, b));
        }
        w
    }

    /// `F(a,b)` as used by this bracket.
    pub fn f_value(&self, a: usize, b: usize) -> Rational {
        self.spec.f.value(a, b)
    }

    /// Bracket of two homogeneous forms.
    pub fn bracket(
        &self,
        alpha: &GradedElement,
        beta: &GradedElement,
    ) -> Result<GradedElement, BracketError> {
        let (Some(a), Some(b)) = (alpha.require_homogeneous()?, beta.require_homogeneous()?) else {
            return Ok(GradedElement::zero_form());
        };
        let ab = wedge(alpha, beta)?;
        let mut out = GradedElement::zero_form();
        if self.spec.kind.has_d_term() {
            out = exterior_derivative(&self.alg, &ab)?.scale(&sign_poly(a as i64));
        }
        let f = self.f_value(a, b);
        if !f.is_zero() && !self.phi_form.is_zero() {
            let tf = Poly::monomial(f, 1);
            let corr = wedge_all(&[alpha, &self.phi_form, beta]).scale(&tf);
            out = &out + &corr;
        }
        Ok(out)
    }

    /// Bilinear extension to arbitrary (inhomogeneous) forms.
    pub fn bracket_any(
        &self,
        alpha: &GradedElement,
        beta: &GradedElement,
    ) -> Result<GradedElement, BracketError> {
        let mut out = GradedElement::zero_form();
        for (_, a) in alpha.components() {
            for (_, b) in beta.components() {
                out = &out + &self.bracket(&a, &b)?;
            }
        }
        Ok(out)
    }
}

fn check_kind(spec: &DeformationSpec, expected: DeformationKind) -> Result<(), BracketError> {
    if spec.kind != expected {
        return Err(BracketError::WrongKind {
            expected,
            got: spec.kind,
        });
    }
    Ok(())
}

/// `F(a,b) · t · α ∧ φ ∧ β`.
pub fn trivial_deformed(
    alg: &Arc<LieAlgebra>,
    alpha: &GradedElement,
    beta: &GradedElement,
    spec: &DeformationSpec,
) -> Result<GradedElement, BracketError> {
    check_kind(spec, DeformationKind::Trivial)?;
    DeformedBracket::new(Arc::clone(alg), spec.clone())?.bracket(alpha, beta)
}

/// `(-1)^a d(α∧β) + (a+b+2)/2 · t · α ∧ φ ∧ β`. A non-closed `φ` is
/// accepted; see [`DeformedBracket::warnings`].
pub fn standard_deformed(
    alg: &Arc<LieAlgebra>,
    alpha: &GradedElement,
    beta: &GradedElement,
    spec: &DeformationSpec,
) -> Result<GradedElement, BracketError> {
    check_kind(spec, DeformationKind::Standard)?;
    DeformedBracket::new(Arc::clone(alg), spec.clone())?.bracket(alpha, beta)
}
