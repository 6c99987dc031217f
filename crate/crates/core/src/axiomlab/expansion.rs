use std::sync::Arc;

use crate::brackets::{BracketError, DeformationKind, DeformationSpec, DeformedBracket};
use crate::gradedalgebra::{exterior_derivative, form_superdegree, sign_poly, wedge_all, GradedElement};
use crate::scalarfield::{Poly, Rational};

/// Cyclic super Jacobi sum of three homogeneous forms,
/// `(-1)^{a'c'}[[α,β],γ] + (-1)^{b'a'}[[β,γ],α] + (-1)^{c'b'}[[γ,α],β]`.
pub fn jacobi_sum_forms(
    br: &DeformedBracket,
    alpha: &GradedElement,
    beta: &GradedElement,
    gamma: &GradedElement,
) -> Result<GradedElement, BracketError> {
    let (Some(a), Some(b), Some(c)) = (
        alpha.require_homogeneous()?,
        beta.require_homogeneous()?,
        gamma.require_homogeneous()?,
    ) else {
        return Ok(GradedElement::zero_form());
    };
    let (a1, b1, c1) = (form_superdegree(a), form_superdegree(b), form_superdegree(c));
    let t1 = br.bracket(&br.bracket(alpha, beta)?, gamma)?.scale(&sign_poly(a1 * c1));
    let t2 = br.bracket(&br.bracket(beta, gamma)?, alpha)?.scale(&sign_poly(b1 * a1));
    let t3 = br.bracket(&br.bracket(gamma, alpha)?, beta)?.scale(&sign_poly(c1 * b1));
    Ok(&(&t1 + &t2) + &t3)
}

/// Jacobi sum of `br` minus that of the undeformed bracket `(-1)^a d(α∧β)`.
pub fn relative_jacobi_defect(
    br: &DeformedBracket,
    alpha: &GradedElement,
    beta: &GradedElement,
    gamma: &GradedElement,
) -> Result<GradedElement, BracketError> {
    let alg = Arc::clone(br.algebra());
    let n = alg.dim();
    let plain = DeformedBracket::new(alg, DeformationSpec::undeformed(n))?;
    Ok(&jacobi_sum_forms(br, alpha, beta, gamma)? - &jacobi_sum_forms(&plain, alpha, beta, gamma)?)
}

/// Closed form of [`relative_jacobi_defect`] for brackets with a `d` term:
///
/// ```text
///   (F(1+b+c,a) - S + F(1+c+a,b)) (-1)^{ac+a+c}   α ∧ tφ ∧ β ∧ dγ
/// - (F(1+a+b,c) + F(1+b+c,a) - S) (-1)^{ac+a+c}   α ∧ dβ ∧ tφ ∧ γ
/// + S (-1)^{ac+a+b+c}                             α ∧ d(tφ) ∧ β ∧ γ
/// - (F(1+a+b,c) - S + F(1+c+a,b)) (-1)^{ac+c}     dα ∧ β ∧ tφ ∧ γ
/// ```
///
/// with `S = F(a,b) + F(b,c) + F(c,a)`.
pub fn jacobi_expansion(
    br: &DeformedBracket,
    alpha: &GradedElement,
    beta: &GradedElement,
    gamma: &GradedElement,
) -> Result<GradedElement, BracketError> {
    let kind = br.spec().kind();
    if !kind.has_d_term() {
        return Err(BracketError::WrongKind {
            expected: DeformationKind::General,
            got: kind,
        });
    }
    let (Some(a), Some(b), Some(c)) = (
        alpha.require_homogeneous()?,
        beta.require_homogeneous()?,
        gamma.require_homogeneous()?,
    ) else {
        return Ok(GradedElement::zero_form());
    };
    let alg = br.algebra();
    let f = |x: usize, y: usize| br.f_value(x, y);
    let s: Rational = f(a, b) + f(b, c) + f(c, a);
    let (ai, bi, ci) = (a as i64, b as i64, c as i64);
    let coef = |r: Rational, sign: i64| Poly::constant(r) * sign_poly(sign);

    let tphi = br.spec().phi().to_form().scale(&Poly::t());
    let d_alpha = exterior_derivative(alg, alpha)?;
    let d_beta = exterior_derivative(alg, beta)?;
    let d_gamma = exterior_derivative(alg, gamma)?;
    let d_tphi = exterior_derivative(alg, &tphi)?;

    let k1 = f(1 + b + c, a) - &s + f(1 + c + a, b);
    let k2 = -(f(1 + a + b, c) + f(1 + b + c, a) - &s);
    let k3 = s.clone();
    let k4 = -(f(1 + a + b, c) - &s + f(1 + c + a, b));

    let terms = [
        wedge_all(&[alpha, &tphi, beta, &d_gamma]).scale(&coef(k1, ai * ci + ai + ci)),
        wedge_all(&[alpha, &d_beta, &tphi, gamma]).scale(&coef(k2, ai * ci + ai + ci)),
        wedge_all(&[alpha, &d_tphi, beta, gamma]).scale(&coef(k3, ai * ci + ai + bi + ci)),
        wedge_all(&[&d_alpha, beta, &tphi, gamma]).scale(&coef(k4, ai * ci + ci)),
    ];
    Ok(terms.iter().fold(GradedElement::zero_form(), |acc, t| &acc + t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brackets::FSpec;
    use crate::gradedalgebra::Monomial;
    use crate::liecore::{catalog, LieAlgebra, OneForm};
    use crate::scalarfield::rat;

    fn basis_forms(n: usize) -> Vec<GradedElement> {
        Monomial::all(n)
            .into_iter()
            .map(|m| GradedElement::form_term(m, Poly::from_int(1)))
            .collect()
    }

    fn assert_expansion(alg: LieAlgebra, spec: DeformationSpec) {
        let n = alg.dim();
        let br = DeformedBracket::new(Arc::new(alg), spec).unwrap();
        let forms = basis_forms(n);
        for x in &forms {
            for y in &forms {
                for z in &forms {
                    assert_eq!(
                        relative_jacobi_defect(&br, x, y, z).unwrap(),
                        jacobi_expansion(&br, x, y, z).unwrap(),
                        "{x} {y} {z}"
                    );
                }
            }
        }
    }

    #[test]
    fn expansion_matches_on_affine_line() {
        let phi = OneForm::basis(2, 1);
        assert_expansion(catalog::affine_line(), DeformationSpec::standard(phi.clone()));
        assert_expansion(catalog::affine_line(), DeformationSpec::naive_dt(phi.clone()));
        assert_expansion(catalog::affine_line(), DeformationSpec::naive_dt(OneForm::basis(2, 0)));
    }

    #[test]
    fn expansion_matches_with_non_closed_phi_and_odd_f() {
        let table = FSpec::Table(crate::brackets::FTable::from_fn(6, |a, b| {
            rat((a * a + 3 * b + 1) as i64, (b + 2) as i64)
        }));
        assert_expansion(catalog::heisenberg(), DeformationSpec::general(table.clone(), OneForm::basis(3, 2)));
        let phi = OneForm::new(vec![rat(1, 1), rat(-2, 3), rat(5, 1)]);
        assert_expansion(catalog::book_algebra(), DeformationSpec::general(table, phi));
    }

    #[test]
    fn units_defect_is_three_t_dphi() {
        let br = DeformedBracket::new(
            Arc::new(catalog::heisenberg()),
            DeformationSpec::standard(OneForm::basis(3, 2)),
        )
        .unwrap();
        let one = GradedElement::one_form_unit();
        let d = relative_jacobi_defect(&br, &one, &one, &one).unwrap();
        assert_eq!(d, GradedElement::form_term(Monomial::pair(0, 1), Poly::from_ints(&[0, -3])));
    }

    #[test]
    fn trivial_kind_rejected() {
        let br = DeformedBracket::new(
            Arc::new(catalog::affine_line()),
            DeformationSpec::trivial(FSpec::Constant(rat(1, 1)), OneForm::basis(2, 1)).unwrap(),
        )
        .unwrap();
        let one = GradedElement::one_form_unit();
        assert!(jacobi_expansion(&br, &one, &one, &one).is_err());
    }
}
