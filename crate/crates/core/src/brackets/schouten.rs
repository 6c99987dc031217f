use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_traits::One;

use super::{BracketError, SuperBracket};
use crate::gradedalgebra::{
    contract, multivector_superdegree, schouten, sign_poly, wedge, GradedElement, Kind, LinComb,
    Monomial,
};
use crate::liecore::{LieAlgebra, OneForm};
use crate::scalarfield::{rat, Poly};

/// `[P,Q]^φ = [P,Q] + (-1)^p (q-1) ι_φP ∧ Q + (p-1) P ∧ ι_φQ` on
/// homogeneous multivectors of degrees `p`, `q`.
pub fn deformed_schouten(
    alg: &LieAlgebra,
    p: &GradedElement,
    q: &GradedElement,
    phi: &OneForm,
) -> Result<GradedElement, BracketError> {
    for e in [p, q] {
        if e.kind() != Kind::MultiVector {
            return Err(BracketError::WrongElementKind {
                expected: Kind::MultiVector,
                got: e.kind(),
            });
        }
    }
    alg.check_one_form(phi)?;
    let (Some(dp), Some(dq)) = (p.require_homogeneous()?, q.require_homogeneous()?) else {
        return Ok(GradedElement::zero_multivector());
    };
    let mut out = schouten(alg, p, q)?;
    if phi.is_zero() {
        return Ok(out);
    }
    let cq = rat(dq as i64 - 1, 1);
    let cp = rat(dp as i64 - 1, 1);
    let left = wedge(&contract(p, phi)?, q)?.scale(&(&sign_poly(dp as i64) * &Poly::constant(cq)));
    let right = wedge(p, &contract(q, phi)?)?.scale(&Poly::constant(cp));
    out = &(&out + &left) + &right;
    Ok(out)
}

/// Multivectors of degree at least one under the deformed Schouten bracket;
/// a `p`-vector has super degree `p-1`.
#[derive(Clone)]
pub struct DeformedSchoutenAlgebra {
    alg: Arc<LieAlgebra>,
    phi: OneForm,
    gens: Vec<Monomial>,
    index: BTreeMap<Monomial, usize>,
    table: HashMap<(usize, usize), LinComb<Monomial>>,
}

impl DeformedSchoutenAlgebra {
    pub fn new(alg: Arc<LieAlgebra>, phi: OneForm) -> Result<Self, BracketError> {
        alg.check_one_form(&phi)?;
        let gens: Vec<Monomial> = Monomial::all(alg.dim())
            .into_iter()
            .filter(|m| m.degree() >= 1)
            .collect();
        let index = gens.iter().cloned().enumerate().map(|(i, g)| (g, i)).collect();
        let mut table = HashMap::new();
        for (i, a) in gens.iter().enumerate() {
            for (j, b) in gens.iter().enumerate() {
                let pa = GradedElement::multivector_term(a.clone(), Poly::one());
                let pb = GradedElement::multivector_term(b.clone(), Poly::one());
                let r = deformed_schouten(&alg, &pa, &pb, &phi)?;
                if !r.is_zero() {
                    table.insert((i, j), r.terms().clone());
                }
            }
        }
        Ok(DeformedSchoutenAlgebra {
            alg,
            phi,
            gens,
            index,
            table,
        })
    }

    pub fn algebra(&self) -> &Arc<LieAlgebra> {
        &self.alg
    }

    pub fn phi(&self) -> &OneForm {
        &self.phi
    }
}

impl SuperBracket for DeformedSchoutenAlgebra {
    type Gen = Monomial;

    fn id(&self) -> String {
        "schouten/deformed".into()
    }

    fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    fn degree(&self, g: &Monomial) -> i64 {
        multivector_superdegree(g.degree())
    }

    fn bracket(&self, a: &Monomial, b: &Monomial) -> LinComb<Monomial> {
        let (Some(&i), Some(&j)) = (self.index.get(a), self.index.get(b)) else {
            panic!("generator outside the algebra: {a:?}, {b:?}");
        };
        self.table.get(&(i, j)).cloned().unwrap_or_default()
    }

    fn render(&self, g: &Monomial) -> String {
        g.render(self.alg.names())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liecore::catalog;

    fn mv(m: Monomial) -> GradedElement {
        GradedElement::multivector_term(m, Poly::one())
    }

    #[test]
    fn undeformed_is_schouten() {
        let alg = catalog::affine_line();
        let u = mv(Monomial::pair(0, 1));
        let y2 = GradedElement::y(1);
        let r = deformed_schouten(&alg, &y2, &u, &OneForm::zero(2)).unwrap();
        assert_eq!(r, -&u);
    }

    #[test]
    fn deformation_terms() {
        let alg = catalog::abelian(2);
        let phi = OneForm::basis(2, 0);
        // abelian: only the contraction terms survive
        // [y1, y1^y2]^φ = (-1)^1 (2-1) ι_φ y1 ∧ y1^y2 + 0 = -y1^y2
        let r = deformed_schouten(&alg, &GradedElement::y(0), &mv(Monomial::pair(0, 1)), &phi).unwrap();
        assert_eq!(r, -&mv(Monomial::pair(0, 1)));
        // [y1^y2, y2]^φ = 0 + (2-1) y1^y2 ∧ ι_φ y2 = 0
        let r = deformed_schouten(&alg, &mv(Monomial::pair(0, 1)), &GradedElement::y(1), &phi).unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn rejects_forms() {
        let alg = catalog::affine_line();
        assert!(matches!(
            deformed_schouten(&alg, &GradedElement::zeta(0), &GradedElement::y(0), &OneForm::zero(2)),
            Err(BracketError::WrongElementKind { .. })
        ));
    }
}

