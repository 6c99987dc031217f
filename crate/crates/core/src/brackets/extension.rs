use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Zero};

use super::{BracketError, DeformedBracket, Generator, SuperBracket};
use crate::gradedalgebra::{
    form_superdegree, lie_derivative, wedge_all, GradedElement, LinComb, Monomial, VectorField,
};
use crate::liecore::{LieAlgebra, OneForm};
use crate::linalg::{nullspace, rref};
use crate::scalarfield::{Poly, Rational};

/// A subspace of `g` with a canonical (reduced echelon) basis, together
/// with whether it was found closed under the bracket.
#[derive(Clone, PartialEq, Eq)]
pub struct Subalgebra {
    n: usize,
    basis: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
    closed: bool,
}

impl Subalgebra {
    /// Span of `vectors` in an `n`-dimensional algebra; closure is checked.
    pub fn span(alg: &LieAlgebra, vectors: Vec<Vec<Rational>>) -> Self {
        let n = alg.dim();
        let mut rows = vectors;
        let pivots = rref(&mut rows).expect("Q is a field");
        rows.truncate(pivots.len());
        let mut sub = Subalgebra {
            n,
            basis: rows,
            pivots,
            closed: false,
        };
        sub.closed = sub.basis.iter().all(|x| {
            sub.basis
                .iter()
                .all(|y| sub.coordinates(&alg.bracket(x, y)).is_some())
        });
        sub
    }

    pub fn full(alg: &LieAlgebra) -> Self {
        let n = alg.dim();
        Self::span(alg, (0..n).map(|k| VectorField::basis(n, k).coeffs().to_vec()).collect())
    }

    pub fn trivial(alg: &LieAlgebra) -> Self {
        Self::span(alg, Vec::new())
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    /// Coordinates of `x` in the basis, or `None` if `x` is outside the span.
    pub fn coordinates(&self, x: &[Rational]) -> Option<Vec<Rational>> {
        let coords: Vec<Rational> = self.pivots.iter().map(|&p| x[p].clone()).collect();
        let mut rebuilt = vec![Rational::zero(); self.n];
        for (c, b) in coords.iter().zip(&self.basis) {
            for (r, bi) in rebuilt.iter_mut().zip(b) {
                *r += c * bi;
            }
        }
        (rebuilt.as_slice() == x).then_some(coords)
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        self.coordinates(x).is_some()
    }

    pub fn contains_subspace(&self, other: &Subalgebra) -> bool {
        other.basis.iter().all(|b| self.contains(b))
    }
}

impl fmt::Debug for Subalgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .basis
            .iter()
            .map(|r| format!("({})", r.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ")))
            .collect();
        write!(f, "span{{{}}} closed={}", rows.join(", "), self.closed)
    }
}

/// Matrix whose column `i` holds the coefficients of `L_{y_i} φ`.
fn lie_derivative_system(alg: &LieAlgebra, phi: &OneForm) -> Vec<Vec<Rational>> {
    let n = alg.dim();
    let phi_form = phi.to_form();
    let mut rows = vec![vec![Rational::zero(); n]; n];
    for (i, x) in (0..n).map(|i| VectorField::basis(n, i)).enumerate() {
        let l = lie_derivative(alg, &x, &phi_form).expect("form");
        for (m, c) in l.terms() {
            rows[m.indices()[0]][i] = c.coeff(0);
        }
    }
    rows
}

/// `g0' = {X : L_X φ = 0}`, with closure under the bracket checked.
pub fn solve_g0_prime(alg: &LieAlgebra, phi: &OneForm) -> Subalgebra {
    let rows = lie_derivative_system(alg, phi);
    Subalgebra::span(alg, nullspace(&rows, alg.dim()))
}

/// `g0'' = {X ∈ g0' : φ(X) = 0}`.
pub fn solve_g0_doubleprime(alg: &LieAlgebra, phi: &OneForm) -> Subalgebra {
    let mut rows = lie_derivative_system(alg, phi);
    rows.push(phi.coeffs().to_vec());
    Subalgebra::span(alg, nullspace(&rows, alg.dim()))
}

/// Element of `h ⊕ g0`: a form or a vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SuperElement {
    Form(GradedElement),
    Vector(VectorField),
}

impl SuperElement {
    /// `-a-1` for a homogeneous `a`-form, `0` for a vector; `None` for a
    /// zero or inhomogeneous form.
    pub fn superdegree(&self) -> Option<i64> {
        match self {
            SuperElement::Form(f) => f.homogeneous_degree().map(form_superdegree),
            SuperElement::Vector(_) => Some(0),
        }
    }
}

/// `[α,β]` deformed, `[X,Y]` the Lie bracket, `[X,β] = L_X β = -[β,X]`.
pub fn extension_bracket(
    bracket: &DeformedBracket,
    u: &SuperElement,
    v: &SuperElement,
) -> Result<SuperElement, BracketError> {
    let alg = bracket.algebra();
    Ok(match (u, v) {
        (SuperElement::Form(a), SuperElement::Form(b)) => {
            SuperElement::Form(bracket.bracket_any(a, b)?)
        }
        (SuperElement::Vector(x), SuperElement::Vector(y)) => {
            SuperElement::Vector(VectorField::new(alg.bracket(x.coeffs(), y.coeffs())))
        }
        (SuperElement::Vector(x), SuperElement::Form(b)) => {
            SuperElement::Form(lie_derivative(alg, x, b)?)
        }
        (SuperElement::Form(a), SuperElement::Vector(x)) => {
            SuperElement::Form(-&lie_derivative(alg, x, a)?)
        }
    })
}

/// `[X,[α,β]] - [[X,α],β] - [α,[X,β]]` for a vector and two forms.
pub fn mixed_jacobi_defect(
    bracket: &DeformedBracket,
    x: &VectorField,
    alpha: &GradedElement,
    beta: &GradedElement,
) -> Result<GradedElement, BracketError> {
    let alg = bracket.algebra();
    let lhs = lie_derivative(alg, x, &bracket.bracket(alpha, beta)?)?;
    let a = bracket.bracket(&lie_derivative(alg, x, alpha)?, beta)?;
    let b = bracket.bracket(alpha, &lie_derivative(alg, x, beta)?)?;
    Ok(&(&lhs - &a) - &b)
}

/// Closed form of [`mixed_jacobi_defect`]: `t F(a,b) α ∧ L_X φ ∧ β`.
pub fn mixed_jacobi_expected(
    bracket: &DeformedBracket,
    x: &VectorField,
    alpha: &GradedElement,
    beta: &GradedElement,
) -> Result<GradedElement, BracketError> {
    let (Some(a), Some(b)) = (alpha.require_homogeneous()?, beta.require_homogeneous()?) else {
        return Ok(GradedElement::zero_form());
    };
    let alg = bracket.algebra();
    let lphi = lie_derivative(alg, x, &bracket.spec().phi().to_form())?;
    let f = bracket.f_value(a, b);
    Ok(wedge_all(&[alpha, &lphi, beta]).scale(&Poly::monomial(f, 1)))
}

fn form_to_comb(e: &GradedElement) -> LinComb<Generator> {
    e.terms()
        .iter()
        .map(|(m, c)| (Generator::Form(m.clone()), c.clone()))
        .collect()
}

/// The Lie superalgebra `h ⊕ g0'` on generators: all basis monomials of
/// `Λ g*` plus a basis of a subalgebra of `g` acting by Lie derivative.
/// With the zero subalgebra this is `h` alone.
///
/// All generator brackets are tabulated at construction.
#[derive(Clone)]
pub struct DeformedSuperalgebra {
    bracket: DeformedBracket,
    vectors: Subalgebra,
    gens: Vec<Generator>,
    index: BTreeMap<Generator, usize>,
    table: HashMap<(usize, usize), LinComb<Generator>>,
}

impl DeformedSuperalgebra {
    pub fn forms_only(bracket: DeformedBracket) -> Self {
        let sub = Subalgebra::trivial(bracket.algebra());
        Self::build(bracket, sub)
    }

    /// Extension by a subalgebra; it must be closed under the bracket. The
    /// super Jacobi identity additionally needs `L_X φ = 0` on it, which the
    /// axiom checker verifies rather than this constructor.
    pub fn extended(bracket: DeformedBracket, vectors: Subalgebra) -> Result<Self, BracketError> {
        if !vectors.is_closed() {
            return Err(BracketError::NotASubalgebra);
        }
        if vectors.ambient_dim() != bracket.algebra().dim() {
            return Err(BracketError::DimensionMismatch);
        }
        Ok(Self::build(bracket, vectors))
    }

    pub fn with_g0_prime(bracket: DeformedBracket) -> Self {
        let sub = solve_g0_prime(bracket.algebra(), bracket.spec().phi());
        Self::extended(bracket, sub).expect("g0' is a subalgebra")
    }

    fn build(bracket: DeformedBracket, vectors: Subalgebra) -> Self {
        let n = bracket.algebra().dim();
        let mut gens: Vec<Generator> = (0..vectors.dim()).map(Generator::Vector).collect();
        gens.extend(Monomial::all(n).into_iter().map(Generator::Form));
        gens.sort();
        let index = gens.iter().cloned().enumerate().map(|(i, g)| (g, i)).collect();
        let mut out = DeformedSuperalgebra {
            bracket,
            vectors,
            gens,
            index,
            table: HashMap::new(),
        };
        let mut table = HashMap::new();
        for (i, a) in out.gens.iter().enumerate() {
            for (j, b) in out.gens.iter().enumerate() {
                let v = out.compute(a, b);
                if !v.is_zero() {
                    table.insert((i, j), v);
                }
            }
        }
        out.table = table;
        out
    }

    fn vector(&self, i: usize) -> VectorField {
        VectorField::new(self.vectors.basis()[i].clone())
    }

    fn compute(&self, a: &Generator, b: &Generator) -> LinComb<Generator> {
        let alg = self.bracket.algebra();
        let form = |m: &Monomial| GradedElement::form_term(m.clone(), Poly::one());
        match (a, b) {
            (Generator::Form(p), Generator::Form(q)) => {
                form_to_comb(&self.bracket.bracket(&form(p), &form(q)).expect("homogeneous"))
            }
            (Generator::Vector(i), Generator::Vector(j)) => {
                let br = alg.bracket(self.vectors.basis()[*i].as_slice(), &self.vectors.basis()[*j]);
                let coords = self.vectors.coordinates(&br).expect("closed subalgebra");
                coords
                    .into_iter()
                    .enumerate()
                    .map(|(k, c)| (Generator::Vector(k), Poly::constant(c)))
                    .collect()
            }
            (Generator::Vector(i), Generator::Form(q)) => {
                form_to_comb(&lie_derivative(alg, &self.vector(*i), &form(q)).expect("form"))
            }
            (Generator::Form(p), Generator::Vector(j)) => {
                form_to_comb(&-&lie_derivative(alg, &self.vector(*j), &form(p)).expect("form"))
            }
        }
    }

    pub fn deformed_bracket(&self) -> &DeformedBracket {
        &self.bracket
    }

    pub fn vectors(&self) -> &Subalgebra {
        &self.vectors
    }

    /// Renders a generator using the algebra's basis names; vector
    /// generators of a proper subalgebra show their coordinates.
    pub fn render_generator(&self, g: &Generator) -> String {
        let alg = self.bracket.algebra();
        match g {
            Generator::Form(m) if m.degree() == 0 => "1".into(),
            Generator::Form(m) => m.render(alg.dual_names()),
            Generator::Vector(i) => {
                let b = &self.vectors.basis()[*i];
                let nonzero: Vec<(usize, &Rational)> =
                    b.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
                if let [(k, c)] = nonzero.as_slice() {
                    if c.is_one() {
                        return alg.names()[*k].clone();
                    }
                }
                let parts: Vec<String> = nonzero
                    .iter()
                    .map(|(k, c)| format!("{c}*{}", alg.names()[*k]))
                    .collect();
                format!("({})", parts.join(" + "))
            }
        }
    }
}

impl SuperBracket for DeformedSuperalgebra {
    type Gen = Generator;

    fn id(&self) -> String {
        let kind = format!("{:?}", self.bracket.spec().kind()).to_lowercase();
        if self.vectors.dim() == 0 {
            format!("forms/{kind}")
        } else {
            format!("forms+vectors/{kind}")
        }
    }

    fn generators(&self) -> &[Generator] {
        &self.gens
    }

    fn degree(&self, g: &Generator) -> i64 {
        g.superdegree()
    }

    fn bracket(&self, a: &Generator, b: &Generator) -> LinComb<Generator> {
        let (Some(&i), Some(&j)) = (self.index.get(a), self.index.get(b)) else {
            panic!("generator outside the algebra: {a:?}, {b:?}");
        };
        self.table.get(&(i, j)).cloned().unwrap_or_default()
    }

    fn render(&self, g: &Generator) -> String {
        self.render_generator(g)
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::brackets::DeformationSpec;
    use crate::liecore::catalog;
    use crate::scalarfield::rat;

    fn standard(phi_index: usize) -> DeformedBracket {
        let alg = Arc::new(catalog::affine_line());
        DeformedBracket::new(alg, DeformationSpec::standard(OneForm::basis(2, phi_index))).unwrap()
    }

    #[test]
    fn g0_prime_examples() {
        let alg = catalog::affine_line();
        assert_eq!(solve_g0_prime(&alg, &OneForm::basis(2, 1)).dim(), 2);
        assert_eq!(solve_g0_prime(&alg, &OneForm::zero(2)).dim(), 2);
        // L_X ζ1 = x2 ζ1 - x1 ζ2 vanishes only for X = 0
        let s = solve_g0_prime(&alg, &OneForm::basis(2, 0));
        assert_eq!(s.dim(), 0);
        assert!(s.is_closed());
    }

    #[test]
    fn g0_doubleprime_examples() {
        let alg = catalog::affine_line();
        let phi = OneForm::basis(2, 1);
        let s = solve_g0_doubleprime(&alg, &phi);
        assert_eq!(s.basis(), &[vec![rat(1, 1), rat(0, 1)]]);
        assert!(solve_g0_prime(&alg, &phi).contains_subspace(&s));
        assert_eq!(solve_g0_doubleprime(&alg, &OneForm::zero(2)).dim(), 2);
    }

    #[test]
    fn extension_bracket_examples() {
        let br = standard(1);
        let v = GradedElement::form_term(Monomial::pair(0, 1), Poly::one());
        let y1 = SuperElement::Vector(VectorField::basis(2, 0));
        let y2 = SuperElement::Vector(VectorField::basis(2, 1));
        let vf = SuperElement::Form(v.clone());
        assert_eq!(extension_bracket(&br, &y2, &vf).unwrap(), vf);
        assert_eq!(extension_bracket(&br, &y1, &y2).unwrap(), y1);
        assert_eq!(
            extension_bracket(&br, &vf, &y2).unwrap(),
            SuperElement::Form(-&v)
        );
    }

    #[test]
    fn superalgebra_generators() {
        let sa = DeformedSuperalgebra::with_g0_prime(standard(1));
        let names: Vec<String> = sa.generators().iter().map(|g| sa.render(g)).collect();
        assert_eq!(names, ["y1", "y2", "z1^z2", "z1", "z2", "1"]);
        assert_eq!(
            sa.bracket(&Generator::Vector(0), &Generator::Vector(1)),
            LinComb::term(Generator::Vector(0), Poly::one())
        );
    }

    #[test]
    fn non_subalgebra_rejected() {
        let alg = catalog::heisenberg();
        // span{y1, y2} is not closed: [y1,y2] = y3
        let s = Subalgebra::span(
            &alg,
            vec![
                VectorField::basis(3, 0).coeffs().to_vec(),
                VectorField::basis(3, 1).coeffs().to_vec(),
            ],
        );
        assert!(!s.is_closed());
        let br = DeformedBracket::new(Arc::new(alg), DeformationSpec::standard(OneForm::zero(3))).unwrap();
        assert!(matches!(
            DeformedSuperalgebra::extended(br, s),
            Err(BracketError::NotASubalgebra)
        ));
    }
}
