use std::sync::Arc;

use proptest::prelude::*;
use supdeform_core::brackets::{
    DeformationSpec, DeformedBracket, DeformedSuperalgebra, FSpec, FTable, Generator, SuperBracket,
};
use supdeform_core::gradedalgebra::{
    contract, interior, lie_derivative, wedge, GradedElement, Kind, LinComb, Monomial, VectorField,
};
use supdeform_core::liecore::{catalog, LieAlgebra, OneForm};
use supdeform_core::scalarfield::{poly_gcd, rat, Poly, Rational};
use supdeform_core::superchain::{
    boundary, boundary_raw, chain_of, enumerate_basis, max_length, normalize, sbt_es, ChainElement,
    SuperWord,
};

fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| rat(n, d))
}

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(small_rational(), 0..4).prop_map(Poly::new)
}

fn form(n: usize) -> impl Strategy<Value = GradedElement> {
    let monos = Monomial::all(n);
    prop::collection::vec((0..monos.len(), -3i64..=3), 0..4).prop_map(move |terms| {
        let mut e = GradedElement::zero_form();
        for (i, c) in terms {
            e.add_term(monos[i].clone(), Poly::from_int(c));
        }
        e
    })
}

fn vector(n: usize) -> impl Strategy<Value = VectorField> {
    prop::collection::vec(small_rational(), n).prop_map(VectorField::new)
}

fn test_algebra(k: usize) -> (LieAlgebra, Vec<OneForm>) {
    match k {
        0 => (catalog::affine_line(), vec![OneForm::basis(2, 1)]),
        1 => (
            catalog::heisenberg(),
            vec![OneForm::basis(3, 0), OneForm::basis(3, 1), OneForm::new(vec![rat(2, 1), rat(-1, 3), rat(0, 1)])],
        ),
        _ => (
            catalog::abelian(3),
            vec![OneForm::basis(3, 0), OneForm::new(vec![rat(1, 1), rat(1, 2), rat(-3, 1)])],
        ),
    }
}

/// A Lie superalgebra from the test families: closed φ, symmetric `F`.
fn superalgebra(alg_k: usize, phi_k: usize, kind: usize, kappa: Rational, extended: bool) -> DeformedSuperalgebra {
    let (alg, phis) = test_algebra(alg_k);
    let phi = phis[phi_k % phis.len()].clone();
    let spec = match kind {
        0 => DeformationSpec::standard(phi),
        1 => DeformationSpec::general(FSpec::Kappa(kappa), phi),
        2 => {
            let f = FTable::from_fn(6, |a, b| &kappa * rat((a * b + a + b + 1) as i64, 1));
            DeformationSpec::trivial(FSpec::Table(f), phi).unwrap()
        }
        _ => DeformationSpec::undeformed(alg.dim()),
    };
    let br = DeformedBracket::new(Arc::new(alg), spec).unwrap();
    if extended {
        DeformedSuperalgebra::with_g0_prime(br)
    } else {
        DeformedSuperalgebra::forms_only(br)
    }
}

fn random_chain(sa: &DeformedSuperalgebra, m: usize, w: i64, coeffs: &[i64]) -> ChainElement<Generator> {
    let basis = enumerate_basis(sa, m, w);
    let mut c = LinComb::zero();
    for (word, k) in basis.into_iter().zip(coeffs.iter().cycle()) {
        c.add_term(word, Poly::from_ints(&[*k, 1 - *k]));
    }
    c
}

fn super_sign(sa: &DeformedSuperalgebra, word: &[Generator], perm: &[usize]) -> i32 {
    // sign of moving word into the order word[perm[0]], word[perm[1]], …
    let mut s = 1;
    for x in 0..perm.len() {
        for y in x + 1..perm.len() {
            if perm[x] > perm[y] && !(sa.is_odd(&word[perm[x]]) && sa.is_odd(&word[perm[y]])) {
                s = -s;
            }
        }
    }
    s
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn polynomial_ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        let g = poly_gcd(&a, &b);
        if !g.is_zero() {
            prop_assert!(g.divides(&a) && g.divides(&b));
        }
        if !b.is_zero() {
            let (q, r) = a.div_rem(&b).unwrap();
            prop_assert_eq!(&(&q * &b) + &r, a.clone());
            prop_assert!(r.is_zero() || r.degree() < b.degree());
        }
    }

    #[test]
    fn evaluation_is_a_ring_map(a in poly(), b in poly(), t0 in small_rational()) {
        prop_assert_eq!((&a * &b).eval(&t0), a.eval(&t0) * b.eval(&t0));
        prop_assert_eq!((&a + &b).eval(&t0), a.eval(&t0) + b.eval(&t0));
    }

    #[test]
    fn wedge_is_associative_and_graded_commutative(x in form(3), y in form(3), z in form(3)) {
        let l = wedge(&wedge(&x, &y).unwrap(), &z).unwrap();
        let r = wedge(&x, &wedge(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(l, r);
        for (a, xa) in x.components() {
            for (b, yb) in y.components() {
                let sign = if (a * b) % 2 == 0 { 1 } else { -1 };
                prop_assert_eq!(
                    wedge(&xa, &yb).unwrap(),
                    wedge(&yb, &xa).unwrap().scale(&Poly::from_int(sign))
                );
            }
        }
    }

    #[test]
    fn contraction_squares_to_zero(x in form(3), phi in prop::collection::vec(small_rational(), 3), v in vector(3)) {
        let mv = GradedElement::from_terms(Kind::MultiVector, x.terms().clone());
        let phi = OneForm::new(phi);
        prop_assert!(contract(&contract(&mv, &phi).unwrap(), &phi).unwrap().is_zero());
        prop_assert!(interior(&v, &interior(&v, &x).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn lie_derivative_is_a_representation(k in 0usize..3, x in vector(3), y in vector(3), a in form(3)) {
        let alg = [catalog::heisenberg(), catalog::book_algebra(), catalog::affine_line_plus_center()][k].clone();
        let xy = VectorField::new(alg.bracket(x.coeffs(), y.coeffs()));
        let lhs = lie_derivative(&alg, &xy, &a).unwrap();
        let lx_ly = lie_derivative(&alg, &x, &lie_derivative(&alg, &y, &a).unwrap()).unwrap();
        let ly_lx = lie_derivative(&alg, &y, &lie_derivative(&alg, &x, &a).unwrap()).unwrap();
        prop_assert_eq!(lhs, &lx_ly - &ly_lx);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn boundary_squares_to_zero_and_keeps_weight(
        alg_k in 0usize..3,
        phi_k in 0usize..3,
        kind in 0usize..4,
        kappa in small_rational(),
        extended in any::<bool>(),
        w in -5i64..=-1,
        m_seed in 0usize..16,
        coeffs in prop::collection::vec(-3i64..=3, 1..6),
    ) {
        let sa = superalgebra(alg_k, phi_k, kind, kappa, extended);
        let top = max_length(&sa, w).unwrap();
        let m = 1 + m_seed % top;
        let c = random_chain(&sa, m, w, &coeffs);
        let d = boundary(&sa, &c);
        for (word, _) in &d {
            prop_assert_eq!(word.weight(&sa), w);
            prop_assert_eq!(word.len() + 1, m);
        }
        prop_assert!(boundary(&sa, &d).is_zero());
    }
}

fn word_strategy() -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0usize..6, 1..=3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn sbt_es_forms_agree(a in word_strategy(), b in word_strategy(), ca in -3i64..=3, cb in 1i64..=3) {
        let sa = superalgebra(0, 0, 0, rat(1, 2), true);
        let gens = sa.generators().to_vec();
        let wa: Vec<Generator> = a.iter().map(|&i| gens[i].clone()).collect();
        let wb: Vec<Generator> = b.iter().map(|&i| gens[i].clone()).collect();
        let x = chain_of(&sa, wa).scale(&Poly::from_ints(&[ca, 1]));
        let y = chain_of(&sa, wb).scale(&Poly::from_int(cb));
        prop_assert!(sbt_es(&sa, &x, &y).is_ok());
    }

    #[test]
    fn normalize_is_permutation_invariant(idx in prop::collection::vec(0usize..8, 1..=5), perm_seed in any::<u64>()) {
        let sa = superalgebra(1, 0, 0, rat(1, 2), true);
        let gens = sa.generators().to_vec();
        let word: Vec<Generator> = idx.iter().map(|&i| gens[i % gens.len()].clone()).collect();
        let mut perm: Vec<usize> = (0..word.len()).collect();
        let mut s = perm_seed;
        for i in (1..perm.len()).rev() {
            perm.swap(i, (s % (i as u64 + 1)) as usize);
            s /= i as u64 + 1;
        }
        let permuted: Vec<Generator> = perm.iter().map(|&p| word[p].clone()).collect();
        match (normalize(&sa, word.clone()), normalize(&sa, permuted)) {
            (None, None) => {}
            (Some((s1, w1)), Some((s2, w2))) => {
                prop_assert_eq!(w1, w2);
                prop_assert_eq!(s2, s1 * super_sign(&sa, &word, &perm));
            }
            _ => prop_assert!(false, "zero for one ordering only"),
        }
    }

    #[test]
    fn all_even_and_all_odd_formulas(pick in prop::collection::vec(0usize..16, 1..=4), kind in 0usize..3) {
        let sa = superalgebra(1, 0, kind, rat(3, 2), true);
        let gens = sa.generators().to_vec();
        for want_odd in [false, true] {
            let pool: Vec<Generator> = gens.iter().filter(|g| sa.is_odd(g) == want_odd).cloned().collect();
            let word: Vec<Generator> = pick.iter().map(|&i| pool[i % pool.len()].clone()).collect();
            let mut expected: ChainElement<Generator> = LinComb::zero();
            for i in 0..word.len() {
                for j in i + 1..word.len() {
                    let rest: Vec<Generator> = word
                        .iter()
                        .enumerate()
                        .filter(|&(k, _)| k != i && k != j)
                        .map(|(_, g)| g.clone())
                        .collect();
                    // 1-based i, j: -(-1)^{i+j} for all even, +1 for all odd
                    let sign = if want_odd { 1 } else if (i + j) % 2 == 0 { -1 } else { 1 };
                    for (g, c) in &sa.bracket(&word[i], &word[j]) {
                        let mut raw = vec![g.clone()];
                        raw.extend(rest.iter().cloned());
                        expected.add_scaled(&chain_of(&sa, raw), &c.scale(&rat(sign, 1)));
                    }
                }
            }
            prop_assert_eq!(boundary_raw(&sa, &word), expected);
        }
    }
}

#[test]
fn canonical_words_have_no_repeated_even_generator() {
    let sa = superalgebra(1, 0, 0, rat(1, 2), true);
    for m in 1..=5 {
        for w in enumerate_basis(&sa, m, -3) {
            let g = w.generators();
            assert!(g.windows(2).all(|p| p[0] < p[1] || (p[0] == p[1] && sa.is_odd(&p[0]))));
            assert_eq!(w.weight(&sa), -3);
            let _: &SuperWord<Generator> = &w;
        }
    }
}
