//! Brute-force checks of the super symmetry and super Jacobi identities on
//! every pair and triple of generators of a [`SuperBracket`], the closed-form
//! expansion of the Jacobi defect for deformed form brackets, and exact
//! solution of the linear conditions on the deformation function `F`.

mod expansion;
mod ffamily;
mod search;

use std::fmt;

use rayon::prelude::*;

pub use expansion::{jacobi_expansion, jacobi_sum_forms, relative_jacobi_defect};
pub use ffamily::{solve_f_closed, solve_f_nonclosed, ConstraintSet, FError, FSolutionSpace};
pub use search::{search_naive_dt_counterexample, NaiveDtWitness};

use crate::brackets::SuperBracket;
use crate::gradedalgebra::{sign_poly, LinComb};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axiom {
    /// `[u,v] + (-1)^{u'v'} [v,u] = 0`.
    SuperSymmetry,
    /// Cyclic sum `(-1)^{u'w'}[[u,v],w] + (-1)^{v'u'}[[v,w],u] + (-1)^{w'v'}[[w,u],v] = 0`.
    SuperJacobi,
    /// `[u,[v,w]] = [[u,v],w] + (-1)^{u'v'} [v,[u,w]]`.
    Leibniz,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axiom::SuperSymmetry => "super-symmetry",
            Axiom::SuperJacobi => "super-jacobi",
            Axiom::Leibniz => "leibniz",
        })
    }
}

/// Generators on which an axiom fails, with the nonzero defect.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness<G: Ord> {
    pub elements: Vec<G>,
    pub defect: LinComb<G>,
}

#[derive(Debug, Clone)]
pub struct AxiomReport<G: Ord> {
    pub bracket_id: String,
    pub axiom: Axiom,
    /// Number of generator pairs or triples examined.
    pub checked: usize,
    /// Every failure, ordered lexicographically by generator position.
    pub failures: Vec<Witness<G>>,
}

impl<G: Ord> AxiomReport<G> {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// The lowest failing tuple.
    pub fn witness(&self) -> Option<&Witness<G>> {
        self.failures.first()
    }
}

fn parity_sign<B: SuperBracket>(b: &B, x: &B::Gen, y: &B::Gen) -> crate::scalarfield::Poly {
    sign_poly(b.degree(x) * b.degree(y))
}

fn single<B: SuperBracket>(g: &B::Gen) -> LinComb<B::Gen> {
    LinComb::term(g.clone(), num_traits::One::one())
}

pub fn symmetry_defect<B: SuperBracket>(b: &B, x: &B::Gen, y: &B::Gen) -> LinComb<B::Gen> {
    let mut out = b.bracket(x, y);
    out.add_scaled(&b.bracket(y, x), &parity_sign(b, x, y));
    out
}

/// `[[x,y],z]` for generators.
fn nested<B: SuperBracket>(b: &B, x: &B::Gen, y: &B::Gen, z: &B::Gen) -> LinComb<B::Gen> {
    b.bracket_comb(&b.bracket(x, y), &single::<B>(z))
}

pub fn jacobi_defect<B: SuperBracket>(
    b: &B,
    x: &B::Gen,
    y: &B::Gen,
    z: &B::Gen,
) -> LinComb<B::Gen> {
    let mut out = LinComb::zero();
    out.add_scaled(&nested(b, x, y, z), &parity_sign(b, x, z));
    out.add_scaled(&nested(b, y, z, x), &parity_sign(b, y, x));
    out.add_scaled(&nested(b, z, x, y), &parity_sign(b, z, y));
    out
}

pub fn leibniz_defect<B: SuperBracket>(
    b: &B,
    x: &B::Gen,
    y: &B::Gen,
    z: &B::Gen,
) -> LinComb<B::Gen> {
    let sx = single::<B>(x);
    let sy = single::<B>(y);
    let lhs = b.bracket_comb(&sx, &b.bracket(y, z));
    let mut out = &lhs - &nested(b, x, y, z);
    out.add_scaled(&b.bracket_comb(&sy, &b.bracket(x, z)), &-&parity_sign(b, x, y));
    out
}

/// Recomputes the defect of `axiom` on the given generators.
pub fn defect<B: SuperBracket>(b: &B, axiom: Axiom, elements: &[B::Gen]) -> LinComb<B::Gen> {
    match (axiom, elements) {
        (Axiom::SuperSymmetry, [x, y]) => symmetry_defect(b, x, y),
        (Axiom::SuperJacobi, [x, y, z]) => jacobi_defect(b, x, y, z),
        (Axiom::Leibniz, [x, y, z]) => leibniz_defect(b, x, y, z),
        _ => panic!("{axiom} takes {} elements", if axiom == Axiom::SuperSymmetry { 2 } else { 3 }),
    }
}

/// Checks super symmetry on all pairs `(g_i, g_j)` with `i ≤ j`; the
/// defect of `(g_j, g_i)` is the same up to sign.
pub fn check_supersymmetry<B: SuperBracket>(b: &B) -> AxiomReport<B::Gen> {
    let gens = b.generators();
    let n = gens.len();
    let failures: Vec<Witness<B::Gen>> = (0..n)
        .into_par_iter()
        .flat_map_iter(|i| {
            (i..n).filter_map(move |j| {
                let d = symmetry_defect(b, &gens[i], &gens[j]);
                (!d.is_zero()).then(|| Witness {
                    elements: vec![gens[i].clone(), gens[j].clone()],
                    defect: d,
                })
            })
        })
        .collect();
    AxiomReport {
        bracket_id: b.id(),
        axiom: Axiom::SuperSymmetry,
        checked: n * (n + 1) / 2,
        failures,
    }
}

fn check_triples<B: SuperBracket>(
    b: &B,
    axiom: Axiom,
    f: impl Fn(&B::Gen, &B::Gen, &B::Gen) -> LinComb<B::Gen> + Sync,
) -> AxiomReport<B::Gen> {
    let gens = b.generators();
    let n = gens.len();
    let f = &f;
    let failures: Vec<Witness<B::Gen>> = (0..n * n)
        .into_par_iter()
        .flat_map_iter(|ij| {
            let (i, j) = (ij / n, ij % n);
            (0..n).filter_map(move |k| {
                let d = f(&gens[i], &gens[j], &gens[k]);
                (!d.is_zero()).then(|| Witness {
                    elements: vec![gens[i].clone(), gens[j].clone(), gens[k].clone()],
                    defect: d,
                })
            })
        })
        .collect();
    AxiomReport {
        bracket_id: b.id(),
        axiom,
        checked: n * n * n,
        failures,
    }
}

/// Checks the cyclic super Jacobi sum on all ordered generator triples.
pub fn check_superjacobi<B: SuperBracket>(b: &B) -> AxiomReport<B::Gen> {
    check_triples(b, Axiom::SuperJacobi, |x, y, z| jacobi_defect(b, x, y, z))
}

/// Checks the Leibniz form of the Jacobi identity on all ordered triples.
pub fn check_leibniz<B: SuperBracket>(b: &B) -> AxiomReport<B::Gen> {
    check_triples(b, Axiom::Leibniz, |x, y, z| leibniz_defect(b, x, y, z))
}
