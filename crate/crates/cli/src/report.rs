//! Serializable reports. Rationals travel as `"p/q"` strings and
//! polynomials in `t` as ascending coefficient lists, so every number
//! survives a JSON round trip exactly.

use serde::{Deserialize, Serialize};
use supdeform_core::axiomlab::{AxiomReport, FSolutionSpace};
use supdeform_core::brackets::SuperBracket;
use supdeform_core::gradedalgebra::LinComb;
use supdeform_core::homology::{BettiReport, BoundaryMatrix, Specialization};
use supdeform_core::scalarfield::{format_rational, rat, Poly, Rational};

pub fn poly_json(p: &Poly) -> Vec<String> {
    p.coeffs().iter().map(format_rational).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub generator: String,
    pub coeff: Vec<String>,
}

pub fn comb_json<B: SuperBracket>(b: &B, c: &LinComb<B::Gen>) -> Vec<TermJson> {
    c.iter()
        .map(|(g, p)| TermJson {
            generator: b.render(g),
            coeff: poly_json(p),
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessJson {
    pub elements: Vec<String>,
    pub defect: Vec<TermJson>,
    pub rendered: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomJson {
    pub axiom: String,
    pub checked: usize,
    pub failed: usize,
    pub passed: bool,
    pub witness: Option<WitnessJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomSuiteJson {
    pub bracket_id: String,
    pub closed_phi: bool,
    pub passed: bool,
    pub axioms: Vec<AxiomJson>,
}

impl AxiomJson {
    pub fn from_report<B: SuperBracket>(b: &B, r: &AxiomReport<B::Gen>) -> Self {
        AxiomJson {
            axiom: r.axiom.to_string(),
            checked: r.checked,
            failed: r.failures.len(),
            passed: r.passed(),
            witness: r.witness().map(|w| WitnessJson {
                elements: w.elements.iter().map(|g| b.render(g)).collect(),
                defect: comb_json(b, &w.defect),
                rendered: b.render_comb(&w.defect),
            }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelJson {
    pub m: usize,
    pub dim: usize,
    pub rank: usize,
    pub kernel: usize,
    pub betti: usize,
}

fn levels_json(s: &Specialization) -> Vec<LevelJson> {
    s.levels
        .iter()
        .map(|l| LevelJson {
            m: l.m,
            dim: l.dim,
            rank: l.rank,
            kernel: l.kernel,
            betti: l.betti,
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecialJson {
    pub factor: Vec<String>,
    pub factor_text: String,
    pub root: Option<String>,
    pub levels: Vec<LevelJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiJson {
    pub bracket_id: String,
    pub weight: i64,
    pub lengths: Vec<usize>,
    pub dims: Vec<usize>,
    pub euler_characteristic: i64,
    pub generic: Vec<LevelJson>,
    pub special: Vec<SpecialJson>,
}

impl From<&BettiReport> for BettiJson {
    fn from(r: &BettiReport) -> Self {
        BettiJson {
            bracket_id: r.bracket_id.clone(),
            weight: r.weight,
            lengths: r.lengths(),
            dims: r.dims(),
            euler_characteristic: r.euler_characteristic(),
            generic: levels_json(&r.generic),
            special: r
                .special
                .iter()
                .map(|s| SpecialJson {
                    factor: poly_json(&s.factor),
                    factor_text: s.factor.to_string(),
                    root: s.root.as_ref().map(format_rational),
                    levels: levels_json(&s.data),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FEntryJson {
    pub a: usize,
    pub b: usize,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FSpaceJson {
    pub constraints: String,
    pub grid: usize,
    pub dim: usize,
    /// Closed-form description of each basis vector when it is affine in `a, b`.
    pub formulas: Vec<Option<String>>,
    pub basis: Vec<Vec<FEntryJson>>,
}

impl From<&FSolutionSpace> for FSpaceJson {
    fn from(s: &FSolutionSpace) -> Self {
        let n = s.grid();
        FSpaceJson {
            constraints: format!("{:?}", s.constraints()).to_lowercase(),
            grid: n,
            dim: s.dim(),
            formulas: s.basis().iter().map(|t| affine_formula(n, |a, b| t.get(a, b))).collect(),
            basis: s
                .basis()
                .iter()
                .map(|t| {
                    (0..=n)
                        .flat_map(|a| (0..=n - a).map(move |b| (a, b)))
                        .map(|(a, b)| FEntryJson {
                            a,
                            b,
                            value: format_rational(&t.get(a, b)),
                        })
                        .collect()
                })
                .collect(),
        }
    }
}

/// `c0 + c1 a + c2 b` fitted on the grid, or `None` if the table is not affine.
fn affine_formula(n: usize, f: impl Fn(usize, usize) -> Rational) -> Option<String> {
    let c0 = f(0, 0);
    let ca = f(1, 0) - &c0;
    let cb = f(0, 1) - &c0;
    let fits = (0..=n).all(|a| {
        (0..=n - a).all(|b| {
            f(a, b) == &c0 + &ca * rat(a as i64, 1) + &cb * rat(b as i64, 1)
        })
    });
    if !fits {
        return None;
    }
    let mut parts = Vec::new();
    for (c, var) in [(&ca, "a"), (&cb, "b")] {
        if *c == rat(1, 1) {
            parts.push(var.to_string());
        } else if *c != rat(0, 1) {
            parts.push(format!("{c}{var}"));
        }
    }
    if c0 != rat(0, 1) || parts.is_empty() {
        parts.push(c0.to_string());
    }
    Some(parts.join("+").replace("+-", "-"))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundaryJson {
    pub m: usize,
    pub rows: Vec<String>,
    pub cols: Vec<String>,
    pub generic_rank: usize,
    /// Row-major entries, each a polynomial in `t`.
    pub entries: Vec<Vec<Vec<String>>>,
}

impl BoundaryJson {
    pub fn from_matrix<B: SuperBracket>(b: &B, bm: &BoundaryMatrix<B::Gen>) -> Self {
        BoundaryJson {
            m: bm.m,
            rows: bm.rows.iter().map(|w| w.render(b)).collect(),
            cols: bm.cols.iter().map(|w| w.render(b)).collect(),
            generic_rank: bm.generic_rank(),
            entries: bm.entries.to_rows().iter().map(|r| r.iter().map(poly_json).collect()).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainJson {
    pub bracket_id: String,
    pub weight: i64,
    pub boundaries: Vec<BoundaryJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidateJson {
    pub dim: usize,
    pub jacobi: bool,
    pub phi: Vec<String>,
    pub phi_closed: bool,
    pub d_phi: String,
    pub deformation: String,
    pub warnings: Vec<String>,
    pub extension: String,
    pub extension_basis: Vec<Vec<String>>,
    pub weights: Vec<i64>,
}
