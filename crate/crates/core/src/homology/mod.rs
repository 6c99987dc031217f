//! Boundary matrices over `Q[t]`, their ranks for generic and special `t`,
//! and piecewise Betti numbers of one weight of the chain complex.
//!
//! The generic rank is the rank over `Q(t)`. It can only drop at roots of
//! the gcd of the maximal nonvanishing minors; those roots are grouped into
//! factors of `Q[t]` on which every boundary map has constant rank, so the
//! report is exact for every `t`, rational or not.

mod rank;

use rayon::prelude::*;
use thiserror::Error;

pub use rank::{
    bareiss, coprime_base, generic_rank, matrix_locus, minor_gcd, rank_at, ranks_on_factor,
    split_rational, MINOR_LIMIT,
};

use crate::brackets::SuperBracket;
use crate::linalg::Matrix;
use crate::scalarfield::{Poly, Rational};
use crate::superchain::{boundaries, enumerate_basis, index_of, max_length, ChainError, SuperWord};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomologyError {
    #[error(transparent)]
    Chain(#[from] ChainError),
    #[error("boundary of boundary is nonzero from C_{m} to C_{}", .m - 2)]
    BoundarySquare { m: usize },
    #[error("boundary image leaves weight {weight} at length {m}")]
    WeightNotPreserved { m: usize, weight: i64 },
    #[error("rank at a special point exceeds the generic rank at length {m}")]
    RankAboveGeneric { m: usize },
    #[error("Euler characteristic of chains and of homology disagree")]
    EulerMismatch,
}

/// Matrix of `∂ : C_m^w → C_{m-1}^w`; entry `(r, c)` is the coefficient of
/// row word `r` in the boundary of column word `c`.
#[derive(Debug, Clone)]
pub struct BoundaryMatrix<G> {
    pub m: usize,
    pub weight: i64,
    pub rows: Vec<SuperWord<G>>,
    pub cols: Vec<SuperWord<G>>,
    pub entries: Matrix<Poly>,
}

impl<G: Ord + Clone + std::hash::Hash + Send + Sync> BoundaryMatrix<G> {
    pub fn build<B: SuperBracket<Gen = G>>(b: &B, m: usize, w: i64) -> Result<Self, HomologyError> {
        let cols = enumerate_basis(b, m, w);
        let rows = if m == 0 { Vec::new() } else { enumerate_basis(b, m - 1, w) };
        let idx = index_of(&rows);
        let images = boundaries(b, &cols);
        let mut entries = Matrix::from_fn(rows.len(), cols.len(), |_, _| Poly::default());
        for (c, img) in images.iter().enumerate() {
            for (word, coeff) in img {
                let r = *idx
                    .get(word)
                    .ok_or(HomologyError::WeightNotPreserved { m, weight: w })?;
                entries.set(r, c, coeff.clone());
            }
        }
        Ok(BoundaryMatrix {
            m,
            weight: w,
            rows,
            cols,
            entries,
        })
    }

    pub fn generic_rank(&self) -> usize {
        generic_rank(&self.entries)
    }
}

/// `∂_m` as a matrix.
pub fn boundary_matrix<B: SuperBracket>(
    b: &B,
    m: usize,
    w: i64,
) -> Result<BoundaryMatrix<B::Gen>, HomologyError> {
    BoundaryMatrix::build(b, m, w)
}

/// Per-length data at one value (or one class of values) of `t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Level {
    pub m: usize,
    pub dim: usize,
    /// Rank of `∂_m` leaving `C_m`.
    pub rank: usize,
    pub kernel: usize,
    pub betti: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Specialization {
    pub levels: Vec<Level>,
}

impl Specialization {
    fn assemble(lengths: &[usize], dims: &[usize], ranks: &[usize]) -> Self {
        // ranks has one more entry than dims: the map out of the top+1 space
        let levels = lengths
            .iter()
            .enumerate()
            .map(|(i, &m)| {
                let kernel = dims[i] - ranks[i];
                Level {
                    m,
                    dim: dims[i],
                    rank: ranks[i],
                    kernel,
                    betti: kernel - ranks[i + 1],
                }
            })
            .collect();
        Specialization { levels }
    }

    pub fn betti(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.betti).collect()
    }

    pub fn kernels(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.kernel).collect()
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.rank).collect()
    }
}

/// A factor of the special locus, its rational root when linear, and the
/// data valid at each of its roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialPoint {
    pub factor: Poly,
    pub root: Option<Rational>,
    pub data: Specialization,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiReport {
    pub bracket_id: String,
    pub weight: i64,
    pub generic: Specialization,
    pub special: Vec<SpecialPoint>,
}

impl BettiReport {
    pub fn lengths(&self) -> Vec<usize> {
        self.generic.levels.iter().map(|l| l.m).collect()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.generic.levels.iter().map(|l| l.dim).collect()
    }

    pub fn locus(&self) -> Vec<&Poly> {
        self.special.iter().map(|s| &s.factor).collect()
    }

    /// Data at a rational value of `t`.
    pub fn at(&self, t0: &Rational) -> &Specialization {
        self.special
            .iter()
            .find(|s| s.factor.eval(t0) == Rational::default())
            .map_or(&self.generic, |s| &s.data)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.generic
            .levels
            .iter()
            .map(|l| if l.m % 2 == 0 { l.dim as i64 } else { -(l.dim as i64) })
            .sum()
    }
}

struct Complex {
    lengths: Vec<usize>,
    dims: Vec<usize>,
    /// `∂_m` for each length and one beyond the top.
    mats: Vec<Matrix<Poly>>,
}

fn build_complex<B: SuperBracket>(b: &B, w: i64) -> Result<Complex, HomologyError> {
    let top = max_length(b, w)?;
    let bottom = usize::from(w != 0);
    let lengths: Vec<usize> = (bottom..=top).collect();
    let mats: Vec<BoundaryMatrix<B::Gen>> = (bottom..=top + 1)
        .into_par_iter()
        .map(|m| BoundaryMatrix::build(b, m, w))
        .collect::<Result<_, _>>()?;
    for pair in mats.windows(2) {
        if pair[0].entries.cols() > 0 && !pair[0].entries.mul(&pair[1].entries).is_zero() {
            return Err(HomologyError::BoundarySquare { m: pair[1].m });
        }
    }
    Ok(Complex {
        dims: mats[..mats.len() - 1].iter().map(|bm| bm.cols.len()).collect(),
        lengths,
        mats: mats.into_iter().map(|bm| bm.entries).collect(),
    })
}

fn locus_of(mats: &[Matrix<Poly>]) -> Vec<Poly> {
    let per_matrix: Vec<Vec<Poly>> = mats.par_iter().map(matrix_locus).collect();
    coprime_base(per_matrix.into_iter().flatten().collect())
}

/// Monic factors of `Q[t]` whose roots are exactly the `t` where some
/// boundary map of weight `w` loses rank.
pub fn special_locus<B: SuperBracket>(b: &B, w: i64) -> Result<Vec<Poly>, HomologyError> {
    let cx = build_complex(b, w)?;
    let generic: Vec<usize> = cx.mats.iter().map(generic_rank).collect();
    let refs: Vec<&Matrix<Poly>> = cx.mats.iter().collect();
    let mut out = Vec::new();
    for f in locus_of(&cx.mats) {
        for (q, ranks) in ranks_on_factor(&refs, &f) {
            if ranks.iter().zip(&generic).any(|(r, g)| r < g) {
                out.push(q);
            }
        }
    }
    Ok(out)
}

/// Betti numbers of weight `w` for generic `t` and on each factor of the
/// special locus, with rank-nullity, `∂∂ = 0` and the Euler characteristic
/// checked.
pub fn betti_piecewise<B: SuperBracket>(b: &B, w: i64) -> Result<BettiReport, HomologyError> {
    let cx = build_complex(b, w)?;
    let generic_ranks: Vec<usize> = cx.mats.par_iter().map(generic_rank).collect();
    let generic = Specialization::assemble(&cx.lengths, &cx.dims, &generic_ranks);
    let refs: Vec<&Matrix<Poly>> = cx.mats.iter().collect();
    let mut special = Vec::new();
    for f in locus_of(&cx.mats) {
        for (q, ranks) in ranks_on_factor(&refs, &f) {
            if let Some(i) = ranks.iter().zip(&generic_ranks).position(|(r, g)| r > g) {
                return Err(HomologyError::RankAboveGeneric { m: cx.lengths[0] + i });
            }
            if ranks == generic_ranks {
                continue;
            }
            let root = (q.degree() == Some(1)).then(|| -q.coeff(0));
            special.push(SpecialPoint {
                data: Specialization::assemble(&cx.lengths, &cx.dims, &ranks),
                factor: q,
                root,
            });
        }
    }
    let report = BettiReport {
        bracket_id: b.id(),
        weight: w,
        generic,
        special,
    };
    let chi = report.euler_characteristic();
    for data in std::iter::once(&report.generic).chain(report.special.iter().map(|s| &s.data)) {
        let h: i64 = data
            .levels
            .iter()
            .map(|l| if l.m % 2 == 0 { l.betti as i64 } else { -(l.betti as i64) })
            .sum();
        if h != chi {
            return Err(HomologyError::EulerMismatch);
        }
    }
    Ok(report)
}
