use std::cmp::Ordering;

use num_traits::{Signed, Zero};

use crate::linalg::{rank, Matrix, ZeroDivisor};
use crate::scalarfield::{poly_gcd, rational_roots, Poly, Rational, ResidueRing};

/// Above this many `r×r` minors the special locus is read off the last
/// fraction-free pivot instead of the gcd of all minors.
pub const MINOR_LIMIT: usize = 4096;

/// Rank over `Q(t)` by fraction-free (Bareiss) elimination with column
/// skipping, together with the last pivot, an `r×r` minor of the matrix
/// (`1` for rank zero).
pub fn bareiss(m: &Matrix<Poly>) -> (usize, Poly) {
    let mut rows = m.to_rows();
    let (nr, nc) = (m.rows(), m.cols());
    let mut prev = Poly::from_int(1);
    let mut r = 0;
    for c in 0..nc {
        if r == nr {
            break;
        }
        let Some(p) = (r..nr).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        for i in r + 1..nr {
            for k in c + 1..nc {
                let num = &(&rows[r][c] * &rows[i][k]) - &(&rows[i][c] * &rows[r][k]);
                rows[i][k] = num.div_exact(&prev).expect("fraction-free step is exact");
            }
            rows[i][c] = Poly::zero();
        }
        prev = rows[r][c].clone();
        r += 1;
    }
    (r, prev)
}

pub fn generic_rank(m: &Matrix<Poly>) -> usize {
    bareiss(m).0
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Monic gcd of all `r×r` minors, `r` the generic rank; falls back to the
/// last pivot (a multiple of that gcd) when there are too many minors.
/// Returns `None` for the zero matrix.
pub fn minor_gcd(m: &Matrix<Poly>) -> Option<Poly> {
    let (r, pivot) = bareiss(m);
    if r == 0 {
        return None;
    }
    let count = binomial(m.rows(), r).saturating_mul(binomial(m.cols(), r));
    if count > MINOR_LIMIT {
        return Some(pivot.monic());
    }
    let row_sets = subsets(m.rows(), r);
    let col_sets = subsets(m.cols(), r);
    let mut g = Poly::zero();
    for rs in &row_sets {
        for cs in &col_sets {
            let sub = Matrix::from_fn(r, r, |i, j| m.get(rs[i], cs[j]).clone());
            let (sr, det) = bareiss(&sub);
            if sr == r {
                g = poly_gcd(&g, &det);
                if g.is_constant() {
                    return Some(g);
                }
            }
        }
    }
    Some(g)
}

pub fn rank_at(m: &Matrix<Poly>, t0: &Rational) -> usize {
    rank(&m.map(|p| p.eval(t0))).expect("Q is a field")
}

fn rank_mod(m: &Matrix<Poly>, ring: &ResidueRing) -> Result<usize, ZeroDivisor> {
    rank(&m.map(|p| ring.reduce(p)))
}

/// Splits a squarefree `p` into monic linear factors `t - r` for its
/// rational roots and at most one residual factor without rational roots.
pub fn split_rational(p: &Poly) -> Vec<Poly> {
    if p.is_constant() {
        return Vec::new();
    }
    let roots = rational_roots(p).expect("nonzero");
    let mut rest = p.squarefree();
    let mut out = Vec::new();
    for r in roots {
        let lin = Poly::new(vec![-r, num_traits::One::one()]);
        rest = rest.div_exact(&lin).expect("root divides");
        out.push(lin);
    }
    if !rest.is_constant() {
        out.push(rest.monic());
    }
    out
}

/// Refines monic polynomials into pairwise coprime monic squarefree
/// factors with the same roots.
pub fn coprime_base(polys: Vec<Poly>) -> Vec<Poly> {
    let mut base: Vec<Poly> = Vec::new();
    for p in polys {
        let mut pending = vec![p.squarefree()];
        while let Some(mut q) = pending.pop() {
            if q.is_constant() {
                continue;
            }
            let mut i = 0;
            while i < base.len() {
                let g = poly_gcd(&q, &base[i]);
                if !g.is_constant() {
                    let b = base.remove(i);
                    pending.push(b.div_exact(&g).expect("gcd divides").monic());
                    pending.push(q.div_exact(&g).expect("gcd divides").monic());
                    q = g;
                    i = 0;
                    continue;
                }
                i += 1;
            }
            base.push(q.monic());
        }
    }
    sort_factors(&mut base);
    base
}

/// Orders factors by degree, then by coefficient size.
pub fn factor_cmp(a: &Poly, b: &Poly) -> Ordering {
    a.degree()
        .cmp(&b.degree())
        .then_with(|| a.coeffs().iter().map(Signed::abs).cmp(b.coeffs().iter().map(Signed::abs)))
        .then_with(|| a.coeffs().cmp(b.coeffs()))
}

pub fn sort_factors(v: &mut [Poly]) {
    v.sort_by(factor_cmp);
}

/// Ranks of every matrix at the roots of `p`, splitting `p` whenever
/// elimination over `Q[t]/(p)` meets a zero divisor. Each returned factor is
/// rank-homogeneous: all its roots give the same ranks. Linear factors are
/// evaluated directly.
pub fn ranks_on_factor(mats: &[&Matrix<Poly>], p: &Poly) -> Vec<(Poly, Vec<usize>)> {
    let mut work = vec![p.monic()];
    let mut done = Vec::new();
    'next: while let Some(q) = work.pop() {
        if q.degree() == Some(1) {
            let root = -q.coeff(0);
            done.push((q, mats.iter().map(|m| rank_at(m, &root)).collect()));
            continue;
        }
        let ring = ResidueRing::new(&q);
        let mut ranks = Vec::with_capacity(mats.len());
        for m in mats {
            match rank_mod(m, &ring) {
                Ok(r) => ranks.push(r),
                Err(ZeroDivisor(h)) => {
                    let h = h.monic();
                    work.push(q.div_exact(&h).expect("factor divides").monic());
                    work.push(h);
                    continue 'next;
                }
            }
        }
        done.push((q, ranks));
    }
    done.sort_by(|a, b| factor_cmp(&a.0, &b.0));
    done
}

/// Rank-homogeneous factors of `t` where the rank of `m` drops below
/// its generic rank.
pub fn matrix_locus(m: &Matrix<Poly>) -> Vec<Poly> {
    let Some(g) = minor_gcd(m) else {
        return Vec::new();
    };
    let generic = generic_rank(m);
    let mut out = Vec::new();
    for f in split_rational(&g) {
        for (q, ranks) in ranks_on_factor(&[m], &f) {
            if ranks[0] < generic {
                out.push(q);
            }
        }
    }
    sort_factors(&mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalarfield::rat;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    #[test]
    fn bareiss_rank_and_pivot() {
        let m = Matrix::from_rows(vec![vec![Poly::new(vec![rat(1, 1), rat(3, 2)]), Poly::zero()]], 2);
        assert_eq!(bareiss(&m), (1, Poly::new(vec![rat(1, 1), rat(3, 2)])));
        let z: Matrix<Poly> = Matrix::from_fn(2, 3, |_, _| Poly::zero());
        assert_eq!(generic_rank(&z), 0);
        // [[t, 1], [1, t]]: det t^2 - 1
        let m = Matrix::from_rows(vec![vec![p(&[0, 1]), p(&[1])], vec![p(&[1]), p(&[0, 1])]], 2);
        let (r, piv) = bareiss(&m);
        assert_eq!(r, 2);
        assert_eq!(piv.monic(), p(&[-1, 0, 1]));
        assert_eq!(matrix_locus(&m), vec![p(&[-1, 1]), p(&[1, 1])]);
    }

    #[test]
    fn irrational_locus_via_residues() {
        // det = t^2 - 2 has no rational root
        let m = Matrix::from_rows(vec![vec![p(&[0, 1]), p(&[2])], vec![p(&[1]), p(&[0, 1])]], 2);
        let loc = matrix_locus(&m);
        assert_eq!(loc, vec![p(&[-2, 0, 1])]);
        let ranks = ranks_on_factor(&[&m], &loc[0]);
        assert_eq!(ranks, vec![(p(&[-2, 0, 1]), vec![1])]);
    }

    #[test]
    fn splitting_on_zero_divisor() {
        // diag(t^2-2, t^2-3) over Q[t]/((t^2-2)(t^2-3)) splits in two
        let f = &p(&[-2, 0, 1]) * &p(&[-3, 0, 1]);
        let m = Matrix::from_rows(vec![vec![p(&[-2, 0, 1]), p(&[0])], vec![p(&[0]), p(&[-3, 0, 1])]], 2);
        let parts = ranks_on_factor(&[&m], &f);
        assert_eq!(parts.len(), 2);
        assert!(parts.iter().all(|(_, r)| r == &vec![1]));
    }

    #[test]
    fn coprime_refinement() {
        let a = &p(&[0, 1]) * &p(&[-1, 1]);
        let b = &p(&[-1, 1]) * &p(&[-2, 0, 1]);
        assert_eq!(coprime_base(vec![a, b]), vec![p(&[0, 1]), p(&[-1, 1]), p(&[-2, 0, 1])]);
    }
}
