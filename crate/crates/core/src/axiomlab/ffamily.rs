use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::brackets::FTable;
use crate::linalg::nullspace;
use crate::scalarfield::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FError {
    #[error("grid bound {0} imposes no condition; need at least 2")]
    GridTooSmall(usize),
}

/// Which family of linear conditions on `F` is imposed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConstraintSet {
    /// `dφ = 0`: three cyclic conditions
    /// `F(1+b+c,a) + F(1+c+a,b) - F(a,b) - F(b,c) - F(c,a) = 0`.
    Closed,
    /// `dφ ≠ 0`: `F(1+b+c,a) + F(1+c+a,b) = 0`, `F(1+a+b,c) + F(1+b+c,a) = 0`,
    /// `F(a,b) + F(b,c) + F(c,a) = 0`, `F(1+c+a,b) + F(1+a+b,c) = 0`.
    NonClosed,
}

impl fmt::Display for ConstraintSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ConstraintSet::Closed => "closed",
            ConstraintSet::NonClosed => "nonclosed",
        })
    }
}

/// Symmetric unknowns `F(a,b)`, `a ≤ b`, `a+b ≤ N`, in order.
fn unknowns(grid: usize) -> Vec<(usize, usize)> {
    let mut v = Vec::new();
    for s in 0..=grid {
        for a in 0..=s / 2 {
            v.push((a, s - a));
        }
    }
    v
}

fn unknown_index(vars: &[(usize, usize)], a: usize, b: usize) -> usize {
    let key = (a.min(b), a.max(b));
    vars.iter().position(|&v| v == key).expect("pair inside grid")
}

/// Each condition is a list of `(±1, (x, y))` meaning `Σ ± F(x,y) = 0`.
fn conditions(grid: usize, set: ConstraintSet) -> Vec<Vec<(i64, (usize, usize))>> {
    let mut out = Vec::new();
    // every argument pair has sum ≤ 1+a+b+c
    for total in 0..grid {
        for a in 0..=total {
            for b in 0..=total - a {
                let c = total - a - b;
                let cyc = [(a, b), (b, c), (c, a)];
                let (pa, pb, pc) = ((1 + b + c, a), (1 + c + a, b), (1 + a + b, c));
                let with_cyc = |x: (usize, usize), y: (usize, usize)| {
                    let mut row = vec![(1, x), (1, y)];
                    row.extend(cyc.iter().map(|&p| (-1, p)));
                    row
                };
                match set {
                    ConstraintSet::Closed => {
                        out.push(with_cyc(pa, pb));
                        out.push(with_cyc(pc, pa));
                        out.push(with_cyc(pb, pc));
                    }
                    ConstraintSet::NonClosed => {
                        out.push(vec![(1, pa), (1, pb)]);
                        out.push(vec![(1, pc), (1, pa)]);
                        out.push(cyc.iter().map(|&p| (1, p)).collect());
                        out.push(vec![(1, pb), (1, pc)]);
                    }
                }
            }
        }
    }
    out
}

/// Symmetric solutions of one family of conditions on the grid
/// `{(a,b) : a,b ≥ 0, a+b ≤ N}`. A condition is imposed only when all of
/// its argument pairs lie in the grid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FSolutionSpace {
    grid: usize,
    constraints: ConstraintSet,
    basis: Vec<FTable>,
}

impl FSolutionSpace {
    fn solve(grid: usize, set: ConstraintSet) -> Result<Self, FError> {
        if grid < 2 {
            return Err(FError::GridTooSmall(grid));
        }
        let vars = unknowns(grid);
        let rows: Vec<Vec<Rational>> = conditions(grid, set)
            .into_iter()
            .map(|cond| {
                let mut row = vec![Rational::zero(); vars.len()];
                for (s, (x, y)) in cond {
                    row[unknown_index(&vars, x, y)] += Rational::from_integer(s.into());
                }
                row
            })
            .collect();
        let basis = nullspace(&rows, vars.len())
            .into_iter()
            .map(|v| {
                let ints = primitive(&v);
                let mut t = FTable::new();
                for (&(a, b), c) in vars.iter().zip(ints) {
                    let r = Rational::from_integer(c);
                    t.set(a, b, r.clone());
                    t.set(b, a, r);
                }
                t
            })
            .collect();
        Ok(FSolutionSpace {
            grid,
            constraints: set,
            basis,
        })
    }

    pub fn grid(&self) -> usize {
        self.grid
    }

    pub fn constraints(&self) -> ConstraintSet {
        self.constraints
    }

    /// Basis tables, each scaled to coprime integers with a positive first
    /// nonzero entry.
    pub fn basis(&self) -> &[FTable] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Whether `f`, restricted to the grid, is symmetric and meets every
    /// imposed condition.
    pub fn contains(&self, f: impl Fn(usize, usize) -> Rational) -> bool {
        let symmetric = unknowns(self.grid)
            .into_iter()
            .all(|(a, b)| f(a, b) == f(b, a));
        symmetric
            && conditions(self.grid, self.constraints).into_iter().all(|cond| {
                cond.into_iter()
                    .map(|(s, (x, y))| Rational::from_integer(s.into()) * f(x, y))
                    .sum::<Rational>()
                    .is_zero()
            })
    }
}

fn primitive(v: &[Rational]) -> Vec<BigInt> {
    let lcm = v.iter().fold(BigInt::one(), |l, r| l.lcm(r.denom()));
    let ints: Vec<BigInt> = v.iter().map(|r| (r * &lcm).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    let lead_negative = ints.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
    ints.into_iter()
        .map(|x| {
            let y = if g.is_zero() { x } else { x / &g };
            if lead_negative {
                -y
            } else {
                y
            }
        })
        .collect()
}

/// Symmetric `F` satisfying the Jacobi conditions for a closed `φ`.
pub fn solve_f_closed(grid: usize) -> Result<FSolutionSpace, FError> {
    FSolutionSpace::solve(grid, ConstraintSet::Closed)
}

/// Symmetric `F` satisfying the Jacobi conditions for a non-closed `φ`.
pub fn solve_f_nonclosed(grid: usize) -> Result<FSolutionSpace, FError> {
    FSolutionSpace::solve(grid, ConstraintSet::NonClosed)
}
