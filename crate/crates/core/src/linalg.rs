//! Small exact linear algebra: a scalar abstraction that covers `Q`, `Q(t)`
//! and residue rings `Q[t]/(p)`, Gaussian elimination over it, and exact
//! kernels over `Q`.

use num_traits::{One, Zero};

use crate::scalarfield::{Poly, RatFunc, Rational};

/// A nonzero element that could not be inverted. Over a residue ring
/// `Q[t]/(p)` this carries the proper factor of `p` it shares with the
/// element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroDivisor(pub Poly);

/// Ring operations needed by elimination. For genuine fields `try_inv`
/// succeeds on every nonzero element.
pub trait Scalar: Clone {
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn try_inv(&self) -> Result<Self, ZeroDivisor>;
}

impl Scalar for Rational {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn try_inv(&self) -> Result<Self, ZeroDivisor> {
        Ok(self.recip())
    }
}

impl Scalar for RatFunc {
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn try_inv(&self) -> Result<Self, ZeroDivisor> {
        Ok(self.inv().expect("nonzero rational function"))
    }
}

/// Dense row-major matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone> Matrix<T> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>, cols: usize) -> Self {
        let n = rows.len();
        let data: Vec<T> = rows.into_iter().flatten().collect();
        assert_eq!(data.len(), n * cols, "ragged rows");
        Matrix {
            rows: n,
            cols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn map<U: Clone>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Matrix<T> {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }
}

impl Matrix<Poly> {
    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Poly::is_zero)
    }

    pub fn mul(&self, rhs: &Matrix<Poly>) -> Matrix<Poly> {
        assert_eq!(self.cols, rhs.rows, "shape mismatch");
        Matrix::from_fn(self.rows, rhs.cols, |r, c| {
            (0..self.cols).fold(Poly::zero(), |acc, k| {
                &acc + &(self.get(r, k) * rhs.get(k, c))
            })
        })
    }
}

/// Reduced row echelon form in place; returns pivot columns.
pub fn rref<S: Scalar>(rows: &mut [Vec<S>]) -> Result<Vec<usize>, ZeroDivisor> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].try_inv()?;
        for x in rows[r].iter_mut() {
            *x = x.mul(&inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, pv) in row.iter_mut().zip(&pivot_row) {
                *x = x.sub(&f.mul(pv));
            }
        }
        pivots.push(c);
        r += 1;
    }
    Ok(pivots)
}

/// Rank by elimination; fails only over rings with zero divisors.
pub fn rank<S: Scalar>(m: &Matrix<S>) -> Result<usize, ZeroDivisor> {
    let mut rows = m.to_rows();
    Ok(rref(&mut rows)?.len())
}

/// Basis of `{x : A x = 0}` over `Q`, one vector per free column, each with
/// a 1 in its free coordinate.
pub fn nullspace(rows: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let mut work = rows.to_vec();
    let pivots = rref(&mut work).expect("Q is a field");
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); ncols];
            v[f] = Rational::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -work[r][f].clone();
            }
            v
        })
        .collect()
}
