//! Small dense matrices over a field.

use std::fmt::Debug;

/// The field operations the decomposition code needs.
pub trait Field: Copy + Eq + Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(self, other: Self) -> Self;
    fn neg(self) -> Self;
    fn mul(self, other: Self) -> Self;
    /// `None` for zero.
    fn inv(self) -> Option<Self>;

    fn is_zero(self) -> bool {
        self == Self::zero()
    }

    fn sub(self, other: Self) -> Self {
        self.add(other.neg())
    }
}

/// The two-element field.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gf2(pub bool);

impl Field for Gf2 {
    fn zero() -> Self {
        Gf2(false)
    }
    fn one() -> Self {
        Gf2(true)
    }
    fn add(self, other: Self) -> Self {
        Gf2(self.0 ^ other.0)
    }
    fn neg(self) -> Self {
        self
    }
    fn mul(self, other: Self) -> Self {
        Gf2(self.0 & other.0)
    }
    fn inv(self) -> Option<Self> {
        self.0.then_some(self)
    }
}

impl From<u8> for Gf2 {
    fn from(v: u8) -> Self {
        Gf2(v & 1 == 1)
    }
}

/// Dense `rows × cols` matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zeros(size, size);
        for i in 0..size {
            m.set(i, i, F::one());
        }
        m
    }

    pub fn from_rows(rows: usize, cols: usize, entries: Vec<Vec<F>>) -> Option<Self> {
        if entries.len() != rows || entries.iter().any(|r| r.len() != cols) {
            return None;
        }
        Some(Matrix {
            rows,
            cols,
            data: entries.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> F {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[F] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// `self · other`.
    pub fn mul(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, other.rows, "inner dimensions differ");
        let mut out = Matrix::<F>::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let cur = out.get(i, j);
                    out.set(i, j, cur.add(a.mul(other.get(k, j))));
                }
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut rank = 0;
        for col in 0..m.cols {
            let Some(pivot) = (rank..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(rank, pivot);
            let inv = m.get(rank, col).inv().expect("nonzero pivot");
            for r in 0..m.rows {
                if r == rank {
                    continue;
                }
                let factor = m.get(r, col);
                if factor.is_zero() {
                    continue;
                }
                let scale = factor.mul(inv);
                for c in col..m.cols {
                    let v = m.get(r, c).sub(scale.mul(m.get(rank, c)));
                    m.set(r, c, v);
                }
            }
            rank += 1;
            if rank == m.rows {
                break;
            }
        }
        rank
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &Matrix<F>) -> Matrix<F> {
        let mut out = Matrix::zeros(self.rows + other.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c));
            }
        }
        for r in 0..other.rows {
            for c in 0..other.cols {
                out.set(self.rows + r, self.cols + c, other.get(r, c));
            }
        }
        out
    }
}
