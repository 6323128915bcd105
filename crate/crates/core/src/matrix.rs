//! Dense matrices over an exact field, with fraction-free (Bareiss-style)
//! elimination for ranks and determinants and Gauss-Jordan reduction with
//! exact field division for kernels.

use std::fmt;

use crate::field::Field;

#[derive(Clone, PartialEq)]
pub struct Matrix<K> {
    rows: usize,
    cols: usize,
    data: Vec<K>,
}

impl<K: Field> Matrix<K> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![K::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = K::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> K) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<K>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |v| v.len());
        assert!(rows.iter().all(|v| v.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[K] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn select_columns(&self, idx: &[usize]) -> Self {
        Self::from_fn(self.rows, idx.len(), |i, j| self[(i, idx[j])].clone())
    }

    pub fn delete_rows(&self, drop: &[usize]) -> Self {
        let keep: Vec<usize> = (0..self.rows).filter(|i| !drop.contains(i)).collect();
        Self::from_fn(keep.len(), self.cols, |i, j| self[(keep[i], j)].clone())
    }

    /// Columns of `self` followed by columns of `other`.
    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows);
        Self::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                other[(i, j - self.cols)].clone()
            }
        })
    }

    /// Rank by fraction-free Bareiss elimination with row pivoting and
    /// column skipping.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let (rank, _) = m.bareiss();
        rank
    }

    /// Determinant of a square matrix, by the same elimination.
    pub fn det(&self) -> K {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        if self.rows == 0 {
            return K::one();
        }
        let mut m = self.clone();
        let (rank, sign) = m.bareiss();
        if rank < self.rows {
            return K::zero();
        }
        let d = m[(self.rows - 1, self.cols - 1)].clone();
        if sign < 0 {
            -d
        } else {
            d
        }
    }

    /// In-place Bareiss elimination; returns (rank, row-swap sign).
    /// After step k the trailing entries are ratios of (k+1)-minors, so the
    /// division by the previous pivot is exact.
    fn bareiss(&mut self) -> (usize, i8) {
        let mut rank = 0usize;
        let mut sign = 1i8;
        let mut prev = K::one();
        for col in 0..self.cols {
            if rank == self.rows {
                break;
            }
            // find a pivot in this column at or below `rank`
            let Some(piv) = (rank..self.rows).find(|&i| !self[(i, col)].is_zero()) else {
                continue;
            };
            if piv != rank {
                self.swap_rows(piv, rank);
                sign = -sign;
            }
            let pivot = self[(rank, col)].clone();
            let prev_inv = prev.inv().expect("previous pivot is nonzero");
            for i in rank + 1..self.rows {
                let head = self[(i, col)].clone();
                for j in col..self.cols {
                    let num = pivot.clone() * self[(i, j)].clone()
                        - head.clone() * self[(rank, j)].clone();
                    self[(i, j)] = num * prev_inv.clone();
                }
            }
            prev = pivot;
            rank += 1;
        }
        (rank, sign)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Reduced row echelon form with exact field division; returns the
    /// reduced matrix and the pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0usize;
        for col in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(piv) = (r..m.rows).find(|&i| !m[(i, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(piv, r);
            let inv = m[(r, col)].inv().unwrap();
            for j in col..m.cols {
                m[(r, j)] = m[(r, j)].clone() * inv.clone();
            }
            for i in 0..m.rows {
                if i != r && !m[(i, col)].is_zero() {
                    let factor = m[(i, col)].clone();
                    for j in col..m.cols {
                        let t = factor.clone() * m[(r, j)].clone();
                        m[(i, j)] = m[(i, j)].clone() - t;
                    }
                }
            }
            pivots.push(col);
            r += 1;
        }
        (m, pivots)
    }

    /// A basis of the right kernel {v : Mv = 0}, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vec<K>> {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        let mut pivot_of_col = vec![None; self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            pivot_of_col[pc] = Some(row);
        }
        for free in 0..self.cols {
            if pivot_of_col[free].is_some() {
                continue;
            }
            let mut v = vec![K::zero(); self.cols];
            v[free] = K::one();
            for (col, p) in pivot_of_col.iter().enumerate() {
                if let Some(row) = p {
                    v[col] = -r[(*row, free)].clone();
                }
            }
            basis.push(v);
        }
        basis
    }

    /// Restrict to a spanning subset of columns: the pivot columns of the
    /// original matrix, which form a basis of the column space.
    pub fn column_basis(&self) -> Self {
        let (_, pivots) = self.rref();
        self.select_columns(&pivots)
    }

    pub fn mul_vec(&self, v: &[K]) -> Vec<K> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = K::zero();
                for j in 0..self.cols {
                    if !self[(i, j)].is_zero() && !v[j].is_zero() {
                        acc = acc + self[(i, j)].clone() * v[j].clone();
                    }
                }
                acc
            })
            .collect()
    }
}

impl<K> std::ops::Index<(usize, usize)> for Matrix<K> {
    type Output = K;
    fn index(&self, (i, j): (usize, usize)) -> &K {
        &self.data[i * self.cols + j]
    }
}

impl<K> std::ops::IndexMut<(usize, usize)> for Matrix<K> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut K {
        &mut self.data[i * self.cols + j]
    }
}

impl<K: fmt::Display> fmt::Debug for Matrix<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|j| self.data[i * self.cols + j].to_string())
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}
