use std::fmt;

use crate::scalar::Scalar;

/// Dense matrix over an exact coefficient domain.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix<C: Scalar> {
    rows: usize,
    cols: usize,
    data: Vec<C>,
}

impl<C: Scalar> Matrix<C> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> C) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| C::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |r, c| if r == c { C::one() } else { C::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &C {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: C) {
        self.data[r * self.cols + c] = v;
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn scale(&self, k: &C) -> Self {
        Self::from_fn(self.rows, self.cols, |r, c| self.get(r, c).clone() * k.clone())
    }

    pub fn map<D: Scalar>(&self, mut f: impl FnMut(&C) -> Option<D>) -> Option<Matrix<D>> {
        let data = self.data.iter().map(&mut f).collect::<Option<Vec<D>>>()?;
        Some(Matrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn mul(&self, o: &Matrix<C>) -> Matrix<C> {
        assert_eq!(self.cols, o.rows, "dimension mismatch");
        Self::from_fn(self.rows, o.cols, |r, c| {
            let mut acc = C::zero();
            for k in 0..self.cols {
                acc += self.get(r, k).clone() * o.get(k, c).clone();
            }
            acc
        })
    }

    pub fn add(&self, o: &Matrix<C>) -> Matrix<C> {
        Self::from_fn(self.rows, self.cols, |r, c| self.get(r, c).clone() + o.get(r, c).clone())
    }

    pub fn sub(&self, o: &Matrix<C>) -> Matrix<C> {
        Self::from_fn(self.rows, self.cols, |r, c| self.get(r, c).clone() - o.get(r, c).clone())
    }

    /// The submatrix on the given row and column positions.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Matrix<C> {
        Self::from_fn(rows.len(), cols.len(), |r, c| self.get(rows[r], cols[c]).clone())
    }

    /// Fraction-free elimination. Returns the rank and, for square input, the
    /// determinant.
    fn bareiss(&self) -> (usize, C) {
        let mut a = self.data.clone();
        let (m, n) = (self.rows, self.cols);
        let mut prev = C::one();
        let mut sign = C::one();
        let mut rank = 0;
        for col in 0..n {
            if rank == m {
                break;
            }
            let Some(p) = (rank..m).find(|&r| !a[r * n + col].is_zero()) else {
                continue;
            };
            if p != rank {
                for c in 0..n {
                    a.swap(p * n + c, rank * n + c);
                }
                sign = -sign;
            }
            let piv = a[rank * n + col].clone();
            for r in rank + 1..m {
                let f = a[r * n + col].clone();
                for c in col + 1..n {
                    let v = piv.clone() * a[r * n + c].clone() - f.clone() * a[rank * n + c].clone();
                    a[r * n + c] = v.checked_div(&prev).expect("Bareiss division is exact");
                }
                a[r * n + col] = C::zero();
            }
            prev = piv;
            rank += 1;
        }
        let det = if m == n && rank == n { sign * prev } else { C::zero() };
        (rank, det)
    }

    pub fn rank(&self) -> usize {
        self.bareiss().0
    }

    pub fn det(&self) -> C {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        if self.rows == 0 {
            return C::one();
        }
        self.bareiss().1
    }

    /// Gauss-Jordan inverse; `None` if singular or a pivot is not invertible.
    pub fn inverse(&self) -> Option<Matrix<C>> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut inv: Matrix<C> = Matrix::identity(n);
        for col in 0..n {
            let p = (col..n).find(|&r| !a.get(r, col).is_zero())?;
            if p != col {
                for c in 0..n {
                    a.data.swap(p * n + c, col * n + c);
                    inv.data.swap(p * n + c, col * n + c);
                }
            }
            let k = C::one().checked_div(a.get(col, col))?;
            for c in 0..n {
                a.set(col, c, a.get(col, c).clone() * k.clone());
                inv.set(col, c, inv.get(col, c).clone() * k.clone());
            }
            for r in 0..n {
                if r == col || a.get(r, col).is_zero() {
                    continue;
                }
                let f = a.get(r, col).clone();
                for c in 0..n {
                    a.set(r, c, a.get(r, c).clone() - f.clone() * a.get(col, c).clone());
                    inv.set(r, c, inv.get(r, c).clone() - f.clone() * inv.get(col, c).clone());
                }
            }
        }
        Some(inv)
    }
}

impl<C: Scalar> fmt::Display for Matrix<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}
