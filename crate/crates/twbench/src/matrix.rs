//! Dense matrices over an exact field, stored row-major.
//!
//! Sizes in this crate are tiny (adjacency matrices of schemes on at most a
//! few dozen points), so the implementation favours clarity and exactness
//! over asymptotics.

use crate::field::Field;
use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> Matrix<F> {
    pub fn from_data(field: F, rows: usize, cols: usize, data: Vec<F::Elem>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data length mismatch");
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    pub fn zeros(field: F, rows: usize, cols: usize) -> Self {
        let data = vec![field.zero(); rows * cols];
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    pub fn identity(field: F, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            let one = m.field.one();
            m.set(i, i, one);
        }
        m
    }

    /// The all-ones matrix J.
    pub fn ones(field: F, rows: usize, cols: usize) -> Self {
        let data = vec![field.one(); rows * cols];
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    /// The matrix unit E_{r,c}.
    pub fn unit(field: F, n: usize, r: usize, c: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        let one = m.field.one();
        m.set(r, c, one);
        m
    }

    /// Build from integer entries via the canonical map Z -> F.
    pub fn from_int_rows(field: F, rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged integer matrix");
            for &v in row {
                data.push(field.from_int(v));
            }
        }
        Matrix {
            field,
            rows: r,
            cols: c,
            data,
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> &F::Elem {
        &self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: F::Elem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.field, other.field, "field mismatch");
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| self.field.add(a, b))
            .collect();
        Matrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.field, other.field, "field mismatch");
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| self.field.sub(a, b))
            .collect();
        Matrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let data = self.data.iter().map(|a| self.field.mul(a, c)).collect();
        Matrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.field, other.field, "field mismatch");
        assert_eq!(self.cols, other.rows, "inner dimension mismatch");
        let f = &self.field;
        let mut out = Matrix::zeros(self.field.clone(), self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if f.is_zero(b) {
                        continue;
                    }
                    let prod = f.mul(a, b);
                    let cur = out.get(i, j);
                    let sum = f.add(cur, &prod);
                    out.set(i, j, sum);
                }
            }
        }
        out
    }

    /// Apply to a column vector.
    pub fn apply(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(self.cols, v.len());
        let f = &self.field;
        let mut out = vec![f.zero(); self.rows];
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if f.is_zero(a) || f.is_zero(&v[j]) {
                    continue;
                }
                let prod = f.mul(a, &v[j]);
                out[i] = f.add(&out[i], &prod);
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut out = Matrix::zeros(self.field.clone(), self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn trace(&self) -> F::Elem {
        assert!(self.is_square());
        let f = &self.field;
        let mut t = f.zero();
        for i in 0..self.rows {
            t = f.add(&t, self.get(i, i));
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|a| self.field.is_zero(a))
    }

    /// True when every entry is 0 or 1 in the field.
    pub fn is_zero_one(&self) -> bool {
        self.data
            .iter()
            .all(|a| self.field.is_zero(a) || self.field.is_one(a))
    }

    /// Row-major flattening, used to view matrices as ambient vectors.
    pub fn flatten(&self) -> Vec<F::Elem> {
        self.data.clone()
    }

    pub fn from_flat(field: F, rows: usize, cols: usize, v: &[F::Elem]) -> Self {
        assert_eq!(v.len(), rows * cols);
        Matrix {
            field,
            rows,
            cols,
            data: v.to_vec(),
        }
    }

    /// Horizontal stack of per-column blocks, used to assemble block maps.
    pub fn hstack(blocks: &[Matrix<F>]) -> Self {
        assert!(!blocks.is_empty());
        let field = blocks[0].field.clone();
        let rows = blocks[0].rows;
        let cols: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let mut off = 0;
        for b in blocks {
            assert_eq!(b.rows, rows);
            for i in 0..rows {
                for j in 0..b.cols {
                    out.set(i, off + j, b.get(i, j).clone());
                }
            }
            off += b.cols;
        }
        out
    }

    /// Block-diagonal assembly.
    pub fn block_diag(blocks: &[Matrix<F>]) -> Self {
        assert!(!blocks.is_empty());
        let field = blocks[0].field.clone();
        let rows: usize = blocks.iter().map(|b| b.rows).sum();
        let cols: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let (mut ro, mut co) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out.set(ro + i, co + j, b.get(i, j).clone());
                }
            }
            ro += b.rows;
            co += b.cols;
        }
        out
    }
}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}:", self.rows, self.cols, self.field.label())?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|j| self.field.elem_string(self.get(i, j)))
                .collect();
            writeln!(f, "  [{}]", row.join(" "))?;
        }
        Ok(())
    }
}
