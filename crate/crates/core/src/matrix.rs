//! Dense row-major matrices over a [`Scalar`].

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{Exact, Float, Mode, Scalar};
use crate::subsets::SubsetIndex;

#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = T::one();
        }
        m
    }

    pub fn diagonal(values: &[T]) -> Self {
        let n = values.len();
        let mut m = Self::zeros(n, n);
        for (i, v) in values.iter().enumerate() {
            m.data[i * n + i] = v.clone();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().position(|row| row.len() != c) {
            return Err(Error::DimensionMismatch(format!(
                "row {} has {} entries, expected {c}",
                bad + 1,
                rows[bad].len()
            )));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Builds the `n x k` matrix whose columns are the given vectors.
    pub fn from_columns(n: usize, columns: &[Vec<T>]) -> Result<Self> {
        let k = columns.len();
        if let Some(bad) = columns.iter().position(|c| c.len() != n) {
            return Err(Error::DimensionMismatch(format!(
                "vector {} has length {}, expected {n}",
                bad + 1,
                columns[bad].len()
            )));
        }
        let mut data = Vec::with_capacity(n * k);
        for i in 0..n {
            for col in columns {
                data.push(col[i].clone());
            }
        }
        Ok(Matrix {
            rows: n,
            cols: k,
            data,
        })
    }

    /// Convenience constructor from integer rows; panics on ragged input.
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| T::from_i64(v)).collect())
                .collect(),
        )
        .expect("rectangular integer rows")
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

    pub fn mode(&self) -> Mode {
        T::MODE
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<T>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    /// Float image of this matrix.
    pub fn to_float(&self) -> Matrix<Float> {
        self.map(|x| Float::new(x.to_f64()).expect("finite conversion"))
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn matmul(&self, rhs: &Matrix<T>) -> Result<Matrix<T>> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut data = Vec::with_capacity(self.rows * rhs.cols);
        for i in 0..self.rows {
            let row = self.row(i);
            for j in 0..rhs.cols {
                data.push(dot_with(row, |t| rhs.get(t, j)));
            }
        }
        Ok(Matrix {
            rows: self.rows,
            cols: rhs.cols,
            data,
        })
    }

    /// Gram matrix `AᵗA`. Only the upper triangle is computed; the lower
    /// triangle is a copy, so the result is symmetric bit for bit.
    pub fn gram(&self) -> GramMatrix<T> {
        let k = self.cols;
        let mut g = Matrix::zeros(k, k);
        for i in 0..k {
            for j in i..k {
                let v = dot_with_idx(self.rows, |t| self.get(t, i), |t| self.get(t, j));
                g.set(j, i, v.clone());
                g.set(i, j, v);
            }
        }
        GramMatrix(g)
    }

    pub fn determinant(&self) -> Result<T> {
        if !self.is_square() {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(T::determinant(self))
    }

    pub fn rank(&self) -> usize {
        T::rank(self)
    }

    /// Rows `I` of the matrix, in order, all columns kept.
    pub fn row_minor(&self, rows: &SubsetIndex) -> Result<Matrix<T>> {
        self.check_subset(rows, self.rows, "row")?;
        let mut data = Vec::with_capacity(rows.k() * self.cols);
        for i in rows.zero_based() {
            data.extend_from_slice(self.row(i));
        }
        Ok(Matrix {
            rows: rows.k(),
            cols: self.cols,
            data,
        })
    }

    /// Submatrix on rows `I` and columns `J`, each in increasing order.
    pub fn submatrix(&self, rows: &SubsetIndex, cols: &SubsetIndex) -> Result<Matrix<T>> {
        self.check_subset(rows, self.rows, "row")?;
        self.check_subset(cols, self.cols, "column")?;
        let mut data = Vec::with_capacity(rows.k() * cols.k());
        for i in rows.zero_based() {
            for j in cols.zero_based() {
                data.push(self.get(i, j).clone());
            }
        }
        Ok(Matrix {
            rows: rows.k(),
            cols: cols.k(),
            data,
        })
    }

    /// The minor `M_IJ`: determinant of the submatrix on rows `I`, columns `J`.
    pub fn minor_det(&self, rows: &SubsetIndex, cols: &SubsetIndex) -> Result<T> {
        if rows.k() != cols.k() {
            return Err(Error::DimensionMismatch(format!(
                "minor needs |I| = |J|, got {} and {}",
                rows.k(),
                cols.k()
            )));
        }
        Ok(T::determinant(&self.submatrix(rows, cols)?))
    }

    fn check_subset(&self, s: &SubsetIndex, bound: usize, what: &str) -> Result<()> {
        match s.elements().last() {
            Some(&last) if last > bound => Err(Error::DimensionMismatch(format!(
                "{what} index {last} out of range 1..={bound}"
            ))),
            _ => Ok(()),
        }
    }
}

fn dot_with<'a, T: Scalar>(row: &'a [T], other: impl Fn(usize) -> &'a T) -> T {
    row.iter()
        .enumerate()
        .fold(T::zero(), |acc, (t, a)| acc + a.clone() * other(t).clone())
}

fn dot_with_idx<'a, T: Scalar>(
    len: usize,
    a: impl Fn(usize) -> &'a T,
    b: impl Fn(usize) -> &'a T,
) -> T {
    (0..len).fold(T::zero(), |acc, t| acc + a(t).clone() * b(t).clone())
}

impl<T: Scalar> fmt::Display for Matrix<T> {
    /// The matrix text format: one row per line, single-space separated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let line: Vec<String> = self.row(i).iter().map(Scalar::render).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// A Gram matrix `AᵗA`, symmetric by construction.
#[derive(Debug, Clone, PartialEq)]
pub struct GramMatrix<T>(Matrix<T>);

impl<T: Scalar> GramMatrix<T> {
    pub fn as_matrix(&self) -> &Matrix<T> {
        &self.0
    }

    pub fn into_matrix(self) -> Matrix<T> {
        self.0
    }

    pub fn dim(&self) -> usize {
        self.0.rows
    }

    pub fn determinant(&self) -> T {
        T::determinant(&self.0)
    }

    /// Determinants of the leading `1x1, ..., kxk` blocks.
    pub fn leading_principal_minors(&self) -> Vec<T> {
        let k = self.dim();
        (1..=k)
            .map(|m| {
                let s = SubsetIndex::leading(k, m).expect("m <= k");
                self.0.minor_det(&s, &s).expect("square block")
            })
            .collect()
    }

    pub fn is_symmetric(&self) -> bool {
        let k = self.dim();
        (0..k).all(|i| (0..i).all(|j| self.0.get(i, j) == self.0.get(j, i)))
    }
}

/// A matrix whose arithmetic mode is chosen at run time.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyMatrix {
    Exact(Matrix<Exact>),
    Float(Matrix<Float>),
}

impl AnyMatrix {
    pub fn mode(&self) -> Mode {
        match self {
            AnyMatrix::Exact(_) => Mode::Exact,
            AnyMatrix::Float(_) => Mode::Float,
        }
    }

    pub fn dims(&self) -> (usize, usize) {
        match self {
            AnyMatrix::Exact(m) => (m.rows(), m.cols()),
            AnyMatrix::Float(m) => (m.rows(), m.cols()),
        }
    }

    pub fn matmul(&self, rhs: &AnyMatrix) -> Result<AnyMatrix> {
        match (self, rhs) {
            (AnyMatrix::Exact(a), AnyMatrix::Exact(b)) => a.matmul(b).map(AnyMatrix::Exact),
            (AnyMatrix::Float(a), AnyMatrix::Float(b)) => a.matmul(b).map(AnyMatrix::Float),
            _ => Err(Error::ModeMismatch),
        }
    }
}
