//! Fixed-grade exterior powers.
//!
//! `Λᵢ(ℝⁿ)` is represented in the orthonormal basis `e_I`, `|I| = i`, ordered
//! lexicographically. A linear map `A: ℝᵏ → ℝⁿ` induces `Λᵢ(A)`, whose matrix
//! in these bases is the `i`-th compound matrix: entry `(I, J)` is the minor
//! of `A` on rows `I` and columns `J`.

use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Scalar;
use crate::subsets::{binomial, k_subsets, SubsetIndex};

/// A grade-`i` element of `Λᵢ(ℝⁿ)`, stored as coordinates over `e_I`.
#[derive(Debug, Clone, PartialEq)]
pub struct Multivector<T> {
    ambient: usize,
    grade: usize,
    coords: Vec<T>,
}

impl<T: Scalar> Multivector<T> {
    pub fn zero(ambient: usize, grade: usize) -> Result<Self> {
        let len = binomial(ambient, grade)?;
        Ok(Multivector {
            ambient,
            grade,
            coords: vec![T::zero(); len],
        })
    }

    /// The basis blade `e_I`.
    pub fn basis(blade: &SubsetIndex) -> Self {
        let mut mv = Self::zero(blade.n(), blade.k()).expect("subset fits its ambient set");
        mv.coords[blade.rank()] = T::one();
        mv
    }

    pub fn from_coords(ambient: usize, grade: usize, coords: Vec<T>) -> Result<Self> {
        let len = binomial(ambient, grade)?;
        if coords.len() != len {
            return Err(Error::DimensionMismatch(format!(
                "grade-{grade} multivector in dimension {ambient} has {len} coordinates, got {}",
                coords.len()
            )));
        }
        Ok(Multivector {
            ambient,
            grade,
            coords,
        })
    }

    /// `v₁ ∧ ... ∧ vₖ` for vectors in `ℝⁿ`. The `e_I` coordinate is the
    /// determinant of rows `I` of the column matrix `[v₁ ... vₖ]`.
    pub fn wedge(ambient: usize, vectors: &[Vec<T>]) -> Result<Self> {
        let a = Matrix::from_columns(ambient, vectors)?;
        Self::wedge_columns(&a)
    }

    /// Wedge of the columns of `a`.
    pub fn wedge_columns(a: &Matrix<T>) -> Result<Self> {
        let (n, k) = (a.rows(), a.cols());
        let subsets = k_subsets(n, k)?;
        let coords = subsets
            .par_iter()
            .map(|rows| T::determinant(&a.row_minor(rows).expect("subset within rows")))
            .collect();
        Ok(Multivector {
            ambient: n,
            grade: k,
            coords,
        })
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn grade(&self) -> usize {
        self.grade
    }

    pub fn coords(&self) -> &[T] {
        &self.coords
    }

    pub fn coord(&self, blade: &SubsetIndex) -> Result<&T> {
        self.check_blade(blade)?;
        Ok(&self.coords[blade.rank()])
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }

    /// `(e_I, coordinate)` pairs in lexicographic order.
    pub fn terms(&self) -> Vec<(SubsetIndex, T)> {
        k_subsets(self.ambient, self.grade)
            .expect("valid grade")
            .into_iter()
            .zip(self.coords.iter().cloned())
            .collect()
    }

    /// Inner product with the `e_I` declared orthonormal.
    pub fn inner(&self, other: &Multivector<T>) -> Result<T> {
        self.check_same_space(other)?;
        Ok(self
            .coords
            .iter()
            .zip(&other.coords)
            .fold(T::zero(), |acc, (x, y)| acc + x.clone() * y.clone()))
    }

    pub fn scale(&self, s: &T) -> Self {
        Multivector {
            ambient: self.ambient,
            grade: self.grade,
            coords: self.coords.iter().map(|c| c.clone() * s.clone()).collect(),
        }
    }

    pub fn add(&self, other: &Multivector<T>) -> Result<Self> {
        self.check_same_space(other)?;
        Ok(Multivector {
            ambient: self.ambient,
            grade: self.grade,
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(x, y)| x.clone() + y.clone())
                .collect(),
        })
    }

    fn check_same_space(&self, other: &Multivector<T>) -> Result<()> {
        if (self.ambient, self.grade) != (other.ambient, other.grade) {
            return Err(Error::DimensionMismatch(format!(
                "Λ{}(ℝ^{}) vs Λ{}(ℝ^{})",
                self.grade, self.ambient, other.grade, other.ambient
            )));
        }
        Ok(())
    }

    fn check_blade(&self, blade: &SubsetIndex) -> Result<()> {
        if (blade.n(), blade.k()) != (self.ambient, self.grade) {
            return Err(Error::DimensionMismatch(format!(
                "blade {blade} does not index Λ{}(ℝ^{})",
                self.grade, self.ambient
            )));
        }
        Ok(())
    }
}

impl<T: Scalar> fmt::Display for Multivector<T> {
    /// One `{I} value` line per basis blade, in lexicographic order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (blade, c) in self.terms() {
            writeln!(f, "{blade} {}", c.render())?;
        }
        Ok(())
    }
}

/// Matrix of `Λᵢ(A)` for an `n x k` matrix `A`: `C(n,i) x C(k,i)`, entry
/// `(rank I, rank J)` equal to the minor `M_IJ`.
#[derive(Debug, Clone, PartialEq)]
pub struct CompoundMatrix<T> {
    source_rows: usize,
    source_cols: usize,
    grade: usize,
    matrix: Matrix<T>,
}

/// Builds the `grade`-th compound of `a`. Minors are evaluated in parallel;
/// the result does not depend on scheduling.
pub fn compound<T: Scalar>(a: &Matrix<T>, grade: usize) -> Result<CompoundMatrix<T>> {
    let (n, k) = (a.rows(), a.cols());
    if grade > n.min(k) {
        return Err(Error::GradeOutOfRange {
            grade,
            rows: n,
            cols: k,
        });
    }
    let row_sets = k_subsets(n, grade)?;
    let col_sets = k_subsets(k, grade)?;
    let width = col_sets.len();
    let entries: Vec<T> = (0..row_sets.len() * width)
        .into_par_iter()
        .map(|idx| {
            a.minor_det(&row_sets[idx / width], &col_sets[idx % width])
                .expect("subsets sized to the matrix")
        })
        .collect();
    Ok(CompoundMatrix {
        source_rows: n,
        source_cols: k,
        grade,
        matrix: Matrix::new(row_sets.len(), width, entries)?,
    })
}

impl<T: Scalar> CompoundMatrix<T> {
    pub fn grade(&self) -> usize {
        self.grade
    }

    /// `(n, k)` of the matrix this compound was built from.
    pub fn source_dims(&self) -> (usize, usize) {
        (self.source_rows, self.source_cols)
    }

    pub fn matrix(&self) -> &Matrix<T> {
        &self.matrix
    }

    pub fn into_matrix(self) -> Matrix<T> {
        self.matrix
    }

    pub fn entry(&self, rows: &SubsetIndex, cols: &SubsetIndex) -> &T {
        self.matrix.get(rows.rank(), cols.rank())
    }

    /// `Λᵢ(A)` applied to a grade-`i` multivector on `ℝᵏ`.
    pub fn apply(&self, x: &Multivector<T>) -> Result<Multivector<T>> {
        if x.ambient() != self.source_cols || x.grade() != self.grade {
            return Err(Error::DimensionMismatch(format!(
                "Λ{}(A) for A: ℝ^{} → ℝ^{} cannot act on Λ{}(ℝ^{})",
                self.grade,
                self.source_cols,
                self.source_rows,
                x.grade(),
                x.ambient()
            )));
        }
        let column = Matrix::new(x.coords.len(), 1, x.coords.clone())?;
        let image = self.matrix.matmul(&column)?;
        Multivector::from_coords(self.source_rows, self.grade, image.entries().to_vec())
    }
}

impl<T: Scalar> fmt::Display for CompoundMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "# compound n={} k={} i={}",
            self.source_rows, self.source_cols, self.grade
        )?;
        let join = |sets: Vec<SubsetIndex>| {
            sets.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(" ")
        };
        let rows = k_subsets(self.source_rows, self.grade).map_err(|_| fmt::Error)?;
        let cols = k_subsets(self.source_cols, self.grade).map_err(|_| fmt::Error)?;
        writeln!(f, "# rows: {}", join(rows))?;
        writeln!(f, "# cols: {}", join(cols))?;
        write!(f, "{}", self.matrix)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Exact;
    use crate::text::parse_matrix;

    type Q = Matrix<Exact>;

    fn q(v: i64) -> Exact {
        Exact::from_i64(v)
    }

    fn qv(v: &[i64]) -> Vec<Exact> {
        v.iter().map(|&x| q(x)).collect()
    }

    #[test]
    fn wedge_of_coordinate_vectors() {
        let w = Multivector::wedge(3, &[qv(&[1, 0, 0]), qv(&[0, 1, 0])]).unwrap();
        assert_eq!(w.coords(), &qv(&[1, 0, 0])[..]);
        assert_eq!(w.grade(), 2);
    }

    #[test]
    fn wedge_gives_projected_areas() {
        let (a, b, c, d, e, f) = (2, -3, 5, 7, 1, -4);
        let w = Multivector::wedge(3, &[qv(&[a, b, c]), qv(&[d, e, f])]).unwrap();
        assert_eq!(
            w.coords(),
            &qv(&[a * e - b * d, a * f - c * d, b * f - c * e])[..]
        );
    }

    #[test]
    fn wedge_of_dependent_vectors_vanishes() {
        let w = Multivector::wedge(3, &[qv(&[1, 2, 3]), qv(&[2, 4, 6])]).unwrap();
        assert!(w.is_zero());
    }

    #[test]
    fn wedge_errors() {
        assert!(Multivector::wedge(3, &[qv(&[1, 2]), qv(&[1, 2, 3])]).is_err());
        assert!(Multivector::wedge(2, &[qv(&[1, 2]), qv(&[3, 4]), qv(&[5, 6])]).is_err());
    }

    #[test]
    fn wedge_of_nothing_is_one() {
        let w = Multivector::<Exact>::wedge(4, &[]).unwrap();
        assert_eq!(w.coords(), &[q(1)]);
    }

    #[test]
    fn compound_of_identity_is_identity() {
        for n in 0..5 {
            for i in 0..=n {
                let c = compound(&Q::identity(n), i).unwrap();
                let dim = binomial(n, i).unwrap();
                assert_eq!(c.matrix(), &Q::identity(dim));
            }
        }
    }

    #[test]
    fn compound_of_diagonal() {
        let d = Q::diagonal(&qv(&[2, 3, 4]));
        let c = compound(&d, 2).unwrap();
        assert_eq!(c.matrix(), &Q::diagonal(&qv(&[6, 8, 12])));
    }

    #[test]
    fn compound_of_tall_matrix_is_its_wedge() {
        let a = Q::from_i64_rows(&[&[1, 4], &[2, 5], &[3, 6]]);
        let c = compound(&a, 2).unwrap();
        assert_eq!((c.matrix().rows(), c.matrix().cols()), (3, 1));
        let w = Multivector::wedge_columns(&a).unwrap();
        assert_eq!(c.matrix().entries(), w.coords());
        assert_eq!(w.coords(), &qv(&[-3, -6, -3])[..]);
    }

    #[test]
    fn low_grades() {
        let a = Q::from_i64_rows(&[&[1, 4], &[2, 5], &[3, 6]]);
        assert_eq!(compound(&a, 1).unwrap().into_matrix(), a);
        assert_eq!(compound(&a, 0).unwrap().into_matrix(), Q::identity(1));
        assert!(matches!(
            compound(&a, 3),
            Err(Error::GradeOutOfRange { .. })
        ));
    }

    #[test]
    fn apply_to_leading_blade_is_wedge() {
        let a = Q::from_i64_rows(&[&[1, 0, 2], &[-1, 3, 1], &[4, 1, 0], &[2, 2, 5]]);
        let c = compound(&a, 3).unwrap();
        let e = Multivector::basis(&SubsetIndex::leading(3, 3).unwrap());
        assert_eq!(
            c.apply(&e).unwrap(),
            Multivector::wedge_columns(&a).unwrap()
        );

        let id = compound(&Q::identity(4), 2).unwrap();
        let x = Multivector::from_coords(4, 2, qv(&[1, -2, 3, 0, 5, 7])).unwrap();
        assert_eq!(id.apply(&x).unwrap(), x);
        let z = Multivector::<Exact>::zero(3, 2).unwrap();
        assert!(c
            .apply(&Multivector::zero(3, 3).unwrap())
            .unwrap()
            .is_zero());
        assert!(c.apply(&z).is_err());
    }

    #[test]
    fn inner_product_of_blades() {
        let blades = k_subsets(4, 2).unwrap();
        for i in &blades {
            for j in &blades {
                let v = Multivector::<Exact>::basis(i)
                    .inner(&Multivector::basis(j))
                    .unwrap();
                assert_eq!(v, q(if i == j { 1 } else { 0 }));
            }
        }
        let a = Multivector::<Exact>::zero(4, 2).unwrap();
        assert!(a.inner(&Multivector::zero(4, 3).unwrap()).is_err());
    }

    #[test]
    fn wedge_norm_is_sum_of_squared_minors() {
        let a = Q::from_i64_rows(&[&[1, 4], &[2, 5], &[3, 6]]);
        let w = Multivector::wedge_columns(&a).unwrap();
        assert_eq!(w.inner(&w).unwrap(), q(54));
    }

    #[test]
    fn text_forms() {
        let w = Multivector::wedge(3, &[qv(&[1, 2, 3]), qv(&[4, 5, 6])]).unwrap();
        assert_eq!(w.to_string(), "{1,2} -3\n{1,3} -6\n{2,3} -3\n");

        let c = compound(&Q::diagonal(&qv(&[2, 3, 4])), 2).unwrap();
        let text = c.to_string();
        assert!(text.starts_with("# compound n=3 k=3 i=2\n# rows: {1,2} {1,3} {2,3}\n"));
        assert_eq!(parse_matrix::<Exact>(&text).unwrap(), *c.matrix());
    }
}
