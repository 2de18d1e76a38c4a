//! Parallelepipeds, simplices and parametrized immersions.

mod immersion;
mod shapes;

pub use immersion::{immersion_content, CentralDifference, ImmersionSpec, JacobianSampler};
pub use shapes::{Shape, ShapeSpec};

use crate::content::{pythagorean_check, relative_gap, ContentReport};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// The set `{ Σ λᵢ vᵢ : λᵢ ∈ [0, 1] }`, stored as the column matrix of its
/// spanning vectors.
#[derive(Debug, Clone, PartialEq)]
pub struct Parallelepiped<T> {
    vectors: Matrix<T>,
}

impl<T: Scalar> Parallelepiped<T> {
    pub fn new(vectors: Matrix<T>) -> Result<Self> {
        if vectors.cols() > vectors.rows() {
            return Err(Error::SubsetTooLarge {
                n: vectors.rows(),
                k: vectors.cols(),
            });
        }
        Ok(Parallelepiped { vectors })
    }

    pub fn from_vectors(ambient: usize, vectors: &[Vec<T>]) -> Result<Self> {
        Self::new(Matrix::from_columns(ambient, vectors)?)
    }

    pub fn vectors(&self) -> &Matrix<T> {
        &self.vectors
    }

    pub fn content(&self) -> ContentReport<T> {
        pythagorean_check(&self.vectors).expect("k <= n checked at construction")
    }
}

/// Convex hull of `k + 1` points in `ℝⁿ`.
#[derive(Debug, Clone, PartialEq)]
pub struct Simplex<T> {
    ambient: usize,
    vertices: Vec<Vec<T>>,
}

impl<T: Scalar> Simplex<T> {
    pub fn new(vertices: Vec<Vec<T>>) -> Result<Self> {
        let ambient = vertices
            .first()
            .map(Vec::len)
            .ok_or_else(|| Error::InvalidArgument("a simplex needs at least one vertex".into()))?;
        if let Some(bad) = vertices.iter().position(|v| v.len() != ambient) {
            return Err(Error::DimensionMismatch(format!(
                "vertex {} has {} coordinates, expected {ambient}",
                bad + 1,
                vertices[bad].len()
            )));
        }
        if vertices.len() > ambient + 1 {
            return Err(Error::SubsetTooLarge {
                n: ambient,
                k: vertices.len() - 1,
            });
        }
        Ok(Simplex { ambient, vertices })
    }

    /// Rows of `m` are the vertices.
    pub fn from_rows(m: &Matrix<T>) -> Result<Self> {
        Self::new((0..m.rows()).map(|i| m.row(i).to_vec()).collect())
    }

    pub fn dimension(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Parallelepiped spanned by the edges `vᵢ - v₀`.
    pub fn edge_parallelepiped(&self) -> Parallelepiped<T> {
        self.edges_from(0)
    }

    /// Parallelepiped spanned by the edges leaving vertex `base`.
    pub fn edges_from(&self, base: usize) -> Parallelepiped<T> {
        let origin = &self.vertices[base];
        let edges: Vec<Vec<T>> = self
            .vertices
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != base)
            .map(|(_, v)| {
                v.iter()
                    .zip(origin)
                    .map(|(x, o)| x.clone() - o.clone())
                    .collect()
            })
            .collect();
        Parallelepiped::from_vectors(self.ambient, &edges).expect("k <= n checked at construction")
    }

    /// Vertex with the smallest sum of squared distances to the others,
    /// i.e. the one nearest the centroid.
    ///
    /// Edges from this vertex keep the off-diagonal Gram entries small, which
    /// avoids cancellation in floating point when edge lengths differ by
    /// orders of magnitude.
    pub fn central_vertex(&self) -> usize {
        let spread = |i: usize| -> f64 {
            self.vertices
                .iter()
                .map(|v| {
                    v.iter()
                        .zip(&self.vertices[i])
                        .map(|(x, o)| (x.to_f64() - o.to_f64()).powi(2))
                        .sum::<f64>()
                })
                .sum()
        };
        (0..self.vertices.len())
            .map(|i| (i, spread(i)))
            .fold(
                (0, f64::INFINITY),
                |best, cur| if cur.1 < best.1 { cur } else { best },
            )
            .0
    }

    /// Squared `k`-content: `det(EᵗE) / (k!)²` for the edge matrix `E`
    /// taken from [`Simplex::central_vertex`].
    pub fn content_squared(&self) -> T {
        let k = self.dimension();
        let gram_det = self
            .edges_from(self.central_vertex())
            .vectors()
            .gram()
            .determinant();
        let factorial = (1..=k as i64).fold(T::one(), |acc, i| acc * T::from_i64(i));
        gram_det / (factorial.clone() * factorial)
    }

    pub fn content(&self) -> f64 {
        self.content_squared().to_f64().max(0.0).sqrt()
    }
}

/// Squared face areas of the right tetrahedron with legs on the axes.
#[derive(Debug, Clone, PartialEq)]
pub struct DeGuaReport<T> {
    /// Sum of the squared areas of the three right-angled faces.
    pub leg_sq_sum: T,
    /// Squared area of the face opposite the origin.
    pub hyp_sq: T,
    pub residual: T,
    pub relative_residual: f64,
}

/// Evaluates both sides of de Gua's theorem for the tetrahedron with
/// vertices `0, (a,0,0), (0,b,0), (0,0,c)`. Every face area comes from
/// [`Simplex::content_squared`]; no closed form is used.
pub fn de_gua_check<T: Scalar>(a: T, b: T, c: T) -> Result<DeGuaReport<T>> {
    for (name, v) in [("a", &a), ("b", &b), ("c", &c)] {
        if v.is_negative() || v.is_zero() {
            return Err(Error::InvalidArgument(format!(
                "{name} must be positive, got {}",
                v.render()
            )));
        }
    }
    let z = T::zero;
    let origin = vec![z(), z(), z()];
    let pa = vec![a, z(), z()];
    let pb = vec![z(), b, z()];
    let pc = vec![z(), z(), c];
    let face = |vs: [&Vec<T>; 3]| {
        Simplex::new(vs.iter().map(|v| (*v).clone()).collect())
            .expect("triangle in R^3")
            .content_squared()
    };
    let leg_sq_sum =
        face([&origin, &pa, &pb]) + face([&origin, &pa, &pc]) + face([&origin, &pb, &pc]);
    let hyp_sq = face([&pa, &pb, &pc]);
    Ok(DeGuaReport {
        residual: hyp_sq.clone() - leg_sq_sum.clone(),
        relative_residual: relative_gap(hyp_sq.to_f64(), leg_sq_sum.to_f64()),
        leg_sq_sum,
        hyp_sq,
    })
}
