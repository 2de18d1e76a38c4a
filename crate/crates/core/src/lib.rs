//! Exact and floating-point multilinear algebra for `k`-dimensional content.
//!
//! The central identity is the sum-of-squared-minors form of Cauchy–Binet:
//! for an `n x k` matrix `A`,
//!
//! ```text
//! det(AᵗA) = Σ_{|I| = k} det(A_I)²
//! ```
//!
//! where `A_I` keeps the rows indexed by `I`. Geometrically, the squared
//! `k`-volume of the parallelepiped spanned by the columns of `A` is the sum
//! of the squared volumes of its projections onto the coordinate
//! `k`-planes.
//!
//! Every kernel is generic over [`scalar::Scalar`], implemented by
//! [`scalar::Exact`] (arbitrary-precision rationals, where the identity
//! holds with zero residual) and [`scalar::Float`] (binary64).
//!
//! ```
//! use kcontent::content::pythagorean_check;
//! use kcontent::matrix::Matrix;
//! use kcontent::scalar::Exact;
//!
//! let a = Matrix::<Exact>::from_i64_rows(&[&[1, 4], &[2, 5], &[3, 6]]);
//! let report = pythagorean_check(&a).unwrap();
//! assert_eq!(report.gram_det, report.minor_sq_sum);
//! assert_eq!(report.gram_det.to_string(), "54");
//! ```

pub mod cli;
pub mod content;
pub mod error;
pub mod exterior;
pub mod geometry;
mod kernels;
pub mod matrix;
pub mod scalar;
pub mod subsets;
pub mod text;
pub mod verify;

pub use error::{Error, Result};
pub use kernels::PIVOT_FLOOR;
