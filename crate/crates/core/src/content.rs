//! Content of linear maps and the sum-of-squared-minors identity.
//!
//! The content `c(A)` of a matrix is the absolute determinant of the map it
//! induces from the orthogonal complement of its kernel onto its image. For
//! an `n x k` matrix with independent columns it is the `k`-volume of the
//! parallelepiped the columns span, `√det(AᵗA)`.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exterior::compound;
use crate::matrix::Matrix;
use crate::scalar::{format_f64, Mode, Scalar};
use crate::subsets::{k_subsets, SubsetIndex};

/// Relative tolerance used to accept float results.
pub const FLOAT_RELATIVE_TOLERANCE: f64 = 1e-10;

/// `|a - b| / max(|a|, |b|)`, or 0 when both are 0.
pub fn relative_gap(a: f64, b: f64) -> f64 {
    let scale = a.abs().max(b.abs());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).abs() / scale
    }
}

/// Content of a matrix, rank-aware.
#[derive(Debug, Clone, PartialEq)]
pub struct Content<T> {
    pub rank: usize,
    /// `c(A)²`, exact in exact mode.
    pub squared: T,
    /// `c(A)` as a float.
    pub value: f64,
    /// Set for the zero map, whose content is 1 only by the empty-product
    /// convention.
    pub degenerate: bool,
}

/// Content of the map `x ↦ Ax` restricted to `ker(A)⊥ → im(A)`.
///
/// With `r = rank(A)`, `c(A)²` is the sum of squares of all `r x r` minors,
/// which equals the product of the nonzero eigenvalues of `AᵗA`. When the
/// columns are independent this reduces to `det(AᵗA)`, computed directly.
pub fn content<T: Scalar>(a: &Matrix<T>) -> Content<T> {
    let rank = a.rank();
    let squared = if rank == a.cols() {
        a.gram().determinant()
    } else {
        let c = compound(a, rank).expect("rank <= min(rows, cols)");
        c.matrix()
            .entries()
            .iter()
            .fold(T::zero(), |acc, m| acc + m.clone() * m.clone())
    };
    Content {
        rank,
        value: squared.to_f64().max(0.0).sqrt(),
        squared,
        degenerate: rank == 0,
    }
}

/// Both sides of `det(AᵗA) = Σ_I det(A_I)²`, computed independently.
#[derive(Debug, Clone, PartialEq)]
pub struct ContentReport<T> {
    pub n: usize,
    pub k: usize,
    /// `det(AᵗA)` by elimination on the Gram matrix.
    pub gram_det: T,
    /// `Σ_I det(A_I)²` over all `k`-subsets of rows.
    pub minor_sq_sum: T,
    /// Signed `det(A_I)` in lexicographic order of `I`.
    pub minors: Vec<(SubsetIndex, T)>,
    pub residual: T,
    /// `√det(AᵗA)`, the `k`-volume of the spanned parallelepiped.
    pub content: f64,
}

#[derive(Serialize)]
struct MinorRecord {
    subset: String,
    value: String,
}

#[derive(Serialize)]
struct ReportRecord {
    mode: Mode,
    n: usize,
    k: usize,
    gram_det: String,
    minor_sq_sum: String,
    residual: String,
    relative_residual: String,
    content: String,
    verified: bool,
    minors: Vec<MinorRecord>,
}

impl<T: Scalar> ContentReport<T> {
    pub fn mode(&self) -> Mode {
        T::MODE
    }

    pub fn relative_residual(&self) -> f64 {
        relative_gap(self.gram_det.to_f64(), self.minor_sq_sum.to_f64())
    }

    /// Exact mode demands a zero residual; float mode a relative residual
    /// within [`FLOAT_RELATIVE_TOLERANCE`].
    pub fn is_verified(&self) -> bool {
        match T::MODE {
            Mode::Exact => self.residual.is_zero(),
            Mode::Float => self.relative_residual() <= FLOAT_RELATIVE_TOLERANCE,
        }
    }

    /// Key-value text block, one field per line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut kv = |k: &str, v: String| {
            out.push_str(k);
            out.push(' ');
            out.push_str(&v);
            out.push('\n');
        };
        kv("mode", self.mode().to_string());
        kv("n", self.n.to_string());
        kv("k", self.k.to_string());
        kv("gram_det", self.gram_det.render());
        kv("minor_sq_sum", self.minor_sq_sum.render());
        kv("residual", self.residual.render());
        kv("relative_residual", format_f64(self.relative_residual()));
        kv("content", format_f64(self.content));
        kv("verified", self.is_verified().to_string());
        for (s, m) in &self.minors {
            kv("minor", format!("{s} {}", m.render()));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(ReportRecord {
            mode: self.mode(),
            n: self.n,
            k: self.k,
            gram_det: self.gram_det.render(),
            minor_sq_sum: self.minor_sq_sum.render(),
            residual: self.residual.render(),
            relative_residual: format_f64(self.relative_residual()),
            content: format_f64(self.content),
            verified: self.is_verified(),
            minors: self
                .minors
                .iter()
                .map(|(s, m)| MinorRecord {
                    subset: s.to_string(),
                    value: m.render(),
                })
                .collect(),
        })
        .expect("report serializes")
    }
}

/// Signed `det(A_I)` for every `k`-subset `I` of rows, in lexicographic order.
fn row_minors<T: Scalar>(a: &Matrix<T>) -> Result<Vec<(SubsetIndex, T)>> {
    let subsets = k_subsets(a.rows(), a.cols())?;
    Ok(subsets
        .into_par_iter()
        .map(|rows| {
            let det = T::determinant(&a.row_minor(&rows).expect("subset within rows"));
            (rows, det)
        })
        .collect())
}

/// Evaluates `det(AᵗA)` and `Σ_I det(A_I)²` along separate code paths.
///
/// Fails when `k > n`: there are no `k`-subsets of rows, so the identity
/// would hold vacuously as `0 = 0`.
pub fn pythagorean_check<T: Scalar>(a: &Matrix<T>) -> Result<ContentReport<T>> {
    let (n, k) = (a.rows(), a.cols());
    if k > n {
        return Err(Error::SubsetTooLarge { n, k });
    }
    let gram_det = a.gram().determinant();
    let minors = row_minors(a)?;
    // Fixed lexicographic summation order.
    let minor_sq_sum = minors
        .iter()
        .fold(T::zero(), |acc, (_, m)| acc + m.clone() * m.clone());
    Ok(ContentReport {
        n,
        k,
        residual: gram_det.clone() - minor_sq_sum.clone(),
        content: gram_det.to_f64().max(0.0).sqrt(),
        gram_det,
        minor_sq_sum,
        minors,
    })
}

/// Signed and unsigned content of one coordinate-hyperplane projection.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjectionContent<T> {
    pub subset: SubsetIndex,
    pub signed: T,
    pub absolute: T,
}

/// Contents of the projections of the column parallelepiped onto every
/// `k`-dimensional coordinate hyperplane.
pub fn projection_contents<T: Scalar>(a: &Matrix<T>) -> Result<Vec<ProjectionContent<T>>> {
    let (n, k) = (a.rows(), a.cols());
    if k > n {
        return Err(Error::SubsetTooLarge { n, k });
    }
    Ok(row_minors(a)?
        .into_iter()
        .map(|(subset, signed)| ProjectionContent {
            subset,
            absolute: signed.abs(),
            signed,
        })
        .collect())
}

/// Both sides of `c(M∘L) = c(M)·c(L)` for `M = E·Lᵗ`.
#[derive(Debug, Clone, PartialEq)]
pub struct MultiplicativityReport<T> {
    /// `c(M∘L)`.
    pub composite: f64,
    /// `c(M)·c(L)`.
    pub product: f64,
    pub relative_gap: f64,
    /// `c(M∘L)²`, exact in exact mode.
    pub composite_sq: T,
    /// `c(M)²·c(L)²`, exact in exact mode.
    pub product_sq: T,
}

/// Checks multiplicativity of content on a composition whose hypothesis
/// `im L = ker(M)⊥` holds by construction.
///
/// `L` is `n x k` and `E` is `p x k`, both with independent columns. Then
/// `ker(E·Lᵗ) = ker(Lᵗ) = (im L)⊥`.
pub fn multiplicativity_check<T: Scalar>(
    l: &Matrix<T>,
    e: &Matrix<T>,
) -> Result<MultiplicativityReport<T>> {
    let k = l.cols();
    if e.cols() != k {
        return Err(Error::DimensionMismatch(format!(
            "L has {k} columns but E has {}",
            e.cols()
        )));
    }
    if l.rank() != k {
        return Err(Error::Hypothesis("L must have full column rank".into()));
    }
    if e.rank() != k {
        return Err(Error::Hypothesis("E must have full column rank".into()));
    }
    let m = e.matmul(&l.transpose())?;
    let ml = m.matmul(l)?;
    let c_ml = content(&ml);
    let c_m = content(&m);
    let c_l = content(l);
    let product = c_m.value * c_l.value;
    Ok(MultiplicativityReport {
        composite: c_ml.value,
        product,
        relative_gap: relative_gap(c_ml.value, product),
        composite_sq: c_ml.squared,
        product_sq: c_m.squared * c_l.squared,
    })
}

/// `c(A)` and `c(Aᵗ)`, each from its own rank-aware evaluation.
#[derive(Debug, Clone, PartialEq)]
pub struct AdjointReport<T> {
    pub content: Content<T>,
    pub adjoint: Content<T>,
}

impl<T: Scalar> AdjointReport<T> {
    pub fn relative_gap(&self) -> f64 {
        relative_gap(self.content.value, self.adjoint.value)
    }
}

pub fn adjoint_content_check<T: Scalar>(a: &Matrix<T>) -> AdjointReport<T> {
    AdjointReport {
        content: content(a),
        adjoint: content(&a.transpose()),
    }
}
