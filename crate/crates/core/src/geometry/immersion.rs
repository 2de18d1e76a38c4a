use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Float;

/// `det(g)` below this is a broken sampler, not rounding.
const NEGATIVE_GRAM_LIMIT: f64 = -1e-12;

/// Source of the `n x k` Jacobian `df_p` of a map from `ℝᵏ` to `ℝⁿ`.
pub trait JacobianSampler: Send + Sync {
    fn param_dim(&self) -> usize;
    fn ambient_dim(&self) -> usize;
    fn jacobian(&self, p: &[f64]) -> Result<Matrix<Float>>;
}

/// Jacobian of an arbitrary map by central differences, with step
/// `ε^(1/3)·max(1, |pᵢ|)` along each axis.
pub struct CentralDifference<F> {
    map: F,
    param_dim: usize,
    ambient_dim: usize,
}

impl<F> CentralDifference<F>
where
    F: Fn(&[f64]) -> Vec<f64> + Send + Sync,
{
    pub fn new(param_dim: usize, ambient_dim: usize, map: F) -> Self {
        CentralDifference {
            map,
            param_dim,
            ambient_dim,
        }
    }
}

impl<F> JacobianSampler for CentralDifference<F>
where
    F: Fn(&[f64]) -> Vec<f64> + Send + Sync,
{
    fn param_dim(&self) -> usize {
        self.param_dim
    }

    fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    fn jacobian(&self, p: &[f64]) -> Result<Matrix<Float>> {
        let cbrt_eps = f64::EPSILON.cbrt();
        let mut columns = Vec::with_capacity(self.param_dim);
        let mut probe = p.to_vec();
        for i in 0..self.param_dim {
            let h = cbrt_eps * p[i].abs().max(1.0);
            probe[i] = p[i] + h;
            let fwd = (self.map)(&probe);
            probe[i] = p[i] - h;
            let back = (self.map)(&probe);
            probe[i] = p[i];
            if fwd.len() != self.ambient_dim || back.len() != self.ambient_dim {
                return Err(Error::BrokenSampler(format!(
                    "map returned {} coordinates, expected {}",
                    fwd.len(),
                    self.ambient_dim
                )));
            }
            columns.push(
                fwd.iter()
                    .zip(&back)
                    .map(|(f, b)| Float::new((f - b) / (2.0 * h)))
                    .collect::<Result<Vec<_>>>()
                    .map_err(|e| Error::BrokenSampler(e.to_string()))?,
            );
        }
        Matrix::from_columns(self.ambient_dim, &columns)
    }
}

/// A parametrized `k`-dimensional patch: a Jacobian sampler, a box of
/// parameters, and a midpoint-rule grid over that box.
#[derive(Clone)]
pub struct ImmersionSpec {
    sampler: Arc<dyn JacobianSampler>,
    domain: Vec<(f64, f64)>,
    resolution: Vec<usize>,
}

impl std::fmt::Debug for ImmersionSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ImmersionSpec")
            .field("param_dim", &self.sampler.param_dim())
            .field("ambient_dim", &self.sampler.ambient_dim())
            .field("domain", &self.domain)
            .field("resolution", &self.resolution)
            .finish()
    }
}

impl ImmersionSpec {
    pub fn new(
        sampler: Arc<dyn JacobianSampler>,
        domain: Vec<(f64, f64)>,
        resolution: Vec<usize>,
    ) -> Result<Self> {
        let k = sampler.param_dim();
        if domain.len() != k || resolution.len() != k {
            return Err(Error::DimensionMismatch(format!(
                "{k} parameters but {} intervals and {} resolutions",
                domain.len(),
                resolution.len()
            )));
        }
        for (axis, &(lo, hi)) in domain.iter().enumerate() {
            if !(lo.is_finite() && hi.is_finite() && lo < hi) {
                return Err(Error::InvalidArgument(format!(
                    "interval {} is degenerate: [{lo}, {hi}]",
                    axis + 1
                )));
            }
        }
        if let Some(axis) = resolution.iter().position(|&r| r == 0) {
            return Err(Error::InvalidArgument(format!(
                "resolution on axis {} must be at least 1",
                axis + 1
            )));
        }
        Ok(ImmersionSpec {
            sampler,
            domain,
            resolution,
        })
    }

    /// Same number of cells along every axis.
    pub fn uniform(
        sampler: Arc<dyn JacobianSampler>,
        domain: Vec<(f64, f64)>,
        resolution: usize,
    ) -> Result<Self> {
        let k = domain.len();
        Self::new(sampler, domain, vec![resolution; k])
    }

    pub fn param_dim(&self) -> usize {
        self.domain.len()
    }

    pub fn domain(&self) -> &[(f64, f64)] {
        &self.domain
    }

    pub fn resolution(&self) -> &[usize] {
        &self.resolution
    }

    /// Product of the interval lengths.
    pub fn domain_measure(&self) -> f64 {
        self.domain.iter().map(|(lo, hi)| hi - lo).product()
    }

    /// `√det(g)` at a parameter point, where `g = JᵗJ`.
    pub fn density(&self, p: &[f64]) -> Result<f64> {
        let (n, k) = (self.sampler.ambient_dim(), self.sampler.param_dim());
        let j = self.sampler.jacobian(p)?;
        if (j.rows(), j.cols()) != (n, k) {
            return Err(Error::BrokenSampler(format!(
                "jacobian is {}x{}, expected {n}x{k}",
                j.rows(),
                j.cols()
            )));
        }
        let det = j.gram().determinant().get();
        if det < NEGATIVE_GRAM_LIMIT {
            return Err(Error::BrokenSampler(format!(
                "det(g) = {det} at {p:?} is negative"
            )));
        }
        Ok(det.max(0.0).sqrt())
    }
}

/// Composite midpoint rule for `∫ √det(g) dx¹…dxᵏ` over the parameter box.
///
/// Cells are visited in lexicographic order of their grid index; the first
/// axis is split across threads and partial sums are added in order, so the
/// result does not depend on the thread count.
pub fn immersion_content(spec: &ImmersionSpec) -> Result<f64> {
    let k = spec.param_dim();
    let steps: Vec<f64> = spec
        .domain
        .iter()
        .zip(&spec.resolution)
        .map(|(&(lo, hi), &r)| (hi - lo) / r as f64)
        .collect();
    let cell_measure: f64 = steps.iter().product();
    if k == 0 {
        return spec.density(&[]);
    }
    let inner_cells: usize = spec.resolution[1..].iter().product();
    let midpoint = |axis: usize, j: usize| spec.domain[axis].0 + (j as f64 + 0.5) * steps[axis];

    let slabs: Vec<f64> = (0..spec.resolution[0])
        .into_par_iter()
        .map(|first| {
            let mut p = vec![0.0; k];
            p[0] = midpoint(0, first);
            let mut sum = 0.0;
            for mut flat in 0..inner_cells {
                for axis in (1..k).rev() {
                    let r = spec.resolution[axis];
                    p[axis] = midpoint(axis, flat % r);
                    flat /= r;
                }
                sum += spec.density(&p)?;
            }
            Ok(sum)
        })
        .collect::<Result<_>>()?;
    Ok(cell_measure * slabs.iter().sum::<f64>())
}
