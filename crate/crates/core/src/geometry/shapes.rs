//! Built-in parametrized curves and surfaces with analytic Jacobians.
//!
//! Specs are written `name(param=value,...)`, e.g. `sphere(r=2)` or
//! `helix(r=1,pitch=0.5,turns=3)`. Values are decimals or multiples of
//! `pi` (`pi`, `2pi`, `pi/2`, `1.5*pi`).

use std::collections::BTreeMap;
use std::f64::consts::{PI, TAU};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use super::immersion::{ImmersionSpec, JacobianSampler};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Float;

/// A parsed `name(param=value,...)` string.
#[derive(Debug, Clone, PartialEq)]
pub struct ShapeSpec {
    pub name: String,
    pub params: BTreeMap<String, f64>,
}

impl FromStr for ShapeSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (name, args) = match s.find('(') {
            Some(open) => {
                let args = s[open + 1..]
                    .strip_suffix(')')
                    .ok_or_else(|| Error::InvalidShape(format!("missing `)` in `{s}`")))?;
                (s[..open].trim(), args)
            }
            None => (s, ""),
        };
        if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
            return Err(Error::InvalidShape(format!("bad shape name in `{s}`")));
        }
        let mut params = BTreeMap::new();
        for part in args.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, value) = part.split_once('=').ok_or_else(|| {
                Error::InvalidShape(format!("expected `key=value`, got `{part}`"))
            })?;
            let key = key.trim().to_string();
            let value = parse_value(value.trim())
                .ok_or_else(|| Error::InvalidShape(format!("bad value for `{key}`: `{value}`")))?;
            if params.insert(key.clone(), value).is_some() {
                return Err(Error::InvalidShape(format!(
                    "parameter `{key}` given twice"
                )));
            }
        }
        Ok(ShapeSpec {
            name: name.to_ascii_lowercase(),
            params,
        })
    }
}

fn parse_value(v: &str) -> Option<f64> {
    let x = match v.find("pi") {
        None => v.parse::<f64>().ok()?,
        Some(pos) => {
            let coeff = v[..pos].trim_end_matches('*');
            let coeff = match coeff {
                "" => 1.0,
                "-" => -1.0,
                c => c.parse::<f64>().ok()?,
            };
            let rest = &v[pos + 2..];
            let div = match rest.strip_prefix('/') {
                Some(d) => d.parse::<f64>().ok()?,
                None if rest.is_empty() => 1.0,
                None => return None,
            };
            coeff * PI / div
        }
    };
    x.is_finite().then_some(x)
}

/// The catalogue of built-in immersions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Shape {
    /// `t ↦ t·(x, y, z)`, `t ∈ [0, 1]`.
    Segment { x: f64, y: f64, z: f64 },
    /// Arc of radius `r` through `angle` radians, starting on the x-axis.
    Circle { r: f64, angle: f64 },
    /// `t ↦ (r cos t, r sin t, pitch·t/2π)` for `turns` full turns.
    Helix { r: f64, pitch: f64, turns: f64 },
    /// `(x, y) ↦ (x, y, 0)` on `[0, w] × [0, h]`.
    Patch { w: f64, h: f64 },
    /// Round sphere of radius `r` in polar/azimuth coordinates.
    Sphere { r: f64 },
    /// Torus with tube radius `r` around a circle of radius `big_r`.
    Torus { big_r: f64, r: f64 },
    /// Graph of `z = a·x² + b·y²` over `[0, w] × [0, h]`.
    Graph { a: f64, b: f64, w: f64, h: f64 },
}

struct Params<'a> {
    shape: &'a str,
    given: BTreeMap<String, f64>,
}

impl Params<'_> {
    fn take(&mut self, key: &str, default: f64) -> f64 {
        self.given.remove(key).unwrap_or(default)
    }

    fn finish(self) -> Result<()> {
        match self.given.keys().next() {
            Some(k) => Err(Error::InvalidShape(format!(
                "unknown parameter `{k}` for {}",
                self.shape
            ))),
            None => Ok(()),
        }
    }
}

fn positive(name: &str, v: f64) -> Result<f64> {
    if v > 0.0 {
        Ok(v)
    } else {
        Err(Error::InvalidShape(format!(
            "`{name}` must be positive, got {v}"
        )))
    }
}

impl Shape {
    pub const NAMES: [&'static str; 8] = [
        "segment", "circle", "arc", "helix", "patch", "sphere", "torus", "graph",
    ];

    pub fn from_spec(spec: &ShapeSpec) -> Result<Shape> {
        let mut p = Params {
            shape: &spec.name,
            given: spec.params.clone(),
        };
        let shape = match spec.name.as_str() {
            "segment" => {
                let s = Shape::Segment {
                    x: p.take("x", 1.0),
                    y: p.take("y", 0.0),
                    z: p.take("z", 0.0),
                };
                if let Shape::Segment { x, y, z } = s {
                    positive("length", (x * x + y * y + z * z).sqrt())?;
                }
                s
            }
            "circle" | "arc" => {
                let default_angle = if spec.name == "arc" { PI / 2.0 } else { TAU };
                Shape::Circle {
                    r: positive("r", p.take("r", 1.0))?,
                    angle: positive("angle", p.take("angle", default_angle))?,
                }
            }
            "helix" => Shape::Helix {
                r: positive("r", p.take("r", 1.0))?,
                pitch: p.take("pitch", 1.0),
                turns: positive("turns", p.take("turns", 1.0))?,
            },
            "patch" => Shape::Patch {
                w: positive("w", p.take("w", 1.0))?,
                h: positive("h", p.take("h", 1.0))?,
            },
            "sphere" => Shape::Sphere {
                r: positive("r", p.take("r", 1.0))?,
            },
            "torus" => {
                let big_r = positive("R", p.take("R", 2.0))?;
                let r = positive("r", p.take("r", 1.0))?;
                if r >= big_r {
                    return Err(Error::InvalidShape(format!(
                        "torus needs r < R, got r={r}, R={big_r}"
                    )));
                }
                Shape::Torus { big_r, r }
            }
            "graph" => Shape::Graph {
                a: p.take("a", 1.0),
                b: p.take("b", 1.0),
                w: positive("w", p.take("w", 1.0))?,
                h: positive("h", p.take("h", 1.0))?,
            },
            other => {
                return Err(Error::InvalidShape(format!(
                    "unknown shape `{other}` (known: {})",
                    Shape::NAMES.join(", ")
                )))
            }
        };
        p.finish()?;
        Ok(shape)
    }

    pub fn parse(s: &str) -> Result<Shape> {
        Shape::from_spec(&s.parse()?)
    }

    pub fn param_dim(&self) -> usize {
        match self {
            Shape::Segment { .. } | Shape::Circle { .. } | Shape::Helix { .. } => 1,
            _ => 2,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        match self {
            Shape::Circle { .. } => 2,
            _ => 3,
        }
    }

    pub fn domain(&self) -> Vec<(f64, f64)> {
        match *self {
            Shape::Segment { .. } => vec![(0.0, 1.0)],
            Shape::Circle { angle, .. } => vec![(0.0, angle)],
            Shape::Helix { turns, .. } => vec![(0.0, TAU * turns)],
            Shape::Patch { w, h } | Shape::Graph { w, h, .. } => vec![(0.0, w), (0.0, h)],
            Shape::Sphere { .. } => vec![(0.0, PI), (0.0, TAU)],
            Shape::Torus { .. } => vec![(0.0, TAU), (0.0, TAU)],
        }
    }

    /// Closed-form length or area, where one is known.
    pub fn analytic_content(&self) -> Option<f64> {
        match *self {
            Shape::Segment { x, y, z } => Some((x * x + y * y + z * z).sqrt()),
            Shape::Circle { r, angle } => Some(r * angle),
            Shape::Helix { r, pitch, turns } => {
                Some(TAU * turns * (r * r + (pitch / TAU).powi(2)).sqrt())
            }
            Shape::Patch { w, h } => Some(w * h),
            Shape::Sphere { r } => Some(4.0 * PI * r * r),
            Shape::Torus { big_r, r } => Some(4.0 * PI * PI * big_r * r),
            Shape::Graph { .. } => None,
        }
    }

    /// Midpoint-rule spec with `resolution` cells along each parameter axis.
    pub fn immersion(&self, resolution: usize) -> Result<ImmersionSpec> {
        ImmersionSpec::uniform(Arc::new(*self), self.domain(), resolution)
    }

    /// Point on the shape, used for central-difference cross-checks.
    pub fn point(&self, p: &[f64]) -> Vec<f64> {
        match *self {
            Shape::Segment { x, y, z } => vec![p[0] * x, p[0] * y, p[0] * z],
            Shape::Circle { r, .. } => vec![r * p[0].cos(), r * p[0].sin()],
            Shape::Helix { r, pitch, .. } => {
                vec![r * p[0].cos(), r * p[0].sin(), pitch * p[0] / TAU]
            }
            Shape::Patch { .. } => vec![p[0], p[1], 0.0],
            Shape::Sphere { r } => {
                let (st, ct) = p[0].sin_cos();
                let (sp, cp) = p[1].sin_cos();
                vec![r * st * cp, r * st * sp, r * ct]
            }
            Shape::Torus { big_r, r } => {
                let (su, cu) = p[0].sin_cos();
                let (sv, cv) = p[1].sin_cos();
                let rho = big_r + r * cv;
                vec![rho * cu, rho * su, r * sv]
            }
            Shape::Graph { a, b, .. } => vec![p[0], p[1], a * p[0] * p[0] + b * p[1] * p[1]],
        }
    }

    fn columns(&self, p: &[f64]) -> Vec<Vec<f64>> {
        match *self {
            Shape::Segment { x, y, z } => vec![vec![x, y, z]],
            Shape::Circle { r, .. } => {
                let (s, c) = p[0].sin_cos();
                vec![vec![-r * s, r * c]]
            }
            Shape::Helix { r, pitch, .. } => {
                let (s, c) = p[0].sin_cos();
                vec![vec![-r * s, r * c, pitch / TAU]]
            }
            Shape::Patch { .. } => vec![vec![1.0, 0.0, 0.0], vec![0.0, 1.0, 0.0]],
            Shape::Sphere { r } => {
                let (st, ct) = p[0].sin_cos();
                let (sp, cp) = p[1].sin_cos();
                vec![
                    vec![r * ct * cp, r * ct * sp, -r * st],
                    vec![-r * st * sp, r * st * cp, 0.0],
                ]
            }
            Shape::Torus { big_r, r } => {
                let (su, cu) = p[0].sin_cos();
                let (sv, cv) = p[1].sin_cos();
                let rho = big_r + r * cv;
                vec![
                    vec![-rho * su, rho * cu, 0.0],
                    vec![-r * sv * cu, -r * sv * su, r * cv],
                ]
            }
            Shape::Graph { a, b, .. } => vec![
                vec![1.0, 0.0, 2.0 * a * p[0]],
                vec![0.0, 1.0, 2.0 * b * p[1]],
            ],
        }
    }
}

impl JacobianSampler for Shape {
    fn param_dim(&self) -> usize {
        Shape::param_dim(self)
    }

    fn ambient_dim(&self) -> usize {
        Shape::ambient_dim(self)
    }

    fn jacobian(&self, p: &[f64]) -> Result<Matrix<Float>> {
        let cols = self
            .columns(p)
            .into_iter()
            .map(|c| c.into_iter().map(Float::new).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_columns(Shape::ambient_dim(self), &cols)
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Shape::Segment { x, y, z } => write!(f, "segment(x={x},y={y},z={z})"),
            Shape::Circle { r, angle } => write!(f, "circle(r={r},angle={angle})"),
            Shape::Helix { r, pitch, turns } => {
                write!(f, "helix(r={r},pitch={pitch},turns={turns})")
            }
            Shape::Patch { w, h } => write!(f, "patch(w={w},h={h})"),
            Shape::Sphere { r } => write!(f, "sphere(r={r})"),
            Shape::Torus { big_r, r } => write!(f, "torus(R={big_r},r={r})"),
            Shape::Graph { a, b, w, h } => write!(f, "graph(a={a},b={b},w={w},h={h})"),
        }
    }
}
