//! Any smooth map can be measured: Jacobians come from central differences.

use std::f64::consts::PI;
use std::sync::Arc;

use kcontent::geometry::{immersion_content, CentralDifference, ImmersionSpec};

fn main() -> kcontent::Result<()> {
    // Catenoid x = cosh(v) cos u, y = cosh(v) sin u, z = v.
    let catenoid = CentralDifference::new(2, 3, |p: &[f64]| {
        let (u, v) = (p[0], p[1]);
        vec![v.cosh() * u.cos(), v.cosh() * u.sin(), v]
    });
    // Area over v in [-1, 1] is π(2 + sinh 2).
    let exact = PI * (2.0 + 2f64.sinh());
    let spec = ImmersionSpec::new(
        Arc::new(catenoid),
        vec![(0.0, 2.0 * PI), (-1.0, 1.0)],
        vec![64, 256],
    )?;
    let area = immersion_content(&spec)?;
    println!(
        "catenoid area {area:.10}, exact {exact:.10}, error {:.2e}",
        (area - exact).abs() / exact
    );

    // A curve in R^4: (cos t, sin t, cos 2t, sin 2t) has speed √5.
    let curve = CentralDifference::new(1, 4, |p: &[f64]| {
        let t = p[0];
        vec![t.cos(), t.sin(), (2.0 * t).cos(), (2.0 * t).sin()]
    });
    let spec = ImmersionSpec::uniform(Arc::new(curve), vec![(0.0, 2.0 * PI)], 1000)?;
    println!(
        "curve length {:.10}, exact {:.10}",
        immersion_content(&spec)?,
        2.0 * PI * 5f64.sqrt()
    );
    Ok(())
}
