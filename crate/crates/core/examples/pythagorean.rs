//! The squared volume of a parallelepiped equals the sum of the squared
//! volumes of its coordinate projections.

use kcontent::content::pythagorean_check;
use kcontent::matrix::Matrix;
use kcontent::scalar::{Exact, Float};

fn main() -> kcontent::Result<()> {
    // Three vectors spanning a 3-dimensional parallelepiped in R^5.
    let a = Matrix::<Exact>::from_i64_rows(&[
        &[1, 0, 2],
        &[-3, 1, 0],
        &[0, 4, 1],
        &[2, 2, -1],
        &[5, 0, 3],
    ]);
    let report = pythagorean_check(&a)?;
    for (subset, minor) in &report.minors {
        println!("projection onto {subset}: signed volume {minor}");
    }
    println!("det(AᵗA)          = {}", report.gram_det);
    println!("Σ det(A_I)²       = {}", report.minor_sq_sum);
    println!("residual          = {}", report.residual);
    println!("3-volume          = {}", report.content);

    let f = pythagorean_check(&a.to_float())?;
    println!("float residual    = {:e} (relative)", f.relative_residual());

    let g = Matrix::<Float>::from_i64_rows(&[&[1], &[2], &[2]]);
    println!("length of (1,2,2) = {}", pythagorean_check(&g)?.content);
    Ok(())
}
