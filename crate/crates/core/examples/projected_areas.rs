//! A parallelogram in R^3: the minors of its 3x2 matrix are the components
//! of the cross product, so the squared area is the sum of the squared areas
//! of its shadows on the three coordinate planes.

use kcontent::content::{projection_contents, pythagorean_check};
use kcontent::matrix::Matrix;
use kcontent::scalar::{Exact, Scalar};

fn main() -> kcontent::Result<()> {
    let (u, v) = ([2i64, -1, 3], [1i64, 4, -2]);
    let a = Matrix::<Exact>::from_columns(
        3,
        &[
            u.iter().map(|&x| Exact::from_i64(x)).collect(),
            v.iter().map(|&x| Exact::from_i64(x)).collect(),
        ],
    )?;
    let cross = [
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    ];
    println!("u x v = {cross:?}");
    for p in projection_contents(&a)? {
        println!(
            "shadow on plane {}: area {} (signed {})",
            p.subset, p.absolute, p.signed
        );
    }
    let report = pythagorean_check(&a)?;
    let cross_sq: i64 = cross.iter().map(|c| c * c).sum();
    println!(
        "|u x v|² = {cross_sq}, Σ shadows² = {}",
        report.minor_sq_sum
    );
    println!("area = {}", report.content);
    Ok(())
}
