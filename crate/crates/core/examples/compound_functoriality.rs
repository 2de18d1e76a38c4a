//! Compound matrices turn matrix products into products: the i-th compound
//! of AB is the i-th compound of A times that of B.

use kcontent::exterior::{compound, Multivector};
use kcontent::matrix::Matrix;
use kcontent::scalar::{Exact, Scalar};

fn main() -> kcontent::Result<()> {
    let a = Matrix::<Exact>::from_i64_rows(&[&[1, 2, 0], &[0, 1, -1], &[3, 0, 2], &[1, 1, 1]]);
    let b = Matrix::<Exact>::from_i64_rows(&[&[2, 1], &[0, -1], &[1, 3]]);
    let ab = a.matmul(&b)?;
    for i in 0..=2 {
        let lhs = compound(&ab, i)?;
        let rhs = compound(&a, i)?
            .matrix()
            .matmul(compound(&b, i)?.matrix())?;
        println!(
            "grade {i}: {}x{} compound, equal: {}",
            rhs.rows(),
            rhs.cols(),
            lhs.matrix() == &rhs
        );
    }
    println!("{}", compound(&ab, 2)?);

    // The compound maps wedges of vectors to wedges of their images.
    let x = vec![Exact::from_i64(1), Exact::from_i64(0), Exact::from_i64(2)];
    let y = vec![Exact::from_i64(-1), Exact::from_i64(1), Exact::from_i64(0)];
    let w = Multivector::wedge(3, &[x.clone(), y.clone()])?;
    let image = compound(&a, 2)?.apply(&w)?;
    let ax = a.matmul(&Matrix::from_columns(3, &[x, y])?)?;
    println!(
        "Λ₂(A)(x∧y) == Ax∧Ay: {}",
        image == Multivector::wedge_columns(&ax)?
    );
    print!("{image}");
    Ok(())
}
