//! Content is multiplicative when the image of the first map is the
//! orthogonal complement of the kernel of the second.

use kcontent::content::multiplicativity_check;
use kcontent::matrix::Matrix;
use kcontent::scalar::{Exact, Float};

fn main() -> kcontent::Result<()> {
    let l = Matrix::<Exact>::from_i64_rows(&[&[1, 0], &[2, 1], &[0, 3], &[1, 1], &[-1, 2]]);
    let e = Matrix::<Exact>::from_i64_rows(&[&[1, 2], &[0, 1], &[4, -1]]);
    let r = multiplicativity_check(&l, &e)?;
    println!(
        "exact: c(M∘L)² = {}, c(M)²c(L)² = {}",
        r.composite_sq, r.product_sq
    );

    let r = multiplicativity_check(&l.to_float(), &e.to_float())?;
    println!(
        "float: c(M∘L) = {}, c(M)c(L) = {}, gap {:e}",
        r.composite, r.product, r.relative_gap
    );

    let collapsed = Matrix::<Float>::from_i64_rows(&[&[1, 2], &[2, 4], &[3, 6]]);
    match multiplicativity_check(&l.to_float(), &collapsed) {
        Err(err) => println!("rank-deficient E rejected: {err}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
