//! Content of maps without full column rank: restrict to the orthogonal
//! complement of the kernel and measure the volume scale onto the image.

use kcontent::content::{adjoint_content_check, content};
use kcontent::matrix::Matrix;
use kcontent::scalar::Exact;

fn main() {
    // Rank 2: the third column is the sum of the first two.
    let a = Matrix::<Exact>::from_i64_rows(&[&[1, 0, 1], &[0, 1, 1], &[1, 1, 2], &[2, -1, 1]]);
    let c = content(&a);
    println!("rank {} content² {} content {}", c.rank, c.squared, c.value);

    let r = adjoint_content_check(&a);
    println!(
        "c(Aᵗ)² = {} (same as c(A)²: {})",
        r.adjoint.squared,
        r.adjoint.squared == c.squared
    );

    let zero = content(&Matrix::<Exact>::zeros(3, 2));
    println!(
        "zero map: content {} degenerate {}",
        zero.squared, zero.degenerate
    );
}
