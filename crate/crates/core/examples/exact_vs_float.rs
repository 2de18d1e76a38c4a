//! The same kernels run in exact rational and binary64 arithmetic.

use kcontent::content::pythagorean_check;
use kcontent::matrix::AnyMatrix;
use kcontent::text::{parse_any, ModeChoice};

const INPUT: &str = "
# a nearly flat parallelogram
1        1
1        1.000001
0.000001 0
";

fn main() -> kcontent::Result<()> {
    for choice in [ModeChoice::Auto, ModeChoice::Float] {
        match parse_any(INPUT, choice)? {
            AnyMatrix::Exact(m) => {
                let r = pythagorean_check(&m)?;
                println!("exact: det(AᵗA) = {}, residual {}", r.gram_det, r.residual);
            }
            AnyMatrix::Float(m) => {
                let r = pythagorean_check(&m)?;
                println!(
                    "float: det(AᵗA) = {}, Σ minors² = {}, relative residual {:e}",
                    r.gram_det,
                    r.minor_sq_sum,
                    r.relative_residual()
                );
            }
        }
    }
    Ok(())
}
