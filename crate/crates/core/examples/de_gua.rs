//! de Gua's theorem: for a right-angled tetrahedron the squared area of the
//! slanted face is the sum of the squared areas of the other three.

use kcontent::geometry::{de_gua_check, Simplex};
use kcontent::matrix::Matrix;
use kcontent::scalar::{Exact, Float, Scalar};

fn main() -> kcontent::Result<()> {
    let r = de_gua_check(Exact::from_i64(1), Exact::from_i64(1), Exact::from_i64(1))?;
    println!("{} = {}", r.hyp_sq, r.leg_sq_sum);

    let r = de_gua_check(Exact::from_i64(3), Exact::from_i64(4), Exact::from_i64(5))?;
    println!("legs 3,4,5: {} = {}", r.hyp_sq, r.leg_sq_sum);

    for (a, b, c) in [(1e-3, 1.0, 1e3), (0.5, 7.25, 120.0)] {
        let r = de_gua_check(Float::new(a)?, Float::new(b)?, Float::new(c)?)?;
        println!(
            "legs {a},{b},{c}: relative residual {:e}",
            r.relative_residual
        );
    }

    let tet = Matrix::<Exact>::from_i64_rows(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
    println!(
        "unit tetrahedron volume² = {}",
        Simplex::from_rows(&tet)?.content_squared()
    );
    Ok(())
}
