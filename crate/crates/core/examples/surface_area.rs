//! Arc length and surface area by integrating √det(g) of the first
//! fundamental form over a parameter box.

use kcontent::geometry::{immersion_content, Shape};

fn main() -> kcontent::Result<()> {
    for spec in [
        "circle(r=1)",
        "arc(r=2)",
        "helix(r=1,pitch=0.5,turns=3)",
        "sphere(r=1)",
        "torus(R=3,r=1)",
        "graph(a=1,b=0.5)",
    ] {
        let shape = Shape::parse(spec)?;
        for res in [32, 128, 512] {
            let v = immersion_content(&shape.immersion(res)?)?;
            match shape.analytic_content() {
                Some(a) => println!(
                    "{shape} @{res}: {v:.12} (exact {a:.12}, error {:.2e})",
                    (v - a).abs() / a
                ),
                None => println!("{shape} @{res}: {v:.12}"),
            }
        }
    }
    Ok(())
}
