//! Lexicographic k-subsets index the basis of the k-th exterior power.

use kcontent::subsets::{binomial, k_subsets, rank, unrank, SubsetElements};

fn main() -> kcontent::Result<()> {
    println!("C(5,3) = {}", binomial(5, 3)?);
    for s in k_subsets(5, 3)? {
        println!("rank {:>2}: {s}", s.rank());
    }
    let s = unrank(10, 4, 100)?;
    println!("subset 100 of the 4-subsets of 1..10 is {s}");
    let SubsetElements(e) = "{2,5,7,9}".parse()?;
    println!("{{2,5,7,9}} has rank {}", rank(10, &e)?);
    match binomial(200, 100) {
        Err(err) => println!("C(200,100): {err}"),
        Ok(v) => println!("C(200,100) = {v}"),
    }
    Ok(())
}
