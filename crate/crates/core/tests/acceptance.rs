//! Acceptance gate. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails.

use std::f64::consts::PI;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use kcontent::content::{content, multiplicativity_check, pythagorean_check};
use kcontent::exterior::compound;
use kcontent::geometry::{de_gua_check, immersion_content, Shape};
use kcontent::matrix::Matrix;
use kcontent::scalar::{Exact, Float, Scalar};
use kcontent::verify::cofactor_determinant;
use nalgebra::{DMatrix, SymmetricEigen};
use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;

fn ints<R: Rng>(rng: &mut R, n: usize, k: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    (0..n)
        .map(|_| (0..k).map(|_| rng.random_range(lo..=hi)).collect())
        .collect()
}

fn exact_of(rows: &[Vec<i64>]) -> Matrix<Exact> {
    Matrix::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|&x| Exact::from_i64(x)).collect())
            .collect(),
    )
    .unwrap()
}

fn float_of(rows: &[Vec<f64>]) -> Matrix<Float> {
    Matrix::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|&x| Float::new(x).unwrap()).collect())
            .collect(),
    )
    .unwrap()
}

/// Integer determinant by fraction-free elimination.
fn det_int(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    let (mut negate, mut prev) = (false, BigInt::from(1));
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    match n {
        0 => BigInt::from(1),
        _ if negate => -&a[n - 1][n - 1],
        _ => a[n - 1][n - 1].clone(),
    }
}

/// `det(AᵗA)` and `Σ det(A_I)²` over row subsets enumerated by bitmask,
/// in integer arithmetic.
fn integer_oracle(a: &[Vec<i64>]) -> (BigInt, BigInt) {
    let (n, k) = (a.len(), a[0].len());
    let mut sum = BigInt::zero();
    for mask in 0u32..1 << n {
        if mask.count_ones() as usize != k {
            continue;
        }
        let sub: Vec<Vec<BigInt>> = (0..n)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| a[i].iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        let d = det_int(sub);
        sum += &d * &d;
    }
    let gram: Vec<Vec<BigInt>> = (0..k)
        .map(|p| {
            (0..k)
                .map(|q| BigInt::from((0..n).map(|i| a[i][p] * a[i][q]).sum::<i64>()))
                .collect()
        })
        .collect();
    (det_int(gram), sum)
}

fn c1_exact_theorem() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for trial in 0..500 {
        let n = rng.random_range(1..=10);
        let k = rng.random_range(1..=n);
        let rows = ints(&mut rng, n, k, -9, 9);
        let report = pythagorean_check(&exact_of(&rows)).map_err(|e| e.to_string())?;
        let (gram, minors) = integer_oracle(&rows);
        if !report.residual.is_zero()
            || report.gram_det != Exact::from_integer(gram.clone())
            || report.minor_sq_sum != Exact::from_integer(minors.clone())
        {
            return Err(format!(
                "trial {trial} ({n}x{k}): library {} / {}, oracle {gram} / {minors}",
                report.gram_det, report.minor_sq_sum
            ));
        }
    }
    Ok("500 matrices, residual exactly 0, both sides match an integer oracle".into())
}

fn c2_float_theorem() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut worst = 0.0f64;
    for trial in 0..500 {
        let n = rng.random_range(1..=12);
        let k = rng.random_range(1..=n.min(6));
        let rows: Vec<Vec<f64>> = (0..n)
            .map(|_| (0..k).map(|_| rng.random_range(-1.0..=1.0)).collect())
            .collect();
        let r = pythagorean_check(&float_of(&rows)).map_err(|e| e.to_string())?;
        let rel = r.relative_residual();
        worst = worst.max(rel);
        if rel > 1e-10 {
            return Err(format!(
                "trial {trial} ({n}x{k}): relative residual {rel:e}"
            ));
        }
    }
    Ok(format!("500 matrices, worst relative residual {worst:.3e}"))
}

/// Exact triples `(A, B)` with `A` n x m, `B` m x k, `n, m, k ≤ 6`.
fn triples() -> Vec<(Matrix<Exact>, Matrix<Exact>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    (0..200)
        .map(|_| {
            let (n, m, k) = (
                rng.random_range(1..=6),
                rng.random_range(1..=6),
                rng.random_range(1..=6),
            );
            let a = exact_of(&ints(&mut rng, n, m, -5, 5));
            let b = exact_of(&ints(&mut rng, m, k, -5, 5));
            (a, b)
        })
        .collect()
}

fn c3_functoriality(corpus: &[(Matrix<Exact>, Matrix<Exact>)]) -> Check {
    let mut checks = 0;
    for (t, (a, b)) in corpus.iter().enumerate() {
        let ab = a.matmul(b).unwrap();
        for i in 0..=a.rows().min(a.cols()).min(b.cols()) {
            let lhs = compound(&ab, i).unwrap().into_matrix();
            let rhs = compound(a, i)
                .unwrap()
                .matrix()
                .matmul(compound(b, i).unwrap().matrix())
                .unwrap();
            if lhs != rhs {
                return Err(format!("triple {t}, grade {i}"));
            }
            checks += 1;
        }
    }
    Ok(format!("200 triples, {checks} grade checks, all exact"))
}

fn c4_adjoint(corpus: &[(Matrix<Exact>, Matrix<Exact>)]) -> Check {
    let mut checks = 0;
    for (t, (a, b)) in corpus.iter().enumerate() {
        for m in [a, b] {
            for i in 0..=m.rows().min(m.cols()) {
                let lhs = compound(&m.transpose(), i).unwrap().into_matrix();
                let rhs = compound(m, i).unwrap().matrix().transpose();
                if lhs != rhs {
                    return Err(format!("matrix from triple {t}, grade {i}"));
                }
                checks += 1;
            }
        }
    }
    Ok(format!("400 matrices, {checks} grade checks, all exact"))
}

fn c5_worked_examples() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut q = || Exact::new(rng.random_range(-50..=50), rng.random_range(1..=12)).unwrap();
    for t in 0..50 {
        let (a, b, c, d, e, f) = (q(), q(), q(), q(), q(), q());
        let m = Matrix::from_columns(
            3,
            &[
                vec![a.clone(), b.clone(), c.clone()],
                vec![d.clone(), e.clone(), f.clone()],
            ],
        )
        .unwrap();
        let r = pythagorean_check(&m).map_err(|e| e.to_string())?;
        let sq = |x: Exact| x.clone() * x;
        let expected = [
            ("{1,2}", sq(a.clone() * e.clone() - b.clone() * d.clone())),
            ("{1,3}", sq(a * f.clone() - c.clone() * d)),
            ("{2,3}", sq(b * f - c * e)),
        ];
        for ((subset, minor), (name, want)) in r.minors.iter().zip(&expected) {
            if subset.to_string() != *name || sq(minor.clone()) != *want {
                return Err(format!("instantiation {t}: minor {subset} = {minor}"));
            }
        }
        if !r.residual.is_zero() {
            return Err(format!("instantiation {t}: residual {}", r.residual));
        }
    }

    let grid = [1e-3, 1.0, 1e3];
    let mut worst = 0.0f64;
    for &a in &grid {
        for &b in &grid {
            for &c in &grid {
                let r = de_gua_check(
                    Float::new(a).unwrap(),
                    Float::new(b).unwrap(),
                    Float::new(c).unwrap(),
                )
                .map_err(|e| e.to_string())?;
                let closed = 0.25 * (a * a * b * b + a * a * c * c + b * b * c * c);
                let rel_closed = (r.leg_sq_sum.get() - closed).abs() / closed;
                worst = worst.max(r.relative_residual).max(rel_closed);
                if r.relative_residual > 1e-12 || rel_closed > 1e-12 {
                    return Err(format!(
                        "de Gua ({a}, {b}, {c}): residual {:e}, vs closed form {rel_closed:e}",
                        r.relative_residual
                    ));
                }
            }
        }
    }

    let out = Command::new(env!("CARGO_BIN_EXE_kcontent"))
        .args(["degua", "1", "1", "1"])
        .output()
        .map_err(|e| e.to_string())?;
    let text = String::from_utf8_lossy(&out.stdout);
    if !out.status.success() || !text.lines().any(|l| l == "3/4 = 3/4") {
        return Err(format!("`degua 1 1 1` printed:\n{text}"));
    }
    Ok(format!(
        "50 symbolic instantiations; 27 de Gua grid points, worst {worst:.3e}; `degua 1 1 1` prints 3/4 = 3/4"
    ))
}

fn c6_multiplicativity() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut worst = 0.0f64;
    let mut done = 0;
    while done < 200 {
        let mut unit = |n: usize| -> Vec<Vec<f64>> {
            (0..n)
                .map(|_| (0..2).map(|_| rng.random_range(-1.0..=1.0)).collect())
                .collect()
        };
        let l = float_of(&unit(5));
        let e = float_of(&unit(3));
        if l.rank() < 2 || e.rank() < 2 {
            continue;
        }
        let r = multiplicativity_check(&l, &e).map_err(|e| e.to_string())?;
        let gap = (r.composite - r.product).abs();
        worst = worst.max(gap / r.composite);
        if gap > 1e-10 * r.composite {
            return Err(format!(
                "pair {done}: c(M∘L) = {}, c(M)c(L) = {}",
                r.composite, r.product
            ));
        }
        done += 1;
    }
    Ok(format!("200 pairs, worst relative gap {worst:.3e}"))
}

fn c7_rank_deficient() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut worst = 0.0f64;
    let mut done = 0;
    while done < 100 {
        let n = rng.random_range(2..=7);
        let k = rng.random_range(2..=7);
        let r = rng.random_range(1..n.min(k));
        let a = exact_of(&ints(&mut rng, n, r, -4, 4))
            .matmul(&exact_of(&ints(&mut rng, r, k, -4, 4)))
            .unwrap();
        let c = content(&a);
        if c.rank != r {
            // A factor came out rank-deficient; the product then has lower rank.
            continue;
        }
        let g = a.gram().into_matrix();
        let g = DMatrix::from_fn(k, k, |i, j| g.get(i, j).to_f64());
        let mut eig: Vec<f64> = SymmetricEigen::new(g).eigenvalues.iter().copied().collect();
        eig.sort_by(|x, y| y.total_cmp(x));
        let pdet: f64 = eig[..r].iter().product();
        let exact = c.squared.to_f64();
        let rel = (exact - pdet).abs() / exact;
        worst = worst.max(rel);
        if rel > 1e-8 {
            return Err(format!(
                "{n}x{k} rank {r}: exact {exact}, eigenvalues {pdet}"
            ));
        }
        done += 1;
    }
    Ok(format!(
        "100 rank-deficient products, worst relative gap {worst:.3e}"
    ))
}

fn c8_quadrature() -> Check {
    let measure = |spec: &str, res: usize| -> Result<(f64, f64), String> {
        let shape = Shape::parse(spec).map_err(|e| e.to_string())?;
        let v = immersion_content(&shape.immersion(res).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?;
        Ok((v, shape.analytic_content().unwrap()))
    };
    let (circle, _) = measure("circle(r=1)", 10_000)?;
    let circle_rel = (circle - 2.0 * PI).abs() / (2.0 * PI);
    if circle_rel > 1e-12 {
        return Err(format!("circle: relative error {circle_rel:e}"));
    }
    let mut errors = Vec::new();
    for res in [64, 128, 256, 512, 1024] {
        let (v, want) = measure("sphere(r=1)", res)?;
        if (want - 4.0 * PI).abs() > 1e-15 {
            return Err(format!("sphere analytic value {want}"));
        }
        errors.push((res, (v - want).abs()));
    }
    let sphere_rel = errors[3].1 / (4.0 * PI);
    if sphere_rel > 1e-4 {
        return Err(format!("sphere at 512: relative error {sphere_rel:e}"));
    }
    if errors.windows(2).any(|w| w[1].1 >= w[0].1) {
        return Err(format!("sphere errors not decreasing: {errors:?}"));
    }
    Ok(format!(
        "circle {circle_rel:.3e}; sphere@512 {sphere_rel:.3e}; sphere errors {}",
        errors
            .iter()
            .map(|(r, e)| format!("{r}:{e:.2e}"))
            .collect::<Vec<_>>()
            .join(" ")
    ))
}

fn c9_determinants() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for t in 0..1000 {
        let n = rng.random_range(1..=4);
        let rows = ints(&mut rng, n, n, -2, 2);
        let a = exact_of(&rows);
        let oracle = cofactor_determinant(&a);
        let bareiss = a.determinant().unwrap();
        let lu = a.to_float().determinant().unwrap().get();
        let want = oracle.to_f64();
        if bareiss != oracle || (lu - want).abs() > 1e-10 * want.abs().max(1.0) {
            return Err(format!(
                "sample {t}: {rows:?}: cofactor {oracle}, Bareiss {bareiss}, LU {lu}"
            ));
        }
    }
    let mut exhaustive = 0;
    for n in 1..=3usize {
        let cells = n * n;
        for code in 0..3usize.pow(cells as u32) {
            let mut c = code;
            let rows: Vec<Vec<i64>> = (0..n)
                .map(|_| {
                    (0..n)
                        .map(|_| {
                            let v = (c % 3) as i64 - 1;
                            c /= 3;
                            v
                        })
                        .collect()
                })
                .collect();
            let a = exact_of(&rows);
            let oracle = cofactor_determinant(&a);
            let lu = a.to_float().determinant().unwrap().get();
            if a.determinant().unwrap() != oracle || lu != oracle.to_f64() {
                return Err(format!("{rows:?}: cofactor {oracle}, LU {lu}"));
            }
            exhaustive += 1;
        }
    }
    Ok(format!(
        "1000 sampled, {exhaustive} exhaustive (Bareiss and LU exact)"
    ))
}

fn main() -> ExitCode {
    let corpus = triples();
    type Criterion<'a> = (&'a str, Option<Duration>, Box<dyn Fn() -> Check + 'a>);
    let criteria: Vec<Criterion> = vec![
        (
            "1 exact sum of squared minors",
            Some(Duration::from_secs(30)),
            Box::new(c1_exact_theorem),
        ),
        (
            "2 float sum of squared minors",
            Some(Duration::from_secs(10)),
            Box::new(c2_float_theorem),
        ),
        (
            "3 compound functoriality",
            Some(Duration::from_secs(30)),
            Box::new(|| c3_functoriality(&corpus)),
        ),
        (
            "4 compound adjoint law",
            None,
            Box::new(|| c4_adjoint(&corpus)),
        ),
        (
            "5 worked examples and de Gua",
            None,
            Box::new(c5_worked_examples),
        ),
        (
            "6 content multiplicativity",
            None,
            Box::new(c6_multiplicativity),
        ),
        (
            "7 rank-deficient content",
            None,
            Box::new(c7_rank_deficient),
        ),
        ("8 quadrature", None, Box::new(c8_quadrature)),
        ("9 determinant oracle", None, Box::new(c9_determinants)),
    ];
    let mut failed = 0;
    for (name, limit, run) in &criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match (outcome, limit) {
            (Ok(_), Some(l)) if elapsed > *l => Err(format!("took {elapsed:.2?}, limit {l:?}")),
            (o, _) => o,
        };
        match outcome {
            Ok(detail) => println!("PASS criterion {name}: {detail} [{elapsed:.2?}]"),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {name}: {detail} [{elapsed:.2?}]");
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
