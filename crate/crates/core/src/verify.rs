//! Seeded randomized checks of the identities this crate implements.
//!
//! Trial `t` of a run with seed `s` draws from its own generator seeded with
//! `s + t`, so any failing trial can be replayed alone with
//! `--trials 1 --seed <s + t>`.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::content::{
    adjoint_content_check, content, multiplicativity_check, pythagorean_check,
    FLOAT_RELATIVE_TOLERANCE,
};
use crate::error::{Error, Result};
use crate::exterior::compound;
use crate::geometry::de_gua_check;
use crate::matrix::Matrix;
use crate::scalar::{Exact, Float, Scalar};

/// Relative tolerance for the de Gua suite.
pub const DE_GUA_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    /// Exact `det(AᵗA) = Σ det(A_I)²`, `n ≤ 10`, `k ≤ 5`, entries in `[-9, 9]`.
    Pythagorean,
    /// Same identity in floats, `n ≤ 12`, `k ≤ 6`, entries in `[-1, 1]`.
    PythagoreanFloat,
    /// `Λᵢ(AB) = Λᵢ(A)Λᵢ(B)` exactly, all grades.
    Functoriality,
    /// `Λᵢ(Aᵗ) = Λᵢ(A)ᵗ` exactly, all grades.
    Adjoint,
    /// `c(M∘L) = c(M)c(L)` for `M = E·Lᵗ`, floats.
    Multiplicativity,
    /// de Gua's theorem on log-uniform legs in `[1e-3, 1e3]`.
    DeGua,
    /// Rank-deficient content agrees for `A` and `Aᵗ`.
    RankContent,
    /// Determinants against cofactor expansion.
    Determinant,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Pythagorean,
        Suite::PythagoreanFloat,
        Suite::Functoriality,
        Suite::Adjoint,
        Suite::Multiplicativity,
        Suite::DeGua,
        Suite::RankContent,
        Suite::Determinant,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Pythagorean => "pythagorean",
            Suite::PythagoreanFloat => "pythagorean-float",
            Suite::Functoriality => "functoriality",
            Suite::Adjoint => "adjoint",
            Suite::Multiplicativity => "multiplicativity",
            Suite::DeGua => "degua",
            Suite::RankContent => "rank-content",
            Suite::Determinant => "determinant",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| {
                let known: Vec<_> = Suite::ALL.iter().map(|s| s.name()).collect();
                Error::InvalidArgument(format!("unknown suite `{s}` (known: {})", known.join(", ")))
            })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrialFailure {
    pub trial: u64,
    pub seed: u64,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteOutcome {
    pub suite: Suite,
    pub seed: u64,
    pub trials: u64,
    pub passed: u64,
    pub failures: Vec<TrialFailure>,
}

impl SuiteOutcome {
    pub fn all_passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Runs `trials` independent trials of `suite`.
pub fn run_suite(suite: Suite, trials: u64, seed: u64) -> SuiteOutcome {
    let mut failures = Vec::new();
    for trial in 0..trials {
        let trial_seed = seed.wrapping_add(trial);
        let mut rng = ChaCha8Rng::seed_from_u64(trial_seed);
        if let Err(detail) = run_trial(suite, &mut rng) {
            failures.push(TrialFailure {
                trial,
                seed: trial_seed,
                detail,
            });
        }
    }
    SuiteOutcome {
        suite,
        seed,
        trials,
        passed: trials - failures.len() as u64,
        failures,
    }
}

type TrialResult = std::result::Result<(), String>;

fn run_trial(suite: Suite, rng: &mut ChaCha8Rng) -> TrialResult {
    match suite {
        Suite::Pythagorean => {
            let n = rng.random_range(1..=10);
            let k = rng.random_range(1..=n.min(5));
            let a = random_integer_matrix(rng, n, k, 9);
            let r = pythagorean_check(&a).map_err(|e| e.to_string())?;
            ensure(r.residual.is_zero(), || {
                format!("{n}x{k}: residual {} for\n{a}", r.residual)
            })
        }
        Suite::PythagoreanFloat => {
            let n = rng.random_range(1..=12);
            let k = rng.random_range(1..=n.min(6));
            let a = random_unit_matrix(rng, n, k);
            let r = pythagorean_check(&a).map_err(|e| e.to_string())?;
            ensure(r.relative_residual() <= FLOAT_RELATIVE_TOLERANCE, || {
                format!("{n}x{k}: relative residual {:e}", r.relative_residual())
            })
        }
        Suite::Functoriality => {
            let (n, m, k) = (
                rng.random_range(1..=6),
                rng.random_range(1..=6),
                rng.random_range(1..=6),
            );
            let a = random_integer_matrix(rng, n, m, 9);
            let b = random_integer_matrix(rng, m, k, 9);
            let ab = a.matmul(&b).map_err(|e| e.to_string())?;
            for i in 0..=n.min(m).min(k) {
                let lhs = compound(&ab, i).map_err(|e| e.to_string())?;
                let rhs = compound(&a, i)
                    .and_then(|ca| ca.matrix().matmul(compound(&b, i)?.matrix()))
                    .map_err(|e| e.to_string())?;
                ensure(lhs.matrix() == &rhs, || {
                    format!("grade {i} differs for A {n}x{m}, B {m}x{k}")
                })?;
            }
            Ok(())
        }
        Suite::Adjoint => {
            let (n, k) = (rng.random_range(1..=6), rng.random_range(1..=6));
            let a = random_integer_matrix(rng, n, k, 9);
            for i in 0..=n.min(k) {
                let lhs = compound(&a.transpose(), i).map_err(|e| e.to_string())?;
                let rhs = compound(&a, i)
                    .map_err(|e| e.to_string())?
                    .matrix()
                    .transpose();
                ensure(lhs.matrix() == &rhs, || {
                    format!("grade {i} differs for {n}x{k}")
                })?;
            }
            Ok(())
        }
        Suite::Multiplicativity => {
            let l = full_rank_unit_matrix(rng, 5, 2);
            let e = full_rank_unit_matrix(rng, 3, 2);
            let r = multiplicativity_check(&l, &e).map_err(|e| e.to_string())?;
            ensure(r.relative_gap <= FLOAT_RELATIVE_TOLERANCE, || {
                format!(
                    "c(M∘L) = {}, c(M)c(L) = {}, gap {:e}",
                    r.composite, r.product, r.relative_gap
                )
            })
        }
        Suite::DeGua => {
            let mut leg = || Float::new(10f64.powf(rng.random_range(-3.0..=3.0))).expect("finite");
            let (a, b, c) = (leg(), leg(), leg());
            let r = de_gua_check(a, b, c).map_err(|e| e.to_string())?;
            ensure(r.relative_residual <= DE_GUA_TOLERANCE, || {
                format!(
                    "({a}, {b}, {c}): relative residual {:e}",
                    r.relative_residual
                )
            })
        }
        Suite::RankContent => {
            let n = rng.random_range(2..=6);
            let k = rng.random_range(2..=6);
            let r = rng.random_range(1..n.min(k));
            let a = random_integer_matrix(rng, n, r, 5)
                .matmul(&random_integer_matrix(rng, r, k, 5))
                .map_err(|e| e.to_string())?;
            let report = adjoint_content_check(&a);
            let direct = content(&a);
            ensure(report.content.squared == report.adjoint.squared, || {
                format!(
                    "c(A)² = {}, c(Aᵗ)² = {}",
                    report.content.squared, report.adjoint.squared
                )
            })?;
            ensure(direct.rank <= r, || {
                format!("rank {} exceeds {r}", direct.rank)
            })
        }
        Suite::Determinant => {
            let n = rng.random_range(1..=4);
            let a = random_integer_matrix(rng, n, n, 2);
            let oracle = cofactor_determinant(&a);
            let exact = a.determinant().map_err(|e| e.to_string())?;
            let float = a.to_float().determinant().map_err(|e| e.to_string())?;
            ensure(exact == oracle, || {
                format!("Bareiss {exact} vs cofactor {oracle}")
            })?;
            let gap = (float.get() - oracle.to_f64()).abs();
            ensure(gap <= 1e-10 * oracle.to_f64().abs().max(1.0), || {
                format!("LU {float} vs cofactor {oracle}")
            })
        }
    }
}

fn ensure(ok: bool, detail: impl FnOnce() -> String) -> TrialResult {
    if ok {
        Ok(())
    } else {
        Err(detail())
    }
}

/// Entries drawn uniformly from `[-bound, bound]`.
pub fn random_integer_matrix<R: Rng>(rng: &mut R, n: usize, k: usize, bound: i64) -> Matrix<Exact> {
    let data = (0..n * k)
        .map(|_| Exact::from_i64(rng.random_range(-bound..=bound)))
        .collect();
    Matrix::new(n, k, data).expect("n*k entries")
}

/// Entries drawn uniformly from `[-1, 1]`.
pub fn random_unit_matrix<R: Rng>(rng: &mut R, n: usize, k: usize) -> Matrix<Float> {
    let data = (0..n * k)
        .map(|_| Float::new(rng.random_range(-1.0..=1.0)).expect("finite"))
        .collect();
    Matrix::new(n, k, data).expect("n*k entries")
}

/// Redraws until the columns are numerically independent.
pub fn full_rank_unit_matrix<R: Rng>(rng: &mut R, n: usize, k: usize) -> Matrix<Float> {
    loop {
        let m = random_unit_matrix(rng, n, k);
        if m.rank() == k {
            return m;
        }
    }
}

/// Laplace expansion along the first row. Exponential time; an oracle only.
pub fn cofactor_determinant<T: Scalar>(m: &Matrix<T>) -> T {
    let n = m.rows();
    if n == 0 {
        return T::one();
    }
    let mut det = T::zero();
    for j in 0..n {
        let sub_data: Vec<T> = (1..n)
            .flat_map(|i| (0..n).filter(move |&c| c != j).map(move |c| (i, c)))
            .map(|(i, c)| m.get(i, c).clone())
            .collect();
        let sub = Matrix::new(n - 1, n - 1, sub_data).expect("square minor");
        let term = m.get(0, j).clone() * cofactor_determinant(&sub);
        det = if j % 2 == 0 { det + term } else { det - term };
    }
    det
}
