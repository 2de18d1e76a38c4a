//! Lexicographically ranked `k`-subsets of `{1, ..., n}`.
//!
//! Subsets index both the basis blades `e_I` of a fixed exterior power and
//! the row/column selections of matrix minors. Elements are 1-based, ranks
//! are 0-based positions in lexicographic order.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Exact binomial coefficient, with overflow reported rather than wrapped.
pub fn binomial(n: usize, k: usize) -> Result<usize> {
    if k > n {
        return Err(Error::SubsetTooLarge { n, k });
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc is C(n, i) here, so the division is exact.
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return Err(Error::Overflow { n, k });
        }
    }
    usize::try_from(acc).map_err(|_| Error::Overflow { n, k })
}

/// Like [`binomial`] but returns 0 instead of an error when `k > n`.
fn choose_or_zero(n: usize, k: usize) -> Result<usize> {
    if k > n {
        Ok(0)
    } else {
        binomial(n, k)
    }
}

/// A sorted subset of `{1, ..., n}` together with its lexicographic rank
/// among all subsets of the same size.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubsetIndex {
    n: usize,
    elements: Vec<usize>,
    rank: usize,
}

impl SubsetIndex {
    /// Builds a subset from strictly increasing 1-based elements.
    pub fn new(n: usize, elements: Vec<usize>) -> Result<Self> {
        if elements.len() > n {
            return Err(Error::SubsetTooLarge {
                n,
                k: elements.len(),
            });
        }
        for (pos, &e) in elements.iter().enumerate() {
            if e == 0 || e > n {
                return Err(Error::InvalidSubset(format!(
                    "element {e} is outside {{1..{n}}}"
                )));
            }
            if pos > 0 && elements[pos - 1] >= e {
                return Err(Error::InvalidSubset(format!(
                    "elements must be strictly increasing, got {} before {e}",
                    elements[pos - 1]
                )));
            }
        }
        let rank = lex_rank(n, &elements)?;
        Ok(SubsetIndex { n, elements, rank })
    }

    /// The subset `{1, ..., k}`.
    pub fn leading(n: usize, k: usize) -> Result<Self> {
        Self::new(n, (1..=k).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// 0-based positions, convenient for indexing matrices.
    pub fn zero_based(&self) -> impl Iterator<Item = usize> + '_ {
        self.elements.iter().map(|e| e - 1)
    }
}

impl fmt::Display for SubsetIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.elements.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

/// Parses the `{1,3,4}` form. The ambient size is not part of the text, so
/// the result is a bare element list; pair it with `n` via [`SubsetIndex::new`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetElements(pub Vec<usize>);

impl FromStr for SubsetElements {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .ok_or_else(|| Error::InvalidSubset(format!("expected `{{...}}`, got `{s}`")))?;
        if inner.trim().is_empty() {
            return Ok(SubsetElements(Vec::new()));
        }
        inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidSubset(format!("bad element `{}`", t.trim())))
            })
            .collect::<Result<Vec<_>>>()
            .map(SubsetElements)
    }
}

fn lex_rank(n: usize, elements: &[usize]) -> Result<usize> {
    let k = elements.len();
    let mut rank = 0usize;
    let mut prev = 0usize;
    for (j, &e) in elements.iter().enumerate() {
        // Count subsets that agree on the first j elements but have a smaller
        // (j+1)-th element t; each leaves k-j-1 elements to pick from {t+1..n}.
        for t in prev + 1..e {
            rank += choose_or_zero(n - t, k - j - 1)?;
        }
        prev = e;
    }
    Ok(rank)
}

/// Inverse of the lexicographic rank.
pub fn unrank(n: usize, k: usize, rank: usize) -> Result<SubsetIndex> {
    let count = binomial(n, k)?;
    if rank >= count {
        return Err(Error::RankOutOfRange { n, k, rank, count });
    }
    let mut remaining = rank;
    let mut elements = Vec::with_capacity(k);
    let mut next = 1usize;
    for j in 0..k {
        loop {
            let block = choose_or_zero(n - next, k - j - 1)?;
            if remaining < block {
                break;
            }
            remaining -= block;
            next += 1;
        }
        elements.push(next);
        next += 1;
    }
    Ok(SubsetIndex { n, elements, rank })
}

/// Lexicographic rank of a subset given as plain elements.
pub fn rank(n: usize, elements: &[usize]) -> Result<usize> {
    SubsetIndex::new(n, elements.to_vec()).map(|s| s.rank)
}

/// Iterator over the `k`-subsets of `{1..n}` in lexicographic order.
#[derive(Debug, Clone)]
pub struct KSubsets {
    n: usize,
    current: Option<Vec<usize>>,
    rank: usize,
}

impl Iterator for KSubsets {
    type Item = SubsetIndex;

    fn next(&mut self) -> Option<SubsetIndex> {
        let cur = self.current.take()?;
        let out = SubsetIndex {
            n: self.n,
            elements: cur.clone(),
            rank: self.rank,
        };
        self.rank += 1;

        let k = cur.len();
        let mut succ = cur;
        // Rightmost position that can still move up.
        let pivot = (0..k).rev().find(|&i| succ[i] < self.n - (k - 1 - i));
        if let Some(i) = pivot {
            succ[i] += 1;
            for j in i + 1..k {
                succ[j] = succ[j - 1] + 1;
            }
            self.current = Some(succ);
        }
        Some(out)
    }
}

/// Lazily enumerates the `k`-subsets of `{1..n}`.
pub fn iter_k_subsets(n: usize, k: usize) -> Result<KSubsets> {
    if k > n {
        return Err(Error::SubsetTooLarge { n, k });
    }
    Ok(KSubsets {
        n,
        current: Some((1..=k).collect()),
        rank: 0,
    })
}

/// All `k`-subsets of `{1..n}` in lexicographic order, each carrying its rank.
pub fn k_subsets(n: usize, k: usize) -> Result<Vec<SubsetIndex>> {
    // Reject sizes whose count would not fit before allocating.
    binomial(n, k)?;
    Ok(iter_k_subsets(n, k)?.collect())
}
