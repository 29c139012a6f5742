//! Integer partitions and the statistics attached to them: symmetry factors,
//! hook products, contents and the extended Pochhammer symbol.
//!
//! Partitions of a fixed `n` are always listed in descending lexicographic
//! order, so `(n)` comes first and `(1^n)` last. Every table and coordinate
//! vector in the crate is indexed in this order.

use std::fmt;
use std::str::FromStr;

use num::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::{self, Rational};

/// Default upper bound for [`partitions_of`].
pub const DEFAULT_PARTITION_CAP: usize = 12;

/// A weakly decreasing sequence of positive integers.
///
/// The derived ordering is lexicographic on the parts, which is the canonical
/// comparator: [`partitions_of`] returns a strictly decreasing sequence.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!(
                "parts must be positive and weakly decreasing: {parts:?}"
            )));
        }
        Ok(Partition { parts })
    }

    /// Sorts arbitrary positive parts into a partition (zeros are dropped).
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// `(k, 1^{n-k})`, the cycle type of a single `k`-cycle in `S_n`.
    pub fn hook_shape(n: usize, k: usize) -> Self {
        let mut parts = vec![k];
        parts.extend(std::iter::repeat_n(1, n - k));
        Partition::from_unsorted(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `m[i]` is the number of parts equal to `i` (index 0 unused).
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.parts.first().copied().unwrap_or(0) + 1];
        for &p in &self.parts {
            m[p] += 1;
        }
        m
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// Cells `(row, col)`, both 1-based, row by row.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |j| (i + 1, j)))
    }

    /// Concatenates and re-sorts the parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Partition::from_unsorted(parts)
    }

    /// `Z_μ = Π_i m_i! i^{m_i}`, the centralizer order of a permutation of this cycle type.
    pub fn z(&self) -> Rational {
        z_of(self)
    }

    pub fn hook_lengths(&self) -> Vec<usize> {
        let conj = self.conjugate();
        self.cells()
            .map(|(i, j)| {
                let arm = self.parts[i - 1] - j;
                let leg = conj.parts[j - 1] - i;
                arm + leg + 1
            })
            .collect()
    }

    pub fn hook_product(&self) -> Rational {
        hook_product(self)
    }

    /// Contents `j - i` of all cells, in row order.
    pub fn contents(&self) -> Vec<i64> {
        self.cells().map(|(i, j)| j as i64 - i as i64).collect()
    }

    /// `Σ (j - i)` over cells; panics if it disagrees with the closed form.
    pub fn content_sum(&self) -> i64 {
        let direct: i64 = self.contents().iter().sum();
        let closed = self.content_sum_closed_form();
        assert_eq!(direct, closed, "content sum formulas disagree for {self}");
        direct
    }

    /// `½ Σ_i λ_i (λ_i - 2i + 1)`.
    pub fn content_sum_closed_form(&self) -> i64 {
        let twice: i64 = self
            .parts
            .iter()
            .enumerate()
            .map(|(i, &l)| {
                let (l, i) = (l as i64, i as i64 + 1);
                l * (l - 2 * i + 1)
            })
            .sum();
        twice / 2
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad partition {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// All partitions of `n` in canonical (descending lexicographic) order.
pub fn partitions_of(n: usize) -> Result<Vec<Partition>> {
    partitions_of_capped(n, DEFAULT_PARTITION_CAP)
}

pub fn partitions_of_capped(n: usize, cap: usize) -> Result<Vec<Partition>> {
    if n > cap {
        return Err(Error::SizeLimit { what: "partitions_of", n, cap });
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, n, &mut current, &mut out);
    Ok(out)
}

fn fill(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition { parts: current.clone() });
        return;
    }
    for p in (1..=max_part.min(remaining)).rev() {
        current.push(p);
        fill(remaining - p, p, current, out);
        current.pop();
    }
}

/// All partitions of every size `0..=n_max`, grouped by size.
pub fn partitions_up_to(n_max: usize) -> Result<Vec<Vec<Partition>>> {
    (0..=n_max).map(partitions_of).collect()
}

pub fn z_of(mu: &Partition) -> Rational {
    mu.multiplicities()
        .iter()
        .enumerate()
        .skip(1)
        .fold(Rational::one(), |acc, (i, &m)| {
            acc * scalar::factorial(m) * scalar::pow(&scalar::int(i as i64), m as i64)
        })
}

pub fn hook_product(lambda: &Partition) -> Rational {
    lambda
        .hook_lengths()
        .into_iter()
        .fold(Rational::one(), |acc, h| acc * scalar::int(h as i64))
}

/// Rising factorial `(a)_j = a (a+1) ... (a+j-1)`.
pub fn pochhammer(a: &Rational, j: usize) -> Rational {
    (0..j as i64).fold(Rational::one(), |acc, k| acc * (a + scalar::int(k)))
}

/// Extended Pochhammer symbol `(a)_λ = Π_i (a - i + 1)_{λ_i}`.
///
/// Equal to the cell product `Π (a + j - i)`; debug builds check this.
pub fn pochhammer_partition(a: &Rational, lambda: &Partition) -> Rational {
    let rows = lambda
        .parts()
        .iter()
        .enumerate()
        .fold(Rational::one(), |acc, (i, &l)| {
            acc * pochhammer(&(a - scalar::int(i as i64)), l)
        });
    debug_assert_eq!(rows, pochhammer_cells(a, lambda));
    rows
}

/// `Π_{(i,j) ∈ λ} (a + j - i)`.
pub fn pochhammer_cells(a: &Rational, lambda: &Partition) -> Rational {
    lambda
        .contents()
        .into_iter()
        .fold(Rational::one(), |acc, c| acc * (a + scalar::int(c)))
}

/// True if `(a)_λ` vanishes, i.e. some cell has `a + j - i = 0`.
pub fn pochhammer_vanishes(a: &Rational, lambda: &Partition) -> bool {
    lambda.contents().into_iter().any(|c| (a + scalar::int(c)).is_zero())
}
