//! Permutations of `{1..n}`, composed right-to-left: `(g·h)(x) = g(h(x))`.

use std::fmt;

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Stored 0-based; all public constructors and display are 1-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n as u8).collect() }
    }

    /// From 1-based images: `images[x-1] = g(x)`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in images {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::OutOfRange(format!("not a permutation: {images:?}")));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { images: images.iter().map(|&v| (v - 1) as u8).collect() })
    }

    /// Builds from disjoint 1-based cycles; unspecified points are fixed.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (1..=n).collect();
        for cycle in cycles {
            for (i, &a) in cycle.iter().enumerate() {
                let b = cycle[(i + 1) % cycle.len()];
                if a == 0 || a > n || b == 0 || b > n {
                    return Err(Error::OutOfRange(format!("cycle entry outside 1..{n}")));
                }
                images[a - 1] = b;
            }
        }
        Permutation::from_images(&images)
    }

    /// The transposition `(a b)`, 1-based.
    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Self> {
        if a == b || a == 0 || b == 0 || a > n || b > n {
            return Err(Error::OutOfRange(format!("transposition ({a} {b}) in S_{n}")));
        }
        let mut p = Permutation::identity(n);
        p.images.swap(a - 1, b - 1);
        Ok(p)
    }

    /// Representative of a cycle type: cycles on consecutive points, largest first.
    pub fn canonical_of_type(mu: &Partition) -> Self {
        let n = mu.size();
        let mut images = vec![0u8; n];
        let mut start = 0;
        for &len in mu.parts() {
            for i in 0..len {
                images[start + i] = (start + (i + 1) % len) as u8;
            }
            start += len;
        }
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// `g(x)`, 1-based.
    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1] as usize + 1
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "composing permutations of different degree");
        Permutation { images: other.images.iter().map(|&x| self.images[x as usize]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u8; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v as usize] = i as u8;
        }
        Permutation { images }
    }

    /// `(a b) ∘ self` for 0-based `a, b`: exchanges the values `a` and `b`.
    pub(crate) fn left_mul_transposition(&self, a: u8, b: u8) -> Permutation {
        let images = self
            .images
            .iter()
            .map(|&v| if v == a { b } else if v == b { a } else { v })
            .collect();
        Permutation { images }
    }

    /// Cycles as 0-based point lists, each starting at its smallest point.
    pub(crate) fn cycles_raw(&self) -> Vec<Vec<u8>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x as u8);
                x = self.images[x] as usize;
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> Partition {
        Partition::from_unsorted(self.cycles_raw().iter().map(Vec::len).collect())
    }

    /// All of `S_n`, lexicographic in the image sequence.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut current: Vec<u8> = (0..n as u8).collect();
        let mut out = Vec::new();
        loop {
            out.push(Permutation { images: current.clone() });
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| current[i] < current[i + 1]) else {
                return out;
            };
            let j = (i + 1..n).rev().find(|&j| current[j] > current[i]).unwrap();
            current.swap(i, j);
            current[i + 1..].reverse();
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<_> = self.cycles_raw().into_iter().filter(|c| c.len() > 1).collect();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let pts: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
            write!(f, "({})", pts.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
