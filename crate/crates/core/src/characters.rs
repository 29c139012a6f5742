//! Irreducible characters of the symmetric groups.
//!
//! Values are computed by Murnaghan–Nakayama border-strip removal on β-sets,
//! stripping the largest remaining cycle of the class first. Full tables are
//! cached per `n` behind a mutex; cached values never change once inserted.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::scalar::{self, Rational};

pub const DEFAULT_TABLE_CAP: usize = 10;

type Memo = HashMap<(Partition, Partition), i64>;

/// `χ_λ(μ)`; `λ` labels the irreducible representation and `μ` the class.
pub fn character(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch(format!(
            "character of |λ| = {} on a class of size {}",
            lambda.size(),
            mu.size()
        )));
    }
    let mut memo = Memo::new();
    Ok(mn(lambda, mu.parts(), &mut memo))
}

fn mn(lambda: &Partition, mu: &[usize], memo: &mut Memo) -> i64 {
    let Some((&k, rest)) = mu.split_first() else {
        return 1;
    };
    let key = (lambda.clone(), Partition::from_unsorted(mu.to_vec()));
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let total = remove_rim_hooks(lambda, k)
        .into_iter()
        .map(|(sign, smaller)| sign * mn(&smaller, rest, memo))
        .sum();
    memo.insert(key, total);
    total
}

/// Every way of removing a border strip of length `k`, with its sign `(-1)^{height}`.
pub fn remove_rim_hooks(lambda: &Partition, k: usize) -> Vec<(i64, Partition)> {
    let l = lambda.len();
    let beta: Vec<usize> = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p + l - 1 - i)
        .collect();
    let mut out = Vec::new();
    for (idx, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let target = b - k;
        let crossed = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut next = beta.clone();
        next[idx] = target;
        next.sort_unstable_by(|x, y| y.cmp(x));
        let parts = next
            .iter()
            .enumerate()
            .map(|(i, &x)| x - (l - 1 - i))
            .collect();
        let sign = if crossed % 2 == 0 { 1 } else { -1 };
        out.push((sign, Partition::from_unsorted(parts)));
    }
    out
}

/// Character table of `S_n`; rows are irreducibles, columns classes, both in
/// canonical partition order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CharacterTable {
    pub n: usize,
    pub order: Vec<Partition>,
    pub chi: Vec<Vec<i64>>,
    #[serde(skip)]
    index: HashMap<Partition, usize>,
}

impl CharacterTable {
    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn value(&self, lambda: &Partition, mu: &Partition) -> i64 {
        self.chi[self.index[lambda]][self.index[mu]]
    }

    pub fn value_q(&self, lambda: &Partition, mu: &Partition) -> Rational {
        scalar::int(self.value(lambda, mu))
    }

    /// `χ_λ(1^n) = n!/h_λ`.
    pub fn dimension(&self, lambda: &Partition) -> i64 {
        self.chi[self.index[lambda]][self.order.len() - 1]
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("character table serializes")
    }

    /// `Σ_λ χ_λ(μ)χ_λ(ν) = Z_μ δ_{μν}`.
    pub fn column_orthogonality_holds(&self) -> bool {
        let k = self.order.len();
        (0..k).all(|a| {
            (0..k).all(|b| {
                let s: i64 = (0..k).map(|r| self.chi[r][a] * self.chi[r][b]).sum();
                let expected = if a == b { self.order[a].z() } else { Rational::zero() };
                scalar::int(s) == expected
            })
        })
    }

    /// `Σ_μ χ_λ(μ)χ_κ(μ)/Z_μ = δ_{λκ}`.
    pub fn row_orthogonality_holds(&self) -> bool {
        let k = self.order.len();
        let inv_z: Vec<Rational> = self.order.iter().map(|m| m.z().recip()).collect();
        (0..k).all(|a| {
            (0..k).all(|b| {
                let s: Rational = (0..k)
                    .map(|c| scalar::int(self.chi[a][c] * self.chi[b][c]) * &inv_z[c])
                    .sum();
                s == scalar::int((a == b) as i64)
            })
        })
    }
}

pub fn character_table(n: usize) -> Result<Arc<CharacterTable>> {
    character_table_capped(n, DEFAULT_TABLE_CAP)
}

pub fn character_table_capped(n: usize, cap: usize) -> Result<Arc<CharacterTable>> {
    if n > cap {
        return Err(Error::SizeLimit { what: "character_table", n, cap });
    }
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<CharacterTable>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.lock().unwrap().get(&n) {
        return Ok(t.clone());
    }
    // computed outside the lock; concurrent builders produce identical tables
    let table = Arc::new(build_table(n)?);
    Ok(cache.lock().unwrap().entry(n).or_insert(table).clone())
}

fn build_table(n: usize) -> Result<CharacterTable> {
    let order = partitions_of(n)?;
    let mut memo = Memo::new();
    let chi = order
        .iter()
        .map(|lambda| order.iter().map(|mu| mn(lambda, mu.parts(), &mut memo)).collect())
        .collect();
    let index = order.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    Ok(CharacterTable { n, order, chi, index })
}
