//! Counting constrained transposition walks in the Cayley graph of `S_n`.
//!
//! A walk from `g` is a sequence of transpositions `τ_t = (a_t b_t)`,
//! `a_t < b_t`, with endpoint `τ_k ··· τ_1 · g`. Constraints act on the
//! sequence `b_1, …, b_k` in step order.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::perm::Permutation;

pub const DEFAULT_MAX_N: usize = 7;
pub const HARD_MAX_N: usize = 8;
pub const MAX_N_ENV: &str = "HURWITZ_MAX_N";

/// The walk-size cap: `HURWITZ_MAX_N` if set (clamped to 8), else 7.
pub fn max_n() -> usize {
    std::env::var(MAX_N_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .map_or(DEFAULT_MAX_N, |v| v.min(HARD_MAX_N))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum StepKind {
    /// `b_t ≤ b_{t+1}` inside the segment.
    Weak,
    /// `b_t < b_{t+1}` inside the segment.
    Strict,
    Free,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Segment {
    pub kind: StepKind,
    pub len: usize,
}

impl Segment {
    pub fn new(kind: StepKind, len: usize) -> Self {
        Segment { kind, len }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Constraint {
    Plain(usize),
    WeaklyMonotone(usize),
    StrictlyMonotone(usize),
    /// `p` weakly monotone steps followed by `k - p` free ones.
    Mixed { p: usize, k: usize },
    /// Consecutive strictly monotone segments of the given lengths.
    MultiMonotone(Vec<usize>),
    /// Arbitrary consecutive segments, e.g. weak-then-strict.
    Segments(Vec<Segment>),
}

impl Constraint {
    pub fn segments(&self) -> Result<Vec<Segment>> {
        use StepKind::*;
        Ok(match self {
            Constraint::Plain(k) => vec![Segment::new(Free, *k)],
            Constraint::WeaklyMonotone(k) => vec![Segment::new(Weak, *k)],
            Constraint::StrictlyMonotone(k) => vec![Segment::new(Strict, *k)],
            Constraint::Mixed { p, k } => {
                if p > k {
                    return Err(Error::OutOfRange(format!("mixed walk with p={p} > k={k}")));
                }
                vec![Segment::new(Weak, *p), Segment::new(Free, k - p)]
            }
            Constraint::MultiMonotone(d) => d.iter().map(|&l| Segment::new(Strict, l)).collect(),
            Constraint::Segments(s) => s.clone(),
        })
    }

    pub fn steps(&self) -> usize {
        self.segments().map(|s| s.iter().map(|s| s.len).sum()).unwrap_or(0)
    }
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Constraint::Plain(k) => write!(f, "plain({k})"),
            Constraint::WeaklyMonotone(k) => write!(f, "monotone({k})"),
            Constraint::StrictlyMonotone(k) => write!(f, "strict({k})"),
            Constraint::Mixed { p, k } => write!(f, "mixed(p={p},k={k})"),
            Constraint::MultiMonotone(d) => {
                let d: Vec<String> = d.iter().map(ToString::to_string).collect();
                write!(f, "multi({})", d.join(","))
            }
            Constraint::Segments(s) => {
                let s: Vec<String> = s.iter().map(|s| format!("{:?}{}", s.kind, s.len)).collect();
                write!(f, "segments({})", s.join(","))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WalkQuery {
    pub n: usize,
    pub from_type: Partition,
    pub to_type: Partition,
    pub constraint: Constraint,
    pub transitive: bool,
}

impl WalkQuery {
    pub fn new(from_type: Partition, to_type: Partition, constraint: Constraint) -> Self {
        WalkQuery { n: from_type.size(), from_type, to_type, constraint, transitive: false }
    }

    pub fn transitive(mut self, yes: bool) -> Self {
        self.transitive = yes;
        self
    }

    fn validate(&self) -> Result<()> {
        if self.from_type.size() != self.n || self.to_type.size() != self.n {
            return Err(Error::SizeMismatch(format!(
                "walk types {} and {} in S_{}",
                self.from_type, self.to_type, self.n
            )));
        }
        let cap = max_n();
        if self.n > cap {
            return Err(Error::SizeLimit { what: "walk n", n: self.n, cap });
        }
        Ok(())
    }
}

/// `#{(g, τ_1..τ_k) : cyc(g) = from, τ_k···τ_1·g = h₀}` for the canonical
/// representative `h₀` of `to_type`.
pub fn count_walks(q: &WalkQuery) -> Result<u128> {
    count_walks_to(q, &Permutation::canonical_of_type(&q.to_type))
}

/// As [`count_walks`] with an explicit endpoint, which must have cycle type
/// `to_type`.
pub fn count_walks_to(q: &WalkQuery, h0: &Permutation) -> Result<u128> {
    q.validate()?;
    if h0.degree() != q.n || h0.cycle_type() != q.to_type {
        return Err(Error::SizeMismatch(format!("endpoint {h0} is not of type {}", q.to_type)));
    }
    let steps = step_plan(&q.constraint.segments()?);
    Ok(run(q.n, h0, &steps, q.transitive, &q.from_type))
}

/// Per step, in forward order: its kind and whether the previous step lies
/// in the same monotone segment (so that its `b` is bounded by this one).
fn step_plan(segments: &[Segment]) -> Vec<(StepKind, bool)> {
    let mut out = Vec::new();
    for seg in segments {
        for i in 0..seg.len {
            out.push((seg.kind, i > 0 && seg.kind != StepKind::Free));
        }
    }
    out
}

#[derive(Clone, PartialEq, Eq, Hash)]
struct State {
    perm: Permutation,
    /// 1-based `b` of the step just undone, when it bounds the next one.
    bound: u8,
    /// Block label (smallest point) per point; empty unless tracking transitivity.
    blocks: Vec<u8>,
}

fn merge(blocks: &mut [u8], a: u8, b: u8) {
    let (x, y) = (blocks[a as usize], blocks[b as usize]);
    if x == y {
        return;
    }
    let (keep, drop) = (x.min(y), x.max(y));
    for l in blocks.iter_mut() {
        if *l == drop {
            *l = keep;
        }
    }
}

/// Undoes the walk from `h0` one step at a time, last step first.
fn run(n: usize, h0: &Permutation, steps: &[(StepKind, bool)], transitive: bool, from: &Partition) -> u128 {
    let blocks = if transitive {
        let mut b: Vec<u8> = (0..n as u8).collect();
        for cycle in h0.cycles_raw() {
            for w in cycle.windows(2) {
                merge(&mut b, w[0], w[1]);
            }
        }
        b
    } else {
        Vec::new()
    };
    let mut layer: HashMap<State, u128> = HashMap::new();
    layer.insert(State { perm: h0.clone(), bound: 0, blocks }, 1);
    for (t, &(kind, _)) in steps.iter().enumerate().rev() {
        let keeps_bound = t > 0 && steps[t].1;
        let mut next: HashMap<State, u128> = HashMap::with_capacity(layer.len());
        for (state, count) in layer {
            let top = match kind {
                _ if state.bound == 0 => n as u8,
                StepKind::Weak => state.bound,
                StepKind::Strict => state.bound - 1,
                StepKind::Free => n as u8,
            };
            for b in 2..=top {
                for a in 1..b {
                    let mut blocks = state.blocks.clone();
                    if transitive {
                        merge(&mut blocks, a - 1, b - 1);
                    }
                    let s = State {
                        perm: state.perm.left_mul_transposition(a - 1, b - 1),
                        bound: if keeps_bound { b } else { 0 },
                        blocks,
                    };
                    *next.entry(s).or_insert(0) += count;
                }
            }
        }
        layer = next;
    }
    layer
        .into_iter()
        .filter(|(s, _)| s.perm.cycle_type() == *from && (!transitive || s.blocks.iter().all(|&l| l == 0)))
        .map(|(_, c)| c)
        .sum()
}
