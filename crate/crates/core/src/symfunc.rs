//! The ring of symmetric functions truncated by degree, in the power-sum
//! basis `p_μ` with the Schur basis `s_λ` as a view through the Frobenius
//! formula.

use std::collections::BTreeMap;

use num::{One, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::characters::character_table;
use crate::error::Result;
use crate::partition::{partitions_of, Partition};
use crate::scalar::{self, Rational};
use crate::series::TruncSeries;

pub const DEFAULT_DEGREE_CAP: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Basis {
    PowerSum,
    Schur,
}

/// A symmetric function as a sparse combination of basis elements of degree
/// at most `degree_cap`. Products exceeding the cap are dropped and
/// `truncated` is set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymFunc {
    basis: Basis,
    terms: BTreeMap<Partition, Rational>,
    degree_cap: usize,
    truncated: bool,
}

impl SymFunc {
    pub fn zero(basis: Basis, degree_cap: usize) -> Self {
        SymFunc { basis, terms: BTreeMap::new(), degree_cap, truncated: false }
    }

    pub fn one(basis: Basis, degree_cap: usize) -> Self {
        let mut f = SymFunc::zero(basis, degree_cap);
        f.add_term(Partition::empty(), Rational::one());
        f
    }

    /// The single basis element indexed by `lambda`.
    pub fn basis_element(basis: Basis, lambda: Partition) -> Self {
        let mut f = SymFunc::zero(basis, lambda.size().max(DEFAULT_DEGREE_CAP));
        f.add_term(lambda, Rational::one());
        f
    }

    pub fn p(lambda: Partition) -> Self {
        SymFunc::basis_element(Basis::PowerSum, lambda)
    }

    pub fn s(lambda: Partition) -> Self {
        SymFunc::basis_element(Basis::Schur, lambda)
    }

    pub fn from_terms(
        basis: Basis,
        degree_cap: usize,
        terms: impl IntoIterator<Item = (Partition, Rational)>,
    ) -> Self {
        let mut f = SymFunc::zero(basis, degree_cap);
        for (p, c) in terms {
            f.add_term(p, c);
        }
        f
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn degree_cap(&self) -> usize {
        self.degree_cap
    }

    pub fn truncated(&self) -> bool {
        self.truncated
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, lambda: &Partition) -> Rational {
        self.terms.get(lambda).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, lambda: Partition, c: Rational) {
        if c.is_zero() {
            return;
        }
        if lambda.size() > self.degree_cap {
            self.truncated = true;
            return;
        }
        let sum = match self.terms.remove(&lambda) {
            Some(old) => old + c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(lambda, sum);
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = SymFunc::zero(self.basis, self.degree_cap);
        out.truncated = self.truncated;
        for (p, v) in &self.terms {
            out.add_term(p.clone(), v * c);
        }
        out
    }

    pub fn add(&self, other: &SymFunc) -> Result<SymFunc> {
        let other = other.in_basis(self.basis)?;
        let mut out = self.clone();
        out.degree_cap = self.degree_cap.min(other.degree_cap);
        out.truncated |= other.truncated;
        for (p, v) in &other.terms {
            out.add_term(p.clone(), v.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &SymFunc) -> Result<SymFunc> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn in_basis(&self, basis: Basis) -> Result<SymFunc> {
        match basis {
            Basis::PowerSum => self.to_powersum(),
            Basis::Schur => self.to_schur(),
        }
    }

    pub fn to_powersum(&self) -> Result<SymFunc> {
        if self.basis == Basis::PowerSum {
            return Ok(self.clone());
        }
        let mut out = SymFunc::zero(Basis::PowerSum, self.degree_cap);
        out.truncated = self.truncated;
        for (lambda, c) in &self.terms {
            for (mu, d) in schur_to_powersum(lambda)?.terms {
                out.add_term(mu, c * d);
            }
        }
        Ok(out)
    }

    pub fn to_schur(&self) -> Result<SymFunc> {
        if self.basis == Basis::Schur {
            return Ok(self.clone());
        }
        let mut out = SymFunc::zero(Basis::Schur, self.degree_cap);
        out.truncated = self.truncated;
        for (mu, c) in &self.terms {
            for (lambda, d) in powersum_to_schur(mu)?.terms {
                out.add_term(lambda, c * d);
            }
        }
        Ok(out)
    }

    /// Result in the power-sum basis; inputs in the Schur basis are converted first.
    pub fn multiply(&self, other: &SymFunc) -> Result<SymFunc> {
        let a = self.to_powersum()?;
        let b = other.to_powersum()?;
        let mut out = SymFunc::zero(Basis::PowerSum, a.degree_cap.min(b.degree_cap));
        out.truncated = a.truncated || b.truncated;
        for (pa, ca) in &a.terms {
            for (pb, cb) in &b.terms {
                out.add_term(pa.union(pb), ca * cb);
            }
        }
        Ok(out)
    }

    /// Substitutes `p_k ↦ Σ_a x_a^k`.
    pub fn evaluate(&self, x: &[Rational]) -> Result<Rational> {
        let f = self.to_powersum()?;
        let mut power_sums = PowerSums::new(x);
        Ok(f.terms.iter().map(|(mu, c)| c * power_sums.p_mu(mu)).sum())
    }

    fn map_monomials(&self, mut image: impl FnMut(&Partition, &Rational, &mut SymFunc)) -> Result<SymFunc> {
        let f = self.to_powersum()?;
        let mut out = SymFunc::zero(Basis::PowerSum, f.degree_cap);
        out.truncated = f.truncated;
        for (mu, c) in &f.terms {
            image(mu, c, &mut out);
        }
        Ok(out)
    }

    /// Euler operator `Σ k p_k ∂/∂p_k`: multiplies each degree-`n` part by `n`.
    pub fn euler_operator(&self) -> Result<SymFunc> {
        self.map_monomials(|mu, c, out| out.add_term(mu.clone(), c * scalar::int(mu.size() as i64)))
    }

    /// `½ Σ_{i,j≥1} ((i+j) p_i p_j ∂/∂p_{i+j} + ij p_{i+j} ∂²/∂p_i∂p_j)`.
    pub fn cut_and_join(&self) -> Result<SymFunc> {
        let half = scalar::frac(1, 2);
        self.map_monomials(|mu, c, out| {
            let m = mu.multiplicities();
            // cut: one part k splits into an ordered pair (i, k - i)
            for k in 1..m.len() {
                if m[k] == 0 {
                    continue;
                }
                let rest = remove_parts(mu, &[k]);
                for i in 1..k {
                    let coeff = c * &half * scalar::int((k * m[k]) as i64);
                    out.add_term(rest.union(&Partition::from_unsorted(vec![i, k - i])), coeff);
                }
            }
            // join: an ordered pair of parts (i, j) merges into i + j
            for i in 1..m.len() {
                for j in 1..m.len() {
                    let pairs = if i == j { m[i] * m[i].saturating_sub(1) } else { m[i] * m[j] };
                    if pairs == 0 {
                        continue;
                    }
                    let rest = remove_parts(mu, &[i, j]);
                    let coeff = c * &half * scalar::int((i * j * pairs) as i64);
                    out.add_term(rest.union(&Partition::from_unsorted(vec![i + j])), coeff);
                }
            }
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("symmetric function serializes")
    }
}

impl Serialize for SymFunc {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term {
            part: String,
            coeff: String,
        }
        // canonical order: by degree, then descending lexicographic
        let mut keys: Vec<&Partition> = self.terms.keys().collect();
        keys.sort_by(|a, b| a.size().cmp(&b.size()).then(b.cmp(a)));
        let terms: Vec<Term> = keys
            .into_iter()
            .map(|p| Term { part: p.to_string(), coeff: scalar::format(&self.terms[p]) })
            .collect();
        let mut s = serializer.serialize_struct("SymFunc", 2)?;
        s.serialize_field(
            "basis",
            match self.basis {
                Basis::PowerSum => "p",
                Basis::Schur => "s",
            },
        )?;
        s.serialize_field("terms", &terms)?;
        s.end()
    }
}

fn remove_parts(mu: &Partition, parts: &[usize]) -> Partition {
    let mut v = mu.parts().to_vec();
    for p in parts {
        let pos = v.iter().position(|x| x == p).expect("part present");
        v.remove(pos);
    }
    Partition::from_unsorted(v)
}

/// Memoized power sums `p_k(x)`.
pub struct PowerSums<'a> {
    x: &'a [Rational],
    cache: Vec<Rational>,
}

impl<'a> PowerSums<'a> {
    pub fn new(x: &'a [Rational]) -> Self {
        PowerSums { x, cache: vec![scalar::int(x.len() as i64)] }
    }

    pub fn p(&mut self, k: usize) -> Rational {
        while self.cache.len() <= k {
            let e = self.cache.len() as i64;
            self.cache.push(self.x.iter().map(|a| scalar::pow(a, e)).sum());
        }
        self.cache[k].clone()
    }

    pub fn p_mu(&mut self, mu: &Partition) -> Rational {
        mu.parts().iter().fold(Rational::one(), |acc, &k| acc * self.p(k))
    }
}

/// `s_λ = Σ_μ χ_λ(μ) p_μ / Z_μ`.
pub fn schur_to_powersum(lambda: &Partition) -> Result<SymFunc> {
    let n = lambda.size();
    let table = character_table(n)?;
    let terms = table
        .order
        .iter()
        .map(|mu| (mu.clone(), table.value_q(lambda, mu) / mu.z()));
    Ok(SymFunc::from_terms(Basis::PowerSum, n.max(DEFAULT_DEGREE_CAP), terms))
}

/// `p_μ = Σ_λ χ_λ(μ) s_λ`.
pub fn powersum_to_schur(mu: &Partition) -> Result<SymFunc> {
    let n = mu.size();
    let table = character_table(n)?;
    let terms = table.order.iter().map(|lambda| (lambda.clone(), table.value_q(lambda, mu)));
    Ok(SymFunc::from_terms(Basis::Schur, n.max(DEFAULT_DEGREE_CAP), terms))
}

/// Schur polynomial `s_λ(x)` evaluated through the power-sum expansion.
pub fn schur_eval(lambda: &Partition, x: &[Rational]) -> Result<Rational> {
    if lambda.len() > x.len() {
        return Ok(Rational::zero());
    }
    SymFunc::s(lambda.clone()).evaluate(x)
}

/// Degree-`n` parts of both sides of the Cauchy–Littlewood identity:
/// `(Σ_μ p_μ(x)p_μ(y)/Z_μ, Σ_λ s_λ(x)s_λ(y))`.
pub fn cauchy_sides(n: usize, x: &[Rational], y: &[Rational]) -> Result<(Rational, Rational)> {
    let mut px = PowerSums::new(x);
    let mut py = PowerSums::new(y);
    let mut p_side = Rational::zero();
    let mut s_side = Rational::zero();
    for mu in partitions_of(n)? {
        p_side += px.p_mu(&mu) * py.p_mu(&mu) / mu.z();
        s_side += schur_eval(&mu, x)? * schur_eval(&mu, y)?;
    }
    Ok((p_side, s_side))
}

/// Degree-`n` part of `Π_{a,b} 1/(1 - x_a y_b)`, by multiplying geometric series.
pub fn cauchy_kernel_degree(n: usize, x: &[Rational], y: &[Rational]) -> Rational {
    let vars = crate::series::Vars::new(&[("t", n as u32)]);
    let t = TruncSeries::var(&vars, "t");
    let mut acc = TruncSeries::one(&vars);
    for a in x {
        for b in y {
            let factor = (TruncSeries::one(&vars) - t.scale(&(a * b))).inverse().expect("unit constant");
            acc = &acc * &factor;
        }
    }
    acc.coeff(&[n as u32])
}

/// An element of `Λ ⊗ Λ` in the basis `p_λ(x) p_μ(y)`, with series coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TensorSymFunc {
    terms: BTreeMap<(Partition, Partition), TruncSeries>,
}

impl TensorSymFunc {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        let mut t = Self::new();
        t.add_term(Partition::empty(), Partition::empty(), TruncSeries::scalar(Rational::one()));
        t
    }

    pub fn add_term(&mut self, lambda: Partition, mu: Partition, c: TruncSeries) {
        if c.is_zero() {
            return;
        }
        let key = (lambda, mu);
        let sum = match self.terms.remove(&key) {
            Some(old) => old + c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(key, sum);
        }
    }

    pub fn coeff(&self, lambda: &Partition, mu: &Partition) -> Option<&TruncSeries> {
        self.terms.get(&(lambda.clone(), mu.clone()))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Partition, Partition), &TruncSeries)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms with `|λ| = n`.
    pub fn degree_part(&self, n: usize) -> TensorSymFunc {
        TensorSymFunc {
            terms: self
                .terms
                .iter()
                .filter(|((l, _), _)| l.size() == n)
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        }
    }

    pub fn add(&self, other: &TensorSymFunc) -> TensorSymFunc {
        let mut out = self.clone();
        for ((l, m), c) in &other.terms {
            out.add_term(l.clone(), m.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> TensorSymFunc {
        let mut out = TensorSymFunc::new();
        for ((l, m), v) in &self.terms {
            out.add_term(l.clone(), m.clone(), v.scale(c));
        }
        out
    }

    /// Product, dropping terms whose `x`-degree exceeds `max_degree`.
    pub fn mul_truncated(&self, other: &TensorSymFunc, max_degree: usize) -> TensorSymFunc {
        let mut out = TensorSymFunc::new();
        for ((l1, m1), c1) in &self.terms {
            for ((l2, m2), c2) in &other.terms {
                if l1.size() + l2.size() > max_degree || m1.size() + m2.size() > max_degree {
                    continue;
                }
                out.add_term(l1.union(l2), m1.union(m2), c1 * c2);
            }
        }
        out
    }

    /// Substitutes `p_k(x) ↦ Σ a_i^k`, `p_k(y) ↦ Σ b_j^k`.
    pub fn evaluate(&self, a: &[Rational], b: &[Rational]) -> TruncSeries {
        let mut pa = PowerSums::new(a);
        let mut pb = PowerSums::new(b);
        let mut acc = TruncSeries::scalar(Rational::zero());
        for ((l, m), c) in &self.terms {
            acc += &c.scale(&(pa.p_mu(l) * pb.p_mu(m)));
        }
        acc
    }
}
