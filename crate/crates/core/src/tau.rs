//! Hypergeometric tau functions `Σ_λ r_λ s_λ(x) s_λ(y)`, truncated by degree.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num::{BigInt, One, Zero};
use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::characters::character_table;
use crate::convolution::{family_coeffs, Family, FamilyValue};
use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::scalar::{self, Rational};
use crate::series::{TruncSeries, Vars};
use crate::symfunc::{schur_eval, schur_to_powersum, TensorSymFunc};
use crate::twist::{connection_coeffs, TwistSpec};

/// Largest degree `build_tau` accepts.
pub const TAU_MAX_DEGREE: usize = 8;

/// A tau function truncated at degree `n_max`, held both as Schur
/// coefficients `r_λ` and as a `p_λ(x) p_μ(y)` expansion.
#[derive(Debug, Clone)]
pub struct TauSeries {
    family: Family,
    n_max: usize,
    vars: Arc<Vars>,
    schur: BTreeMap<Partition, TruncSeries>,
    psum: TensorSymFunc,
}

impl TauSeries {
    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn vars(&self) -> &Arc<Vars> {
        &self.vars
    }

    /// `r_λ`; zero when the family vanishes at `λ`.
    pub fn schur_coeff(&self, lambda: &Partition) -> TruncSeries {
        self.schur.get(lambda).cloned().unwrap_or_else(|| TruncSeries::zero(&self.vars))
    }

    /// All nonzero `r_λ`.
    pub fn schur(&self) -> &BTreeMap<Partition, TruncSeries> {
        &self.schur
    }

    /// The expansion in `p_λ(x) p_μ(y)`, with coefficient `Z_μ⁻¹ G_{λμ}`.
    pub fn powersum(&self) -> &TensorSymFunc {
        &self.psum
    }

    /// The coefficient of `p_λ(x) p_μ(y)`.
    pub fn powersum_coeff(&self, lambda: &Partition, mu: &Partition) -> TruncSeries {
        self.psum.coeff(lambda, mu).cloned().unwrap_or_else(|| TruncSeries::zero(&self.vars))
    }
}

/// `Σ_ν r_ν s_ν(x) s_ν(y)` in degree `n`, expanded through `s_ν = Σ χ_ν(μ) p_μ / Z_μ`.
pub fn schur_side(schur: &BTreeMap<Partition, TruncSeries>, n: usize) -> Result<TensorSymFunc> {
    let mut out = TensorSymFunc::new();
    for (nu, r) in schur.iter().filter(|(nu, _)| nu.size() == n) {
        let s = schur_to_powersum(nu)?;
        let terms: Vec<_> = s.terms().collect();
        for (lambda, a) in &terms {
            for (mu, b) in &terms {
                out.add_term((*lambda).clone(), (*mu).clone(), r.scale(&(*a * *b)));
            }
        }
    }
    Ok(out)
}

/// The power-sum side in degree `n`: `Z_μ⁻¹ G_{λμ}` for twists, otherwise
/// `Σ_ν r_ν χ_ν(λ) χ_ν(μ) / (Z_λ Z_μ)` straight from the character table.
fn powersum_side(family: &Family, schur: &BTreeMap<Partition, TruncSeries>, n: usize) -> Result<TensorSymFunc> {
    let mut out = TensorSymFunc::new();
    if n == 0 {
        if let Some(r) = schur.get(&Partition::empty()) {
            out.add_term(Partition::empty(), Partition::empty(), r.clone());
        }
        return Ok(out);
    }
    if let Family::Twist(t) = family {
        let g = connection_coeffs(t, n)?;
        for lambda in &g.order {
            for mu in &g.order {
                out.add_term(lambda.clone(), mu.clone(), g.entry(lambda, mu).scale(&mu.z().recip()));
            }
        }
        return Ok(out);
    }
    let table = character_table(n)?;
    for lambda in &table.order {
        for mu in &table.order {
            let w = (lambda.z() * mu.z()).recip();
            let mut acc = TruncSeries::scalar(Rational::zero());
            for (nu, r) in schur.iter().filter(|(nu, _)| nu.size() == n) {
                let c = table.value(nu, lambda) * table.value(nu, mu);
                if c != 0 {
                    acc += &r.scale(&scalar::int(c));
                }
            }
            out.add_term(lambda.clone(), mu.clone(), acc.scale(&w));
        }
    }
    Ok(out)
}

/// Assembles the tau function through degree `n_max` and checks that the
/// Schur and power-sum assemblies agree in every degree.
pub fn build_tau(family: &Family, n_max: usize) -> Result<TauSeries> {
    if n_max > TAU_MAX_DEGREE {
        return Err(Error::SizeLimit { what: "tau degree", n: n_max, cap: TAU_MAX_DEGREE });
    }
    let vars = family.vars();
    let mut schur = BTreeMap::new();
    for n in 0..=n_max {
        for lambda in partitions_of(n)? {
            if let FamilyValue::Value(r) = family_coeffs(family, &lambda)? {
                if !r.is_zero() {
                    schur.insert(lambda, r.embed(&vars)?);
                }
            }
        }
    }
    let mut psum = TensorSymFunc::new();
    for n in 0..=n_max {
        let p_side = powersum_side(family, &schur, n)?;
        let s_side = if n == 0 { p_side.clone() } else { schur_side(&schur, n)? };
        if p_side != s_side {
            return Err(Error::Verification(format!(
                "{}: Schur and power-sum assemblies differ in degree {n}",
                family.label()
            )));
        }
        psum = psum.add(&p_side);
    }
    Ok(TauSeries { family: family.clone(), n_max, vars, schur, psum })
}

/// `Σ_λ r_λ s_λ(a) s_λ(b)`, summed over `|λ| ≤ n_max`.
pub fn tau_eval(t: &TauSeries, a: &[Rational], b: &[Rational]) -> Result<TruncSeries> {
    let mut acc = TruncSeries::zero(&t.vars);
    for (lambda, r) in &t.schur {
        let w = schur_eval(lambda, a)? * schur_eval(lambda, b)?;
        if !w.is_zero() {
            acc += &r.scale(&w);
        }
    }
    Ok(acc)
}

fn degree_one_part(f: &TensorSymFunc) -> Result<TruncSeries> {
    let c = f.coeff(&Partition::empty(), &Partition::empty()).cloned();
    Ok(c.unwrap_or_else(|| TruncSeries::scalar(Rational::zero())))
}

/// `ln τ = Σ_{k≥1} (-1)^{k+1} (τ-1)^k / k`, truncated at degree `n_max`.
pub fn log_tau(t: &TauSeries) -> Result<TensorSymFunc> {
    let c0 = degree_one_part(&t.psum)?;
    if !(c0.is_constant() && c0.constant_term().is_one()) {
        return Err(Error::NonUnitConstant);
    }
    let g = t.psum.add(&TensorSymFunc::one().scale(&-Rational::one()));
    let mut acc = TensorSymFunc::new();
    let mut power = TensorSymFunc::one();
    for k in 1..=t.n_max as i64 {
        power = power.mul_truncated(&g, t.n_max);
        if power.is_empty() {
            break;
        }
        let sign = if k % 2 == 1 { 1 } else { -1 };
        acc = acc.add(&power.scale(&scalar::frac(sign, k)));
    }
    Ok(acc)
}

/// `exp f = Σ f^k / k!` for `f` without a degree-zero term, truncated at `n_max`.
pub fn exp_tensor(f: &TensorSymFunc, n_max: usize) -> Result<TensorSymFunc> {
    if !degree_one_part(f)?.is_zero() {
        return Err(Error::OutOfRange("exponential needs a series without constant term".into()));
    }
    let mut acc = TensorSymFunc::one();
    let mut term = TensorSymFunc::one();
    for k in 1..=n_max as i64 {
        term = term.mul_truncated(f, n_max).scale(&scalar::frac(1, k));
        if term.is_empty() {
            break;
        }
        acc = acc.add(&term);
    }
    Ok(acc)
}

/// Reads a walk count off a `p_λ ⊗ p_μ` coefficient: `Z_μ` times the
/// coefficient at `powers`, with `k!` for each exponential parameter.
pub fn count_from_coeff(t: &TwistSpec, f: &TensorSymFunc, lambda: &Partition, mu: &Partition, powers: &[(&str, u32)]) -> Rational {
    match f.coeff(lambda, mu) {
        Some(c) => t.normalized_coeff(c, powers) * mu.z(),
        None => Rational::zero(),
    }
}

/// Walk tables that have a generating twist.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableKind {
    Plain,
    Monotone,
    Strict,
    Mixed,
    WeakStrict,
    Multi(usize),
}

impl TableKind {
    /// The generating twist, each step parameter capped at `cap`.
    pub fn twist(&self, cap: u32) -> TwistSpec {
        match self {
            TableKind::Plain => TwistSpec::plain(cap),
            TableKind::Monotone => TwistSpec::monotone(cap),
            TableKind::Strict => TwistSpec::strict(cap),
            TableKind::Mixed => TwistSpec::mixed(cap, cap),
            TableKind::WeakStrict => TwistSpec::weak_then_strict(cap, cap),
            TableKind::Multi(m) => TwistSpec::multimonotone(&vec![cap; *m]),
        }
    }

    /// Column names, in order.
    pub fn columns(&self) -> Vec<String> {
        match self {
            TableKind::Plain => vec!["b".into()],
            TableKind::Monotone | TableKind::Strict => vec!["k".into()],
            TableKind::Mixed => vec!["p".into(), "k".into()],
            TableKind::WeakStrict => vec!["k".into(), "l".into()],
            TableKind::Multi(m) => (1..=*m).map(|i| format!("d{i}")).collect(),
        }
    }

    /// Column values for the exponents of the twist's step parameters.
    fn column_values(&self, exps: &[u32]) -> Vec<u32> {
        match self {
            TableKind::Mixed => vec![exps[0], exps[0] + exps[1]],
            _ => exps.to_vec(),
        }
    }
}

impl FromStr for TableKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plain" | "okounkov" => Ok(TableKind::Plain),
            "monotone" => Ok(TableKind::Monotone),
            "strict" => Ok(TableKind::Strict),
            "mixed" => Ok(TableKind::Mixed),
            "weak_strict" => Ok(TableKind::WeakStrict),
            "multi" | "multimonotone" => Ok(TableKind::Multi(2)),
            _ => match s.strip_prefix("multi") {
                Some(m) => match m.parse::<usize>() {
                    Ok(m) if m >= 1 => Ok(TableKind::Multi(m)),
                    _ => Err(Error::Parse(format!("unknown table kind `{s}`"))),
                },
                None => Err(Error::Parse(format!("unknown table kind `{s}`"))),
            },
        }
    }
}

impl fmt::Display for TableKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableKind::Plain => write!(f, "plain"),
            TableKind::Monotone => write!(f, "monotone"),
            TableKind::Strict => write!(f, "strict"),
            TableKind::Mixed => write!(f, "mixed"),
            TableKind::WeakStrict => write!(f, "weak_strict"),
            TableKind::Multi(m) => write!(f, "multi{m}"),
        }
    }
}

/// One table entry: the number of walks from class `from` to the fixed
/// representative of `to` with the given step data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub n: usize,
    pub from: Partition,
    pub to: Partition,
    pub steps: Vec<(String, u32)>,
    pub count: BigInt,
    pub connected: bool,
}

impl Serialize for TableRow {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        struct Steps<'a>(&'a [(String, u32)]);
        impl Serialize for Steps<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut m = s.serialize_map(Some(self.0.len()))?;
                for (k, v) in self.0 {
                    m.serialize_entry(k, v)?;
                }
                m.end()
            }
        }
        let mut st = s.serialize_struct("TableRow", 6)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("from", &self.from)?;
        st.serialize_field("to", &self.to)?;
        st.serialize_field("steps", &Steps(&self.steps))?;
        st.serialize_field("count", &self.count.to_string())?;
        st.serialize_field("connected", &self.connected)?;
        st.end()
    }
}

/// Exponent vectors of length `len` with entries summing to at most `total`.
fn exponent_vectors(len: usize, total: u32) -> Vec<Vec<u32>> {
    if len == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in exponent_vectors(len - 1, total - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Walk counts for `1 ≤ n ≤ n_max`, all class pairs, and all step data
/// with total step count at most `step_cap`, read off the twist's
/// connection coefficients, or off `ln τ` when `connected`.
pub fn hurwitz_table(kind: TableKind, n_max: usize, step_cap: u32, connected: bool) -> Result<Vec<TableRow>> {
    let cap = crate::walks::max_n();
    if n_max > cap {
        return Err(Error::SizeLimit { what: "table size", n: n_max, cap });
    }
    let twist = kind.twist(step_cap);
    let names: Vec<String> = twist.step_names().iter().map(|s| s.to_string()).collect();
    let columns = kind.columns();
    let exps = exponent_vectors(names.len(), step_cap);
    let log = if connected {
        Some(log_tau(&build_tau(&Family::Twist(twist.clone()), n_max)?)?)
    } else {
        None
    };
    let mut rows = Vec::new();
    for n in 1..=n_max {
        let g = connection_coeffs(&twist, n)?;
        for lambda in &g.order {
            for mu in &g.order {
                for e in &exps {
                    let powers: Vec<(&str, u32)> = names.iter().map(String::as_str).zip(e.iter().copied()).collect();
                    let count = match &log {
                        Some(f) => count_from_coeff(&twist, f, lambda, mu, &powers),
                        None => twist.normalized_coeff(g.entry(lambda, mu), &powers),
                    };
                    if !count.is_integer() {
                        return Err(Error::Verification(format!(
                            "non-integer count {} at n={n}, {lambda} -> {mu}",
                            scalar::format(&count)
                        )));
                    }
                    rows.push(TableRow {
                        n,
                        from: lambda.clone(),
                        to: mu.clone(),
                        steps: columns.iter().cloned().zip(kind.column_values(e)).collect(),
                        count: count.to_integer(),
                        connected,
                    });
                }
            }
        }
    }
    Ok(rows)
}

pub fn table_to_json(rows: &[TableRow]) -> String {
    serde_json::to_string_pretty(rows).expect("serializable")
}

/// CSV with header `n,from,to,<step columns>,count`; partitions are written
/// comma-separated inside quotes.
pub fn table_to_csv(kind: TableKind, rows: &[TableRow]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["n".to_string(), "from".into(), "to".into()];
    header.extend(kind.columns());
    header.push("count".into());
    w.write_record(&header).map_err(|e| Error::Parse(e.to_string()))?;
    for r in rows {
        let mut rec = vec![r.n.to_string(), r.from.to_string(), r.to.to_string()];
        rec.extend(r.steps.iter().map(|(_, v)| v.to_string()));
        rec.push(r.count.to_string());
        w.write_record(&rec).map_err(|e| Error::Parse(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Parse(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("utf8"))
}
