//! Twists of the center by content-product elements of `Λ[P₀]` evaluated at
//! the Jucys–Murphy elements, and their connection coefficients `G_{λμ}`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num::{One, Zero};
use serde::Serialize;

use crate::center::{CenterBasis, CenterElement};
use crate::characters::character_table;
use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::scalar::{self, Rational};
use crate::series::{TruncSeries, Vars};
use crate::walks::{Constraint, Segment, StepKind};

/// A twist parameter: `coeff · name` for a formal `name`, or a number.
#[derive(Debug, Clone, PartialEq)]
pub enum Param {
    Formal { name: String, coeff: Rational },
    Value(Rational),
}

impl Param {
    pub fn formal(name: &str) -> Self {
        Param::Formal { name: name.to_string(), coeff: Rational::one() }
    }

    pub fn scaled(name: &str, coeff: Rational) -> Self {
        Param::Formal { name: name.to_string(), coeff }
    }

    pub fn value(v: Rational) -> Self {
        Param::Value(v)
    }

    pub fn name(&self) -> Option<&str> {
        match self {
            Param::Formal { name, .. } => Some(name),
            Param::Value(_) => None,
        }
    }

    pub fn series(&self, vars: &Arc<Vars>) -> TruncSeries {
        match self {
            Param::Formal { name, coeff } => TruncSeries::var(vars, name).scale(coeff),
            Param::Value(v) => TruncSeries::constant(vars, v.clone()),
        }
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Param::Formal { name, coeff } if coeff.is_one() => write!(f, "{name}"),
            Param::Formal { name, coeff } => write!(f, "({})*{name}", scalar::format(coeff)),
            Param::Value(v) => write!(f, "{}", scalar::format(v)),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum TwistAtom {
    /// `H(z, J) = Π_b (1 - z J_b)⁻¹`, cell factor `1/(1 - z c)`.
    H(Param),
    /// `E(w, J) = Π_b (1 + w J_b)`, cell factor `1 + w c`.
    E(Param),
    /// `e^{θ₀P₀ + βP₁}`. The `θ₀` direction is kept exact: it contributes
    /// the monomial `g^{|λ|}` in a grading parameter `g` standing for `e^{θ₀}`.
    Exp { theta0: Option<String>, beta: Param },
    /// `base^{P₀}`.
    Scale(Param),
}

impl TwistAtom {
    fn label(&self) -> &'static str {
        match self {
            TwistAtom::H(_) => "H",
            TwistAtom::E(_) => "E",
            TwistAtom::Exp { .. } => "Exp",
            TwistAtom::Scale(_) => "Scale",
        }
    }

    fn formal_names(&self) -> Vec<&str> {
        match self {
            TwistAtom::H(p) | TwistAtom::E(p) | TwistAtom::Scale(p) => p.name().into_iter().collect(),
            TwistAtom::Exp { theta0, beta } => theta0.as_deref().into_iter().chain(beta.name()).collect(),
        }
    }
}

/// An ordered product of twist atoms with per-parameter degree caps.
#[derive(Debug, Clone, PartialEq)]
pub struct TwistSpec {
    atoms: Vec<TwistAtom>,
    vars: Arc<Vars>,
}

impl TwistSpec {
    /// Every formal name must appear in exactly one atom slot and have a cap.
    pub fn new(atoms: Vec<TwistAtom>, caps: &[(&str, u32)]) -> Result<Self> {
        let mut seen: Vec<&str> = Vec::new();
        for name in atoms.iter().flat_map(TwistAtom::formal_names) {
            if seen.contains(&name) {
                return Err(Error::Parse(format!("twist parameter {name} used twice")));
            }
            if !caps.iter().any(|&(n, _)| n == name) {
                return Err(Error::Parse(format!("no degree cap for twist parameter {name}")));
            }
            seen.push(name);
        }
        let caps: Vec<(&str, u32)> = caps.iter().copied().filter(|(n, _)| seen.contains(n)).collect();
        Ok(TwistSpec { atoms, vars: Vars::new(&caps) })
    }

    /// `H(z)`: weakly monotone walks.
    pub fn monotone(z_cap: u32) -> Self {
        TwistSpec::new(vec![TwistAtom::H(Param::formal("z"))], &[("z", z_cap)]).unwrap()
    }

    /// `E(w)`: strictly monotone walks.
    pub fn strict(w_cap: u32) -> Self {
        TwistSpec::new(vec![TwistAtom::E(Param::formal("w"))], &[("w", w_cap)]).unwrap()
    }

    /// `e^{βP₁}`: unconstrained walks, counted at `β^k/k!`.
    pub fn plain(beta_cap: u32) -> Self {
        TwistSpec::new(vec![TwistAtom::Exp { theta0: None, beta: Param::formal("b") }], &[("b", beta_cap)]).unwrap()
    }

    /// `q^{P₀} e^{βP₁}`.
    pub fn okounkov(q_cap: u32, beta_cap: u32) -> Self {
        TwistSpec::new(
            vec![TwistAtom::Scale(Param::formal("q")), TwistAtom::Exp { theta0: None, beta: Param::formal("b") }],
            &[("q", q_cap), ("b", beta_cap)],
        )
        .unwrap()
    }

    /// `H(z) e^{βP₁}`: weakly monotone steps, then free ones.
    pub fn mixed(z_cap: u32, beta_cap: u32) -> Self {
        TwistSpec::new(
            vec![TwistAtom::H(Param::formal("z")), TwistAtom::Exp { theta0: None, beta: Param::formal("b") }],
            &[("z", z_cap), ("b", beta_cap)],
        )
        .unwrap()
    }

    /// `H(z) E(w)`: weakly monotone steps, then strictly monotone ones.
    pub fn weak_then_strict(z_cap: u32, w_cap: u32) -> Self {
        TwistSpec::new(
            vec![TwistAtom::H(Param::formal("z")), TwistAtom::E(Param::formal("w"))],
            &[("z", z_cap), ("w", w_cap)],
        )
        .unwrap()
    }

    /// `Π_α E(w_α)` with parameters `w1, w2, …`.
    pub fn multimonotone(w_caps: &[u32]) -> Self {
        let names: Vec<String> = (1..=w_caps.len()).map(|i| format!("w{i}")).collect();
        let atoms = names.iter().map(|n| TwistAtom::E(Param::formal(n))).collect();
        let caps: Vec<(&str, u32)> = names.iter().map(String::as_str).zip(w_caps.iter().copied()).collect();
        TwistSpec::new(atoms, &caps).unwrap()
    }

    pub fn atoms(&self) -> &[TwistAtom] {
        &self.atoms
    }

    pub fn vars(&self) -> &Arc<Vars> {
        &self.vars
    }

    /// Short name such as `"H"` or `"H*E"`.
    pub fn label(&self) -> String {
        let labels: Vec<&str> = self.atoms.iter().map(TwistAtom::label).collect();
        labels.join("*")
    }

    /// The product twist; parameter names must be disjoint.
    pub fn compose(&self, other: &TwistSpec) -> Result<TwistSpec> {
        let caps: Vec<(&str, u32)> = self
            .vars
            .names()
            .iter()
            .zip(self.vars.caps())
            .chain(other.vars.names().iter().zip(other.vars.caps()))
            .map(|(n, &c)| (n.as_str(), c))
            .collect();
        TwistSpec::new(self.atoms.iter().chain(&other.atoms).cloned().collect(), &caps)
    }

    /// The single-cell factor at content `c`, excluding `P₀` dependence.
    pub fn cell_factor(&self, c: i64) -> Result<TruncSeries> {
        let vars = &self.vars;
        let cq = scalar::int(c);
        let mut out = TruncSeries::one(vars);
        for atom in &self.atoms {
            let f = match atom {
                TwistAtom::H(p) => {
                    let denom = TruncSeries::one(vars) - p.series(vars).scale(&cq);
                    if denom.constant_term().is_zero() {
                        return Err(Error::Singular { j: c });
                    }
                    denom.inverse()?
                }
                TwistAtom::E(p) => TruncSeries::one(vars) + p.series(vars).scale(&cq),
                TwistAtom::Exp { beta, .. } => exp_of(beta, vars)?.pow_signed(c)?,
                TwistAtom::Scale(_) => continue,
            };
            out = &out * &f;
        }
        Ok(out)
    }

    /// The `P₀`-dependent factor `f(n)`.
    pub fn size_factor(&self, n: usize) -> TruncSeries {
        let vars = &self.vars;
        let mut out = TruncSeries::one(vars);
        for atom in &self.atoms {
            let f = match atom {
                TwistAtom::Scale(p) => p.series(vars).pow(n as u32),
                TwistAtom::Exp { theta0: Some(g), .. } => TruncSeries::monomial(vars, &[(g, n as u32)], Rational::one()),
                _ => continue,
            };
            out = &out * &f;
        }
        out
    }

    /// Multiplies the coefficient at `powers` by `k!` for each `β^k`, so that
    /// exponential-type parameters read as walk counts.
    pub fn normalized_coeff(&self, s: &TruncSeries, powers: &[(&str, u32)]) -> Rational {
        let mut c = s.coeff_of(powers);
        for &(name, e) in powers {
            if self.exponential_names().contains(&name) {
                c *= scalar::factorial(e as usize);
            }
        }
        c
    }

    fn exponential_names(&self) -> Vec<&str> {
        self.atoms
            .iter()
            .filter_map(|a| match a {
                TwistAtom::Exp { beta, .. } => beta.name(),
                _ => None,
            })
            .collect()
    }

    /// The walk constraint counted at the exponents of the step parameters,
    /// one segment per atom: `H` weak, `E` strict, `Exp` free. `None` if
    /// an atom has a numeric or rescaled step parameter.
    pub fn walk_constraint(&self, powers: &[(&str, u32)]) -> Option<Constraint> {
        let exp_of = |name: &str| powers.iter().find(|(n, _)| *n == name).map_or(0, |&(_, e)| e as usize);
        let mut segments = Vec::new();
        for atom in &self.atoms {
            let (kind, p) = match atom {
                TwistAtom::H(p) => (StepKind::Weak, p),
                TwistAtom::E(p) => (StepKind::Strict, p),
                TwistAtom::Exp { beta, .. } => (StepKind::Free, beta),
                TwistAtom::Scale(_) => continue,
            };
            match p {
                Param::Formal { name, coeff } if coeff.is_one() => segments.push(Segment::new(kind, exp_of(name))),
                _ => return None,
            }
        }
        Some(Constraint::Segments(segments))
    }

    /// Names of the step-counting parameters, in atom order.
    pub fn step_names(&self) -> Vec<&str> {
        self.atoms
            .iter()
            .filter_map(|a| match a {
                TwistAtom::H(p) | TwistAtom::E(p) | TwistAtom::Exp { beta: p, .. } => p.name(),
                TwistAtom::Scale(_) => None,
            })
            .collect()
    }
}

impl fmt::Display for TwistSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .atoms
            .iter()
            .map(|a| match a {
                TwistAtom::H(p) => format!("H({p})"),
                TwistAtom::E(p) => format!("E({p})"),
                TwistAtom::Exp { theta0: Some(g), beta } => format!("Exp({g},{beta})"),
                TwistAtom::Exp { theta0: None, beta } => format!("Exp({beta})"),
                TwistAtom::Scale(p) => format!("Scale({p})"),
            })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

fn exp_of(beta: &Param, vars: &Arc<Vars>) -> Result<TruncSeries> {
    match beta {
        Param::Value(v) if v.is_zero() => Ok(TruncSeries::one(vars)),
        Param::Value(v) => Err(Error::OutOfRange(format!(
            "e^({}·P1) is not rational; use a formal parameter",
            scalar::format(v)
        ))),
        p => p.series(vars).exp(),
    }
}

trait SignedPow {
    fn pow_signed(&self, e: i64) -> Result<TruncSeries>;
}

impl SignedPow for TruncSeries {
    fn pow_signed(&self, e: i64) -> Result<TruncSeries> {
        if e >= 0 {
            Ok(self.pow(e as u32))
        } else {
            Ok(self.inverse()?.pow(e.unsigned_abs() as u32))
        }
    }
}

/// `G(cont(λ)) = f(|λ|) Π_{(i,j)∈λ} F(j - i)`.
pub fn twist_eigenvalue(t: &TwistSpec, lambda: &Partition) -> Result<TruncSeries> {
    let mut factors: BTreeMap<i64, TruncSeries> = BTreeMap::new();
    let mut out = t.size_factor(lambda.size());
    for c in lambda.contents() {
        if let std::collections::btree_map::Entry::Vacant(e) = factors.entry(c) {
            e.insert(t.cell_factor(c)?);
        }
        out = &out * &factors[&c];
    }
    Ok(out)
}

/// `G_{λμ}` for all `λ, μ ⊢ n`, rows `λ` and columns `μ` in canonical order.
#[derive(Debug, Clone, PartialEq)]
pub struct GMatrix {
    pub n: usize,
    pub order: Vec<Partition>,
    pub entries: Vec<Vec<TruncSeries>>,
}

impl GMatrix {
    pub fn entry(&self, lambda: &Partition, mu: &Partition) -> &TruncSeries {
        let i = self.order.iter().position(|p| p == lambda).expect("partition of n");
        let j = self.order.iter().position(|p| p == mu).expect("partition of n");
        &self.entries[i][j]
    }

    /// Product in the class basis: `(A·B)_{λμ} = Σ_ν A_{λν} B_{νμ}`.
    pub fn compose(&self, other: &GMatrix, vars: &Arc<Vars>) -> Result<GMatrix> {
        if self.n != other.n {
            return Err(Error::SizeMismatch(format!("G matrices for n={} and n={}", self.n, other.n)));
        }
        let k = self.order.len();
        let mut entries = vec![vec![TruncSeries::zero(vars); k]; k];
        for (i, row) in entries.iter_mut().enumerate() {
            for (j, e) in row.iter_mut().enumerate() {
                for v in 0..k {
                    *e += &(&self.entries[i][v].embed(vars)? * &other.entries[v][j].embed(vars)?);
                }
            }
        }
        Ok(GMatrix { n: self.n, order: self.order.clone(), entries })
    }

    pub fn to_json(&self, twist: &str) -> String {
        #[derive(Serialize)]
        struct Entry<'a> {
            from: &'a Partition,
            to: &'a Partition,
            series: &'a TruncSeries,
        }
        #[derive(Serialize)]
        struct Doc<'a> {
            n: usize,
            twist: &'a str,
            entries: Vec<Entry<'a>>,
        }
        let mut entries = Vec::new();
        for (i, from) in self.order.iter().enumerate() {
            for (j, to) in self.order.iter().enumerate() {
                entries.push(Entry { from, to, series: &self.entries[i][j] });
            }
        }
        serde_json::to_string(&Doc { n: self.n, twist, entries }).expect("serializable")
    }
}

/// `G_{λμ} = Z_λ⁻¹ Σ_ν G(cont(ν)) χ_ν(λ) χ_ν(μ)`, so that `G(J)·C_λ = Σ_μ G_{λμ} C_μ`.
pub fn connection_coeffs(t: &TwistSpec, n: usize) -> Result<GMatrix> {
    let table = character_table(n)?;
    let order = partitions_of(n)?;
    let eig: Vec<TruncSeries> = order.iter().map(|nu| twist_eigenvalue(t, nu)).collect::<Result<_>>()?;
    let mut entries = Vec::with_capacity(order.len());
    for lambda in &order {
        let z_inv = lambda.z().recip();
        let mut row = Vec::with_capacity(order.len());
        for mu in &order {
            let mut acc = TruncSeries::zero(t.vars());
            for (nu, e) in order.iter().zip(&eig) {
                let w = table.value(nu, lambda) * table.value(nu, mu);
                if w != 0 {
                    acc += &e.scale(&scalar::int(w));
                }
            }
            row.push(acc.scale(&z_inv));
        }
        entries.push(row);
    }
    Ok(GMatrix { n, order, entries })
}

/// `G(J)·v`, computed diagonally on the idempotents; the result is in `v`'s basis.
pub fn apply_twist(t: &TwistSpec, v: &CenterElement) -> Result<CenterElement<TruncSeries>> {
    v.to_series().apply_diagonal(|lambda| twist_eigenvalue(t, lambda))
}

/// The twisted class sum `G(J)·C_λ` in the class basis.
pub fn twist_class(t: &TwistSpec, lambda: &Partition) -> Result<CenterElement<TruncSeries>> {
    apply_twist(t, &CenterElement::unit(lambda.size(), CenterBasis::ClassSums, lambda.clone())?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn eigenvalue_examples() {
        let h = TwistSpec::monotone(6);
        let e = twist_eigenvalue(&h, &p("2,1")).unwrap();
        let v = h.vars();
        let expected = TruncSeries::one(v)
            + TruncSeries::monomial(v, &[("z", 2)], int(1))
            + TruncSeries::monomial(v, &[("z", 4)], int(1))
            + TruncSeries::monomial(v, &[("z", 6)], int(1));
        assert_eq!(e, expected);

        let w = TwistSpec::strict(4);
        let e = twist_eigenvalue(&w, &p("2,1")).unwrap();
        assert_eq!(e, TruncSeries::one(w.vars()) - TruncSeries::monomial(w.vars(), &[("w", 2)], int(1)));

        let ok = TwistSpec::okounkov(5, 3);
        let e = twist_eigenvalue(&ok, &p("2,1")).unwrap();
        assert_eq!(e, TruncSeries::monomial(ok.vars(), &[("q", 3)], int(1)));
        let e = twist_eigenvalue(&ok, &p("3")).unwrap();
        // q³ e^{3β}
        assert_eq!(e.coeff_of(&[("q", 3), ("b", 2)]), frac(9, 2));
    }

    #[test]
    fn numeric_parameters() {
        let t = TwistSpec::new(vec![TwistAtom::H(Param::value(frac(1, 2)))], &[]).unwrap();
        // contents of (2,1): 1/(1-1/2)·1·1/(1+1/2)
        assert_eq!(twist_eigenvalue(&t, &p("2,1")).unwrap(), TruncSeries::scalar(frac(4, 3)));
        assert!(matches!(twist_eigenvalue(&t, &p("3")), Err(Error::Singular { j: 2 })));
        let bad = TwistSpec::new(vec![TwistAtom::Exp { theta0: None, beta: Param::value(int(1)) }], &[]).unwrap();
        assert!(twist_eigenvalue(&bad, &p("2")).is_err());
        assert!(TwistSpec::new(vec![TwistAtom::H(Param::formal("z")), TwistAtom::E(Param::formal("z"))], &[("z", 3)]).is_err());
        assert!(TwistSpec::new(vec![TwistAtom::H(Param::formal("z"))], &[]).is_err());
    }

    #[test]
    fn plain_walk_coefficient() {
        let t = TwistSpec::plain(2);
        let v = twist_class(&t, &p("1,1,1")).unwrap();
        assert_eq!(t.normalized_coeff(&v.coord(&p("3")), &[("b", 2)]), int(3));
        let g = connection_coeffs(&t, 3).unwrap();
        assert_eq!(g.entry(&p("1,1,1"), &p("3")), &v.coord(&p("3")));
    }

    #[test]
    fn symmetry_of_connection_coeffs() {
        for t in [TwistSpec::monotone(5), TwistSpec::weak_then_strict(3, 3), TwistSpec::okounkov(5, 3)] {
            for n in 1..=5 {
                let g = connection_coeffs(&t, n).unwrap();
                for lambda in &g.order {
                    for mu in &g.order {
                        let a = g.entry(lambda, mu).scale(&mu.z().recip());
                        let b = g.entry(mu, lambda).scale(&lambda.z().recip());
                        assert_eq!(a, b);
                    }
                }
            }
        }
    }

    #[test]
    fn composition_is_matrix_product() {
        let h = TwistSpec::monotone(4);
        let b = TwistSpec::plain(3);
        let hb = h.compose(&b).unwrap();
        for n in 2..=4 {
            let lhs = connection_coeffs(&hb, n).unwrap();
            let rhs = connection_coeffs(&h, n).unwrap().compose(&connection_coeffs(&b, n).unwrap(), hb.vars()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn idempotents_are_eigenvectors() {
        let t = TwistSpec::weak_then_strict(4, 3);
        for lambda in partitions_of(4).unwrap() {
            let f = CenterElement::unit(4, CenterBasis::Idempotents, lambda.clone()).unwrap();
            let out = apply_twist(&t, &f).unwrap();
            assert_eq!(out.coords().count(), 1);
            assert_eq!(out.coord(&lambda), twist_eigenvalue(&t, &lambda).unwrap());
        }
    }

    #[test]
    fn walk_constraint_mapping() {
        let t = TwistSpec::weak_then_strict(3, 3);
        assert_eq!(
            t.walk_constraint(&[("z", 2), ("w", 1)]),
            Some(Constraint::Segments(vec![Segment::new(StepKind::Weak, 2), Segment::new(StepKind::Strict, 1)]))
        );
        assert_eq!(t.step_names(), vec!["z", "w"]);
        assert_eq!(t.label(), "H*E");
        assert_eq!(t.to_string(), "H(z)*E(w)");
    }

    #[test]
    fn gmatrix_json_shape() {
        let g = connection_coeffs(&TwistSpec::monotone(2), 2).unwrap();
        let json = g.to_json("H");
        assert!(json.starts_with(r#"{"n":2,"twist":"H","entries":[{"from":"2","to":"2","series":{"#));
    }
}
