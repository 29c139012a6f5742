//! Identity checks grouped into suites, each comparing a fast computation
//! with an independent oracle. A failing check carries its first
//! counterexample as JSON.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num::{One, Zero};
use serde_json::{json, Value};

use crate::center::{CenterBasis, CenterElement};
use crate::characters::character_table;
use crate::convolution::{alpha_q_coeffs, family_coeffs, intertwine, r_lambda_shifted, Family, FamilyValue};
use crate::determinant::{distinct_rationals, hciz_determinant};
use crate::error::{Error, Result};
use crate::group_algebra::{class_sum, jm_power_sum, GroupAlgebraElement};
use crate::oracle::{self, center_multiply_by_constants, class_structure_constants};
use crate::partition::{partitions_of, Partition};
use crate::perm::Permutation;
use crate::scalar::{self, frac, int, Rational};
use crate::series::TruncSeries;
use crate::symfunc::schur_eval;
use crate::tau::{build_tau, count_from_coeff, exp_tensor, hurwitz_table, log_tau, tau_eval, TableKind, TableRow};
use crate::twist::{connection_coeffs, twist_class, twist_eigenvalue, Param, TwistAtom, TwistSpec};
use crate::walks::{count_walks, Constraint, WalkQuery};

/// `Err` carries the first counterexample.
pub type Outcome = std::result::Result<(), Value>;

fn fail_on(e: Error) -> Value {
    json!({ "error": e.to_string() })
}

fn run(f: impl FnOnce() -> Result<Outcome>) -> Outcome {
    f().unwrap_or_else(|e| Err(fail_on(e)))
}

fn s<T: fmt::Display>(x: &T) -> String {
    x.to_string()
}

/// The result of one check.
#[derive(Debug, Clone)]
pub struct CheckResult {
    pub suite: Suite,
    pub name: String,
    pub elapsed: Duration,
    pub outcome: Outcome,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.outcome.is_ok()
    }

    pub fn line(&self) -> String {
        let status = if self.passed() { "pass" } else { "FAIL" };
        format!("[{status}] {}/{} ({:.2}s)", self.suite, self.name, self.elapsed.as_secs_f64())
    }
}

pub fn timed(suite: Suite, name: &str, f: impl FnOnce() -> Outcome) -> CheckResult {
    let start = Instant::now();
    let outcome = f();
    CheckResult { suite, name: name.into(), elapsed: start.elapsed(), outcome }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Characters,
    Center,
    Walks,
    Tau,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::Characters, Suite::Center, Suite::Walks, Suite::Tau];

    pub fn default_n_max(&self) -> usize {
        match self {
            Suite::Characters | Suite::Center => 6,
            Suite::Walks => 5,
            Suite::Tau => 4,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Suite::Characters => "characters",
            Suite::Center => "center",
            Suite::Walks => "walks",
            Suite::Tau => "tau",
        };
        f.write_str(name)
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.to_string() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite `{s}`")))
    }
}

/// Caps shared by all suites.
#[derive(Debug, Clone)]
pub struct VerifyConfig {
    /// Overrides each suite's default size cap.
    pub n_max: Option<usize>,
    /// Number of variables `N` for the determinant checks.
    pub n_vars: usize,
    /// Degree cap for formal parameters.
    pub series_cap: u32,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { n_max: None, n_vars: 3, series_cap: 6, seed: 1 }
    }
}

pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> Vec<CheckResult> {
    let n = cfg.n_max.unwrap_or(suite.default_n_max());
    let cap = cfg.series_cap;
    let mut out = Vec::new();
    let mut check = |name: &str, f: &dyn Fn() -> Outcome| out.push(timed(suite, name, f));
    match suite {
        Suite::Characters => {
            check("orthogonality", &|| character_orthogonality(n));
            check("dimensions", &|| character_dimensions(n));
            check("alternant_characters", &|| characters_match_alternant(n.min(6)));
            check("schur_alternant", &|| schur_matches_alternant(n.min(6), cfg.seed));
        }
        Suite::Center => {
            check("basis_round_trip", &|| center_round_trip(n));
            check("idempotents", &|| idempotents(n.min(6)));
            check("universal_class_expressions", &|| universal_class_expressions(n.min(7)));
            check("jm_centrality", &|| jm_centrality(n.min(5), 4));
            check("twist_vs_group_algebra", &|| twist_matches_group_algebra(n.min(5), cap.min(3)));
            check("cut_and_join", &|| cut_and_join(n));
        }
        Suite::Walks => {
            check("walk_equality", &|| walk_equality(n, n >= 6));
            check("multimonotone_table", &|| multimonotone_table(n, 4).map(|_| ()));
        }
        Suite::Tau => {
            check("twisted_cauchy", &|| twisted_cauchy(n, cfg.seed));
            check("intertwining", &|| intertwining(8));
            check("alpha_q_branches", &|| alpha_q_branches(6, 5));
            check("okounkov_exponents", &|| okounkov_exponents(6, 4));
            check("hciz_determinant", &|| hciz_identity(cfg.n_vars, cap, cfg.seed));
            check("connectivity", &|| connectivity(n.min(5), 4, 5));
            check("log_exp_round_trip", &|| log_exp_round_trip(n));
            check("multimonotone_reparametrization", &|| multimonotone_reparametrization(n, cfg.seed));
        }
    }
    out
}

// characters

pub fn character_orthogonality(n_max: usize) -> Outcome {
    run(|| {
        for n in 0..=n_max {
            let t = character_table(n)?;
            if !t.row_orthogonality_holds() || !t.column_orthogonality_holds() {
                return Ok(Err(json!({ "n": n })));
            }
        }
        Ok(Ok(()))
    })
}

pub fn character_dimensions(n_max: usize) -> Outcome {
    run(|| {
        for n in 0..=n_max {
            let t = character_table(n)?;
            let id = Partition::hook_shape(n, 1.min(n));
            for lambda in &t.order {
                let expected = scalar::factorial(n) / lambda.hook_product();
                if t.value_q(lambda, &id) != expected {
                    return Ok(Err(json!({ "lambda": s(lambda), "chi": t.value(lambda, &id), "expected": scalar::format(&expected) })));
                }
            }
        }
        Ok(Ok(()))
    })
}

pub fn characters_match_alternant(n_max: usize) -> Outcome {
    run(|| {
        for n in 1..=n_max {
            let t = character_table(n)?;
            let alt = oracle::characters_by_alternant(n)?;
            for (i, lambda) in t.order.iter().enumerate() {
                for (j, mu) in t.order.iter().enumerate() {
                    if t.value(lambda, mu) != alt[i][j] {
                        return Ok(Err(json!({ "lambda": s(lambda), "mu": s(mu), "mn": t.value(lambda, mu), "alternant": alt[i][j] })));
                    }
                }
            }
        }
        Ok(Ok(()))
    })
}

pub fn schur_matches_alternant(n_max: usize, seed: u64) -> Outcome {
    run(|| {
        let x = distinct_rationals(seed, 3);
        for n in 0..=n_max {
            for lambda in partitions_of(n)? {
                let (a, b) = (schur_eval(&lambda, &x)?, oracle::schur_alternant(&lambda, &x)?);
                if a != b {
                    return Ok(Err(json!({ "lambda": s(&lambda), "powersum": scalar::format(&a), "alternant": scalar::format(&b) })));
                }
            }
        }
        Ok(Ok(()))
    })
}

// center

pub fn center_round_trip(n_max: usize) -> Outcome {
    run(|| {
        for n in 0..=n_max {
            for p in partitions_of(n)? {
                for basis in [CenterBasis::ClassSums, CenterBasis::Idempotents] {
                    let u = CenterElement::unit(n, basis, p.clone())?;
                    let other = match basis {
                        CenterBasis::ClassSums => CenterBasis::Idempotents,
                        CenterBasis::Idempotents => CenterBasis::ClassSums,
                    };
                    if u.to_basis(other)?.to_basis(basis)? != u {
                        return Ok(Err(json!({ "n": n, "partition": s(&p), "basis": format!("{basis:?}") })));
                    }
                }
            }
        }
        Ok(Ok(()))
    })
}

/// `F_λ F_ν = δ_{λν} F_λ`, multiplying through class-sum structure constants.
pub fn idempotents(n_max: usize) -> Outcome {
    run(|| {
        for n in 1..=n_max {
            let a = class_structure_constants(n)?;
            let order = partitions_of(n)?;
            for lambda in &order {
                let f = CenterElement::unit(n, CenterBasis::Idempotents, lambda.clone())?;
                for nu in &order {
                    let g = CenterElement::unit(n, CenterBasis::Idempotents, nu.clone())?;
                    let prod = center_multiply_by_constants(&a, &f, &g)?;
                    let expected = if lambda == nu { f.idem_to_class()? } else { CenterElement::zero(n, CenterBasis::ClassSums) };
                    if prod != expected {
                        return Ok(Err(json!({ "n": n, "lambda": s(lambda), "nu": s(nu) })));
                    }
                }
            }
        }
        Ok(Ok(()))
    })
}

fn class_with_ones(n: usize, head: &[usize]) -> Result<Partition> {
    let mut parts = head.to_vec();
    parts.extend(std::iter::repeat_n(1, n - head.iter().sum::<usize>()));
    Partition::new(parts)
}

/// `P₁ = C_{21^{n-2}}`, `P₂ - ½P₀(P₀-1) = C_{31^{n-3}}`,
/// `½P₁² - (3/2)P₂ + ½P₀(P₀-1) = C_{221^{n-4}}` and
/// `C₂C₂ = 3C_{31^{n-3}} + 2C_{221^{n-4}} + C(n,2)·1`, in `C[S_n]` for `4 ≤ n ≤ n_max`.
pub fn universal_class_expressions(n_max: usize) -> Outcome {
    run(|| {
        for n in 4..=n_max {
            let id = GroupAlgebraElement::identity(n);
            let half = frac(1, 2);
            let p0p0m1 = id.scale(&int((n * (n - 1)) as i64));
            let p1 = jm_power_sum(n, 1)?;
            let p2 = jm_power_sum(n, 2)?;
            let c2 = class_sum(n, &class_with_ones(n, &[2])?)?;
            let c3 = class_sum(n, &class_with_ones(n, &[3])?)?;
            let c22 = class_sum(n, &class_with_ones(n, &[2, 2])?)?;
            let checks = [
                ("P1", p1.clone(), c2.clone()),
                ("P2", &p2 - &p0p0m1.scale(&half), c3.clone()),
                ("P1^2", &(&(&p1 * &p1).scale(&half) - &p2.scale(&frac(3, 2))) + &p0p0m1.scale(&half), c22.clone()),
                ("C2*C2", &c2 * &c2, &(&c3.scale(&int(3)) + &c22.scale(&int(2))) + &id.scale(&scalar::binomial(n, 2))),
            ];
            for (name, lhs, rhs) in checks {
                if lhs != rhs {
                    return Ok(Err(json!({ "n": n, "identity": name })));
                }
            }
        }
        Ok(Ok(()))
    })
}

/// Each `P_i(J)` commutes with every transposition.
pub fn jm_centrality(n_max: usize, i_max: u32) -> Outcome {
    run(|| {
        for n in 2..=n_max {
            for i in 0..=i_max {
                let p = jm_power_sum(n, i)?;
                for b in 2..=n {
                    let t = GroupAlgebraElement::basis(Permutation::transposition(n, b - 1, b)?);
                    if !p.commutes_with(&t)? {
                        return Ok(Err(json!({ "n": n, "i": i, "transposition": [b - 1, b] })));
                    }
                }
            }
        }
        Ok(Ok(()))
    })
}

pub fn twist_matches_group_algebra(n_max: usize, cap: u32) -> Outcome {
    run(|| {
        let twists = [
            TwistSpec::monotone(cap),
            TwistSpec::strict(cap),
            TwistSpec::okounkov(n_max as u32, cap),
            TwistSpec::weak_then_strict(cap, cap),
        ];
        for t in &twists {
            for n in 1..=n_max {
                for lambda in partitions_of(n)? {
                    let fast = twist_class(t, &lambda)?;
                    let slow = oracle::twist_class_oracle(t, &lambda)?;
                    for mu in partitions_of(n)? {
                        let expected = slow.get(&mu).cloned().unwrap_or_else(|| TruncSeries::zero(t.vars()));
                        if fast.coord(&mu) != expected {
                            return Ok(Err(json!({
                                "twist": s(t), "from": s(&lambda), "to": s(&mu),
                                "diagonal": s(&fast.coord(&mu)), "group_algebra": s(&expected),
                            })));
                        }
                    }
                }
            }
        }
        Ok(Ok(()))
    })
}

/// The `β¹` coefficient of `e^{βP₁}·C_μ` maps to the cut-and-join operator
/// applied to `ch(C_μ)`, and `P₀·C_μ` to the Euler operator.
pub fn cut_and_join(n_max: usize) -> Outcome {
    run(|| {
        let t = TwistSpec::plain(1);
        for n in 1..=n_max {
            for mu in partitions_of(n)? {
                let c = CenterElement::unit(n, CenterBasis::ClassSums, mu.clone())?;
                let twisted = twist_class(&t, &mu)?;
                let linear = CenterElement::from_coords(
                    n,
                    CenterBasis::ClassSums,
                    twisted.coords().map(|(p, v)| (p.clone(), v.coeff_of(&[("b", 1)]))),
                )?;
                let ch = c.characteristic_map()?;
                if linear.characteristic_map()? != ch.cut_and_join()? {
                    return Ok(Err(json!({ "n": n, "mu": s(&mu), "operator": "cut_and_join" })));
                }
                let p0 = GroupAlgebraElement::from_center(&c)?.multiply(&jm_power_sum(n, 0)?)?.project_to_classes()?;
                if p0.characteristic_map()? != ch.euler_operator()? {
                    return Ok(Err(json!({ "n": n, "mu": s(&mu), "operator": "euler" })));
                }
            }
        }
        Ok(Ok(()))
    })
}

// walks

fn compositions(total: usize) -> Vec<Vec<usize>> {
    if total == 0 {
        return vec![vec![]];
    }
    (1..=total)
        .flat_map(|first| {
            compositions(total - first).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

/// Compares one twist coefficient with the walk oracle for every class pair.
fn compare_twist(t: &TwistSpec, n: usize, powers: &[(&str, u32)], constraint: &Constraint, pairs: Option<&[(Partition, Partition)]>) -> Result<Outcome> {
    let g = connection_coeffs(t, n)?;
    let all: Vec<(Partition, Partition)>;
    let pairs = match pairs {
        Some(p) => p,
        None => {
            all = g.order.iter().flat_map(|l| g.order.iter().map(move |m| (l.clone(), m.clone()))).collect();
            &all
        }
    };
    for (lambda, mu) in pairs {
        let coeff = t.normalized_coeff(g.entry(lambda, mu), powers);
        let d = count_walks(&WalkQuery::new(lambda.clone(), mu.clone(), constraint.clone()))?;
        if coeff != Rational::from_integer(d.into()) {
            return Ok(Err(json!({
                "n": n, "from": s(lambda), "to": s(mu), "constraint": s(constraint),
                "character_sum": scalar::format(&coeff), "walks": d.to_string(),
            })));
        }
    }
    Ok(Ok(()))
}

/// `G_{λμ}` against brute-force walk counts: plain (k ≤ 4), weakly monotone
/// (k ≤ 6), strictly monotone (k ≤ n-1), mixed (k ≤ 5) and multimonotone
/// (segments summing to at most 5), for `n ≤ min(n_max, 5)`, plus spot
/// checks at `n = 6` when asked.
pub fn walk_equality(n_max: usize, spot_checks: bool) -> Outcome {
    run(|| {
        let plain = TwistSpec::plain(4);
        let weak = TwistSpec::monotone(6);
        let strict = TwistSpec::strict(5);
        let mixed = TwistSpec::mixed(5, 5);
        let multi: Vec<Vec<usize>> = (1..=5).flat_map(compositions).collect();
        for n in 1..=n_max.min(5) {
            for k in 0..=4u32 {
                if let Err(e) = compare_twist(&plain, n, &[("b", k)], &Constraint::Plain(k as usize), None)? {
                    return Ok(Err(e));
                }
            }
            for k in 0..=6u32 {
                if let Err(e) = compare_twist(&weak, n, &[("z", k)], &Constraint::WeaklyMonotone(k as usize), None)? {
                    return Ok(Err(e));
                }
            }
            for k in 0..=(n as u32).saturating_sub(1) {
                if let Err(e) = compare_twist(&strict, n, &[("w", k)], &Constraint::StrictlyMonotone(k as usize), None)? {
                    return Ok(Err(e));
                }
            }
            for k in 0..=5u32 {
                for p in 0..=k {
                    let c = Constraint::Mixed { p: p as usize, k: k as usize };
                    if let Err(e) = compare_twist(&mixed, n, &[("z", p), ("b", k - p)], &c, None)? {
                        return Ok(Err(e));
                    }
                }
            }
            for d in &multi {
                let caps: Vec<u32> = d.iter().map(|&x| x as u32).collect();
                let t = TwistSpec::multimonotone(&caps);
                let names: Vec<String> = (1..=d.len()).map(|i| format!("w{i}")).collect();
                let powers: Vec<(&str, u32)> = names.iter().map(String::as_str).zip(caps.iter().copied()).collect();
                if let Err(e) = compare_twist(&t, n, &powers, &Constraint::MultiMonotone(d.clone()), None)? {
                    return Ok(Err(e));
                }
            }
        }
        if spot_checks {
            let n = 6;
            let pairs: Vec<(Partition, Partition)> = [("1,1,1,1,1,1", "6"), ("2,1,1,1,1", "3,3"), ("3,2,1", "2,2,1,1"), ("4,2", "4,1,1")]
                .iter()
                .map(|(a, b)| Ok((a.parse()?, b.parse()?)))
                .collect::<Result<_>>()?;
            let cases: Vec<(TwistSpec, Vec<(&str, u32)>, Constraint)> = vec![
                (TwistSpec::plain(3), vec![("b", 3)], Constraint::Plain(3)),
                (TwistSpec::monotone(4), vec![("z", 4)], Constraint::WeaklyMonotone(4)),
                (TwistSpec::strict(5), vec![("w", 5)], Constraint::StrictlyMonotone(5)),
                (TwistSpec::mixed(2, 2), vec![("z", 2), ("b", 2)], Constraint::Mixed { p: 2, k: 4 }),
                (TwistSpec::multimonotone(&[2, 2]), vec![("w1", 2), ("w2", 2)], Constraint::MultiMonotone(vec![2, 2])),
            ];
            for (t, powers, c) in &cases {
                if let Err(e) = compare_twist(t, n, powers, c, Some(&pairs))? {
                    return Ok(Err(e));
                }
            }
        }
        Ok(Ok(()))
    })
}

/// The `E·E` twist table against the segmented walk oracle, for
/// `n ≤ min(n_max, 5)` and `d₁ + d₂ ≤ total`. Returns the table.
pub fn multimonotone_table(n_max: usize, total: u32) -> std::result::Result<Vec<TableRow>, Value> {
    let rows = hurwitz_table(TableKind::Multi(2), n_max.min(5), total, false).map_err(fail_on)?;
    for r in &rows {
        let d: Vec<usize> = r.steps.iter().map(|(_, v)| *v as usize).collect();
        let q = WalkQuery::new(r.from.clone(), r.to.clone(), Constraint::MultiMonotone(d));
        let walks = count_walks(&q).map_err(fail_on)?;
        if r.count != walks.into() {
            return Err(json!({ "row": r, "walks": walks.to_string() }));
        }
    }
    Ok(rows)
}

// tau

/// Families covered by the twisted Cauchy check, with small caps.
pub fn tau_families() -> Vec<Family> {
    vec![
        Family::Vacuum,
        Family::okounkov(6, 3),
        Family::Twist(TwistSpec::monotone(3)),
        Family::Twist(TwistSpec::strict(3)),
        Family::Twist(TwistSpec::mixed(2, 2)),
        Family::Twist(TwistSpec::weak_then_strict(2, 2)),
        Family::multimonotone(6, &[2, 2]),
        Family::HcizExp { z_cap: 6, n_vars: 3 },
        Family::AlphaQ { alpha: frac(1, 2), q_cap: 9, n_vars: 3 },
    ]
}

/// Schur-side and power-sum-side assemblies agree degree by degree (checked
/// inside `build_tau`) and at a random point with 3 variables per side.
pub fn twisted_cauchy(n_max: usize, seed: u64) -> Outcome {
    run(|| {
        let v = distinct_rationals(seed, 6);
        let (a, b) = v.split_at(3);
        for fam in tau_families() {
            let t = build_tau(&fam, n_max)?;
            let schur = tau_eval(&t, a, b)?;
            let psum = t.powersum().evaluate(a, b);
            if schur != psum {
                return Ok(Err(json!({ "family": fam.label(), "schur": s(&schur), "powersum": s(&psum) })));
            }
        }
        Ok(Ok(()))
    })
}

fn h_twist(names: &[&str], cap: u32) -> Result<TwistSpec> {
    let atoms = names.iter().map(|n| TwistAtom::H(Param::formal(n))).collect();
    let caps: Vec<(&str, u32)> = names.iter().map(|&n| (n, cap)).collect();
    TwistSpec::new(atoms, &caps)
}

/// The shifted content product at `N = 0` equals the twist eigenvalue, for
/// one and two formal `z` parameters and `|λ| ≤ size_max`.
pub fn intertwining(size_max: usize) -> Outcome {
    run(|| {
        for t in [h_twist(&["z"], 6)?, h_twist(&["z1", "z2"], 3)?] {
            let c = intertwine(&t)?;
            for n in 0..=size_max {
                for lambda in partitions_of(n)? {
                    let r = r_lambda_shifted(&c, &lambda, 0)?.to_series(c.grading(), t.vars())?;
                    let e = twist_eigenvalue(&t, &lambda)?;
                    if r != e {
                        return Ok(Err(json!({ "twist": s(&t), "lambda": s(&lambda), "shifted": s(&r), "eigenvalue": s(&e) })));
                    }
                }
            }
        }
        Ok(Ok(()))
    })
}

/// The alpha-q coefficients from the `ρ_j` branches equal
/// `r₀ q^{|λ|} (N-α)_λ / (N)_λ`.
pub fn alpha_q_branches(size_max: usize, n_vars_max: usize) -> Outcome {
    run(|| {
        for alpha in [frac(1, 2), int(-3), frac(7, 3)] {
            let c = alpha_q_coeffs(&alpha, "q")?;
            for n_vars in 1..=n_vars_max {
                let fam = Family::AlphaQ { alpha: alpha.clone(), q_cap: (size_max + n_vars * n_vars) as u32, n_vars };
                for size in 0..=size_max {
                    for lambda in partitions_of(size)? {
                        let closed = family_coeffs(&fam, &lambda)?;
                        let ok = match &closed {
                            FamilyValue::DefinedZero => lambda.len() > n_vars,
                            FamilyValue::Value(v) => {
                                let r = r_lambda_shifted(&c, &lambda, n_vars as i64)?;
                                r.to_series(c.grading(), &fam.vars())? == *v
                            }
                        };
                        if !ok {
                            return Ok(Err(json!({ "alpha": scalar::format(&alpha), "N": n_vars, "lambda": s(&lambda) })));
                        }
                    }
                }
            }
        }
        Ok(Ok(()))
    })
}

/// `r_λ(N)` for `r_j = q e^{jβ}` is `q^{N(N-1)/2+|λ|} e^{β(N(N²-1)/6 + N|λ| + cont_λ)}`.
pub fn okounkov_exponents(size_max: usize, n_vars_max: i64) -> Outcome {
    run(|| {
        let t = TwistSpec::okounkov(1, 12);
        let c = intertwine(&t)?;
        let v = c.vars().clone();
        for n in 0..=n_vars_max {
            for size in 0..=size_max {
                for lambda in partitions_of(size)? {
                    let r = r_lambda_shifted(&c, &lambda, n)?;
                    let sz = size as i64;
                    let q_exp = n * (n - 1) / 2 + sz;
                    let beta_exp = n * (n * n - 1) / 6 + n * sz + lambda.content_sum();
                    let expected = TruncSeries::var(&v, "b").scale(&int(beta_exp)).exp()?;
                    if r.shift != q_exp || r.series != expected {
                        return Ok(Err(json!({ "N": n, "lambda": s(&lambda), "q_exponent": r.shift, "expected_q": q_exp, "expected_beta": beta_exp })));
                    }
                }
            }
        }
        Ok(Ok(()))
    })
}

/// `det(e^{-zN a_i b_j}) / ((-zN)^{N(N-1)/2} Δ(a)Δ(b))` equals the Schur
/// expansion of the exponential family through `z^{z_cap}`, for `N ≤ n_vars`.
pub fn hciz_identity(n_vars: usize, z_cap: u32, seed: u64) -> Outcome {
    run(|| {
        for n in 1..=n_vars {
            let v = distinct_rationals(seed + n as u64, 2 * n);
            let (a, b) = v.split_at(n);
            let det = hciz_determinant(n, a, b, z_cap)?;
            let t = build_tau(&Family::HcizExp { z_cap, n_vars: n }, (z_cap as usize).min(crate::tau::TAU_MAX_DEGREE))?;
            let tau = tau_eval(&t, a, b)?;
            if det != tau {
                let list = |x: &[Rational]| x.iter().map(scalar::format).collect::<Vec<_>>();
                return Ok(Err(json!({ "N": n, "a": list(a), "b": list(b), "determinant": s(&det), "schur": s(&tau) })));
            }
        }
        Ok(Ok(()))
    })
}

/// Connected coefficients of `ln τ` against transitive walk counts.
pub fn connectivity(n_max: usize, plain_max: u32, weak_max: u32) -> Outcome {
    run(|| {
        let cases = [
            (TwistSpec::plain(plain_max), "b", plain_max, false),
            (TwistSpec::monotone(weak_max), "z", weak_max, true),
        ];
        for (t, name, kmax, weak) in &cases {
            let log = log_tau(&build_tau(&Family::Twist(t.clone()), n_max)?)?;
            for n in 1..=n_max {
                for lambda in partitions_of(n)? {
                    for mu in partitions_of(n)? {
                        for k in 0..=*kmax {
                            let got = count_from_coeff(t, &log, &lambda, &mu, &[(name, k)]);
                            let c = if *weak { Constraint::WeaklyMonotone(k as usize) } else { Constraint::Plain(k as usize) };
                            let d = count_walks(&WalkQuery::new(lambda.clone(), mu.clone(), c.clone()).transitive(true))?;
                            if got != Rational::from_integer(d.into()) {
                                return Ok(Err(json!({
                                    "from": s(&lambda), "to": s(&mu), "constraint": s(&c),
                                    "log_tau": scalar::format(&got), "transitive_walks": d.to_string(),
                                })));
                            }
                        }
                    }
                }
            }
        }
        Ok(Ok(()))
    })
}

pub fn log_exp_round_trip(n_max: usize) -> Outcome {
    run(|| {
        for fam in [Family::okounkov(6, 3), Family::Twist(TwistSpec::monotone(3)), Family::HcizExp { z_cap: 5, n_vars: 2 }] {
            let t = build_tau(&fam, n_max)?;
            let back = exp_tensor(&log_tau(&t)?, n_max)?;
            if &back != t.powersum() {
                return Ok(Err(json!({ "family": fam.label() })));
            }
        }
        Ok(Ok(()))
    })
}

/// With `q = s Π u_α` and `w_α = -1/u_α`, `s^{|λ|} Π_α Π (u_α + i - j)`
/// equals `q^{|λ|} Π_α Π (1 + w_α c)`. The sign `(-1)^m` in front of `q`
/// contributes `(-1)^{m|λ|}`, which is checked as well.
pub fn multimonotone_reparametrization(size_max: usize, seed: u64) -> Outcome {
    run(|| {
        for m in 1..=3usize {
            let vals = distinct_rationals(seed + 100 + m as u64, m + 1);
            let (sv, u) = (&vals[0], &vals[1..]);
            if u.iter().any(Zero::is_zero) {
                continue;
            }
            let fam = Family::multimonotone(size_max as u32, &vec![size_max as u32; m]);
            let q: Rational = sv * u.iter().product::<Rational>();
            for n in 0..=size_max {
                for lambda in partitions_of(n)? {
                    let direct: Rational = scalar::pow(sv, n as i64)
                        * u.iter()
                            .map(|ua| lambda.contents().iter().map(|&c| ua - int(c)).product::<Rational>())
                            .product::<Rational>();
                    let r = family_coeffs(&fam, &lambda)?.value().cloned().unwrap_or_else(|| TruncSeries::zero(&fam.vars()));
                    let at = |q: &Rational| {
                        let mut x = r.specialize("q", q);
                        for (i, ua) in u.iter().enumerate() {
                            x = x.specialize(&format!("w{}", i + 1), &-ua.recip());
                        }
                        x.constant_term()
                    };
                    let plain = at(&q);
                    let signed_q = if m % 2 == 0 { q.clone() } else { -q.clone() };
                    let signed = at(&signed_q);
                    let sign = if (m * n) % 2 == 0 { Rational::one() } else { -Rational::one() };
                    if plain != direct || signed != &direct * &sign {
                        return Ok(Err(json!({
                            "m": m, "lambda": s(&lambda), "direct": scalar::format(&direct),
                            "q_unsigned": scalar::format(&plain), "q_signed": scalar::format(&signed),
                        })));
                    }
                }
            }
        }
        Ok(Ok(()))
    })
}
