//! Independent reference computations used to cross-check the fast paths:
//! Schur polynomials as alternant ratios, characters read off `a_δ p_μ`, and
//! twists expanded as explicit elements of `C[S_n]`.

use std::collections::BTreeMap;

use num::{One, Zero};

use crate::center::CenterElement;
use crate::error::{Error, Result};
use crate::group_algebra::{class_sum, jm_power_sum, GroupAlgebraElement};
use crate::partition::{partitions_of, Partition};
use crate::perm::Permutation;
use crate::scalar::{self, Rational};
use crate::series::TruncSeries;
use crate::twist::{Param, TwistAtom, TwistSpec};

/// Determinant by Gaussian elimination over `Q`.
pub fn det_rational(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut det = Rational::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !m[r][k].is_zero()) else {
            return Rational::zero();
        };
        if p != k {
            m.swap(p, k);
            det = -det;
        }
        det *= &m[k][k];
        for i in k + 1..n {
            let f = &m[i][k] / &m[k][k];
            if f.is_zero() {
                continue;
            }
            for j in k..n {
                let d = &f * &m[k][j];
                m[i][j] -= d;
            }
        }
    }
    det
}

/// `s_λ(x) = det(x_i^{λ_j + N - j}) / det(x_i^{N - j})` for distinct `x`.
pub fn schur_alternant(lambda: &Partition, x: &[Rational]) -> Result<Rational> {
    let n = x.len();
    if lambda.len() > n {
        return Ok(Rational::zero());
    }
    let alt = |shift: &dyn Fn(usize) -> usize| {
        det_rational(x.iter().map(|xi| (0..n).map(|j| scalar::pow(xi, shift(j) as i64)).collect()).collect())
    };
    let parts = lambda.parts();
    let den = alt(&|j| n - 1 - j);
    if den.is_zero() {
        return Err(Error::VandermondeZero("x"));
    }
    let num = alt(&|j| parts.get(j).copied().unwrap_or(0) + n - 1 - j);
    Ok(num / den)
}

type Monomials = BTreeMap<Vec<usize>, i64>;

fn poly_mul(a: &Monomials, b: &Monomials) -> Monomials {
    let mut out = Monomials::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<usize> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_insert(0) += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// The table `χ_λ(μ)` as the coefficient of `x^{λ+δ}` in `a_δ(x) p_μ(x)`
/// over `n` variables, indexed `[λ][μ]` in canonical order.
pub fn characters_by_alternant(n: usize) -> Result<Vec<Vec<i64>>> {
    let order = partitions_of(n)?;
    // a_δ = Σ_σ sgn(σ) x^{σ(δ)}
    let mut a_delta = Monomials::new();
    for sigma in Permutation::all(n) {
        let mut e = vec![0; n];
        for i in 0..n {
            e[sigma.apply(i + 1) - 1] = n - 1 - i;
        }
        let sign = if (n - sigma.cycle_type().len()).is_multiple_of(2) { 1 } else { -1 };
        *a_delta.entry(e).or_insert(0) += sign;
    }
    let power_sum = |k: usize| -> Monomials {
        (0..n)
            .map(|i| {
                let mut e = vec![0; n];
                e[i] = k;
                (e, 1)
            })
            .collect()
    };
    let mut table = vec![vec![0; order.len()]; order.len()];
    for (j, mu) in order.iter().enumerate() {
        let mut f = a_delta.clone();
        for &k in mu.parts() {
            f = poly_mul(&f, &power_sum(k));
        }
        for (i, lambda) in order.iter().enumerate() {
            let e: Vec<usize> = (0..n).map(|r| lambda.parts().get(r).copied().unwrap_or(0) + n - 1 - r).collect();
            table[i][j] = f.get(&e).copied().unwrap_or(0);
        }
    }
    Ok(table)
}

/// Class-sum structure constants: `C_μ C_ν = Σ_ρ a^ρ_{μν} C_ρ` with
/// `a^ρ_{μν} = #{g ∈ C_μ : g⁻¹ h_ρ ∈ C_ν}` for a fixed `h_ρ` of type `ρ`.
pub fn class_structure_constants(n: usize) -> Result<BTreeMap<(Partition, Partition, Partition), u64>> {
    let reps: Vec<(Partition, Permutation)> = partitions_of(n)?
        .into_iter()
        .map(|rho| {
            let h = Permutation::canonical_of_type(&rho);
            (rho, h)
        })
        .collect();
    let mut out = BTreeMap::new();
    for g in Permutation::all(n) {
        let mu = g.cycle_type();
        let g_inv = g.inverse();
        for (rho, h) in &reps {
            let nu = g_inv.compose(h).cycle_type();
            *out.entry((mu.clone(), nu, rho.clone())).or_insert(0) += 1;
        }
    }
    Ok(out)
}

/// The product of two center elements through the structure constants, in
/// class-sum coordinates.
pub fn center_multiply_by_constants(
    constants: &BTreeMap<(Partition, Partition, Partition), u64>,
    u: &CenterElement,
    v: &CenterElement,
) -> Result<CenterElement> {
    let u = u.idem_to_class()?;
    let v = v.idem_to_class()?;
    let mut coords: BTreeMap<Partition, Rational> = BTreeMap::new();
    for ((mu, nu, rho), a) in constants {
        let (x, y) = (u.coord(mu), v.coord(nu));
        if x.is_zero() || y.is_zero() {
            continue;
        }
        *coords.entry(rho.clone()).or_insert_with(Rational::zero) += x * y * scalar::int(*a as i64);
    }
    CenterElement::from_coords(u.n(), crate::center::CenterBasis::ClassSums, coords)
}

/// A series whose coefficients are group-algebra elements, keyed by
/// exponent vectors over the twist's parameters.
type SeriesElement = BTreeMap<Vec<u32>, GroupAlgebraElement>;

fn within(caps: &[u32], e: &[u32]) -> bool {
    e.iter().zip(caps).all(|(x, c)| x <= c)
}

fn series_mul(a: &SeriesElement, b: &SeriesElement, caps: &[u32]) -> Result<SeriesElement> {
    let mut out = SeriesElement::new();
    for (ea, xa) in a {
        for (eb, xb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            if !within(caps, &e) {
                continue;
            }
            let prod = xa.multiply(xb)?;
            let slot = out.entry(e).or_insert_with(|| GroupAlgebraElement::zero(prod.n()));
            *slot = slot.try_add(&prod)?;
        }
    }
    out.retain(|_, x| !x.is_zero());
    Ok(out)
}

fn monomial(len: usize, pos: usize, k: u32, x: GroupAlgebraElement) -> SeriesElement {
    let mut e = vec![0; len];
    e[pos] = k;
    SeriesElement::from([(e, x)])
}

/// `G(J)` as an explicit element of `C[S_n]`: `log G(J)` is `Σ_i z^i P_i / i`
/// for `H(z)`, `Σ_i (-1)^{i+1} w^i P_i / i` for `E(w)`, `β P₁` for
/// `e^{βP₁}`, and `Scale(q)`, `θ₀` contribute `q^n`, `g^n`. Every step
/// parameter must be formal.
pub fn twist_group_algebra(t: &TwistSpec, n: usize) -> Result<SeriesElement> {
    let vars = t.vars().clone();
    let caps = vars.caps().to_vec();
    let len = caps.len();
    let id = GroupAlgebraElement::identity(n);
    let formal = |p: &Param| -> Result<(usize, Rational)> {
        match p {
            Param::Formal { name, coeff } => Ok((vars.position(name).expect("declared parameter"), coeff.clone())),
            Param::Value(_) => Err(Error::OutOfRange("group-algebra oracle needs formal parameters".into())),
        }
    };
    let mut log = SeriesElement::new();
    let mut scale = SeriesElement::from([(vec![0; len], id.clone())]);
    let mut add_log = |pos: usize, i: u32, x: GroupAlgebraElement| -> Result<()> {
        let mut e = vec![0; len];
        e[pos] = i;
        if within(&caps, &e) {
            let slot = log.entry(e).or_insert_with(|| GroupAlgebraElement::zero(n));
            *slot = slot.try_add(&x)?;
        }
        Ok(())
    };
    for atom in t.atoms() {
        match atom {
            TwistAtom::H(p) | TwistAtom::E(p) => {
                let (pos, c) = formal(p)?;
                let strict = matches!(atom, TwistAtom::E(_));
                for i in 1..=caps[pos] {
                    let sign = if strict && i % 2 == 0 { -1 } else { 1 };
                    let w = scalar::pow(&c, i as i64) * scalar::frac(sign, i as i64);
                    add_log(pos, i, jm_power_sum(n, i)?.scale(&w))?;
                }
            }
            TwistAtom::Exp { theta0, beta } => {
                let (pos, c) = formal(beta)?;
                add_log(pos, 1, jm_power_sum(n, 1)?.scale(&c))?;
                if let Some(g) = theta0 {
                    let pos = vars.position(g).expect("declared parameter");
                    scale = series_mul(&scale, &monomial(len, pos, n as u32, id.clone()), &caps)?;
                }
            }
            TwistAtom::Scale(p) => {
                let (pos, c) = formal(p)?;
                let x = id.scale(&scalar::pow(&c, n as i64));
                scale = series_mul(&scale, &monomial(len, pos, n as u32, x), &caps)?;
            }
        }
    }
    let mut acc = SeriesElement::from([(vec![0; len], id.clone())]);
    let mut term = acc.clone();
    let total: u32 = caps.iter().sum();
    for k in 1..=total as i64 {
        term = series_mul(&term, &log, &caps)?;
        for x in term.values_mut() {
            *x = x.scale(&scalar::frac(1, k));
        }
        if term.is_empty() {
            break;
        }
        for (e, x) in &term {
            let slot = acc.entry(e.clone()).or_insert_with(|| GroupAlgebraElement::zero(n));
            *slot = slot.try_add(x)?;
        }
    }
    series_mul(&scale, &acc, &caps)
}

/// `G(J)·C_λ` computed by explicit multiplication in `C[S_n]`, in class-sum
/// coordinates.
pub fn twist_class_oracle(t: &TwistSpec, lambda: &Partition) -> Result<BTreeMap<Partition, TruncSeries>> {
    let n = lambda.size();
    let vars = t.vars().clone();
    let g = twist_group_algebra(t, n)?;
    let c = class_sum(n, lambda)?;
    let mut out: BTreeMap<Partition, TruncSeries> = BTreeMap::new();
    for (e, x) in &g {
        let proj: CenterElement = x.multiply(&c)?.project_to_classes()?;
        let powers: Vec<(&str, u32)> = vars.names().iter().map(String::as_str).zip(e.iter().copied()).collect();
        for (mu, coeff) in proj.coords() {
            let term = TruncSeries::monomial(&vars, &powers, coeff.clone());
            let slot = out.entry(mu.clone()).or_insert_with(|| TruncSeries::zero(&vars));
            *slot += &term;
        }
    }
    out.retain(|_, s| !s.is_zero());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::character_table;
    use crate::scalar::{frac, int};
    use crate::symfunc::schur_eval;
    use crate::twist::twist_class;

    #[test]
    fn alternant_matches_powersum_schur() {
        let x = [frac(1, 2), int(2), int(-1)];
        for n in 0..=5 {
            for lambda in partitions_of(n).unwrap() {
                assert_eq!(schur_alternant(&lambda, &x).unwrap(), schur_eval(&lambda, &x).unwrap(), "{lambda}");
            }
        }
        assert!(schur_alternant(&Partition::empty(), &[int(1), int(1)]).is_err());
    }

    #[test]
    fn alternant_characters_match_table() {
        for n in 1..=5 {
            let t = character_table(n).unwrap();
            let alt = characters_by_alternant(n).unwrap();
            for (i, lambda) in t.order.iter().enumerate() {
                for (j, mu) in t.order.iter().enumerate() {
                    assert_eq!(alt[i][j], t.value(lambda, mu), "{lambda} at {mu}");
                }
            }
        }
    }

    #[test]
    fn structure_constants_give_idempotents() {
        use crate::center::CenterBasis;
        let n = 4;
        let a = class_structure_constants(n).unwrap();
        let c2 = Partition::hook_shape(n, 2);
        let u = CenterElement::unit(n, CenterBasis::ClassSums, c2.clone()).unwrap();
        let sq = center_multiply_by_constants(&a, &u, &u).unwrap();
        assert_eq!(sq, u.center_multiply(&u).unwrap());
        for lambda in partitions_of(n).unwrap() {
            let f = CenterElement::unit(n, CenterBasis::Idempotents, lambda).unwrap();
            assert_eq!(center_multiply_by_constants(&a, &f, &f).unwrap(), f.idem_to_class().unwrap());
        }
    }

    #[test]
    fn group_algebra_twists_match_diagonal_action() {
        let twists = [
            TwistSpec::monotone(3),
            TwistSpec::strict(3),
            TwistSpec::okounkov(4, 2),
            TwistSpec::weak_then_strict(2, 2),
        ];
        for t in &twists {
            for n in 1..=4 {
                for lambda in partitions_of(n).unwrap() {
                    let fast = twist_class(t, &lambda).unwrap();
                    let slow = twist_class_oracle(t, &lambda).unwrap();
                    for mu in partitions_of(n).unwrap() {
                        let s = slow.get(&mu).cloned().unwrap_or_else(|| TruncSeries::zero(t.vars()));
                        assert_eq!(fast.coord(&mu), s, "{t} {lambda} -> {mu}");
                    }
                }
            }
        }
    }
}
