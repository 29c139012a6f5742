//! Diagonal convolution coefficients `ρ_j`, `r_j = ρ_j/ρ_{j-1}`, `T_j = ln ρ_j`
//! and the shifted content products `r_λ(N) = r₀(N) Π_{(i,j)∈λ} r_{N+j-i}`.

use std::sync::Arc;

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::{pochhammer, pochhammer_partition, Partition};
use crate::scalar::{self, Rational};
use crate::series::{TruncSeries, Vars};
use crate::twist::{twist_eigenvalue, Param, TwistAtom, TwistSpec};

/// `g^shift · series`, where `g` is an exact grading parameter (such as `q`
/// or `e^{θ₀}`) whose exponent may be negative.
#[derive(Debug, Clone, PartialEq)]
pub struct Graded {
    pub shift: i64,
    pub series: TruncSeries,
}

impl Graded {
    pub fn new(shift: i64, series: TruncSeries) -> Self {
        Graded { shift, series }
    }

    pub fn is_zero(&self) -> bool {
        self.series.is_zero()
    }

    pub fn mul(&self, other: &Graded) -> Graded {
        Graded { shift: self.shift + other.shift, series: &self.series * &other.series }
    }

    /// Fails on a zero or non-invertible series.
    pub fn inverse(&self) -> Result<Graded> {
        Ok(Graded { shift: -self.shift, series: self.series.inverse()? })
    }

    /// Re-expands as an ordinary series, with the grading parameter `g` as a
    /// variable of `target` (or ignored if there is none).
    pub fn to_series(&self, grading: Option<&str>, target: &Arc<Vars>) -> Result<TruncSeries> {
        let base = self.series.embed(target)?;
        match grading {
            None => Ok(base),
            Some(g) => {
                if self.shift < 0 {
                    return Err(Error::OutOfRange(format!("negative power {g}^{}", self.shift)));
                }
                Ok(&base * &TruncSeries::monomial(target, &[(g, self.shift as u32)], Rational::one()))
            }
        }
    }
}

/// `T_j = shift·ln g + series`, available when `ρ_j`'s series has constant term 1.
#[derive(Debug, Clone, PartialEq)]
pub struct LogForm {
    pub shift: i64,
    pub series: TruncSeries,
}

#[derive(Debug, Clone, PartialEq)]
enum Source {
    /// `r_j` is the twist's cell factor at content `j`, times its grading.
    Content { spec: TwistSpec, numeric_scale: Rational },
    /// `ρ_j = u^j/j!` for `j ≥ 0`, zero below, with `u = -zN`.
    Exponential { n: i64 },
    /// `ρ_j = q^j (1-α)_j / j!` for `j ≥ 1`, one for `j ≤ 0`.
    AlphaQ { alpha: Rational },
}

/// A family of convolution coefficients over formal parameters `vars`, with
/// an optional exact grading parameter.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvolutionCoeffs {
    source: Source,
    vars: Arc<Vars>,
    grading: Option<String>,
}

impl ConvolutionCoeffs {
    pub fn vars(&self) -> &Arc<Vars> {
        &self.vars
    }

    pub fn grading(&self) -> Option<&str> {
        self.grading.as_deref()
    }

    /// `ρ_j` by the three-branch definition.
    pub fn rho(&self, j: i64) -> Result<Graded> {
        match &self.source {
            Source::Content { .. } => {
                let one = Graded::new(0, TruncSeries::one(&self.vars));
                if j > 0 {
                    (1..=j).try_fold(one, |acc, k| Ok(acc.mul(&self.r(k)?)))
                } else {
                    (j + 1..=0).try_fold(one, |acc, k| Ok(acc.mul(&self.r(k)?.inverse().map_err(|_| Error::Singular { j: k })?)))
                }
            }
            Source::Exponential { n } => {
                if j < 0 {
                    return Ok(Graded::new(0, TruncSeries::zero(&self.vars)));
                }
                let c = scalar::pow(&scalar::int(-n), j) / scalar::factorial(j as usize);
                Ok(Graded::new(j, TruncSeries::constant(&self.vars, c)))
            }
            Source::AlphaQ { alpha } => {
                if j <= 0 {
                    return Ok(Graded::new(0, TruncSeries::one(&self.vars)));
                }
                let c = pochhammer(&(Rational::one() - alpha), j as usize) / scalar::factorial(j as usize);
                Ok(Graded::new(j, TruncSeries::constant(&self.vars, c)))
            }
        }
    }

    /// `r_j`, by the family's closed form.
    pub fn r(&self, j: i64) -> Result<Graded> {
        match &self.source {
            Source::Content { spec, numeric_scale } => {
                let cell = spec.cell_factor(j)?.embed(&self.vars)?;
                let shift = i64::from(self.grading.is_some());
                Ok(Graded::new(shift, cell.scale(numeric_scale)))
            }
            Source::Exponential { n } => {
                if j <= 0 {
                    return Err(Error::Singular { j });
                }
                Ok(Graded::new(1, TruncSeries::constant(&self.vars, scalar::frac(-n, j))))
            }
            Source::AlphaQ { alpha } => {
                if j <= 0 {
                    return Ok(Graded::new(0, TruncSeries::one(&self.vars)));
                }
                let c = (scalar::int(j) - alpha) / scalar::int(j);
                Ok(Graded::new(1, TruncSeries::constant(&self.vars, c)))
            }
        }
    }

    /// `r_j` as the literal ratio `ρ_j / ρ_{j-1}`.
    pub fn r_from_rho(&self, j: i64) -> Result<Graded> {
        let prev = self.rho(j - 1)?;
        if prev.is_zero() {
            return Err(Error::Singular { j });
        }
        Ok(self.rho(j)?.mul(&prev.inverse().map_err(|_| Error::Singular { j })?))
    }

    /// `T_j = ln ρ_j`, where the logarithm is a formal series.
    pub fn t(&self, j: i64) -> Option<LogForm> {
        let rho = self.rho(j).ok()?;
        let series = rho.series.ln().ok()?;
        Some(LogForm { shift: rho.shift, series })
    }

    /// `r₀(N)`: `Π_{j<N} ρ_j` for `N > 0`, `1` at zero, `Π_{N≤j<0} ρ_j⁻¹` for `N < 0`.
    pub fn r0(&self, n: i64) -> Result<Graded> {
        let one = Graded::new(0, TruncSeries::one(&self.vars));
        if n >= 0 {
            (0..n).try_fold(one, |acc, j| Ok(acc.mul(&self.rho(j)?)))
        } else {
            (n..0).try_fold(one, |acc, j| Ok(acc.mul(&self.rho(j)?.inverse().map_err(|_| Error::Singular { j })?)))
        }
    }
}

/// The convolution family `ℐ(G)` of a content-product twist. Supports any
/// product of `H`, `E`, `Exp` and `Scale` atoms with at most one formal
/// grading parameter (`Scale(q)` or the `θ₀` of `Exp`).
pub fn intertwine(t: &TwistSpec) -> Result<ConvolutionCoeffs> {
    let mut grading: Option<String> = None;
    let mut numeric_scale = Rational::one();
    let mut set_grading = |name: &str| -> Result<()> {
        if grading.replace(name.to_string()).is_some() {
            return Err(Error::OutOfRange("more than one formal grading parameter".into()));
        }
        Ok(())
    };
    for atom in t.atoms() {
        match atom {
            TwistAtom::Scale(Param::Value(v)) => numeric_scale *= v,
            TwistAtom::Scale(Param::Formal { name, coeff }) => {
                numeric_scale *= coeff;
                set_grading(name)?;
            }
            TwistAtom::Exp { theta0: Some(g), .. } => set_grading(g)?,
            _ => {}
        }
    }
    let spec_vars: Vec<(&str, u32)> = t
        .vars()
        .names()
        .iter()
        .zip(t.vars().caps())
        .filter(|(n, _)| Some(n.as_str()) != grading.as_deref())
        .map(|(n, &c)| (n.as_str(), c))
        .collect();
    let vars = Vars::new(&spec_vars);
    // the cell factors never involve the grading parameter
    let stripped: Vec<TwistAtom> = t
        .atoms()
        .iter()
        .filter_map(|a| match a {
            TwistAtom::Scale(_) => None,
            TwistAtom::Exp { beta, .. } => Some(TwistAtom::Exp { theta0: None, beta: beta.clone() }),
            other => Some(other.clone()),
        })
        .collect();
    let spec = TwistSpec::new(stripped, &spec_vars)?;
    if numeric_scale.is_zero() {
        return Err(Error::Singular { j: 0 });
    }
    Ok(ConvolutionCoeffs { source: Source::Content { spec, numeric_scale }, vars, grading })
}

/// `ρ_j = (-zN)^j / j!`: the HCIZ family, graded by `z`.
pub fn hciz_coeffs(z: &str, n: usize) -> ConvolutionCoeffs {
    ConvolutionCoeffs { source: Source::Exponential { n: n as i64 }, vars: Vars::empty(), grading: Some(z.to_string()) }
}

/// `ρ_j = q^j (1-α)_j / j!` for `j ≥ 1`, graded by `q`.
pub fn alpha_q_coeffs(alpha: &Rational, q: &str) -> Result<ConvolutionCoeffs> {
    if scalar::is_integer(alpha) && *alpha > Rational::zero() {
        return Err(Error::OutOfRange(format!("α = {} must not be a positive integer", scalar::format(alpha))));
    }
    Ok(ConvolutionCoeffs { source: Source::AlphaQ { alpha: alpha.clone() }, vars: Vars::empty(), grading: Some(q.to_string()) })
}

/// `r_λ(N) = r₀(N) Π_{(i,j)∈λ} r_{N+j-i}`.
pub fn r_lambda_shifted(c: &ConvolutionCoeffs, lambda: &Partition, n: i64) -> Result<Graded> {
    let mut out = c.r0(n)?;
    for content in lambda.contents() {
        out = out.mul(&c.r(n + content)?);
    }
    Ok(out)
}

/// A family coefficient, or the marker for `ℓ(λ) > N`, where `S_λ` vanishes
/// on `N` variables and the closed form divides by `(N)_λ = 0`.
#[derive(Debug, Clone, PartialEq)]
pub enum FamilyValue {
    Value(TruncSeries),
    DefinedZero,
}

impl FamilyValue {
    pub fn value(&self) -> Option<&TruncSeries> {
        match self {
            FamilyValue::Value(s) => Some(s),
            FamilyValue::DefinedZero => None,
        }
    }
}

/// Named coefficient families for hypergeometric tau functions.
#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    /// All `r_λ = 1`.
    Vacuum,
    /// The eigenvalues of a content-product twist (sheet count `N = 0`).
    Twist(TwistSpec),
    /// `r_λ^{exp}(N) = (-zN)^{|λ|} / (Π_{k<N} k! · (N)_λ)` in the formal `z`.
    HcizExp { z_cap: u32, n_vars: usize },
    /// `r₀(N) q^{|λ|} (N-α)_λ / (N)_λ` in the formal `q`.
    AlphaQ { alpha: Rational, q_cap: u32, n_vars: usize },
}

impl Family {
    /// `q^{P₀} e^{βP₁}`: double Hurwitz numbers.
    pub fn okounkov(q_cap: u32, beta_cap: u32) -> Family {
        Family::Twist(TwistSpec::okounkov(q_cap, beta_cap))
    }

    /// `q^{P₀} Π_α E(w_α)`: multimonotone walks.
    pub fn multimonotone(q_cap: u32, w_caps: &[u32]) -> Family {
        let q = TwistSpec::new(vec![TwistAtom::Scale(Param::formal("q"))], &[("q", q_cap)]).unwrap();
        Family::Twist(q.compose(&TwistSpec::multimonotone(w_caps)).unwrap())
    }

    pub fn vars(&self) -> Arc<Vars> {
        match self {
            Family::Vacuum => Vars::empty(),
            Family::Twist(t) => t.vars().clone(),
            Family::HcizExp { z_cap, .. } => Vars::new(&[("z", *z_cap)]),
            Family::AlphaQ { q_cap, .. } => Vars::new(&[("q", *q_cap)]),
        }
    }

    pub fn label(&self) -> String {
        match self {
            Family::Vacuum => "vacuum".into(),
            Family::Twist(t) => t.to_string(),
            Family::HcizExp { n_vars, .. } => format!("hciz_exp(N={n_vars})"),
            Family::AlphaQ { alpha, n_vars, .. } => format!("alpha_q(alpha={},N={n_vars})", scalar::format(alpha)),
        }
    }

    /// The number of variables `N` the family is tied to, if any.
    pub fn n_vars(&self) -> Option<usize> {
        match self {
            Family::HcizExp { n_vars, .. } | Family::AlphaQ { n_vars, .. } => Some(*n_vars),
            _ => None,
        }
    }
}

/// `r₀^{(α,q)}(N) = q^{N(N-1)/2} Π_{j<N} (1-α)_j / j!`.
pub fn alpha_q_r0(alpha: &Rational, n: usize, vars: &Arc<Vars>) -> TruncSeries {
    let c: Rational = (0..n).map(|j| pochhammer(&(Rational::one() - alpha), j) / scalar::factorial(j)).product();
    TruncSeries::monomial(vars, &[("q", (n * n.saturating_sub(1) / 2) as u32)], c)
}

/// The family's coefficient `r_λ`, from its closed form.
pub fn family_coeffs(family: &Family, lambda: &Partition) -> Result<FamilyValue> {
    let vars = family.vars();
    let size = lambda.size() as u32;
    match family {
        Family::Vacuum => Ok(FamilyValue::Value(TruncSeries::one(&vars))),
        Family::Twist(t) => Ok(FamilyValue::Value(twist_eigenvalue(t, lambda)?)),
        Family::HcizExp { n_vars, .. } => {
            if lambda.len() > *n_vars {
                return Ok(FamilyValue::DefinedZero);
            }
            let n = scalar::int(*n_vars as i64);
            let norm: Rational = (0..*n_vars).map(scalar::factorial).product();
            let c = scalar::pow(&-n.clone(), size as i64) / (norm * pochhammer_partition(&n, lambda));
            Ok(FamilyValue::Value(TruncSeries::monomial(&vars, &[("z", size)], c)))
        }
        Family::AlphaQ { alpha, n_vars, .. } => {
            if lambda.len() > *n_vars {
                return Ok(FamilyValue::DefinedZero);
            }
            let n = scalar::int(*n_vars as i64);
            let ratio = pochhammer_partition(&(&n - alpha), lambda) / pochhammer_partition(&n, lambda);
            let q_part = TruncSeries::monomial(&vars, &[("q", size)], ratio);
            Ok(FamilyValue::Value(&alpha_q_r0(alpha, *n_vars, &vars) * &q_part))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{partitions_of, pochhammer_cells};
    use crate::scalar::{frac, int};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn h_family(names: &[&str], cap: u32, theta0: bool) -> TwistSpec {
        let mut atoms: Vec<TwistAtom> = names.iter().map(|n| TwistAtom::H(Param::formal(n))).collect();
        let mut caps: Vec<(&str, u32)> = names.iter().map(|&n| (n, cap)).collect();
        if theta0 {
            atoms.push(TwistAtom::Exp { theta0: Some("t".into()), beta: Param::value(int(0)) });
            caps.push(("t", 12));
        }
        TwistSpec::new(atoms, &caps).unwrap()
    }

    #[test]
    fn rho_branches_single_z() {
        let c = intertwine(&h_family(&["z"], 4, false)).unwrap();
        let v = c.vars().clone();
        let one = TruncSeries::one(&v);
        let z = TruncSeries::var(&v, "z");
        let expected = (&one - &z).inverse().unwrap() * (&one - &z.scale(&int(2))).inverse().unwrap();
        assert_eq!(c.rho(2).unwrap(), Graded::new(0, expected));
        assert_eq!(c.rho(0).unwrap(), Graded::new(0, one.clone()));
        assert_eq!(c.rho(-2).unwrap(), Graded::new(0, &one + &z));
    }

    #[test]
    fn ratios_match_closed_forms() {
        let families = vec![
            intertwine(&h_family(&["z1", "z2"], 4, true)).unwrap(),
            intertwine(&TwistSpec::okounkov(6, 4)).unwrap(),
            intertwine(&TwistSpec::weak_then_strict(3, 3)).unwrap(),
            hciz_coeffs("z", 3),
            alpha_q_coeffs(&frac(1, 2), "q").unwrap(),
        ];
        for c in &families {
            for j in -4..=5 {
                match (c.r(j), c.r_from_rho(j)) {
                    (Ok(a), Ok(b)) => assert_eq!(a, b, "j={j}"),
                    (Err(_), Err(_)) => {}
                    (a, b) => panic!("j={j}: {a:?} vs {b:?}"),
                }
            }
        }
    }

    #[test]
    fn log_form_differences() {
        let c = intertwine(&h_family(&["z"], 5, true)).unwrap();
        for j in -3..=4 {
            let (a, b) = (c.t(j).unwrap(), c.t(j - 1).unwrap());
            let r = c.r(j).unwrap();
            assert_eq!(a.shift - b.shift, r.shift);
            assert_eq!((&a.series - &b.series).exp().unwrap(), r.series);
        }
        assert!(alpha_q_coeffs(&frac(1, 2), "q").unwrap().t(2).is_none());
    }

    #[test]
    fn singular_parameters() {
        let t = TwistSpec::new(vec![TwistAtom::H(Param::value(frac(1, 3)))], &[]).unwrap();
        let c = intertwine(&t).unwrap();
        assert!(matches!(c.r(3), Err(Error::Singular { j: 3 })));
        assert!(c.r(2).is_ok());
        assert!(r_lambda_shifted(&c, &p("2"), 0).is_ok());
        assert!(matches!(r_lambda_shifted(&c, &p("4"), 0), Err(Error::Singular { j: 3 })));
        let e = TwistSpec::new(vec![TwistAtom::E(Param::value(frac(1, 2)))], &[]).unwrap();
        assert!(intertwine(&e).unwrap().rho(-2).is_ok());
        assert!(matches!(intertwine(&e).unwrap().rho(-3), Err(Error::Singular { j: -2 })));
        assert!(alpha_q_coeffs(&int(2), "q").is_err());
        assert!(matches!(hciz_coeffs("z", 2).r(0), Err(Error::Singular { j: 0 })));
    }

    #[test]
    fn shifted_product_at_zero_is_eigenvalue() {
        for t in [h_family(&["z"], 6, false), h_family(&["z1", "z2"], 3, true)] {
            let c = intertwine(&t).unwrap();
            for n in 0..=6 {
                for lambda in partitions_of(n).unwrap() {
                    let r = r_lambda_shifted(&c, &lambda, 0).unwrap();
                    assert_eq!(r.to_series(c.grading(), t.vars()).unwrap(), twist_eigenvalue(&t, &lambda).unwrap());
                }
            }
        }
        let c = intertwine(&h_family(&["z"], 3, false)).unwrap();
        assert_eq!(r_lambda_shifted(&c, &Partition::empty(), 3).unwrap(), c.r0(3).unwrap());
    }

    #[test]
    fn okounkov_exponents() {
        let c = intertwine(&TwistSpec::okounkov(1, 8)).unwrap();
        let v = c.vars().clone();
        for n in 0..=4i64 {
            for size in 0..=4 {
                for lambda in partitions_of(size).unwrap() {
                    let r = r_lambda_shifted(&c, &lambda, n).unwrap();
                    let s = size as i64;
                    assert_eq!(r.shift, n * (n - 1) / 2 + s);
                    let beta_exp = n * (n * n - 1) / 6 + n * s + lambda.content_sum();
                    let expected = TruncSeries::var(&v, "b").scale(&int(beta_exp)).exp().unwrap();
                    assert_eq!(r.series, expected, "N={n} λ={lambda}");
                }
            }
        }
    }

    #[test]
    fn hciz_closed_form() {
        for n_vars in 1..=3usize {
            let c = hciz_coeffs("z", n_vars);
            let fam = Family::HcizExp { z_cap: 12, n_vars };
            let shift = (n_vars * (n_vars - 1) / 2) as i64;
            for size in 0..=5 {
                for lambda in partitions_of(size).unwrap() {
                    let closed = family_coeffs(&fam, &lambda).unwrap();
                    if lambda.len() > n_vars {
                        assert_eq!(closed, FamilyValue::DefinedZero);
                        continue;
                    }
                    // the branch product carries the extra factor (-zN)^{N(N-1)/2}
                    let r = r_lambda_shifted(&c, &lambda, n_vars as i64).unwrap();
                    assert_eq!(r.shift, size as i64 + shift);
                    let u_pow = scalar::pow(&int(-(n_vars as i64)), shift);
                    let closed = closed.value().unwrap().coeff_of(&[("z", size as u32)]);
                    assert_eq!(r.series.constant_term(), closed * u_pow);
                    let direct = scalar::pow(&int(-(n_vars as i64)), size as i64)
                        / ((0..n_vars).map(scalar::factorial).product::<Rational>() * pochhammer_cells(&int(n_vars as i64), &lambda));
                    assert_eq!(r.series.constant_term(), direct * scalar::pow(&int(-(n_vars as i64)), shift));
                }
            }
        }
    }

    #[test]
    fn alpha_q_branch_product() {
        for alpha in [frac(1, 2), int(-3), frac(7, 3)] {
            let c = alpha_q_coeffs(&alpha, "q").unwrap();
            for n_vars in 1..=5usize {
                let fam = Family::AlphaQ { alpha: alpha.clone(), q_cap: 30, n_vars };
                for size in 0..=6 {
                    for lambda in partitions_of(size).unwrap() {
                        let closed = family_coeffs(&fam, &lambda).unwrap();
                        if lambda.len() > n_vars {
                            assert_eq!(closed, FamilyValue::DefinedZero);
                            continue;
                        }
                        let r = r_lambda_shifted(&c, &lambda, n_vars as i64).unwrap();
                        let v = fam.vars();
                        assert_eq!(r.to_series(c.grading(), &v).unwrap(), *closed.value().unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn alpha_q_twist_eigenvalue() {
        // Scale(q(1 - α/N)) · H(-1/N) · E(1/(N-α)) on F_λ gives q^{|λ|}(N-α)_λ/(N)_λ
        for alpha in [frac(1, 2), int(-3), frac(7, 3)] {
            for n_vars in 1..=4i64 {
                let nq = int(n_vars);
                let t = TwistSpec::new(
                    vec![
                        TwistAtom::Scale(Param::scaled("q", int(1) - &alpha / &nq)),
                        TwistAtom::H(Param::value(frac(-1, n_vars))),
                        TwistAtom::E(Param::value((&nq - &alpha).recip())),
                    ],
                    &[("q", 8)],
                )
                .unwrap();
                for size in 0..=5 {
                    for lambda in partitions_of(size).unwrap() {
                        if lambda.len() > n_vars as usize {
                            continue;
                        }
                        let eig = twist_eigenvalue(&t, &lambda).unwrap();
                        let expected = pochhammer_partition(&(&nq - &alpha), &lambda) / pochhammer_partition(&nq, &lambda);
                        assert_eq!(eig, TruncSeries::monomial(t.vars(), &[("q", size as u32)], expected));
                    }
                }
            }
        }
    }

    #[test]
    fn multimonotone_single_factor() {
        let fam = Family::multimonotone(6, &[4]);
        let q = TwistSpec::new(vec![TwistAtom::Scale(Param::formal("q"))], &[("q", 6)]).unwrap();
        let reference = q.compose(&TwistSpec::strict(4)).unwrap();
        for lambda in partitions_of(4).unwrap() {
            let a = family_coeffs(&fam, &lambda).unwrap();
            let b = twist_eigenvalue(&reference, &lambda).unwrap();
            assert_eq!(a.value().unwrap().coeff_of(&[("q", 4), ("w1", 2)]), b.coeff_of(&[("q", 4), ("w", 2)]));
        }
        assert_eq!(family_coeffs(&Family::okounkov(4, 2), &p("2,1")).unwrap().value().unwrap().coeff_of(&[("q", 3)]), int(1));
    }
}
