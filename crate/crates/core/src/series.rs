//! Multivariate truncated formal power series with exact rational coefficients.
//!
//! Each series carries a set of named parameters, each with its own degree
//! cap; products drop every monomial that exceeds a cap. A series over the
//! empty parameter set is a plain scalar and combines with any other series.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::Arc;

use num::{One, Zero};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::{self, Rational};

/// Named formal parameters with per-parameter degree caps.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Vars {
    names: Vec<String>,
    caps: Vec<u32>,
}

impl Vars {
    pub fn new(spec: &[(&str, u32)]) -> Arc<Vars> {
        let names: Vec<String> = spec.iter().map(|(n, _)| n.to_string()).collect();
        for (i, n) in names.iter().enumerate() {
            assert!(!names[..i].contains(n), "duplicate series parameter {n}");
        }
        Arc::new(Vars { names, caps: spec.iter().map(|&(_, c)| c).collect() })
    }

    pub fn empty() -> Arc<Vars> {
        Arc::new(Vars::default())
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn caps(&self) -> &[u32] {
        &self.caps
    }

    pub fn position(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn cap(&self, name: &str) -> Option<u32> {
        self.position(name).map(|i| self.caps[i])
    }

    fn within_caps(&self, exps: &[u32]) -> bool {
        exps.iter().zip(&self.caps).all(|(e, c)| e <= c)
    }

    fn describe(&self) -> String {
        let parts: Vec<String> =
            self.names.iter().zip(&self.caps).map(|(n, c)| format!("{n}≤{c}")).collect();
        format!("[{}]", parts.join(","))
    }
}

#[derive(Clone)]
pub struct TruncSeries {
    vars: Arc<Vars>,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl TruncSeries {
    pub fn zero(vars: &Arc<Vars>) -> Self {
        TruncSeries { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(vars: &Arc<Vars>, c: Rational) -> Self {
        let mut s = TruncSeries::zero(vars);
        s.add_term(vec![0; vars.len()], c);
        s
    }

    pub fn one(vars: &Arc<Vars>) -> Self {
        TruncSeries::constant(vars, Rational::one())
    }

    /// A scalar, i.e. a series over no parameters.
    pub fn scalar(c: Rational) -> Self {
        TruncSeries::constant(&Vars::empty(), c)
    }

    /// `coeff · Π name^exp`; silently zero if a cap is exceeded.
    pub fn monomial(vars: &Arc<Vars>, powers: &[(&str, u32)], coeff: Rational) -> Self {
        let mut exps = vec![0; vars.len()];
        for &(name, e) in powers {
            let i = vars
                .position(name)
                .unwrap_or_else(|| panic!("unknown series parameter {name} in {}", vars.describe()));
            exps[i] += e;
        }
        let mut s = TruncSeries::zero(vars);
        s.add_term(exps, coeff);
        s
    }

    pub fn var(vars: &Arc<Vars>, name: &str) -> Self {
        TruncSeries::monomial(vars, &[(name, 1)], Rational::one())
    }

    pub fn vars(&self) -> &Arc<Vars> {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Rational)> {
        self.terms.iter().map(|(k, v)| (k.as_slice(), v))
    }

    pub fn coeff(&self, exps: &[u32]) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    /// Coefficient of `Π name^exp`, unnamed parameters at exponent 0.
    pub fn coeff_of(&self, powers: &[(&str, u32)]) -> Rational {
        let mut exps = vec![0; self.vars.len()];
        for &(name, e) in powers {
            match self.vars.position(name) {
                Some(i) => exps[i] = e,
                None if e == 0 => {}
                None => return Rational::zero(),
            }
        }
        self.coeff(&exps)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&vec![0; self.vars.len()])
    }

    /// Only a constant term (possibly zero).
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|k| k.iter().all(|&e| e == 0))
    }

    fn add_term(&mut self, exps: Vec<u32>, c: Rational) {
        if c.is_zero() || !self.vars.within_caps(&exps) {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return TruncSeries::zero(&self.vars);
        }
        TruncSeries {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    /// Re-expresses the series over a parameter set containing its own.
    pub fn embed(&self, target: &Arc<Vars>) -> Result<Self> {
        if Arc::ptr_eq(&self.vars, target) || *self.vars == **target {
            return Ok(TruncSeries { vars: target.clone(), terms: self.terms.clone() });
        }
        let map: Vec<usize> = self
            .vars
            .names
            .iter()
            .map(|n| target.position(n))
            .collect::<Option<_>>()
            .ok_or_else(|| Error::IncompatibleVars(self.vars.describe(), target.describe()))?;
        let mut out = TruncSeries::zero(target);
        for (k, v) in &self.terms {
            let mut exps = vec![0; target.len()];
            for (i, &e) in k.iter().enumerate() {
                exps[map[i]] = e;
            }
            out.add_term(exps, v.clone());
        }
        Ok(out)
    }

    fn aligned<'a>(&'a self, other: &'a Self) -> (Arc<Vars>, std::borrow::Cow<'a, Self>, std::borrow::Cow<'a, Self>) {
        use std::borrow::Cow;
        if Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars {
            (self.vars.clone(), Cow::Borrowed(self), Cow::Borrowed(other))
        } else if self.vars.is_empty() {
            let v = other.vars.clone();
            (v.clone(), Cow::Owned(self.embed(&v).unwrap()), Cow::Borrowed(other))
        } else if other.vars.is_empty() {
            let v = self.vars.clone();
            (v.clone(), Cow::Borrowed(self), Cow::Owned(other.embed(&v).unwrap()))
        } else {
            panic!(
                "{}",
                Error::IncompatibleVars(self.vars.describe(), other.vars.describe())
            )
        }
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if !(self.vars == other.vars || self.vars.is_empty() || other.vars.is_empty()) {
            return Err(Error::IncompatibleVars(self.vars.describe(), other.vars.describe()));
        }
        Ok(self * other)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = TruncSeries::one(&self.vars);
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Highest total degree any nonzero term can reach.
    fn total_cap(&self) -> u32 {
        self.vars.caps.iter().sum()
    }

    /// Multiplicative inverse; needs a nonzero constant term.
    pub fn inverse(&self) -> Result<Self> {
        let c = self.constant_term();
        if c.is_zero() {
            return Err(Error::NonUnitConstant);
        }
        let c_inv = c.recip();
        // 1/(c(1+g)) = c⁻¹ Σ (-g)^k, g nilpotent in the truncated ring
        let minus_g = (self.scale(&c_inv) - TruncSeries::one(&self.vars)).neg();
        let mut acc = TruncSeries::one(&self.vars);
        let mut power = TruncSeries::one(&self.vars);
        for _ in 0..self.total_cap() {
            power = &power * &minus_g;
            if power.is_zero() {
                break;
            }
            acc += &power;
        }
        Ok(acc.scale(&c_inv))
    }

    /// `exp(f)` for `f` with zero constant term.
    pub fn exp(&self) -> Result<Self> {
        if !self.constant_term().is_zero() {
            return Err(Error::NonUnitConstant);
        }
        let mut acc = TruncSeries::one(&self.vars);
        let mut term = TruncSeries::one(&self.vars);
        for k in 1..=self.total_cap() as i64 {
            term = (&term * self).scale(&scalar::frac(1, k));
            if term.is_zero() {
                break;
            }
            acc += &term;
        }
        Ok(acc)
    }

    /// `ln(f)` for `f` with constant term 1.
    pub fn ln(&self) -> Result<Self> {
        if !self.constant_term().is_one() {
            return Err(Error::NonUnitConstant);
        }
        let g = self - &TruncSeries::one(&self.vars);
        let mut acc = TruncSeries::zero(&self.vars);
        let mut power = TruncSeries::one(&self.vars);
        for k in 1..=self.total_cap() as i64 {
            power = &power * &g;
            if power.is_zero() {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            acc += &power.scale(&scalar::frac(sign, k));
        }
        Ok(acc)
    }

    /// Substitutes a numeric value for one parameter, removing it.
    pub fn specialize(&self, name: &str, value: &Rational) -> Self {
        let Some(pos) = self.vars.position(name) else {
            return self.clone();
        };
        let spec: Vec<(&str, u32)> = self
            .vars
            .names
            .iter()
            .zip(&self.vars.caps)
            .enumerate()
            .filter(|&(i, _)| i != pos)
            .map(|(_, (n, &c))| (n.as_str(), c))
            .collect();
        let vars = Vars::new(&spec);
        let mut out = TruncSeries::zero(&vars);
        for (k, v) in &self.terms {
            let mut exps = k.clone();
            let e = exps.remove(pos);
            out.add_term(exps, v * scalar::pow(value, e as i64));
        }
        out
    }

    /// Monomial key such as `"z^3"` or `"q^2*b^1"`; `"1"` for the constant.
    pub fn monomial_key(&self, exps: &[u32]) -> String {
        let parts: Vec<String> = self
            .vars
            .names
            .iter()
            .zip(exps)
            .filter(|&(_, &e)| e > 0)
            .map(|(n, e)| format!("{n}^{e}"))
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

impl PartialEq for TruncSeries {
    fn eq(&self, other: &Self) -> bool {
        if self.vars == other.vars {
            return self.terms == other.terms;
        }
        if self.vars.is_empty() || other.vars.is_empty() {
            return self.is_constant()
                && other.is_constant()
                && self.constant_term() == other.constant_term();
        }
        false
    }
}

impl Eq for TruncSeries {}

impl fmt::Debug for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, v)| format!("({v})*{}", self.monomial_key(k)))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl Serialize for TruncSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        // ordered by total degree, then exponent vector
        let mut keys: Vec<&Vec<u32>> = self.terms.keys().collect();
        keys.sort_by_key(|k| (k.iter().sum::<u32>(), k.iter().rev().cloned().collect::<Vec<_>>()));
        let mut map = serializer.serialize_map(Some(keys.len()))?;
        for k in keys {
            map.serialize_entry(&self.monomial_key(k), &scalar::format(&self.terms[k]))?;
        }
        map.end()
    }
}

impl Add<&TruncSeries> for &TruncSeries {
    type Output = TruncSeries;
    fn add(self, rhs: &TruncSeries) -> TruncSeries {
        let (_, a, b) = self.aligned(rhs);
        let mut out = a.into_owned();
        for (k, v) in &b.terms {
            out.add_term(k.clone(), v.clone());
        }
        out
    }
}

impl Sub<&TruncSeries> for &TruncSeries {
    type Output = TruncSeries;
    fn sub(self, rhs: &TruncSeries) -> TruncSeries {
        self + &(-rhs)
    }
}

impl Neg for &TruncSeries {
    type Output = TruncSeries;
    fn neg(self) -> TruncSeries {
        TruncSeries {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(k, v)| (k.clone(), -v)).collect(),
        }
    }
}

impl Mul<&TruncSeries> for &TruncSeries {
    type Output = TruncSeries;
    fn mul(self, rhs: &TruncSeries) -> TruncSeries {
        let (vars, a, b) = self.aligned(rhs);
        let mut out = TruncSeries::zero(&vars);
        for (ka, va) in &a.terms {
            for (kb, vb) in &b.terms {
                let exps: Vec<u32> = ka.iter().zip(kb).map(|(x, y)| x + y).collect();
                if vars.within_caps(&exps) {
                    out.add_term(exps, va * vb);
                }
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<TruncSeries> for TruncSeries {
            type Output = TruncSeries;
            fn $m(self, rhs: TruncSeries) -> TruncSeries {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&TruncSeries> for TruncSeries {
            type Output = TruncSeries;
            fn $m(self, rhs: &TruncSeries) -> TruncSeries {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for TruncSeries {
    type Output = TruncSeries;
    fn neg(self) -> TruncSeries {
        -&self
    }
}

impl AddAssign<&TruncSeries> for TruncSeries {
    fn add_assign(&mut self, rhs: &TruncSeries) {
        if self.vars == rhs.vars {
            for (k, v) in &rhs.terms {
                self.add_term(k.clone(), v.clone());
            }
        } else {
            *self = &*self + rhs;
        }
    }
}

impl SubAssign<&TruncSeries> for TruncSeries {
    fn sub_assign(&mut self, rhs: &TruncSeries) {
        *self += &(-rhs);
    }
}

impl std::iter::Sum for TruncSeries {
    fn sum<I: Iterator<Item = TruncSeries>>(iter: I) -> TruncSeries {
        iter.fold(TruncSeries::scalar(Rational::zero()), |acc, x| acc + x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};

    #[test]
    fn geometric_inverse() {
        let v = Vars::new(&[("z", 6)]);
        let one_minus_2z = TruncSeries::one(&v) - TruncSeries::var(&v, "z").scale(&int(2));
        let inv = one_minus_2z.inverse().unwrap();
        for k in 0..=6 {
            assert_eq!(inv.coeff(&[k]), int(1 << k));
        }
        assert_eq!(&inv * &one_minus_2z, TruncSeries::one(&v));
        assert!(TruncSeries::var(&v, "z").inverse().is_err());
    }

    #[test]
    fn exp_and_ln() {
        let v = Vars::new(&[("b", 5)]);
        let b = TruncSeries::var(&v, "b");
        let e = b.scale(&int(3)).exp().unwrap();
        for k in 0..=5u32 {
            assert_eq!(e.coeff(&[k]), scalar::pow(&int(3), k as i64) / scalar::factorial(k as usize));
        }
        assert_eq!(e.ln().unwrap(), b.scale(&int(3)));
        assert!(TruncSeries::one(&v).exp().is_err());
    }

    #[test]
    fn truncation_and_broadcast() {
        let v = Vars::new(&[("x", 2), ("y", 1)]);
        let x = TruncSeries::var(&v, "x");
        let y = TruncSeries::var(&v, "y");
        let p = (&x + &y).pow(3);
        // (x+y)^3 keeps only x^2 y
        assert_eq!(p.len(), 1);
        assert_eq!(p.coeff_of(&[("x", 2), ("y", 1)]), int(3));
        let s = TruncSeries::scalar(frac(1, 2));
        assert_eq!((&x * &s).coeff_of(&[("x", 1)]), frac(1, 2));
        assert_eq!(TruncSeries::constant(&v, int(4)), TruncSeries::scalar(int(4)));
    }

    #[test]
    fn specialize_and_embed() {
        let v = Vars::new(&[("q", 3), ("z", 3)]);
        let f = TruncSeries::monomial(&v, &[("q", 2), ("z", 1)], int(5));
        let g = f.specialize("q", &int(2));
        assert_eq!(g.coeff_of(&[("z", 1)]), int(20));
        let w = Vars::new(&[("z", 3)]);
        let h = TruncSeries::var(&w, "z").embed(&v).unwrap();
        assert_eq!(h.coeff_of(&[("z", 1)]), int(1));
        assert!(f.embed(&w).is_err());
    }

    #[test]
    fn json_keys() {
        let v = Vars::new(&[("z", 4)]);
        let f = TruncSeries::one(&v) + TruncSeries::monomial(&v, &[("z", 3)], int(12));
        assert_eq!(serde_json::to_string(&f).unwrap(), r#"{"1":"1","z^3":"12"}"#);
    }
}
