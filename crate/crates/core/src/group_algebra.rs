//! Sparse elements of the group algebra `C[S_n]`, class sums and
//! Jucys–Murphy elements.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Sub};

use num::{One, Zero};

use crate::center::{CenterBasis, CenterElement};
use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::perm::Permutation;
use crate::scalar::{self, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    n: usize,
    terms: BTreeMap<Permutation, Rational>,
}

impl GroupAlgebraElement {
    pub fn zero(n: usize) -> Self {
        GroupAlgebraElement { n, terms: BTreeMap::new() }
    }

    pub fn identity(n: usize) -> Self {
        GroupAlgebraElement::basis(Permutation::identity(n))
    }

    /// `δ_g`.
    pub fn basis(g: Permutation) -> Self {
        let mut out = GroupAlgebraElement::zero(g.degree());
        out.add_term(g, Rational::one());
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, g: &Permutation) -> Rational {
        self.terms.get(g).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn support_size(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, g: Permutation, c: Rational) {
        assert_eq!(g.degree(), self.n);
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&g) {
            Some(old) => old + c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(g, sum);
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = GroupAlgebraElement::zero(self.n);
        for (g, v) in &self.terms {
            out.add_term(g.clone(), v * c);
        }
        out
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::SizeMismatch(format!("C[S_{}] and C[S_{}]", self.n, other.n)));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (g, v) in &other.terms {
            out.add_term(g.clone(), v.clone());
        }
        Ok(out)
    }

    /// Convolution product, `δ_g · δ_h = δ_{g∘h}`.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut acc: BTreeMap<Permutation, Rational> = BTreeMap::new();
        for (g, a) in &self.terms {
            for (h, b) in &other.terms {
                *acc.entry(g.compose(h)).or_insert_with(Rational::zero) += a * b;
            }
        }
        acc.retain(|_, v| !v.is_zero());
        Ok(GroupAlgebraElement { n: self.n, terms: acc })
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(GroupAlgebraElement::identity(self.n), |acc, _| &acc * self)
    }

    pub fn commutes_with(&self, other: &Self) -> Result<bool> {
        Ok(self.multiply(other)? == other.multiply(self)?)
    }

    /// Reads off class-sum coordinates of a central element.
    ///
    /// Fails with a witness pair of conjugate permutations whose
    /// coefficients differ.
    pub fn project_to_classes(&self) -> Result<CenterElement> {
        let mut first_seen: BTreeMap<Partition, (Permutation, Rational)> = BTreeMap::new();
        for g in Permutation::all(self.n) {
            let c = self.coeff(&g);
            let ty = g.cycle_type();
            match first_seen.get(&ty) {
                None => {
                    first_seen.insert(ty, (g, c));
                }
                Some((h, d)) if *d != c => {
                    return Err(Error::NonCentral {
                        first: h.to_string(),
                        first_coeff: scalar::format(d),
                        second: g.to_string(),
                        second_coeff: scalar::format(&c),
                    });
                }
                Some(_) => {}
            }
        }
        CenterElement::from_coords(
            self.n,
            CenterBasis::ClassSums,
            first_seen.into_iter().map(|(ty, (_, c))| (ty, c)),
        )
    }

    /// Expands class-sum coordinates back into `C[S_n]`.
    pub fn from_center(v: &CenterElement) -> Result<Self> {
        let v = v.idem_to_class()?;
        let mut out = GroupAlgebraElement::zero(v.n());
        for g in Permutation::all(v.n()) {
            out.add_term(g.clone(), v.coord(&g.cycle_type()));
        }
        Ok(out)
    }
}

impl Add for &GroupAlgebraElement {
    type Output = GroupAlgebraElement;
    fn add(self, rhs: &GroupAlgebraElement) -> GroupAlgebraElement {
        self.try_add(rhs).expect("same symmetric group")
    }
}

impl Sub for &GroupAlgebraElement {
    type Output = GroupAlgebraElement;
    fn sub(self, rhs: &GroupAlgebraElement) -> GroupAlgebraElement {
        self + &rhs.scale(&-Rational::one())
    }
}

impl Mul for &GroupAlgebraElement {
    type Output = GroupAlgebraElement;
    fn mul(self, rhs: &GroupAlgebraElement) -> GroupAlgebraElement {
        self.multiply(rhs).expect("same symmetric group")
    }
}

/// `C_μ`: the sum of all permutations of cycle type `μ`.
pub fn class_sum(n: usize, mu: &Partition) -> Result<GroupAlgebraElement> {
    if mu.size() != n {
        return Err(Error::SizeMismatch(format!("class {mu:?} in S_{n}")));
    }
    let mut out = GroupAlgebraElement::zero(n);
    for g in Permutation::all(n) {
        if g.cycle_type() == *mu {
            out.add_term(g, Rational::one());
        }
    }
    Ok(out)
}

/// `J_b = Σ_{a<b} (a b)`; `J_1 = 0`.
pub fn jm_element(n: usize, b: usize) -> Result<GroupAlgebraElement> {
    if b == 0 || b > n {
        return Err(Error::OutOfRange(format!("Jucys–Murphy index {b} outside 1..{n}")));
    }
    let mut out = GroupAlgebraElement::zero(n);
    for a in 1..b {
        out.add_term(Permutation::transposition(n, a, b)?, Rational::one());
    }
    Ok(out)
}

/// `P_i(J) = Σ_b J_b^i`, with `P_0(J) = n·Id`.
pub fn jm_power_sum(n: usize, i: u32) -> Result<GroupAlgebraElement> {
    if i == 0 {
        return Ok(GroupAlgebraElement::identity(n).scale(&scalar::int(n as i64)));
    }
    let mut out = GroupAlgebraElement::zero(n);
    for b in 2..=n {
        out = &out + &jm_element(n, b)?.pow(i);
    }
    Ok(out)
}

/// All class sums of `S_n` in canonical order.
pub fn class_sums(n: usize) -> Result<Vec<(Partition, GroupAlgebraElement)>> {
    partitions_of(n)?
        .into_iter()
        .map(|mu| class_sum(n, &mu).map(|c| (mu, c)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn ones(n: usize) -> Partition {
        Partition::hook_shape(n, 1.min(n))
    }

    #[test]
    fn basis_products() {
        for g in Permutation::all(4) {
            let prod = &GroupAlgebraElement::basis(g.clone()) * &GroupAlgebraElement::basis(g.inverse());
            assert_eq!(prod, GroupAlgebraElement::identity(4));
        }
        let t12 = GroupAlgebraElement::basis(Permutation::transposition(3, 1, 2).unwrap());
        let t23 = GroupAlgebraElement::basis(Permutation::transposition(3, 2, 3).unwrap());
        let prod = &t12 * &t23;
        assert_eq!(prod.terms().next().unwrap().0.to_string(), "(1 2 3)");
        assert!(GroupAlgebraElement::identity(3).multiply(&GroupAlgebraElement::identity(4)).is_err());
    }

    #[test]
    fn transposition_class_squared_in_s3() {
        // exhaustive: 9 ordered pairs, 3 give the identity and 6 give 3-cycles
        let c2 = class_sum(3, &p("2,1")).unwrap();
        let sq = &c2 * &c2;
        let expected = &GroupAlgebraElement::identity(3).scale(&int(3)) + &class_sum(3, &p("3")).unwrap().scale(&int(3));
        assert_eq!(sq, expected);
    }

    #[test]
    fn class_sum_sizes() {
        assert_eq!(class_sum(3, &p("1,1,1")).unwrap(), GroupAlgebraElement::identity(3));
        assert_eq!(class_sum(3, &p("2,1")).unwrap().support_size(), 3);
        assert_eq!(class_sum(4, &p("3,1")).unwrap().support_size(), 8);
        for n in 1..=6 {
            for mu in partitions_of(n).unwrap() {
                let size = scalar::factorial(n) / mu.z();
                assert_eq!(int(class_sum(n, &mu).unwrap().support_size() as i64), size);
            }
        }
        assert!(class_sum(3, &p("2")).is_err());
    }

    #[test]
    fn jucys_murphy_elements() {
        let j3 = jm_element(3, 3).unwrap();
        let expected = &GroupAlgebraElement::basis(Permutation::transposition(3, 1, 3).unwrap())
            + &GroupAlgebraElement::basis(Permutation::transposition(3, 2, 3).unwrap());
        assert_eq!(j3, expected);
        assert!(jm_element(4, 1).unwrap().is_zero());
        assert!(jm_element(4, 5).is_err());
        assert_eq!(jm_power_sum(4, 0).unwrap(), GroupAlgebraElement::identity(4).scale(&int(4)));
        // J's commute pairwise
        for a in 1..=4 {
            for b in 1..=4 {
                assert!(jm_element(4, a).unwrap().commutes_with(&jm_element(4, b).unwrap()).unwrap());
            }
        }
    }

    #[test]
    fn projection() {
        let id = GroupAlgebraElement::identity(4).project_to_classes().unwrap();
        assert_eq!(id, CenterElement::unit(4, CenterBasis::ClassSums, ones(4)).unwrap());
        let p1 = jm_power_sum(4, 1).unwrap().project_to_classes().unwrap();
        assert_eq!(p1, CenterElement::unit(4, CenterBasis::ClassSums, p("2,1,1")).unwrap());
        match jm_element(3, 3).unwrap().project_to_classes() {
            Err(Error::NonCentral { first_coeff, second_coeff, .. }) => assert_ne!(first_coeff, second_coeff),
            other => panic!("expected a centrality error, got {other:?}"),
        }
    }

    #[test]
    fn power_sums_are_central() {
        for n in 2..=6 {
            let c2 = class_sum(n, &Partition::hook_shape(n, 2)).unwrap();
            for i in 0..=4 {
                assert!(jm_power_sum(n, i).unwrap().commutes_with(&c2).unwrap(), "n={n} i={i}");
            }
        }
    }

    #[test]
    fn from_center_round_trip() {
        let v = CenterElement::from_coords(4, CenterBasis::ClassSums, [(p("3,1"), int(2)), (p("2,2"), int(-1))]).unwrap();
        let g = GroupAlgebraElement::from_center(&v).unwrap();
        assert_eq!(g.project_to_classes().unwrap(), v);
    }

    #[test]
    fn universal_class_expressions() {
        for n in 4..=6 {
            let id = GroupAlgebraElement::identity(n);
            let p0p0m1 = id.scale(&int((n * (n - 1)) as i64));
            let half = scalar::frac(1, 2);
            let p1 = jm_power_sum(n, 1).unwrap();
            let p2 = jm_power_sum(n, 2).unwrap();
            let c2 = class_sum(n, &Partition::hook_shape(n, 2)).unwrap();
            let c3 = class_sum(n, &Partition::hook_shape(n, 3)).unwrap();
            let mut parts = vec![2, 2];
            parts.extend(std::iter::repeat_n(1, n - 4));
            let c22 = class_sum(n, &Partition::new(parts).unwrap()).unwrap();
            assert_eq!(p1, c2);
            assert_eq!(&p2 - &p0p0m1.scale(&half), c3);
            let lhs = &(&(&p1 * &p1).scale(&half) - &p2.scale(&scalar::frac(3, 2))) + &p0p0m1.scale(&half);
            assert_eq!(lhs, c22);
            let rhs = &(&c3.scale(&int(3)) + &c22.scale(&int(2))) + &id.scale(&scalar::binomial(n, 2));
            assert_eq!(&c2 * &c2, rhs);
        }
    }
}
