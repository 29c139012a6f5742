//! The center of `C[S_n]` in the class-sum basis `C_μ` and the orthogonal
//! idempotent basis `F_λ`, with the characteristic map to symmetric functions.

use std::collections::BTreeMap;
use std::fmt;

use num::{One, Zero};

use crate::characters::character_table;
use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::scalar::Rational;
use crate::series::TruncSeries;
use crate::symfunc::{Basis, SymFunc};

/// Coefficient ring for center elements: rationals or truncated series.
pub trait Coeff: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn scale(&self, q: &Rational) -> Self;
}

impl Coeff for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, q: &Rational) -> Self {
        self * q
    }
}

impl Coeff for TruncSeries {
    fn zero() -> Self {
        TruncSeries::scalar(<Rational as Zero>::zero())
    }
    fn is_zero(&self) -> bool {
        TruncSeries::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, q: &Rational) -> Self {
        TruncSeries::scale(self, q)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CenterBasis {
    ClassSums,
    Idempotents,
}

/// An element of `Z(C[S_n])` as coordinates in one of the two standard bases.
#[derive(Debug, Clone, PartialEq)]
pub struct CenterElement<C: Coeff = Rational> {
    n: usize,
    basis: CenterBasis,
    coords: BTreeMap<Partition, C>,
}

impl<C: Coeff> CenterElement<C> {
    pub fn zero(n: usize, basis: CenterBasis) -> Self {
        CenterElement { n, basis, coords: BTreeMap::new() }
    }

    pub fn from_coords(
        n: usize,
        basis: CenterBasis,
        coords: impl IntoIterator<Item = (Partition, C)>,
    ) -> Result<Self> {
        let mut out = CenterElement::zero(n, basis);
        for (p, c) in coords {
            if p.size() != n {
                return Err(Error::SizeMismatch(format!("partition {p:?} in the center of S_{n}")));
            }
            out.add(p, c);
        }
        Ok(out)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn basis(&self) -> CenterBasis {
        self.basis
    }

    pub fn coords(&self) -> impl Iterator<Item = (&Partition, &C)> {
        self.coords.iter()
    }

    pub fn coord(&self, p: &Partition) -> C {
        self.coords.get(p).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    fn add(&mut self, p: Partition, c: C) {
        let sum = match self.coords.remove(&p) {
            Some(old) => old.plus(&c),
            None => c,
        };
        if !sum.is_zero() {
            self.coords.insert(p, sum);
        }
    }

    pub fn plus(&self, other: &Self) -> Result<Self> {
        self.check_same_n(other)?;
        let other = other.to_basis(self.basis)?;
        let mut out = self.clone();
        for (p, c) in other.coords {
            out.add(p, c);
        }
        Ok(out)
    }

    pub fn scale(&self, q: &Rational) -> Self {
        let mut out = CenterElement::zero(self.n, self.basis);
        for (p, c) in &self.coords {
            out.add(p.clone(), c.scale(q));
        }
        out
    }

    fn check_same_n(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::SizeMismatch(format!("centers of S_{} and S_{}", self.n, other.n)));
        }
        Ok(())
    }

    /// `C_μ = (1/Z_μ) Σ_λ h_λ χ_λ(μ) F_λ`.
    pub fn class_to_idem(&self) -> Result<Self> {
        if self.basis == CenterBasis::Idempotents {
            return Ok(self.clone());
        }
        let table = character_table(self.n)?;
        let mut out = CenterElement::zero(self.n, CenterBasis::Idempotents);
        for lambda in &table.order {
            let h = lambda.hook_product();
            for (mu, c) in &self.coords {
                out.add(lambda.clone(), c.scale(&(&h * table.value_q(lambda, mu) / mu.z())));
            }
        }
        Ok(out)
    }

    /// `F_λ = (1/h_λ) Σ_μ χ_λ(μ) C_μ`.
    pub fn idem_to_class(&self) -> Result<Self> {
        if self.basis == CenterBasis::ClassSums {
            return Ok(self.clone());
        }
        let table = character_table(self.n)?;
        let mut out = CenterElement::zero(self.n, CenterBasis::ClassSums);
        for mu in &table.order {
            for (lambda, c) in &self.coords {
                out.add(mu.clone(), c.scale(&(table.value_q(lambda, mu) / lambda.hook_product())));
            }
        }
        Ok(out)
    }

    pub fn to_basis(&self, basis: CenterBasis) -> Result<Self> {
        match basis {
            CenterBasis::ClassSums => self.idem_to_class(),
            CenterBasis::Idempotents => self.class_to_idem(),
        }
    }

    /// Product in the center; diagonal in the idempotent basis. The result is
    /// in the basis of `self`.
    pub fn center_multiply(&self, other: &Self) -> Result<Self> {
        self.check_same_n(other)?;
        let a = self.class_to_idem()?;
        let b = other.class_to_idem()?;
        let mut out = CenterElement::zero(self.n, CenterBasis::Idempotents);
        for (lambda, c) in &a.coords {
            if let Some(d) = b.coords.get(lambda) {
                out.add(lambda.clone(), c.times(d));
            }
        }
        out.to_basis(self.basis)
    }

    /// Multiplies `F_λ`'s coordinate by `eigenvalue(λ)`.
    pub fn apply_diagonal(&self, mut eigenvalue: impl FnMut(&Partition) -> Result<C>) -> Result<Self> {
        let a = self.class_to_idem()?;
        let mut out = CenterElement::zero(self.n, CenterBasis::Idempotents);
        for (lambda, c) in &a.coords {
            out.add(lambda.clone(), c.times(&eigenvalue(lambda)?));
        }
        out.to_basis(self.basis)
    }

    /// Coordinates of `ch_n(v)` in the power-sum basis: `C_μ ↦ p_μ/Z_μ`.
    pub fn characteristic_powersum_coords(&self) -> Result<BTreeMap<Partition, C>> {
        let v = self.idem_to_class()?;
        Ok(v.coords.iter().map(|(mu, c)| (mu.clone(), c.scale(&mu.z().recip()))).collect())
    }
}

impl CenterElement<Rational> {
    pub fn unit(n: usize, basis: CenterBasis, p: Partition) -> Result<Self> {
        CenterElement::from_coords(n, basis, [(p, Rational::one())])
    }

    /// The multiplicative identity `C_{1^n} = Σ_λ F_λ`.
    pub fn identity(n: usize) -> Result<Self> {
        CenterElement::unit(n, CenterBasis::ClassSums, Partition::hook_shape(n, 1.min(n)))
    }

    /// Frobenius characteristic map: `C_μ ↦ p_μ/Z_μ`, `F_λ ↦ s_λ/h_λ`.
    pub fn characteristic_map(&self) -> Result<SymFunc> {
        let cap = self.n.max(crate::symfunc::DEFAULT_DEGREE_CAP);
        Ok(match self.basis {
            CenterBasis::ClassSums => SymFunc::from_terms(
                Basis::PowerSum,
                cap,
                self.coords.iter().map(|(mu, c)| (mu.clone(), c / mu.z())),
            ),
            CenterBasis::Idempotents => SymFunc::from_terms(
                Basis::Schur,
                cap,
                self.coords.iter().map(|(l, c)| (l.clone(), c / l.hook_product())),
            ),
        })
    }

    /// Embeds scalar coordinates as constant series.
    pub fn to_series(&self) -> CenterElement<TruncSeries> {
        CenterElement {
            n: self.n,
            basis: self.basis,
            coords: self
                .coords
                .iter()
                .map(|(p, c)| (p.clone(), TruncSeries::scalar(c.clone())))
                .collect(),
        }
    }
}

/// The class sums `C_μ` of `S_n` as unit vectors, in canonical order.
pub fn class_basis(n: usize) -> Result<Vec<CenterElement>> {
    partitions_of(n)?
        .into_iter()
        .map(|mu| CenterElement::unit(n, CenterBasis::ClassSums, mu))
        .collect()
}
