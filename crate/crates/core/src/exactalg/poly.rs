//! Sparse polynomials on either side of the pairing.
//!
//! Ring elements act; dual elements are acted upon. Multiplication of two
//! dual polynomials is the formal one (exponents add).

use super::monomial::Monomial;
use super::scalar::{self, Scalar};
use crate::error::{Error, Result};
use num_traits::{One, Zero};
use std::collections::BTreeMap;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Side {
    Ring,
    Dual,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial {
    nvars: usize,
    side: Side,
    terms: BTreeMap<Monomial, Scalar>,
}

pub type DualPolynomial = Polynomial;

impl Polynomial {
    pub fn zero(nvars: usize, side: Side) -> Self {
        Polynomial { nvars, side, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, side: Side, c: Scalar) -> Self {
        Self::term(Monomial::one(nvars), c, side)
    }

    pub fn term(m: Monomial, c: Scalar, side: Side) -> Self {
        let mut p = Self::zero(m.nvars(), side);
        p.add_term(m, c);
        p
    }

    pub fn var(nvars: usize, i: usize, side: Side) -> Self {
        Self::term(Monomial::var(nvars, i), scalar::one(), side)
    }

    pub fn from_terms(nvars: usize, side: Side, terms: impl IntoIterator<Item = (Monomial, Scalar)>) -> Self {
        let mut p = Self::zero(nvars, side);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// Linear form `sum c_i x_i`.
    pub fn linear(coeffs: &[Scalar], side: Side) -> Self {
        let n = coeffs.len();
        Self::from_terms(n, side, coeffs.iter().enumerate().map(|(i, c)| (Monomial::var(n, i), c.clone())))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn with_side(mut self, side: Side) -> Self {
        self.side = side;
        self
    }

    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        debug_assert_eq!(m.nvars(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Terms in ascending order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Scalar)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(|m| m.degree())
    }

    /// Least degree of a term.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().next().map(|m| m.degree())
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degree() == self.order()
    }

    pub fn leading(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.iter().next_back()
    }

    pub fn homogeneous_part(&self, k: u32) -> Self {
        Self::from_terms(
            self.nvars,
            self.side,
            self.terms.iter().filter(|(m, _)| m.degree() == k).map(|(m, c)| (m.clone(), c.clone())),
        )
    }

    /// Top-degree form.
    pub fn top_form(&self) -> Self {
        match self.degree() {
            Some(k) => self.homogeneous_part(k),
            None => self.clone(),
        }
    }

    /// Drops terms of degree above `max`.
    pub fn truncate(&self, max: u32) -> Self {
        Self::from_terms(
            self.nvars,
            self.side,
            self.terms.iter().filter(|(m, _)| m.degree() <= max).map(|(m, c)| (m.clone(), c.clone())),
        )
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars, self.side);
        }
        Polynomial {
            nvars: self.nvars,
            side: self.side,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Polynomial {
            nvars: self.nvars,
            side: self.side,
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), a.clone())).collect(),
        }
    }

    pub fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::VarCountMismatch { left: self.nvars, right: other.nvars });
        }
        if self.side != other.side {
            return Err(Error::SideMismatch);
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut r = self.clone();
        for (m, c) in &other.terms {
            r.add_term(m.clone(), c.clone());
        }
        Ok(r)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut r = self.clone();
        for (m, c) in &other.terms {
            r.add_term(m.clone(), -c.clone());
        }
        Ok(r)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut r = Self::zero(self.nvars, self.side);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                r.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(r)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut r = Self::constant(self.nvars, self.side, Scalar::one());
        for _ in 0..e {
            r = &r * self;
        }
        r
    }

    pub fn is_linear_form(&self) -> bool {
        !self.is_zero() && self.terms.keys().all(|m| m.degree() == 1)
    }

    /// Coefficient vector of a linear form.
    pub fn linear_coeffs(&self) -> Vec<Scalar> {
        (0..self.nvars).map(|i| self.coeff(&Monomial::var(self.nvars, i))).collect()
    }
}

impl std::ops::Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("incompatible polynomials")
    }
}

impl std::ops::Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("incompatible polynomials")
    }
}

impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("incompatible polynomials")
    }
}

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Scalar::one())
    }
}
