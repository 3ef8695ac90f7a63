//! Subspaces of polynomials of bounded degree.

use super::linalg::{SparseVec, SpanBasis};
use super::monomial::{count_monomials, monomials_of_degree, Monomial};
use super::poly::{Polynomial, Side};
use super::scalar::Scalar;
use crate::error::{Error, Result};
use std::collections::HashMap;
use std::ops::Range;
use std::sync::Arc;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ColumnOrder {
    /// Highest degree first; a row's pivot is its leading monomial.
    TopDegreeFirst,
    /// Lowest degree first; degree truncations are column prefixes.
    LowDegreeFirst,
}

/// Column indexing of the monomials of degree at most `max_degree`.
#[derive(Debug)]
pub struct MonomialBasis {
    nvars: usize,
    max_degree: u32,
    order: ColumnOrder,
    monos: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    ranges: Vec<Range<usize>>,
}

impl MonomialBasis {
    pub fn new(nvars: usize, max_degree: u32, order: ColumnOrder) -> Arc<Self> {
        let degrees: Vec<u32> = match order {
            ColumnOrder::TopDegreeFirst => (0..=max_degree).rev().collect(),
            ColumnOrder::LowDegreeFirst => (0..=max_degree).collect(),
        };
        let total: usize = (0..=max_degree).map(|d| count_monomials(nvars, d)).sum();
        let mut monos = Vec::with_capacity(total);
        let mut ranges = vec![0..0; max_degree as usize + 1];
        for d in degrees {
            let st = monos.len();
            monos.extend(monomials_of_degree(nvars, d));
            ranges[d as usize] = st..monos.len();
        }
        let index = monos.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        Arc::new(MonomialBasis { nvars, max_degree, order, monos, index, ranges })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    pub fn order(&self) -> ColumnOrder {
        self.order
    }

    pub fn len(&self) -> usize {
        self.monos.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monos.is_empty()
    }

    pub fn monomial(&self, col: usize) -> &Monomial {
        &self.monos[col]
    }

    pub fn column(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn degree_of_column(&self, col: usize) -> u32 {
        self.monos[col].degree()
    }

    pub fn degree_range(&self, d: u32) -> Range<usize> {
        self.ranges.get(d as usize).cloned().unwrap_or(0..0)
    }

    /// Coordinates of `p`; fails if a term is beyond `max_degree`.
    pub fn to_sparse(&self, p: &Polynomial) -> Result<SparseVec> {
        if p.nvars() != self.nvars {
            return Err(Error::VarCountMismatch { left: p.nvars(), right: self.nvars });
        }
        let mut v = Vec::with_capacity(p.num_terms());
        for (m, c) in p.terms() {
            let col = self.column(m).ok_or(Error::DegreeBound { degree: m.degree(), bound: self.max_degree })?;
            v.push((col, c.clone()));
        }
        v.sort_by_key(|e| e.0);
        Ok(v)
    }

    /// Coordinates of `p` truncated to `max_degree`.
    pub fn to_sparse_truncated(&self, p: &Polynomial) -> SparseVec {
        let mut v: SparseVec = p.terms().filter_map(|(m, c)| self.column(m).map(|col| (col, c.clone()))).collect();
        v.sort_by_key(|e| e.0);
        v
    }

    pub fn to_poly(&self, v: &SparseVec, side: Side) -> Polynomial {
        Polynomial::from_terms(self.nvars, side, v.iter().map(|(c, x)| (self.monos[*c].clone(), x.clone())))
    }
}

/// A subspace of `K[vars]_{<= max_degree}` on a fixed side.
#[derive(Clone, Debug)]
pub struct PolySpan {
    basis: Arc<MonomialBasis>,
    side: Side,
    span: SpanBasis,
}

impl PolySpan {
    pub fn new(basis: Arc<MonomialBasis>, side: Side) -> Self {
        let n = basis.len();
        PolySpan { basis, side, span: SpanBasis::new(n) }
    }

    pub fn from_polys<'a>(basis: Arc<MonomialBasis>, side: Side, polys: impl IntoIterator<Item = &'a Polynomial>) -> Result<Self> {
        let mut s = Self::new(basis, side);
        for p in polys {
            s.insert(p)?;
        }
        Ok(s)
    }

    pub fn from_span(basis: Arc<MonomialBasis>, side: Side, span: SpanBasis) -> Self {
        assert_eq!(basis.len(), span.ncols());
        PolySpan { basis, side, span }
    }

    /// All monomials of degree `d`.
    pub fn monomial_slice(basis: Arc<MonomialBasis>, side: Side, d: u32) -> Self {
        let mut s = Self::new(basis.clone(), side);
        for c in basis.degree_range(d) {
            s.span.insert(vec![(c, Scalar::from_integer(1.into()))]);
        }
        s
    }

    pub fn basis(&self) -> &Arc<MonomialBasis> {
        &self.basis
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn span(&self) -> &SpanBasis {
        &self.span
    }

    pub fn span_mut(&mut self) -> &mut SpanBasis {
        &mut self.span
    }

    pub fn dim(&self) -> usize {
        self.span.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.span.is_zero()
    }

    pub fn insert(&mut self, p: &Polynomial) -> Result<bool> {
        let v = self.basis.to_sparse(p)?;
        Ok(self.span.insert(v))
    }

    pub fn insert_sparse(&mut self, v: SparseVec) -> bool {
        self.span.insert(v)
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        match self.basis.to_sparse(p) {
            Ok(v) => self.span.contains(&v),
            Err(_) => false,
        }
    }

    /// Remainder of `p` modulo the span.
    pub fn reduce(&self, p: &Polynomial) -> Result<Polynomial> {
        let v = self.basis.to_sparse(p)?;
        Ok(self.basis.to_poly(&self.span.reduce(&v), p.side()))
    }

    pub fn polys(&self) -> Vec<Polynomial> {
        self.span.rows().map(|r| self.basis.to_poly(r, self.side)).collect()
    }

    /// Basis rows whose pivot monomial has degree `d`.
    pub fn rows_with_pivot_degree(&self, d: u32) -> Vec<Polynomial> {
        let r = self.basis.degree_range(d);
        self.span
            .pivots()
            .filter(|p| r.contains(p))
            .map(|p| self.basis.to_poly(self.span.row_with_pivot(p).unwrap(), self.side))
            .collect()
    }

    pub fn pivot_count_in_degree(&self, d: u32) -> usize {
        let r = self.basis.degree_range(d);
        self.span.pivots().filter(|p| r.contains(p)).count()
    }

    /// Orthogonal complement under the coefficient pairing, on the other side.
    pub fn complement(&self) -> PolySpan {
        let side = match self.side {
            Side::Ring => Side::Dual,
            Side::Dual => Side::Ring,
        };
        PolySpan { basis: self.basis.clone(), side, span: self.span.complement() }
    }

    pub fn intersect(&self, other: &PolySpan) -> PolySpan {
        assert!(Arc::ptr_eq(&self.basis, &other.basis) || self.basis.len() == other.basis.len());
        PolySpan { basis: self.basis.clone(), side: self.side, span: self.span.intersect(&other.span) }
    }

    pub fn sum(&self, other: &PolySpan) -> PolySpan {
        PolySpan { basis: self.basis.clone(), side: self.side, span: self.span.sum(&other.span) }
    }

    pub fn is_subspace_of(&self, other: &PolySpan) -> bool {
        self.span.is_subspace_of(&other.span)
    }

    pub fn same_span(&self, other: &PolySpan) -> bool {
        self.span.same_span(&other.span)
    }

    /// The same subspace indexed by another basis (which must cover all
    /// degrees present).
    pub fn reindex(&self, basis: Arc<MonomialBasis>) -> Result<PolySpan> {
        let mut s = PolySpan::new(basis, self.side);
        for p in self.polys() {
            s.insert(&p)?;
        }
        Ok(s)
    }

    /// Image under truncation to degree `d`, in a new basis.
    pub fn project(&self, basis: Arc<MonomialBasis>) -> PolySpan {
        let mut s = PolySpan::new(basis.clone(), self.side);
        for r in self.span.rows() {
            let p = self.basis.to_poly(r, self.side);
            s.span.insert(basis.to_sparse_truncated(&p));
        }
        s
    }
}
